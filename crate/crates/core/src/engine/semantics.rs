use alloc::vec::Vec;

use super::{EngineError, Situation};
use crate::domain::{eval_formula, Datum, Domain, DomainError, EvalContext};
use crate::model::{ActionTerm, Program};
use crate::temporal::ltp;

/// `Poss(a, s)`. A `waitFor` is possible iff its condition has a least time
/// point; other actions consult the domain's precondition.
pub fn poss(a: &ActionTerm, s: &Situation, d: &Domain) -> Result<bool, EngineError> {
    match a {
        ActionTerm::WaitFor(phi) => Ok(ltp(phi, s.valuation(), s.start())?.is_some()),
        ActionTerm::Named { name, args } => Ok(d.precondition_holds(name, args, s)?),
    }
}

/// `do(a, s)`. Only `waitFor` moves the clock (to the least time point of
/// its condition). Effect rules are evaluated simultaneously against the
/// old valuation at the new start time; fluents without a matching rule
/// keep their value.
pub fn successor(a: &ActionTerm, s: &Situation, d: &Domain) -> Result<Situation, EngineError> {
    match a {
        ActionTerm::WaitFor(phi) => {
            let t = ltp(phi, s.valuation(), s.start())?.ok_or_else(|| EngineError::IllegalAction(a.clone()))?;
            debug_assert!(&t >= s.start());
            Ok(s.extend(a.clone(), t, s.valuation().clone()))
        }
        ActionTerm::Named { name, args } => {
            if !d.precondition_holds(name, args, s)? {
                return Err(EngineError::IllegalAction(a.clone()));
            }
            let new_start = s.start().clone();
            let cx = EvalContext { old: s.valuation(), new_start: new_start.value() };
            let updates = d
                .lookup_effects(a)
                .into_iter()
                .map(|e| Ok((e.fluent, e.value.eval(&cx)?)))
                .collect::<Result<Vec<_>, DomainError>>()?;
            let mut valuation = s.valuation().clone();
            for (fluent, datum) in updates {
                match datum {
                    Datum::Function(f) if valuation.continuous.contains_key(&fluent) => {
                        valuation.continuous.insert(fluent, f);
                    }
                    Datum::Value(v) if valuation.discrete.contains_key(&fluent) => {
                        valuation.discrete.insert(fluent, v);
                    }
                    Datum::Function(_) => {
                        return Err(
                            DomainError::TypeMismatch { expected: "constant", found: "time function".into() }.into()
                        )
                    }
                    Datum::Value(v) => {
                        return Err(
                            DomainError::TypeMismatch { expected: "time function", found: v.kind().into() }.into()
                        )
                    }
                }
            }
            Ok(s.extend(a.clone(), new_start, valuation))
        }
    }
}

/// `Final(p, s)`.
#[allow(clippy::only_used_in_recursion)]
pub fn final_(p: &Program, s: &Situation, d: &Domain) -> Result<bool, EngineError> {
    Ok(match p {
        Program::Nil => true,
        Program::Prim(_) | Program::Test(_) => false,
        Program::Seq(a, b) => final_(a, s, d)? && final_(b, s, d)?,
        Program::If(phi, a, b) => {
            if eval_formula(phi, s)? {
                final_(a, s, d)?
            } else {
                final_(b, s, d)?
            }
        }
        Program::While(phi, body) => !eval_formula(phi, s)? || final_(body, s, d)?,
        Program::TryAll(a, b) => final_(a, s, d)? || final_(b, s, d)?,
        Program::WithPol(_, main) => final_(main, s, d)?,
    })
}

/// `Trans(p, s, p', s')` for the deterministic fragment: the unique next
/// configuration, or `None` when the program cannot make a step.
///
/// `tryAll` takes the branch whose step lands earlier (left on ties);
/// `withPol` lets the policy step unless the main program's step lands
/// strictly earlier.
pub fn trans(p: &Program, s: &Situation, d: &Domain) -> Result<Option<(Program, Situation)>, EngineError> {
    Ok(match p {
        Program::Nil => None,
        Program::Prim(a) => {
            if poss(a, s, d)? {
                Some((Program::Nil, successor(a, s, d)?))
            } else {
                None
            }
        }
        Program::Test(phi) => eval_formula(phi, s)?.then(|| (Program::Nil, s.clone())),
        Program::Seq(a, b) => match trans(a, s, d)? {
            Some((rest, s2)) => Some((Program::Seq(rest.into(), b.clone()), s2)),
            None if final_(a, s, d)? => trans(b, s, d)?,
            None => None,
        },
        Program::If(phi, a, b) => {
            if eval_formula(phi, s)? {
                trans(a, s, d)?
            } else {
                trans(b, s, d)?
            }
        }
        Program::While(phi, body) => {
            if !eval_formula(phi, s)? {
                None
            } else {
                trans(body, s, d)?.map(|(rest, s2)| (Program::seq(rest, p.clone()), s2))
            }
        }
        Program::TryAll(a, b) => {
            if final_(a, s, d)? || final_(b, s, d)? {
                return Ok(None);
            }
            let left = trans(a, s, d)?;
            let right = trans(b, s, d)?;
            match (left, right) {
                (Some((ra, sa)), Some((rb, sb))) => {
                    if sa.start() <= sb.start() {
                        Some((Program::try_all(ra, (**b).clone()), sa))
                    } else {
                        Some((Program::try_all((**a).clone(), rb), sb))
                    }
                }
                (Some((ra, sa)), None) => Some((Program::try_all(ra, (**b).clone()), sa)),
                (None, Some((rb, sb))) => Some((Program::try_all((**a).clone(), rb), sb)),
                (None, None) => None,
            }
        }
        Program::WithPol(policy, main) => {
            if final_(main, s, d)? {
                return Ok(None);
            }
            let pol = trans(policy, s, d)?;
            let mn = trans(main, s, d)?;
            match (pol, mn) {
                (Some((rp, sp)), Some((rm, sm))) => {
                    if sm.start() < sp.start() {
                        Some((Program::with_pol((**policy).clone(), rm), sm))
                    } else {
                        Some((Program::with_pol(rp, (**main).clone()), sp))
                    }
                }
                (Some((rp, sp)), None) => Some((Program::with_pol(rp, (**main).clone()), sp)),
                (None, Some((rm, sm))) => Some((Program::with_pol((**policy).clone(), rm), sm)),
                (None, None) => None,
            }
        }
    })
}

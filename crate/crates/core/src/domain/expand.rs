//! Elimination of surface constructs:
//!
//! * `whenever(φ, σ)` becomes `while(true, seq(waitFor(φ), σ))`;
//! * `withCtrl(φ, σ)` replaces every primitive action or test `α` of `σ` by
//!   `if(φ, α, false?)`;
//! * `par(σ1, σ2)` becomes `tryAll(seq(σ1, setFlg1, flg2?), seq(σ2, setFlg2, flg1?))`;
//! * `prio(σ1, σ2)` becomes `withPol(seq(σ1, setFlg), seq(σ2, flg?))`;
//! * procedure calls are inlined with their arguments substituted.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Domain, DomainError, Surface};
use crate::model::{ActionTerm, Formula, Program};

/// Generator for hidden flag fluents and their setter actions. Generated
/// names start with `$`, which user declarations cannot use.
#[derive(Clone, Debug, Default)]
pub struct FreshNames {
    next: u64,
}

impl FreshNames {
    pub fn new() -> Self {
        FreshNames::default()
    }

    pub fn starting_at(seed: u64) -> Self {
        FreshNames { next: seed }
    }

    fn flag(&mut self, d: &Domain) -> (String, String) {
        loop {
            self.next += 1;
            let flag = format!("$flg{}", self.next);
            let setter = format!("$setFlg{}", self.next);
            if !d.has_name(&flag) && !d.has_name(&setter) {
                return (flag, setter);
            }
        }
    }
}

/// Expands `surface` into a core program. The returned domain is a copy of
/// `d` extended with the hidden flags introduced by `par` and `prio`.
pub fn expand_macros(surface: &Surface, d: &Domain, fresh: &mut FreshNames) -> Result<(Program, Domain), DomainError> {
    let mut expander = Expander { domain: d.clone(), fresh, calls: Vec::new() };
    let program = expander.expand(surface)?;
    Ok((program, expander.domain))
}

struct Expander<'f> {
    domain: Domain,
    fresh: &'f mut FreshNames,
    calls: Vec<String>,
}

impl Expander<'_> {
    fn expand(&mut self, s: &Surface) -> Result<Program, DomainError> {
        Ok(match s {
            Surface::Nil => Program::Nil,
            Surface::Call { name, args } => return self.call(name, args),
            Surface::WaitFor(c) => Program::Prim(ActionTerm::WaitFor(self.domain.resolve_tform(c)?)),
            Surface::Test(c) => Program::Test(self.domain.resolve(c)?),
            Surface::Seq(parts) => Program::seq_all(self.expand_all(parts)?),
            Surface::If(c, p, q) => Program::if_(self.domain.resolve(c)?, self.expand(p)?, self.expand(q)?),
            Surface::While(c, p) => Program::while_(self.domain.resolve(c)?, self.expand(p)?),
            Surface::TryAll(parts) => {
                let mut parts = self.expand_all(parts)?;
                let last = parts.pop().unwrap_or(Program::Nil);
                parts.into_iter().rev().fold(last, |acc, p| Program::try_all(p, acc))
            }
            Surface::WithPol(p, q) => Program::with_pol(self.expand(p)?, self.expand(q)?),
            Surface::Whenever(c, p) => {
                let wait = Program::Prim(ActionTerm::WaitFor(self.domain.resolve_tform(c)?));
                Program::while_(Formula::True, Program::seq(wait, self.expand(p)?))
            }
            Surface::WithCtrl(c, p) => {
                let phi = self.domain.resolve(c)?;
                guard(self.expand(p)?, &phi)
            }
            Surface::Par(p, q) => {
                let (p, q) = (self.expand(p)?, self.expand(q)?);
                let (flag1, set1) = self.flag();
                let (flag2, set2) = self.flag();
                Program::try_all(
                    Program::seq_all([
                        p,
                        Program::prim(ActionTerm::nullary(set1)),
                        Program::Test(Formula::flag(flag2)),
                    ]),
                    Program::seq_all([
                        q,
                        Program::prim(ActionTerm::nullary(set2)),
                        Program::Test(Formula::flag(flag1)),
                    ]),
                )
            }
            Surface::Prio(p, q) => {
                let (p, q) = (self.expand(p)?, self.expand(q)?);
                let (flag, set) = self.flag();
                Program::with_pol(
                    Program::seq(p, Program::prim(ActionTerm::nullary(set))),
                    Program::seq(q, Program::Test(Formula::flag(flag))),
                )
            }
        })
    }

    fn expand_all(&mut self, parts: &[Surface]) -> Result<Vec<Program>, DomainError> {
        parts.iter().map(|p| self.expand(p)).collect()
    }

    fn flag(&mut self) -> (String, String) {
        let (flag, setter) = self.fresh.flag(&self.domain);
        self.domain.declare_flag(&flag, &setter);
        (flag, setter)
    }

    fn call(&mut self, name: &str, args: &[crate::model::Value]) -> Result<Program, DomainError> {
        if let Some(proc) = self.domain.procedure(name) {
            if proc.params.len() != args.len() {
                return Err(DomainError::ArityMismatch {
                    name: name.into(),
                    expected: proc.params.len(),
                    found: args.len(),
                });
            }
            if let Some(pos) = self.calls.iter().position(|c| c == name) {
                let mut cycle = self.calls[pos..].to_vec();
                cycle.push(name.into());
                return Err(DomainError::RecursiveProcedure(cycle));
            }
            let env: BTreeMap<_, _> = proc.params.iter().cloned().zip(args.iter().cloned()).collect();
            let body = proc.body.substitute(&env);
            self.calls.push(name.into());
            let expanded = self.expand(&body);
            self.calls.pop();
            return expanded;
        }
        let decl = self.domain.action(name).ok_or_else(|| DomainError::UndeclaredAction(name.into()))?;
        if decl.params.len() != args.len() {
            return Err(DomainError::ArityMismatch {
                name: name.into(),
                expected: decl.params.len(),
                found: args.len(),
            });
        }
        Ok(Program::prim(ActionTerm::named(name, args.to_vec())))
    }
}

/// `withCtrl`: every primitive action or test `α` becomes `if(φ, α, false?)`.
fn guard(p: Program, phi: &Formula) -> Program {
    let g = |p: Program| guard(p, phi);
    match p {
        Program::Nil => Program::Nil,
        Program::Prim(_) | Program::Test(_) => Program::if_(phi.clone(), p, Program::Test(Formula::False)),
        Program::Seq(a, b) => Program::seq(g(*a), g(*b)),
        Program::If(c, a, b) => Program::if_(c, g(*a), g(*b)),
        Program::While(c, a) => Program::while_(c, g(*a)),
        Program::TryAll(a, b) => Program::try_all(g(*a), g(*b)),
        Program::WithPol(a, b) => Program::with_pol(g(*a), g(*b)),
    }
}

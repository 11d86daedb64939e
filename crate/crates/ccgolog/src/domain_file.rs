//! Domain file syntax.
//!
//! ```text
//! (continuous robotLoc (constant 0))
//! (discrete wheels true)
//! (action startGo (v) (poss true))
//! (effect (startGo v) robotLoc (linear (val (old robotLoc) newStart) v newStart))
//! (condition nearDoor (and (>= x 95) (< x 105)))
//! (proc deliver (room) (seq (goto room) (say room)))
//! ```
//!
//! Initial time functions are `(constant x)`, `(linear x v t0)` or
//! `(piecewise ((t y) ...) rate)` with numeric arguments. Effect
//! expressions additionally allow `(old f)`, `(val e t)`, `newStart`,
//! `+ - * /`, comparisons, `and`, `or`, `not` and `(if c a b)`; any other
//! name is a rule parameter or a symbolic constant.

use ccgolog_core::domain::{ActionDecl, ArithOp, Cond, DomainSource, EffectRule, Expr, Procedure};
use ccgolog_core::model::{parse_real, CmpOp, Real, TFunction};

use crate::sexpr::{read_all, ParseError, SExpr};
use crate::syntax::{condition, name, program, value};

pub fn parse_domain(text: &str) -> Result<DomainSource, ParseError> {
    let mut src = DomainSource::default();
    for decl in read_all(text)? {
        let Some(items) = decl.as_list().filter(|items| !items.is_empty()) else {
            return err(&decl, "expected a declaration");
        };
        let keyword = items[0].as_atom().unwrap_or("");
        let args = &items[1..];
        match keyword {
            "continuous" => {
                expect_args(&decl, args, 2)?;
                src.continuous.push((name(&args[0], "a fluent name")?, tfunction(&args[1])?));
            }
            "discrete" => {
                expect_args(&decl, args, 2)?;
                src.discrete.push((name(&args[0], "a fluent name")?, value(&args[1])?));
            }
            "action" => {
                if !(2..=3).contains(&args.len()) {
                    return err(&decl, "expected (action name (params ...) [(poss condition)])");
                }
                let precondition = match args.get(2) {
                    None => Cond::True,
                    Some(poss) => match poss.as_list() {
                        Some([head, c]) if head.as_atom() == Some("poss") => condition(c)?,
                        _ => return err(poss, "expected (poss condition)"),
                    },
                };
                src.actions.push(ActionDecl {
                    name: name(&args[0], "an action name")?,
                    params: params(&args[1])?,
                    precondition,
                });
            }
            "effect" => {
                expect_args(&decl, args, 3)?;
                let (action, params) = pattern(&args[0])?;
                src.effects.push(EffectRule {
                    action,
                    params,
                    fluent: name(&args[1], "a fluent name")?,
                    value: expr(&args[2])?,
                });
            }
            "proc" => {
                expect_args(&decl, args, 3)?;
                src.procedures.push(Procedure {
                    name: name(&args[0], "a procedure name")?,
                    params: params(&args[1])?,
                    body: program(&args[2])?,
                });
            }
            "condition" => {
                expect_args(&decl, args, 2)?;
                src.conditions.push((name(&args[0], "a condition name")?, condition(&args[1])?));
            }
            _ => return err(&items[0], format!("unknown declaration `{}`", items[0])),
        }
    }
    Ok(src)
}

fn err<T>(e: &SExpr, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::new(e.pos(), message))
}

fn expect_args(decl: &SExpr, args: &[SExpr], n: usize) -> Result<(), ParseError> {
    if args.len() != n {
        let head = decl.as_list().map(|l| l[0].to_string()).unwrap_or_default();
        return err(decl, format!("`{head}` takes {n} argument(s), got {}", args.len()));
    }
    Ok(())
}

fn params(e: &SExpr) -> Result<Vec<String>, ParseError> {
    match e.as_list() {
        Some(items) => items.iter().map(|p| name(p, "a parameter name")).collect(),
        None => err(e, "expected a parameter list"),
    }
}

/// `name` or `(name param ...)`.
fn pattern(e: &SExpr) -> Result<(String, Vec<String>), ParseError> {
    match e {
        SExpr::Atom(..) => Ok((name(e, "an action name")?, Vec::new())),
        SExpr::List(items, _) if !items.is_empty() => Ok((
            name(&items[0], "an action name")?,
            items[1..].iter().map(|p| name(p, "a parameter name")).collect::<Result<_, _>>()?,
        )),
        SExpr::List(..) => err(e, "expected an action pattern"),
    }
}

fn number(e: &SExpr) -> Result<Real, ParseError> {
    match e.as_atom().and_then(parse_real) {
        Some(r) => Ok(r),
        None => err(e, format!("expected a number, found `{e}`")),
    }
}

fn tfunction(e: &SExpr) -> Result<TFunction, ParseError> {
    let items = e.as_list().unwrap_or(&[]);
    let shape = || err(e, "expected (constant x), (linear x v t0) or (piecewise ((t y) ...) rate)");
    match items.first().and_then(SExpr::as_atom) {
        Some("constant") if items.len() == 2 => Ok(TFunction::constant(number(&items[1])?)),
        Some("linear") if items.len() == 4 => {
            Ok(TFunction::linear(number(&items[1])?, number(&items[2])?, number(&items[3])?))
        }
        Some("piecewise") if items.len() == 3 => {
            let breaks = breaks(&items[1])?
                .into_iter()
                .map(|(t, y)| Ok((number(t)?, number(y)?)))
                .collect::<Result<Vec<_>, ParseError>>()?;
            TFunction::piecewise(breaks, number(&items[2])?).or_else(|e2| err(e, e2.to_string()))
        }
        _ => shape(),
    }
}

fn breaks(e: &SExpr) -> Result<Vec<(&SExpr, &SExpr)>, ParseError> {
    let Some(items) = e.as_list() else {
        return err(e, "expected a list of (time value) pairs");
    };
    items
        .iter()
        .map(|pair| match pair.as_list() {
            Some([t, y]) => Ok((t, y)),
            _ => err(pair, "expected a (time value) pair"),
        })
        .collect()
}

fn expr(e: &SExpr) -> Result<Expr, ParseError> {
    let items = match e {
        SExpr::Atom(a, _) => {
            return Ok(match a.as_str() {
                "newStart" => Expr::NewStart,
                _ => Expr::Lit(value(e)?),
            })
        }
        SExpr::List(items, _) if items.is_empty() => return err(e, "empty list is not an expression"),
        SExpr::List(items, _) => items,
    };
    let head = items[0].as_atom().unwrap_or("");
    let args = &items[1..];
    let sub = |i: usize| expr(&args[i]).map(Box::new);
    let n_args = |n: usize| -> Result<(), ParseError> {
        if args.len() != n {
            return err(e, format!("`{head}` takes {n} argument(s), got {}", args.len()));
        }
        Ok(())
    };
    let fold = |op: &dyn Fn(Expr, Expr) -> Expr| -> Result<Expr, ParseError> {
        if args.len() < 2 {
            return err(e, format!("`{head}` takes at least 2 arguments"));
        }
        let mut parts = args.iter().map(expr);
        let first = parts.next().unwrap()?;
        parts.try_fold(first, |acc, p| Ok(op(acc, p?)))
    };
    let arith = |op: ArithOp| fold(&|a, b| Expr::arith(op, a, b));
    Ok(match head {
        "old" => {
            n_args(1)?;
            Expr::Old(name(&args[0], "a fluent name")?)
        }
        "val" => {
            n_args(2)?;
            Expr::Val(sub(0)?, sub(1)?)
        }
        "+" => arith(ArithOp::Add)?,
        "*" => arith(ArithOp::Mul)?,
        "/" => arith(ArithOp::Div)?,
        "-" if args.len() == 1 => Expr::Neg(sub(0)?),
        "-" => arith(ArithOp::Sub)?,
        "and" => fold(&|a, b| Expr::And(Box::new(a), Box::new(b)))?,
        "or" => fold(&|a, b| Expr::Or(Box::new(a), Box::new(b)))?,
        "not" => {
            n_args(1)?;
            Expr::Not(sub(0)?)
        }
        "if" => {
            n_args(3)?;
            Expr::If(sub(0)?, sub(1)?, sub(2)?)
        }
        "constant" => {
            n_args(1)?;
            Expr::Constant(sub(0)?)
        }
        "linear" => {
            n_args(3)?;
            Expr::Linear(sub(0)?, sub(1)?, sub(2)?)
        }
        "piecewise" => {
            n_args(2)?;
            let pairs = breaks(&args[0])?
                .into_iter()
                .map(|(t, y)| Ok((expr(t)?, expr(y)?)))
                .collect::<Result<Vec<_>, ParseError>>()?;
            Expr::Piecewise(pairs, sub(1)?)
        }
        _ => match CmpOp::from_symbol(head) {
            Some(op) => {
                n_args(2)?;
                Expr::Cmp(op, sub(0)?, sub(1)?)
            }
            None => return err(&items[0], format!("unknown expression `{}`", items[0])),
        },
    })
}

//! Program and condition syntax.
//!
//! ```text
//! program ::= nil | name | (name value ...)
//!           | (seq program ...) | (tryAll program ...)
//!           | (if cond program program) | (while cond program)
//!           | (withPol program program) | (waitFor cond) | (test cond)
//!           | (whenever cond program) | (withCtrl cond program)
//!           | (par program program) | (prio program program)
//! cond    ::= true | false | name | (op name value)
//!           | (and cond ...) | (or cond ...) | (not cond)
//! op      ::= < | <= | = | >= | >
//! value   ::= number | true | false | name
//! ```
//!
//! Numbers are integers, fractions `p/q` or exact decimals.

use ccgolog_core::domain::{Cond, Surface};
use ccgolog_core::model::{parse_real, CmpOp, Value};

use crate::sexpr::{read_one, ParseError, SExpr};

/// Words that cannot name actions, fluents or procedures.
pub const KEYWORDS: &[&str] = &[
    "nil", "seq", "if", "while", "tryAll", "withPol", "waitFor", "test", "whenever", "withCtrl", "par", "prio", "true",
    "false", "and", "or", "not",
];

pub fn parse_program(text: &str) -> Result<Surface, ParseError> {
    program(&read_one(text)?)
}

pub fn parse_condition(text: &str) -> Result<Cond, ParseError> {
    condition(&read_one(text)?)
}

fn err<T>(e: &SExpr, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::new(e.pos(), message))
}

fn is_name(atom: &str) -> bool {
    parse_real(atom).is_none() && !KEYWORDS.contains(&atom) && CmpOp::from_symbol(atom).is_none()
}

/// An identifier: an atom that is neither a number nor a keyword.
pub(crate) fn name(e: &SExpr, what: &str) -> Result<String, ParseError> {
    match e.as_atom() {
        Some(a) if is_name(a) => Ok(a.to_string()),
        Some(a) => err(e, format!("`{a}` cannot be used as {what}")),
        None => err(e, format!("expected {what}, found a list")),
    }
}

pub(crate) fn value(e: &SExpr) -> Result<Value, ParseError> {
    let Some(a) = e.as_atom() else {
        return err(e, "expected a constant, found a list");
    };
    Ok(match a {
        "true" => Value::Bool(true),
        "false" => Value::Bool(false),
        _ => match parse_real(a) {
            Some(r) => Value::Real(r),
            None if is_name(a) => Value::symbol(a),
            None => return err(e, format!("`{a}` is not a constant")),
        },
    })
}

fn arity(e: &SExpr, items: &[SExpr], expected: usize) -> Result<(), ParseError> {
    if items.len() - 1 != expected {
        return err(e, format!("`{}` takes {expected} argument(s), got {}", items[0], items.len() - 1));
    }
    Ok(())
}

pub(crate) fn program(e: &SExpr) -> Result<Surface, ParseError> {
    let items = match e {
        SExpr::Atom(a, _) if a == "nil" => return Ok(Surface::Nil),
        SExpr::Atom(..) => return Ok(Surface::call(name(e, "an action name")?, Vec::new())),
        SExpr::List(items, _) if items.is_empty() => return err(e, "empty list is not a program"),
        SExpr::List(items, _) => items,
    };
    let head = &items[0];
    let Some(keyword) = head.as_atom() else {
        return err(head, "expected a construct or action name");
    };
    let boxed = |e: &SExpr| program(e).map(Box::new);
    let all = || items[1..].iter().map(program).collect::<Result<Vec<_>, _>>();
    Ok(match keyword {
        "seq" => Surface::Seq(all()?),
        "tryAll" => Surface::TryAll(all()?),
        "if" => {
            arity(e, items, 3)?;
            Surface::If(condition(&items[1])?, boxed(&items[2])?, boxed(&items[3])?)
        }
        "while" | "whenever" | "withCtrl" => {
            arity(e, items, 2)?;
            let (c, p) = (condition(&items[1])?, boxed(&items[2])?);
            match keyword {
                "while" => Surface::While(c, p),
                "whenever" => Surface::Whenever(c, p),
                _ => Surface::WithCtrl(c, p),
            }
        }
        "withPol" | "par" | "prio" => {
            arity(e, items, 2)?;
            let (p, q) = (boxed(&items[1])?, boxed(&items[2])?);
            match keyword {
                "withPol" => Surface::WithPol(p, q),
                "par" => Surface::Par(p, q),
                _ => Surface::Prio(p, q),
            }
        }
        "waitFor" | "test" => {
            arity(e, items, 1)?;
            let c = condition(&items[1])?;
            if keyword == "waitFor" {
                Surface::WaitFor(c)
            } else {
                Surface::Test(c)
            }
        }
        _ => {
            let action = name(head, "an action name")?;
            let args = items[1..].iter().map(value).collect::<Result<_, _>>()?;
            Surface::call(action, args)
        }
    })
}

pub(crate) fn condition(e: &SExpr) -> Result<Cond, ParseError> {
    let items = match e {
        SExpr::Atom(a, _) if a == "true" => return Ok(Cond::True),
        SExpr::Atom(a, _) if a == "false" => return Ok(Cond::False),
        SExpr::Atom(..) => return Ok(Cond::Ref(name(e, "a fluent or condition name")?)),
        SExpr::List(items, _) if items.is_empty() => return err(e, "empty list is not a condition"),
        SExpr::List(items, _) => items,
    };
    let head = &items[0];
    let all = || items[1..].iter().map(condition).collect::<Result<Vec<_>, _>>();
    match head.as_atom() {
        Some("and") => Ok(Cond::And(all()?)),
        Some("or") => Ok(Cond::Or(all()?)),
        Some("not") => {
            arity(e, items, 1)?;
            Ok(Cond::Not(Box::new(condition(&items[1])?)))
        }
        Some(op) => match CmpOp::from_symbol(op) {
            Some(op) => {
                arity(e, items, 2)?;
                Ok(Cond::cmp(op, name(&items[1], "a fluent name")?, value(&items[2])?))
            }
            None => err(head, format!("unknown condition `{op}`")),
        },
        None => err(head, "expected a comparison or connective"),
    }
}

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use super::{Atom, CmpOp, TForm, Value};

/// Situation-suppressed test condition used by `test`, `if` and `while`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    /// Comparison of a discrete fluent with a constant.
    Compare {
        fluent: String,
        op: CmpOp,
        value: Value,
    },
    /// Atom over a continuous fluent, sampled at the situation's start time.
    Continuous(Atom),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
}

impl Formula {
    pub fn compare(fluent: impl Into<String>, op: CmpOp, value: Value) -> Self {
        Formula::Compare { fluent: fluent.into(), op, value }
    }

    /// `fluent = true` for a boolean discrete fluent.
    pub fn flag(fluent: impl Into<String>) -> Self {
        Formula::compare(fluent, CmpOp::Eq, Value::Bool(true))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Formula) -> Self {
        Formula::Not(Box::new(inner))
    }

    /// The temporal formula with the same meaning, if only continuous atoms occur.
    pub fn to_tform(&self) -> Option<TForm> {
        Some(match self {
            Formula::Continuous(a) => TForm::Atom(a.clone()),
            Formula::And(a, b) => TForm::and(a.to_tform()?, b.to_tform()?),
            Formula::Or(a, b) => TForm::or(a.to_tform()?, b.to_tform()?),
            Formula::Not(a) => TForm::not(a.to_tform()?),
            Formula::True | Formula::False | Formula::Compare { .. } => return None,
        })
    }
}

impl From<TForm> for Formula {
    fn from(phi: TForm) -> Self {
        match phi {
            TForm::Atom(a) => Formula::Continuous(a),
            TForm::And(a, b) => Formula::and((*a).into(), (*b).into()),
            TForm::Or(a, b) => Formula::or((*a).into(), (*b).into()),
            TForm::Not(a) => Formula::not((*a).into()),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
            Formula::Compare { fluent, op, value } => write!(f, "({op} {fluent} {value})"),
            Formula::Continuous(a) => a.fmt(f),
            Formula::And(a, b) => write!(f, "(and {a} {b})"),
            Formula::Or(a, b) => write!(f, "(or {a} {b})"),
            Formula::Not(a) => write!(f, "(not {a})"),
        }
    }
}

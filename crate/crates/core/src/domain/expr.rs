//! Right-hand sides of effect rules.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::DomainError;
use crate::model::{CmpOp, Real, TFunction, Value};
use crate::temporal::Valuation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl ArithOp {
    pub fn symbol(self) -> &'static str {
        match self {
            ArithOp::Add => "+",
            ArithOp::Sub => "-",
            ArithOp::Mul => "*",
            ArithOp::Div => "/",
        }
    }
}

/// New value of a fluent, computed from the old valuation sampled at the
/// new start time and the action's arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    /// A literal; a symbol naming a rule parameter is replaced when the rule
    /// is bound to an action.
    Lit(Value),
    /// Start time of the successor situation.
    NewStart,
    /// The fluent's value in the predecessor situation (a time function for
    /// continuous fluents).
    Old(String),
    /// `val(f, t)`.
    Val(Box<Expr>, Box<Expr>),
    Arith(ArithOp, Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Cmp(CmpOp, Box<Expr>, Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
    If(Box<Expr>, Box<Expr>, Box<Expr>),
    Constant(Box<Expr>),
    Linear(Box<Expr>, Box<Expr>, Box<Expr>),
    Piecewise(Vec<(Expr, Expr)>, Box<Expr>),
}

/// Result of evaluating an [`Expr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Datum {
    Value(Value),
    Function(TFunction),
}

impl Datum {
    fn kind(&self) -> &'static str {
        match self {
            Datum::Value(v) => v.kind(),
            Datum::Function(_) => "time function",
        }
    }
}

pub(crate) struct EvalContext<'a> {
    pub old: &'a Valuation,
    pub new_start: &'a Real,
}

fn type_error(expected: &'static str, found: &Datum) -> DomainError {
    DomainError::TypeMismatch { expected, found: found.kind().into() }
}

impl Expr {
    pub fn real(r: Real) -> Self {
        Expr::Lit(Value::Real(r))
    }

    pub fn arith(op: ArithOp, a: Expr, b: Expr) -> Self {
        Expr::Arith(op, Box::new(a), Box::new(b))
    }

    /// Replaces symbols bound in `env` by their values.
    pub fn substitute(&self, env: &BTreeMap<String, Value>) -> Expr {
        let sub = |e: &Expr| Box::new(e.substitute(env));
        match self {
            Expr::Lit(Value::Symbol(s)) => Expr::Lit(env.get(s).cloned().unwrap_or_else(|| Value::Symbol(s.clone()))),
            Expr::Lit(_) | Expr::NewStart | Expr::Old(_) => self.clone(),
            Expr::Val(a, b) => Expr::Val(sub(a), sub(b)),
            Expr::Arith(op, a, b) => Expr::Arith(*op, sub(a), sub(b)),
            Expr::Neg(a) => Expr::Neg(sub(a)),
            Expr::Cmp(op, a, b) => Expr::Cmp(*op, sub(a), sub(b)),
            Expr::And(a, b) => Expr::And(sub(a), sub(b)),
            Expr::Or(a, b) => Expr::Or(sub(a), sub(b)),
            Expr::Not(a) => Expr::Not(sub(a)),
            Expr::If(c, a, b) => Expr::If(sub(c), sub(a), sub(b)),
            Expr::Constant(a) => Expr::Constant(sub(a)),
            Expr::Linear(x, v, t) => Expr::Linear(sub(x), sub(v), sub(t)),
            Expr::Piecewise(breaks, rate) => {
                Expr::Piecewise(breaks.iter().map(|(t, y)| (t.substitute(env), y.substitute(env))).collect(), sub(rate))
            }
        }
    }

    /// Fluents read through `old`.
    pub fn for_each_old<'a>(&'a self, f: &mut impl FnMut(&'a str)) {
        match self {
            Expr::Old(name) => f(name),
            Expr::Lit(_) | Expr::NewStart => {}
            Expr::Neg(a) | Expr::Not(a) | Expr::Constant(a) => a.for_each_old(f),
            Expr::Val(a, b) | Expr::Arith(_, a, b) | Expr::Cmp(_, a, b) | Expr::And(a, b) | Expr::Or(a, b) => {
                a.for_each_old(f);
                b.for_each_old(f);
            }
            Expr::If(a, b, c) | Expr::Linear(a, b, c) => {
                a.for_each_old(f);
                b.for_each_old(f);
                c.for_each_old(f);
            }
            Expr::Piecewise(breaks, rate) => {
                for (t, y) in breaks {
                    t.for_each_old(f);
                    y.for_each_old(f);
                }
                rate.for_each_old(f);
            }
        }
    }

    /// Evaluates against the predecessor valuation with `newStart` bound to
    /// `new_start`.
    pub fn evaluate(&self, old: &Valuation, new_start: &Real) -> Result<Datum, DomainError> {
        self.eval(&EvalContext { old, new_start })
    }

    pub(crate) fn eval(&self, cx: &EvalContext<'_>) -> Result<Datum, DomainError> {
        Ok(match self {
            Expr::Lit(v) => Datum::Value(v.clone()),
            Expr::NewStart => Datum::Value(Value::Real(cx.new_start.clone())),
            Expr::Old(name) => {
                if let Some(f) = cx.old.continuous.get(name) {
                    Datum::Function(f.clone())
                } else if let Some(v) = cx.old.discrete.get(name) {
                    Datum::Value(v.clone())
                } else {
                    return Err(DomainError::UndeclaredFluent { fluent: name.clone(), context: "effect".into() });
                }
            }
            Expr::Val(f, t) => {
                let t = t.eval_real(cx)?;
                match f.eval(cx)? {
                    Datum::Function(f) => Datum::Value(Value::Real(f.value_at(&t))),
                    other => return Err(type_error("time function", &other)),
                }
            }
            Expr::Arith(op, a, b) => {
                let (a, b) = (a.eval_real(cx)?, b.eval_real(cx)?);
                Datum::Value(Value::Real(match op {
                    ArithOp::Add => a + b,
                    ArithOp::Sub => a - b,
                    ArithOp::Mul => a * b,
                    ArithOp::Div => {
                        if b.is_zero() {
                            return Err(DomainError::DivisionByZero);
                        }
                        a / b
                    }
                }))
            }
            Expr::Neg(a) => Datum::Value(Value::Real(-a.eval_real(cx)?)),
            Expr::Cmp(op, a, b) => {
                let a = a.eval_value(cx)?;
                let b = b.eval_value(cx)?;
                Datum::Value(Value::Bool(compare_values(*op, &a, &b)?))
            }
            Expr::And(a, b) => Datum::Value(Value::Bool(a.eval_bool(cx)? && b.eval_bool(cx)?)),
            Expr::Or(a, b) => Datum::Value(Value::Bool(a.eval_bool(cx)? || b.eval_bool(cx)?)),
            Expr::Not(a) => Datum::Value(Value::Bool(!a.eval_bool(cx)?)),
            Expr::If(c, a, b) => {
                if c.eval_bool(cx)? {
                    a.eval(cx)?
                } else {
                    b.eval(cx)?
                }
            }
            Expr::Constant(x) => Datum::Function(TFunction::constant(x.eval_real(cx)?)),
            Expr::Linear(x, v, t0) => {
                Datum::Function(TFunction::linear(x.eval_real(cx)?, v.eval_real(cx)?, t0.eval_real(cx)?))
            }
            Expr::Piecewise(breaks, rate) => {
                let breaks = breaks.iter().map(|(t, y)| Ok((t.eval_real(cx)?, y.eval_real(cx)?))).collect::<Result<
                    Vec<_>,
                    DomainError,
                >>(
                )?;
                Datum::Function(TFunction::piecewise(breaks, rate.eval_real(cx)?)?)
            }
        })
    }

    fn eval_value(&self, cx: &EvalContext<'_>) -> Result<Value, DomainError> {
        match self.eval(cx)? {
            Datum::Value(v) => Ok(v),
            other => Err(type_error("constant", &other)),
        }
    }

    fn eval_real(&self, cx: &EvalContext<'_>) -> Result<Real, DomainError> {
        match self.eval(cx)? {
            Datum::Value(Value::Real(r)) => Ok(r),
            other => Err(type_error("real", &other)),
        }
    }

    fn eval_bool(&self, cx: &EvalContext<'_>) -> Result<bool, DomainError> {
        match self.eval(cx)? {
            Datum::Value(Value::Bool(b)) => Ok(b),
            other => Err(type_error("boolean", &other)),
        }
    }
}

/// Compares two constants. Reals support every operator; booleans and
/// symbols only `=`.
pub(crate) fn compare_values(op: CmpOp, a: &Value, b: &Value) -> Result<bool, DomainError> {
    match (a, b) {
        (Value::Real(x), Value::Real(y)) => Ok(op.holds(x, y)),
        _ if op != CmpOp::Eq => Err(DomainError::TypeMismatch { expected: "real", found: a.kind().into() }),
        _ if a.kind() != b.kind() => Err(DomainError::TypeMismatch { expected: a.kind(), found: b.kind().into() }),
        _ => Ok(a == b),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(v) => v.fmt(f),
            Expr::NewStart => f.write_str("newStart"),
            Expr::Old(name) => write!(f, "(old {name})"),
            Expr::Val(a, b) => write!(f, "(val {a} {b})"),
            Expr::Arith(op, a, b) => write!(f, "({} {a} {b})", op.symbol()),
            Expr::Neg(a) => write!(f, "(- {a})"),
            Expr::Cmp(op, a, b) => write!(f, "({op} {a} {b})"),
            Expr::And(a, b) => write!(f, "(and {a} {b})"),
            Expr::Or(a, b) => write!(f, "(or {a} {b})"),
            Expr::Not(a) => write!(f, "(not {a})"),
            Expr::If(c, a, b) => write!(f, "(if {c} {a} {b})"),
            Expr::Constant(a) => write!(f, "(constant {a})"),
            Expr::Linear(x, v, t) => write!(f, "(linear {x} {v} {t})"),
            Expr::Piecewise(breaks, rate) => {
                f.write_str("(piecewise (")?;
                for (i, (t, y)) in breaks.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "({t} {y})")?;
                }
                write!(f, ") {rate})")
            }
        }
    }
}

//! Surface programs: the parsed form before macro expansion, still
//! containing `whenever`, `withCtrl`, `par`, `prio`, procedure calls and
//! unresolved condition names.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{ActionTerm, CmpOp, Formula, Program, TForm, Value};

/// A condition as written: fluent kinds and named conditions are resolved
/// against a domain during expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cond {
    True,
    False,
    /// A boolean discrete fluent or a named condition.
    Ref(String),
    Cmp {
        op: CmpOp,
        fluent: String,
        value: Value,
    },
    And(Vec<Cond>),
    Or(Vec<Cond>),
    Not(Box<Cond>),
}

impl Cond {
    pub fn cmp(op: CmpOp, fluent: impl Into<String>, value: Value) -> Self {
        Cond::Cmp { op, fluent: fluent.into(), value }
    }

    pub fn substitute(&self, env: &BTreeMap<String, Value>) -> Cond {
        match self {
            Cond::Cmp { op, fluent, value: Value::Symbol(s) } if env.contains_key(s) => {
                Cond::Cmp { op: *op, fluent: fluent.clone(), value: env[s].clone() }
            }
            Cond::And(parts) => Cond::And(parts.iter().map(|c| c.substitute(env)).collect()),
            Cond::Or(parts) => Cond::Or(parts.iter().map(|c| c.substitute(env)).collect()),
            Cond::Not(c) => Cond::Not(Box::new(c.substitute(env))),
            _ => self.clone(),
        }
    }

    pub(crate) fn for_each_name<'a>(&'a self, f: &mut impl FnMut(&'a str)) {
        match self {
            Cond::True | Cond::False => {}
            Cond::Ref(name) | Cond::Cmp { fluent: name, .. } => f(name),
            Cond::And(parts) | Cond::Or(parts) => parts.iter().for_each(|c| c.for_each_name(f)),
            Cond::Not(c) => c.for_each_name(f),
        }
    }
}

impl From<&Formula> for Cond {
    fn from(phi: &Formula) -> Self {
        match phi {
            Formula::True => Cond::True,
            Formula::False => Cond::False,
            Formula::Compare { fluent, op, value } => Cond::cmp(*op, fluent.clone(), value.clone()),
            Formula::Continuous(a) => Cond::cmp(a.op, a.fluent.clone(), Value::Real(a.bound.clone())),
            Formula::And(a, b) => Cond::And(alloc::vec![(&**a).into(), (&**b).into()]),
            Formula::Or(a, b) => Cond::Or(alloc::vec![(&**a).into(), (&**b).into()]),
            Formula::Not(a) => Cond::Not(Box::new((&**a).into())),
        }
    }
}

impl From<&TForm> for Cond {
    fn from(phi: &TForm) -> Self {
        (&Formula::from(phi.clone())).into()
    }
}

impl fmt::Display for Cond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, head: &str, parts: &[Cond]| {
            write!(f, "({head}")?;
            for p in parts {
                write!(f, " {p}")?;
            }
            f.write_str(")")
        };
        match self {
            Cond::True => f.write_str("true"),
            Cond::False => f.write_str("false"),
            Cond::Ref(name) => f.write_str(name),
            Cond::Cmp { op, fluent, value } => write!(f, "({op} {fluent} {value})"),
            Cond::And(parts) => list(f, "and", parts),
            Cond::Or(parts) => list(f, "or", parts),
            Cond::Not(c) => write!(f, "(not {c})"),
        }
    }
}

/// A program as parsed from source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Surface {
    Nil,
    /// A primitive action or a procedure call; which one is decided by the domain.
    Call {
        name: String,
        args: Vec<Value>,
    },
    WaitFor(Cond),
    Test(Cond),
    Seq(Vec<Surface>),
    If(Cond, Box<Surface>, Box<Surface>),
    While(Cond, Box<Surface>),
    TryAll(Vec<Surface>),
    WithPol(Box<Surface>, Box<Surface>),
    Whenever(Cond, Box<Surface>),
    WithCtrl(Cond, Box<Surface>),
    Par(Box<Surface>, Box<Surface>),
    Prio(Box<Surface>, Box<Surface>),
}

impl Surface {
    pub fn call(name: impl Into<String>, args: Vec<Value>) -> Self {
        Surface::Call { name: name.into(), args }
    }

    /// Replaces symbols naming procedure parameters in action arguments
    /// and comparison constants.
    pub fn substitute(&self, env: &BTreeMap<String, Value>) -> Surface {
        let b = |s: &Surface| Box::new(s.substitute(env));
        let all = |v: &[Surface]| v.iter().map(|s| s.substitute(env)).collect();
        match self {
            Surface::Nil => Surface::Nil,
            Surface::Call { name, args } => Surface::Call {
                name: name.clone(),
                args: args
                    .iter()
                    .map(|a| match a {
                        Value::Symbol(s) => env.get(s).cloned().unwrap_or_else(|| a.clone()),
                        _ => a.clone(),
                    })
                    .collect(),
            },
            Surface::WaitFor(c) => Surface::WaitFor(c.substitute(env)),
            Surface::Test(c) => Surface::Test(c.substitute(env)),
            Surface::Seq(v) => Surface::Seq(all(v)),
            Surface::If(c, p, q) => Surface::If(c.substitute(env), b(p), b(q)),
            Surface::While(c, p) => Surface::While(c.substitute(env), b(p)),
            Surface::TryAll(v) => Surface::TryAll(all(v)),
            Surface::WithPol(p, q) => Surface::WithPol(b(p), b(q)),
            Surface::Whenever(c, p) => Surface::Whenever(c.substitute(env), b(p)),
            Surface::WithCtrl(c, p) => Surface::WithCtrl(c.substitute(env), b(p)),
            Surface::Par(p, q) => Surface::Par(b(p), b(q)),
            Surface::Prio(p, q) => Surface::Prio(b(p), b(q)),
        }
    }

    /// Names of everything invoked through [`Surface::Call`].
    pub(crate) fn for_each_call<'a>(&'a self, f: &mut impl FnMut(&'a str)) {
        match self {
            Surface::Nil | Surface::WaitFor(_) | Surface::Test(_) => {}
            Surface::Call { name, .. } => f(name),
            Surface::Seq(v) | Surface::TryAll(v) => v.iter().for_each(|s| s.for_each_call(f)),
            Surface::If(_, p, q) | Surface::WithPol(p, q) | Surface::Par(p, q) | Surface::Prio(p, q) => {
                p.for_each_call(f);
                q.for_each_call(f);
            }
            Surface::While(_, p) | Surface::Whenever(_, p) | Surface::WithCtrl(_, p) => p.for_each_call(f),
        }
    }
}

/// Lifts a core program back to surface form; expanding the result against
/// a domain that declares its names gives the program back.
impl From<&Program> for Surface {
    fn from(p: &Program) -> Self {
        let b = |p: &Program| Box::new(Surface::from(p));
        match p {
            Program::Nil => Surface::Nil,
            Program::Prim(ActionTerm::Named { name, args }) => Surface::call(name.clone(), args.clone()),
            Program::Prim(ActionTerm::WaitFor(phi)) => Surface::WaitFor(phi.into()),
            Program::Test(phi) => Surface::Test(phi.into()),
            Program::Seq(a, c) => Surface::Seq(alloc::vec![(&**a).into(), (&**c).into()]),
            Program::If(phi, a, c) => Surface::If(phi.into(), b(a), b(c)),
            Program::While(phi, a) => Surface::While(phi.into(), b(a)),
            Program::TryAll(a, c) => Surface::TryAll(alloc::vec![(&**a).into(), (&**c).into()]),
            Program::WithPol(a, c) => Surface::WithPol(b(a), b(c)),
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, head: &str, parts: &[Surface]| {
            write!(f, "({head}")?;
            for p in parts {
                write!(f, " {p}")?;
            }
            f.write_str(")")
        };
        match self {
            Surface::Nil => f.write_str("nil"),
            Surface::Call { name, args } => ActionTerm::named(name.clone(), args.clone()).fmt(f),
            Surface::WaitFor(c) => write!(f, "(waitFor {c})"),
            Surface::Test(c) => write!(f, "(test {c})"),
            Surface::Seq(v) => list(f, "seq", v),
            Surface::If(c, p, q) => write!(f, "(if {c} {p} {q})"),
            Surface::While(c, p) => write!(f, "(while {c} {p})"),
            Surface::TryAll(v) => list(f, "tryAll", v),
            Surface::WithPol(p, q) => write!(f, "(withPol {p} {q})"),
            Surface::Whenever(c, p) => write!(f, "(whenever {c} {p})"),
            Surface::WithCtrl(c, p) => write!(f, "(withCtrl {c} {p})"),
            Surface::Par(p, q) => write!(f, "(par {p} {q})"),
            Surface::Prio(p, q) => write!(f, "(prio {p} {q})"),
        }
    }
}

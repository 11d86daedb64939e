use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::fmt;

use super::{ActionTerm, Formula};

/// Core cc-Golog program after macro expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Program {
    Nil,
    Prim(ActionTerm),
    Test(Formula),
    Seq(Box<Program>, Box<Program>),
    If(Formula, Box<Program>, Box<Program>),
    While(Formula, Box<Program>),
    /// Runs both branches, earliest transition first; ends when either ends.
    TryAll(Box<Program>, Box<Program>),
    /// Runs the main program (right) under a policy (left); the policy wins ties.
    WithPol(Box<Program>, Box<Program>),
}

impl Program {
    pub fn prim(action: ActionTerm) -> Self {
        Program::Prim(action)
    }

    pub fn seq(first: Program, second: Program) -> Self {
        Program::Seq(Box::new(first), Box::new(second))
    }

    /// Right-folded sequence; `nil` when empty.
    pub fn seq_all<I>(parts: I) -> Self
    where
        I: IntoIterator<Item = Program>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut iter = parts.into_iter().rev();
        match iter.next() {
            None => Program::Nil,
            Some(last) => iter.fold(last, |acc, p| Program::seq(p, acc)),
        }
    }

    pub fn if_(cond: Formula, then: Program, otherwise: Program) -> Self {
        Program::If(cond, Box::new(then), Box::new(otherwise))
    }

    pub fn while_(cond: Formula, body: Program) -> Self {
        Program::While(cond, Box::new(body))
    }

    pub fn try_all(left: Program, right: Program) -> Self {
        Program::TryAll(Box::new(left), Box::new(right))
    }

    pub fn with_pol(policy: Program, main: Program) -> Self {
        Program::WithPol(Box::new(policy), Box::new(main))
    }

    pub fn depth(&self) -> usize {
        match self {
            Program::Nil | Program::Prim(_) | Program::Test(_) => 1,
            Program::While(_, p) => 1 + p.depth(),
            Program::Seq(a, b) | Program::If(_, a, b) | Program::TryAll(a, b) | Program::WithPol(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }
}

/// Structural equality; embedded constants compare as exact rationals.
pub fn program_equal(p: &Program, q: &Program) -> bool {
    p == q
}

/// The concrete prefix syntax of `p`.
pub fn print_program(p: &Program) -> String {
    p.to_string()
}

/// Concrete prefix syntax, accepted back by the program parser.
impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Program::Nil => f.write_str("nil"),
            Program::Prim(a) => a.fmt(f),
            Program::Test(phi) => write!(f, "(test {phi})"),
            Program::Seq(a, b) => write!(f, "(seq {a} {b})"),
            Program::If(phi, a, b) => write!(f, "(if {phi} {a} {b})"),
            Program::While(phi, a) => write!(f, "(while {phi} {a})"),
            Program::TryAll(a, b) => write!(f, "(tryAll {a} {b})"),
            Program::WithPol(a, b) => write!(f, "(withPol {a} {b})"),
        }
    }
}

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use super::Real;

/// Comparison operator of an atomic condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl CmpOp {
    pub const ALL: [CmpOp; 5] = [CmpOp::Lt, CmpOp::Le, CmpOp::Eq, CmpOp::Ge, CmpOp::Gt];

    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }

    pub fn from_symbol(s: &str) -> Option<CmpOp> {
        Some(match s {
            "<" => CmpOp::Lt,
            "<=" => CmpOp::Le,
            "=" => CmpOp::Eq,
            ">=" => CmpOp::Ge,
            ">" => CmpOp::Gt,
            _ => return None,
        })
    }

    /// Whether `lhs op rhs` holds given `lhs.cmp(rhs)`.
    pub fn accepts(self, ord: Ordering) -> bool {
        match self {
            CmpOp::Lt => ord == Ordering::Less,
            CmpOp::Le => ord != Ordering::Greater,
            CmpOp::Eq => ord == Ordering::Equal,
            CmpOp::Ge => ord != Ordering::Less,
            CmpOp::Gt => ord == Ordering::Greater,
        }
    }

    pub fn holds<T: Ord + ?Sized>(self, lhs: &T, rhs: &T) -> bool {
        self.accepts(lhs.cmp(rhs))
    }

    /// Same comparison with the operands swapped: `a op b` iff `b op.mirror() a`.
    pub fn mirror(self) -> CmpOp {
        match self {
            CmpOp::Lt => CmpOp::Gt,
            CmpOp::Le => CmpOp::Ge,
            CmpOp::Eq => CmpOp::Eq,
            CmpOp::Ge => CmpOp::Le,
            CmpOp::Gt => CmpOp::Lt,
        }
    }
}

impl fmt::Display for CmpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `fluent op bound` for a continuous fluent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub fluent: String,
    pub op: CmpOp,
    pub bound: Real,
}

impl Atom {
    pub fn new(fluent: impl Into<String>, op: CmpOp, bound: Real) -> Self {
        Atom { fluent: fluent.into(), op, bound }
    }

    /// Negation as a positive formula: flipped operator, or a disjunction
    /// of the two strict sides for `=`.
    pub fn negated(&self) -> TForm {
        let flip = |op| TForm::Atom(Atom { op, ..self.clone() });
        match self.op {
            CmpOp::Lt => flip(CmpOp::Ge),
            CmpOp::Le => flip(CmpOp::Gt),
            CmpOp::Ge => flip(CmpOp::Lt),
            CmpOp::Gt => flip(CmpOp::Le),
            CmpOp::Eq => TForm::or(flip(CmpOp::Lt), flip(CmpOp::Gt)),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.op, self.fluent, self.bound)
    }
}

/// Boolean combination of atoms over continuous fluents; the argument
/// sort of `waitFor`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TForm {
    Atom(Atom),
    And(Box<TForm>, Box<TForm>),
    Or(Box<TForm>, Box<TForm>),
    Not(Box<TForm>),
}

impl TForm {
    pub fn atom(fluent: impl Into<String>, op: CmpOp, bound: Real) -> Self {
        TForm::Atom(Atom::new(fluent, op, bound))
    }

    pub fn and(lhs: TForm, rhs: TForm) -> Self {
        TForm::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: TForm, rhs: TForm) -> Self {
        TForm::Or(Box::new(lhs), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: TForm) -> Self {
        TForm::Not(Box::new(inner))
    }

    /// True when `Not` occurs nowhere.
    pub fn is_normalized(&self) -> bool {
        match self {
            TForm::Atom(_) => true,
            TForm::And(a, b) | TForm::Or(a, b) => a.is_normalized() && b.is_normalized(),
            TForm::Not(_) => false,
        }
    }

    /// Visits every atom, left to right.
    pub fn for_each_atom<'a>(&'a self, f: &mut impl FnMut(&'a Atom)) {
        match self {
            TForm::Atom(a) => f(a),
            TForm::And(a, b) | TForm::Or(a, b) => {
                a.for_each_atom(f);
                b.for_each_atom(f);
            }
            TForm::Not(a) => a.for_each_atom(f),
        }
    }
}

impl fmt::Display for TForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TForm::Atom(a) => a.fmt(f),
            TForm::And(a, b) => write!(f, "(and {a} {b})"),
            TForm::Or(a, b) => write!(f, "(or {a} {b})"),
            TForm::Not(a) => write!(f, "(not {a})"),
        }
    }
}

/// Negation normal form without any `Not`: negated atoms become atoms
/// with the complementary operator and De Morgan pushes the rest inward.
pub fn normalize_tform(phi: &TForm) -> TForm {
    push(phi, false)
}

fn push(phi: &TForm, negate: bool) -> TForm {
    match (phi, negate) {
        (TForm::Atom(a), false) => TForm::Atom(a.clone()),
        (TForm::Atom(a), true) => a.negated(),
        (TForm::Not(inner), n) => push(inner, !n),
        (TForm::And(a, b), false) => TForm::and(push(a, false), push(b, false)),
        (TForm::And(a, b), true) => TForm::or(push(a, true), push(b, true)),
        (TForm::Or(a, b), false) => TForm::or(push(a, false), push(b, false)),
        (TForm::Or(a, b), true) => TForm::and(push(a, true), push(b, true)),
    }
}

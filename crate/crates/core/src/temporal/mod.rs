//! Evaluation of time functions and temporal formulas, and least time
//! points.
//!
//! Every atom over a (piecewise) linear function has a solution set that is
//! a finite union of intervals whose endpoints are exact rationals, so the
//! solution set of a whole formula is computed symbolically with
//! [`IntervalSet`] operations and the least time point is read off its
//! first interval.

mod interval;

use alloc::collections::BTreeMap;
use alloc::string::String;

pub use interval::{Bound, Interval, IntervalSet};

use crate::model::{normalize_tform, Atom, CmpOp, Real, TForm, TFunction, TimePoint, Value};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TemporalError {
    #[error("unknown continuous fluent `{0}`")]
    UnknownFluent(String),
}

/// Fluent values of a situation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation {
    pub continuous: BTreeMap<String, TFunction>,
    pub discrete: BTreeMap<String, Value>,
}

impl Valuation {
    pub fn function(&self, fluent: &str) -> Result<&TFunction, TemporalError> {
        self.continuous.get(fluent).ok_or_else(|| TemporalError::UnknownFluent(fluent.into()))
    }
}

/// `val(f, t)`.
pub fn val(f: &TFunction, t: &TimePoint) -> Real {
    f.value_at(t.value())
}

/// `phi[s, t]`: every continuous fluent replaced by its value at `t`.
pub fn holds(phi: &TForm, v: &Valuation, t: &TimePoint) -> Result<bool, TemporalError> {
    Ok(match phi {
        TForm::Atom(a) => atom_holds(a, v, t.value())?,
        TForm::And(a, b) => holds(a, v, t)? && holds(b, v, t)?,
        TForm::Or(a, b) => holds(a, v, t)? || holds(b, v, t)?,
        TForm::Not(a) => !holds(a, v, t)?,
    })
}

pub(crate) fn atom_holds(a: &Atom, v: &Valuation, t: &Real) -> Result<bool, TemporalError> {
    Ok(a.op.holds(&v.function(&a.fluent)?.value_at(t), &a.bound))
}

/// All times `t >= window_start` at which `phi` holds.
pub fn solve_tform(phi: &TForm, v: &Valuation, window_start: &TimePoint) -> Result<IntervalSet, TemporalError> {
    let window = IntervalSet::from(window_start.value().clone());
    Ok(solve_unbounded(phi, v)?.intersection(&window))
}

fn solve_unbounded(phi: &TForm, v: &Valuation) -> Result<IntervalSet, TemporalError> {
    Ok(match phi {
        TForm::Atom(a) => solve_atom(a, v.function(&a.fluent)?),
        TForm::And(a, b) => solve_unbounded(a, v)?.intersection(&solve_unbounded(b, v)?),
        TForm::Or(a, b) => solve_unbounded(a, v)?.union(&solve_unbounded(b, v)?),
        // normalized input never reaches this arm
        TForm::Not(a) => solve_unbounded(a, v)?.complement(),
    })
}

/// Solution set of `f(t) op bound` over the whole time line.
pub fn solve_atom(a: &Atom, f: &TFunction) -> IntervalSet {
    let pieces = f.pieces().into_iter().filter_map(|piece| {
        let span = Interval::new(piece.from.map(Bound::closed), piece.to.map(Bound::closed))?;
        let solved = if num_traits::Zero::is_zero(&piece.slope) {
            a.op.holds(&piece.intercept, &a.bound).then(Interval::everything)?
        } else {
            let root = (&a.bound - &piece.intercept) / &piece.slope;
            // intercept + slope*t op bound  <=>  t op' root
            let op = if num_traits::Signed::is_positive(&piece.slope) { a.op } else { a.op.mirror() };
            ray(op, root)
        };
        span.intersect(&solved)
    });
    IntervalSet::from_intervals(pieces)
}

/// `{ t | t op root }`.
fn ray(op: CmpOp, root: Real) -> Interval {
    let (lo, hi) = match op {
        CmpOp::Lt => (None, Some(Bound::open(root))),
        CmpOp::Le => (None, Some(Bound::closed(root))),
        CmpOp::Eq => return Interval::point(root),
        CmpOp::Ge => (Some(Bound::closed(root)), None),
        CmpOp::Gt => (Some(Bound::open(root)), None),
    };
    Interval::new(lo, hi).expect("rays are nonempty")
}

/// Least time point at or after `start` where `phi` holds. Absent when the
/// formula never holds again or its solution set has an open infimum.
pub fn ltp(phi: &TForm, v: &Valuation, start: &TimePoint) -> Result<Option<TimePoint>, TemporalError> {
    let solutions = solve_tform(&normalize_tform(phi), v, start)?;
    Ok(solutions.minimum().cloned().map(TimePoint::new))
}

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::Real;

/// A symbolic function of time: the value of a continuous fluent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TFunction {
    /// `constant(x)`.
    Constant(Real),
    /// `linear(x, v, t0)`: value `x` at `t0`, changing at rate `v` per second.
    Linear { x: Real, rate: Real, t0: Real },
    /// A polyline through strictly increasing breakpoints.
    PiecewiseLinear(Polyline),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolylineError {
    #[error("piecewise function needs at least one breakpoint")]
    Empty,
    #[error("piecewise breakpoints must be strictly increasing in time")]
    NotIncreasing,
}

/// Breakpoints `(t_i, y_i)` with `t_0 < t_1 < ...`. Before `t_0` the value is
/// held at `y_0`; after the last breakpoint it continues at `final_rate`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyline {
    breaks: Vec<(Real, Real)>,
    final_rate: Real,
}

impl Polyline {
    pub fn new(breaks: Vec<(Real, Real)>, final_rate: Real) -> Result<Self, PolylineError> {
        if breaks.is_empty() {
            return Err(PolylineError::Empty);
        }
        if breaks.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(PolylineError::NotIncreasing);
        }
        Ok(Polyline { breaks, final_rate })
    }

    pub fn breaks(&self) -> &[(Real, Real)] {
        &self.breaks
    }

    pub fn final_rate(&self) -> &Real {
        &self.final_rate
    }
}

/// One affine piece `intercept + slope * t` valid on the closed span
/// `[from, to]`; `None` stands for an unbounded end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub from: Option<Real>,
    pub to: Option<Real>,
    pub intercept: Real,
    pub slope: Real,
}

impl Piece {
    fn through(from: Option<Real>, to: Option<Real>, at: &Real, value: &Real, slope: Real) -> Self {
        let intercept = value - &slope * at;
        Piece { from, to, intercept, slope }
    }
}

impl TFunction {
    pub fn constant(x: Real) -> Self {
        TFunction::Constant(x)
    }

    pub fn linear(x: Real, rate: Real, t0: Real) -> Self {
        TFunction::Linear { x, rate, t0 }
    }

    pub fn piecewise(breaks: Vec<(Real, Real)>, final_rate: Real) -> Result<Self, PolylineError> {
        Polyline::new(breaks, final_rate).map(TFunction::PiecewiseLinear)
    }

    /// Exact value at time `t`.
    pub fn value_at(&self, t: &Real) -> Real {
        match self {
            TFunction::Constant(x) => x.clone(),
            TFunction::Linear { x, rate, t0 } => x + rate * (t - t0),
            TFunction::PiecewiseLinear(line) => {
                let breaks = &line.breaks;
                let (first_t, first_y) = &breaks[0];
                if t <= first_t {
                    return first_y.clone();
                }
                // index of the first breakpoint strictly after t
                let idx = breaks.partition_point(|(bt, _)| bt <= t);
                if idx == breaks.len() {
                    let (last_t, last_y) = &breaks[idx - 1];
                    return last_y + &line.final_rate * (t - last_t);
                }
                let (t_a, y_a) = &breaks[idx - 1];
                let (t_b, y_b) = &breaks[idx];
                y_a + (y_b - y_a) * (t - t_a) / (t_b - t_a)
            }
        }
    }

    /// Affine decomposition of the function. The spans cover the whole
    /// time line and consecutive spans share their endpoint.
    pub fn pieces(&self) -> Vec<Piece> {
        match self {
            TFunction::Constant(x) => {
                alloc::vec![Piece { from: None, to: None, intercept: x.clone(), slope: Real::zero() }]
            }
            TFunction::Linear { x, rate, t0 } => {
                alloc::vec![Piece::through(None, None, t0, x, rate.clone())]
            }
            TFunction::PiecewiseLinear(line) => {
                let breaks = &line.breaks;
                let mut out = Vec::with_capacity(breaks.len() + 1);
                let (t_first, y_first) = &breaks[0];
                out.push(Piece::through(None, Some(t_first.clone()), t_first, y_first, Real::zero()));
                for w in breaks.windows(2) {
                    let ((t_a, y_a), (t_b, y_b)) = (&w[0], &w[1]);
                    let slope = (y_b - y_a) / (t_b - t_a);
                    out.push(Piece::through(Some(t_a.clone()), Some(t_b.clone()), t_a, y_a, slope));
                }
                let (t_last, y_last) = &breaks[breaks.len() - 1];
                out.push(Piece::through(Some(t_last.clone()), None, t_last, y_last, line.final_rate.clone()));
                out
            }
        }
    }
}

impl fmt::Display for TFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TFunction::Constant(x) => write!(f, "(constant {x})"),
            TFunction::Linear { x, rate, t0 } => write!(f, "(linear {x} {rate} {t0})"),
            TFunction::PiecewiseLinear(line) => {
                f.write_str("(piecewise (")?;
                for (i, (t, y)) in line.breaks.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "({t} {y})")?;
                }
                write!(f, ") {})", line.final_rate)
            }
        }
    }
}

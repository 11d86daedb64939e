//! Abstract syntax of cc-Golog: exact reals and time points, time functions,
//! temporal formulas, test formulas, action terms and core programs.

mod action;
mod formula;
mod program;
mod real;
mod tform;
mod tfunction;

pub use action::ActionTerm;
pub use formula::Formula;
pub use program::{print_program, program_equal, Program};
pub use real::{parse_real, Real, TimePoint, Value};
pub use tform::{normalize_tform, Atom, CmpOp, TForm};
pub use tfunction::{Piece, Polyline, PolylineError, TFunction};

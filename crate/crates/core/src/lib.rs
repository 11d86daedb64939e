//! Core of the cc-Golog projection engine.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! * [`model`] holds the abstract syntax: time functions, temporal formulas,
//!   action terms and core programs, plus the canonical printer.
//! * [`temporal`] evaluates time functions and computes least time points
//!   with an exact interval-set algebra.
//! * [`domain`] represents basic action theories and expands surface
//!   constructs (`whenever`, `withCtrl`, `par`, `prio`, procedures).
//! * [`engine`] implements situations, `Poss`, successor situations,
//!   `Final`, `Trans` and projection.
//!
//! All arithmetic is exact over arbitrary-precision rationals.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod domain;
pub mod engine;
pub mod model;
pub mod temporal;

#[cfg(test)]
pub(crate) mod fixtures;

pub use domain::{Domain, DomainError, DomainSource};
pub use engine::{project, ProjectionResult, Situation, TraceEntry};
pub use model::{ActionTerm, Atom, CmpOp, Formula, Program, Real, TForm, TFunction, TimePoint, Value};

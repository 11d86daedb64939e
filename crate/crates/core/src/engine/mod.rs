//! Situations and the transition semantics of the deterministic cc-Golog
//! fragment: `Poss`, successor situations, `Final`, `Trans` and projection.

mod project;
mod semantics;
mod situation;

pub use project::{project, project_from, replay, BlockReason, Outcome, ProjectionResult, TraceEntry};
pub use semantics::{final_, poss, successor, trans};
pub use situation::Situation;

use crate::domain::DomainError;
use crate::model::ActionTerm;
use crate::temporal::TemporalError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("action `{}` is not possible in the current situation", .0.label())]
    IllegalAction(ActionTerm),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

impl From<TemporalError> for EngineError {
    fn from(e: TemporalError) -> Self {
        EngineError::Domain(e.into())
    }
}

use alloc::vec::Vec;
use core::fmt;

use super::{final_, poss, successor, trans, EngineError, Situation};
use crate::domain::{eval_formula, Domain};
use crate::model::{ActionTerm, Formula, Program, TForm, TimePoint};

/// A primitive action in a projected trace, stamped with the start time of
/// the situation it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub time: TimePoint,
    pub action: ActionTerm,
}

/// Why a non-final configuration has no transition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockReason {
    NoLeastTimePoint(TForm),
    PreconditionFailed(ActionTerm),
    TestFailed(Formula),
    /// Some concurrent construct has no branch able to step.
    NoTransition,
}

impl fmt::Display for BlockReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockReason::NoLeastTimePoint(phi) => write!(f, "waitFor condition has no least time point: {phi}"),
            BlockReason::PreconditionFailed(a) => write!(f, "precondition of {} does not hold", a.label()),
            BlockReason::TestFailed(phi) => write!(f, "test condition is false: {phi}"),
            BlockReason::NoTransition => f.write_str("no branch of the program can make a transition"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// A final configuration was reached.
    Completed {
        situation: Situation,
    },
    Blocked {
        situation: Situation,
        remaining: Program,
        reason: BlockReason,
    },
    StepLimit {
        situation: Situation,
        remaining: Program,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionResult {
    pub outcome: Outcome,
    pub trace: Vec<TraceEntry>,
    /// Transitions taken, including tests.
    pub steps: usize,
}

impl ProjectionResult {
    pub fn situation(&self) -> &Situation {
        match &self.outcome {
            Outcome::Completed { situation }
            | Outcome::Blocked { situation, .. }
            | Outcome::StepLimit { situation, .. } => situation,
        }
    }

    pub fn is_completed(&self) -> bool {
        matches!(self.outcome, Outcome::Completed { .. })
    }
}

/// Projects `p` from the initial situation of `d`: follows transitions
/// until a final configuration (completed), a configuration without
/// transitions (blocked) or `max_steps` transitions.
pub fn project(p: &Program, d: &Domain, max_steps: usize) -> Result<ProjectionResult, EngineError> {
    project_from(p, Situation::initial(d), d, max_steps)
}

pub fn project_from(p: &Program, s: Situation, d: &Domain, max_steps: usize) -> Result<ProjectionResult, EngineError> {
    let mut program = p.clone();
    let mut situation = s;
    let mut trace = Vec::new();
    let mut steps = 0;
    loop {
        if final_(&program, &situation, d)? {
            let outcome = Outcome::Completed { situation };
            return Ok(ProjectionResult { outcome, trace, steps });
        }
        if steps >= max_steps {
            let outcome = Outcome::StepLimit { situation, remaining: program };
            return Ok(ProjectionResult { outcome, trace, steps });
        }
        let Some((next, s2)) = trans(&program, &situation, d)? else {
            let reason = diagnose(&program, &situation, d)?;
            let outcome = Outcome::Blocked { situation, remaining: program, reason };
            return Ok(ProjectionResult { outcome, trace, steps });
        };
        if s2.history_len() > situation.history_len() {
            let action = s2.last_action().cloned().expect("history grew");
            trace.push(TraceEntry { time: s2.start().clone(), action });
        }
        steps += 1;
        program = next;
        situation = s2;
    }
}

/// Follows the first step the program is waiting on to explain a block.
fn diagnose(p: &Program, s: &Situation, d: &Domain) -> Result<BlockReason, EngineError> {
    Ok(match p {
        Program::Prim(a) if !poss(a, s, d)? => match a {
            ActionTerm::WaitFor(phi) => BlockReason::NoLeastTimePoint(phi.clone()),
            ActionTerm::Named { .. } => BlockReason::PreconditionFailed(a.clone()),
        },
        Program::Test(phi) if !eval_formula(phi, s)? => BlockReason::TestFailed(phi.clone()),
        Program::Seq(a, b) => {
            if final_(a, s, d)? {
                diagnose(b, s, d)?
            } else {
                diagnose(a, s, d)?
            }
        }
        Program::If(phi, a, b) => {
            if eval_formula(phi, s)? {
                diagnose(a, s, d)?
            } else {
                diagnose(b, s, d)?
            }
        }
        Program::While(phi, body) if eval_formula(phi, s)? => diagnose(body, s, d)?,
        Program::WithPol(_, main) => diagnose(main, s, d)?,
        _ => BlockReason::NoTransition,
    })
}

/// Situations along `actions` from the initial situation: element `i` is
/// the situation in which `actions[i]` is performed; the last element is
/// the final situation.
pub fn replay(d: &Domain, actions: &[ActionTerm]) -> Result<Vec<Situation>, EngineError> {
    let mut out = Vec::with_capacity(actions.len() + 1);
    out.push(Situation::initial(d));
    for a in actions {
        let next = successor(a, out.last().expect("nonempty"), d)?;
        out.push(next);
    }
    Ok(out)
}

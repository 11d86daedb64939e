use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::domain::Domain;
use crate::model::{ActionTerm, TimePoint};
use crate::temporal::Valuation;

#[derive(Debug)]
struct Node {
    action: ActionTerm,
    prev: Option<Arc<Node>>,
}

/// A situation in progressed form: the action history from the initial
/// situation, together with the start time and fluent values it determines.
///
/// Histories are persistent lists, so successors share their prefix.
#[derive(Clone, Debug)]
pub struct Situation {
    last: Option<Arc<Node>>,
    len: usize,
    start: TimePoint,
    valuation: Valuation,
}

impl Situation {
    /// `S0` of the domain, starting at time 0.
    pub fn initial(d: &Domain) -> Self {
        Situation::at(TimePoint::zero(), d.initial_valuation())
    }

    pub fn at(start: TimePoint, valuation: Valuation) -> Self {
        Situation { last: None, len: 0, start, valuation }
    }

    pub(crate) fn extend(&self, action: ActionTerm, start: TimePoint, valuation: Valuation) -> Self {
        Situation {
            last: Some(Arc::new(Node { action, prev: self.last.clone() })),
            len: self.len + 1,
            start,
            valuation,
        }
    }

    pub fn start(&self) -> &TimePoint {
        &self.start
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn history_len(&self) -> usize {
        self.len
    }

    pub fn last_action(&self) -> Option<&ActionTerm> {
        self.last.as_deref().map(|n| &n.action)
    }

    /// Actions performed since the initial situation, oldest first.
    pub fn history(&self) -> Vec<ActionTerm> {
        let mut out = Vec::with_capacity(self.len);
        let mut node = self.last.as_deref();
        while let Some(n) = node {
            out.push(n.action.clone());
            node = n.prev.as_deref();
        }
        out.reverse();
        out
    }
}

/// Situations are equal when they have the same history from equal
/// initial states.
impl PartialEq for Situation {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len
            && self.start == other.start
            && self.valuation == other.valuation
            && self.history() == other.history()
    }
}

impl Eq for Situation {}

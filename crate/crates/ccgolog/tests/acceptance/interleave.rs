//! Reference scheduler for two straight-line programs of instantaneous
//! actions and clock waits: repeatedly run the side whose next step can
//! happen earliest, the left side on ties.

use ccgolog_core::model::{Real, TimePoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Act(&'static str),
    /// Wait until the clock reaches this value.
    Wait(i64),
}

pub fn interleave(left: &[Step], right: &[Step]) -> Vec<(TimePoint, Step)> {
    let ready = |s: &Step, now: &Real| match s {
        Step::Act(_) => now.clone(),
        Step::Wait(k) => now.clone().max(Real::from_integer((*k).into())),
    };
    let (mut i, mut j) = (0, 0);
    let mut now = Real::from_integer(0.into());
    let mut out = Vec::new();
    while i < left.len() || j < right.len() {
        let l = left.get(i).map(|s| ready(s, &now));
        let r = right.get(j).map(|s| ready(s, &now));
        let take_left = match (&l, &r) {
            (Some(l), Some(r)) => l <= r,
            (l, _) => l.is_some(),
        };
        let (t, step) = if take_left {
            i += 1;
            (l.unwrap(), left[i - 1].clone())
        } else {
            j += 1;
            (r.unwrap(), right[j - 1].clone())
        };
        now = t.clone();
        out.push((TimePoint::new(t), step));
    }
    out
}

//! Finite unions of real intervals in canonical form.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::model::Real;

/// A finite endpoint; `closed` says whether the endpoint itself belongs to
/// the interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bound {
    pub value: Real,
    pub closed: bool,
}

impl Bound {
    pub fn closed(value: Real) -> Self {
        Bound { value, closed: true }
    }

    pub fn open(value: Real) -> Self {
        Bound { value, closed: false }
    }

    fn flipped(&self) -> Self {
        Bound { value: self.value.clone(), closed: !self.closed }
    }
}

/// A nonempty interval; `None` on either side means unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Option<Bound>,
    hi: Option<Bound>,
}

fn cmp_lower(a: &Option<Bound>, b: &Option<Bound>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        // a closed lower bound starts before an open one at the same value
        (Some(x), Some(y)) => x.value.cmp(&y.value).then_with(|| y.closed.cmp(&x.closed)),
    }
}

fn cmp_upper(a: &Option<Bound>, b: &Option<Bound>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (Some(x), Some(y)) => x.value.cmp(&y.value).then_with(|| x.closed.cmp(&y.closed)),
    }
}

impl Interval {
    /// Returns `None` when the bounds describe the empty set.
    pub fn new(lo: Option<Bound>, hi: Option<Bound>) -> Option<Self> {
        if let (Some(l), Some(h)) = (&lo, &hi) {
            match l.value.cmp(&h.value) {
                Ordering::Greater => return None,
                Ordering::Equal if !(l.closed && h.closed) => return None,
                _ => {}
            }
        }
        Some(Interval { lo, hi })
    }

    pub fn point(t: Real) -> Self {
        Interval { lo: Some(Bound::closed(t.clone())), hi: Some(Bound::closed(t)) }
    }

    pub fn everything() -> Self {
        Interval { lo: None, hi: None }
    }

    pub fn lower(&self) -> Option<&Bound> {
        self.lo.as_ref()
    }

    pub fn upper(&self) -> Option<&Bound> {
        self.hi.as_ref()
    }

    pub fn contains(&self, t: &Real) -> bool {
        let above = match &self.lo {
            None => true,
            Some(b) => t > &b.value || (b.closed && t == &b.value),
        };
        let below = match &self.hi {
            None => true,
            Some(b) => t < &b.value || (b.closed && t == &b.value),
        };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if cmp_lower(&self.lo, &other.lo) == Ordering::Less { &other.lo } else { &self.lo };
        let hi = if cmp_upper(&self.hi, &other.hi) == Ordering::Less { &self.hi } else { &other.hi };
        Interval::new(lo.clone(), hi.clone())
    }

    /// Whether `next` (starting no earlier than `self`) overlaps or abuts
    /// `self` so that their union is a single interval.
    fn joins(&self, next: &Interval) -> bool {
        match (&self.hi, &next.lo) {
            (None, _) | (_, None) => true,
            (Some(h), Some(l)) => match l.value.cmp(&h.value) {
                Ordering::Less => true,
                Ordering::Equal => h.closed || l.closed,
                Ordering::Greater => false,
            },
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            None => f.write_str("(-inf")?,
            Some(b) => write!(f, "{}{}", if b.closed { '[' } else { '(' }, b.value)?,
        }
        match &self.hi {
            None => f.write_str(", +inf)"),
            Some(b) => write!(f, ", {}{}", b.value, if b.closed { ']' } else { ')' }),
        }
    }
}

/// Sorted, pairwise disjoint, non-abutting intervals. The representation of
/// a set is unique, so derived equality is set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn everything() -> Self {
        IntervalSet { intervals: alloc::vec![Interval::everything()] }
    }

    pub fn from_interval(interval: Interval) -> Self {
        IntervalSet { intervals: alloc::vec![interval] }
    }

    /// `[t, +inf)`.
    pub fn from(t: Real) -> Self {
        IntervalSet::from_interval(Interval { lo: Some(Bound::closed(t)), hi: None })
    }

    /// Canonicalizes an arbitrary collection of intervals.
    pub fn from_intervals(intervals: impl IntoIterator<Item = Interval>) -> Self {
        let mut items: Vec<Interval> = intervals.into_iter().collect();
        items.sort_by(|a, b| cmp_lower(&a.lo, &b.lo));
        let mut out: Vec<Interval> = Vec::with_capacity(items.len());
        for next in items {
            match out.last_mut() {
                Some(cur) if cur.joins(&next) => {
                    if cmp_upper(&next.hi, &cur.hi) == Ordering::Greater {
                        cur.hi = next.hi;
                    }
                }
                _ => out.push(next),
            }
        }
        IntervalSet { intervals: out }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, t: &Real) -> bool {
        self.intervals.iter().any(|i| i.contains(t))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        IntervalSet::from_intervals(self.intervals.iter().chain(&other.intervals).cloned())
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let (a, b) = (&self.intervals[i], &other.intervals[j]);
            if let Some(x) = a.intersect(b) {
                out.push(x);
            }
            if cmp_upper(&a.hi, &b.hi) == Ordering::Less {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet::from_intervals(out)
    }

    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::with_capacity(self.intervals.len() + 1);
        let mut gap_lo: Option<Bound> = None;
        let mut open_start = true;
        for interval in &self.intervals {
            match &interval.lo {
                None => {}
                Some(l) => {
                    let start = if open_start { None } else { gap_lo.clone() };
                    if let Some(gap) = Interval::new(start, Some(l.flipped())) {
                        out.push(gap);
                    }
                }
            }
            match &interval.hi {
                None => return IntervalSet { intervals: out },
                Some(h) => {
                    gap_lo = Some(h.flipped());
                    open_start = false;
                }
            }
        }
        let start = if open_start { None } else { gap_lo };
        out.push(Interval { lo: start, hi: None });
        IntervalSet { intervals: out }
    }

    /// Greatest lower bound of the set, with whether it is attained.
    /// `None` when the set is empty or unbounded below.
    pub fn infimum(&self) -> Option<&Bound> {
        self.intervals.first().and_then(|i| i.lo.as_ref())
    }

    /// The least element, if the set has one.
    pub fn minimum(&self) -> Option<&Real> {
        self.infimum().filter(|b| b.closed).map(|b| &b.value)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("{}");
        }
        for (i, interval) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            interval.fmt(f)?;
        }
        Ok(())
    }
}

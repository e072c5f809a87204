//! Sub-arcs of `a` with endpoints in gaps between crossings.

use crate::{PairDiagram, RepError};
use serde::{Deserialize, Serialize};

/// A closed sub-arc of `a`. Both endpoints sit strictly inside gaps (a gap
/// `g` is the arc of `a` between crossings `g` and `g+1`); the interval
/// starts inside `start_gap`, runs forward along `a`, and ends inside
/// `end_gap`, containing the listed crossings in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub start_gap: usize,
    pub end_gap: usize,
    pub crossings: Vec<usize>,
}

impl Interval {
    /// The interval containing every crossing, entered from `gap`.
    pub fn full(d: &PairDiagram, gap: usize) -> Self {
        let n = d.n();
        let crossings = (0..n).map(|k| (gap + 1 + k) % n).collect();
        Interval {
            start_gap: gap,
            end_gap: gap,
            crossings,
        }
    }

    pub fn validate(&self, d: &PairDiagram) -> Result<(), RepError> {
        let n = d.n();
        if self.crossings.is_empty() {
            return Err(RepError::InvalidInterval("empty interval".into()));
        }
        if self.crossings.len() > n {
            return Err(RepError::InvalidInterval("too many crossings".into()));
        }
        if self.crossings[0] != (self.start_gap + 1) % n {
            return Err(RepError::InvalidInterval(
                "first crossing must follow the start gap".into(),
            ));
        }
        for w in self.crossings.windows(2) {
            if w[1] != (w[0] + 1) % n {
                return Err(RepError::InvalidInterval("crossings not contiguous".into()));
            }
        }
        if *self.crossings.last().unwrap() != self.end_gap {
            return Err(RepError::InvalidInterval(
                "last crossing must precede the end gap".into(),
            ));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Position of crossing `c` inside the interval, if present.
    pub fn position(&self, c: usize) -> Option<usize> {
        self.crossings.iter().position(|&x| x == c)
    }

    pub fn contains(&self, c: usize) -> bool {
        self.position(c).is_some()
    }

    /// Is `other` nested inside this interval, both as a crossing set and
    /// as an arc?
    pub fn contains_interval(&self, other: &Interval) -> bool {
        if other.crossings.len() > self.crossings.len() {
            return false;
        }
        // crossing containment with contiguity means other's run sits inside
        let first = match self.position(other.crossings[0]) {
            Some(p) => p,
            None => return false,
        };
        for (k, &c) in other.crossings.iter().enumerate() {
            if self.crossings.get(first + k) != Some(&c) {
                return false;
            }
        }
        // arc containment: endpoints of `other` lie in gaps spanned by self.
        // The start gap of `other` is either self's start gap or a gap
        // strictly inside (the gap before other's first crossing); same for
        // the end. Given the crossing containment above this reduces to:
        true
    }
}

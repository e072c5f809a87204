//! Applying a replacement move: the new interval, the new curve rendered on
//! the ambient surface, and the derived pattern for the new pair.

use crate::moves::{MoveKind, ReplacementMove};
use crate::{derive, Interval, PairDiagram, RepError};
use surfkit::curve::{reduce_curve, CurveClass, TransversalCurve};
use surfkit::diagrams::{a_edge, b_edge};
use surfkit::ops::tighten_pair;
use surfkit::ribbon::HalfId;
use surfkit::walk::{render_pushoff, WalkStep};

#[derive(Clone, Debug)]
pub struct MoveOutcome {
    pub j1: Option<Interval>,
    /// The replacement curve, reduced, living on the original surface.
    pub a1: TransversalCurve,
    pub a1_class: CurveClass,
    /// Exact geometric intersection number with `b`.
    pub crossings_with_b: usize,
    /// Pattern of the pair `(a1, b)` when it fills the surface.
    pub new_diagram: Option<PairDiagram>,
}

/// Crossing-position range kept by the move (inclusive), in interval
/// positions of `J`.
fn kept_range(m: &ReplacementMove) -> (usize, isize) {
    match m.kind {
        MoveKind::NonWave => (m.p + 1, m.q as isize),
        MoveKind::Wave => (m.p + 1, m.q as isize - 1),
        MoveKind::DoubleWaveSharedEnd => (m.p + 1, m.q2.unwrap() as isize - 1),
        MoveKind::DoubleWaveCoEnd => {
            if m.mirrored {
                let lo = m.q.min(m.q2.unwrap());
                let hi = m.q.max(m.q2.unwrap());
                (lo, hi as isize - 1)
            } else {
                let lo = m.p.min(m.p2.unwrap());
                let hi = m.p.max(m.p2.unwrap());
                (lo + 1, hi as isize)
            }
        }
    }
}

fn interval_from_positions(
    d: &PairDiagram,
    j: &Interval,
    lo: usize,
    hi: isize,
) -> Option<Interval> {
    if hi < lo as isize {
        return None;
    }
    let hi = hi as usize;
    let n = d.n();
    let crossings: Vec<usize> = (lo..=hi).map(|p| j.crossings[p]).collect();
    let start_gap = (crossings[0] + n - 1) % n;
    let end_gap = *crossings.last().unwrap();
    Some(Interval {
        start_gap,
        end_gap,
        crossings,
    })
}

/// Directed halves for the sub-arc of `a` from interval position `from` to
/// `to`, staying inside the interval.
fn a_walk(d: &PairDiagram, j: &Interval, from: usize, to: usize) -> Vec<HalfId> {
    let mut out = Vec::new();
    if from <= to {
        for k in from..to {
            let gap = a_edge(j.crossings[k]);
            out.extend(d.complex.expand_old_half(2 * gap));
        }
    } else {
        for k in (to..from).rev() {
            let gap = a_edge(j.crossings[k]);
            out.extend(d.complex.expand_old_half(2 * gap + 1));
        }
    }
    out
}

/// The closed walk whose pushoff realizes the replacement curve.
fn replacement_walk(d: &PairDiagram, j: &Interval, m: &ReplacementMove) -> Vec<HalfId> {
    let mut halves = Vec::new();
    match m.kind {
        MoveKind::NonWave | MoveKind::Wave => {
            // run the arc in its own b-direction, then close along `a` from
            // the arrival endpoint back to the start endpoint
            let (u, _) = d.arc_ends(m.arcs[0]);
            let start = j.position(u).unwrap();
            let other = if start == m.p { m.q } else { m.p };
            halves.extend(arc_walk_directed(d, j, m.arcs[0], start, other));
            halves.extend(a_walk(d, j, other, start));
        }
        MoveKind::DoubleWaveSharedEnd => {
            // composition: first arc from q1 to p1, along a from p1 to p2,
            // second arc from p2 to q2, along a from q2 back to q1
            let (p1, q1) = (m.p, m.q);
            let (p2, q2) = (m.p2.unwrap(), m.q2.unwrap());
            halves.extend(arc_walk_directed(d, j, m.arcs[0], q1, p1));
            halves.extend(a_walk(d, j, p1, p2));
            halves.extend(arc_walk_directed(d, j, m.arcs[1], p2, q2));
            halves.extend(a_walk(d, j, q2, q1));
        }
        MoveKind::DoubleWaveCoEnd => {
            let (p1, q1) = (m.p, m.q);
            let (p2, q2) = (m.p2.unwrap(), m.q2.unwrap());
            if m.mirrored {
                // shared left end: w1 from p1 to q1, along a q1 -> q2,
                // w2 from q2 to p2 (= p1)
                halves.extend(arc_walk_directed(d, j, m.arcs[0], p1, q1));
                halves.extend(a_walk(d, j, q1, q2));
                halves.extend(arc_walk_directed(d, j, m.arcs[1], q2, p2));
            } else {
                halves.extend(arc_walk_directed(d, j, m.arcs[0], q1, p1));
                halves.extend(a_walk(d, j, p1, p2));
                halves.extend(arc_walk_directed(d, j, m.arcs[1], p2, q2));
            }
        }
    }
    halves
}

/// Arc traversal from the endpoint at position `from` toward position `to`.
fn arc_walk_directed(
    d: &PairDiagram,
    j: &Interval,
    arc: usize,
    from: usize,
    _to: usize,
) -> Vec<HalfId> {
    let n = d.n();
    let (u, _v) = d.arc_ends(arc);
    let forward = j.position(u) == Some(from);
    let old_half = if forward {
        2 * b_edge(n, arc)
    } else {
        2 * b_edge(n, arc) + 1
    };
    d.complex.expand_old_half(old_half)
}

pub fn apply_move(
    d: &PairDiagram,
    j: &Interval,
    m: &ReplacementMove,
) -> Result<MoveOutcome, RepError> {
    j.validate(d)?;
    let (lo, hi) = kept_range(m);
    let j1 = interval_from_positions(d, j, lo, hi);

    let halves = replacement_walk(d, j, m);
    let steps: Vec<WalkStep> = halves.iter().map(|&h| WalkStep { half: h, side: 1 }).collect();
    let raw = render_pushoff(&d.complex, &steps)?;
    let a1 = reduce_curve(&d.complex, &raw)?;

    // exact intersection with b, and the intersection-decrease checks
    let (a1t, bt, i_ab) = tighten_pair(&d.complex, &a1, &d.b_curve)?;
    let expected = j1.as_ref().map_or(0, |x| x.len())
        + if m.kind == MoveKind::DoubleWaveSharedEnd { 1 } else { 0 };
    if i_ab != expected {
        return Err(RepError::NotMinimal(format!(
            "replacement curve meets b {i_ab} times, expected {expected} (move {:?})",
            m.kind
        )));
    }
    if i_ab >= j.len() {
        return Err(RepError::NotMinimal(format!(
            "no intersection decrease: {} -> {i_ab}",
            j.len()
        )));
    }
    let a1_class = surfkit::ops::classify_curve(&d.complex, &a1)?;
    if a1_class == CurveClass::Trivial {
        return Err(RepError::NotMinimal(
            "replacement curve is null-homotopic".into(),
        ));
    }
    let new_diagram = if a1_class == CurveClass::Essential && i_ab > 0 {
        derive::derive_pattern(&d.complex, &a1t, &bt)?
            .map(PairDiagram::new)
            .transpose()?
    } else {
        None
    };
    Ok(MoveOutcome {
        j1,
        a1,
        a1_class,
        crossings_with_b: i_ab,
        new_diagram,
    })
}

//! Rendering pushoffs of closed walks in the skeleton as transversal curves.
//!
//! A walk step is a directed edge traversal (a half-edge) together with the
//! side the strand runs on (+1 = left of the traversal, -1 = right; the
//! face to the left of side `h` is `face_of_side(h)`). At each vertex the
//! strand turns from alongside the incoming edge to alongside the outgoing
//! one, crossing the germs in between; the turn with fewer crossings is
//! taken (ties go counterclockwise).

use crate::complex::SurfaceComplex;
use crate::curve::{Chord, ChordEnd, TransversalCurve};
use crate::rat::Rat;
use crate::ribbon::{edge_of, pair, HalfId};
use crate::SurfError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkStep {
    /// Directed edge traversal: from `vertex_of(half)` to the far end.
    pub half: HalfId,
    /// +1 = strand on the left of the traversal, -1 = right.
    pub side: i8,
}

/// A crossing the strand makes, recorded by the side touched first.
#[derive(Clone, Debug)]
struct StrandCrossing {
    near: ChordEnd,
}

pub fn render_pushoff(
    cx: &SurfaceComplex,
    walk: &[WalkStep],
) -> Result<TransversalCurve, SurfError> {
    if walk.is_empty() {
        return Err(SurfError::InvalidCurve("empty walk".into()));
    }
    let m = walk.len();
    for k in 0..m {
        let head = cx.vertex_of(pair(walk[k].half));
        let next_tail = cx.vertex_of(walk[(k + 1) % m].half);
        if head != next_tail {
            return Err(SurfError::InvalidCurve(format!(
                "walk steps {k} and {} do not meet at a vertex",
                (k + 1) % m
            )));
        }
        if walk[k].side != 1 && walk[k].side != -1 {
            return Err(SurfError::InvalidCurve("side must be +-1".into()));
        }
    }

    // Gather crossings connector by connector. Coordinates are allocated
    // nearest-to-the-turn-vertex, tracked per (edge, from-which-end).
    let mut crossings: Vec<StrandCrossing> = Vec::new();
    // allocated distances from each vertex-end of each edge
    let mut alloc: Vec<(usize, HalfId, Rat)> = Vec::new(); // (vertex, germ, dist)

    for k in 0..m {
        let g_in = pair(walk[k].half);
        let g_out = walk[(k + 1) % m].half;
        let v = cx.vertex_of(g_in);
        let s_in = walk[k].side;
        let s_out = walk[(k + 1) % m].side;
        // Gaps are named by their clockwise germ: gap(g) lies between g and
        // rot_next(g). Arriving on the left of the traversal puts the strand
        // in the gap counterclockwise of g_in.
        let gap_a = if s_in == 1 { g_in } else { cx.rot_prev(g_in) };
        let gap_b = if s_out == 1 {
            cx.rot_prev(g_out)
        } else {
            g_out
        };
        // Count both ways around.
        let rot = &cx.graph.rotations[v];
        let d = rot.len();
        let pos = |g: HalfId| rot.iter().position(|&x| x == g).unwrap();
        let pa = pos(gap_a);
        let pb = pos(gap_b);
        let ccw_len = (pb + d - pa) % d;
        let cw_len = (pa + d - pb) % d;
        // CCW from gap(x) crosses rot_next(x), landing in gap(rot_next(x)).
        let germs: Vec<HalfId> = if ccw_len <= cw_len {
            (0..ccw_len).map(|i| rot[(pa + 1 + i) % d]).collect()
        } else {
            (0..cw_len).map(|i| rot[(pa + d - i) % d]).collect()
        };
        let ccw = ccw_len <= cw_len;
        for g in germs {
            // near side: CCW crossings touch the germ side, CW the pair side
            let near_side = if ccw { g } else { pair(g) };
            // distance from v along the edge, strictly closer than anything
            // already present (walk events or prior allocations)
            let e = edge_of(g);
            let mut closest = Rat::one();
            for (_av, ag, at) in &alloc {
                if edge_of(*ag) == e {
                    // distance measured from this germ's end of the edge
                    let dist = if *ag == g { at.clone() } else { &Rat::one() - at };
                    if dist < closest {
                        closest = dist;
                    }
                }
            }
            let t_near = Rat::mid(&Rat::zero(), &closest);
            alloc.push((v, g, t_near.clone()));
            let end = if near_side == g {
                ChordEnd {
                    side: g,
                    t: t_near,
                }
            } else {
                ChordEnd {
                    side: pair(g),
                    t: &Rat::one() - &t_near,
                }
            };
            crossings.push(StrandCrossing { near: end });
        }
    }

    if crossings.is_empty() {
        // The pushoff crosses nothing; it is a trivial loop inside the face
        // alongside the first step.
        let h = walk[0].half;
        let f = if walk[0].side == 1 {
            cx.face_of_side(h)
        } else {
            cx.face_of_side(pair(h))
        };
        return Ok(TransversalCurve::trivial_in(f));
    }

    // Assemble chords between consecutive crossings.
    let n = crossings.len();
    let mut chords = Vec::with_capacity(n);
    for i in 0..n {
        let cur = &crossings[i];
        let nxt = &crossings[(i + 1) % n];
        let enter = ChordEnd {
            side: pair(cur.near.side),
            t: &Rat::one() - &cur.near.t,
        };
        let face = cx.face_of_side(enter.side);
        if cx.face_of_side(nxt.near.side) != face {
            return Err(SurfError::InvalidCurve(format!(
                "pushoff chord {i} spans inconsistent faces"
            )));
        }
        chords.push(Chord {
            face,
            enter,
            exit: nxt.near.clone(),
        });
    }
    let mut curve = TransversalCurve {
        chords,
        home_face: None,
    };
    curve.respace(cx);
    curve.validate(cx)?;
    Ok(curve)
}

/// Pushoff of a full simple closed skeleton cycle given as directed halves,
/// on one side.
pub fn cycle_pushoff(
    cx: &SurfaceComplex,
    halves: &[HalfId],
    side: i8,
) -> Result<TransversalCurve, SurfError> {
    let steps: Vec<WalkStep> = halves.iter().map(|&h| WalkStep { half: h, side }).collect();
    render_pushoff(cx, &steps)
}

//! Enumeration of legal replacement moves for a pattern and interval.

use crate::{Interval, PairDiagram, RepError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use surfkit::diagrams::{a_edge, b_edge};
use surfkit::overlay::cut_along_edges;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    NonWave,
    Wave,
    DoubleWaveSharedEnd,
    DoubleWaveCoEnd,
}

/// A legal replacement move. Endpoints are positions inside the interval
/// (indices into `J.crossings`), sorted so `p < q` (and `p2 < q2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplacementMove {
    pub kind: MoveKind,
    /// Arc ids of `b` (one for single-arc moves, two for double waves).
    pub arcs: Vec<usize>,
    pub p: usize,
    pub q: usize,
    pub p2: Option<usize>,
    pub q2: Option<usize>,
    /// Side of `a` the (first) wave approaches from; 0 for non-waves.
    pub side: i8,
    /// For `DoubleWaveCoEnd`: true when the shared endpoint is the left one
    /// (`p1 = p2` rather than `q1 = q2`).
    pub mirrored: bool,
}

/// An arc of `b` with both endpoints in `J`, classified.
#[derive(Clone, Debug)]
pub struct ArcInJ {
    pub arc: usize,
    /// interval positions of the two endpoints, sorted
    pub p: usize,
    pub q: usize,
    /// wave side if both ends approach from the same side
    pub wave_side: Option<i8>,
}

pub fn arcs_in_interval(d: &PairDiagram, j: &Interval) -> Vec<ArcInJ> {
    let n = d.n();
    let mut out = Vec::new();
    for arc in 0..n {
        let (u, v) = d.arc_ends(arc);
        let (pu, pv) = match (j.position(u), j.position(v)) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        let side_u = d.depart_side(u);
        let side_v = d.arrive_side(v);
        let wave_side = if side_u == side_v { Some(side_u) } else { None };
        let (p, q) = if pu <= pv { (pu, pv) } else { (pv, pu) };
        out.push(ArcInJ {
            arc,
            p,
            q,
            wave_side,
        });
    }
    out
}

/// Is wave `w2` parallel to wave `w` relative to `J`? Tested by cutting
/// along the 4-gon cycle made of the two arcs and the connecting pieces of
/// `a`; parallel means a complementary disk without punctures appears.
fn waves_parallel(d: &PairDiagram, j: &Interval, w: &ArcInJ, w2: &ArcInJ) -> Result<bool, RepError> {
    let n = d.n();
    // connecting a-paths: from crossing at position w.p to crossing at w2.p,
    // and from crossing at w2.q to crossing at w.q (all inside J)
    let mut edges: BTreeSet<usize> = BTreeSet::new();
    for old in [b_edge(n, w.arc), b_edge(n, w2.arc)] {
        for &e in &d.complex.old_edge_chains[old] {
            edges.insert(e);
        }
    }
    let mut add_a_path = |from_pos: usize, to_pos: usize, edges: &mut BTreeSet<usize>| {
        // gaps between consecutive interval crossings from from_pos to to_pos
        for k in from_pos..to_pos {
            let c = j.crossings[k];
            let old = a_edge(c); // gap c joins crossing c to c+1
            for &e in &d.complex.old_edge_chains[old] {
                edges.insert(e);
            }
        }
    };
    add_a_path(w.p, w2.p, &mut edges);
    add_a_path(w2.q, w.q, &mut edges);
    let cut = cut_along_edges(&d.complex, &edges)?;
    Ok(cut
        .reports
        .iter()
        .any(|r| r.genus == 0 && r.boundary_circles == 1 && r.punctures == 0))
}

/// Is the wave innermost: no same-side wave strictly nested inside it and
/// parallel to it relative to `J`?
pub fn wave_is_innermost(
    d: &PairDiagram,
    j: &Interval,
    w: &ArcInJ,
    arcs: &[ArcInJ],
) -> Result<bool, RepError> {
    for w2 in arcs {
        if w2.arc == w.arc || w2.wave_side != w.wave_side {
            continue;
        }
        if w.p < w2.p && w2.q < w.q && waves_parallel(d, j, w, w2)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Complete list of legal moves for `(d, J)`.
pub fn enumerate_moves(d: &PairDiagram, j: &Interval) -> Result<Vec<ReplacementMove>, RepError> {
    j.validate(d)?;
    let arcs = arcs_in_interval(d, j);
    let mut out = Vec::new();
    for w in &arcs {
        match w.wave_side {
            None => out.push(ReplacementMove {
                kind: MoveKind::NonWave,
                arcs: vec![w.arc],
                p: w.p,
                q: w.q,
                p2: None,
                q2: None,
                side: 0,
                mirrored: false,
            }),
            Some(s) => {
                if wave_is_innermost(d, j, w, &arcs)? {
                    out.push(ReplacementMove {
                        kind: MoveKind::Wave,
                        arcs: vec![w.arc],
                        p: w.p,
                        q: w.q,
                        p2: None,
                        q2: None,
                        side: s,
                        mirrored: false,
                    });
                }
            }
        }
    }
    // double waves: waves sharing an endpoint crossing (via its two germs)
    let waves: Vec<&ArcInJ> = arcs.iter().filter(|w| w.wave_side.is_some()).collect();
    let mut seen_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for w1 in &waves {
        for w2 in &waves {
            if w1.arc >= w2.arc {
                continue;
            }
            if w1.wave_side == w2.wave_side {
                continue;
            }
            // shared endpoint crossings
            let (u1, v1) = d.arc_ends(w1.arc);
            let (u2, v2) = d.arc_ends(w2.arc);
            let shares = [u1, v1]
                .iter()
                .any(|x| *x == u2 || *x == v2);
            if !shares {
                continue;
            }
            if !seen_pairs.insert((w1.arc, w2.arc)) {
                continue;
            }
            // classify: with both (p, q) sorted along J, the shared position
            // is either q1 = p2 / q2 = p1 (shared end), or q1 = q2 / p1 = p2
            // (co-end, possibly mirrored). Both coincidences at once counts
            // as a co-end.
            let (wa, wb, kind, mirrored) = if w1.q == w2.q || w1.p == w2.p {
                let mirrored = w1.p == w2.p && w1.q != w2.q;
                (w1, w2, MoveKind::DoubleWaveCoEnd, mirrored)
            } else if w1.q == w2.p {
                (w1, w2, MoveKind::DoubleWaveSharedEnd, false)
            } else if w2.q == w1.p {
                (w2, w1, MoveKind::DoubleWaveSharedEnd, false)
            } else {
                continue; // shared crossing but not via interval positions:
                          // impossible, both germs sit at one crossing
            };
            out.push(ReplacementMove {
                kind,
                arcs: vec![wa.arc, wb.arc],
                p: wa.p,
                q: wa.q,
                p2: Some(wb.p),
                q2: Some(wb.q),
                side: wa.wave_side.unwrap(),
                mirrored,
            });
        }
    }
    // deterministic order
    out.sort_by_key(|m| {
        (
            match m.kind {
                MoveKind::NonWave => 0,
                MoveKind::Wave => 1,
                MoveKind::DoubleWaveSharedEnd => 2,
                MoveKind::DoubleWaveCoEnd => 3,
            },
            m.arcs.clone(),
        )
    });
    Ok(out)
}

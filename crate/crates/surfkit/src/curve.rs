//! Curves transverse to the skeleton, recorded as cyclic chord words.
//!
//! A chord lives in one (disk) face and joins two boundary points, each
//! given by a directed side and an exact rational coordinate along it.
//! Consecutive chords share the underlying edge point. Reduction removes
//! bigons against the skeleton (U-turns) and slides corners across
//! low-valence vertices; the canonical key is the lexicographically least
//! rotation of the reduced word over both orientations.

use crate::complex::{SurfaceComplex, VertexKind};
use crate::rat::Rat;
use crate::ribbon::{edge_of, pair, EdgeId, FaceId, HalfId};
use crate::SurfError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordEnd {
    /// Directed side of the face the chord touches.
    pub side: HalfId,
    /// Coordinate along the side direction, strictly between 0 and 1.
    pub t: Rat,
}

impl ChordEnd {
    /// Coordinate measured along the underlying edge (from the tail half).
    pub fn edge_param(&self) -> Rat {
        if self.side % 2 == 0 {
            self.t.clone()
        } else {
            &Rat::one() - &self.t
        }
    }

    pub fn edge(&self) -> EdgeId {
        edge_of(self.side)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chord {
    pub face: FaceId,
    pub enter: ChordEnd,
    pub exit: ChordEnd,
}

/// Classification of a curve on its surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveClass {
    Trivial,
    Peripheral,
    Essential,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalCurve {
    pub chords: Vec<Chord>,
    /// Face containing the curve when the chord word is empty.
    pub home_face: Option<FaceId>,
}

/// Canonical equality key: the reduced chord word as side pairs, rotated
/// and reflected to its lexicographic minimum.
pub type CurveKey = Vec<(FaceId, HalfId, HalfId)>;

impl TransversalCurve {
    pub fn trivial_in(face: FaceId) -> Self {
        TransversalCurve {
            chords: Vec::new(),
            home_face: Some(face),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn validate(&self, cx: &SurfaceComplex) -> Result<(), SurfError> {
        if self.chords.is_empty() {
            return match self.home_face {
                Some(f) if f < cx.face_count() => Ok(()),
                _ => Err(SurfError::InvalidCurve(
                    "empty curve needs a valid home face".into(),
                )),
            };
        }
        let zero = Rat::zero();
        let one = Rat::one();
        for (k, ch) in self.chords.iter().enumerate() {
            for end in [&ch.enter, &ch.exit] {
                if cx.face_of_side(end.side) != ch.face {
                    return Err(SurfError::InvalidCurve(format!(
                        "chord {k}: side {} not on face {}",
                        end.side, ch.face
                    )));
                }
                if !(end.t > zero && end.t < one) {
                    return Err(SurfError::InvalidCurve(format!(
                        "chord {k}: coordinate out of range"
                    )));
                }
            }
            if ch.enter.side == ch.exit.side && ch.enter.t == ch.exit.t {
                return Err(SurfError::InvalidCurve(format!("chord {k} is degenerate")));
            }
            let next = &self.chords[(k + 1) % self.chords.len()];
            if next.enter.side != pair(ch.exit.side) || next.enter.edge_param() != ch.exit.edge_param()
            {
                return Err(SurfError::InvalidCurve(format!(
                    "chords {k} and {} do not share an edge point",
                    (k + 1) % self.chords.len()
                )));
            }
        }
        // Event points along each edge must be pairwise distinct.
        let mut by_edge: BTreeMap<EdgeId, Vec<Rat>> = BTreeMap::new();
        for ch in &self.chords {
            by_edge.entry(ch.enter.edge()).or_default().push(ch.enter.edge_param());
        }
        for (e, mut ts) in by_edge {
            ts.sort();
            for w in ts.windows(2) {
                if w[0] == w[1] {
                    return Err(SurfError::InvalidCurve(format!(
                        "two crossings of edge {e} coincide"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Reverses the orientation of the curve.
    pub fn reversed(&self) -> Self {
        let chords = self
            .chords
            .iter()
            .rev()
            .map(|c| Chord {
                face: c.face,
                enter: c.exit.clone(),
                exit: c.enter.clone(),
            })
            .collect();
        TransversalCurve {
            chords,
            home_face: self.home_face,
        }
    }

    fn word(&self) -> Vec<(FaceId, HalfId, HalfId)> {
        self.chords
            .iter()
            .map(|c| (c.face, c.enter.side, c.exit.side))
            .collect()
    }

    /// Canonical key of the word (least rotation over both orientations).
    /// Meaningful once the curve is reduced.
    pub fn key(&self) -> CurveKey {
        if self.chords.is_empty() {
            return Vec::new();
        }
        let mut best: Option<CurveKey> = None;
        for cand in [self.word(), self.reversed().word()] {
            let n = cand.len();
            for r in 0..n {
                let rotated: Vec<_> = (0..n).map(|i| cand[(r + i) % n]).collect();
                if best.as_ref().map_or(true, |b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
        best.unwrap()
    }

    /// Rotates/reflects the chord list so the stored word starts at its
    /// canonical key position, then respaces coordinates.
    pub fn normalize(&mut self, cx: &SurfaceComplex) {
        if self.chords.is_empty() {
            return;
        }
        let key = self.key();
        let mut cand = self.clone();
        'outer: for flip in [false, true] {
            let c = if flip { self.reversed() } else { self.clone() };
            let w = c.word();
            let n = w.len();
            for r in 0..n {
                let rotated: Vec<_> = (0..n).map(|i| w[(r + i) % n]).collect();
                if rotated == key {
                    cand = TransversalCurve {
                        chords: (0..n).map(|i| c.chords[(r + i) % n].clone()).collect(),
                        home_face: c.home_face,
                    };
                    break 'outer;
                }
            }
        }
        *self = cand;
        self.respace(cx);
    }

    /// Reassigns event coordinates to `i/(m+1)` along each edge, keeping
    /// the existing order. Isotopic to the input; canonical afterwards.
    pub fn respace(&mut self, _cx: &SurfaceComplex) {
        respace_curves(std::slice::from_mut(self));
    }

    /// Whether any two chords of this curve cross inside a face.
    pub fn self_crossings(&self, cx: &SurfaceComplex) -> usize {
        let mut count = 0;
        for i in 0..self.chords.len() {
            for j in (i + 1)..self.chords.len() {
                if self.chords[i].face == self.chords[j].face
                    && chords_cross(cx, &self.chords[i], &self.chords[j])
                {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn ensure_embedded(&self, cx: &SurfaceComplex) -> Result<(), SurfError> {
        let n = self.self_crossings(cx);
        if n > 0 {
            return Err(SurfError::NotEmbedded(format!("{n} self-crossings")));
        }
        Ok(())
    }
}

/// Cyclic boundary key of a chord end within its face: side position first,
/// then the coordinate along the side.
pub fn boundary_key(cx: &SurfaceComplex, end: &ChordEnd) -> (usize, Rat) {
    (cx.pos_of_side(end.side), end.t.clone())
}

/// Do two chords of the same face cross? Exact: their endpoint keys
/// interleave around the face boundary.
pub fn chords_cross(cx: &SurfaceComplex, a: &Chord, b: &Chord) -> bool {
    debug_assert_eq!(a.face, b.face);
    let a0 = boundary_key(cx, &a.enter);
    let a1 = boundary_key(cx, &a.exit);
    let b0 = boundary_key(cx, &b.enter);
    let b1 = boundary_key(cx, &b.exit);
    // b0 strictly inside the arc (a0 -> a1) going forward?
    let inside = |x: &(usize, Rat)| -> bool {
        // cyclic: x in (a0, a1)
        if a0 < a1 {
            *x > a0 && *x < a1
        } else {
            *x > a0 || *x < a1
        }
    };
    if a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1 {
        return false; // shared endpoints never happen for distinct events
    }
    inside(&b0) != inside(&b1)
}

/// Canonically respaces the events of a family of curves along every edge,
/// preserving their relative order (a simultaneous ambient isotopy).
pub fn respace_curves(curves: &mut [TransversalCurve]) {
    // Collect (edge, param) -> list of (curve, chord, end)
    let mut by_edge: BTreeMap<EdgeId, Vec<(Rat, usize, usize, u8)>> = BTreeMap::new();
    for (ci, c) in curves.iter().enumerate() {
        for (k, ch) in c.chords.iter().enumerate() {
            by_edge
                .entry(ch.enter.edge())
                .or_default()
                .push((ch.enter.edge_param(), ci, k, 0));
            by_edge
                .entry(ch.exit.edge())
                .or_default()
                .push((ch.exit.edge_param(), ci, k, 1));
        }
    }
    for (_e, mut events) in by_edge {
        events.sort_by(|x, y| (&x.0, x.1, x.2, x.3).cmp(&(&y.0, y.1, y.2, y.3)));
        // Group the two ends of consecutive chords of one curve (they share
        // an edge point); coincidences across curves are split apart.
        let mut groups: Vec<Vec<(usize, usize, u8)>> = Vec::new();
        let mut last: Option<(Rat, usize)> = None;
        for (t, ci, k, which) in events {
            let same_point = match &last {
                Some((lt, lc)) => *lt == t && *lc == ci && groups.last().unwrap().len() == 1,
                None => false,
            };
            if same_point {
                groups.last_mut().unwrap().push((ci, k, which));
            } else {
                last = Some((t.clone(), ci));
                groups.push(vec![(ci, k, which)]);
            }
        }
        let m = groups.len() as i64;
        for (gi, group) in groups.iter().enumerate() {
            let t_new = Rat::new(gi as i64 + 1, m + 1);
            for &(ci, k, which) in group {
                let end = if which == 0 {
                    &mut curves[ci].chords[k].enter
                } else {
                    &mut curves[ci].chords[k].exit
                };
                end.t = if end.side % 2 == 0 {
                    t_new.clone()
                } else {
                    &Rat::one() - &t_new
                };
            }
        }
    }
}

/// Removes skeleton bigons (empty-pocket U-turns) and slides corners across
/// vertices of valence below four, then normalizes. Idempotent.
pub fn reduce_curve(cx: &SurfaceComplex, curve: &TransversalCurve) -> Result<TransversalCurve, SurfError> {
    curve.validate(cx)?;
    let dbg = std::env::var("REDUCE_DEBUG").is_ok();
    let mut c = curve.clone();
    loop {
        if c.chords.is_empty() {
            break;
        }
        if let Some(k) = find_empty_uturn(cx, &c) {
            if dbg { eprintln!("uturn at {k}: {:?} sc={}", c.chords.iter().map(|x|(x.face,x.enter.side,x.exit.side)).collect::<Vec<_>>(), c.self_crossings(cx)); }
            remove_uturn(&mut c, k);
            continue;
        }
        if let Some(k) = find_low_valence_corner(cx, &c) {
            if dbg { eprintln!("slide at {k}: {:?} sc={}", c.chords.iter().map(|x|(x.face,x.enter.side,x.exit.side)).collect::<Vec<_>>(), c.self_crossings(cx)); }
            slide_corner(cx, &mut c, k);
            if dbg { eprintln!("  after: {:?} sc={}", c.chords.iter().map(|x|(x.face,x.enter.side,x.exit.side)).collect::<Vec<_>>(), c.self_crossings(cx)); }
            continue;
        }
        break;
    }
    c.normalize(cx);
    c.validate(cx)?;
    Ok(c)
}

/// Finds a chord entering and exiting across the same side with no other
/// event of this curve on the edge strictly between its two parameters.
fn find_empty_uturn(_cx: &SurfaceComplex, c: &TransversalCurve) -> Option<usize> {
    'chords: for (k, ch) in c.chords.iter().enumerate() {
        if ch.enter.side != ch.exit.side {
            continue;
        }
        let e = ch.enter.edge();
        let (lo, hi) = {
            let a = ch.enter.edge_param();
            let b = ch.exit.edge_param();
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        for other in &c.chords {
            for end in [&other.enter, &other.exit] {
                if end.edge() == e {
                    let t = end.edge_param();
                    if t > lo && t < hi {
                        continue 'chords;
                    }
                }
            }
        }
        return Some(k);
    }
    None
}

fn remove_uturn(c: &mut TransversalCurve, k: usize) {
    let n = c.chords.len();
    debug_assert!(n >= 2);
    let prev = (k + n - 1) % n;
    let next = (k + 1) % n;
    if prev == next {
        // Two-chord curve collapsing to a trivial loop in the outer face.
        let f = c.chords[prev].face;
        c.chords.clear();
        c.home_face = Some(f);
        return;
    }
    let merged = Chord {
        face: c.chords[prev].face,
        enter: c.chords[prev].enter.clone(),
        exit: c.chords[next].exit.clone(),
    };
    debug_assert_eq!(c.chords[prev].face, c.chords[next].face);
    // Rebuild without k, with prev/next merged.
    let mut out = Vec::with_capacity(n - 2);
    let mut i = next;
    out.push(merged);
    loop {
        i = (i + 1) % n;
        if i == prev {
            break;
        }
        out.push(c.chords[i].clone());
    }
    c.chords = out;
}

/// A chord cutting a single corner at a sliding-eligible vertex of valence
/// < 4, with both ends closest to that vertex on their sides.
fn find_low_valence_corner(cx: &SurfaceComplex, c: &TransversalCurve) -> Option<usize> {
    for (k, ch) in c.chords.iter().enumerate() {
        if corner_cut_vertex(cx, c, ch).is_some() {
            return Some(k);
        }
    }
    None
}

/// If `ch` cuts exactly the corner at a non-puncture vertex of valence < 4
/// and no other event of `c` sits between the chord ends and the vertex,
/// returns that vertex.
fn corner_cut_vertex(cx: &SurfaceComplex, c: &TransversalCurve, ch: &Chord) -> Option<usize> {
    let w = &cx.faces[ch.face].word;
    let n = w.len();
    let pe = cx.pos_of_side(ch.enter.side);
    let px = cx.pos_of_side(ch.exit.side);
    // corner between consecutive positions i, i+1
    let (first, second) = if (pe + 1) % n == px {
        (&ch.enter, &ch.exit)
    } else if (px + 1) % n == pe {
        (&ch.exit, &ch.enter)
    } else {
        return None;
    };
    let v = cx.vertex_of(pair(first.side));
    let kind = cx.vertex_kinds[v];
    if kind == VertexKind::Puncture {
        return None;
    }
    if cx.graph.rotations[v].len() >= 4 {
        return None;
    }
    // `first` must be the event closest to the far end of its side, and
    // `second` the closest to the near end of its side.
    let closest = |end: &ChordEnd, toward_one: bool| -> bool {
        let e = end.edge();
        let t0 = end.edge_param();
        // side direction: the corner vertex sits at the head of `first.side`
        // (param 1 along the side), i.e. edge param 1 if side is even else 0.
        let corner_at_one = if toward_one { end.side % 2 == 0 } else { end.side % 2 == 1 };
        for other in &c.chords {
            for oe in [&other.enter, &other.exit] {
                if oe.edge() != e {
                    continue;
                }
                let t = oe.edge_param();
                if t == t0 {
                    continue;
                }
                if corner_at_one && t > t0 {
                    return false;
                }
                if !corner_at_one && t < t0 {
                    return false;
                }
            }
        }
        true
    };
    // corner vertex is at the head of `first.side` and the tail of `second.side`
    if !closest(first, true) || !closest(second, false) {
        return None;
    }
    Some(v)
}

/// Slides the corner-cutting chord `k` across its vertex, replacing its two
/// crossings by crossings of the complementary fan of edges at the vertex.
///
/// Let the cut corner sit between germs A = pair(first side) and
/// B = rot_next(A) at v. The fan is every other germ, in CCW order from B
/// to A. A strand oriented with the boundary (enter on the first side)
/// crosses the fan in reverse order touching the pair sides first; a strand
/// against the boundary crosses in fan order touching the germ sides.
fn slide_corner(cx: &SurfaceComplex, c: &mut TransversalCurve, k: usize) {
    let ch = c.chords[k].clone();
    let w = &cx.faces[ch.face].word;
    let n = w.len();
    let pe = cx.pos_of_side(ch.enter.side);
    let px = cx.pos_of_side(ch.exit.side);
    let forward = (pe + 1) % n == px;
    let first_side = if forward { ch.enter.side } else { ch.exit.side };
    let second_side = if forward { ch.exit.side } else { ch.enter.side };
    let g1 = pair(first_side); // germ at v
    let v = cx.vertex_of(g1);
    let rot = &cx.graph.rotations[v];
    let d = rot.len();
    let p1 = rot.iter().position(|&h| h == g1).unwrap();
    let p2 = rot.iter().position(|&h| h == second_side).unwrap();
    debug_assert_eq!((p1 + 1) % d, p2, "cut corner must be a rotation gap");
    let mut fan = Vec::new();
    let mut i = (p2 + 1) % d;
    while i != p1 {
        fan.push(rot[i]);
        i = (i + 1) % d;
    }
    assert!(!fan.is_empty(), "slide across valence-2 vertex unsupported");

    // Strand order and which side of each fan edge is touched first.
    let crossings: Vec<HalfId> = if forward {
        fan.iter().rev().map(|&g| pair(g)).collect()
    } else {
        fan
    };

    // Allocate event coordinates near v on each crossed edge, keeping new
    // events strictly closer to v than everything already present
    // (including earlier allocations on the same edge for loop edges).
    let mut allocated: Vec<(EdgeId, Rat)> = Vec::new(); // distance from v
    let mut ends_in_order: Vec<ChordEnd> = Vec::new();
    for &s in &crossings {
        // the germ at v on this edge:
        let germ = if cx.vertex_of(s) == v { s } else { pair(s) };
        debug_assert_eq!(cx.vertex_of(germ), v);
        let e = edge_of(germ);
        let mut closest = Rat::one();
        for other in &c.chords {
            for oe in [&other.enter, &other.exit] {
                if oe.edge() == e {
                    let t = if germ % 2 == 0 {
                        oe.edge_param()
                    } else {
                        &Rat::one() - &oe.edge_param()
                    };
                    if t < closest {
                        closest = t;
                    }
                }
            }
        }
        for (ae, at) in &allocated {
            if *ae == e && *at < closest {
                closest = at.clone();
            }
        }
        let t_near = Rat::mid(&Rat::zero(), &closest);
        allocated.push((e, t_near.clone()));
        // coordinate on side `germ` is t_near; on pair(germ) it is 1 - t_near
        let end = if s == germ {
            ChordEnd { side: germ, t: t_near }
        } else {
            ChordEnd {
                side: pair(germ),
                t: &Rat::one() - &t_near,
            }
        };
        ends_in_order.push(end);
    }

    let kn = c.chords.len();
    let prev_idx = (k + kn - 1) % kn;
    let next_idx = (k + 1) % kn;
    assert!(prev_idx != k && next_idx != k, "cannot slide a one-chord curve");

    let opposite = |end: &ChordEnd| ChordEnd {
        side: pair(end.side),
        t: &Rat::one() - &end.t,
    };

    // The path of replacement chords crossing the fan, starting in the face
    // of chord prev (whose exit moves to the first fan crossing) and ending
    // in the face of chord next (whose enter moves to the last one). For a
    // two-chord curve prev and next are the same chord and receive both
    // rewrites.
    let mut rewritten_prev = c.chords[prev_idx].clone();
    let mut new_chords: Vec<Chord> = Vec::new();
    let mut cur_face = rewritten_prev.face;
    let mut incoming: Option<ChordEnd> = None;
    for (i, end) in ends_in_order.iter().enumerate() {
        debug_assert_eq!(
            cx.face_of_side(end.side),
            cur_face,
            "fan crossing side must bound the current face"
        );
        if i == 0 {
            rewritten_prev.exit = end.clone();
        } else {
            new_chords.push(Chord {
                face: cur_face,
                enter: incoming.clone().unwrap(),
                exit: end.clone(),
            });
        }
        let into = opposite(end);
        cur_face = cx.face_of_side(into.side);
        incoming = Some(into);
    }
    if prev_idx == next_idx {
        debug_assert_eq!(cur_face, rewritten_prev.face);
        rewritten_prev.enter = incoming.unwrap();
        let mut out = vec![rewritten_prev];
        out.extend(new_chords);
        c.chords = out;
        return;
    }
    let mut rewritten_next = c.chords[next_idx].clone();
    debug_assert_eq!(cur_face, rewritten_next.face);
    rewritten_next.enter = incoming.unwrap();

    let mut out: Vec<Chord> = Vec::new();
    out.push(rewritten_prev);
    out.extend(new_chords);
    out.push(rewritten_next);
    let mut i = next_idx;
    loop {
        i = (i + 1) % kn;
        if i == prev_idx {
            break;
        }
        out.push(c.chords[i].clone());
    }
    c.chords = out;
}

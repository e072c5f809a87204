//! Curve operations built on the overlay engine: putting pairs of curves in
//! minimal position, exact geometric intersection numbers, complement
//! classification, and isotopy tests.

use crate::complex::SurfaceComplex;
use crate::curve::{respace_curves, Chord, ChordEnd, CurveClass, TransversalCurve};
use crate::overlay::{ComponentReport, OvEdge, OvVertex, Overlay};
use crate::rat::Rat;
use crate::ribbon::{pair, EdgeId};
use crate::SurfError;
use std::collections::BTreeSet;

/// Puts the pair in minimal position by removing innermost bigons, and
/// returns the tightened curves with their exact geometric intersection
/// number. Both inputs must be individually embedded.
pub fn tighten_pair(
    cx: &SurfaceComplex,
    c1: &TransversalCurve,
    c2: &TransversalCurve,
) -> Result<(TransversalCurve, TransversalCurve, usize), SurfError> {
    let mut a = c1.clone();
    let mut b = c2.clone();
    a.ensure_embedded(cx)?;
    b.ensure_embedded(cx)?;
    let mut last_n: Option<usize> = None;
    loop {
        let mut fam = [a.clone(), b.clone()];
        respace_curves(&mut fam);
        let [fa, fb] = fam;
        a = fa;
        b = fb;
        if a.is_empty() || b.is_empty() {
            return Ok((a, b, 0));
        }
        let ov = Overlay::build(cx, vec![a.clone(), b.clone()], BTreeSet::new())?;
        let n = ov.crossing_count(0, 1);
        if let Some(m) = last_n {
            assert!(n < m, "bigon removal must reduce crossings ({m} -> {n})");
        }
        last_n = Some(n);
        if n == 0 {
            return Ok((a, b, 0));
        }
        let cut = ov.cut();
        match find_bigon(&ov, &cut) {
            None => return Ok((a, b, n)),
            Some(bigon) => {
                a = splice_across_bigon(cx, &ov, &cut, &bigon)?;
            }
        }
    }
}

/// Geometric intersection number of two reduced curves.
pub fn intersection_number(
    cx: &SurfaceComplex,
    c1: &TransversalCurve,
    c2: &TransversalCurve,
) -> Result<usize, SurfError> {
    for c in [c1, c2] {
        let r = crate::curve::reduce_curve(cx, c)?;
        if r.key() != c.key() {
            return Err(SurfError::NotReduced);
        }
    }
    if c1.key() == c2.key() {
        // i(c, c) = 0 for simple curves
        return Ok(0);
    }
    let (_, _, n) = tighten_pair(cx, c1, c2)?;
    Ok(n)
}

/// Runs a single bigon-removal round; test/debug helper.
pub fn tighten_once_for_debug(
    cx: &SurfaceComplex,
    c1: &TransversalCurve,
    c2: &TransversalCurve,
) -> Result<Option<TransversalCurve>, SurfError> {
    let mut fam = [c1.clone(), c2.clone()];
    respace_curves(&mut fam);
    let [fa, fb] = fam;
    let ov = Overlay::build(cx, vec![fa, fb], BTreeSet::new())?;
    let cut = ov.cut();
    match find_bigon(&ov, &cut) {
        None => Ok(None),
        Some(bigon) => Ok(Some(splice_across_bigon(cx, &ov, &cut, &bigon)?)),
    }
}

/// One innermost bigon of the two-curve overlay: a disk component with no
/// punctures whose boundary meets exactly two crossings, one arc from each
/// curve.
pub struct Bigon {
    /// Sides of curve 0 on the bigon boundary, in walk order.
    pub run0: Vec<usize>,
    /// Sides of curve 1 on the bigon boundary, in walk order.
    pub run1: Vec<usize>,
    pub component: usize,
}

pub fn find_bigon(ov: &Overlay, cut: &crate::overlay::CutComponents) -> Option<Bigon> {
    for circle in &cut.circles {
        let rep = &cut.reports[circle.component];
        if rep.genus != 0 || rep.punctures != 0 || rep.boundary_circles != 1 {
            continue;
        }
        if circle.crossing_corners != 2 || circle.touches_skeleton {
            continue;
        }
        if circle.curves.len() != 2 {
            continue;
        }
        // split the cyclic side list into the two runs
        let curve_of = |h: usize| match ov.ov_edges[h / 2] {
            OvEdge::Piece { curve, .. } => curve,
            OvEdge::Seg { .. } => unreachable!("bigon boundary has no skeleton sides"),
        };
        let n = circle.sides.len();
        // find a transition into curve 0
        let mut start = None;
        for i in 0..n {
            let prev = circle.sides[(i + n - 1) % n];
            let here = circle.sides[i];
            if curve_of(prev) == 1 && curve_of(here) == 0 {
                start = Some(i);
                break;
            }
        }
        let start = start?;
        let mut run0 = Vec::new();
        let mut run1 = Vec::new();
        for i in 0..n {
            let h = circle.sides[(start + i) % n];
            if curve_of(h) == 0 {
                if !run1.is_empty() {
                    // second transition; keep collecting run1 until wrap
                }
                if run1.is_empty() {
                    run0.push(h);
                } else {
                    // should not happen: only two runs
                    return None;
                }
            } else {
                run1.push(h);
            }
        }
        return Some(Bigon {
            run0,
            run1,
            component: circle.component,
        });
    }
    None
}

/// Rewrites curve 0 of the overlay across the bigon: its boundary arc is
/// replaced by a parallel copy of curve 1's arc on the far side, removing
/// the two corner crossings.
fn splice_across_bigon(
    cx: &SurfaceComplex,
    ov: &Overlay,
    cut: &crate::overlay::CutComponents,
    bigon: &Bigon,
) -> Result<TransversalCurve, SurfError> {
    let c1 = &ov.curves[0];
    let piece_info = |h: usize| -> (usize, usize, bool) {
        match ov.ov_edges[h / 2] {
            OvEdge::Piece { curve, chord, .. } => (curve, chord, h % 2 == 0),
            _ => unreachable!(),
        }
    };
    // Walk direction of the curve-0 run relative to curve 0's orientation:
    let (_, first0_chord, run0_forward) = piece_info(bigon.run0[0]);
    let (_, last0_chord, _) = piece_info(*bigon.run0.last().unwrap());
    // Chords of c1 at the two corners. With run0 forward, the removed arc
    // (in c1's orientation) starts at the corner after run1 and ends at the
    // corner after run0; the replacement path runs opposite to the run1 walk.
    // With run0 backward it is the reverse.
    let (k_start, k_end, replacement_sides): (usize, usize, Vec<usize>) = if run0_forward {
        // removed arc starts at corner (run1 -> run0) inside chord first0_chord
        // and ends at corner (run0 -> run1) inside chord last0_chord; the
        // replacement traverses the run1 walk backwards, so flip each side.
        let rev: Vec<usize> = bigon.run1.iter().rev().map(|&h| h ^ 1).collect();
        (first0_chord, last0_chord, rev)
    } else {
        (last0_chord, first0_chord, bigon.run1.clone())
    };
    // replacement_sides traverse curve 1's arc in the direction the new
    // strand runs (from the corner inside k_start to the corner inside k_end).

    // Junction events along the replacement: vertices between consecutive
    // sides of the run (in replacement order).
    struct Junction {
        edge: EdgeId,
        orig: Rat,
        /// true if the bigon lies toward the head (higher params)
        bigon_above: bool,
        /// side of the skeleton edge touched first by the new strand
        near_side: usize,
    }
    let mut junctions: Vec<Junction> = Vec::new();
    for w in replacement_sides.windows(2) {
        let h = w[0];
        // head vertex of side h in the replacement direction
        let v = ov.ov_vertex_at(h ^ 1);
        match v {
            OvVertex::Event { edge, index } => {
                let ev = &ov.events[&edge][index];
                debug_assert_eq!(ev.curve, 1);
                // in-bigon segment: above (index+1) or below (index)
                let above_id = ov.seg_edge_id(edge, index + 1);
                let comp_above = cut.comp_of_face[ov.ov_face_of_side(2 * above_id)];
                let bigon_above = comp_above == bigon.component;
                // sides of the skeleton edge for the chords of curve 1 here:
                // the entering chord's enter side and its pair. The new strand
                // runs in replacement direction; it first touches the side of
                // the face it is currently in, i.e. the face of the chord
                // BEFORE this junction in replacement order = face of side w[0].
                let f_prev = ov_face_of_piece_side(ov, w[0]);
                let s_in = ov.curves[1].chords[ev.chord].enter.side;
                let near_side = if cx.face_of_side(s_in) == f_prev {
                    s_in
                } else {
                    debug_assert_eq!(cx.face_of_side(pair(s_in)), f_prev);
                    pair(s_in)
                };
                junctions.push(Junction {
                    edge,
                    orig: ev.param.clone(),
                    bigon_above,
                    near_side,
                });
            }
            OvVertex::Crossing { .. } => {
                return Err(SurfError::InvalidCurve(
                    "bigon arc passes through a crossing".into(),
                ));
            }
            OvVertex::Base(_) => unreachable!("curve pieces never meet base vertices"),
        }
    }

    // Allocate offset parameters away from the bigon, tracking new points.
    let mut new_params: Vec<(EdgeId, Rat)> = Vec::new();
    let mut offsets: Vec<ChordEnd> = Vec::new();
    for j in &junctions {
        // neighbors among existing events and prior allocations
        let mut lo = Rat::zero();
        let mut hi = Rat::one();
        if let Some(evs) = ov.events.get(&j.edge) {
            for ev in evs {
                if ev.param < j.orig && ev.param > lo {
                    lo = ev.param.clone();
                }
                if ev.param > j.orig && ev.param < hi {
                    hi = ev.param.clone();
                }
            }
        }
        for (e, t) in &new_params {
            if *e == j.edge {
                if *t < j.orig && *t > lo {
                    lo = t.clone();
                }
                if *t > j.orig && *t < hi {
                    hi = t.clone();
                }
            }
        }
        let t_new = if j.bigon_above {
            Rat::mid(&lo, &j.orig)
        } else {
            Rat::mid(&j.orig, &hi)
        };
        new_params.push((j.edge, t_new.clone()));
        // express on the near side
        let t_side = if j.near_side % 2 == 0 {
            t_new
        } else {
            &Rat::one() - &t_new
        };
        offsets.push(ChordEnd {
            side: j.near_side,
            t: t_side,
        });
    }

    // Assemble the new curve 0.
    let n1 = c1.chords.len();
    let ch_start = &c1.chords[k_start];
    let ch_end = &c1.chords[k_end];
    let mut chords: Vec<Chord> = Vec::new();
    if k_start == k_end && bigon.run0.len() > 1 {
        // The removed arc runs out through this chord's exit end, around the
        // whole curve, and back in through its enter end; only the stretch
        // of this chord between the two corner crossings survives. The new
        // curve is the parallel path closed up through this chord's face.
        if offsets.is_empty() {
            // curve 0 was null-homotopic all along
            return Ok(TransversalCurve::trivial_in(ch_start.face));
        }
        let m = offsets.len();
        for i in 0..m {
            let prev = &offsets[(i + m - 1) % m];
            let enter = ChordEnd {
                side: pair(prev.side),
                t: &Rat::one() - &prev.t,
            };
            let face = cx.face_of_side(enter.side);
            debug_assert_eq!(face, cx.face_of_side(offsets[i].side));
            chords.push(Chord {
                face,
                enter,
                exit: offsets[i].clone(),
            });
        }
        let out = TransversalCurve {
            chords,
            home_face: None,
        };
        out.validate(cx)?;
        out.ensure_embedded(cx)?;
        return Ok(out);
    }
    if offsets.is_empty() {
        if k_start == k_end {
            return Err(SurfError::InvalidCurve(
                "degenerate bigon inside a single chord".into(),
            ));
        }
        debug_assert_eq!(ch_start.face, ch_end.face);
        chords.push(Chord {
            face: ch_start.face,
            enter: ch_start.enter.clone(),
            exit: ch_end.exit.clone(),
        });
    } else {
        chords.push(Chord {
            face: ch_start.face,
            enter: ch_start.enter.clone(),
            exit: offsets[0].clone(),
        });
        for i in 1..offsets.len() {
            let prev = &offsets[i - 1];
            let enter = ChordEnd {
                side: pair(prev.side),
                t: &Rat::one() - &prev.t,
            };
            chords.push(Chord {
                face: cx.face_of_side(enter.side),
                enter,
                exit: offsets[i].clone(),
            });
        }
        let last = offsets.last().unwrap();
        let enter = ChordEnd {
            side: pair(last.side),
            t: &Rat::one() - &last.t,
        };
        debug_assert_eq!(cx.face_of_side(enter.side), ch_end.face);
        chords.push(Chord {
            face: ch_end.face,
            enter,
            exit: ch_end.exit.clone(),
        });
    }
    // retained chords strictly between k_end and k_start (cyclic)
    let mut i = k_end;
    loop {
        i = (i + 1) % n1;
        if i == k_start {
            break;
        }
        chords.push(c1.chords[i].clone());
    }
    // Do not respace here: the offsets are positioned relative to the other
    // curve's events, and the caller respaces the family jointly.
    let out = TransversalCurve {
        chords,
        home_face: None,
    };
    out.validate(cx)?;
    out.ensure_embedded(cx)?;
    Ok(out)
}

fn ov_face_of_piece_side(ov: &Overlay, h: usize) -> usize {
    // base-complex face containing a chord piece
    match ov.ov_edges[h / 2] {
        OvEdge::Piece { curve, chord, .. } => ov.curves[curve].chords[chord].face,
        _ => unreachable!(),
    }
}

/// Cuts the surface along a family of pairwise disjoint embedded curves and
/// reports every complementary component.
pub fn classify_cut(
    cx: &SurfaceComplex,
    curves: &[TransversalCurve],
) -> Result<Vec<ComponentReport>, SurfError> {
    let cut = cut_components(cx, curves)?;
    Ok(cut.reports)
}

pub fn cut_components(
    cx: &SurfaceComplex,
    curves: &[TransversalCurve],
) -> Result<crate::overlay::CutComponents, SurfError> {
    let mut fam: Vec<TransversalCurve> = curves.to_vec();
    for c in &fam {
        c.ensure_embedded(cx)?;
    }
    respace_curves(&mut fam);
    let ov = Overlay::build(cx, fam, BTreeSet::new())?;
    for i in 0..curves.len() {
        for j in (i + 1)..curves.len() {
            if ov.crossing_count(i, j) > 0 {
                return Err(SurfError::NotDisjoint);
            }
        }
    }
    Ok(ov.cut())
}

/// Classifies a single reduced curve.
pub fn classify_curve(cx: &SurfaceComplex, c: &TransversalCurve) -> Result<CurveClass, SurfError> {
    if c.is_empty() {
        return Ok(CurveClass::Trivial);
    }
    c.ensure_embedded(cx)?;
    let reports = classify_cut(cx, std::slice::from_ref(c))?;
    let mut class = CurveClass::Essential;
    for r in &reports {
        if r.genus == 0 && r.boundary_circles == 1 {
            if r.punctures == 0 {
                return Ok(CurveClass::Trivial);
            }
            if r.punctures == 1 {
                class = CurveClass::Peripheral;
            }
        }
    }
    Ok(class)
}

/// Exact isotopy test for embedded curves: equal canonical keys, or
/// disjoint after tightening and cobounding an unpunctured annulus.
pub fn isotopic(
    cx: &SurfaceComplex,
    c1: &TransversalCurve,
    c2: &TransversalCurve,
) -> Result<bool, SurfError> {
    let r1 = crate::curve::reduce_curve(cx, c1)?;
    let r2 = crate::curve::reduce_curve(cx, c2)?;
    if r1.is_empty() || r2.is_empty() {
        // trivial curves are all isotopic to each other but to nothing else
        return Ok(r1.is_empty() && r2.is_empty());
    }
    if r1.key() == r2.key() {
        return Ok(true);
    }
    let (a, b, n) = tighten_pair(cx, &r1, &r2)?;
    if n > 0 {
        return Ok(false);
    }
    let mut fam = vec![a, b];
    respace_curves(&mut fam);
    let ov = Overlay::build(cx, fam, BTreeSet::new())?;
    let cut = ov.cut();
    for (ci, circle) in cut.circles.iter().enumerate() {
        let rep = &cut.reports[circle.component];
        if rep.genus == 0 && rep.punctures == 0 && rep.boundary_circles == 2 {
            // need the two circles of this component to come from different curves
            let mates: Vec<&crate::overlay::BoundaryCircle> = cut
                .circles
                .iter()
                .enumerate()
                .filter(|(cj, c)| *cj != ci && c.component == circle.component)
                .map(|(_, c)| c)
                .collect();
            if mates.len() == 1
                && circle.curves.len() == 1
                && mates[0].curves.len() == 1
                && circle.curves != mates[0].curves
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Both curves essential and disjoint (possibly after tightening)?
pub fn disjoint(
    cx: &SurfaceComplex,
    c1: &TransversalCurve,
    c2: &TransversalCurve,
) -> Result<bool, SurfError> {
    let (_, _, n) = tighten_pair(cx, c1, c2)?;
    Ok(n == 0)
}

/// Essential curves living in the complement of the given family (which may
/// cross itself): the reduced boundary-circle pushoffs of every component,
/// filtered to the essential ones. Deduplicated by canonical key.
pub fn complement_witnesses(
    cx: &SurfaceComplex,
    curves: &[TransversalCurve],
) -> Result<Vec<TransversalCurve>, SurfError> {
    let mut fam: Vec<TransversalCurve> = curves.to_vec();
    for c in &fam {
        c.ensure_embedded(cx)?;
    }
    respace_curves(&mut fam);
    let ov = Overlay::build(cx, fam, BTreeSet::new())?;
    let cut = ov.cut();
    let mut out: Vec<TransversalCurve> = Vec::new();
    let mut seen = BTreeSet::new();
    for circle in &cut.circles {
        let push = ov.pushoff_circle(circle)?;
        let red = crate::curve::reduce_curve(cx, &push)?;
        if red.is_empty() {
            continue;
        }
        if classify_curve(cx, &red)? != CurveClass::Essential {
            continue;
        }
        let key = red.key();
        if seen.insert(key) {
            out.push(red);
        }
    }
    Ok(out)
}

/// Does the family fill the surface? True when every complementary
/// component is a disk or a once-punctured disk.
pub fn fills_surface(
    cx: &SurfaceComplex,
    curves: &[TransversalCurve],
) -> Result<bool, SurfError> {
    let mut fam: Vec<TransversalCurve> = curves.to_vec();
    respace_curves(&mut fam);
    let ov = Overlay::build(cx, fam, BTreeSet::new())?;
    let cut = ov.cut();
    Ok(cut.reports.iter().all(|r| {
        r.genus == 0 && r.boundary_circles == 1 && r.punctures <= 1
    }))
}

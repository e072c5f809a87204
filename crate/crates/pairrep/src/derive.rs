//! Deriving the crossing pattern of a tightened transversal pair.
//!
//! Given two embedded curves in minimal position (no bigon between them),
//! this reads off crossing order along each curve, crossing signs, and the
//! puncture decoration of every complementary face, producing data for a
//! fresh `PairDiagram` on the ribbon closure. Only filling pairs (all
//! complementary components disks with punctures) are derivable; for
//! non-filling pairs `None` is returned.

use crate::diagram::DiagramData;
use crate::RepError;
use std::collections::BTreeSet;
use surfkit::complex::SurfaceComplex;
use surfkit::curve::{respace_curves, TransversalCurve};
use surfkit::overlay::Overlay;
use surfkit::rat::Rat;
use surfkit::ribbon::pair;

/// Reads the pattern of the tightened pair `(a, b)`. The inputs must
/// already be in minimal position with distinct event coordinates (as
/// produced by `surfkit::ops::tighten_pair`).
pub fn derive_pattern(
    cx: &SurfaceComplex,
    a: &TransversalCurve,
    b: &TransversalCurve,
) -> Result<Option<DiagramData>, RepError> {
    let mut fam = vec![a.clone(), b.clone()];
    respace_curves(&mut fam);
    let ov = Overlay::build(cx, fam, BTreeSet::new())?;
    let n = ov.crossing_count(0, 1);
    if n == 0 {
        return Ok(None);
    }
    // order the crossings along each curve
    let mut along_a: Vec<(usize, usize, Rat)> = Vec::new(); // (crossing id, chord, param)
    let mut along_b: Vec<(usize, usize, Rat)> = Vec::new();
    for (xi, x) in ov.crossings.iter().enumerate() {
        let (a_key, a_t, b_key, b_t) = if x.a.0 == 0 {
            (x.a, x.ta.clone(), x.b, x.tb.clone())
        } else {
            (x.b, x.tb.clone(), x.a, x.ta.clone())
        };
        debug_assert_eq!(a_key.0, 0);
        debug_assert_eq!(b_key.0, 1);
        along_a.push((xi, a_key.1, a_t));
        along_b.push((xi, b_key.1, b_t));
    }
    along_a.sort_by(|x, y| (x.1, &x.2).cmp(&(y.1, &y.2)));
    along_b.sort_by(|x, y| (x.1, &x.2).cmp(&(y.1, &y.2)));
    // crossing id along a = its rank
    let mut rank_a = vec![usize::MAX; ov.crossings.len()];
    for (r, (xi, _, _)) in along_a.iter().enumerate() {
        rank_a[*xi] = r;
    }
    let mut order_along_b: Vec<usize> = along_b.iter().map(|(xi, _, _)| rank_a[*xi]).collect();
    // normalize cyclic start: begin at crossing 0
    let z = order_along_b.iter().position(|&c| c == 0).unwrap();
    order_along_b.rotate_left(z);

    // signs: +1 iff the germ clockwise-after a's forward germ at the
    // crossing is b's forward germ
    let mut signs = vec![0i8; n];
    for (xi, x) in ov.crossings.iter().enumerate() {
        let sign = if crossing_sign_positive(&ov, xi, x) { 1 } else { -1 };
        signs[rank_a[xi]] = sign;
    }

    // faces of the abstract closure, matched to overlay components through
    // crossing corners
    let graph = surfkit::diagrams::pair_ribbon(&order_along_b_of_rank(&order_along_b), &signs_of(&signs));
    let faces = graph.faces();
    let cut = ov.cut();
    // check filling: all components disks (possibly punctured)
    if !cut
        .reports
        .iter()
        .all(|r| r.genus == 0 && r.boundary_circles == 1)
    {
        return Ok(None);
    }
    let vertex_of = graph.vertex_of_halves();
    let mut punctures = vec![0u32; faces.len()];
    // map: crossing id (rank along a) -> overlay crossing index
    let mut ov_of_rank = vec![usize::MAX; n];
    for (xi, _) in ov.crossings.iter().enumerate() {
        ov_of_rank[rank_a[xi]] = xi;
    }
    for (fi, word) in faces.iter().enumerate() {
        let mut comp: Option<usize> = None;
        for &h in word {
            // the corner after side h sits at the head vertex
            let k = vertex_of[pair(h)];
            let xi = ov_of_rank[k];
            // abstract germ at the corner: pair(h); overlay germ: translate
            let ov_germ = abstract_germ_to_overlay(&ov, xi, k, pair(h), &order_along_b, &signs);
            // corner = gap(ov_germ); its overlay face contains side pair(ov_germ)
            let ov_face = ov.ov_face_of_side(ov_germ ^ 1);
            let c = cut.comp_of_face[ov_face];
            match comp {
                None => comp = Some(c),
                Some(prev) => {
                    if prev != c {
                        return Err(RepError::InvalidPattern(
                            "face corners disagree on complement component".into(),
                        ));
                    }
                }
            }
        }
        punctures[fi] = cut.punctures[comp.unwrap()];
    }
    Ok(Some(DiagramData {
        order_along_b,
        signs,
        punctures,
    }))
}

fn order_along_b_of_rank(order: &[usize]) -> Vec<usize> {
    order.to_vec()
}

fn signs_of(signs: &[i8]) -> Vec<i8> {
    signs.to_vec()
}

/// Whether the crossing is positive: b crosses a from a's left to a's
/// right, i.e. the clockwise successor of a's forward germ is b's forward
/// germ in the overlay rotation.
fn crossing_sign_positive(ov: &Overlay, xi: usize, x: &surfkit::overlay::ChordCrossing) -> bool {
    let (a_key, b_key) = if x.a.0 == 0 { (x.a, x.b) } else { (x.b, x.a) };
    let a_fwd = crossing_germ(ov, xi, a_key, true);
    let b_fwd = crossing_germ(ov, xi, b_key, true);
    ov.rot_next_at_vertex_of(a_fwd) == b_fwd
}

/// The overlay germ at crossing `xi` pointing forward (toward the chord
/// exit) or backward along the given chord.
fn crossing_germ(ov: &Overlay, xi: usize, key: (usize, usize), forward: bool) -> usize {
    let ids = &ov.per_chord_ids(key);
    let my_pos = ids.iter().position(|&id| id == xi).expect("indexed");
    if forward {
        2 * ov.piece_edge_id(key.0, key.1, my_pos + 1)
    } else {
        2 * ov.piece_edge_id(key.0, key.1, my_pos) + 1
    }
}

/// Translates an abstract germ of the derived closure at crossing `k`
/// (rank along a) into the corresponding overlay germ at the overlay
/// crossing `xi`.
fn abstract_germ_to_overlay(
    ov: &Overlay,
    xi: usize,
    k: usize,
    abstract_germ: usize,
    order_along_b: &[usize],
    signs: &[i8],
) -> usize {
    let n = order_along_b.len();
    let x = &ov.crossings[xi];
    let (a_key, b_key) = if x.a.0 == 0 { (x.a, x.b) } else { (x.b, x.a) };
    // roles of the abstract germ at crossing k
    let e = abstract_germ / 2;
    let head = abstract_germ % 2 == 1;
    let a_out = surfkit::diagrams::a_out(k);
    let a_in = surfkit::diagrams::a_in(n, k);
    let pos_b = order_along_b.iter().position(|&c| c == k).unwrap();
    let b_out_edge = surfkit::diagrams::b_edge(n, pos_b);
    let b_in_edge = surfkit::diagrams::b_edge(n, (pos_b + n - 1) % n);
    let _ = (e, head, signs);
    if abstract_germ == a_out {
        crossing_germ(ov, xi, a_key, true)
    } else if abstract_germ == a_in {
        crossing_germ(ov, xi, a_key, false)
    } else if abstract_germ == 2 * b_out_edge {
        crossing_germ(ov, xi, b_key, true)
    } else if abstract_germ == 2 * b_in_edge + 1 {
        crossing_germ(ov, xi, b_key, false)
    } else {
        panic!("abstract germ {abstract_germ} does not belong to crossing {k}");
    }
}

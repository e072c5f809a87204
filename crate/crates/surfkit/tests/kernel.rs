//! End-to-end checks of the surface kernel on small two-curve patterns,
//! cross-validated against the independent oracles.

use surfkit::complex::SurfaceComplex;
use surfkit::curve::{reduce_curve, CurveClass};
use surfkit::diagrams::{a_cycle_halves, b_cycle_halves, pair_ribbon};
use surfkit::ops::{classify_curve, classify_cut, intersection_number, isotopic, tighten_pair};
use surfkit::walk::cycle_pushoff;

fn sphere_5() -> SurfaceComplex {
    let g = pair_ribbon(&[0, 1], &[1, -1]);
    SurfaceComplex::build(g, vec![2, 1, 1, 1]).unwrap()
}

#[test]
fn face_tracing_matches_oracle_on_small_patterns() {
    let patterns: Vec<(Vec<usize>, Vec<i8>)> = vec![
        (vec![0, 1], vec![1, -1]),
        (vec![0, 1], vec![1, 1]),
        (vec![0, 2, 1, 3], vec![1, 1, 1, 1]),
        (vec![0, 2, 1, 3], vec![1, -1, 1, -1]),
        (vec![0, 3, 1, 4, 2, 5], vec![1, -1, 1, -1, 1, -1]),
        (vec![0, 2, 4, 1, 3, 5], vec![1, 1, -1, -1, 1, 1]),
    ];
    for (order, signs) in patterns {
        let g = pair_ribbon(&order, &signs);
        let faces = g.faces();
        let oracle_faces = testkit::trace_faces_oracle(&g.rotations);
        assert_eq!(faces.len(), oracle_faces.len(), "order {order:?} signs {signs:?}");
        assert_eq!(g.genus().unwrap(), testkit::genus_oracle(&g.rotations));
    }
}

#[test]
fn pushoffs_reduce_and_intersect_exactly() {
    let cx = sphere_5();
    let b_left = cycle_pushoff(&cx, &cx.expand_old_walk(&b_cycle_halves(2)), 1).unwrap();
    b_left.ensure_embedded(&cx).unwrap();
    let b_red = reduce_curve(&cx, &b_left).unwrap();
    // a pushoff of b crosses a twice and nothing else
    assert_eq!(b_red.len(), 2, "reduced pushoff of b has 2 chords");
    // reduction is idempotent
    let again = reduce_curve(&cx, &b_red).unwrap();
    assert_eq!(again.key(), b_red.key());

    let a_left = cycle_pushoff(&cx, &cx.expand_old_walk(&a_cycle_halves(2)), 1).unwrap();
    let a_red = reduce_curve(&cx, &a_left).unwrap();
    let n = intersection_number(&cx, &a_red, &b_red).unwrap();
    assert_eq!(n, 2, "the defining pair realizes its crossing count");
}

#[test]
fn left_and_right_pushoffs_are_isotopic() {
    let cx = sphere_5();
    let b_left = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&b_cycle_halves(2)), 1).unwrap()).unwrap();
    let b_right = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&b_cycle_halves(2)), -1).unwrap()).unwrap();
    assert!(isotopic(&cx, &b_left, &b_right).unwrap());
    // and a is not isotopic to b
    let a_left = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&a_cycle_halves(2)), 1).unwrap()).unwrap();
    assert!(!isotopic(&cx, &a_left, &b_left).unwrap());
}

#[test]
fn defining_curves_are_essential() {
    let cx = sphere_5();
    for halves in [a_cycle_halves(2), b_cycle_halves(2)] {
        let walk = cx.expand_old_walk(&halves);
        let c = reduce_curve(&cx, &cycle_pushoff(&cx, &walk, 1).unwrap()).unwrap();
        assert_eq!(classify_curve(&cx, &c).unwrap(), CurveClass::Essential);
    }
}

#[test]
fn cut_along_essential_curve_on_s05() {
    let cx = sphere_5();
    let b = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&b_cycle_halves(2)), 1).unwrap()).unwrap();
    let reports = classify_cut(&cx, std::slice::from_ref(&b)).unwrap();
    assert_eq!(reports.len(), 2, "one essential curve separates the sphere");
    let total: u32 = reports.iter().map(|r| r.punctures).sum();
    assert_eq!(total, 5);
    for r in &reports {
        assert_eq!(r.boundary_circles, 1);
        assert_eq!(r.genus, 0);
    }
}

#[test]
fn tighten_pair_removes_spurious_crossings() {
    let cx = sphere_5();
    // Left and right pushoffs of b may start with crossings against each
    // other once respaced into shared position; tightening must report 0.
    let b_left = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&b_cycle_halves(2)), 1).unwrap()).unwrap();
    let b_right = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&b_cycle_halves(2)), -1).unwrap()).unwrap();
    let (_, _, n) = tighten_pair(&cx, &b_left, &b_right).unwrap();
    assert_eq!(n, 0);
}

#[test]
fn complement_witnesses_on_s05() {
    let cx = sphere_5();
    let a = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&a_cycle_halves(2)), 1).unwrap()).unwrap();
    let b = reduce_curve(&cx, &cycle_pushoff(&cx, &cx.expand_old_walk(&b_cycle_halves(2)), 1).unwrap()).unwrap();
    // the pair does not fill S_{0,5}: one complement piece holds 2 punctures
    assert!(!surfkit::ops::fills_surface(&cx, &[a.clone(), b.clone()]).unwrap());
    let wits = surfkit::ops::complement_witnesses(&cx, &[a.clone(), b.clone()]).unwrap();
    assert!(!wits.is_empty(), "a twice-punctured complement piece yields a witness");
    for w in &wits {
        assert_eq!(surfkit::ops::intersection_number(&cx, w, &a).unwrap(), 0);
        assert_eq!(surfkit::ops::intersection_number(&cx, w, &b).unwrap(), 0);
        assert!(!isotopic(&cx, w, &a).unwrap());
        assert!(!isotopic(&cx, w, &b).unwrap());
    }
}

//! Replacement-move behavior on the pinned small patterns.

use pairrep::diagram::DiagramData;
use pairrep::{apply_move, enumerate_moves, nested_sequence, Interval, MoveKind, PairDiagram, Policy};
use surfkit::curve::CurveClass;

/// Two crossings, alternating signs, five punctures: the standard small
/// pattern on the five-punctured sphere.
fn s05_two_crossings() -> PairDiagram {
    PairDiagram::new(DiagramData {
        order_along_b: vec![0, 1],
        signs: vec![1, -1],
        punctures: vec![2, 1, 1, 1],
    })
    .unwrap()
}

#[test]
fn diagram_validates_and_realizes_intersection() {
    let d = s05_two_crossings();
    assert_eq!(d.complex.sig.genus, 0);
    assert_eq!(d.complex.sig.punctures, 5);
    d.check_intersection_realized().unwrap();
}

#[test]
fn two_crossing_moves_are_one_double_wave() {
    let d = s05_two_crossings();
    let j = Interval::full(&d, 0);
    let moves = enumerate_moves(&d, &j).unwrap();
    // both arcs of b are waves on opposite sides sharing both endpoints:
    // exactly one double-wave co-end move (plus any single innermost waves)
    let doubles: Vec<_> = moves
        .iter()
        .filter(|m| m.kind == MoveKind::DoubleWaveCoEnd)
        .collect();
    assert_eq!(doubles.len(), 1);
    assert!(moves.iter().all(|m| m.kind != MoveKind::NonWave));
}

#[test]
fn double_wave_on_two_crossings_gives_curve_homotopic_to_b() {
    let d = s05_two_crossings();
    let j = Interval::full(&d, 0);
    let moves = enumerate_moves(&d, &j).unwrap();
    let m = moves
        .iter()
        .find(|m| m.kind == MoveKind::DoubleWaveCoEnd)
        .unwrap();
    let out = apply_move(&d, &j, m).unwrap();
    assert_eq!(out.crossings_with_b, 0);
    assert!(out.j1.is_none());
    assert!(surfkit::ops::isotopic(&d.complex, &out.a1, &d.b_curve).unwrap());
}

#[test]
fn single_waves_decrease_crossings() {
    let d = s05_two_crossings();
    let j = Interval::full(&d, 0);
    let moves = enumerate_moves(&d, &j).unwrap();
    for m in moves.iter().filter(|m| m.kind == MoveKind::Wave) {
        let out = apply_move(&d, &j, m).unwrap();
        assert!(out.crossings_with_b < j.len());
        assert_ne!(out.a1_class, CurveClass::Trivial);
    }
}

#[test]
fn nested_sequence_terminates_on_small_pattern() {
    let d = s05_two_crossings();
    let j = Interval::full(&d, 0);
    let run = nested_sequence(&d, &j, Policy::Nonperipheral, None).unwrap();
    assert!(run.steps.len() <= j.len());
    // every step shrinks |J cap b| strictly
    let mut prev = j.len();
    for s in &run.steps {
        let now = s.j_after.as_ref().map_or(0, |x| x.len());
        assert!(now < prev);
        prev = now;
        // nesting as crossing sets and arcs
        if let Some(ja) = &s.j_after {
            assert!(s.j_before.contains_interval(ja));
        }
    }
    assert!(surfkit::ops::isotopic(&d.complex, &run.terminal, &d.b_curve).unwrap());
}

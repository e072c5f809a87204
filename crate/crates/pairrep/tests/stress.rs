//! Randomized runs over the three surface families, checking the
//! intersection-decrease and successive-intersection bounds step by step.

use pairrep::{nested_sequence, random_diagram, Interval, Policy, SurfaceFamily};
use surfkit::ops::intersection_number;

#[test]
fn random_runs_terminate_with_bounded_steps() {
    let mut checked = 0;
    for (fi, family) in [
        SurfaceFamily::Sphere5,
        SurfaceFamily::Torus2,
        SurfaceFamily::Genus2,
    ]
    .into_iter()
    .enumerate()
    {
        for k in 0..4u64 {
            let n = 3 + (k as usize % 3) * 2; // 3, 5, 7
            let seed = 1000 * (fi as u64 + 1) + k;
            let Ok((d, _)) = random_diagram(family, n, seed, 400) else {
                continue;
            };
            let j0 = Interval::full(&d, 0);
            let run = match nested_sequence(&d, &j0, Policy::Nonperipheral, None) {
                Ok(r) => r,
                Err(e) => panic!("{} n={n} seed={seed}: {e}", family.name()),
            };
            assert!(run.steps.len() <= n, "step count bounded by i(a,b)");
            // strict |J cap b| decrease and interval nesting
            let mut prev = n;
            for s in &run.steps {
                let now = s.j_after.as_ref().map_or(0, |x| x.len());
                assert!(s.crossings_with_b < prev);
                assert!(now < prev);
                if let Some(ja) = &s.j_after {
                    assert!(s.j_before.contains_interval(ja));
                }
                prev = now;
            }
            // successive intersection bound: i(a_i, a_{i+1}) <= 4
            let mut curves = vec![d.a_curve.clone()];
            curves.extend(run.steps.iter().map(|s| s.a_curve.clone()));
            curves.push(run.terminal.clone());
            for w in curves.windows(2) {
                let i = intersection_number(&d.complex, &w[0], &w[1]).unwrap();
                assert!(i <= 4, "successive intersection {i} > 4");
            }
            checked += 1;
        }
    }
    assert!(checked >= 6, "needed a reasonable corpus, got {checked}");
}

use pairrep::{random_diagram, Interval, SurfaceFamily};
use surfkit::walk::{render_pushoff, WalkStep};
use surfkit::diagrams::b_edge;

fn main() {
    let (d, _) = random_diagram(SurfaceFamily::Torus2, 3, 2000, 400).unwrap();
    let _j = Interval::full(&d, 0);
    // wave on arc 1: walk = arc1 forward + gap1 backward
    let mut halves = d.complex.expand_old_half(2 * b_edge(3, 1));
    halves.extend(d.complex.expand_old_half(2 * 1 + 1));
    println!("walk halves: {:?}", halves);
    let steps: Vec<WalkStep> = halves.iter().map(|&h| WalkStep { half: h, side: 1 }).collect();
    let raw = render_pushoff(&d.complex, &steps).unwrap();
    for ch in &raw.chords {
        println!("  f{} {}@{} -> {}@{}", ch.face, ch.enter.side, ch.enter.t, ch.exit.side, ch.exit.t);
    }
    println!("self-crossings: {}", raw.self_crossings(&d.complex));
    let red = surfkit::curve::reduce_curve(&d.complex, &raw).unwrap();
    println!("reduced ok: sc={}", red.self_crossings(&d.complex));
    let mut x = red.clone();
    let b = d.b_curve.clone();
    for step in 0..4 {
        let mut fam = vec![x.clone(), b.clone()];
        surfkit::curve::respace_curves(&mut fam);
        x = fam[0].clone();
        let bb = fam[1].clone();
        let ov = surfkit::overlay::Overlay::build(&d.complex, vec![x.clone(), bb.clone()], Default::default()).unwrap();
        println!("== step {step} crossings {}", ov.crossing_count(0,1));
        for ch in &x.chords { println!("  x: f{} {}@{} -> {}@{}", ch.face, ch.enter.side, ch.enter.t, ch.exit.side, ch.exit.t); }
        for ch in &bb.chords { println!("  b: f{} {}@{} -> {}@{}", ch.face, ch.enter.side, ch.enter.t, ch.exit.side, ch.exit.t); }
        match surfkit::ops::tighten_once_for_debug(&d.complex, &x, &bb) {
            Ok(Some(nx)) => { println!("  spliced sc={}", nx.self_crossings(&d.complex)); for ch in &nx.chords { println!("    f{} {}@{} -> {}@{}", ch.face, ch.enter.side, ch.enter.t, ch.exit.side, ch.exit.t); } x = nx; }
            Ok(None) => { println!("  no bigon"); break; }
            Err(e) => { println!("  err {e}"); break; }
        }
    }
    // dump rotations at the two crossing vertices and face structure
    for v in 0..d.complex.graph.vertex_count() {
        println!("v{v} kind {:?} rot {:?}", d.complex.vertex_kinds[v], d.complex.graph.rotations[v]);
    }
    for (i, f) in d.complex.faces.iter().enumerate() {
        println!("face {i}: {:?}", f.word);
    }
}

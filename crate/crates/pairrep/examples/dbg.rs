use pairrep::{apply_move, enumerate_moves, random_diagram, Interval, SurfaceFamily};
use pairrep::moves::arcs_in_interval;

fn main() {
    let (d, _) = random_diagram(SurfaceFamily::Torus2, 3, 2000, 400).unwrap();
    println!("order {:?} signs {:?} punct {:?}", d.data.order_along_b, d.data.signs, d.data.punctures);
    let j = Interval::full(&d, 0);
    println!("J = {:?}", j);
    for a in arcs_in_interval(&d, &j) {
        println!("arc {}: ends {:?} p{} q{} wave {:?}", a.arc, d.arc_ends(a.arc), a.p, a.q, a.wave_side);
    }
    for m in enumerate_moves(&d, &j).unwrap() {
        match apply_move(&d, &j, &m) {
            Ok(out) => println!("{:?} arcs {:?} p{} q{} p2{:?} q2{:?} -> class {:?} crossings {}",
                m.kind, m.arcs, m.p, m.q, m.p2, m.q2, out.a1_class, out.crossings_with_b),
            Err(e) => println!("{:?} arcs {:?} -> ERROR {e}", m.kind, m.arcs),
        }
    }
}

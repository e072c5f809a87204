//! Arrangements of transversal curves over a surface complex, and the cut
//! engine: classifying the components of the complement of a curve/edge
//! system with exact Euler-characteristic and boundary bookkeeping.
//!
//! The overlay is itself a ribbon graph: vertices are base vertices, curve
//! crossings of skeleton edges (events), and curve-curve crossings inside
//! faces; edges are skeleton segments and chord pieces. Faces are traced,
//! the cut locus is a subset of overlay edges, and components of the
//! complement are unions of overlay faces glued across non-locus edges.

use crate::complex::{SurfaceComplex, VertexKind};
use crate::curve::{boundary_key, Chord, ChordEnd, TransversalCurve};
use crate::rat::Rat;
use crate::ribbon::{edge_of, EdgeId, FaceId, VertexId};
use crate::SurfError;
use num::BigRational;
use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// One crossing of a curve over a skeleton edge: the shared endpoint of
/// chords `chord-1` and `chord` of the curve (exit then enter).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeEvent {
    pub param: Rat,
    pub curve: usize,
    /// Index of the chord whose `enter` end sits at this event.
    pub chord: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OvVertex {
    Base(VertexId),
    /// Curve crossing a skeleton edge.
    Event { edge: EdgeId, index: usize },
    /// Two chords crossing inside a face.
    Crossing { face: FaceId, index: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OvEdge {
    /// Segment `index` of skeleton edge `edge` (between consecutive events).
    Seg { edge: EdgeId, index: usize },
    /// Piece `index` of chord `chord` of curve `curve`.
    Piece { curve: usize, chord: usize, index: usize },
}

/// A crossing of two chords inside a face, with exact positions along each.
#[derive(Clone, Debug)]
pub struct ChordCrossing {
    pub face: FaceId,
    pub a: (usize, usize), // (curve, chord)
    pub b: (usize, usize),
    pub ta: Rat,
    pub tb: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub genus: u32,
    pub punctures: u32,
    pub boundary_circles: u32,
    pub supports_essential_curve: bool,
}

#[derive(Clone, Debug)]
pub struct BoundaryCircle {
    pub component: usize,
    /// Overlay half-edges (sides) along the circle, in walk order.
    pub sides: Vec<usize>,
    /// Number of curve-curve crossing vertices visited.
    pub crossing_corners: usize,
    /// Which curves contribute pieces to this circle.
    pub curves: BTreeSet<usize>,
    /// Whether any skeleton (cut-edge) segment lies on this circle.
    pub touches_skeleton: bool,
}

pub struct CutComponents {
    pub reports: Vec<ComponentReport>,
    pub comp_of_face: Vec<usize>,
    pub circles: Vec<BoundaryCircle>,
    /// Punctures per component.
    pub punctures: Vec<u32>,
    pub chi: Vec<i64>,
}

pub struct Overlay<'a> {
    pub cx: &'a SurfaceComplex,
    pub curves: Vec<TransversalCurve>,
    pub cut_edges: BTreeSet<EdgeId>,
    // events per skeleton edge, sorted by param
    pub events: BTreeMap<EdgeId, Vec<EdgeEvent>>,
    // chord crossings, and per chord the sorted crossing ids
    pub crossings: Vec<ChordCrossing>,
    per_chord: BTreeMap<(usize, usize), Vec<usize>>, // crossing ids sorted along chord
    // overlay ribbon structure
    pub ov_rot: Vec<Vec<usize>>,
    pub ov_vertices: Vec<OvVertex>,
    pub ov_edges: Vec<OvEdge>,
    pub ov_faces: Vec<Vec<usize>>,
    ov_vertex_of: Vec<usize>,
    ov_rot_pos: Vec<usize>,
    ov_face_of: Vec<usize>,
    pub locus: Vec<bool>,
    seg_base: BTreeMap<EdgeId, usize>,
    piece_base: BTreeMap<(usize, usize), usize>,
}

fn cross2(ax: &BigRational, ay: &BigRational, bx: &BigRational, by: &BigRational) -> BigRational {
    ax * by - ay * bx
}

/// Point `i` on the rational unit circle; increasing `i` moves one way
/// around strictly, so convex position matches index order.
fn circle_point(i: usize) -> (BigRational, BigRational) {
    let t = BigRational::from_integer(BigInt::from(i as i64));
    let t2 = &t * &t;
    let one = BigRational::from_integer(BigInt::from(1));
    let den = &one + &t2;
    let x = (&one - &t2) / &den;
    let y = (&t + &t) / &den;
    (x, y)
}

impl<'a> Overlay<'a> {
    /// Builds the overlay of a family of curves. All event coordinates must
    /// be pairwise distinct along every edge (use `respace_curves` first).
    pub fn build(
        cx: &'a SurfaceComplex,
        curves: Vec<TransversalCurve>,
        cut_edges: BTreeSet<EdgeId>,
    ) -> Result<Self, SurfError> {
        for c in &curves {
            c.validate(cx)?;
        }
        // 1. events per edge
        let mut events: BTreeMap<EdgeId, Vec<EdgeEvent>> = BTreeMap::new();
        for (ci, c) in curves.iter().enumerate() {
            for (k, ch) in c.chords.iter().enumerate() {
                events.entry(ch.enter.edge()).or_default().push(EdgeEvent {
                    param: ch.enter.edge_param(),
                    curve: ci,
                    chord: k,
                });
            }
        }
        for (e, evs) in events.iter_mut() {
            evs.sort_by(|x, y| x.param.cmp(&y.param));
            for w in evs.windows(2) {
                if w[0].param == w[1].param {
                    return Err(SurfError::InvalidCurve(format!(
                        "coinciding crossings on edge {e}"
                    )));
                }
            }
        }

        // 2. chord crossings per face (exact, via convex circle positions)
        let mut chords_by_face: BTreeMap<FaceId, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, c) in curves.iter().enumerate() {
            for (k, ch) in c.chords.iter().enumerate() {
                chords_by_face.entry(ch.face).or_default().push((ci, k));
            }
        }
        let mut crossings: Vec<ChordCrossing> = Vec::new();
        for (&f, list) in &chords_by_face {
            // boundary keys of all ends in this face, sorted
            let mut keys: Vec<(usize, Rat)> = Vec::new();
            for &(ci, k) in list {
                let ch = &curves[ci].chords[k];
                keys.push(boundary_key(cx, &ch.enter));
                keys.push(boundary_key(cx, &ch.exit));
            }
            keys.sort();
            keys.dedup();
            let index_of = |end: &ChordEnd| -> usize {
                let key = boundary_key(cx, end);
                keys.binary_search(&key).expect("key present")
            };
            for i in 0..list.len() {
                for j in (i + 1)..list.len() {
                    let (ci, k) = list[i];
                    let (cj, l) = list[j];
                    let a = &curves[ci].chords[k];
                    let b = &curves[cj].chords[l];
                    if !crate::curve::chords_cross(cx, a, b) {
                        continue;
                    }
                    let p0 = circle_point(index_of(&a.enter));
                    let p1 = circle_point(index_of(&a.exit));
                    let q0 = circle_point(index_of(&b.enter));
                    let q1 = circle_point(index_of(&b.exit));
                    let d1 = (&p1.0 - &p0.0, &p1.1 - &p0.1);
                    let d2 = (&q1.0 - &q0.0, &q1.1 - &q0.1);
                    let denom = cross2(&d1.0, &d1.1, &d2.0, &d2.1);
                    assert!(!denom.is_zero(), "crossing chords cannot be parallel");
                    let w = (&q0.0 - &p0.0, &q0.1 - &p0.1);
                    let ta = cross2(&w.0, &w.1, &d2.0, &d2.1) / &denom;
                    let tb = cross2(&w.0, &w.1, &d1.0, &d1.1) / &denom;
                    crossings.push(ChordCrossing {
                        face: f,
                        a: (ci, k),
                        b: (cj, l),
                        ta: Rat(ta),
                        tb: Rat(tb),
                    });
                }
            }
        }
        // order crossings along each chord
        let mut per_chord: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (xi, x) in crossings.iter().enumerate() {
            per_chord.entry(x.a).or_default().push(xi);
            per_chord.entry(x.b).or_default().push(xi);
        }
        let param_on = |x: &ChordCrossing, key: (usize, usize)| -> Rat {
            if x.a == key {
                x.ta.clone()
            } else {
                x.tb.clone()
            }
        };
        for (key, ids) in per_chord.iter_mut() {
            ids.sort_by(|&i, &j| param_on(&crossings[i], *key).cmp(&param_on(&crossings[j], *key)));
            for w in ids.windows(2) {
                assert!(
                    param_on(&crossings[w[0]], *key) != param_on(&crossings[w[1]], *key),
                    "triple point in chord arrangement"
                );
            }
        }

        let mut ov = Overlay {
            cx,
            curves,
            cut_edges,
            events,
            crossings,
            per_chord,
            ov_rot: Vec::new(),
            ov_vertices: Vec::new(),
            ov_edges: Vec::new(),
            ov_faces: Vec::new(),
            ov_vertex_of: Vec::new(),
            ov_rot_pos: Vec::new(),
            ov_face_of: Vec::new(),
            locus: Vec::new(),
            seg_base: BTreeMap::new(),
            piece_base: BTreeMap::new(),
        };
        ov.assemble()?;
        Ok(ov)
    }

    pub fn event_index(&self, curve: usize, chord: usize) -> (EdgeId, usize) {
        let e = self.curves[curve].chords[chord].enter.edge();
        let evs = &self.events[&e];
        let i = evs
            .iter()
            .position(|ev| ev.curve == curve && ev.chord == chord)
            .expect("event exists");
        (e, i)
    }

    fn assemble(&mut self) -> Result<(), SurfError> {
        let cx = self.cx;
        let n_base_vertices = cx.graph.vertex_count();
        // vertex ids
        let mut ov_vertices: Vec<OvVertex> = (0..n_base_vertices).map(OvVertex::Base).collect();
        let mut event_vertex: BTreeMap<(EdgeId, usize), usize> = BTreeMap::new();
        for (&e, evs) in &self.events {
            for i in 0..evs.len() {
                event_vertex.insert((e, i), ov_vertices.len());
                ov_vertices.push(OvVertex::Event { edge: e, index: i });
            }
        }
        let mut crossing_vertex: Vec<usize> = Vec::new();
        for (xi, x) in self.crossings.iter().enumerate() {
            crossing_vertex.push(ov_vertices.len());
            ov_vertices.push(OvVertex::Crossing {
                face: x.face,
                index: xi,
            });
        }

        // edges: skeleton segments then chord pieces
        let mut ov_edges: Vec<OvEdge> = Vec::new();
        let mut seg_id: BTreeMap<(EdgeId, usize), usize> = BTreeMap::new();
        for e in 0..cx.edge_count() {
            let n_ev = self.events.get(&e).map_or(0, |v| v.len());
            for s in 0..=n_ev {
                seg_id.insert((e, s), ov_edges.len());
                ov_edges.push(OvEdge::Seg { edge: e, index: s });
            }
        }
        let mut piece_id: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for (ci, c) in self.curves.iter().enumerate() {
            for (k, _) in c.chords.iter().enumerate() {
                let n_x = self.per_chord.get(&(ci, k)).map_or(0, |v| v.len());
                for p in 0..=n_x {
                    piece_id.insert((ci, k, p), ov_edges.len());
                    ov_edges.push(OvEdge::Piece {
                        curve: ci,
                        chord: k,
                        index: p,
                    });
                }
            }
        }

        // rotations
        let mut ov_rot: Vec<Vec<usize>> = vec![Vec::new(); ov_vertices.len()];
        // base vertices: original rotation with first segments
        for v in 0..n_base_vertices {
            let mut rot = Vec::new();
            for &h in &cx.graph.rotations[v] {
                let e = edge_of(h);
                let n_ev = self.events.get(&e).map_or(0, |v| v.len());
                let half = if h % 2 == 0 {
                    // tail germ: first segment, tail half
                    2 * seg_id[&(e, 0)]
                } else {
                    // head germ: last segment, head half
                    2 * seg_id[&(e, n_ev)] + 1
                };
                rot.push(half);
            }
            ov_rot[v] = rot;
        }
        // event vertices
        for (&e, evs) in &self.events {
            for (i, ev) in evs.iter().enumerate() {
                let vid = event_vertex[&(e, i)];
                let seg_below = seg_id[&(e, i)]; // tail..this
                let seg_above = seg_id[&(e, i + 1)];
                // entering chord (curve ev.curve, chord ev.chord): its enter
                // end sits here; the exiting chord is ev.chord - 1.
                let c = &self.curves[ev.curve];
                let n = c.chords.len();
                let k_in = ev.chord;
                let k_out = (k_in + n - 1) % n;
                let enter_side = c.chords[k_in].enter.side;
                // first piece of entering chord
                let p_in = 2 * piece_id[&(ev.curve, k_in, 0)];
                // last piece of exiting chord (head half)
                let n_x_out = self.per_chord.get(&(ev.curve, k_out)).map_or(0, |v| v.len());
                let p_out = 2 * piece_id[&(ev.curve, k_out, n_x_out)] + 1;
                // Left face of the tail->head traversal is face_of_side(2e).
                let (left_germ, right_germ) = if enter_side == 2 * e {
                    (p_in, p_out)
                } else {
                    debug_assert_eq!(enter_side, 2 * e + 1);
                    (p_out, p_in)
                };
                // Clockwise: [toward-head, right piece, toward-tail, left piece]
                ov_rot[vid] = vec![2 * seg_above, right_germ, 2 * seg_below + 1, left_germ];
            }
        }
        // crossing vertices
        for (xi, x) in self.crossings.iter().enumerate() {
            let vid = crossing_vertex[xi];
            // germ toward each endpoint, ordered by boundary keys
            let mut items: Vec<((usize, Rat), usize)> = Vec::new();
            for &(key, is_a) in &[(x.a, true), (x.b, false)] {
                let (ci, k) = key;
                let ids = &self.per_chord[&key];
                let my_pos = ids
                    .iter()
                    .position(|&id| id == xi)
                    .expect("crossing indexed on its chord");
                let ch = &self.curves[ci].chords[k];
                // backward piece: index my_pos (head half toward this vertex
                // means germ = head half); forward piece: my_pos + 1 (tail half)
                let back = 2 * piece_id[&(ci, k, my_pos)] + 1;
                let fwd = 2 * piece_id[&(ci, k, my_pos + 1)];
                items.push((boundary_key(self.cx, &ch.enter), back));
                items.push((boundary_key(self.cx, &ch.exit), fwd));
                let _ = is_a;
            }
            // ascending boundary keys run counterclockwise around the disk;
            // stored rotations are clockwise, so reverse.
            items.sort_by(|p, q| q.0.cmp(&p.0));
            ov_rot[vid] = items.into_iter().map(|(_, g)| g).collect();
        }

        // locus flags
        let mut locus = vec![false; ov_edges.len()];
        for (id, e) in ov_edges.iter().enumerate() {
            match e {
                OvEdge::Seg { edge, .. } => {
                    if self.cut_edges.contains(edge) {
                        locus[id] = true;
                    }
                }
                OvEdge::Piece { .. } => locus[id] = true,
            }
        }

        let graph = crate::ribbon::RibbonGraph {
            rotations: ov_rot.clone(),
            labels: vec![crate::ribbon::EdgeLabel::Aux; ov_edges.len()],
        };
        graph.validate().map_err(|e| {
            SurfError::InvalidRibbon(format!("overlay assembly failed: {e}"))
        })?;
        let ov_faces = graph.faces();
        let ov_vertex_of = graph.vertex_of_halves();
        let ov_rot_pos = graph.rotation_positions();
        let mut ov_face_of = vec![usize::MAX; 2 * ov_edges.len()];
        for (fi, w) in ov_faces.iter().enumerate() {
            for &h in w {
                ov_face_of[h] = fi;
            }
        }
        // consistency: overlay Euler characteristic must match the surface
        let chi = ov_vertices.len() as i64 - ov_edges.len() as i64 + ov_faces.len() as i64;
        if chi != 2 - 2 * self.cx.sig.genus as i64 {
            return Err(SurfError::InvalidRibbon(format!(
                "overlay Euler characteristic {chi} does not match surface"
            )));
        }
        self.ov_vertices = ov_vertices;
        self.ov_edges = ov_edges;
        self.ov_rot = ov_rot;
        self.ov_faces = ov_faces;
        self.ov_vertex_of = ov_vertex_of;
        self.ov_rot_pos = ov_rot_pos;
        self.ov_face_of = ov_face_of;
        self.locus = locus;
        self.seg_base = seg_id
            .iter()
            .filter(|((_, s), _)| *s == 0)
            .map(|((e, _), id)| (*e, *id))
            .collect();
        self.piece_base = piece_id
            .iter()
            .filter(|((_, _, p), _)| *p == 0)
            .map(|((c, k, _), id)| ((*c, *k), *id))
            .collect();
        Ok(())
    }

    pub fn ov_face_of_side(&self, h: usize) -> usize {
        self.ov_face_of[h]
    }

    /// Overlay edge id of segment `index` of skeleton edge `e`.
    pub fn seg_edge_id(&self, e: EdgeId, index: usize) -> usize {
        self.seg_base[&e] + index
    }

    /// Overlay edge id of piece `index` of chord `(curve, chord)`.
    pub fn piece_edge_id(&self, curve: usize, chord: usize, index: usize) -> usize {
        self.piece_base[&(curve, chord)] + index
    }

    pub fn ov_vertex_at(&self, h: usize) -> OvVertex {
        self.ov_vertices[self.ov_vertex_of[h]]
    }

    /// Clockwise successor of a germ in its overlay vertex rotation.
    pub fn rot_next_at_vertex_of(&self, h: usize) -> usize {
        self.ov_rot_next(h)
    }

    /// Crossing ids sitting on a chord, ordered along it.
    pub fn per_chord_ids(&self, key: (usize, usize)) -> Vec<usize> {
        self.per_chord.get(&key).cloned().unwrap_or_default()
    }

    fn ov_rot_next(&self, h: usize) -> usize {
        let v = self.ov_vertex_of[h];
        let rot = &self.ov_rot[v];
        rot[(self.ov_rot_pos[h] + 1) % rot.len()]
    }

    /// Face-boundary successor in the overlay.
    pub fn ov_next(&self, h: usize) -> usize {
        self.ov_rot_next(h ^ 1)
    }

    /// Total crossings between two curves of the family.
    pub fn crossing_count(&self, ci: usize, cj: usize) -> usize {
        self.crossings
            .iter()
            .filter(|x| {
                (x.a.0 == ci && x.b.0 == cj) || (x.a.0 == cj && x.b.0 == ci)
            })
            .count()
    }

    /// Components of the complement of the locus.
    pub fn cut(&self) -> CutComponents {
        let n_faces = self.ov_faces.len();
        let mut uf = UnionFind::new(n_faces);
        for (id, _) in self.ov_edges.iter().enumerate() {
            if !self.locus[id] {
                let f1 = self.ov_face_of[2 * id];
                let f2 = self.ov_face_of[2 * id + 1];
                uf.union(f1, f2);
            }
        }
        // canonical component ids in face order
        let mut comp_of_face = vec![usize::MAX; n_faces];
        let mut comp_ids: Vec<usize> = Vec::new();
        for f in 0..n_faces {
            let r = uf.find(f);
            if comp_of_face[r] == usize::MAX {
                comp_of_face[r] = comp_ids.len();
                comp_ids.push(r);
            }
        }
        let n_comp = comp_ids.len();
        let mut comp = vec![usize::MAX; n_faces];
        for f in 0..n_faces {
            comp[f] = comp_of_face[uf.find(f)];
        }

        // chi = V_int - E_int + F
        let mut chi = vec![0i64; n_comp];
        for f in 0..n_faces {
            chi[comp[f]] += 1;
        }
        for (id, _) in self.ov_edges.iter().enumerate() {
            if !self.locus[id] {
                chi[comp[self.ov_face_of[2 * id]]] -= 1;
            }
        }
        let mut punctures = vec![0u32; n_comp];
        for (v, rot) in self.ov_rot.iter().enumerate() {
            let on_locus = rot.iter().any(|&g| self.locus[g / 2]);
            if !on_locus {
                let c = comp[self.ov_face_of[rot[0]]];
                chi[c] += 1;
                if let OvVertex::Base(bv) = self.ov_vertices[v] {
                    if self.cx.vertex_kinds[bv] == VertexKind::Puncture {
                        punctures[c] += 1;
                    }
                }
            }
        }

        // boundary circles: walk locus sides
        let mut circles: Vec<BoundaryCircle> = Vec::new();
        let mut seen = vec![false; 2 * self.ov_edges.len()];
        for start in 0..2 * self.ov_edges.len() {
            if seen[start] || !self.locus[start / 2] {
                continue;
            }
            let component = comp[self.ov_face_of[start]];
            let mut sides = Vec::new();
            let mut crossing_corners = 0usize;
            let mut curves = BTreeSet::new();
            let mut touches_skeleton = false;
            let mut h = start;
            loop {
                seen[h] = true;
                sides.push(h);
                match self.ov_edges[h / 2] {
                    OvEdge::Piece { curve, .. } => {
                        curves.insert(curve);
                    }
                    OvEdge::Seg { .. } => {
                        touches_skeleton = true;
                    }
                }
                // advance: face successor, crossing non-locus edges into the
                // glued neighbor faces until the next locus side
                let mut n = self.ov_next(h);
                while !self.locus[n / 2] {
                    n = self.ov_next(n ^ 1);
                }
                // corner bookkeeping: the vertex between h and n
                let v = self.ov_vertex_of[n];
                if matches!(self.ov_vertices[v], OvVertex::Crossing { .. }) {
                    crossing_corners += 1;
                }
                h = n;
                if h == start {
                    break;
                }
            }
            circles.push(BoundaryCircle {
                component,
                sides,
                crossing_corners,
                curves,
                touches_skeleton,
            });
        }
        let mut n_circles = vec![0u32; n_comp];
        for c in &circles {
            n_circles[c.component] += 1;
        }

        let mut reports = Vec::with_capacity(n_comp);
        for c in 0..n_comp {
            let b = n_circles[c];
            let chi_compact = chi[c];
            let genus_twice = 2 - chi_compact - b as i64;
            assert!(
                genus_twice >= 0 && genus_twice % 2 == 0,
                "component chi {chi_compact} with {b} circles is not a surface"
            );
            let genus = (genus_twice / 2) as u32;
            let p = punctures[c];
            let is_disk = genus == 0 && b == 1 && p == 0;
            let is_punct_disk = genus == 0 && b == 1 && p == 1;
            let is_annulus = genus == 0 && b == 2 && p == 0;
            reports.push(ComponentReport {
                genus,
                punctures: p,
                boundary_circles: b,
                supports_essential_curve: !(is_disk || is_punct_disk || is_annulus),
            });
        }
        CutComponents {
            reports,
            comp_of_face: comp,
            circles,
            punctures,
            chi,
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Convenience: cut the surface along a set of skeleton edges only.
pub fn cut_along_edges(
    cx: &SurfaceComplex,
    edges: &BTreeSet<EdgeId>,
) -> Result<CutComponents, SurfError> {
    let ov = Overlay::build(cx, Vec::new(), edges.clone())?;
    Ok(ov.cut())
}

impl<'a> Overlay<'a> {
    /// Pushes a boundary circle of a cut component slightly into that
    /// component, producing an embedded transversal curve disjoint from the
    /// whole cut locus.
    pub fn pushoff_circle(&self, circle: &BoundaryCircle) -> Result<TransversalCurve, SurfError> {
        // Re-walk the circle collecting the non-locus overlay sides skipped
        // at each corner; these are exactly the edges the pushoff crosses,
        // all pivoting at the corner vertex.
        struct Crossing {
            base_side: usize, // side of the base complex touched first
            param: Rat,       // absolute param on the base edge
        }
        let mut crossings: Vec<Crossing> = Vec::new();
        // allocations per overlay segment, as distances from the pivot end
        let mut alloc: Vec<(usize, Rat)> = Vec::new(); // (overlay half germ, dist from germ end)
        let n = circle.sides.len();
        for i in 0..n {
            let h = circle.sides[i];
            let next = circle.sides[(i + 1) % n];
            let mut s = self.ov_next(h);
            while s != next {
                // s is a non-locus germ at the corner vertex
                let (base_edge, seg_index) = match self.ov_edges[s / 2] {
                    OvEdge::Seg { edge, index } => (edge, index),
                    OvEdge::Piece { .. } => {
                        return Err(SurfError::InvalidCurve(
                            "pushoff crossed a curve piece".into(),
                        ));
                    }
                };
                // segment endpoint params on the base edge
                let evs = self.events.get(&base_edge);
                let lo = if seg_index == 0 {
                    Rat::zero()
                } else {
                    evs.unwrap()[seg_index - 1].param.clone()
                };
                let hi = match evs {
                    Some(v) if seg_index < v.len() => v[seg_index].param.clone(),
                    _ => Rat::one(),
                };
                // the pivot end of the segment: s even = segment tail at the
                // corner vertex (param lo), odd = head (param hi)
                let pivot_lo = s % 2 == 0;
                // closest existing allocation on this segment from the pivot
                let mut closest = &hi - &lo;
                for (g, d) in &alloc {
                    if *g / 2 == s / 2 {
                        let dist = if (*g % 2 == 0) == pivot_lo {
                            d.clone()
                        } else {
                            &(&hi - &lo) - d
                        };
                        if dist < closest {
                            closest = dist;
                        }
                    }
                }
                let d_new = Rat::mid(&Rat::zero(), &closest);
                alloc.push((s, d_new.clone()));
                let param = if pivot_lo { &lo + &d_new } else { &hi - &d_new };
                // base side touched first: same direction as the germ s
                let base_side = if s % 2 == 0 { 2 * base_edge } else { 2 * base_edge + 1 };
                crossings.push(Crossing { base_side, param });
                s = self.ov_next(s ^ 1);
            }
        }
        if crossings.is_empty() {
            // the component hugs the circle with no skeleton in the way; the
            // pushoff is a trivial loop in the face of the first side
            let f = match self.ov_edges[circle.sides[0] / 2] {
                OvEdge::Piece { curve, chord, .. } => self.curves[curve].chords[chord].face,
                OvEdge::Seg { edge, .. } => self.cx.face_of_side(2 * edge),
            };
            return Ok(TransversalCurve::trivial_in(f));
        }
        let m = crossings.len();
        let mut chords = Vec::with_capacity(m);
        for i in 0..m {
            let cur = &crossings[i];
            let nxt = &crossings[(i + 1) % m];
            let enter_side = crate::ribbon::pair(cur.base_side);
            let enter = ChordEnd {
                side: enter_side,
                t: if enter_side % 2 == 0 {
                    cur.param.clone()
                } else {
                    &Rat::one() - &cur.param
                },
            };
            let exit = ChordEnd {
                side: nxt.base_side,
                t: if nxt.base_side % 2 == 0 {
                    nxt.param.clone()
                } else {
                    &Rat::one() - &nxt.param
                },
            };
            let face = self.cx.face_of_side(enter.side);
            if self.cx.face_of_side(exit.side) != face {
                return Err(SurfError::InvalidCurve(format!(
                    "pushoff chord {i} spans inconsistent faces"
                )));
            }
            chords.push(Chord { face, enter, exit });
        }
        let mut out = TransversalCurve {
            chords,
            home_face: None,
        };
        out.respace(self.cx);
        out.validate(self.cx)?;
        out.ensure_embedded(self.cx)?;
        Ok(out)
    }
}

/// Helper: the chord data of a full chord, used when splicing.
pub fn chord_of(c: &TransversalCurve, k: usize) -> &Chord {
    &c.chords[k]
}

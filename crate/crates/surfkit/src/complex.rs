//! Decorated surface complexes.
//!
//! A `SurfaceComplex` is a ribbon graph filling a closed oriented surface
//! together with puncture decorations. Punctures are materialized as
//! valence-1 vertices hanging off a spike edge inside their face, so that
//! every complementary face of the refined graph is an honest disk. Curves
//! transverse to the skeleton can then be recorded as chord words without
//! any ambiguity about how a chord winds around a puncture.

use crate::ribbon::{edge_of, pair, EdgeLabel, FaceId, HalfId, RibbonGraph, VertexId};
use crate::SurfError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSig {
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceSig {
    /// 3g - 3 + n, the dimension-type complexity of the surface.
    pub fn complexity(&self) -> i64 {
        3 * self.genus as i64 - 3 + self.punctures as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexKind {
    /// Vertex of the original ribbon graph.
    Graph,
    /// Subdivision point introduced to anchor spikes.
    Subdiv,
    /// A puncture, carried by a single spike edge.
    Puncture,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Face {
    /// Directed sides in boundary order.
    pub word: Vec<HalfId>,
    /// Face of the unrefined graph this one descends from.
    pub origin: FaceId,
}

#[derive(Clone, Debug)]
pub struct SurfaceComplex {
    pub graph: RibbonGraph,
    pub vertex_kinds: Vec<VertexKind>,
    pub faces: Vec<Face>,
    pub sig: SurfaceSig,
    /// Punctures assigned to each face of the *unrefined* graph.
    pub decorations: Vec<u32>,
    /// For each edge of the unrefined graph, its chain of refined edges in
    /// tail-to-head order.
    pub old_edge_chains: Vec<Vec<usize>>,
    // derived lookups
    vertex_of: Vec<VertexId>,
    rot_pos: Vec<usize>,
    half_face: Vec<FaceId>,
    half_pos: Vec<usize>,
}

impl SurfaceComplex {
    /// Builds the closed decorated surface from a ribbon graph and per-face
    /// puncture counts (indexed by the canonical face order of `graph`).
    pub fn build(graph: RibbonGraph, decorations: Vec<u32>) -> Result<Self, SurfError> {
        graph.validate()?;
        let base_faces = graph.faces();
        if decorations.len() != base_faces.len() {
            return Err(SurfError::InvalidRibbon(format!(
                "expected {} face decorations, got {}",
                base_faces.len(),
                decorations.len()
            )));
        }
        let genus = graph.genus()?;
        let punctures: u32 = decorations.iter().sum();
        let sig = SurfaceSig { genus, punctures };
        if sig.complexity() <= 1 {
            return Err(SurfError::ComplexityTooLow(sig.complexity()));
        }
        Self::build_unchecked(graph, decorations, sig, base_faces)
    }

    /// Same as `build` but without the complexity gate. Used internally for
    /// cut pieces and scratch complexes.
    pub fn build_any(graph: RibbonGraph, decorations: Vec<u32>) -> Result<Self, SurfError> {
        graph.validate()?;
        let base_faces = graph.faces();
        if decorations.len() != base_faces.len() {
            return Err(SurfError::InvalidRibbon(format!(
                "expected {} face decorations, got {}",
                base_faces.len(),
                decorations.len()
            )));
        }
        let genus = graph.genus()?;
        let punctures: u32 = decorations.iter().sum();
        let sig = SurfaceSig { genus, punctures };
        Self::build_unchecked(graph, decorations, sig, base_faces)
    }

    fn build_unchecked(
        graph: RibbonGraph,
        decorations: Vec<u32>,
        sig: SurfaceSig,
        base_faces: Vec<Vec<HalfId>>,
    ) -> Result<Self, SurfError> {
        let (refined, vertex_kinds, half_map, old_edge_chains) =
            refine_with_spikes(&graph, &decorations, &base_faces);
        let faces_words = refined.faces();
        // Identify descendants: old face f still contains the image of its
        // first side (possibly as the first segment of a subdivided edge).
        let mut origin_of_face = vec![usize::MAX; faces_words.len()];
        let mut face_of_half = vec![usize::MAX; 2 * refined.edge_count()];
        let mut pos_of_half = vec![usize::MAX; 2 * refined.edge_count()];
        for (fi, w) in faces_words.iter().enumerate() {
            for (i, &h) in w.iter().enumerate() {
                face_of_half[h] = fi;
                pos_of_half[h] = i;
            }
        }
        for (of, w) in base_faces.iter().enumerate() {
            let img = half_map[w[0]];
            let fi = face_of_half[img];
            if origin_of_face[fi] != usize::MAX {
                return Err(SurfError::InvalidRibbon(
                    "face refinement produced inconsistent descent".into(),
                ));
            }
            origin_of_face[fi] = of;
        }
        if origin_of_face.iter().any(|&o| o == usize::MAX) {
            return Err(SurfError::InvalidRibbon(
                "face refinement lost a face".into(),
            ));
        }
        let faces: Vec<Face> = faces_words
            .into_iter()
            .enumerate()
            .map(|(fi, word)| Face {
                word,
                origin: origin_of_face[fi],
            })
            .collect();
        let vertex_of = refined.vertex_of_halves();
        let rot_pos = refined.rotation_positions();
        Ok(SurfaceComplex {
            graph: refined,
            vertex_kinds,
            faces,
            sig,
            decorations,
            old_edge_chains,
            vertex_of,
            rot_pos,
            half_face: face_of_half,
            half_pos: pos_of_half,
        })
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn vertex_of(&self, h: HalfId) -> VertexId {
        self.vertex_of[h]
    }

    /// Face lying along the directed side `h`.
    pub fn face_of_side(&self, h: HalfId) -> FaceId {
        self.half_face[h]
    }

    /// Position of side `h` in its face boundary word.
    pub fn pos_of_side(&self, h: HalfId) -> usize {
        self.half_pos[h]
    }

    pub fn rot_next(&self, h: HalfId) -> HalfId {
        self.graph.rot_next(h, &self.vertex_of, &self.rot_pos)
    }

    pub fn rot_prev(&self, h: HalfId) -> HalfId {
        let rot = &self.graph.rotations[self.vertex_of[h]];
        let p = self.rot_pos[h];
        rot[(p + rot.len() - 1) % rot.len()]
    }

    pub fn label(&self, e: usize) -> EdgeLabel {
        self.graph.labels[e]
    }

    /// Expands a directed half of the unrefined graph into the chain of
    /// refined directed halves traversing the same edge.
    pub fn expand_old_half(&self, old_half: HalfId) -> Vec<HalfId> {
        let chain = &self.old_edge_chains[old_half / 2];
        if old_half % 2 == 0 {
            chain.iter().map(|&ne| 2 * ne).collect()
        } else {
            chain.iter().rev().map(|&ne| 2 * ne + 1).collect()
        }
    }

    /// Expands a cyclic walk given in unrefined halves.
    pub fn expand_old_walk(&self, old_halves: &[HalfId]) -> Vec<HalfId> {
        old_halves
            .iter()
            .flat_map(|&h| self.expand_old_half(h))
            .collect()
    }

    /// The vertex at the corner following position `i` of face `f`
    /// (between sides `word[i]` and `word[i+1]`).
    pub fn corner_vertex(&self, f: FaceId, i: usize) -> VertexId {
        let w = &self.faces[f].word;
        self.vertex_of[pair(w[i])]
    }

    /// Number of corners of face `f` at original graph vertices.
    pub fn graph_corner_count(&self, f: FaceId) -> usize {
        let w = &self.faces[f].word;
        (0..w.len())
            .filter(|&i| self.vertex_kinds[self.corner_vertex(f, i)] == VertexKind::Graph)
            .count()
    }

    /// Number of punctures inside face `f` (corners at puncture vertices).
    pub fn face_punctures(&self, f: FaceId) -> u32 {
        let w = &self.faces[f].word;
        (0..w.len())
            .filter(|&i| self.vertex_kinds[self.corner_vertex(f, i)] == VertexKind::Puncture)
            .count() as u32
    }

    /// Checks V - E + F and puncture totals against the signature.
    pub fn check_euler(&self) -> Result<(), SurfError> {
        let chi = self.graph.vertex_count() as i64 - self.graph.edge_count() as i64
            + self.faces.len() as i64;
        if chi != 2 - 2 * self.sig.genus as i64 {
            return Err(SurfError::InvalidRibbon(format!(
                "Euler characteristic {chi} does not match genus {}",
                self.sig.genus
            )));
        }
        let total: u32 = (0..self.faces.len()).map(|f| self.face_punctures(f)).sum();
        if total != self.sig.punctures {
            return Err(SurfError::InvalidRibbon(format!(
                "puncture vertices ({total}) disagree with signature ({})",
                self.sig.punctures
            )));
        }
        Ok(())
    }
}

/// Splits punctured faces open with spike edges. Returns the refined graph,
/// vertex kinds, and the map from old half-edges to their image (for a
/// subdivided edge, the first segment seen from that half's vertex).
fn refine_with_spikes(
    graph: &RibbonGraph,
    decorations: &[u32],
    base_faces: &[Vec<HalfId>],
) -> (RibbonGraph, Vec<VertexKind>, Vec<HalfId>, Vec<Vec<usize>>) {
    let n_old_edges = graph.edge_count();
    // anchors[e] = (tail-side puncture count, head-side puncture count)
    let mut anchors = vec![(0u32, 0u32); n_old_edges];
    for (f, w) in base_faces.iter().enumerate() {
        let k = decorations[f];
        if k == 0 {
            continue;
        }
        let h0 = w[0];
        let e = edge_of(h0);
        if h0 % 2 == 0 {
            anchors[e].0 = k;
        } else {
            anchors[e].1 = k;
        }
    }

    let mut rotations: Vec<Vec<HalfId>> = graph.rotations.clone();
    let mut kinds = vec![VertexKind::Graph; rotations.len()];
    let mut labels: Vec<EdgeLabel> = Vec::new();
    let mut half_map = vec![usize::MAX; 2 * n_old_edges];
    let mut old_edge_chains: Vec<Vec<usize>> = vec![Vec::new(); n_old_edges];

    let new_edge = |labels: &mut Vec<EdgeLabel>, l: EdgeLabel| -> usize {
        labels.push(l);
        labels.len() - 1
    };

    for e in 0..n_old_edges {
        let (k_tail, k_head) = anchors[e];
        let label = graph.labels[e];
        if k_tail == 0 && k_head == 0 {
            let ne = new_edge(&mut labels, label);
            half_map[2 * e] = 2 * ne;
            half_map[2 * e + 1] = 2 * ne + 1;
            old_edge_chains[e] = vec![ne];
            continue;
        }
        // Chain: tail [m_tail] [m_head] head, with anchored spike fans.
        let mut chain_vertices = Vec::new();
        if k_tail > 0 {
            chain_vertices.push((k_tail, true));
        }
        if k_head > 0 {
            chain_vertices.push((k_head, false));
        }
        let mut segs = Vec::new();
        for _ in 0..=chain_vertices.len() {
            segs.push(new_edge(&mut labels, label));
        }
        half_map[2 * e] = 2 * segs[0];
        half_map[2 * e + 1] = 2 * segs[segs.len() - 1] + 1;
        old_edge_chains[e] = segs.clone();
        for (ci, &(k, tail_side)) in chain_vertices.iter().enumerate() {
            let m = rotations.len();
            kinds.push(VertexKind::Subdiv);
            let g_toward_tail = 2 * segs[ci] + 1;
            let g_toward_head = 2 * segs[ci + 1];
            let mut spikes = Vec::new();
            for _ in 0..k {
                let s = new_edge(&mut labels, EdgeLabel::Aux);
                let p = kinds.len();
                kinds.push(VertexKind::Puncture);
                rotations.push(vec![2 * s + 1]);
                spikes.push(2 * s);
                debug_assert_eq!(p + 1, kinds.len());
            }
            // The anchored face runs v -> m -> w; its gap at m sits after the
            // germ back toward v, so the spike fan goes there.
            let mut rot = Vec::new();
            if tail_side {
                rot.push(g_toward_tail);
                rot.extend(spikes.iter().copied());
                rot.push(g_toward_head);
            } else {
                rot.push(g_toward_head);
                rot.extend(spikes.iter().copied());
                rot.push(g_toward_tail);
            }
            rotations.insert(m, rot);
            // `insert` at the end only; assert to keep indices straight.
            debug_assert_eq!(m + 1 + k as usize, rotations.len());
        }
        // Wire the chain ends into the original vertex rotations.
        // tail keeps half 2*segs[0]; head keeps 2*segs.last+1. Those are the
        // images already recorded in half_map; substitute below.
    }

    // Substitute images of old halves in the original vertex rotations.
    for rot in rotations.iter_mut().take(graph.vertex_count()) {
        for h in rot.iter_mut() {
            *h = half_map[*h];
        }
    }

    (
        RibbonGraph { rotations, labels },
        kinds,
        half_map,
        old_edge_chains,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_crossing_sphere() -> RibbonGraph {
        // Two curves crossing twice on the sphere (signs +1 then -1 under
        // the left-to-right convention); four bigon faces.
        crate::diagrams::pair_ribbon(&[0, 1], &[1, -1])
    }

    #[test]
    fn sphere_with_four_bigons() {
        let g = two_crossing_sphere();
        let faces = g.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|w| w.len() == 2));
        assert_eq!(g.genus().unwrap(), 0);
    }

    #[test]
    fn complexity_gate() {
        let g = two_crossing_sphere();
        // 4 punctures on S_0 gives 3g-3+n = 1: rejected.
        let err = SurfaceComplex::build(g.clone(), vec![1, 1, 1, 1]).unwrap_err();
        match err {
            SurfError::ComplexityTooLow(c) => assert_eq!(c, 1),
            other => panic!("unexpected error {other:?}"),
        }
        // 5 punctures gives S_{0,5}: accepted.
        let c = SurfaceComplex::build(g, vec![2, 1, 1, 1]).unwrap();
        assert_eq!(c.sig, SurfaceSig { genus: 0, punctures: 5 });
        c.check_euler().unwrap();
    }

    #[test]
    fn spike_refinement_preserves_faces_and_euler() {
        let g = two_crossing_sphere();
        let c = SurfaceComplex::build(g, vec![2, 1, 1, 1]).unwrap();
        assert_eq!(c.face_count(), 4);
        let per_face: Vec<u32> = (0..4).map(|f| c.face_punctures(f)).collect();
        let mut sorted = per_face.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 1, 2]);
        // every face of the refined complex still has 2 graph corners
        for f in 0..4 {
            assert_eq!(c.graph_corner_count(f), 2);
        }
    }
}

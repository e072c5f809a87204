//! Ribbon (fat) graphs: vertex rotation systems with edge pairings, face
//! tracing and Euler characteristic bookkeeping.
//!
//! Half-edge `h` belongs to edge `h / 2`; `h ^ 1` is its partner. A vertex
//! rotation lists the half-edges emanating from it in clockwise order, so
//! that the faces -- the orbits of `h -> rot_next(pair(h))` -- lie to the
//! left of their directed sides. The orbit entry `h` stands for a directed
//! traversal of edge `h / 2` starting at the vertex carrying `h`.

use crate::SurfError;
use serde::{Deserialize, Serialize};

pub type HalfId = usize;
pub type EdgeId = usize;
pub type VertexId = usize;
pub type FaceId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// Arc of the first curve; payload is the gap index along it.
    CurveA(usize),
    /// Arc of the second curve; payload is the arc index along it.
    CurveB(usize),
    /// Anything else (bridges, spikes, model scaffolding).
    Aux,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RibbonGraph {
    /// Clockwise half-edge rotation at each vertex.
    pub rotations: Vec<Vec<HalfId>>,
    /// One label per edge (half-edges `2e` and `2e+1`).
    pub labels: Vec<EdgeLabel>,
}

pub fn pair(h: HalfId) -> HalfId {
    h ^ 1
}

pub fn edge_of(h: HalfId) -> EdgeId {
    h / 2
}

impl RibbonGraph {
    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    /// Checks that every half-edge occurs exactly once in the rotations.
    pub fn validate(&self) -> Result<(), SurfError> {
        let n_half = 2 * self.edge_count();
        let mut seen = vec![false; n_half];
        for (v, rot) in self.rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(SurfError::InvalidRibbon(format!(
                    "vertex {v} has empty rotation"
                )));
            }
            for &h in rot {
                if h >= n_half {
                    return Err(SurfError::InvalidRibbon(format!(
                        "half-edge {h} out of range at vertex {v}"
                    )));
                }
                if seen[h] {
                    return Err(SurfError::InvalidRibbon(format!(
                        "half-edge {h} appears twice"
                    )));
                }
                seen[h] = true;
            }
        }
        if let Some(h) = seen.iter().position(|s| !s) {
            return Err(SurfError::InvalidRibbon(format!(
                "half-edge {h} appears in no rotation"
            )));
        }
        Ok(())
    }

    /// Vertex carrying each half-edge.
    pub fn vertex_of_halves(&self) -> Vec<VertexId> {
        let mut out = vec![usize::MAX; 2 * self.edge_count()];
        for (v, rot) in self.rotations.iter().enumerate() {
            for &h in rot {
                out[h] = v;
            }
        }
        out
    }

    /// Position of each half-edge inside its vertex rotation.
    pub fn rotation_positions(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; 2 * self.edge_count()];
        for rot in &self.rotations {
            for (i, &h) in rot.iter().enumerate() {
                out[h] = i;
            }
        }
        out
    }

    /// Successor of `h` in its vertex rotation.
    pub fn rot_next(&self, h: HalfId, vertex_of: &[VertexId], rot_pos: &[usize]) -> HalfId {
        let rot = &self.rotations[vertex_of[h]];
        rot[(rot_pos[h] + 1) % rot.len()]
    }

    /// Traces the faces. Each face is the cyclic list of directed sides in
    /// boundary order; faces are rotated to start at their least half-edge
    /// and sorted by that half-edge, so the output is canonical.
    pub fn faces(&self) -> Vec<Vec<HalfId>> {
        let vertex_of = self.vertex_of_halves();
        let rot_pos = self.rotation_positions();
        let n_half = 2 * self.edge_count();
        let mut seen = vec![false; n_half];
        let mut faces = Vec::new();
        for start in 0..n_half {
            if seen[start] {
                continue;
            }
            let mut word = Vec::new();
            let mut h = start;
            loop {
                seen[h] = true;
                word.push(h);
                h = self.rot_next(pair(h), &vertex_of, &rot_pos);
                if h == start {
                    break;
                }
            }
            faces.push(word);
        }
        faces
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces().len() as i64
    }

    /// Genus of the closed orientable surface this graph fills.
    pub fn genus(&self) -> Result<u32, SurfError> {
        let chi = self.euler_characteristic();
        if chi > 2 || chi % 2 != 0 {
            return Err(SurfError::InvalidRibbon(format!(
                "Euler characteristic {chi} is not of closed-surface form"
            )));
        }
        Ok(((2 - chi) / 2) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One-vertex rotation [a0 b0 a1 b1] is the square torus.
    #[test]
    fn torus_has_one_face() {
        let g = RibbonGraph {
            rotations: vec![vec![0, 2, 1, 3]],
            labels: vec![EdgeLabel::CurveA(0), EdgeLabel::CurveB(0)],
        };
        g.validate().unwrap();
        let faces = g.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
        assert_eq!(g.genus().unwrap(), 1);
    }

    #[test]
    fn rejects_duplicate_half_edge() {
        let g = RibbonGraph {
            rotations: vec![vec![0, 0, 1, 3, 2]],
            labels: vec![EdgeLabel::Aux, EdgeLabel::Aux],
        };
        assert!(g.validate().is_err());
    }
}

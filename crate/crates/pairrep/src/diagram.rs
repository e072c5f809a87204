//! Validated two-curve crossing patterns with their ambient surface.

use crate::RepError;
use serde::{Deserialize, Serialize};
use surfkit::complex::SurfaceComplex;
use surfkit::curve::{reduce_curve, CurveClass, TransversalCurve};
use surfkit::diagrams;
use surfkit::ribbon::EdgeLabel;
use surfkit::walk::cycle_pushoff;

/// Two essential simple closed curves in minimal position, described by
/// crossing combinatorics: crossings are numbered along `a`, visited along
/// `b` in `order_along_b`, with `signs[i] = +1` exactly when `b` crosses
/// `a` from its left to its right at crossing `i`. Punctures are assigned
/// per face of the ribbon closure.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagramData {
    pub order_along_b: Vec<usize>,
    pub signs: Vec<i8>,
    pub punctures: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct PairDiagram {
    pub data: DiagramData,
    pub complex: SurfaceComplex,
    pos_b: Vec<usize>,
    /// refined edge id -> (old b-arc, position in its chain), for b edges
    b_chain_pos: Vec<Option<(usize, usize)>>,
    /// reduced canonical pushoffs of the two defining curves
    pub a_curve: TransversalCurve,
    pub b_curve: TransversalCurve,
}

impl PairDiagram {
    pub fn n(&self) -> usize {
        self.data.order_along_b.len()
    }

    /// Position of crossing `i` along `b`.
    pub fn pos_along_b(&self, i: usize) -> usize {
        self.pos_b[i]
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.data.signs[i]
    }

    /// Side of `a` on which the `b` germ leaving crossing `i` departs.
    pub fn depart_side(&self, i: usize) -> i8 {
        -self.data.signs[i]
    }

    /// Side of `a` on which the `b` germ arriving at crossing `i` sits.
    pub fn arrive_side(&self, i: usize) -> i8 {
        self.data.signs[i]
    }

    /// Endpoints of arc `j` of `b`: (from, to) crossing ids.
    pub fn arc_ends(&self, j: usize) -> (usize, usize) {
        let n = self.n();
        (
            self.data.order_along_b[j],
            self.data.order_along_b[(j + 1) % n],
        )
    }

    /// Builds and fully validates a pattern.
    pub fn new(data: DiagramData) -> Result<Self, RepError> {
        let n = data.order_along_b.len();
        if n == 0 {
            return Err(RepError::InvalidPattern("need at least one crossing".into()));
        }
        if data.signs.len() != n {
            return Err(RepError::InvalidPattern("signs length mismatch".into()));
        }
        let graph = diagrams::pair_ribbon(&data.order_along_b, &data.signs);
        let complex = SurfaceComplex::build(graph, data.punctures.clone())
            .map_err(|e| RepError::InvalidPattern(e.to_string()))?;
        let mut pos_b = vec![usize::MAX; n];
        for (j, &c) in data.order_along_b.iter().enumerate() {
            pos_b[c] = j;
        }
        // face shape validation: no monogon, no unpunctured bigon
        for f in 0..complex.face_count() {
            let corners = complex.graph_corner_count(f);
            if corners <= 1 {
                return Err(RepError::InvalidPattern(format!(
                    "face {f} is a monogon"
                )));
            }
            if corners == 2 && complex.face_punctures(f) == 0 {
                return Err(RepError::NotMinimal(format!(
                    "face {f} is an empty bigon"
                )));
            }
        }
        // chain positions for b edges
        let mut b_chain_pos = vec![None; complex.edge_count()];
        for (old, chain) in complex.old_edge_chains.iter().enumerate() {
            if let EdgeLabel::CurveB(j) = complex.graph.labels[chain[0]] {
                let _ = old;
                for (pos, &ne) in chain.iter().enumerate() {
                    b_chain_pos[ne] = Some((j, pos));
                }
            }
        }
        // canonical pushoffs of the defining curves, and essentiality
        let a_walk = complex.expand_old_walk(&diagrams::a_cycle_halves(n));
        let b_walk = complex.expand_old_walk(&diagrams::b_cycle_halves(n));
        let a_curve = reduce_curve(&complex, &cycle_pushoff(&complex, &a_walk, 1)?)?;
        let b_curve = reduce_curve(&complex, &cycle_pushoff(&complex, &b_walk, 1)?)?;
        let d = PairDiagram {
            data,
            complex,
            pos_b,
            b_chain_pos,
            a_curve,
            b_curve,
        };
        for (name, c) in [("a", &d.a_curve), ("b", &d.b_curve)] {
            if surfkit::ops::classify_curve(&d.complex, c)? != CurveClass::Essential {
                return Err(RepError::NotEssential(if name == "a" { "a" } else { "b" }));
            }
        }
        Ok(d)
    }

    /// Old b-arc id and chain position for a refined edge, if it is part
    /// of `b`.
    pub fn b_arc_of_edge(&self, refined_edge: usize) -> Option<(usize, usize)> {
        self.b_chain_pos[refined_edge]
    }

    /// The defining pair realizes its crossing count:
    /// i(a, b) equals the number of crossings.
    pub fn check_intersection_realized(&self) -> Result<(), RepError> {
        let i = surfkit::ops::intersection_number(&self.complex, &self.a_curve, &self.b_curve)?;
        if i != self.n() {
            return Err(RepError::NotMinimal(format!(
                "pattern has {} crossings but i(a,b) = {i}",
                self.n()
            )));
        }
        Ok(())
    }
}

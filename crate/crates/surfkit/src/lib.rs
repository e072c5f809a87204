//! Surface-and-curve kernel.
//!
//! Builds decorated surfaces from ribbon graphs, classifies complements of
//! curve systems, reduces transversal curves to canonical taut position and
//! computes exact geometric intersection numbers. Everything is integer or
//! rational arithmetic; no floats anywhere.

pub mod complex;
pub mod curve;
pub mod diagrams;
pub mod ops;
pub mod overlay;
pub mod rat;
pub mod ribbon;
pub mod walk;

pub use complex::{Face, SurfaceComplex, SurfaceSig, VertexKind};
pub use curve::{Chord, ChordEnd, CurveClass, TransversalCurve};
pub use ops::{classify_curve, classify_cut, complement_witnesses, cut_components, disjoint, fills_surface, intersection_number, isotopic, tighten_pair};
pub use overlay::{ComponentReport, CutComponents, Overlay};
pub use rat::Rat;
pub use ribbon::{EdgeLabel, FaceId, HalfId, RibbonGraph, VertexId};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SurfError {
    #[error("invalid ribbon structure: {0}")]
    InvalidRibbon(String),
    #[error("complexity too low: 3g-3+n = {0} (need > 1)")]
    ComplexityTooLow(i64),
    #[error("curve is not embedded: {0}")]
    NotEmbedded(String),
    #[error("curve is not reduced")]
    NotReduced,
    #[error("curves are not disjoint")]
    NotDisjoint,
    #[error("invalid curve data: {0}")]
    InvalidCurve(String),
}

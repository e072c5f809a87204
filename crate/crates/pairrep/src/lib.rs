//! Curve replacement on two-curve patterns.
//!
//! A `PairDiagram` records two essential simple closed curves `a`, `b` in
//! minimal position by their crossing combinatorics. Replacement moves use
//! arcs of `b` with both endpoints inside a sub-interval `J` of `a` to
//! produce a new curve and a smaller interval; nested sequences iterate
//! until the running curve reaches `b`.

pub mod apply;
pub mod corpus;
pub mod derive;
pub mod diagram;
pub mod interval;
pub mod moves;
pub mod sequence;

pub use apply::{apply_move, MoveOutcome};
pub use diagram::PairDiagram;
pub use interval::Interval;
pub use moves::{enumerate_moves, MoveKind, ReplacementMove};
pub use corpus::{random_diagram, SurfaceFamily};
pub use sequence::{nested_sequence, Policy, RunStep, SequenceRun};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("pattern is not minimal: {0}")]
    NotMinimal(String),
    #[error("curve {0} is not essential")]
    NotEssential(&'static str),
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("no legal move available with {0} interval crossings")]
    NoLegalMove(usize),
    #[error("policy stuck: {0}")]
    PolicyStuck(String),
    #[error("surface kernel error: {0}")]
    Surf(#[from] surfkit::SurfError),
}

//! Brute-force oracles, written independently of the main crates and kept
//! deliberately naive. Tests compare the production implementations against
//! these on small instances.

pub mod cone;
pub mod faces;

pub use cone::extreme_rays_oracle;
pub use faces::{face_count_oracle, genus_oracle, trace_faces_oracle};

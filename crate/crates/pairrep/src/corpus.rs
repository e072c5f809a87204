//! Seeded random pattern generation for the experiment corpora.

use crate::diagram::DiagramData;
use crate::{PairDiagram, RepError};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

/// The desk-scale surface families experiments run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceFamily {
    /// Sphere with five punctures.
    Sphere5,
    /// Torus with two punctures.
    Torus2,
    /// Closed surface of genus two.
    Genus2,
}

impl SurfaceFamily {
    pub fn genus(self) -> u32 {
        match self {
            SurfaceFamily::Sphere5 => 0,
            SurfaceFamily::Torus2 => 1,
            SurfaceFamily::Genus2 => 2,
        }
    }
    pub fn punctures(self) -> u32 {
        match self {
            SurfaceFamily::Sphere5 => 5,
            SurfaceFamily::Torus2 => 2,
            SurfaceFamily::Genus2 => 0,
        }
    }
    pub fn name(self) -> &'static str {
        match self {
            SurfaceFamily::Sphere5 => "S0,5",
            SurfaceFamily::Torus2 => "S1,2",
            SurfaceFamily::Genus2 => "S2,0",
        }
    }
}

/// Draws a valid random pattern of `n` crossings on the family, retrying
/// internally. The result is fully validated (minimal position, essential
/// curves). Returns the pattern and the number of attempts used.
pub fn random_diagram(
    family: SurfaceFamily,
    n: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<(PairDiagram, usize), RepError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for attempt in 1..=max_attempts {
        let mut order: Vec<usize> = (1..n).collect();
        order.shuffle(&mut rng);
        order.insert(0, 0);
        let signs: Vec<i8> = (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
        let graph = surfkit::diagrams::pair_ribbon(&order, &signs);
        let genus = match graph.genus() {
            Ok(g) => g,
            Err(_) => continue,
        };
        if genus != family.genus() {
            continue;
        }
        let faces = graph.faces();
        // count graph corners per face of the raw closure: sides alternate
        // between the curves, so corner count = word length
        let mut punctures = vec![0u32; faces.len()];
        let mut must = 0u32;
        let mut monogon = false;
        for (fi, w) in faces.iter().enumerate() {
            if w.len() <= 1 {
                monogon = true;
            }
            if w.len() == 2 {
                punctures[fi] = 1;
                must += 1;
            }
        }
        if monogon || must > family.punctures() {
            continue;
        }
        let mut rest = family.punctures() - must;
        while rest > 0 {
            let fi = rng.gen_range(0..faces.len());
            punctures[fi] += 1;
            rest -= 1;
        }
        let data = DiagramData {
            order_along_b: order,
            signs,
            punctures,
        };
        match PairDiagram::new(data) {
            Ok(d) => return Ok((d, attempt)),
            Err(_) => continue,
        }
    }
    Err(RepError::InvalidPattern(format!(
        "no valid {n}-crossing pattern on {} after {max_attempts} attempts",
        family.name()
    )))
}

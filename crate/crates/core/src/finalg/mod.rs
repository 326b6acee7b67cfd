//! Module theory over finite-dimensional algebras given by structure constants.

pub mod algebra;
pub mod decompose;
pub mod homological;
pub mod iso;
pub mod module;

use serde::{Deserialize, Serialize};

pub use algebra::{EnumerationStrategy, FiniteAlgebra, MonomialPresentation, QuiverArrow};
pub use homological::*;
pub use iso::{is_isomorphic, IsoResult};
pub use module::{ModuleMap, RightModule};

/// Cutoff for bounded procedures and seed for randomized isomorphism sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub cutoff: u32,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cutoff: 24,
            seed: 0,
        }
    }
}

impl Limits {
    pub fn with_cutoff(cutoff: u32) -> Self {
        Limits {
            cutoff,
            ..Limits::default()
        }
    }
}

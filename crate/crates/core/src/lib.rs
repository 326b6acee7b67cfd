//! Exact homological invariants of finite-dimensional algebras over prime fields.
//!
//! Conventions: modules are right modules, elements are column vectors and an
//! algebra element `a` acts by a matrix `ρ(a)`, so `ρ(ab) = ρ(b)·ρ(a)`.
//! Vertex indices are 0-based internally and 1-based in every user-facing text.

pub mod approx;
pub mod catalog;
pub mod exactmat;
pub mod extnat;
pub mod finalg;
pub mod input;
pub mod nakayama;
pub mod par;
pub mod suites;
pub mod verdicts;

pub use exactmat::{Matrix, PrimeField};
pub use extnat::{ExtNat, Provenance, Quantity, Tri};
pub use finalg::{FiniteAlgebra, Limits, RightModule};
pub use nakayama::{Interval, KupischSeries, SeriesKind};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("Kupisch condition violated at index {index}")]
    ViolatedKupischCondition { index: usize },
    #[error("semisimple algebra: no Nakayama series of a connected non-semisimple algebra")]
    Semisimple,
    #[error("invalid interval M({top},{len})")]
    InvalidInterval { top: usize, len: usize },
    #[error("relations do not bound the path length (not admissible)")]
    NonAdmissible,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: usize, p: u32 },
    #[error("associativity fails on ({0}, {1}, {2})")]
    AssociativityFailure(String, String, String),
    #[error("declared unit does not act as the identity")]
    BadUnit,
    #[error("bad idempotents: {0}")]
    BadIdempotents(String),
    #[error("declared radical is not a two-sided ideal")]
    RadicalNotIdeal,
    #[error("declared radical is not nilpotent")]
    RadicalNotNilpotent,
    #[error("algebra is not split basic: {0}")]
    NotSplit(String),
    #[error("algebras are over different fields")]
    FieldMismatch,
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("index {index} out of range (1..={max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("no strategy to enumerate indecomposable modules of this algebra")]
    NoEnumerationStrategy,
    #[error("module is not a generator-cogenerator: missing {0}")]
    NotGeneratorCogenerator(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Homological CSS codes from tessellations.
//!
//! Build chain complexes (Euclidean, hyperbolic, semi-hyperbolic, 4D),
//! turn them into CSS codes, compute exact distances, and estimate
//! thresholds and memory times with matching and cellular-automaton decoders.
//!
//! ```
//! use homcode::{complex::build_toric_2d, code::CssCode};
//!
//! let c = build_toric_2d(4).unwrap();
//! let code = CssCode::from_complex(&c, 1).unwrap();
//! assert_eq!((code.n(), code.k()), (32, 2));
//! ```

pub mod analytic;
pub mod artifact;
pub mod cli;
pub mod code;
pub mod complex;
pub mod coxeter;
pub mod decode;
pub mod distance;
pub mod gf2;
pub mod graph;
pub mod sim;

pub use code::{CssCode, LogicalBasis, Pauli};
pub use complex::ChainComplex;
pub use gf2::{BitMatrix, BitVector};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coset enumeration exceeded {limit} cosets; the quotient is possibly infinite")]
    CosetLimit { limit: usize },
    #[error("the code encodes no logical qubits")]
    TrivialCode,
    #[error("invalid syndrome: {0}")]
    InvalidSyndrome(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration cap of {cap} operators reached (partial count {partial})")]
    EnumerationCap { cap: usize, partial: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {label} out of range for n = {n}")]
    LabelOutOfRange { label: i64, n: usize },
    #[error("label {0} appears more than once")]
    DuplicateLabel(i64),
    #[error("block of size {0} (blocks have size 1 or 2)")]
    BlockTooLarge(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("node {0} is not a defect")]
    NotADefect(usize),
    #[error("pair {{{0},{1}}} violates planarity")]
    PlanarityViolation(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid modulus {0} (must be at least 2)")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a unit in {1}")]
    NotAUnit(String, String),
    #[error("operation needs {needed}, got {ring}")]
    UnsupportedRing { needed: &'static str, ring: String },
    #[error("epsilon is not a unit in {0}")]
    EpsilonNotUnit(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("d∘d ≠ 0 at degree {0}")]
    NotAComplex(i64),
    #[error("degree {0} out of range")]
    DegreeOutOfRange(i64),
    #[error("invalid submodule data: {0}")]
    InvalidSubmodule(String),
    #[error("{0}")]
    Precondition(String),
    #[error("map is not multiplicative: {0}")]
    NotMultiplicative(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("k = {k} exceeds the number of variables n = {n}")]
    KExceedsVariables { k: usize, n: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("symbol {0} out of range for the declared ring")]
    SymbolOutOfRange(String),

    #[error("place {place} out of range (d = {d})")]
    PlaceOutOfRange { place: u32, d: u32 },

    #[error("word lies outside the virtual algebra: {0}")]
    OutsideVirtualAlgebra(String),

    #[error("element is not a scalar multiple of the reference: {0}")]
    NotProportional(String),

    #[error("element is not in the span of standard bitableaux of its content")]
    OutsideStandardSpan,

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,

    #[error("rewrite into the generating set failed")]
    GeneratorRewriteFailed,

    #[error("duality image is not defined for {0}")]
    UnsupportedDuality(String),

    #[error("no closed eigenvalue formula for {0}")]
    NoClosedForm(String),

    #[error("invalid central element spec: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared across the enumeration, orbit and geometry modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must sum to the temperament {expected}, got {actual}")]
    SumMismatch { expected: u32, actual: u64 },
    #[error("chord parts must be positive integers")]
    NonPositivePart,
    #[error("cardinality {n} exceeds temperament {l}")]
    CardinalityOverflow { n: usize, l: u32 },
    #[error("cardinality {n} out of range for temperament {l}")]
    CardinalityOutOfRange { n: usize, l: u32 },
    #[error("operation requires at least {required} parts, got {actual}")]
    CardinalityTooSmall { required: usize, actual: usize },
    #[error("temperament must be between 1 and {max}, got {l}")]
    TemperamentOutOfRange { l: u64, max: u32 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("problem too large: {states} states exceed the enumeration cap of {cap}")]
    ProblemTooLarge { states: u128, cap: u128 },
    #[error("count exceeds the exact 128-bit range")]
    CountOverflow,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid face selector")]
    InvalidSelector,
    #[error("direction vector must be non-zero")]
    ZeroDirection,
    #[error("chord coincides with the orthocentre; the joining line is undefined")]
    DegenerateAtOrthocentre,
    #[error("shell index {k} out of range for n={n}, L={l}")]
    ShellOutOfRange { k: u32, n: usize, l: u32 },
    #[error("unknown table id: {0}")]
    UnknownTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

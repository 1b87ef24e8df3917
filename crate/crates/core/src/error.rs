use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator {letter} is outside a free product of rank {rank}")]
    LetterOutOfRange { letter: u8, rank: u8 },

    #[error("boundary is undefined on degree-0 chains")]
    DegreeZeroBoundary,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("tensor factor {index} has nonzero augmentation")]
    NonzeroAugmentation { index: usize },

    #[error("[{element}|...] is not a cycle: the entry is not an involution")]
    NotAnInvolution { element: String },

    #[error("coinvariant space of dimension {dimension} exceeds the cap {cap}")]
    DimensionCap { dimension: usize, cap: usize },

    #[error("invalid cell complex description: {0}")]
    InvalidComplex(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

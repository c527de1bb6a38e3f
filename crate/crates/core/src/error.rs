use thiserror::Error;

/// Errors produced by `lwd-core`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("generator rows are linearly dependent (rank {rank} < {rows} rows)")]
    DependentRows { rank: usize, rows: usize },

    #[error("dimension {dimension} exceeds the enumeration cap of {cap} (use force to lift it)")]
    EnumerationCap { dimension: usize, cap: u32 },

    #[error("support subcode of dimension {dimension} exceeds the cap of {cap}")]
    SupportSubcodeCap { dimension: usize, cap: u32 },

    #[error("vector is not a codeword of the code")]
    NotACodeword,

    #[error("the all-zero word has no zero-neighbor status")]
    ZeroWord,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("puncture destroys dimension: coordinate {position} carries a weight-1 codeword")]
    PunctureRankDrop { position: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not consistent with transitive invariance: {numerator} is not divisible by {denominator} at weight {weight}")]
    NotIntegral {
        weight: usize,
        numerator: String,
        denominator: usize,
    },

    #[error("odd and even weights disagree on the extended count at weight {weight}")]
    InconsistentTally { weight: usize },

    #[error("negative count at weight {weight}")]
    NegativeCount { weight: usize },

    #[error("tally has nonzero count at odd weight {weight}, expected an extended-code tally")]
    OddWeightInExtended { weight: usize },

    #[error("tally {what} has nonzero count at odd weight {weight}")]
    OddWeightOnlyOdd { what: &'static str, weight: usize },

    #[error("{sub} is not a subcode of {sup}")]
    NotSubcode {
        sub: &'static str,
        sup: &'static str,
    },

    #[error("generator {index} is not an automorphism of {code}")]
    NotAutomorphism { index: usize, code: &'static str },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

/// Coarse grouping of [`Error`] variants, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Cap,
    Identity,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::InvalidPermutation(_) => ErrorKind::Parse,
            Error::EnumerationCap { .. } | Error::SupportSubcodeCap { .. } => ErrorKind::Cap,
            Error::NotIntegral { .. }
            | Error::NegativeCount { .. }
            | Error::InconsistentTally { .. }
            | Error::OddWeightInExtended { .. } => ErrorKind::Identity,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

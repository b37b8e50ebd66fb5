use thiserror::Error;

use crate::field::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown builtin algebra '{0}'")]
    UnknownBuiltin(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("axiom violated: {0}")]
    AxiomViolation(String),

    #[error("bilinear form of the counit is degenerate (rank {rank} < {dim})")]
    DegenerateForm { rank: usize, dim: usize },

    #[error("no Frobenius functional found after {tried} candidates ({})", if *.definitive { "definitive: none exists" } else { "inconclusive" })]
    NotFound { tried: u64, definitive: bool },

    #[error("side mismatch: {0}")]
    SideMismatch(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("computation too large: {0}")]
    TooLarge(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn dims(op: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch {
            op,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn fields(left: Field, right: Field) -> Self {
        Error::FieldMismatch { left, right }
    }
}

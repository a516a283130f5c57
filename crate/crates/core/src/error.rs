use thiserror::Error;

use crate::coxeter::CoxType;

/// Errors raised by the library. Lifting has its own error type,
/// [`crate::kernel::LiftError`], since its failures carry diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is out of range for type {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("generator index {index} is out of range for {typ}")]
    GeneratorOutOfRange { typ: CoxType, index: usize },
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: CoxType, found: CoxType },
    #[error("operation requires a type D group, found {0}")]
    NotTypeD(CoxType),
    #[error("invalid signed permutation for {typ}: {reason}")]
    InvalidElement { typ: CoxType, reason: String },
    #[error("parabolic subgroup needs at least one generator")]
    EmptyParabolic,
    #[error("relation length must be at least 2, got {0}")]
    RelationTooShort(usize),
    #[error("cannot parse token {token:?}: {reason}")]
    Parse { token: String, reason: String },
    #[error("homomorphism spec expects {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("malformed interchange data: {0}")]
    Interchange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

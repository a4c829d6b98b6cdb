use std::io;

/// Errors raised by the algebraic engine and the file formats.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("cutoff {cutoff} exceeded while computing {what}")]
    CutoffExceeded { cutoff: usize, what: String },
    #[error("decomposition inconclusive after {attempts} splitting attempts on a module of dimension {dim}")]
    DecompositionInconclusive { attempts: usize, dim: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("not Gorenstein-projective: {0}")]
    NotGproj(String),
    #[error("catalog is not exhaustive: {0}")]
    NonExhaustive(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("class violation: {0}")]
    ClassViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

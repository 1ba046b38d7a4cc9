//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not diagonalizable over the rationals: {0}")]
    NotDiagonalizable(String),

    #[error("eigenvalue discovery out of supported range: {0}")]
    SpectrumOutOfRange(String),

    #[error("eigenspace coupling graph is not a path: {0}")]
    NotAPath(String),

    #[error("operator is not a scalar multiple of the identity: {0}")]
    NotScalar(String),

    #[error("eigenvalues do not form a single q^2-geometric string: {0}")]
    NotGeometricString(String),

    #[error("generated module violates its defining relations: {0}")]
    ConventionFailure(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid instance file: {0}")]
    InvalidInstance(String),
}

//! Error type shared by all toolkit modules.

use thiserror::Error;

/// Errors reported by basis validation, state construction, and measurement
/// analysis.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square or has zero dimension ({rows}x{cols})")]
    InvalidShape { rows: usize, cols: usize },
    #[error("matrix is not Hermitian: max |G_ij - conj(G_ji)| = {defect:.3e}")]
    NotHermitian { defect: f64 },
    #[error("diagonal entry {index} is not 1: found {found}")]
    NotUnitDiagonal { index: usize, found: String },
    #[error("Gram matrix is not positive definite (basis states linearly dependent): min eigenvalue = {min_eigenvalue:.3e}")]
    NotPositiveDefinite { min_eigenvalue: f64 },
    #[error("off-diagonal overlap |G_{i}{j}| = {magnitude} is not strictly below 1")]
    OverlapOutOfRange { i: usize, j: usize, magnitude: f64 },
    #[error("unsupported matrix-power exponent {exponent}; supported: -1, -1/2, 1/2, 1")]
    UnsupportedExponent { exponent: f64 },
    #[error("Cholesky factorization failed: matrix numerically lost positive definiteness")]
    CholeskyFailure,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("the two basis indices must differ")]
    SameIndex,
    #[error("operation is defined for a two-state basis pair only, got d = {dim}")]
    PairBasisOnly { dim: usize },
    #[error("state norm violates unit normalization: psi^dag G psi = {found}")]
    NormViolation { found: String },
    #[error("invalid probability distribution: {reason}")]
    InvalidDistribution { reason: String },
    #[error("weights have imaginary content above tolerance: max |Im w_i| = {max_imag:.3e}")]
    ComplexWeights { max_imag: f64 },
    #[error("weight vectors have mismatched lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("two-level state is not normalizable: 1 + lambda s* + s lambda* = {value:.3e} <= 0")]
    NotNormalizable { value: f64 },
    #[error("parameter {name} = {value} outside allowed range {range}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error(
        "outcome probability {value:.6} at slot {index} lies outside [0, 1]; sampling refused"
    )]
    InvalidProbabilities { index: usize, value: f64 },
    #[error("projector relation violated: {relation} residual = {residual:.3e}")]
    RelationViolated {
        relation: &'static str,
        residual: f64,
    },
    #[error("state matrix or vector has shape inconsistent with basis dimension {dim}")]
    DimensionMismatch { dim: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input matrix is not Hermitian to working tolerance.
    #[error("matrix is not Hermitian: max |A - A^H| entry = {defect:.3e}")]
    NonHermitian { defect: f64 },

    /// Matrix expected to be positive semidefinite has a genuinely negative
    /// eigenvalue (below the clamping tolerance).
    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eig:.3e}")]
    NotPositive { min_eig: f64 },

    /// Density operator trace is not 1.
    #[error("density operator trace must be 1, got {trace}")]
    BadTrace { trace: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("rank {rank} out of range for dimension {dim}")]
    RankOutOfRange { rank: usize, dim: usize },

    /// An iterative routine (eigensolver, quadrature, curve refinement)
    /// exceeded its iteration or refinement cap.
    #[error("no convergence: {context}")]
    NoConvergence { context: String },

    /// Binary distribution parameter p or q hit 0 or 1, where the feasible
    /// region degenerates.
    #[error("degenerate distribution parameter {value} (must lie strictly inside (0,1))")]
    DegenerateDistribution { value: f64 },

    /// Probability vector fails to be a distribution.
    #[error("invalid distribution: {reason}")]
    InvalidDistribution { reason: String },

    /// Scalar argument outside its documented range.
    #[error("{name} = {value} out of range")]
    OutOfRange { name: &'static str, value: f64 },

    /// Tangent-prior relation has no solution at this angle.
    #[error("tangent prior undefined at alpha = {alpha} (sin(theta_q - alpha) vanishes)")]
    TangentUndefined { alpha: f64 },

    /// Argument leaves the implemented branch of a special function.
    #[error("domain error: {what}")]
    DomainError { what: String },

    /// Fidelity observable requested in strict mode on a pair where the
    /// negative state's kernel overlaps the positive state's support.
    #[error("negative-hypothesis state is singular on the positive state's support")]
    SingularState,

    /// Unambiguous discrimination impossible in a requested direction.
    #[error("unambiguous discrimination infeasible: {direction}")]
    InfeasiblePair { direction: String },

    /// POVM effect weights too aggressive: lambda1*K_N + lambda2*K_P > I.
    #[error("effect sum exceeds identity: min eigenvalue of the slack is {min_eig:.3e}")]
    EffectSumExceedsIdentity { min_eig: f64 },

    #[error("Bloch vector norm {norm} exceeds 1")]
    BlochVectorTooLong { norm: f64 },

    #[error("{path}: {source}")]
    WithPath {
        path: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Attach a file path to an error for CLI diagnostics.
    pub fn with_path(self, path: impl Into<String>) -> Self {
        Error::WithPath {
            path: path.into(),
            source: Box::new(self),
        }
    }

    /// Process exit code for the command-line front end:
    /// 2 validation/parse, 3 infeasible, 4 convergence failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::WithPath { source, .. } => source.exit_code(),
            Error::InfeasiblePair { .. } => 3,
            Error::NoConvergence { .. } => 4,
            _ => 2,
        }
    }
}

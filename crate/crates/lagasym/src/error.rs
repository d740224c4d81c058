//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by the numerical routines.
///
/// Validation failures (`InvalidAlpha`, `InvalidLeadingCoeff`, `DegreeTooSmall`)
/// are distinguished from numerical failures so that callers can map them to
/// different exit codes.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("alpha must be > -1, got {0}")]
    InvalidAlpha(f64),
    #[error("q_m must be positive, got {0}")]
    InvalidLeadingCoeff(f64),
    #[error("Q must be a polynomial of degree >= 1")]
    DegreeTooSmall,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("MRS number undefined for n = {n}: {reason}")]
    MrsUndefined { n: u32, reason: String },
    #[error("root finder did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("equilibrium polynomial h_n is not positive on [0,1] for n = {0}")]
    HNotPositive(u32),
    #[error("evaluation on a branch cut requires an explicit side")]
    BranchCut,
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),
    #[error("loss of positivity in recurrence construction at k = {k}: increase precision")]
    LossOfPositivity { k: usize },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("ODE integration failed: {0}")]
    OdeFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the numeric and formal layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alpha must lie in (0, 1], got {0}")]
    InvalidAlpha(f64),
    #[error("argument {0} outside the domain of {1}")]
    Domain(f64, &'static str),
    #[error("Mittag-Leffler series did not converge within {terms} terms (|z| = {abs_z})")]
    NonConvergence { terms: usize, abs_z: f64 },
    #[error("expressions have different anchors or supports")]
    SupportMismatch,
    #[error("point {0} lies outside the support of the expression")]
    OutsideSupport(f64),
    #[error("no closed form: {0}")]
    NoClosedForm(&'static str),
    #[error("unsupported term shape: {0}")]
    UnsupportedTerm(&'static str),
    #[error("grid must contain at least {0} points")]
    GridTooSmall(usize),
    #[error("grid points must be strictly increasing and finite")]
    GridNotIncreasing,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),
    #[error("grids differ")]
    GridMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("quadrature rule is ill-conditioned: moment error {0:e}")]
    IllConditioned(f64),
    #[error("eigenvalue iteration failed to converge")]
    EigenFailure,
    #[error("signal is constant; Hölder exponent undefined")]
    DegenerateSignal,
    #[error("identity not applicable: {0}")]
    NotApplicable(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

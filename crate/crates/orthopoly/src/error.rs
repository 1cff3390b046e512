//! Crate-wide error type.
//!
//! Everything in this crate is exact arithmetic, so the only runtime
//! failures are structural: a Pochhammer denominator vanishing, a
//! triangular system losing invertibility, a sum that should collapse to a
//! constant refusing to, and malformed text input.

use std::fmt;

/// Errors produced by scalar primitives, identity checks, and solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A Pochhammer symbol in a denominator vanished at this parameter
    /// point; the caller must exclude the point.
    Pole(String),
    /// The triangular system is not invertible for these parameters.
    Singular(String),
    /// A sum that must reduce to a constant polynomial came out with
    /// positive degree (an implementation bug, never a parameter issue).
    NonConstant(String),
    /// A solved system failed its exact substitution check (likewise a
    /// bug signal, not a data condition).
    Residual(String),
    /// Parameters hit the excluded continuity case of the generalized
    /// Jacobi construction.
    ContinuityCase(String),
    /// A parameter violates its domain constraint.
    InvalidParameter(String),
    /// Malformed rational or polynomial text.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole(what) => write!(f, "pole: {what}"),
            Error::Singular(what) => write!(f, "singular system: {what}"),
            Error::NonConstant(what) => write!(f, "non-constant sum: {what}"),
            Error::Residual(what) => write!(f, "residual check failed: {what}"),
            Error::ContinuityCase(what) => write!(f, "excluded continuity case: {what}"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the documented domain (non-positive mean arguments,
    /// parameters outside an open interval, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method failed to meet its tolerance within its budget.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// Two independent evaluation paths disagree beyond the allowed slack.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    /// The requested mean kind has no closed hyperbolic form.
    #[error("unsupported kind: {0}")]
    UnsupportedKind(String),

    /// Unknown inequality-case id.
    #[error("unknown case: {0}")]
    UnknownCase(String),

    /// The case carries no sharpness metadata.
    #[error("no sharpness data for case: {0}")]
    NoSharpnessData(String),

    /// Unknown sequence id.
    #[error("unknown sequence: {0}")]
    UnknownSequence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An exponent arithmetic operation exceeded machine width.
    #[error("exponent overflow")]
    ExponentOverflow,

    /// A completion loop exceeded its configured step budget. Carries the
    /// number of steps performed and the elements accumulated so far, so
    /// callers can inspect the divergent tail (e.g. a Pommaret completion
    /// that provably never terminates).
    #[error("step cap of {cap} exceeded after {steps} steps")]
    StepCapExceeded {
        cap: usize,
        steps: usize,
        partial: Vec<crate::multiindex::MultiIndex>,
    },

    /// Polynomial completion exceeded its insertion budget.
    #[error("completion insertion cap of {cap} exceeded")]
    CompletionCapExceeded { cap: usize },

    /// A single normal-form computation exceeded its reduction-step budget.
    #[error("normal form step cap of {cap} exceeded")]
    NormalFormCapExceeded { cap: usize },

    /// Input was rejected (parse error, inconsistent dimensions, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal verification (standard representation, certificate,
    /// associativity sample, ...) failed. Indicates a bug or an unsupported
    /// configuration that slipped past validation.
    #[error("verification failure: {0}")]
    VerificationFailure(String),

    /// The requested operation needs a capability the chosen algebra lacks
    /// (e.g. Mora reduction requires subring-closed commutation relations).
    #[error("unsupported: {0}")]
    Unsupported(String),
}

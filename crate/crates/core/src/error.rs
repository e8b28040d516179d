use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, RootIdError>;

#[derive(Debug, Error)]
pub enum RootIdError {
    /// Argument outside the domain of the operation (branch cut, zero base, Re(s0) <= 1, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a pole: Gamma at a nonpositive integer, or an expansion in 1/(mu - 1) at mu = 1.
    #[error("pole at {0}")]
    Pole(i64),

    /// Table index, count, or magnitude outside the supported range.
    #[error("range error: {0}")]
    Range(String),

    /// mu lies in a window that needs machinery this crate does not provide,
    /// or too close to a regime boundary to evaluate stably.
    #[error("regime error: {0}")]
    Regime(String),

    /// mu = 1 needs renormalisation of the pole sum.
    #[error("mu = 1 requires renormalisation, which is not supported")]
    RenormalisationRequired,

    /// An asymptotic series started growing before its cutoff.
    #[error("asymptotic series diverges before the cutoff; best achievable error {best_estimate:e}")]
    Accuracy { best_estimate: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{path}:{line}: {message}")]
    Format { path: PathBuf, line: usize, message: String },

    #[error("sanity check failed: {0}")]
    Sanity(String),

    #[error("non-finite result in {0}")]
    NonFinite(&'static str),

    #[error(transparent)]
    Io(#[from] io::Error),
}

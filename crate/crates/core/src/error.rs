//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("degenerate row {row}: norm {norm:.3e} is below the minimum {min:.3e}")]
    DegenerateRow { row: usize, norm: f64, min: f64 },

    #[error("svd did not converge after {sweeps} sweeps")]
    SvdNoConvergence { sweeps: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid edit request: {0}")]
    InvalidEdit(String),

    #[error("invalid edit sequence: {0}")]
    InvalidSequence(String),

    #[error("forward cache is stale: the model was mutated after the cache was recorded")]
    CacheInvalid,

    #[error("function evaluation returned a non-finite value at coordinate {coord}")]
    Evaluation { coord: usize },

    #[error("discriminator returned a non-finite score")]
    Discriminator,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate singular spectrum: minimal gap {gap:.3e} is below {tol:.3e}")]
    DegenerateSpectrum { gap: f64, tol: f64 },

    #[error("training failed: loss became non-finite at epoch {epoch}, sample {sample}")]
    TrainingFailure { epoch: usize, sample: usize },

    #[error("edit failed at step {step}: {reason}")]
    EditFailure {
        step: usize,
        reason: String,
        /// Trace of the steps completed before the failure.
        trace: Box<crate::editor::EditTrace>,
    },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("parse error in {path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

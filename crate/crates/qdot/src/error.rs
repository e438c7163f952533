use thiserror::Error;

/// Errors produced anywhere in the simulation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a documented precondition. `field` names the
    /// offending quantity so batch drivers can report it verbatim.
    #[error("validation: {field}: {message}")]
    Validation { field: String, message: String },

    /// The request is valid but exceeds what this build is sized for.
    #[error("capacity: {0}")]
    Capacity(String),

    /// An iterative solve ran out of its iteration budget.
    #[error("convergence: {message} (worst residual {worst_residual:.3e})")]
    Convergence { message: String, worst_residual: f64 },

    /// A least-squares fit failed to settle; the per-iteration RMS
    /// residuals are carried along for diagnosis.
    #[error("fit diverged after {} iterations (last rms {:.3e})", residual_trace.len(), residual_trace.last().copied().unwrap_or(f64::NAN))]
    FitDiverged { residual_trace: Vec<f64> },

    /// A sweep aborted; `parameter`/`value` identify the failing point.
    #[error("sweep point {parameter}={value}: {source}")]
    SweepPoint {
        parameter: String,
        value: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("config: {0}")]
    Config(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn at_sweep_point(self, parameter: &str, value: f64) -> Self {
        Error::SweepPoint {
            parameter: parameter.to_string(),
            value,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the geometric layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("point is outside the domain: largest eigenvalue of tZZ is {0}")]
    OutsideDomain(f64),

    #[error("integral diverges: need {need}, got s = {s}")]
    Divergent { s: f64, need: String },

    #[error("not available: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;

use thiserror::Error;

/// Errors raised by the laboratory's operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("sample count {got} does not match grid size {expected}")]
    SampleCount { expected: usize, got: usize },

    #[error("non-finite sample at index {0}")]
    NonFinite(usize),

    #[error("grids differ: {0}")]
    GridMismatch(String),

    #[error("Sobolev exponent {0} outside (-1, 3)")]
    SobolevExponent(f64),

    #[error(
        "mesh too coarse for lambda = {lambda}: spacing {spacing:.6e} exceeds the required {required:.6e}"
    )]
    Resolution { lambda: f64, spacing: f64, required: f64 },

    #[error("output grid is not nested in the input grid: {0}")]
    NotNested(String),

    #[error("phantom {kind}: {reason}")]
    Phantom { kind: String, reason: String },

    #[error("mollifier width {sigma} is below the limit {limit}")]
    SigmaTooSmall { sigma: f64, limit: f64 },

    #[error("frequency lattice does not cover [{lo}, {hi}] with at least {min} samples")]
    Coverage { lo: f64, hi: f64, min: usize },

    #[error("evaluation point t = {0} is too close to the origin")]
    NearOrigin(f64),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("snapshot format: {0}")]
    Snapshot(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

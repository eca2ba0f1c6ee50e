use thiserror::Error;

/// Unified error type for instance validation, geometric preconditions, and
/// CLI-facing I/O failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("speed must be strictly greater than 1 (got {0})")]
    InvalidSpeed(f64),

    #[error("points[{index}].w must be strictly positive (got {value})")]
    InvalidWeight { index: usize, value: f64 },

    #[error("points[{index}] has a non-finite coordinate or weight")]
    NonFiniteInput { index: usize },

    #[error("instance has no demand points")]
    EmptyInstance,

    #[error("facility is {distance:.3e} off the highway line (tolerance {tolerance:.1e})")]
    FacilityOffHighway { distance: f64, tolerance: f64 },

    #[error("horizontal projection is undefined for a horizontal highway (angle 0)")]
    DegenerateProjection,

    #[error("objective form interval [{lo}, {hi}] contains an event; coefficients are stale")]
    StaleForm { lo: f64, hi: f64 },

    #[error("classification requires speed above {threshold} (got {speed})")]
    SpeedBelowClassifierThreshold { speed: f64, threshold: f64 },

    #[error("instance with {n} points exceeds the oracle limit of {limit}; pass --force to override")]
    OracleResourceLimit { n: usize, limit: usize },

    #[error("solution failed invariant check: {0}")]
    InvalidSolution(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

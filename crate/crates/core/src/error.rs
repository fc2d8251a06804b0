use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("collision: minimum pair distance {min_distance:.3e} below threshold {threshold:.3e}")]
    Collision { min_distance: f64, threshold: f64 },

    #[error("empty feasible domain: {0}")]
    EmptyDomain(String),

    #[error("infeasible point (u = {u}, v = {v}): {reason}")]
    Infeasible { u: f64, v: f64, reason: String },

    #[error("configuration outside fixed space: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    OutsideFixedSpace { residual: f64, tolerance: f64 },

    #[error("inconsistent wiring: {0}")]
    Wiring(String),

    #[error("group construction: {0}")]
    Group(String),

    #[error("integration aborted at t = {time:.6}: {reason}")]
    IntegrationAbort { time: f64, reason: String },

    #[error("{0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

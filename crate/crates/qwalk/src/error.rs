use thiserror::Error;

/// Errors surfaced by walk construction, evolution, and the scenario layer.
#[derive(Debug, Error)]
pub enum QwalkError {
    #[error("dimension mismatch: operator is {operator}-dimensional, coin basis is {basis}-dimensional")]
    DimensionMismatch { operator: usize, basis: usize },

    #[error("coin vector is not normalized: squared norm {norm_sq} differs from 1 by more than 1e-12")]
    NotNormalized { norm_sq: f64 },

    #[error("matrix is not unitary: defect {defect:.6e} exceeds {tolerance:.0e} (params {params:?})")]
    NonUnitary {
        defect: f64,
        tolerance: f64,
        params: Vec<f64>,
    },

    #[error("norm drifted to {norm} at step {step}; evolution must conserve norm to 1e-9")]
    NormDrift { step: u64, norm: f64 },

    #[error("shift rule has no displacement for coin label \"{label}\"")]
    ShiftLabelMissing { label: String },

    #[error("shift displacement {displacement} for label \"{label}\" is outside {{-1, 0, +1}}")]
    ShiftDisplacementOutOfRange { label: String, displacement: i64 },

    #[error("periodic schedule requires q >= 1")]
    ZeroPeriod,

    #[error("schedule pattern must be a non-empty string over {{A, B}}, got \"{pattern}\"")]
    InvalidPattern { pattern: String },

    #[error("oracle bound exceeded: {dimension}^{steps} paths > {max} (reduce the step count)")]
    OracleBoundExceeded {
        dimension: usize,
        steps: u32,
        max: u64,
    },

    #[error("unknown preset \"{0}\"; run `qwalk presets` for the list")]
    UnknownPreset(String),

    #[error("unknown shift rule \"{0}\"; expected S, S_prime, S_prime_1, or S_prime_2")]
    UnknownShift(String),

    #[error("invalid scenario: {0}")]
    Validation(String),

    #[error("failed to parse JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, QwalkError>;

//! Error type shared across the crate.

use thiserror::Error;

/// Which density-file invariant a validation rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityInvariant {
    Shape,
    Hermiticity,
    Trace,
    PositiveSemidefinite,
}

impl std::fmt::Display for DensityInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DensityInvariant::Shape => "shape",
            DensityInvariant::Hermiticity => "hermiticity",
            DensityInvariant::Trace => "trace",
            DensityInvariant::PositiveSemidefinite => "positive-semidefiniteness",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid dimension specification: {0}")]
    InvalidDimension(String),

    #[error("factor index {index} out of range 1..={count}")]
    FactorIndexOutOfRange { index: usize, count: usize },

    #[error("empty matrix list")]
    EmptyMatrixList,

    #[error("mixing weight {0} outside [0, 1]")]
    MixingWeightOutOfRange(f64),

    #[error("invalid amplitudes: {0}")]
    InvalidAmplitudes(String),

    #[error("outside the proven region: {constraint} (got {value})")]
    RegionViolation { constraint: String, value: f64 },

    #[error("density invariant violated ({which}): {detail}")]
    InvalidDensity {
        which: DensityInvariant,
        detail: String,
    },

    #[error("not certified separable (off-identity l1 sum {l1})")]
    NotCertified { l1: f64 },

    #[error("face condition violated: residual {residual} exceeds {tol}")]
    FaceCondition { residual: f64, tol: f64 },

    #[error("cannot rescale witness: offset {c0} is not positive")]
    CannotRescale { c0: f64 },

    #[error("feasibility solver exceeded {iterations} iterations")]
    SolverStalled { iterations: usize },

    #[error("phase sum {0} is not 0 modulo 2 pi")]
    PhaseSum(f64),

    #[error("non-unit vector (norm {0})")]
    NonUnitVector(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

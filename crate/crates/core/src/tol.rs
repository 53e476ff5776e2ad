//! Centralized numeric tolerances.
//!
//! Every verdict in the crate cuts floating-point noise at one of these
//! thresholds. CLI flags may override the defaults per run.

/// Per-entry Hermiticity tolerance.
pub const HERMITIAN: f64 = 1e-12;

/// Trace-one tolerance for densities.
pub const TRACE: f64 = 1e-12;

/// Minimum-eigenvalue cut for positive-semidefiniteness verdicts.
pub const PSD: f64 = 1e-10;

/// Residual cut for membership in a nearest-point face.
pub const FACE: f64 = 1e-10;

/// Unit-norm tolerance for kets.
pub const UNIT: f64 = 1e-12;

/// Tolerance bundle threaded through validations and verdicts.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub hermitian: f64,
    pub trace: f64,
    pub psd: f64,
    pub face: f64,
    pub unit: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermitian: HERMITIAN,
            trace: TRACE,
            psd: PSD,
            face: FACE,
            unit: UNIT,
        }
    }
}

impl Tolerances {
    pub fn with_psd(mut self, psd: f64) -> Self {
        self.psd = psd;
        self
    }

    pub fn with_face(mut self, face: f64) -> Self {
        self.face = face;
        self
    }
}

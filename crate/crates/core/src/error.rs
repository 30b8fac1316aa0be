use thiserror::Error;

/// Errors raised by the numerical modules.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix dimension {dim} exceeds the configured maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("eigensolver did not converge: {0}")]
    NonConvergence(String),

    #[error("trajectory diverged at t = {t}")]
    DivergedTrajectory { t: f64 },

    #[error("effective potential has non-negligible imaginary part {imag:e}")]
    NonRealEffectivePotential { imag: f64 },

    #[error("no bound state: well strength alpha = {alpha:e} is not negative")]
    NoBoundState { alpha: f64 },

    #[error("no frequency in the scan satisfies the reality bound")]
    NoTransitionFound,

    #[error("eigenvalue {index} has modulus {modulus:e}; logarithm undefined")]
    EigenvalueAtZero { index: usize, modulus: f64 },

    #[error("wavefunction norm {norm:e} exceeded the divergence bound at t = {t}")]
    DivergedNorm { t: f64, norm: f64 },

    #[error("reflectance {value} at x = {x} is outside (0, 1]")]
    ReflectanceOutOfRange { x: f64, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

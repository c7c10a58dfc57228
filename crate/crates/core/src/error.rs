use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{quantity} must be strictly positive and finite, got {value}")]
    NonPositive { quantity: &'static str, value: f64 },

    #[error("{quantity} must be finite, got {value}")]
    NonFinite { quantity: &'static str, value: f64 },

    #[error("inconsistent constants: h = {h} but 2*pi*hbar = {two_pi_hbar}")]
    InconsistentPlanck { h: f64, two_pi_hbar: f64 },

    #[error("state is not normalized: squared norm {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("superposition has zero norm")]
    DegenerateState,

    #[error("operator is not Hermitian: max deviation {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("expectation value has imaginary part {imag:e}; operator is not Hermitian")]
    BrokenHermiticity { imag: f64 },

    #[error("beam contains no photons")]
    EmptyBeam,

    #[error("invalid frequency range: need 0 < omega_min < omega_max, got [{min}, {max}]")]
    InvalidRange { min: f64, max: f64 },

    #[error("sweep needs at least 2 steps, got {0}")]
    TooFewSteps(usize),
}

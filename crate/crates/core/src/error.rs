use thiserror::Error;

use crate::ComplexValue;

/// Failures raised by the special-function layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("invalid Prabhakar parameters: {0}")]
    InvalidParams(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("accuracy target missed: achieved error estimate {achieved:.3e} (value {value})")]
    Accuracy { achieved: f64, value: ComplexValue },
    #[error("argument error: {0}")]
    Argument(String),
    #[error("truncation tail bound {bound:.3e} exceeds tolerance {tol:.3e}; increase T_cut")]
    Tail { bound: f64, tol: f64 },
}

/// Violation of one of the model's admissibility inequalities.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AdmissibilityError {
    #[error("fractional order must satisfy 0 < alpha < 1 (got {0})")]
    Order(f64),
    #[error("diffusivities must satisfy kappa > 0 and varkappa > 0 (got kappa={kappa}, varkappa={varkappa})")]
    Diffusivity { kappa: f64, varkappa: f64 },
    #[error("reaction coefficients must satisfy c >= 0 and d >= 0 (got c={c}, d={d})")]
    Reaction { c: f64, d: f64 },
    #[error("coupling must satisfy ab <= min{{c^2, d^2}} (got ab={ab}, min={bound})")]
    Coupling { ab: f64, bound: f64 },
    #[error(
        "discriminant ((kappa-varkappa)*lambda_k + c - d)^2 + 4ab >= 0 violated at k={k} (value {value})"
    )]
    Discriminant { k: u64, value: f64 },
    #[error("time windows must satisfy 0 < t0 < t1 (got t0={t0}, t1={t1})")]
    Windows { t0: f64, t1: f64 },
    #[error("non-finite model parameter `{0}`")]
    NonFinite(&'static str),
    #[error("mode cutoff K must be at least 1")]
    EmptyTable,
}

/// Errors of the spectral, forward, transform and inverse layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Admissibility(#[from] AdmissibilityError),
    #[error("argument error: {0}")]
    Argument(String),
    #[error("aliasing: {points} grid points cannot resolve {modes} modes (need at least {needed})")]
    Aliasing { points: usize, modes: usize, needed: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("contour geometry: {message}; suggested radius {suggested:.6e}")]
    Geometry { message: String, suggested: f64 },
    #[error("separation condition violated by modes ({k}, {n})")]
    Separation { k: usize, n: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("quadrature did not converge: achieved {achieved:.3e}")]
    Quadrature { achieved: f64 },
    #[error("linear algebra failure: {0}")]
    LinearAlgebra(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

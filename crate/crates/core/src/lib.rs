//! Spectral forward solver and boundary-flux source identification for a
//! coupled pair of time-fractional diffusion equations on (0, π).
//!
//! The crate is layered bottom-up:
//!
//! - [`specfun`]: Prabhakar functions, principal powers, truncated monomial
//!   Laplace transforms.
//! - [`modes`]: model parameters, the Dirichlet eigensystem and the coupled
//!   root factorization.
//! - [`forward`]: closed-form per-mode solution, boundary flux and the
//!   fractional residual self-check.
//! - [`laplace`]: mode transforms, flux transform, jump across the negative
//!   axis and the branch functions.
//! - [`inverse`]: residue identities and least-squares reconstruction.

pub mod error;
pub mod forward;
pub mod inverse;
pub mod laplace;
pub mod modes;
pub mod quad;
pub mod specfun;

/// Complex scalar used throughout. Serializes as `[re, im]`.
pub type ComplexValue = num_complex::Complex64;

pub use error::{AdmissibilityError, Error, Result, SpecfunError};
pub use forward::{FluxTrace, SourceSpec, StateTrajectory};
pub use inverse::{ReconstructionResult, ResidueReport};
pub use laplace::JumpContext;
pub use modes::{ModeTable, ModelParams, SpectralField};
pub use specfun::{PrabhakarParams, prabhakar, principal_power};

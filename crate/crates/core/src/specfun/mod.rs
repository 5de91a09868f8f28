//! Special functions needed by the solver.

mod checks;
mod monomial;
mod prabhakar;

pub use checks::{DecaySample, DecayReport, laplace_identity_residual, sector_decay_report};
pub use monomial::truncated_monomial_transform;
pub use prabhakar::{
    Evaluation, FAILURE_THRESHOLD, Method, PrabhakarParams, SERIES_RADIUS, TARGET_ACCURACY,
    prabhakar, prabhakar_eval, principal_power, recip_gamma,
};

pub(crate) use prabhakar::cpow;

//! Shared fixtures for the benchmarks.

use fracinv_core::modes::build_mode_table;
use fracinv_core::{ModeTable, ModelParams, SourceSpec, SpectralField};
use num_complex::Complex64;

/// Coupled model with separated roots, K modes.
pub fn coupled_table(k_max: usize) -> ModeTable {
    let params = ModelParams {
        alpha: 0.6,
        kappa: 1.0,
        varkappa: 2.0,
        a: 0.5,
        b: 0.2,
        c: 1.0,
        d: 0.5,
        t0: 1.0,
        t1: 3.0,
    };
    build_mode_table(params, k_max).expect("admissible")
}

/// Decaying initial data and cubic source rows.
pub fn data(k_max: usize) -> (SpectralField, SpectralField, SourceSpec) {
    let decay: Vec<f64> = (1..=k_max).map(|k| 1.0 / (k * k) as f64).collect();
    let phi = SpectralField::from_real(&decay);
    let psi = SpectralField::from_real(&decay.iter().map(|x| -0.5 * x).collect::<Vec<_>>());
    let mut src = SourceSpec::zeros(k_max, 3, 1.0);
    for k in 0..k_max {
        let w = 1.0 / (k + 1) as f64;
        src.f_coeffs[k] = [1.0, -0.5, 0.2, 0.1].iter().map(|c| Complex64::new(c * w, 0.0)).collect();
        src.chi_coeffs[k] = [0.3, 0.4, 0.0, -0.2].iter().map(|c| Complex64::new(c * w, 0.0)).collect();
    }
    (phi, psi, src)
}

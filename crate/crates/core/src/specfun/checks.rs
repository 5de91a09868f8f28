//! Empirical decay constants and the Laplace-pair residual.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::{gamma, gamma_ur};

use super::prabhakar::{PrabhakarParams, cpow, prabhakar, prabhakar_eval};
use crate::error::SpecfunError;
use crate::quad::{UnitRule, graded_toward_left, uniform};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecaySample {
    pub radius: f64,
    pub angle: f64,
    pub magnitude: f64,
}

/// Samples of |E^γ_{α,β}(−z)| on a sector around the positive axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayReport {
    /// Least-squares slope of −log|E| against log|z| over the outer half of
    /// the positive radii. `None` when fewer than two distinct radii remain.
    pub exponent: Option<f64>,
    /// Smallest c with |E(−z)| ≤ c/(1+|z|)^γ on every sample.
    pub c_theta: f64,
    pub samples: Vec<DecaySample>,
}

/// Empirical version of the sector bound |E^γ_{α,β}(−z)| ≤ c_θ/(1+|z|)^γ,
/// |Arg z| ≤ θ. The constant is only as good as the sample.
pub fn sector_decay_report(
    p: PrabhakarParams,
    theta: f64,
    radii: &[f64],
) -> Result<DecayReport, SpecfunError> {
    if radii.is_empty() {
        return Err(SpecfunError::Argument("radii must not be empty".into()));
    }
    let limit = (2.0 - p.alpha) * std::f64::consts::PI / 2.0;
    if !(theta > 0.0 && theta < limit) {
        return Err(SpecfunError::Argument(format!(
            "theta must lie in (0, {limit}), got {theta}"
        )));
    }
    if radii.iter().any(|r| !(r.is_finite() && *r >= 0.0)) {
        return Err(SpecfunError::Argument("radii must be finite and >= 0".into()));
    }
    let angles = [-theta, -theta / 2.0, 0.0, theta / 2.0, theta];
    let mut samples = Vec::with_capacity(radii.len() * angles.len());
    for &r in radii {
        for &phi in &angles {
            let z = Complex64::from_polar(r, phi);
            let v = prabhakar(p, -z)?;
            samples.push(DecaySample {
                radius: r,
                angle: phi,
                magnitude: v.norm(),
            });
        }
    }
    let c_theta = samples
        .iter()
        .map(|s| s.magnitude * (1.0 + s.radius).powf(p.gamma))
        .fold(0.0, f64::max);

    let mut positive: Vec<f64> = radii.iter().copied().filter(|r| *r > 0.0).collect();
    positive.sort_by(f64::total_cmp);
    positive.dedup();
    let exponent = if positive.len() >= 2 {
        let median = positive[(positive.len() - 1) / 2];
        let pts: Vec<(f64, f64)> = positive
            .iter()
            .filter(|r| **r >= median)
            .map(|&r| {
                let worst = samples
                    .iter()
                    .filter(|s| s.radius == r)
                    .map(|s| s.magnitude)
                    .fold(0.0, f64::max);
                (r.ln(), worst.ln())
            })
            .collect();
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        (sxx > 0.0).then(|| -sxy / sxx)
    } else {
        None
    };
    Ok(DecayReport {
        exponent,
        c_theta,
        samples,
    })
}

const PANEL_POINTS: usize = 16;
const TAIL_TOLERANCE: f64 = 1e-9;

/// |∫₀^{T} e^{−st} t^{β−1} E^γ_{α,β}(−λt^α) dt − s^{αγ−β}/(s^α+λ)^γ|.
///
/// The integral uses panels graded geometrically toward t = 0, with a
/// Gauss-Jacobi rule carrying t^{β−1} on the innermost one, and unit panels
/// beyond t = 1. The neglected tail is bounded with an empirical decay
/// constant on the positive axis; if that bound exceeds the tolerance the
/// call fails and asks for a larger cut.
pub fn laplace_identity_residual(
    p: PrabhakarParams,
    lambda: f64,
    s: Complex64,
    t_cut: f64,
) -> Result<f64, SpecfunError> {
    if !(p.beta > 0.0) {
        return Err(SpecfunError::InvalidParams("beta must be > 0".into()));
    }
    if !(lambda > 0.0) {
        return Err(SpecfunError::Argument(format!("lambda must be > 0, got {lambda}")));
    }
    if !(s.re > 0.0) {
        return Err(SpecfunError::Argument(format!("Re s must be > 0, got {s}")));
    }
    if !(t_cut > 1.0) {
        return Err(SpecfunError::Argument(format!("T_cut must exceed 1, got {t_cut}")));
    }

    let x_cut = lambda * t_cut.powf(p.alpha);
    let radii: Vec<f64> = (0..12).map(|j| x_cut * 2f64.powi(j)).collect();
    // sup_{x ≥ x_cut} |E(−x)| ≈ c/(1+x_cut)^γ with c sampled past the cut
    let mut c_sup = 0.0f64;
    for &x in &radii {
        let ev = prabhakar_eval(p, Complex64::new(-x, 0.0))?;
        c_sup = c_sup.max(ev.magnitude_bound() * (1.0 + x).powf(p.gamma));
    }
    let sup_e = c_sup / (1.0 + x_cut).powf(p.gamma);
    let sigma = s.re;
    let tail = sup_e * gamma(p.beta) * gamma_ur(p.beta, sigma * t_cut) / sigma.powf(p.beta);
    if tail > TAIL_TOLERANCE {
        return Err(SpecfunError::Tail {
            bound: tail,
            tol: TAIL_TOLERANCE,
        });
    }

    let integrand_smooth = |t: f64| -> Result<Complex64, SpecfunError> {
        let e = prabhakar(p, Complex64::new(-lambda * t.powf(p.alpha), 0.0))?;
        Ok((-s * t).exp() * e)
    };

    let legendre = UnitRule::legendre(PANEL_POINTS);
    let jacobi = UnitRule::jacobi_left(PANEL_POINTS, p.beta - 1.0);
    let panels = graded_toward_left(0.0, 1.0, 1e-14);
    let mut acc = Complex64::new(0.0, 0.0);

    // innermost: ∫₀^h t^{β−1} g(t) dt = h^β ∫₀¹ x^{β−1} g(hx) dx
    let (_, h) = panels[0];
    let mut inner = Complex64::new(0.0, 0.0);
    for (&x, &w) in jacobi.nodes.iter().zip(&jacobi.weights) {
        inner += w * integrand_smooth(h * x)?;
    }
    acc += h.powf(p.beta) * inner;

    let mut failure = None;
    let mut with_weight = |t: f64| match integrand_smooth(t) {
        Ok(v) => v * t.powf(p.beta - 1.0),
        Err(e) => {
            failure.get_or_insert(e);
            Complex64::new(0.0, 0.0)
        }
    };
    for &(a, b) in panels.iter().skip(1) {
        acc += legendre.integrate(a, b, &mut with_weight);
    }
    let n_outer = (t_cut - 1.0).ceil() as usize;
    for (a, b) in uniform(1.0, t_cut, n_outer) {
        acc += legendre.integrate(a, b, &mut with_weight);
    }
    if let Some(e) = failure {
        return Err(e);
    }

    let closed = cpow(s, p.alpha * p.gamma - p.beta) / cpow(cpow(s, p.alpha) + lambda, p.gamma);
    Ok((acc - closed).norm())
}

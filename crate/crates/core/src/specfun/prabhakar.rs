//! Three-parameter Mittag-Leffler (Prabhakar) function
//!
//! E^γ_{α,β}(z) = Σ_n (γ)_n z^n / (n! Γ(αn + β))
//!
//! Small arguments are summed directly with compensated summation. Larger
//! arguments invert the Laplace pair
//!
//! L[t^{β-1} E^γ_{α,β}(z t^α)](s) = s^{αγ-β} / (s^α - z)^γ
//!
//! at t = 1 by trapezoidal quadrature on an optimally placed parabolic
//! contour s(u) = μ(1 + iu)², adding the residues of the poles s^α = z that
//! are left to the right of the contour (Garrappa's OPC scheme).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::{gamma, ln_gamma};

use crate::error::SpecfunError;

/// Relative accuracy the evaluator aims for.
pub const TARGET_ACCURACY: f64 = 1e-10;

/// Evaluations whose estimate exceeds this are reported as failures.
pub const FAILURE_THRESHOLD: f64 = 1e-7;

/// Radius below which the Taylor series is attempted.
pub const SERIES_RADIUS: f64 = 5.0;

const LOG_EPS_MACHINE: f64 = -36.043_653_389_117_154; // ln(f64::EPSILON)
const CONTOUR_TOLERANCE: f64 = 1e-15;
const MAX_CONTOUR_NODES: f64 = 200.0;

/// Parameters (α, β, γ) of E^γ_{α,β}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrabhakarParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl PrabhakarParams {
    /// Validates 0 < α ≤ 1, β ≥ 0, γ > 0. The endpoint α = 1 is accepted so
    /// the exponential special case can be exercised.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self, SpecfunError> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(SpecfunError::InvalidParams(format!(
                "alpha must lie in (0, 1], got {alpha}"
            )));
        }
        if !(beta >= 0.0 && beta.is_finite()) {
            return Err(SpecfunError::InvalidParams(format!(
                "beta must be finite and >= 0, got {beta}"
            )));
        }
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(SpecfunError::InvalidParams(format!(
                "gamma must be finite and > 0, got {gamma}"
            )));
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Two-parameter Mittag-Leffler function E_{α,β}.
    pub fn ml(alpha: f64, beta: f64) -> Result<Self, SpecfunError> {
        Self::new(alpha, beta, 1.0)
    }

    fn integer_gamma(&self) -> Option<u32> {
        let r = self.gamma.round();
        ((self.gamma - r).abs() < 1e-14 && r >= 1.0).then_some(r as u32)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Origin,
    Exponential,
    Series,
    Contour,
}

/// A value together with its estimated relative error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub error_estimate: f64,
    pub method: Method,
}

impl Evaluation {
    pub fn target_met(&self) -> bool {
        self.error_estimate <= TARGET_ACCURACY
    }

    /// Upper bound on |E| implied by the value and its estimate.
    pub fn magnitude_bound(&self) -> f64 {
        self.value.norm() * (1.0 + self.error_estimate)
    }
}

/// Reciprocal Gamma function for real arguments, zero at the poles.
pub fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    1.0 / gamma(x)
}

/// Principal value |z|^β e^{iβ Arg z}, Arg z ∈ (−π, π].
pub fn principal_power(z: Complex64, beta: f64) -> Result<Complex64, SpecfunError> {
    if z == Complex64::new(0.0, 0.0) {
        if beta > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(SpecfunError::Domain(format!(
            "0^{beta} is undefined for non-positive exponent"
        )));
    }
    Ok(cpow(z, beta))
}

/// Principal power without the zero check. `Complex64::arg` already returns
/// values in (−π, π]; the negative zero imaginary part is normalised so that
/// the negative real axis maps to Arg = π.
#[inline]
pub(crate) fn cpow(z: Complex64, beta: f64) -> Complex64 {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    let theta = im.atan2(z.re);
    let r = z.re.hypot(im);
    Complex64::from_polar(r.powf(beta), beta * theta)
}

/// E^γ_{α,β}(z), failing when the error estimate exceeds [`FAILURE_THRESHOLD`].
pub fn prabhakar(p: PrabhakarParams, z: Complex64) -> Result<Complex64, SpecfunError> {
    let ev = prabhakar_eval(p, z)?;
    if ev.error_estimate > FAILURE_THRESHOLD || !ev.value.is_finite() {
        return Err(SpecfunError::Accuracy {
            achieved: ev.error_estimate,
            value: ev.value,
        });
    }
    Ok(ev.value)
}

/// E^γ_{α,β}(z) with its error estimate and the branch that produced it.
pub fn prabhakar_eval(p: PrabhakarParams, z: Complex64) -> Result<Evaluation, SpecfunError> {
    if !z.is_finite() {
        return Err(SpecfunError::Argument(format!("non-finite argument {z}")));
    }
    if z.norm() < 1e-15 {
        return Ok(Evaluation {
            value: Complex64::new(recip_gamma(p.beta), 0.0),
            error_estimate: f64::EPSILON,
            method: Method::Origin,
        });
    }
    if p.alpha == 1.0 && p.beta == 1.0 && p.gamma == 1.0 {
        return Ok(Evaluation {
            value: z.exp(),
            error_estimate: f64::EPSILON,
            method: Method::Exponential,
        });
    }
    if z.norm() <= SERIES_RADIUS {
        let mut ev = series(p, z);
        if ev.error_estimate <= 0.1 * TARGET_ACCURACY {
            // real coefficients: sin(nπ) rounding must not leak into the imaginary part
            if z.im == 0.0 {
                ev.value.im = 0.0;
            }
            return Ok(ev);
        }
    }
    contour(p, z)
}

fn series(p: PrabhakarParams, z: Complex64) -> Evaluation {
    let ln_r = z.norm().ln();
    let theta = z.arg();
    let (mut sum_re, mut c_re) = (0.0f64, 0.0f64);
    let (mut sum_im, mut c_im) = (0.0f64, 0.0f64);
    let mut abs_sum = 0.0f64;
    let mut small_run = 0;
    let mut last = f64::INFINITY;
    // ln((γ)_n / n!), updated by the ratio (γ+n)/(n+1)
    let mut ln_poch = 0.0f64;
    let mut n = 0usize;
    loop {
        let nf = n as f64;
        let arg = p.alpha * nf + p.beta;
        // αn + β ≥ 0, so 1/Γ only vanishes at arg = 0 and is positive otherwise
        let (term, log_size) = if arg == 0.0 {
            (Complex64::new(0.0, 0.0), 0.0)
        } else {
            let ln_rg = -ln_gamma(arg);
            let ln_mag = ln_poch + nf * ln_r + ln_rg;
            (
                Complex64::from_polar(ln_mag.exp(), nf * theta),
                ln_poch.abs() + (nf * ln_r).abs() + ln_rg.abs() + nf * theta.abs(),
            )
        };
        ln_poch += ((p.gamma + nf) / (nf + 1.0)).ln();
        // Kahan summation, component-wise.
        let y = term.re - c_re;
        let t = sum_re + y;
        c_re = (t - sum_re) - y;
        sum_re = t;
        let y = term.im - c_im;
        let t = sum_im + y;
        c_im = (t - sum_im) - y;
        sum_im = t;
        let mag = term.norm();
        // exp of a sum of logs carries a relative error of order eps·Σ|log|
        abs_sum += mag * (1.0 + log_size);
        let total = sum_re.hypot(sum_im);
        if mag <= 1e-17 * total && mag <= last {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
        last = mag;
        n += 1;
        if n > 4000 {
            break;
        }
    }
    let value = Complex64::new(sum_re, sum_im);
    let scale = value.norm().max(f64::MIN_POSITIVE);
    let error_estimate = (2.0 * f64::EPSILON * abs_sum + last) / scale;
    Evaluation {
        value,
        error_estimate,
        method: Method::Series,
    }
}

struct ContourParams {
    mu: f64,
    h: f64,
    n: f64,
}

fn contour(p: PrabhakarParams, z: Complex64) -> Result<Evaluation, SpecfunError> {
    let alpha = p.alpha;
    let beta = p.beta;
    let gam = p.gamma;
    let theta = z.arg();
    let abs_z = z.norm();

    // Poles s* with (s*)^α = z on the principal sheet.
    let kmin = (-alpha / 2.0 - theta / (2.0 * PI)).ceil() as i64;
    let kmax = (alpha / 2.0 - theta / (2.0 * PI)).floor() as i64;
    let mut poles: Vec<(f64, Complex64)> = (kmin..=kmax)
        .map(|k| {
            let s = Complex64::from_polar(
                abs_z.powf(1.0 / alpha),
                (theta + 2.0 * PI * k as f64) / alpha,
            );
            ((s.re + s.norm()) / 2.0, s)
        })
        .filter(|(phi, _)| *phi > 1e-15)
        .collect();
    poles.sort_by(|a, b| a.0.total_cmp(&b.0));

    let integer_gamma = p.integer_gamma();
    if integer_gamma.is_none() && !poles.is_empty() {
        // Non-integer γ turns the poles into branch points.
        let sector_ok = theta.abs() > alpha * PI;
        if !sector_ok {
            return Err(SpecfunError::Domain(format!(
                "non-integer gamma={gam} requires |Arg z| > alpha*pi (Arg z = {theta})"
            )));
        }
        poles.clear();
    }

    // Singularities ordered by φ(s) = (Re s + |s|)/2; the origin comes first.
    let mut phi: Vec<f64> = std::iter::once(0.0).chain(poles.iter().map(|x| x.0)).collect();
    let j1 = phi.len();
    let strengths_p: Vec<f64> = std::iter::once((-2.0 * (alpha * gam - beta + 1.0)).max(0.0))
        .chain(std::iter::repeat_n(gam, j1 - 1))
        .collect();
    let strengths_q: Vec<f64> = std::iter::repeat_n(gam, j1 - 1)
        .chain(std::iter::once(f64::INFINITY))
        .collect();
    phi.push(f64::INFINITY);

    let mut log_epsilon = CONTOUR_TOLERANCE.ln();
    let (best, region) = loop {
        let admissible: Vec<usize> = (0..j1)
            .filter(|&j| phi[j] < (log_epsilon - LOG_EPS_MACHINE) && phi[j] < phi[j + 1])
            .collect();
        let mut best: Option<(ContourParams, usize)> = None;
        for &j in &admissible {
            let cand = if j + 1 < j1 {
                optimal_param_bounded(
                    phi[j],
                    phi[j + 1],
                    strengths_p[j],
                    strengths_q[j],
                    log_epsilon,
                )
            } else {
                optimal_param_unbounded(phi[j], strengths_p[j], log_epsilon)
            };
            if let Some(c) = cand
                && c.n.is_finite()
                && best.as_ref().is_none_or(|(b, _)| c.n < b.n)
            {
                best = Some((c, j));
            }
        }
        match best {
            Some((c, j)) if c.n <= MAX_CONTOUR_NODES => break (c, j),
            _ => {
                log_epsilon += 10f64.ln();
                if log_epsilon > (1e-3f64).ln() {
                    return Err(SpecfunError::Accuracy {
                        achieved: log_epsilon.exp(),
                        value: Complex64::new(f64::NAN, f64::NAN),
                    });
                }
            }
        }
    };

    let ContourParams { mu, h, n } = best;
    let n = n as i64;
    let one = Complex64::new(1.0, 0.0);
    let exponent = alpha * gam - beta;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in -n..=n {
        let u = h * k as f64;
        let iu1 = Complex64::new(1.0, u);
        let s = mu * iu1 * iu1;
        let ds = Complex64::new(-2.0 * mu * u, 2.0 * mu);
        let denom = cpow(s, alpha) - z;
        let denom = match integer_gamma {
            Some(g) => denom.powi(g as i32),
            None => cpow(denom, gam),
        };
        acc += s.exp() * cpow(s, exponent) / denom * ds;
    }
    let integral = acc * h / Complex64::new(0.0, 2.0 * PI);

    let mut residues = Complex64::new(0.0, 0.0);
    for (_, s) in poles.iter().skip(region) {
        let s = *s;
        let r = match integer_gamma {
            Some(1) => cpow(s, 1.0 - beta) * s.exp() / alpha,
            Some(2) => {
                s.exp() * cpow(s, 2.0 - beta) / (alpha * alpha)
                    * (one + (alpha - beta + 1.0) / s)
            }
            Some(g) => circle_residue(s, alpha, beta, g),
            None => unreachable!("poles cleared for non-integer gamma"),
        };
        residues += r;
    }
    let mut value = integral + residues;
    if z.im == 0.0 {
        value.im = 0.0;
    }
    let scale = value.norm().max(f64::MIN_POSITIVE);
    // Tolerance is absolute in the integrand scale; rescale to a relative figure
    // with the magnitude of the largest residue or O(1) integral.
    let reference = residues.norm().max(integral.norm()).max(1.0 / (1.0 + abs_z).powf(gam));
    let error_estimate = log_epsilon.exp() * (reference / scale).max(1.0);
    Ok(Evaluation {
        value,
        error_estimate,
        method: Method::Contour,
    })
}

/// Residue of e^s s^{αγ−β}/(s^α − z)^γ at a pole of integer order γ ≥ 3,
/// by trapezoidal quadrature on a small circle.
fn circle_residue(s_star: Complex64, alpha: f64, beta: f64, g: u32) -> Complex64 {
    let z = cpow(s_star, alpha);
    let radius = 0.1 * s_star.norm().min(1.0);
    let nodes = 128;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..nodes {
        let e = Complex64::from_polar(radius, 2.0 * PI * j as f64 / nodes as f64);
        let s = s_star + e;
        acc += s.exp() * cpow(s, alpha * g as f64 - beta) / (cpow(s, alpha) - z).powi(g as i32) * e;
    }
    acc / nodes as f64
}

fn optimal_param_bounded(
    phi_j: f64,
    phi_j1: f64,
    p: f64,
    q: f64,
    log_epsilon: f64,
) -> Option<ContourParams> {
    const FAC: f64 = 1.01;
    let f_max = (log_epsilon - LOG_EPS_MACHINE).exp();
    let sq_phi_j = phi_j.sqrt();
    let threshold = 2.0 * (log_epsilon - LOG_EPS_MACHINE).sqrt();
    let sq_phi_j1 = phi_j1.sqrt().min(threshold - sq_phi_j);

    let (sq_bar_j, sq_bar_j1, f_bar) = if p < 1e-14 && q < 1e-14 {
        (sq_phi_j, sq_phi_j1, 1.0)
    } else if p < 1e-14 {
        let f_min = if sq_phi_j > 0.0 {
            FAC * (sq_phi_j / (sq_phi_j1 - sq_phi_j)).powf(q)
        } else {
            FAC
        };
        if f_min >= f_max {
            return None;
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fq = f_bar.powf(-1.0 / q);
        (sq_phi_j, (2.0 * sq_phi_j1 - fq * sq_phi_j) / (2.0 + fq), f_bar)
    } else if q < 1e-14 {
        let f_min = FAC * (sq_phi_j1 / (sq_phi_j1 - sq_phi_j)).powf(p);
        if f_min >= f_max {
            return None;
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / p);
        ((2.0 * sq_phi_j + fp * sq_phi_j1) / (2.0 - fp), sq_phi_j1, f_bar)
    } else {
        let mut f_min = FAC * (sq_phi_j + sq_phi_j1) / (sq_phi_j1 - sq_phi_j).powf(p.max(q));
        if f_min >= f_max {
            return None;
        }
        f_min = f_min.max(1.5);
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / p);
        let fq = f_bar.powf(-1.0 / q);
        let w = -phi_j1 / log_epsilon;
        let den = 2.0 + w - (1.0 + w) * fp + fq;
        let a = ((2.0 + w + fq) * sq_phi_j + fp * sq_phi_j1) / den;
        let b = (-(1.0 + w) * fq * sq_phi_j + (2.0 + w - (1.0 + w) * fp) * sq_phi_j1) / den;
        (a, b, f_bar)
    };
    if !(sq_bar_j1 > sq_bar_j) {
        return None;
    }
    let log_eps = log_epsilon - f_bar.ln();
    let w = -sq_bar_j1 * sq_bar_j1 / log_eps;
    let mu = (((1.0 + w) * sq_bar_j + sq_bar_j1) / (2.0 + w)).powi(2);
    let h = -2.0 * PI / log_eps * (sq_bar_j1 - sq_bar_j) / ((1.0 + w) * sq_bar_j + sq_bar_j1);
    let n = ((1.0 - log_eps / mu).sqrt() / h).ceil();
    Some(ContourParams { mu, h, n })
}

fn optimal_param_unbounded(phi_j: f64, p: f64, log_epsilon: f64) -> Option<ContourParams> {
    let sq_phi_j = phi_j.sqrt();
    let mut phibar = if phi_j > 0.0 { phi_j * 1.01 } else { 0.01 };
    let mut sq_phibar = phibar.sqrt();
    let (f_min, f_max, f_tar) = (1.0f64, 10.0f64, 5.0f64);
    let mut iterations = 0;
    let (mut n, mut a, mut sq_mu);
    loop {
        let phi_t = phibar;
        let log_eps_phi_t = log_epsilon / phi_t;
        n = (phi_t / PI * (1.0 - 3.0 * log_eps_phi_t / 2.0 + (1.0 - 2.0 * log_eps_phi_t).sqrt()))
            .ceil();
        a = PI * n / phi_t;
        sq_mu = sq_phibar * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
        let fbar = ((sq_phibar - sq_phi_j) / sq_mu).powf(-p);
        let stop = p < 1e-14 || (f_min < fbar && fbar < f_max);
        if stop {
            break;
        }
        sq_phibar = f_tar.powf(-1.0 / p) * sq_mu + sq_phi_j;
        phibar = sq_phibar * sq_phibar;
        iterations += 1;
        if iterations > 100 {
            return None;
        }
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / n;
    let threshold = log_epsilon - LOG_EPS_MACHINE;
    if mu > threshold {
        let q = if p.abs() < 1e-14 {
            0.0
        } else {
            f_tar.powf(-1.0 / p) * mu.sqrt()
        };
        let phibar = (q + phi_j.sqrt()).powi(2);
        if phibar < threshold {
            let w = (LOG_EPS_MACHINE / (LOG_EPS_MACHINE - log_epsilon)).sqrt();
            let u = (-phibar / LOG_EPS_MACHINE).sqrt();
            mu = threshold;
            n = (w * log_epsilon / 2.0 / PI / (u * w - 1.0)).ceil();
            h = w / n;
        } else {
            return None;
        }
    }
    Some(ContourParams { mu, h, n })
}

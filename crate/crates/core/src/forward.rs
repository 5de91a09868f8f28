//! Closed-form spectral solution of the direct problem.
//!
//! For each mode k the solution is
//!
//! u_k = [E(−λ̆t^α) + ϑq]φ − aqψ + [K̆ + ϑw]∗f − aw∗χ
//! v_k = −bqφ + [E(−λ̆t^α) + ζq]ψ − bw∗f + [K̆ + ζw]∗χ
//!
//! with K̆(σ) = σ^{α−1}E_{α,α}(−λ̆σ^α) and q, w the divided differences of
//! E_{α,1}(−λσ^α) and σ^{α−1}E_{α,α}(−λσ^α) between the two roots.
//!
//! Every kernel has the form σ^{α−1}H(σ^α) with H entire, so the convolution
//! against a source g supported on (0, t0) becomes, after y = σ^α,
//!
//! ∫₀^{min(t,t0)} K(t−τ) g(τ) dτ = (1/α) ∫_{y_lo}^{y_hi} H(y) g(t − y^{1/α}) dy
//!
//! with y_hi = t^α and y_lo = (t − t0)^α or 0. The weak singularity is gone;
//! what remains is the branch point of y^{1/α} at y = 0, which the panels are
//! graded toward. The same formula with complex t is the analytic extension.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::modes::{ModeTable, ModelParams, SpectralField};
use crate::quad::UnitRule;
use crate::specfun::{PrabhakarParams, cpow, prabhakar};

/// Relative root gap below which the coalescent (γ = 2) formulas are used.
pub const COALESCENCE_THRESHOLD: f64 = 1e-6;

const ABEL_PANEL_POINTS: usize = 12;
const ABEL_MIN_WIDTH: f64 = 1e-13;
const ABEL_MAX_WIDTH: f64 = 0.25;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Per-mode source coefficients in the monomial basis {t^m}, m = 0..=M, on
/// (0, t0). Sources vanish for t ≥ t0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceSpec {
    pub degree: usize,
    pub t0: f64,
    /// `f_coeffs[k-1][m]`
    pub f_coeffs: Vec<Vec<Complex64>>,
    /// `chi_coeffs[k-1][m]`
    pub chi_coeffs: Vec<Vec<Complex64>>,
}

impl SourceSpec {
    pub fn zeros(k_max: usize, degree: usize, t0: f64) -> Self {
        Self {
            degree,
            t0,
            f_coeffs: vec![vec![zero(); degree + 1]; k_max],
            chi_coeffs: vec![vec![zero(); degree + 1]; k_max],
        }
    }

    pub fn modes(&self) -> usize {
        self.f_coeffs.len()
    }

    fn check(&self, k_max: usize) -> Result<()> {
        let rows_ok = |rows: &[Vec<Complex64>]| {
            rows.len() == k_max && rows.iter().all(|r| r.len() == self.degree + 1)
        };
        if !rows_ok(&self.f_coeffs) || !rows_ok(&self.chi_coeffs) {
            return Err(Error::Argument(format!(
                "source tables must be {k_max} x {} for this mode table",
                self.degree + 1
            )));
        }
        if !(self.t0 > 0.0) {
            return Err(Error::Argument(format!("source support end t0={} must be > 0", self.t0)));
        }
        Ok(())
    }

    /// f_k(t), zero outside (0, t0).
    pub fn f_at(&self, k: usize, t: f64) -> Complex64 {
        if t <= 0.0 || t >= self.t0 {
            return zero();
        }
        poly(&self.f_coeffs[k - 1], Complex64::new(t, 0.0))
    }

    /// χ_k(t), zero outside (0, t0).
    pub fn chi_at(&self, k: usize, t: f64) -> Complex64 {
        if t <= 0.0 || t >= self.t0 {
            return zero();
        }
        poly(&self.chi_coeffs[k - 1], Complex64::new(t, 0.0))
    }

    /// Component-wise a·self + b·other.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Self {
        let mix = |x: &[Vec<Complex64>], y: &[Vec<Complex64>]| {
            x.iter()
                .zip(y)
                .map(|(r, s)| r.iter().zip(s).map(|(p, q)| a * p + b * q).collect())
                .collect()
        };
        Self {
            degree: self.degree,
            t0: self.t0,
            f_coeffs: mix(&self.f_coeffs, &other.f_coeffs),
            chi_coeffs: mix(&self.chi_coeffs, &other.chi_coeffs),
        }
    }
}

fn poly(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(zero(), |acc, c| acc * x + c)
}

/// Modal coefficients of the state on a time grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateTrajectory {
    pub time_grid: Vec<f64>,
    /// `u_modes[k-1][i]` at `time_grid[i]`
    pub u_modes: Vec<Vec<Complex64>>,
    pub v_modes: Vec<Vec<Complex64>>,
    pub params_ref: ModelParams,
    /// Smallest c₀ with |u_k(t)| + |v_k(t)| ≤ c₀{|φ_k| + |ψ_k| + t^{α−1}∗(|f_k| + |χ_k|)(t)}
    /// over the computed samples; zero when the data vanish.
    pub c0: f64,
}

/// Boundary flux h(t) = Σ_k u_k(t)γ_k at x = 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluxTrace {
    pub time_grid: Vec<f64>,
    pub values: Vec<Complex64>,
}

/// Coalescence-aware evaluation of the mode-k kernels.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ModeKernel {
    pub alpha: f64,
    pub t0: f64,
    pub lam_breve: f64,
    pub lam_hat: f64,
    pub theta: f64,
    pub zeta: f64,
    pub a: f64,
    pub b: f64,
    coalescent: bool,
    lam_mid: f64,
}

impl ModeKernel {
    pub fn new(table: &ModeTable, k: usize) -> Result<Self> {
        let m = table.mode(k)?;
        let p = &table.params;
        Ok(Self::from_roots(
            p.alpha,
            p.t0,
            m.lam_breve,
            m.lam_hat,
            m.theta,
            m.zeta,
            p.a,
            p.b,
            COALESCENCE_THRESHOLD,
        ))
    }

    #[allow(clippy::too_many_arguments)]
    pub fn from_roots(
        alpha: f64,
        t0: f64,
        lam_breve: f64,
        lam_hat: f64,
        theta: f64,
        zeta: f64,
        a: f64,
        b: f64,
        threshold: f64,
    ) -> Self {
        let coalescent = (lam_breve - lam_hat).abs() <= threshold * lam_breve.max(1.0);
        Self {
            alpha,
            t0,
            lam_breve,
            lam_hat,
            theta,
            zeta,
            a,
            b,
            coalescent,
            lam_mid: 0.5 * (lam_breve + lam_hat),
        }
    }

    pub fn is_coalescent(&self) -> bool {
        self.coalescent
    }

    fn ml(&self, beta: f64, gamma: f64, x: Complex64) -> Result<Complex64> {
        let p = PrabhakarParams::new(self.alpha, beta, gamma)?;
        Ok(prabhakar(p, x)?)
    }

    /// E_{α,1}(−λ̆z^α) and q_k(z).
    pub fn homogeneous(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let za = cpow(z, self.alpha);
        let e_breve = self.ml(1.0, 1.0, -self.lam_breve * za)?;
        let q = if self.coalescent {
            za * self.ml(self.alpha + 1.0, 2.0, -self.lam_mid * za)?
        } else {
            let e_hat = self.ml(1.0, 1.0, -self.lam_hat * za)?;
            (e_hat - e_breve) / (self.lam_breve - self.lam_hat)
        };
        Ok((e_breve, q))
    }

    /// H̆(y) = E_{α,α}(−λ̆y) and H_w(y), the y-profiles of K̆ and w.
    fn profiles(&self, y: Complex64) -> Result<(Complex64, Complex64)> {
        let h_breve = self.ml(self.alpha, 1.0, -self.lam_breve * y)?;
        let h_w = if self.coalescent {
            y * self.ml(2.0 * self.alpha, 2.0, -self.lam_mid * y)?
        } else {
            let h_hat = self.ml(self.alpha, 1.0, -self.lam_hat * y)?;
            (h_hat - h_breve) / (self.lam_breve - self.lam_hat)
        };
        Ok((h_breve, h_w))
    }

    /// w_k(z) = z^{α−1}H_w(z^α).
    pub fn w(&self, z: Complex64) -> Result<Complex64> {
        if z == zero() {
            if 2.0 * self.alpha - 1.0 < 0.0 {
                return Err(Error::Domain("w_k(0) is unbounded when 2α − 1 < 0".into()));
            }
            if 2.0 * self.alpha - 1.0 > 0.0 {
                return Ok(zero());
            }
            // z^{2α−1} → 1 times the leading coefficient 1/Γ(2α)
            return Ok(Complex64::new(1.0 / gamma(2.0 * self.alpha), 0.0));
        }
        let (_, h_w) = self.profiles(cpow(z, self.alpha))?;
        Ok(cpow(z, self.alpha - 1.0) * h_w)
    }

    /// Kernel values and quadrature nodes for the convolutions at `z`.
    pub fn response(&self, z: Complex64) -> Result<ModeResponse> {
        let (e1, q) = self.homogeneous(z)?;
        let nodes = abel_nodes(self.alpha, self.t0, z)
            .into_iter()
            .map(|(y, tau, weight)| {
                let (h_breve, h_w) = self.profiles(y)?;
                Ok(AbelNode {
                    tau,
                    weight,
                    h_breve,
                    h_w,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModeResponse { z, e1, q, nodes })
    }
}

#[derive(Debug, Clone, Copy)]
struct AbelNode {
    tau: Complex64,
    /// (1/α)·dy quadrature weight
    weight: Complex64,
    h_breve: Complex64,
    h_w: Complex64,
}

/// Everything needed to evaluate one mode at one time for arbitrary data.
/// Built once per (mode, time) and reused for every basis element.
#[derive(Debug, Clone)]
pub struct ModeResponse {
    pub z: Complex64,
    /// E_{α,1}(−λ̆z^α)
    pub e1: Complex64,
    /// q_k(z)
    pub q: Complex64,
    nodes: Vec<AbelNode>,
}

/// Convolution moments ∫ K(z−τ)τ^m dτ over the source support.
#[derive(Debug, Clone, PartialEq)]
pub struct Moments {
    /// kernel K̆
    pub breve: Vec<Complex64>,
    /// kernel w
    pub w: Vec<Complex64>,
}

impl ModeResponse {
    pub fn moments(&self, degree: usize) -> Moments {
        let mut breve = vec![zero(); degree + 1];
        let mut w = vec![zero(); degree + 1];
        for node in &self.nodes {
            let mut power = node.weight;
            for m in 0..=degree {
                breve[m] += node.h_breve * power;
                w[m] += node.h_w * power;
                power *= node.tau;
            }
        }
        Moments { breve, w }
    }

    /// ∫ (z−τ)^{α−1} g(τ) dτ over the source support, for the c₀ report.
    fn abel(&self, g: impl Fn(Complex64) -> f64) -> f64 {
        self.nodes.iter().map(|n| (n.weight * g(n.tau)).re).sum()
    }

    /// (u_k(z), v_k(z)) for the given data of mode k.
    pub(crate) fn evaluate(
        &self,
        kernel: &ModeKernel,
        phi: Complex64,
        psi: Complex64,
        f: &[Complex64],
        chi: &[Complex64],
    ) -> (Complex64, Complex64) {
        let ModeKernel {
            theta, zeta, a, b, ..
        } = *kernel;
        let mut u = (self.e1 + theta * self.q) * phi - a * self.q * psi;
        let mut v = -b * self.q * phi + (self.e1 + zeta * self.q) * psi;
        for n in &self.nodes {
            let fv = poly(f, n.tau);
            let cv = poly(chi, n.tau);
            u += n.weight * ((n.h_breve + theta * n.h_w) * fv - a * n.h_w * cv);
            v += n.weight * (-b * n.h_w * fv + (n.h_breve + zeta * n.h_w) * cv);
        }
        (u, v)
    }
}

/// Nodes (y, τ, weight) for (1/α)∫_{y_lo}^{y_hi} H(y) g(z − y^{1/α}) dy on the
/// straight segment between y_lo and y_hi. Panels are sized by the distance
/// to the branch point y = 0.
fn abel_nodes(alpha: f64, t0: f64, z: Complex64) -> Vec<(Complex64, Complex64, Complex64)> {
    let real = z.im == 0.0;
    if real && z.re <= 0.0 {
        return Vec::new();
    }
    let y_hi = cpow(z, alpha);
    let y_lo = if real && z.re <= t0 {
        zero()
    } else {
        cpow(z - t0, alpha)
    };
    let delta = y_hi - y_lo;
    let length = delta.norm();
    if length == 0.0 {
        return Vec::new();
    }
    let rule = UnitRule::legendre(ABEL_PANEL_POINTS);
    let mut out = Vec::new();
    let mut s = 0.0f64;
    while s < 1.0 {
        let dist = (y_lo + s * delta).norm() / length;
        let width = dist.clamp(ABEL_MIN_WIDTH, ABEL_MAX_WIDTH).min(1.0 - s);
        let end = if 1.0 - (s + width) < 1e-15 { 1.0 } else { s + width };
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let y = y_lo + (s + (end - s) * x) * delta;
            let tau = if real {
                let v = z.re - y.re.max(0.0).powf(1.0 / alpha);
                Complex64::new(v.max(0.0), 0.0)
            } else {
                z - cpow(y, 1.0 / alpha)
            };
            out.push((y, tau, delta * ((end - s) * w / alpha)));
        }
        s = end;
    }
    out
}

/// q_k(z) and w_k(z).
pub fn qk_wk(table: &ModeTable, k: usize, z: Complex64) -> Result<(Complex64, Complex64)> {
    let kernel = ModeKernel::new(table, k)?;
    let (_, q) = kernel.homogeneous(z)?;
    Ok((q, kernel.w(z)?))
}

fn check_grid(time_grid: &[f64]) -> Result<()> {
    if time_grid.iter().any(|t| !(t.is_finite() && *t >= 0.0)) {
        return Err(Error::Argument("time grid must be finite and >= 0".into()));
    }
    if time_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Argument("time grid must be strictly increasing".into()));
    }
    Ok(())
}

/// (u_k(t), v_k(t)) on `time_grid` for one mode.
pub fn mode_solution(
    table: &ModeTable,
    k: usize,
    phi_k: Complex64,
    psi_k: Complex64,
    src: &SourceSpec,
    time_grid: &[f64],
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    check_grid(time_grid)?;
    src.check(table.len())?;
    let kernel = ModeKernel::new(table, k)?;
    let f = &src.f_coeffs[k - 1];
    let chi = &src.chi_coeffs[k - 1];
    let mut u = Vec::with_capacity(time_grid.len());
    let mut v = Vec::with_capacity(time_grid.len());
    for &t in time_grid {
        let r = kernel.response(Complex64::new(t, 0.0))?;
        let (uk, vk) = r.evaluate(&kernel, phi_k, psi_k, f, chi);
        u.push(uk);
        v.push(vk);
    }
    Ok((u, v))
}

fn check_fields(table: &ModeTable, phi: &SpectralField, psi: &SpectralField) -> Result<()> {
    if phi.len() != table.len() || psi.len() != table.len() {
        return Err(Error::Argument(format!(
            "initial fields have {} and {} modes, table has {}",
            phi.len(),
            psi.len(),
            table.len()
        )));
    }
    Ok(())
}

/// Solves the direct problem mode by mode on `time_grid`. Model parameters
/// are taken from the table.
pub fn solve(
    table: &ModeTable,
    phi: &SpectralField,
    psi: &SpectralField,
    src: &SourceSpec,
    time_grid: &[f64],
) -> Result<StateTrajectory> {
    check_grid(time_grid)?;
    check_fields(table, phi, psi)?;
    src.check(table.len())?;
    let mut u_modes = Vec::with_capacity(table.len());
    let mut v_modes = Vec::with_capacity(table.len());
    let mut c0 = 0.0f64;
    for k in 1..=table.len() {
        let kernel = ModeKernel::new(table, k)?;
        let (phi_k, psi_k) = (phi.coeffs[k - 1], psi.coeffs[k - 1]);
        let f = &src.f_coeffs[k - 1];
        let chi = &src.chi_coeffs[k - 1];
        let mut u = Vec::with_capacity(time_grid.len());
        let mut v = Vec::with_capacity(time_grid.len());
        for &t in time_grid {
            let r = kernel.response(Complex64::new(t, 0.0))?;
            let (uk, vk) = r.evaluate(&kernel, phi_k, psi_k, f, chi);
            if t > 0.0 {
                let data = phi_k.norm()
                    + psi_k.norm()
                    + r.abel(|tau| poly(f, tau).norm() + poly(chi, tau).norm());
                if data > 0.0 {
                    c0 = c0.max((uk.norm() + vk.norm()) / data);
                }
            }
            u.push(uk);
            v.push(vk);
        }
        u_modes.push(u);
        v_modes.push(v);
    }
    Ok(StateTrajectory {
        time_grid: time_grid.to_vec(),
        u_modes,
        v_modes,
        params_ref: table.params,
        c0,
    })
}

/// Σ_k u_k(t)γ_k at every grid time.
pub fn flux_on_grid(traj: &StateTrajectory, table: &ModeTable) -> Vec<Complex64> {
    (0..traj.time_grid.len())
        .map(|i| {
            traj.u_modes
                .iter()
                .zip(&table.modes)
                .map(|(u, m)| u[i] * m.gamma_trace)
                .sum()
        })
        .collect()
}

/// Flux restricted to the observation window t0 < t ≤ t1.
pub fn boundary_flux(traj: &StateTrajectory, table: &ModeTable) -> FluxTrace {
    let p = &traj.params_ref;
    let all = flux_on_grid(traj, table);
    let (time_grid, values) = traj
        .time_grid
        .iter()
        .zip(all)
        .filter(|(t, _)| **t > p.t0 && **t <= p.t1)
        .map(|(t, h)| (*t, h))
        .unzip();
    FluxTrace { time_grid, values }
}

/// Max-over-modes discrete L² residuals of the two integral equations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub u: f64,
    pub v: f64,
}

impl ResidualReport {
    pub fn max(&self) -> f64 {
        self.u.max(self.v)
    }
}

/// Residual of u_k − φ_k = I^α[−(κλ_k+c)u_k − av_k + f_k] and its partner.
///
/// I^α of the state is discretized by product integration of the piecewise
/// linear interpolant on the uniform grid; I^α of the polynomial sources is
/// exact. The grid must start at 0.
pub fn fractional_residual(
    traj: &StateTrajectory,
    table: &ModeTable,
    phi: &SpectralField,
    psi: &SpectralField,
    src: &SourceSpec,
) -> Result<ResidualReport> {
    let grid = &traj.time_grid;
    if grid.len() < 2 || grid[0] != 0.0 {
        return Err(Error::Argument("residual grid must start at 0 with >= 2 points".into()));
    }
    let h = grid[1] - grid[0];
    for (i, t) in grid.iter().enumerate() {
        if (t - h * i as f64).abs() > 1e-9 * h.max(*t) {
            return Err(Error::Argument("residual grid must be uniform".into()));
        }
    }
    check_fields(table, phi, psi)?;
    src.check(table.len())?;
    let p = &table.params;
    let alpha = p.alpha;
    let n_pts = grid.len();
    let scale = h.powf(alpha) / gamma(alpha + 2.0);
    // a_{j,n} depends on n − j except for j = 0
    let inner: Vec<f64> = (0..n_pts + 1)
        .map(|d| {
            let d = d as f64;
            (d + 1.0).powf(alpha + 1.0) - 2.0 * d.powf(alpha + 1.0)
                + if d >= 1.0 { (d - 1.0).powf(alpha + 1.0) } else { 0.0 }
        })
        .collect();
    let first = |n: usize| {
        let n = n as f64;
        (n - 1.0).powf(alpha + 1.0) - (n - 1.0 - alpha) * n.powf(alpha)
    };

    let mut worst = ResidualReport { u: 0.0, v: 0.0 };
    for (idx, m) in table.modes.iter().enumerate() {
        let k = idx + 1;
        let u = &traj.u_modes[idx];
        let v = &traj.v_modes[idx];
        let gu: Vec<Complex64> = (0..n_pts)
            .map(|i| -(p.kappa * m.lambda + p.c) * u[i] - p.a * v[i])
            .collect();
        let gv: Vec<Complex64> = (0..n_pts)
            .map(|i| -(p.varkappa * m.lambda + p.d) * v[i] - p.b * u[i])
            .collect();
        let (mut ru, mut rv) = (0.0f64, 0.0f64);
        for n in 1..n_pts {
            let mut iu = first(n) * gu[0];
            let mut iv = first(n) * gv[0];
            for j in 1..n {
                iu += inner[n - j] * gu[j];
                iv += inner[n - j] * gv[j];
            }
            iu += gu[n];
            iv += gv[n];
            let t = grid[n];
            let su = source_integral(&src.f_coeffs[k - 1], alpha, src.t0, t);
            let sv = source_integral(&src.chi_coeffs[k - 1], alpha, src.t0, t);
            let eu = u[n] - phi.coeffs[idx] - scale * iu - su;
            let ev = v[n] - psi.coeffs[idx] - scale * iv - sv;
            ru += h * eu.norm_sqr();
            rv += h * ev.norm_sqr();
        }
        worst.u = worst.u.max(ru.sqrt());
        worst.v = worst.v.max(rv.sqrt());
    }
    Ok(worst)
}

/// I^α[Σ c_m τ^m 1_{τ<t0}](t), exactly.
fn source_integral(coeffs: &[Complex64], alpha: f64, t0: f64, t: f64) -> Complex64 {
    let g_alpha = gamma(alpha);
    coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| {
            if *c == zero() {
                return zero();
            }
            let mf = m as f64;
            // ∫₀^t (t−τ)^{α−1} τ^m dτ = B(α, m+1) t^{m+α}
            let full = beta_fn(alpha, mf + 1.0) * t.powf(mf + alpha);
            let value = if t <= t0 {
                full
            } else {
                // subtract ∫_{t0}^t (t−τ)^{α−1} τ^m dτ with τ^m expanded about t0
                let mut tail = 0.0;
                let mut binom = 1.0;
                for j in 0..=m {
                    let jf = j as f64;
                    tail += binom
                        * t0.powi((m - j) as i32)
                        * beta_fn(alpha, jf + 1.0)
                        * (t - t0).powf(alpha + jf);
                    binom *= (mf - jf) / (jf + 1.0);
                }
                full - tail
            };
            c * (value / g_alpha)
        })
        .sum()
}

fn beta_fn(a: f64, b: f64) -> f64 {
    gamma(a) * gamma(b) / gamma(a + b)
}

/// Largest admissible |Arg(z − t0)| for the analytic extension.
pub fn extension_half_angle(alpha: f64) -> f64 {
    ((2.0 - alpha) * PI / (2.0 * alpha)).min(PI)
}

/// (u_k(z), v_k(z)) for all modes at a complex point z of the sector
/// |Arg(z − t0)| < min{π, (2−α)π/(2α)}.
pub fn extend_complex(
    table: &ModeTable,
    phi: &SpectralField,
    psi: &SpectralField,
    src: &SourceSpec,
    z: Complex64,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    check_fields(table, phi, psi)?;
    src.check(table.len())?;
    let p = &table.params;
    let shifted = z - p.t0;
    let limit = extension_half_angle(p.alpha);
    if shifted.norm() == 0.0 || shifted.arg().abs() >= limit {
        return Err(Error::Domain(format!(
            "z = {z} outside the sector |Arg(z - t0)| < {limit:.6}"
        )));
    }
    let mut us = Vec::with_capacity(table.len());
    let mut vs = Vec::with_capacity(table.len());
    for k in 1..=table.len() {
        let kernel = ModeKernel::new(table, k)?;
        let r = kernel.response(z)?;
        let (u, v) = r.evaluate(
            &kernel,
            phi.coeffs[k - 1],
            psi.coeffs[k - 1],
            &src.f_coeffs[k - 1],
            &src.chi_coeffs[k - 1],
        );
        us.push(u);
        vs.push(v);
    }
    Ok((us, vs))
}

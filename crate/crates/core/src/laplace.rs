//! Laplace-domain layer.
//!
//! The flux transform is Σ_k U_k(s)γ_k with
//!
//! U_k(s) = [(s^α+ϰλ_k+d)(F_k(s)+s^{α−1}φ_k) − a(X_k(s)+s^{α−1}ψ_k)] / ((s^α+λ̆_k)(s^α+λ̂_k))
//!
//! and F_k, X_k the transforms of sources supported on (0, t0), hence entire.
//! Across the negative axis s^α jumps, and the difference of the two
//! one-sided limits, written in ϱ = r^α, is the series Σ R_{k,j}(ϱ)G_{k,j}(ϱ^{1/α}).
//! Rotating the argument of the entire factors to the n-th branch of z^{1/α}
//! gives the branch functions Q(n, z).

use std::f64::consts::PI;

use log::warn;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forward::{ModeKernel, SourceSpec};
use crate::modes::{ModeTable, SpectralField};
use crate::specfun::{cpow, truncated_monomial_transform};

/// Relative size of the remaining tail bound at which series are cut.
pub const SERIES_TAIL_TOLERANCE: f64 = 1e-12;

/// Angular tolerance for deciding that a point lies on the pole rays.
pub const POLE_LINE_TOLERANCE: f64 = 1e-12;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// s together with the branch of s^α in use.
#[derive(Debug, Clone, Copy)]
struct Point {
    s: Complex64,
    s_alpha: Complex64,
    s_alpha_m1: Complex64,
}

impl Point {
    fn principal(s: Complex64, alpha: f64) -> Result<Self> {
        if s == zero() {
            return Err(Error::Pole("s = 0 is a branch point".into()));
        }
        let s_alpha = cpow(s, alpha);
        Ok(Self {
            s,
            s_alpha,
            s_alpha_m1: s_alpha / s,
        })
    }

    /// s = r e^{iθ} with the branch continued along the ray angle θ.
    fn polar(r: f64, theta: f64, alpha: f64) -> Self {
        let s = Complex64::from_polar(r, theta);
        let s = if theta.abs() == PI {
            Complex64::new(-r, 0.0)
        } else {
            s
        };
        let s_alpha = Complex64::from_polar(r.powf(alpha), alpha * theta);
        Self {
            s,
            s_alpha,
            s_alpha_m1: Complex64::from_polar(r.powf(alpha - 1.0), (alpha - 1.0) * theta),
        }
    }
}

/// Σ_m c_m ∫₀^{t0} e^{−st}t^m dt.
fn source_transform(coeffs: &[Complex64], t0: f64, s: Complex64) -> Complex64 {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != zero())
        .map(|(m, c)| c * truncated_monomial_transform(m as u32, t0, s))
        .sum()
}

/// ∫₀^{t0} |Σ c_m t^m| dt ≤ Σ |c_m| t0^{m+1}/(m+1)
fn l1_bound(coeffs: &[Complex64], t0: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| c.norm() * t0.powi(m as i32 + 1) / (m as f64 + 1.0))
        .sum()
}

fn mode_at(
    table: &ModeTable,
    k: usize,
    phi_k: Complex64,
    psi_k: Complex64,
    fx: (Complex64, Complex64),
    p: &Point,
) -> Result<(Complex64, Complex64)> {
    let m = table.mode(k)?;
    let prm = &table.params;
    let w = p.s_alpha;
    let den = m.factored_denominator(w);
    if den == zero() || !den.is_finite() {
        return Err(Error::Pole(format!("s = {} is a zero of the mode-{k} denominator", p.s)));
    }
    if (w + m.lam_hat).norm() < 1e-8 * m.lambda || (w + m.lam_breve).norm() < 1e-8 * m.lambda {
        warn!("s = {} is within 1e-8 of a mode-{k} pole", p.s);
    }
    let (f, x) = fx;
    let fu = f + p.s_alpha_m1 * phi_k;
    let fv = x + p.s_alpha_m1 * psi_k;
    let u = ((w + prm.varkappa * m.lambda + prm.d) * fu - prm.a * fv) / den;
    let v = ((w + prm.kappa * m.lambda + prm.c) * fv - prm.b * fu) / den;
    Ok((u, v))
}

/// (U_k(s), V_k(s)), the Laplace transforms of the mode-k solution, on the
/// principal branch of s^α.
pub fn mode_transform(
    table: &ModeTable,
    k: usize,
    phi_k: Complex64,
    psi_k: Complex64,
    src: &SourceSpec,
    s: Complex64,
) -> Result<(Complex64, Complex64)> {
    let p = Point::principal(s, table.params.alpha)?;
    let idx = table.mode(k)?.k - 1;
    let row = |rows: &[Vec<Complex64>]| {
        rows.get(idx)
            .map(|r| source_transform(r, src.t0, s))
            .ok_or_else(|| Error::Argument(format!("source has no row for mode {k}")))
    };
    let fx = (row(&src.f_coeffs)?, row(&src.chi_coeffs)?);
    mode_at(table, k, phi_k, psi_k, fx, &p)
}

/// Which factor of the denominator a pole comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PoleKind {
    /// s^α + κλ_k + c, uncoupled problem
    Simple,
    /// s^α + λ̆_k
    Breve,
    /// s^α + λ̂_k
    Hat,
    /// λ̆_k = λ̂_k, second order
    Double,
}

/// A pole of the R-family in the upper half plane. Its mirror image
/// conj(z) is the pole of the second terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    pub k: usize,
    pub kind: PoleKind,
    /// the root λ with z = −e^{−iπα}λ
    pub root: f64,
    pub z: Complex64,
}

/// Model data prepared for jump and branch-function evaluation.
#[derive(Debug, Clone)]
pub struct JumpContext {
    pub table: ModeTable,
    pub phi: SpectralField,
    pub psi: SpectralField,
    pub src: SourceSpec,
    coupled: bool,
    poles: Vec<Pole>,
    /// (|φ_k|+|ψ_k|, ‖f_k‖₁+‖χ_k‖₁) for the tail bound
    sizes: Vec<(f64, f64)>,
}

impl JumpContext {
    pub fn new(
        table: &ModeTable,
        phi: &SpectralField,
        psi: &SpectralField,
        src: &SourceSpec,
    ) -> Result<Self> {
        let k_max = table.len();
        if phi.len() != k_max || psi.len() != k_max || src.modes() != k_max {
            return Err(Error::Argument(format!("data must have {k_max} modes")));
        }
        if (src.t0 - table.params.t0).abs() > 1e-14 * table.params.t0 {
            return Err(Error::Argument("source support end differs from model t0".into()));
        }
        let p = &table.params;
        let coupled = p.a != 0.0;
        let rot = -Complex64::from_polar(1.0, -PI * p.alpha);
        let mut poles = Vec::new();
        for m in &table.modes {
            if !coupled {
                let root = p.kappa * m.lambda + p.c;
                poles.push(Pole {
                    k: m.k,
                    kind: PoleKind::Simple,
                    root,
                    z: rot * root,
                });
            } else if ModeKernel::new(table, m.k)?.is_coalescent() {
                let root = 0.5 * (m.lam_breve + m.lam_hat);
                poles.push(Pole {
                    k: m.k,
                    kind: PoleKind::Double,
                    root,
                    z: rot * root,
                });
            } else {
                for (kind, root) in [(PoleKind::Breve, m.lam_breve), (PoleKind::Hat, m.lam_hat)] {
                    poles.push(Pole {
                        k: m.k,
                        kind,
                        root,
                        z: rot * root,
                    });
                }
            }
        }
        let sizes = (0..k_max)
            .map(|i| {
                (
                    phi.coeffs[i].norm() + psi.coeffs[i].norm(),
                    l1_bound(&src.f_coeffs[i], src.t0) + l1_bound(&src.chi_coeffs[i], src.t0),
                )
            })
            .collect();
        Ok(Self {
            table: table.clone(),
            phi: phi.clone(),
            psi: psi.clone(),
            src: src.clone(),
            coupled,
            poles,
            sizes,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.table.params.alpha
    }

    /// True when a ≠ 0 and the four-term families apply.
    pub fn is_coupled(&self) -> bool {
        self.coupled
    }

    /// Number of (R, G) pairs per mode: 2 uncoupled, 4 coupled.
    pub fn families(&self) -> usize {
        if self.coupled { 4 } else { 2 }
    }

    pub fn poles(&self) -> &[Pole] {
        &self.poles
    }

    fn fx(&self, idx: usize, s: Complex64) -> (Complex64, Complex64) {
        let t0 = self.src.t0;
        (
            source_transform(&self.src.f_coeffs[idx], t0, s),
            source_transform(&self.src.chi_coeffs[idx], t0, s),
        )
    }

    /// [G_{k,1}, …, G_{k,4}](ζ); the last two vanish when uncoupled.
    pub fn g_all(&self, k: usize, zeta: Complex64) -> Result<[Complex64; 4]> {
        let m = self.table.mode(k)?;
        if zeta == zero() {
            return Err(Error::Pole("G_{k,2} and G_{k,4} have a pole at 0".into()));
        }
        let idx = m.k - 1;
        let gamma = m.gamma_trace;
        let (f, x) = self.fx(idx, -zeta);
        let mut g = [
            f * gamma,
            -self.phi.coeffs[idx] * gamma / zeta,
            x * gamma,
            -self.psi.coeffs[idx] * gamma / zeta,
        ];
        if !self.coupled {
            g[2] = zero();
            g[3] = zero();
        }
        Ok(g)
    }

    /// One side of the R-family at w = z e^{±iπα}.
    fn r_side(&self, k: usize, w: Complex64) -> [Complex64; 4] {
        let m = &self.table.modes[k - 1];
        let p = &self.table.params;
        if !self.coupled {
            let inv = 1.0 / (w + p.kappa * m.lambda + p.c);
            return [inv, w * inv, zero(), zero()];
        }
        let inv = 1.0 / m.factored_denominator(w);
        let num = (w + p.varkappa * m.lambda + p.d) * inv;
        [num, w * num, -p.a * inv, -p.a * w * inv]
    }

    /// [R_{k,1}, …, R_{k,4}](z).
    pub fn r_all(&self, k: usize, z: Complex64) -> Result<[Complex64; 4]> {
        self.table.mode(k)?;
        let e = Complex64::from_polar(1.0, PI * self.alpha());
        let up = self.r_side(k, z * e);
        let down = self.r_side(k, z * e.conj());
        Ok([up[0] - down[0], up[1] - down[1], up[2] - down[2], up[3] - down[3]])
    }

    /// Bound on |mode k term| at a point, for the tail rule.
    fn term_bound(&self, idx: usize, p: &Point) -> f64 {
        let m = &self.table.modes[idx];
        let prm = &self.table.params;
        let lower = self.table.c1 * m.lambda * (PI * prm.alpha).sin();
        let growth = (-p.s.re * prm.t0).exp().max(1.0);
        let (init, src) = self.sizes[idx];
        let data = growth * src + p.s_alpha_m1.norm() * init;
        let num = p.s_alpha.norm() + prm.varkappa * m.lambda + prm.d.abs() + prm.a.abs();
        m.gamma_trace.abs() * num * data / (lower * lower)
    }

    /// Σ_k term(k) in mode order, stopped once the bound on what is left
    /// falls below the tolerance relative to the partial sum.
    fn truncated_sum(
        &self,
        p: &Point,
        mut term: impl FnMut(usize) -> Result<Complex64>,
    ) -> Result<Complex64> {
        let k_max = self.table.len();
        let mut tail: Vec<f64> = (0..k_max).map(|i| self.term_bound(i, p)).collect();
        for i in (0..k_max.saturating_sub(1)).rev() {
            tail[i] += tail[i + 1];
        }
        let mut sum = zero();
        for i in 0..k_max {
            sum += term(i + 1)?;
            let rest = tail.get(i + 1).copied().unwrap_or(0.0);
            if rest < SERIES_TAIL_TOLERANCE * sum.norm() {
                break;
            }
        }
        Ok(sum)
    }

    fn flux_at(&self, p: &Point) -> Result<Complex64> {
        self.truncated_sum(p, |k| {
            let idx = k - 1;
            let (u, _) = mode_at(
                &self.table,
                k,
                self.phi.coeffs[idx],
                self.psi.coeffs[idx],
                self.fx(idx, p.s),
                p,
            )?;
            Ok(u * self.table.modes[idx].gamma_trace)
        })
    }

    /// Limit of the flux transform at s = −r approached from above
    /// (`upper = true`, θ → π) or below.
    pub fn flux_limit(&self, r: f64, upper: bool) -> Result<Complex64> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Argument(format!("radius {r} must be finite and > 0")));
        }
        let theta = if upper { PI } else { -PI };
        self.flux_at(&Point::polar(r, theta, self.alpha()))
    }
}

/// Σ_k U_k(s)γ_k on the principal branch.
pub fn flux_transform(ctx: &JumpContext, s: Complex64) -> Result<Complex64> {
    let p = Point::principal(s, ctx.alpha())?;
    ctx.flux_at(&p)
}

/// Difference of the one-sided limits of the flux transform at s = −ϱ^{1/α}.
pub fn jump(ctx: &JumpContext, rho: f64) -> Result<Complex64> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::Argument(format!("ϱ = {rho} must be finite and > 0")));
    }
    let r = rho.powf(1.0 / ctx.alpha());
    Ok(ctx.flux_limit(r, true)? - ctx.flux_limit(r, false)?)
}

/// e^{i2πn/α}, reduced through frac(n/α) so large n keeps full accuracy.
pub fn branch_rotation(alpha: f64, n: u64) -> Complex64 {
    let frac = (n as f64 / alpha).fract();
    Complex64::from_polar(1.0, 2.0 * PI * frac)
}

/// True when z lies on one of the rays Arg z = ±π(1−α).
pub fn on_pole_lines(alpha: f64, z: Complex64) -> bool {
    (z.arg().abs() - PI * (1.0 - alpha)).abs() <= POLE_LINE_TOLERANCE
}

/// Q(n, z) = Σ_k Σ_j R_{k,j}(z)G_{k,j}(z^{1/α}e^{i2πn/α}).
pub fn q_branch(ctx: &JumpContext, n: u64, z: Complex64) -> Result<Complex64> {
    let alpha = ctx.alpha();
    if z == zero() {
        return Err(Error::Pole("Q(n, z) is undefined at z = 0".into()));
    }
    if on_pole_lines(alpha, z) {
        return Err(Error::Pole(format!("z = {z} lies on the pole rays")));
    }
    let zeta = cpow(z, 1.0 / alpha) * branch_rotation(alpha, n);
    // the tail bound only needs |s| and Re s of the point fed to the
    // entire factors, s = −ζ
    let p = Point {
        s: -zeta,
        s_alpha: z,
        s_alpha_m1: z / zeta,
    };
    let families = ctx.families();
    ctx.truncated_sum(&p, |k| {
        let r = ctx.r_all(k, z)?;
        let g = ctx.g_all(k, zeta)?;
        Ok((0..families).map(|j| r[j] * g[j]).sum())
    })
}

/// Smallest n in 1..=n_max with |e^{i2πn/α} − e^{iy}| < eps, or `None`.
pub fn branch_search(alpha: f64, y: f64, eps: f64, n_max: u64) -> Result<Option<u64>> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Argument(format!("α = {alpha} must be > 0")));
    }
    if !(eps > 0.0) {
        return Err(Error::Argument(format!("eps = {eps} must be > 0")));
    }
    Ok((1..=n_max).find(|&n| {
        let x = 2.0 * PI * (n as f64 / alpha).fract();
        2.0 * (0.5 * (x - y)).sin().abs() < eps
    }))
}

/// Number of distinct values of e^{i2πn/α} over n = 0..=n_max, merging
/// points closer than `tol`.
pub fn branch_orbit_size(alpha: f64, n_max: u64, tol: f64) -> usize {
    let mut seen: Vec<Complex64> = Vec::new();
    for n in 0..=n_max {
        let w = branch_rotation(alpha, n);
        if seen.iter().all(|v| (v - w).norm() > tol) {
            seen.push(w);
        }
    }
    seen.len()
}

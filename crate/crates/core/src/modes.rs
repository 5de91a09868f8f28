//! Model parameters, the Dirichlet eigensystem of (0, π) and the coupled-root
//! factorization
//!
//! (s^α + κλ + c)(s^α + ϰλ + d) − ab = (s^α + λ̆)(s^α + λ̂).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{AdmissibilityError, Error, Result};
use crate::quad::{UnitRule, uniform};

/// Scalar coefficients of the coupled system
///
/// D^α u − κ u_xx + c u + a v = f,  D^α v − ϰ v_xx + d v + b u = χ,
///
/// with sources switched off after `t0` and flux observed on (t0, t1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub alpha: f64,
    pub kappa: f64,
    pub varkappa: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub t0: f64,
    pub t1: f64,
}

impl ModelParams {
    /// Checks every scalar admissibility inequality. The discriminant
    /// condition over all modes is checked by [`ModelParams::check_discriminant`].
    pub fn validate(&self) -> Result<(), AdmissibilityError> {
        let named = [
            ("alpha", self.alpha),
            ("kappa", self.kappa),
            ("varkappa", self.varkappa),
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("d", self.d),
            ("t0", self.t0),
            ("t1", self.t1),
        ];
        for (name, v) in named {
            if !v.is_finite() {
                return Err(AdmissibilityError::NonFinite(name));
            }
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(AdmissibilityError::Order(self.alpha));
        }
        if !(self.kappa > 0.0 && self.varkappa > 0.0) {
            return Err(AdmissibilityError::Diffusivity {
                kappa: self.kappa,
                varkappa: self.varkappa,
            });
        }
        if !(self.c >= 0.0 && self.d >= 0.0) {
            return Err(AdmissibilityError::Reaction { c: self.c, d: self.d });
        }
        let ab = self.a * self.b;
        let bound = (self.c * self.c).min(self.d * self.d);
        if ab > bound {
            return Err(AdmissibilityError::Coupling { ab, bound });
        }
        if !(self.t0 > 0.0 && self.t1 > self.t0) {
            return Err(AdmissibilityError::Windows {
                t0: self.t0,
                t1: self.t1,
            });
        }
        Ok(())
    }

    /// ((κ−ϰ)λ + c − d)² + 4ab.
    pub fn discriminant(&self, lambda: f64) -> f64 {
        let g = (self.kappa - self.varkappa) * lambda + self.c - self.d;
        g * g + 4.0 * self.a * self.b
    }

    /// Non-negativity of the discriminant at λ = k² for every k ∈ ℕ.
    ///
    /// Only ab < 0 can make it negative. If κ = ϰ the discriminant does not
    /// depend on k. Otherwise it is an upward parabola in λ with minimum at
    /// λ* = (d − c)/(κ − ϰ), so over the integers k it is smallest at one of
    /// the two integers nearest √λ*.
    pub fn check_discriminant(&self) -> Result<(), AdmissibilityError> {
        if self.a * self.b >= 0.0 {
            return Ok(());
        }
        let candidates: Vec<u64> = if self.kappa == self.varkappa {
            vec![1]
        } else {
            let star = (self.d - self.c) / (self.kappa - self.varkappa);
            if star <= 1.0 {
                vec![1]
            } else {
                let r = star.sqrt();
                vec![r.floor().max(1.0) as u64, r.ceil() as u64]
            }
        };
        for k in candidates {
            let lambda = (k as f64).powi(2);
            let value = self.discriminant(lambda);
            if value < 0.0 {
                return Err(AdmissibilityError::Discriminant { k, value });
            }
        }
        Ok(())
    }

    /// Lower root-bound constant c₁ = min{κ, ϰ}.
    pub fn c1(&self) -> f64 {
        self.kappa.min(self.varkappa)
    }

    /// Upper root-bound constant
    /// c₂ = ½[(κ+ϰ) + (c+d)/λ₁ + √((|κ−ϰ| + |c−d|/λ₁)² + 4|ab|/λ₁²)], λ₁ = 1.
    pub fn c2(&self) -> f64 {
        let l1 = 1.0;
        let spread = (self.kappa - self.varkappa).abs() + (self.c - self.d).abs() / l1;
        0.5 * ((self.kappa + self.varkappa)
            + (self.c + self.d) / l1
            + (spread * spread + 4.0 * (self.a * self.b).abs() / (l1 * l1)).sqrt())
    }

    /// The same model with the two components exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            kappa: self.varkappa,
            varkappa: self.kappa,
            a: self.b,
            b: self.a,
            c: self.d,
            d: self.c,
            ..*self
        }
    }
}

/// Eigendata of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    pub k: usize,
    pub lambda: f64,
    pub gamma_trace: f64,
    pub lam_breve: f64,
    pub lam_hat: f64,
    pub theta: f64,
    pub zeta: f64,
    pub multiplicity: u32,
}

impl Mode {
    fn new(p: &ModelParams, k: usize) -> Self {
        let lambda = (k as f64).powi(2);
        let gamma_trace = -(2.0 / PI).sqrt() * k as f64;
        let sum = (p.kappa + p.varkappa) * lambda + p.c + p.d;
        let root_d = p.discriminant(lambda).max(0.0).sqrt();
        let lam_breve = 0.5 * (sum + root_d);
        let product = (p.kappa * lambda + p.c) * (p.varkappa * lambda + p.d) - p.a * p.b;
        let lam_hat = if lam_breve > 0.0 { product / lam_breve } else { 0.0 };

        // ϑ = δ + h, ζ = h − δ with ϑζ = ab; the cancelling one is recovered
        // from the product.
        let ab = p.a * p.b;
        let delta = 0.5 * ((p.varkappa - p.kappa) * lambda + p.d - p.c);
        let h = 0.5 * root_d;
        let (theta, zeta) = if delta >= 0.0 {
            let theta = delta + h;
            (theta, if theta != 0.0 { ab / theta } else { 0.0 })
        } else {
            let zeta = h - delta;
            (ab / zeta, zeta)
        };
        Self {
            k,
            lambda,
            gamma_trace,
            lam_breve,
            lam_hat,
            theta,
            zeta,
            multiplicity: 1,
        }
    }

    /// (s^α + λ̆)(s^α + λ̂) for a given w = s^α.
    pub fn factored_denominator(&self, w: Complex64) -> Complex64 {
        (w + self.lam_breve) * (w + self.lam_hat)
    }
}

/// Per-mode data for k = 1..=K.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeTable {
    pub params: ModelParams,
    pub modes: Vec<Mode>,
    pub c1: f64,
    pub c2: f64,
}

impl ModeTable {
    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    /// Mode with 1-based index `k`.
    pub fn mode(&self, k: usize) -> Result<&Mode> {
        k.checked_sub(1)
            .and_then(|i| self.modes.get(i))
            .ok_or_else(|| Error::Argument(format!("mode {k} outside 1..={}", self.modes.len())))
    }
}

/// Validates `params` and tabulates the first `k_max` modes.
pub fn build_mode_table(params: ModelParams, k_max: usize) -> Result<ModeTable, AdmissibilityError> {
    params.validate()?;
    if k_max == 0 {
        return Err(AdmissibilityError::EmptyTable);
    }
    params.check_discriminant()?;
    let modes = (1..=k_max).map(|k| Mode::new(&params, k)).collect();
    Ok(ModeTable {
        params,
        modes,
        c1: params.c1(),
        c2: params.c2(),
    })
}

/// Coefficients against the orthonormal basis √(2/π) sin(kx), k = 1..=K.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralField {
    pub coeffs: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(k_max: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); k_max],
        }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self {
            coeffs: values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Σ|c_k|², the squared L² norm of the synthesized function.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// k-th orthonormal eigenfunction √(2/π) sin(kx).
pub fn eigenfunction(k: usize, x: f64) -> f64 {
    (2.0 / PI).sqrt() * (k as f64 * x).sin()
}

const PANEL_POINTS: usize = 8;

/// Sampling layout used by [`analyze`]: composite Gauss-Legendre on uniform
/// panels of (0, π).
#[derive(Debug, Clone)]
pub struct AnalysisGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl AnalysisGrid {
    /// Grid with `points` nodes (rounded up to whole panels).
    pub fn new(points: usize) -> Self {
        let panels = points.div_ceil(PANEL_POINTS).max(1);
        let rule = UnitRule::legendre(PANEL_POINTS);
        let mut nodes = Vec::with_capacity(panels * PANEL_POINTS);
        let mut weights = Vec::with_capacity(panels * PANEL_POINTS);
        for (a, b) in uniform(0.0, PI, panels) {
            for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
                nodes.push(a + (b - a) * x);
                weights.push((b - a) * w);
            }
        }
        Self { nodes, weights }
    }

    /// Default resolution for K modes: 16 nodes per mode, at least 64.
    pub fn for_modes(k_max: usize) -> Self {
        Self::new((16 * k_max).max(64))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Smallest node count accepted for K modes.
pub fn required_points(k_max: usize) -> usize {
    8 * k_max
}

/// Fourier coefficients of the samples `values` taken at `grid.nodes`.
pub fn analyze(grid: &AnalysisGrid, values: &[Complex64], k_max: usize) -> Result<SpectralField> {
    if values.len() != grid.len() {
        return Err(Error::Argument(format!(
            "{} samples for a grid of {} nodes",
            values.len(),
            grid.len()
        )));
    }
    let needed = required_points(k_max);
    if grid.len() < needed {
        return Err(Error::Aliasing {
            points: grid.len(),
            modes: k_max,
            needed,
        });
    }
    let coeffs = (1..=k_max)
        .map(|k| {
            grid.nodes
                .iter()
                .zip(&grid.weights)
                .zip(values)
                .map(|((&x, &w), &v)| v * (w * eigenfunction(k, x)))
                .sum()
        })
        .collect();
    Ok(SpectralField { coeffs })
}

/// Convenience wrapper sampling `f` on the default grid for K modes.
pub fn analyze_fn(f: impl Fn(f64) -> f64, k_max: usize) -> Result<SpectralField> {
    let grid = AnalysisGrid::for_modes(k_max);
    let values: Vec<Complex64> = grid.nodes.iter().map(|&x| Complex64::new(f(x), 0.0)).collect();
    analyze(&grid, &values, k_max)
}

/// Σ_k c_k √(2/π) sin(kx) at every x.
pub fn synthesize(field: &SpectralField, x: &[f64]) -> Vec<Complex64> {
    x.iter()
        .map(|&xi| {
            field
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * eigenfunction(i + 1, xi))
                .sum()
        })
        .collect()
}

/// Pairs (k, n), k ≠ n, breaking λ̆_k ≠ λ̆_n, λ̂_k ≠ λ̂_n or λ̂_k ≠ λ̆_n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparationReport {
    /// False when a = 0: the uncoupled problem never needs the condition.
    pub applicable: bool,
    pub tolerance: f64,
    pub violations: Vec<(usize, usize)>,
}

impl SeparationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const SEPARATION_TOLERANCE: f64 = 1e-9;

/// Scans all ordered pairs of distinct modes for root collisions, using a
/// relative equality tolerance.
pub fn check_separation(table: &ModeTable, tolerance: f64) -> SeparationReport {
    let applicable = table.params.a != 0.0;
    let mut violations = Vec::new();
    if applicable {
        let close = |x: f64, y: f64| (x - y).abs() <= tolerance * x.abs().max(y.abs()).max(1.0);
        for m in &table.modes {
            for n in &table.modes {
                if m.k == n.k {
                    continue;
                }
                let hit = (m.k < n.k
                    && (close(m.lam_breve, n.lam_breve) || close(m.lam_hat, n.lam_hat)))
                    || close(m.lam_hat, n.lam_breve);
                if hit && !violations.contains(&(m.k.min(n.k), m.k.max(n.k))) {
                    violations.push((m.k.min(n.k), m.k.max(n.k)));
                }
            }
        }
    }
    SeparationReport {
        applicable,
        tolerance,
        violations,
    }
}

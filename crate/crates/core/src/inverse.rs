//! Identification layer.
//!
//! Two independent pieces live here. The residue checks evaluate the branch
//! function Q(0, ·) around each pole on the rays Arg z = ±π(1−α) and compare
//! the contour residue with the closed-form limit that the uniqueness
//! argument extracts. The reconstruction is plain finite-dimensional least
//! squares: every unknown coefficient is mapped to its boundary flux on the
//! data grid by the forward solver and the stacked system is solved by SVD.

use std::f64::consts::PI;

use log::warn;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forward::{FluxTrace, ModeKernel, SourceSpec};
use crate::laplace::{JumpContext, Pole, PoleKind, q_branch};
use crate::modes::{ModeTable, SEPARATION_TOLERANCE, SpectralField, check_separation};
use crate::specfun::{cpow, truncated_monomial_transform};

/// Trapezoid nodes on each residue circle.
pub const RESIDUE_NODES: usize = 128;
/// Fraction of the clearance used as circle radius.
pub const RADIUS_FACTOR: f64 = 0.4;
/// Denominator floor for relative errors of vanishing residues.
pub const RESIDUE_FLOOR: f64 = 1e-12;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Contour residue against its closed form at one pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub mode: usize,
    pub pole: Complex64,
    pub contour_value: Complex64,
    pub closed_form: Complex64,
    pub rel_error: f64,
}

impl ResidueReport {
    fn new(mode: usize, pole: Complex64, contour_value: Complex64, closed_form: Complex64) -> Self {
        let rel_error = (contour_value - closed_form).norm() / closed_form.norm().max(RESIDUE_FLOOR);
        Self {
            mode,
            pole,
            contour_value,
            closed_form,
            rel_error,
        }
    }
}

/// Distance from `pole` to the nearest other singularity of Q(0, ·): the
/// remaining poles, all mirror poles, and the cut of z^{1/α} along the
/// negative axis (which also covers the origin).
fn clearance(ctx: &JumpContext, pole: &Pole) -> f64 {
    let z = pole.z;
    let mut best = z.norm() * (PI * ctx.alpha()).sin().min(1.0);
    if z.re >= 0.0 {
        best = best.min(z.norm());
    }
    for p in ctx.poles() {
        if p.z != z {
            best = best.min((p.z - z).norm());
        }
        best = best.min((p.z.conj() - z).norm());
    }
    best
}

/// (1/2πi)∮ Q(0,z)(z−z_p)^{order−1} dz on the circle |z − z_p| = radius.
fn contour_moment(ctx: &JumpContext, center: Complex64, radius: f64, order: i32) -> Result<Complex64> {
    let n = RESIDUE_NODES;
    let mut sum = zero();
    for j in 0..n {
        let offset = Complex64::from_polar(radius, 2.0 * PI * j as f64 / n as f64);
        sum += q_branch(ctx, 0, center + offset)? * offset.powi(order);
    }
    Ok(sum / n as f64)
}

fn checked_radius(ctx: &JumpContext, pole: &Pole, radius: Option<f64>) -> Result<f64> {
    let room = clearance(ctx, pole);
    let suggested = RADIUS_FACTOR * room;
    match radius {
        None => Ok(suggested),
        Some(r) if r > 0.0 && r < room => Ok(r),
        Some(r) => Err(Error::Geometry {
            message: format!(
                "circle of radius {r} around the mode-{} pole reaches another singularity at distance {room}",
                pole.k
            ),
            suggested,
        }),
    }
}

fn find_pole(ctx: &JumpContext, n: usize, kinds: &[PoleKind]) -> Result<Vec<Pole>> {
    ctx.table.mode(n)?;
    Ok(ctx
        .poles()
        .iter()
        .filter(|p| p.k == n && kinds.contains(&p.kind))
        .copied()
        .collect())
}

/// Residue of Q(0, ·) at z_n = −e^{−iπα}(κλ_n + c) for the uncoupled problem.
pub fn residue_ip1(ctx: &JumpContext, n: usize) -> Result<ResidueReport> {
    residue_ip1_radius(ctx, n, None)
}

/// As [`residue_ip1`] with an explicit circle radius.
pub fn residue_ip1_radius(ctx: &JumpContext, n: usize, radius: Option<f64>) -> Result<ResidueReport> {
    if ctx.is_coupled() {
        return Err(Error::NotApplicable("the uncoupled residue needs a = 0".into()));
    }
    let pole = find_pole(ctx, n, &[PoleKind::Simple])?[0];
    let r = checked_radius(ctx, &pole, radius)?;
    let contour = contour_moment(ctx, pole.z, r, 1)?;
    let g = ctx.g_all(n, cpow(pole.z, 1.0 / ctx.alpha()))?;
    let closed = Complex64::from_polar(1.0, -PI * ctx.alpha()) * g[0] + pole.z * g[1];
    Ok(ResidueReport::new(n, pole.z, contour, closed))
}

/// The scalar relations tying the pole residues of mode n to its data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ip2Relations {
    /// rows (ϰλ_n+d−λ̆_n, −a) and (ϰλ_n+d−λ̂_n, −a)
    pub matrix: [[f64; 2]; 2],
    /// a(λ̆_n − λ̂_n)
    pub determinant: f64,
    /// (ϰλ_n+d−λ)(F_n(−z)+λφ_n/z) − a(X_n(−z)+λψ_n/z) at z = z_p^{1/α},
    /// recovered from each contour residue
    pub extracted: Vec<Complex64>,
    /// the same expressions evaluated from the known coefficients
    pub direct: Vec<Complex64>,
    pub violation: f64,
}

/// Residues of the coupled problem for mode n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ip2Residues {
    /// at z_n = −e^{−iπα}λ̆_n; for coalescent roots the second-order coefficient
    pub breve: ResidueReport,
    /// at ẑ_n = −e^{−iπα}λ̂_n; absent for coalescent roots
    pub hat: Option<ResidueReport>,
    pub coalescent: bool,
    pub relations: Ip2Relations,
}

/// (ϰλ+d−root)(F_n(−z)+root·φ_n/z) − a(X_n(−z)+root·ψ_n/z), from the raw data.
fn relation_lhs(ctx: &JumpContext, n: usize, root: f64, z: Complex64) -> Complex64 {
    let p = &ctx.table.params;
    let m = &ctx.table.modes[n - 1];
    let t0 = ctx.src.t0;
    let transform = |coeffs: &[Complex64]| -> Complex64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * truncated_monomial_transform(j as u32, t0, -z))
            .sum()
    };
    let f = transform(&ctx.src.f_coeffs[n - 1]);
    let x = transform(&ctx.src.chi_coeffs[n - 1]);
    let shift = p.varkappa * m.lambda + p.d - root;
    shift * (f + root * ctx.phi.coeffs[n - 1] / z) - p.a * (x + root * ctx.psi.coeffs[n - 1] / z)
}

/// [(ϰλ+d−root)(G1 − root·G2) − a(G3 − root·G4)] at z = z_p^{1/α}.
fn pole_bracket(ctx: &JumpContext, pole: &Pole) -> Result<Complex64> {
    let p = &ctx.table.params;
    let m = &ctx.table.modes[pole.k - 1];
    let g = ctx.g_all(pole.k, cpow(pole.z, 1.0 / ctx.alpha()))?;
    let root = pole.root;
    Ok((p.varkappa * m.lambda + p.d - root) * (g[0] - root * g[1]) - p.a * (g[2] - root * g[3]))
}

/// Residues at both poles of mode n for the coupled problem and the
/// relations they imply. Coalescent roots give a double pole, handled by the
/// second-order contour moment.
pub fn residue_ip2(ctx: &JumpContext, n: usize) -> Result<Ip2Residues> {
    if !ctx.is_coupled() {
        return Err(Error::NotApplicable("the coupled residues need a != 0".into()));
    }
    let sep = check_separation(&ctx.table, SEPARATION_TOLERANCE);
    if let Some(&(k, m)) = sep.violations.first() {
        return Err(Error::Separation { k, n: m });
    }
    let p = &ctx.table.params;
    let mode = &ctx.table.modes[n - 1];
    let e = Complex64::from_polar(1.0, PI * p.alpha);
    let gamma = mode.gamma_trace;
    let alpha = p.alpha;

    let matrix = [
        [p.varkappa * mode.lambda + p.d - mode.lam_breve, -p.a],
        [p.varkappa * mode.lambda + p.d - mode.lam_hat, -p.a],
    ];
    let determinant = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];

    let poles = find_pole(ctx, n, &[PoleKind::Breve, PoleKind::Hat, PoleKind::Double])?;
    let mut reports = Vec::new();
    let mut extracted = Vec::new();
    let mut direct = Vec::new();
    for pole in &poles {
        let r = checked_radius(ctx, pole, None)?;
        let bracket = pole_bracket(ctx, pole)?;
        let (contour, factor) = if pole.kind == PoleKind::Double {
            (contour_moment(ctx, pole.z, r, 2)?, e * e)
        } else {
            let other = if pole.kind == PoleKind::Breve {
                mode.lam_hat
            } else {
                mode.lam_breve
            };
            (contour_moment(ctx, pole.z, r, 1)?, e * (other - pole.root))
        };
        reports.push(ResidueReport::new(n, pole.z, contour, bracket / factor));
        extracted.push(contour * factor / gamma);
        direct.push(relation_lhs(ctx, n, pole.root, cpow(pole.z, 1.0 / alpha)));
    }
    let violation = extracted
        .iter()
        .zip(&direct)
        .map(|(x, d)| (x - d).norm() / d.norm().max(RESIDUE_FLOOR))
        .fold(0.0, f64::max);
    let coalescent = poles[0].kind == PoleKind::Double;
    let mut reports = reports.into_iter();
    Ok(Ip2Residues {
        breve: reports.next().expect("mode has a pole"),
        hat: reports.next(),
        coalescent,
        relations: Ip2Relations {
            matrix,
            determinant,
            extracted,
            direct,
            violation,
        },
    })
}

/// Which identification problem the unknowns belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Problem {
    /// a = 0: unknowns φ and f
    Ip1,
    /// a ≠ 0: unknowns φ, ψ, f and χ
    Ip2,
}

/// Which coefficients are unknown, per mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unknowns {
    pub problem: Problem,
    pub initial: bool,
    /// monomial degree M of the source basis; `None` when sources are known zero
    pub source_degree: Option<usize>,
}

impl Unknowns {
    pub fn full(problem: Problem, degree: usize) -> Self {
        Self {
            problem,
            initial: true,
            source_degree: Some(degree),
        }
    }

    fn per_component(&self) -> usize {
        usize::from(self.initial) + self.source_degree.map_or(0, |m| m + 1)
    }

    fn components(&self) -> usize {
        match self.problem {
            Problem::Ip1 => 1,
            Problem::Ip2 => 2,
        }
    }

    pub fn count(&self, k_max: usize) -> usize {
        k_max * self.components() * self.per_component()
    }
}

/// Weighted design matrix of the linear map unknowns → boundary flux.
#[derive(Debug, Clone)]
pub struct Design {
    pub unknowns: Unknowns,
    pub time_grid: Vec<f64>,
    /// √ of the trapezoid weights of the data grid
    pub row_weights: Vec<f64>,
    /// rows already scaled by `row_weights`
    pub matrix: DMatrix<Complex64>,
    pub table: ModeTable,
}

fn trapezoid_sqrt_weights(grid: &[f64]) -> Vec<f64> {
    let n = grid.len();
    if n == 1 {
        return vec![1.0];
    }
    (0..n)
        .map(|i| {
            let left = if i > 0 { grid[i] - grid[i - 1] } else { 0.0 };
            let right = if i + 1 < n { grid[i + 1] - grid[i] } else { 0.0 };
            (0.5 * (left + right)).sqrt()
        })
        .collect()
}

fn check_problem(table: &ModeTable, problem: Problem) -> Result<()> {
    let a = table.params.a;
    match problem {
        Problem::Ip1 if a != 0.0 => Err(Error::NotApplicable(format!(
            "the uncoupled problem needs a = 0, got a = {a}"
        ))),
        Problem::Ip2 if a == 0.0 => Err(Error::NotApplicable(
            "the coupled problem needs a != 0".into(),
        )),
        Problem::Ip2 => {
            let sep = check_separation(table, SEPARATION_TOLERANCE);
            match sep.violations.first() {
                Some(&(k, n)) => Err(Error::Separation { k, n }),
                None => Ok(()),
            }
        }
        Problem::Ip1 => Ok(()),
    }
}

/// Builds the weighted design matrix on `time_grid`, one forward kernel
/// evaluation per (mode, time) shared by all columns of that mode.
pub fn build_design(table: &ModeTable, time_grid: &[f64], unknowns: Unknowns) -> Result<Design> {
    check_problem(table, unknowns.problem)?;
    let p = &table.params;
    if time_grid.is_empty() {
        return Err(Error::Argument("empty data grid".into()));
    }
    if time_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Argument("data grid must be strictly increasing".into()));
    }
    if time_grid.iter().any(|t| !(*t > p.t0 && *t <= p.t1)) {
        return Err(Error::Argument(format!(
            "data grid must lie in the observation window ({}, {}]",
            p.t0, p.t1
        )));
    }
    let k_max = table.len();
    let rows = time_grid.len();
    let cols = unknowns.count(k_max);
    let row_weights = trapezoid_sqrt_weights(time_grid);
    let mut matrix = DMatrix::<Complex64>::zeros(rows, cols);
    let degree = unknowns.source_degree.unwrap_or(0);
    let per = unknowns.per_component();
    for k in 1..=k_max {
        let kernel = ModeKernel::new(table, k)?;
        let gamma = table.modes[k - 1].gamma_trace;
        let base = (k - 1) * unknowns.components() * per;
        for (i, &t) in time_grid.iter().enumerate() {
            let r = kernel.response(Complex64::new(t, 0.0))?;
            let moments = unknowns.source_degree.map(|_| r.moments(degree));
            let w = row_weights[i] * gamma;
            // u-equation unknowns
            let mut col = base;
            if unknowns.initial {
                matrix[(i, col)] = w * (r.e1 + kernel.theta * r.q);
                col += 1;
            }
            if let Some(mo) = &moments {
                for m in 0..=degree {
                    matrix[(i, col)] = w * (mo.breve[m] + kernel.theta * mo.w[m]);
                    col += 1;
                }
            }
            // v-equation unknowns enter the flux through the coupling only
            if unknowns.problem == Problem::Ip2 {
                if unknowns.initial {
                    matrix[(i, col)] = w * (-kernel.a * r.q);
                    col += 1;
                }
                if let Some(mo) = &moments {
                    for m in 0..=degree {
                        matrix[(i, col)] = w * (-kernel.a * mo.w[m]);
                        col += 1;
                    }
                }
            }
        }
    }
    Ok(Design {
        unknowns,
        time_grid: time_grid.to_vec(),
        row_weights,
        matrix,
        table: table.clone(),
    })
}

/// Estimated data and fit quality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconstructionResult {
    pub phi_hat: SpectralField,
    pub psi_hat: SpectralField,
    pub f_hat: SourceSpec,
    pub chi_hat: SourceSpec,
    /// trapezoid-weighted L² misfit of the fitted flux
    pub residual_norm: f64,
    /// σ_max/σ_min of the weighted design matrix
    pub condition_number: f64,
    pub regularization: f64,
    /// numerical rank used by the solve
    pub rank: usize,
}

/// One point of an L-curve sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LCurvePoint {
    pub mu: f64,
    pub residual_norm: f64,
    pub solution_norm: f64,
}

/// SVD of the column-equilibrated design matrix, reusable across μ.
pub struct Factorization {
    design: Design,
    scales: Vec<f64>,
    u: DMatrix<Complex64>,
    v_t: DMatrix<Complex64>,
    sigma: Vec<f64>,
    raw_sigma: (f64, f64),
}

impl Factorization {
    pub fn new(design: Design) -> Result<Self> {
        let raw = design.matrix.clone().singular_values();
        let raw_sigma = (raw.max(), raw.min());
        let mut scaled = design.matrix.clone();
        let scales: Vec<f64> = (0..scaled.ncols())
            .map(|j| {
                let s = scaled.column(j).norm();
                if s > 0.0 { s } else { 1.0 }
            })
            .collect();
        for (j, s) in scales.iter().enumerate() {
            scaled.column_mut(j).unscale_mut(*s);
        }
        let svd = scaled.svd(true, true);
        let u = svd
            .u
            .ok_or_else(|| Error::LinearAlgebra("SVD returned no left vectors".into()))?;
        let v_t = svd
            .v_t
            .ok_or_else(|| Error::LinearAlgebra("SVD returned no right vectors".into()))?;
        Ok(Self {
            design,
            scales,
            u,
            v_t,
            sigma: svd.singular_values.iter().copied().collect(),
            raw_sigma,
        })
    }

    pub fn design(&self) -> &Design {
        &self.design
    }

    /// Extreme singular values (σ_max, σ_min) of the weighted design matrix.
    pub fn extreme_singular_values(&self) -> (f64, f64) {
        self.raw_sigma
    }

    pub fn condition_number(&self) -> f64 {
        let (hi, lo) = self.raw_sigma;
        if lo > 0.0 { hi / lo } else { f64::INFINITY }
    }

    fn weighted_rhs(&self, data: &FluxTrace) -> Result<DVector<Complex64>> {
        let d = &self.design;
        if data.time_grid.len() != d.time_grid.len()
            || data.time_grid.iter().zip(&d.time_grid).any(|(a, b)| a != b)
        {
            return Err(Error::Argument("data grid differs from the design grid".into()));
        }
        if data.values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Argument("flux data must be finite".into()));
        }
        Ok(DVector::from_iterator(
            data.values.len(),
            data.values.iter().zip(&d.row_weights).map(|(v, w)| v * *w),
        ))
    }

    /// Minimizer of ‖Ax − b‖² + μ‖Dx‖² with D the column norms, so μ acts on
    /// column-normalized coefficients. μ = 0 truncates singular values below
    /// the rounding floor.
    fn solve_scaled(&self, rhs: &DVector<Complex64>, mu: f64) -> (DVector<Complex64>, usize) {
        let n = self.sigma.len();
        let s_max = self.sigma.iter().copied().fold(0.0, f64::max);
        let floor = s_max * f64::EPSILON * self.design.matrix.nrows().max(self.design.matrix.ncols()) as f64;
        let uh_b = self.u.adjoint() * rhs;
        let mut coef = DVector::<Complex64>::zeros(n);
        let mut rank = 0;
        for i in 0..n {
            let s = self.sigma[i];
            let filter = if mu > 0.0 {
                s / (s * s + mu)
            } else if s > floor {
                1.0 / s
            } else {
                0.0
            };
            if s > floor {
                rank += 1;
            }
            coef[i] = uh_b[i] * filter;
        }
        let mut x = self.v_t.adjoint() * coef;
        for (j, s) in self.scales.iter().enumerate() {
            x[j] /= *s;
        }
        (x, rank)
    }

    fn misfit(&self, x: &DVector<Complex64>, rhs: &DVector<Complex64>) -> f64 {
        (&self.design.matrix * x - rhs).norm()
    }

    pub fn solve(&self, data: &FluxTrace, mu: f64) -> Result<ReconstructionResult> {
        if !(mu >= 0.0 && mu.is_finite()) {
            return Err(Error::Argument(format!("regularization {mu} must be finite and >= 0")));
        }
        let rhs = self.weighted_rhs(data)?;
        let (x, rank) = self.solve_scaled(&rhs, mu);
        let cols = self.design.matrix.ncols();
        if mu == 0.0 && rank < cols {
            warn!("design matrix is rank deficient: numerical rank {rank} of {cols}");
        }
        let residual_norm = self.misfit(&x, &rhs);
        let (phi_hat, psi_hat, f_hat, chi_hat) = unpack(&self.design, &x);
        Ok(ReconstructionResult {
            phi_hat,
            psi_hat,
            f_hat,
            chi_hat,
            residual_norm,
            condition_number: self.condition_number(),
            regularization: mu,
            rank,
        })
    }

    /// Misfit and solution norm for each μ.
    pub fn l_curve(&self, data: &FluxTrace, mus: &[f64]) -> Result<Vec<LCurvePoint>> {
        let rhs = self.weighted_rhs(data)?;
        Ok(mus
            .iter()
            .map(|&mu| {
                let (x, _) = self.solve_scaled(&rhs, mu);
                LCurvePoint {
                    mu,
                    residual_norm: self.misfit(&x, &rhs),
                    solution_norm: x.norm(),
                }
            })
            .collect())
    }
}

fn unpack(
    design: &Design,
    x: &DVector<Complex64>,
) -> (SpectralField, SpectralField, SourceSpec, SourceSpec) {
    let k_max = design.table.len();
    let un = design.unknowns;
    let degree = un.source_degree.unwrap_or(0);
    let mut phi = SpectralField::zeros(k_max);
    let mut psi = SpectralField::zeros(k_max);
    let mut f = SourceSpec::zeros(k_max, degree, design.table.params.t0);
    let mut chi = SourceSpec::zeros(k_max, degree, design.table.params.t0);
    let mut col = 0;
    for k in 0..k_max {
        for comp in 0..un.components() {
            let (field, src) = if comp == 0 {
                (&mut phi, &mut f)
            } else {
                (&mut psi, &mut chi)
            };
            let src_rows = if comp == 0 {
                &mut src.f_coeffs
            } else {
                &mut src.chi_coeffs
            };
            if un.initial {
                field.coeffs[k] = x[col];
                col += 1;
            }
            if un.source_degree.is_some() {
                for slot in src_rows[k].iter_mut().take(degree + 1) {
                    *slot = x[col];
                    col += 1;
                }
            }
        }
    }
    (phi, psi, f, chi)
}

/// Least-squares estimate of the unknown data of `problem` from boundary flux
/// samples, with monomial source basis of degree `degree`.
pub fn lsq_reconstruct(
    data: &FluxTrace,
    table: &ModeTable,
    degree: usize,
    mu: f64,
    problem: Problem,
) -> Result<ReconstructionResult> {
    let design = build_design(table, &data.time_grid, Unknowns::full(problem, degree))?;
    Factorization::new(design)?.solve(data, mu)
}

/// One row of the exploratory conditioning table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditioningRow {
    pub alpha: f64,
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub condition_number: f64,
}

/// Smallest singular value and condition number of the design matrix for
/// each α, all other parameters fixed. Exploratory output: no claim links
/// these numbers to rationality of α.
pub fn conditioning_probe(
    alphas: &[f64],
    table: &ModeTable,
    unknowns: Unknowns,
    time_grid: &[f64],
) -> Result<Vec<ConditioningRow>> {
    alphas
        .iter()
        .map(|&alpha| {
            let mut params = table.params;
            params.alpha = alpha;
            let t = crate::modes::build_mode_table(params, table.len())?;
            let design = build_design(&t, time_grid, unknowns)?;
            let sv = design.matrix.clone().singular_values();
            let (hi, lo) = (sv.max(), sv.min());
            Ok(ConditioningRow {
                alpha,
                sigma_min: lo,
                sigma_max: hi,
                condition_number: if lo > 0.0 { hi / lo } else { f64::INFINITY },
            })
        })
        .collect()
}

use std::path::{Path, PathBuf};

use fracinv_core::forward::{boundary_flux, solve};
use fracinv_core::inverse::{
    ConditioningRow, Factorization, Ip2Residues, LCurvePoint, Problem, Unknowns, build_design,
    conditioning_probe, residue_ip1, residue_ip2,
};
use fracinv_core::laplace::{flux_transform, jump};
use fracinv_core::modes::{SEPARATION_TOLERANCE, SeparationReport, check_separation, synthesize};
use fracinv_core::specfun::{PrabhakarParams, laplace_identity_residual, prabhakar};
use fracinv_core::{Error, FluxTrace, JumpContext, ModelParams, ReconstructionResult, ResidueReport};
use log::info;
use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::output::{Table, complex_header, json, push_complex, read_flux, write_atomic};

#[derive(Debug)]
pub enum Failure {
    Config(String),
    Numerical(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Config(_) => 2,
            Failure::Numerical(_) => 3,
            Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Config(m) => write!(f, "config error: {m}"),
            Failure::Numerical(m) => write!(f, "numerical failure: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Admissibility(_) | Error::Argument(_) | Error::Separation { .. } | Error::NotApplicable(_) => {
                Failure::Config(e.to_string())
            }
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Flags shared by every command.
pub struct Run {
    pub out: PathBuf,
    pub seed: Option<u64>,
    pub quiet: bool,
}

impl Run {
    fn write(&self, name: &str, bytes: &[u8]) -> Result<(), Failure> {
        let path = write_atomic(&self.out, name, bytes)?;
        self.say(&format!("wrote {}", path.display()));
        Ok(())
    }

    fn say(&self, line: &str) {
        if !self.quiet {
            println!("{line}");
        }
    }
}

fn load(path: &Path) -> Result<(ExperimentConfig, fracinv_core::ModeTable), Failure> {
    let cfg = ExperimentConfig::load(path).map_err(Failure::Config)?;
    let table = cfg.table().map_err(Failure::Config)?;
    Ok((cfg, table))
}

fn mode_names(prefix: &str, k_max: usize) -> Vec<String> {
    (1..=k_max).map(|k| format!("{prefix}_{k}")).collect()
}

/// Adds N(0, (noise·rms h)²) to the real part of every flux sample.
fn add_noise(flux: &mut FluxTrace, noise: f64, seed: u64) {
    if noise == 0.0 || flux.values.is_empty() {
        return;
    }
    let rms = (flux.values.iter().map(|h| h.norm_sqr()).sum::<f64>() / flux.values.len() as f64).sqrt();
    if rms == 0.0 {
        return;
    }
    let dist = Normal::new(0.0, noise * rms).expect("finite sigma");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for h in &mut flux.values {
        h.re += dist.sample(&mut rng);
    }
}

pub fn forward(run: &Run, config: &Path) -> Result<(), Failure> {
    let (cfg, table) = load(config)?;
    let traj = solve(&table, &cfg.phi, &cfg.psi, &cfg.src, &cfg.time_grid)?;

    let mut names = mode_names("u", cfg.k_max);
    names.extend(mode_names("v", cfg.k_max));
    let mut state = Table::new(&complex_header(&["t"], &names));
    for (i, &t) in traj.time_grid.iter().enumerate() {
        let mut row = vec![t];
        for modes in [&traj.u_modes, &traj.v_modes] {
            for m in modes.iter() {
                push_complex(&mut row, m[i]);
            }
        }
        state.row(&row);
    }
    run.write("state.csv", &state.into_bytes())?;

    if let Some(x) = &cfg.x_grid {
        let mut field = Table::new(&complex_header(&["t", "x"], &["u".into(), "v".into()]));
        for (i, &t) in traj.time_grid.iter().enumerate() {
            let slice = |modes: &Vec<Vec<Complex64>>| fracinv_core::SpectralField {
                coeffs: modes.iter().map(|m| m[i]).collect(),
            };
            let u = synthesize(&slice(&traj.u_modes), x);
            let v = synthesize(&slice(&traj.v_modes), x);
            for (j, &xj) in x.iter().enumerate() {
                let mut row = vec![t, xj];
                push_complex(&mut row, u[j]);
                push_complex(&mut row, v[j]);
                field.row(&row);
            }
        }
        run.write("field.csv", &field.into_bytes())?;
    }

    let mut flux = boundary_flux(&traj, &table);
    add_noise(&mut flux, cfg.noise, run.seed.unwrap_or(cfg.seed));
    let mut out = Table::new(&complex_header(&["t"], &["h".into()]));
    for (t, h) in flux.time_grid.iter().zip(&flux.values) {
        out.row(&[*t, h.re, h.im]);
    }
    run.write("flux.csv", &out.into_bytes())?;
    info!("truncation constant c0 = {:e}", traj.c0);
    Ok(())
}

fn scan_table(points: impl Iterator<Item = (Complex64, Complex64)>) -> Vec<u8> {
    let mut t = Table::new(&complex_header(&[], &["s".into(), "value".into()]));
    for (s, v) in points {
        t.row(&[s.re, s.im, v.re, v.im]);
    }
    t.into_bytes()
}

pub fn laplace_scan(run: &Run, config: &Path) -> Result<(), Failure> {
    let (cfg, table) = load(config)?;
    let ctx = JumpContext::new(&table, &cfg.phi, &cfg.psi, &cfg.src)?;
    let values = cfg
        .task
        .s_grid
        .iter()
        .map(|&s| flux_transform(&ctx, s).map(|v| (s, v)))
        .collect::<Result<Vec<_>, _>>()?;
    run.write("transforms.csv", &scan_table(values.into_iter()))
}

pub fn jump_scan(run: &Run, config: &Path) -> Result<(), Failure> {
    let (cfg, table) = load(config)?;
    let ctx = JumpContext::new(&table, &cfg.phi, &cfg.psi, &cfg.src)?;
    let values = cfg
        .task
        .rho_grid
        .iter()
        .map(|&rho| jump(&ctx, rho).map(|v| (Complex64::new(rho, 0.0), v)))
        .collect::<Result<Vec<_>, _>>()?;
    run.write("jump.csv", &scan_table(values.into_iter()))
}

#[derive(Serialize)]
struct ResidueFile {
    problem: Problem,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    ip1: Vec<ResidueReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    ip2: Vec<Ip2Residues>,
}

pub fn residues(run: &Run, config: &Path) -> Result<(), Failure> {
    let (cfg, table) = load(config)?;
    let ctx = JumpContext::new(&table, &cfg.phi, &cfg.psi, &cfg.src)?;
    let mut file = ResidueFile {
        problem: if ctx.is_coupled() { Problem::Ip2 } else { Problem::Ip1 },
        ip1: Vec::new(),
        ip2: Vec::new(),
    };
    for &n in &cfg.task.modes {
        if ctx.is_coupled() {
            let r = residue_ip2(&ctx, n)?;
            run.say(&format!(
                "mode {n}: rel err {:.3e}, relation violation {:.3e}",
                r.breve.rel_error, r.relations.violation
            ));
            file.ip2.push(r);
        } else {
            let r = residue_ip1(&ctx, n)?;
            run.say(&format!("mode {n}: rel err {:.3e}", r.rel_error));
            file.ip1.push(r);
        }
    }
    run.write("residues.json", &json(&file))
}

#[derive(Serialize)]
struct Reference {
    /// max |estimate − generating coefficient|
    max_abs_error: f64,
    /// the same divided by the largest generating coefficient
    relative_error: f64,
}

#[derive(Serialize)]
struct InvertFile {
    problem: Problem,
    samples: usize,
    unknowns: usize,
    result: ReconstructionResult,
    reference: Option<Reference>,
    l_curve: Vec<LCurvePoint>,
    conditioning: Vec<ConditioningRow>,
}

fn unknowns_of(problem: Problem, cfg: &ExperimentConfig, r: &ReconstructionResult) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut est: Vec<Complex64> = r.phi_hat.coeffs.clone();
    est.extend(r.f_hat.f_coeffs.iter().flatten());
    let mut truth: Vec<Complex64> = cfg.phi.coeffs.clone();
    truth.extend(cfg.src.f_coeffs.iter().flatten());
    if problem == Problem::Ip2 {
        est.extend(&r.psi_hat.coeffs);
        est.extend(r.chi_hat.chi_coeffs.iter().flatten());
        truth.extend(&cfg.psi.coeffs);
        truth.extend(cfg.src.chi_coeffs.iter().flatten());
    }
    (est, truth)
}

pub fn invert(run: &Run, config: &Path, data: &Path) -> Result<(), Failure> {
    let (cfg, table) = load(config)?;
    let (time_grid, values) = read_flux(data).map_err(Failure::Config)?;
    let trace = FluxTrace { time_grid, values };
    let unknowns = Unknowns::full(cfg.task.problem, cfg.degree);
    let design = build_design(&table, &trace.time_grid, unknowns)?;
    let fac = Factorization::new(design)?;
    let result = fac.solve(&trace, cfg.task.mu)?;

    let (est, truth) = unknowns_of(cfg.task.problem, &cfg, &result);
    let scale = truth.iter().map(|x| x.norm()).fold(0.0, f64::max);
    let reference = (scale > 0.0).then(|| {
        let max_abs_error = est.iter().zip(&truth).map(|(e, t)| (e - t).norm()).fold(0.0, f64::max);
        Reference {
            max_abs_error,
            relative_error: max_abs_error / scale,
        }
    });
    let l_curve = fac.l_curve(&trace, &cfg.task.mu_sweep)?;
    let conditioning = if cfg.task.probe_alphas.is_empty() {
        Vec::new()
    } else {
        conditioning_probe(&cfg.task.probe_alphas, &table, unknowns, &trace.time_grid)?
    };
    run.say(&format!(
        "misfit {:.3e}, condition number {:.3e}, rank {}",
        result.residual_norm, result.condition_number, result.rank
    ));
    if let Some(r) = &reference {
        run.say(&format!("relative coefficient error vs config {:.3e}", r.relative_error));
    }
    let file = InvertFile {
        problem: cfg.task.problem,
        samples: trace.time_grid.len(),
        unknowns: unknowns.count(cfg.k_max),
        result,
        reference,
        l_curve,
        conditioning,
    };
    run.write("result.json", &json(&file))
}

#[derive(Serialize)]
struct ValidateFile {
    params: ModelParams,
    modes: usize,
    c1: f64,
    c2: f64,
    separation: SeparationReport,
}

pub fn validate(run: &Run, config: &Path) -> Result<(), Failure> {
    let (cfg, table) = load(config)?;
    let separation = check_separation(&table, SEPARATION_TOLERANCE);
    run.say(&format!("admissible for K = {} (c1 = {}, c2 = {})", cfg.k_max, table.c1, table.c2));
    if !separation.applicable {
        run.say("separation condition: not applicable (a = 0)");
    } else if separation.holds() {
        run.say("separation condition: holds up to K");
    } else {
        run.say(&format!("separation condition: violated by {:?}", separation.violations));
    }
    let file = ValidateFile {
        params: cfg.model,
        modes: cfg.k_max,
        c1: table.c1,
        c2: table.c2,
        separation,
    };
    run.write("validate.json", &json(&file))
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    cases: usize,
    worst: f64,
    tolerance: f64,
    pass: bool,
}

fn check(name: &'static str, tolerance: f64, errors: Vec<f64>) -> Check {
    let worst = errors.iter().copied().fold(0.0, f64::max);
    Check {
        name,
        cases: errors.len(),
        worst,
        tolerance,
        pass: errors.iter().all(|e| *e <= tolerance),
    }
}

fn rel(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm()
}

fn specfun_suite() -> Result<Vec<Check>, fracinv_core::SpecfunError> {
    let mut checks = Vec::new();

    let p = PrabhakarParams::new(1.0, 1.0, 1.0)?;
    let mut errs = Vec::new();
    for j in 0..20 {
        let z = Complex64::from_polar(0.25 + 0.2 * j as f64, 0.7 * j as f64);
        errs.push(rel(prabhakar(p, z)?, z.exp()));
    }
    checks.push(check("exponential", 1e-10, errs));

    let p = PrabhakarParams::ml(0.5, 1.0)?;
    let mut errs = Vec::new();
    for i in 1..=50 {
        let x = i as f64 / 10.0;
        let want = statrs::function::erf::erfc(x) * (x * x).exp();
        errs.push(rel(prabhakar(p, Complex64::new(-x, 0.0))?, Complex64::new(want, 0.0)));
    }
    checks.push(check("half_order_erfc", 1e-8, errs));

    let mut errs = Vec::new();
    for beta in [0.5, 1.0, 1.5, 2.5] {
        let p = PrabhakarParams::new(0.6, beta, 1.0)?;
        let want = 1.0 / statrs::function::gamma::gamma(beta);
        errs.push((prabhakar(p, Complex64::new(0.0, 0.0))?.re - want).abs() / want);
    }
    checks.push(check("value_at_zero", 1e-14, errs));

    let mut errs = Vec::new();
    for alpha in [0.3, 0.6, 0.9] {
        for z in [Complex64::new(-0.5, 0.1), Complex64::new(-3.0, 0.0), Complex64::new(-7.0, -2.0)] {
            let h = 1e-4 * z.norm().max(1.0);
            for (beta, dbeta) in [(1.0, alpha + 1.0), (alpha, 2.0 * alpha)] {
                let f = PrabhakarParams::ml(alpha, beta)?;
                let d = (prabhakar(f, z - 2.0 * h)? - 8.0 * prabhakar(f, z - h)? + 8.0 * prabhakar(f, z + h)?
                    - prabhakar(f, z + 2.0 * h)?)
                    / (12.0 * h);
                let want = prabhakar(PrabhakarParams::new(alpha, dbeta, 2.0)?, z)?;
                errs.push(rel(d, want));
            }
        }
    }
    checks.push(check("derivative_recurrences", 1e-6, errs));

    let mut errs = Vec::new();
    for alpha in [0.3, 0.6, 0.9] {
        for (beta, gamma) in [(1.0, 1.0), (alpha, 1.0), (2.0 * alpha, 2.0)] {
            for lambda in [0.5, 2.0, 5.0] {
                let p = PrabhakarParams::new(alpha, beta, gamma)?;
                for s in [Complex64::new(1.0, 0.0), Complex64::new(2.0, 1.0)] {
                    errs.push(laplace_identity_residual(p, lambda, s, 60.0)?);
                }
            }
        }
    }
    checks.push(check("laplace_identity", 1e-6, errs));
    Ok(checks)
}

pub fn specfun_check(run: &Run) -> Result<(), Failure> {
    let checks = specfun_suite().map_err(|e| Failure::Numerical(e.to_string()))?;
    for c in &checks {
        run.say(&format!(
            "{} {:<24} worst {:.3e} (tol {:.0e}, {} cases)",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.worst,
            c.tolerance,
            c.cases
        ));
    }
    run.write("specfun_check.json", &json(&checks))?;
    if let Some(c) = checks.iter().find(|c| !c.pass) {
        return Err(Failure::Numerical(format!("identity `{}` missed its tolerance", c.name)));
    }
    Ok(())
}

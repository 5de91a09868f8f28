//! Flat `section.key = value` experiment files.
//!
//! Blank lines and lines starting with `#` are ignored. Every key must be
//! known; a typo is a config error rather than a silent default.
//!
//! ```text
//! model.alpha = 0.6          # all nine model keys are required
//! disc.K = 2
//! disc.M = 1                 # monomial degree of the source rows
//! disc.time = linspace 0 3 61
//! disc.x = linspace 0 3.141592653589793 17   # optional physical grid
//! data.phi = 1, 0.25         # or: data.phi = parabola
//! data.f_1 = 1, -0.5         # M+1 coefficients of mode 1 (missing rows are 0)
//! data.noise = 0             # relative Gaussian noise on flux samples
//! data.seed = 0
//! task.s = 0.5, 1+2i
//! task.rho = logspace -1 1 10
//! task.modes = 1, 2
//! task.mu = 0
//! task.mu_sweep = logspace -10 -2 9
//! task.problem = ip1
//! task.probe_alphas = 0.5, 0.7071067811865476, 0.75
//! ```

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;

use fracinv_core::inverse::Problem;
use fracinv_core::modes::{analyze_fn, build_mode_table};
use fracinv_core::{ModelParams, SourceSpec, SpectralField};
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct Task {
    pub s_grid: Vec<Complex64>,
    pub rho_grid: Vec<f64>,
    pub modes: Vec<usize>,
    pub mu: f64,
    pub mu_sweep: Vec<f64>,
    pub problem: Problem,
    pub probe_alphas: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub model: ModelParams,
    pub k_max: usize,
    pub degree: usize,
    pub time_grid: Vec<f64>,
    pub x_grid: Option<Vec<f64>>,
    pub phi: SpectralField,
    pub psi: SpectralField,
    pub src: SourceSpec,
    pub noise: f64,
    pub seed: u64,
    pub task: Task,
}

const MODEL_KEYS: [&str; 9] = ["alpha", "kappa", "varkappa", "a", "b", "c", "d", "t0", "t1"];

type Entries = BTreeMap<String, (usize, String)>;

fn parse_entries(text: &str) -> Result<Entries, String> {
    let mut out = Entries::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {}: expected `section.key = value`", i + 1));
        };
        let key = key.trim();
        if key.matches('.').count() != 1 {
            return Err(format!("line {}: key `{key}` must be `section.key`", i + 1));
        }
        if out.insert(key.to_string(), (i + 1, value.trim().to_string())).is_some() {
            return Err(format!("line {}: duplicate key `{key}`", i + 1));
        }
    }
    Ok(out)
}

fn number(key: &str, v: &str) -> Result<f64, String> {
    v.parse::<f64>()
        .map_err(|_| format!("`{key}`: `{v}` is not a number"))
}

fn list(key: &str, v: &str) -> Result<Vec<f64>, String> {
    v.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| number(key, x))
        .collect()
}

/// `linspace a b n`, `logspace e0 e1 n` or an explicit comma list.
fn grid(key: &str, v: &str) -> Result<Vec<f64>, String> {
    let words: Vec<&str> = v.split_whitespace().collect();
    match words.first() {
        Some(&kind @ ("linspace" | "logspace")) => {
            if words.len() != 4 {
                return Err(format!("`{key}`: expected `{kind} start end count`"));
            }
            let a = number(key, words[1])?;
            let b = number(key, words[2])?;
            let n: usize = words[3]
                .parse()
                .map_err(|_| format!("`{key}`: `{}` is not a count", words[3]))?;
            if n < 2 {
                return Err(format!("`{key}`: need at least 2 points"));
            }
            let pts = (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64);
            Ok(if kind == "logspace" {
                pts.map(|e| 10f64.powf(e)).collect()
            } else {
                pts.collect()
            })
        }
        _ => list(key, v),
    }
}

fn field(key: &str, v: &str, k_max: usize) -> Result<SpectralField, String> {
    match v {
        "zero" => Ok(SpectralField::zeros(k_max)),
        // x(π−x)
        "parabola" => analyze_fn(|x| x * (PI - x), k_max).map_err(|e| format!("`{key}`: {e}")),
        // sin x, i.e. √(π/2) times the first eigenfunction
        "sine" => analyze_fn(f64::sin, k_max).map_err(|e| format!("`{key}`: {e}")),
        _ => {
            let values = list(key, v)?;
            if values.len() > k_max {
                return Err(format!("`{key}`: {} coefficients for K = {k_max}", values.len()));
            }
            let mut f = SpectralField::zeros(k_max);
            for (c, x) in f.coeffs.iter_mut().zip(values) {
                *c = Complex64::new(x, 0.0);
            }
            Ok(f)
        }
    }
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut e = parse_entries(text)?;
        let mut take = |key: &str| e.remove(key).map(|(_, v)| v);

        let mut m = [0.0; 9];
        for (slot, name) in m.iter_mut().zip(MODEL_KEYS) {
            let key = format!("model.{name}");
            let v = take(&key).ok_or_else(|| format!("missing `{key}`"))?;
            *slot = number(&key, &v)?;
        }
        let [alpha, kappa, varkappa, a, b, c, d, t0, t1] = m;
        let model = ModelParams {
            alpha,
            kappa,
            varkappa,
            a,
            b,
            c,
            d,
            t0,
            t1,
        };

        let k_max: usize = take("disc.K")
            .ok_or("missing `disc.K`")?
            .parse()
            .map_err(|_| "`disc.K` must be a positive integer".to_string())?;
        if k_max == 0 {
            return Err("`disc.K` must be a positive integer".into());
        }
        let degree: usize = match take("disc.M") {
            Some(v) => v.parse().map_err(|_| "`disc.M` must be a nonnegative integer".to_string())?,
            None => 0,
        };
        let time_grid = match take("disc.time") {
            Some(v) => grid("disc.time", &v)?,
            None => grid("disc.time", &format!("linspace 0 {t1} 61"))?,
        };
        if time_grid.iter().any(|t| !(t.is_finite() && *t >= 0.0)) || time_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err("`disc.time` must be increasing and nonnegative".into());
        }
        let x_grid = take("disc.x").map(|v| grid("disc.x", &v)).transpose()?;

        let phi = field("data.phi", &take("data.phi").unwrap_or("zero".into()), k_max)?;
        let psi = field("data.psi", &take("data.psi").unwrap_or("zero".into()), k_max)?;
        let mut src = SourceSpec::zeros(k_max, degree, t0);
        for k in 1..=k_max {
            for (name, rows) in [("f", &mut src.f_coeffs), ("chi", &mut src.chi_coeffs)] {
                let key = format!("data.{name}_{k}");
                if let Some(v) = take(&key) {
                    let values = list(&key, &v)?;
                    if values.len() > degree + 1 {
                        return Err(format!("`{key}`: {} coefficients for M = {degree}", values.len()));
                    }
                    for (c, x) in rows[k - 1].iter_mut().zip(values) {
                        *c = Complex64::new(x, 0.0);
                    }
                }
            }
        }
        let noise = take("data.noise").map(|v| number("data.noise", &v)).transpose()?.unwrap_or(0.0);
        if !(noise >= 0.0) {
            return Err("`data.noise` must be >= 0".into());
        }
        let seed = match take("data.seed") {
            Some(v) => v.parse().map_err(|_| "`data.seed` must be a nonnegative integer".to_string())?,
            None => 0,
        };

        let s_grid = match take("task.s") {
            Some(v) => v
                .split(',')
                .map(str::trim)
                .map(|x| x.parse::<Complex64>().map_err(|_| format!("`task.s`: `{x}` is not complex")))
                .collect::<Result<_, _>>()?,
            None => vec![Complex64::new(0.5, 0.0), Complex64::new(1.0, 1.0), Complex64::new(3.0, -1.0)],
        };
        let rho_grid = match take("task.rho") {
            Some(v) => grid("task.rho", &v)?,
            None => grid("task.rho", "logspace -1 1 10")?,
        };
        let modes = match take("task.modes") {
            Some(v) => v
                .split(',')
                .map(str::trim)
                .map(|x| match x.parse::<usize>() {
                    Ok(n) if (1..=k_max).contains(&n) => Ok(n),
                    _ => Err(format!("`task.modes`: `{x}` is not a mode in 1..={k_max}")),
                })
                .collect::<Result<_, _>>()?,
            None => (1..=k_max).collect(),
        };
        let mu = take("task.mu").map(|v| number("task.mu", &v)).transpose()?.unwrap_or(0.0);
        if !(mu >= 0.0) {
            return Err("`task.mu` must be >= 0".into());
        }
        let mu_sweep = take("task.mu_sweep").map(|v| grid("task.mu_sweep", &v)).transpose()?.unwrap_or_default();
        let problem = match take("task.problem").as_deref() {
            Some("ip1") => Problem::Ip1,
            Some("ip2") => Problem::Ip2,
            None if a == 0.0 => Problem::Ip1,
            None => Problem::Ip2,
            Some(other) => return Err(format!("`task.problem`: expected ip1 or ip2, got `{other}`")),
        };
        let probe_alphas = take("task.probe_alphas")
            .map(|v| list("task.probe_alphas", &v))
            .transpose()?
            .unwrap_or_default();

        if let Some((key, (line, _))) = e.into_iter().next() {
            return Err(format!("line {line}: unknown key `{key}`"));
        }

        Ok(Self {
            model,
            k_max,
            degree,
            time_grid,
            x_grid,
            phi,
            psi,
            src,
            noise,
            seed,
            task: Task {
                s_grid,
                rho_grid,
                modes,
                mu,
                mu_sweep,
                problem,
                probe_alphas,
            },
        })
    }

    /// Admissibility of the model part, with the violated inequality in the message.
    pub fn table(&self) -> Result<fracinv_core::ModeTable, String> {
        build_mode_table(self.model, self.k_max).map_err(|e| e.to_string())
    }
}

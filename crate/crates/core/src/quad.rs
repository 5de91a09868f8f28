//! Quadrature rules on [0, 1] and graded panel layouts.

use gauss_quad::{FiniteAboveNegOneF64, GaussJacobi, GaussLegendre};
use num_complex::Complex64;

/// Nodes and weights of a rule on the unit interval.
#[derive(Debug, Clone)]
pub struct UnitRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl UnitRule {
    /// Gauss-Legendre with `n` points mapped to [0, 1].
    pub fn legendre(n: usize) -> Self {
        let rule = GaussLegendre::new(n.max(1).try_into().expect("n >= 1"));
        let (nodes, weights) = rule
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| ((x + 1.0) / 2.0, w / 2.0))
            .unzip();
        Self { nodes, weights }
    }

    /// Gauss-Jacobi for ∫₀¹ x^{p} g(x) dx, p > −1.
    pub fn jacobi_left(n: usize, p: f64) -> Self {
        let zero = FiniteAboveNegOneF64::new(0.0).expect("0 > -1");
        let p_checked = FiniteAboveNegOneF64::new(p).expect("exponent must exceed -1");
        let rule = GaussJacobi::new(n.max(1).try_into().expect("n >= 1"), zero, p_checked);
        // weight (1+ξ)^p on [−1,1]; x = (1+ξ)/2 gives a factor 2^{−p−1}
        let scale = 2f64.powf(-p - 1.0);
        let (nodes, weights) = rule
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| ((x + 1.0) / 2.0, w * scale))
            .unzip();
        Self { nodes, weights }
    }

    /// ∫_a^b f with the rule mapped affinely.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> Complex64) -> Complex64 {
        let h = b - a;
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(a + h * x);
        }
        acc * h
    }
}

/// Panels on [a, b] shrinking geometrically (ratio 1/2) toward `a` until the
/// innermost width drops below `min_width`. The first panel starts at `a`.
pub fn graded_toward_left(a: f64, b: f64, min_width: f64) -> Vec<(f64, f64)> {
    let mut cuts = vec![b];
    let mut width = b - a;
    while width > min_width {
        width /= 2.0;
        cuts.push(a + width);
    }
    cuts.push(a);
    cuts.reverse();
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// `n` equal panels on [a, b].
pub fn uniform(a: f64, b: f64, n: usize) -> Vec<(f64, f64)> {
    let h = (b - a) / n as f64;
    (0..n)
        .map(|i| (a + h * i as f64, if i + 1 == n { b } else { a + h * (i + 1) as f64 }))
        .collect()
}

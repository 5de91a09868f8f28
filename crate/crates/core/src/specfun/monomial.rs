use num_complex::Complex64;

/// ∫₀^{t0} t^m e^{−st} dt for complex s.
///
/// With w = s·t0 this is t0^{m+1}·γ(m+1, w)/w^{m+1}. Small |w| uses the
/// power series of the lower incomplete gamma, larger |w| the finite closed
/// form available for integer order.
pub fn truncated_monomial_transform(m: u32, t0: f64, s: Complex64) -> Complex64 {
    let w = s * t0;
    let scale = t0.powi(m as i32 + 1);
    scale * scaled_lower_gamma(m, w)
}

/// γ(m+1, w)/w^{m+1} = ∫₀¹ x^m e^{−wx} dx.
fn scaled_lower_gamma(m: u32, w: Complex64) -> Complex64 {
    if w.norm() <= 4.0 {
        // Σ (−w)^n / (n! (n+m+1))
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for n in 0..200u32 {
            let contribution = term / f64::from(n + m + 1);
            sum += contribution;
            if contribution.norm() < 1e-17 * sum.norm() {
                break;
            }
            term *= -w / f64::from(n + 1);
        }
        sum
    } else {
        // m!/w^{m+1} (1 − e^{−w} Σ_{j≤m} w^j/j!)
        let mut partial = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        let mut factorial = 1.0;
        for j in 0..=m {
            partial += term;
            term *= w / f64::from(j + 1);
            if j >= 1 {
                factorial *= f64::from(j);
            }
        }
        factorial * (Complex64::new(1.0, 0.0) - (-w).exp() * partial) / w.powu(m + 1)
    }
}

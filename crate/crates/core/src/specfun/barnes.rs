use num_complex::Complex64;

use super::gamma::log_gamma;
use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;

pub const MAX_V: f64 = 50.0;
const BASE_NODES: usize = 64;
const MAX_NODES: usize = 1024;

/// ln[G(1 + iv/2π) G(1 - iv/2π)] = 2 Re ln G(1 + iv/2π) for `0 <= v <= 50`.
///
/// Uses the antiderivative identity
/// `∫_0^z ln Γ(1+x) dx = z/2 ln 2π - z(z+1)/2 + z ln Γ(1+z) - ln G(1+z)`
/// with the integral taken along the segment `[0, z]`.
pub fn log_barnes_g_product(v: f64) -> Result<f64> {
    if !(0.0..=MAX_V).contains(&v) {
        return Err(Error::domain(
            "log_barnes_g_product",
            format!("v = {v} outside [0, {MAX_V}]"),
        ));
    }
    if v == 0.0 {
        return Ok(0.0);
    }
    let z = Complex64::new(0.0, v / (2.0 * std::f64::consts::PI));
    let mut nodes = BASE_NODES;
    let mut prev = log_g_one_plus(z, nodes)?;
    loop {
        nodes *= 2;
        let next = log_g_one_plus(z, nodes)?;
        if (next - prev).norm() <= 1e-13 * (1.0 + next.norm()) || nodes >= MAX_NODES {
            return Ok(2.0 * next.re);
        }
        prev = next;
    }
}

/// ln G(1+z) from the antiderivative identity with an n-node rule.
pub(crate) fn log_g_one_plus(z: Complex64, n: usize) -> Result<Complex64> {
    let rule = gauss_legendre(n)?;
    // ∫_0^z ln Γ(1+x) dx = z ∫_0^1 ln Γ(1 + z t) dt
    let mut integral = Complex64::new(0.0, 0.0);
    for (t, w) in rule.nodes.iter().zip(&rule.weights) {
        let tt = 0.5 * (t + 1.0);
        integral += log_gamma(1.0 + z * tt)?.value * (0.5 * w);
    }
    integral *= z;
    let ln_2pi = (2.0 * std::f64::consts::PI).ln();
    Ok(z * 0.5 * ln_2pi - z * (z + 1.0) * 0.5 + z * log_gamma(1.0 + z)?.value - integral)
}

//! Gauss–Legendre rules computed at runtime and memoized per order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 4096;
const MAX_NEWTON_ITERATIONS: usize = 20;

/// An n-point Gauss–Legendre rule on (-1, 1).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    pub order: usize,
    /// Strictly increasing nodes in (-1, 1).
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    /// Nodes and weights mapped affinely onto `(a, b)`.
    pub fn mapped(&self, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let x = self.nodes.iter().map(|t| mid + half * t).collect();
        let w = self.weights.iter().map(|w| half * w).collect();
        (x, w)
    }

    /// ∫_a^b f using this rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| w * f(mid + half * t))
            .sum::<f64>()
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<QuadRule>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<QuadRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The n-point Gauss–Legendre rule, `1 <= n <= 4096`.
///
/// Rules are cached; concurrent callers asking for the same order may both
/// compute it, and whichever insert lands first is kept.
pub fn gauss_legendre(n: usize) -> Result<Arc<QuadRule>> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::domain(
            "gauss_legendre",
            format!("order {n} outside 1..={MAX_ORDER}"),
        ));
    }
    if let Some(rule) = cache().read().expect("quadrature cache poisoned").get(&n) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(compute_rule(n)?);
    let mut guard = cache().write().expect("quadrature cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(rule)))
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let nf = n as f64;
    let dp = nf * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn compute_rule(n: usize) -> Result<QuadRule> {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    // Roots come in ± pairs; compute the non-negative half.
    for i in 0..n.div_ceil(2) {
        // Chebyshev-like initial guess for the i-th largest root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut converged = false;
        let mut dp = 0.0;
        for _ in 0..MAX_NEWTON_ITERATIONS {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-14 {
                // One more step polishes the last digits.
                let (p, d) = legendre(n, x);
                x -= p / d;
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Numeric(format!(
                "Newton iteration for Gauss-Legendre node {i} of order {n} did not converge"
            )));
        }
        // Re-evaluate the derivative at the converged root for the weight.
        let (_, d) = legendre(n, x);
        if d.is_finite() {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        let (lo, hi) = (i, n - 1 - i);
        if lo == hi {
            nodes[lo] = 0.0;
            weights[lo] = w;
        } else {
            nodes[hi] = x;
            nodes[lo] = -x;
            weights[hi] = w;
            weights[lo] = w;
        }
    }
    Ok(QuadRule {
        order: n,
        nodes,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_and_two_point_rules() {
        let r = gauss_legendre(1).unwrap();
        assert_eq!(r.nodes, vec![0.0]);
        assert!((r.weights[0] - 2.0).abs() < 1e-15);

        let r = gauss_legendre(2).unwrap();
        let t = 1.0 / 3f64.sqrt();
        assert!((r.nodes[0] + t).abs() < 1e-15 && (r.nodes[1] - t).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-15 && (r.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn out_of_range_orders() {
        assert!(gauss_legendre(0).is_err());
        assert!(gauss_legendre(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn degree_thirty_monomial_with_sixteen_points() {
        let r = gauss_legendre(16).unwrap();
        let v = r.integrate(-1.0, 1.0, |x| x.powi(30));
        assert!((v - 2.0 / 31.0).abs() < 1e-13);
    }

    #[test]
    fn weights_sum_nodes_symmetric_sorted() {
        for n in (1..=64).chain([100, 257, 512, 1000]) {
            let r = gauss_legendre(n).unwrap();
            let sum: f64 = r.weights.iter().sum();
            assert!((sum - 2.0).abs() < 1e-14, "n = {n}: sum {sum}");
            for i in 0..n {
                assert_eq!(r.nodes[i], -r.nodes[n - 1 - i]);
                assert_eq!(r.weights[i], r.weights[n - 1 - i]);
                assert!(r.weights[i] > 0.0);
                assert!(r.nodes[i] > -1.0 && r.nodes[i] < 1.0);
            }
            assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn polynomial_exactness() {
        for n in 1..=64usize {
            let r = gauss_legendre(n).unwrap();
            for deg in 0..2 * n {
                let exact = if deg % 2 == 1 {
                    0.0
                } else {
                    2.0 / (deg as f64 + 1.0)
                };
                let v = r.integrate(-1.0, 1.0, |x| x.powi(deg as i32));
                assert!(
                    (v - exact).abs() < 1e-13,
                    "n = {n}, degree {deg}: {v} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn exponential_converged_by_twelve() {
        for n in 12..40 {
            let a = gauss_legendre(n).unwrap().integrate(-1.0, 1.0, f64::exp);
            let b = gauss_legendre(2 * n)
                .unwrap()
                .integrate(-1.0, 1.0, f64::exp);
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn largest_order_builds() {
        let r = gauss_legendre(MAX_ORDER).unwrap();
        let sum: f64 = r.weights.iter().sum();
        assert!((sum - 2.0).abs() < 1e-13);
    }

    #[test]
    fn concurrent_fills_agree() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| gauss_legendre(333).unwrap()))
            .collect();
        let rules: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(rules.windows(2).all(|w| w[0] == w[1]));
    }
}

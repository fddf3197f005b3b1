//! Finite-N behaviour of the tridiagonal sampler against the analytic routes.

use thinned_tw::painleve::AsDistributions;
use thinned_tw::sampler::{
    empirical_vs_analytic, tracy_widom_argument_scale, SampleBatch, TabulatedCdf,
};

fn ks(
    n: usize,
    beta: u8,
    gamma: f64,
    seed: u64,
    draws: usize,
    dist: &AsDistributions,
    scale: f64,
) -> f64 {
    let batch = SampleBatch::generate(n, beta, gamma, seed, draws).unwrap();
    let cdf = TabulatedCdf::from_fn(-20.0, 5.0, 501, |x| dist.f(beta, scale * x)).unwrap();
    empirical_vs_analytic(&batch, &cdf).unwrap().ks_distance
}

#[test]
fn ks_shrinks_with_matrix_size() {
    let dist = AsDistributions::new(0.5, -20.0, 5.0, 1e-10).unwrap();
    let values: Vec<f64> = [50, 100, 200, 400]
        .iter()
        .map(|&n| ks(n, 2, 0.5, 11, 20_000, &dist, 1.0))
        .collect();
    assert!(values[3] < values[0], "{values:?}");
    assert!(values[3] <= 0.03, "{values:?}");
}

#[test]
fn orthogonal_and_symplectic_conventions() {
    let dist = AsDistributions::new(0.5, -32.0, 8.0, 1e-10).unwrap();
    let goe = ks(200, 1, 0.5, 5, 10_000, &dist, tracy_widom_argument_scale(1));
    assert!(goe <= 0.03, "beta 1: {goe}");
    let gse = ks(200, 4, 0.5, 5, 10_000, &dist, tracy_widom_argument_scale(4));
    assert!(gse <= 0.03, "beta 4: {gse}");
    // Without the 2^{2/3} argument scale the GSE law is clearly off.
    let unscaled = ks(200, 4, 0.5, 5, 10_000, &dist, 1.0);
    assert!(unscaled > 0.1, "beta 4 unscaled: {unscaled}");
}

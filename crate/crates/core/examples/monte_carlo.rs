//! Thinned GUE maxima from the tridiagonal model compared with F2(s, gamma).

use thinned_tw::fredholm::{ln_f2_determinant, ThinningParams};
use thinned_tw::painleve::AsDistributions;
use thinned_tw::sampler::{empirical_vs_analytic, SampleBatch, TabulatedCdf};

fn main() -> thinned_tw::Result<()> {
    let (n, draws, seed) = (200, 10_000, 42);

    let batch = SampleBatch::generate(n, 2, 1.0, seed, draws)?;
    let cdf = TabulatedCdf::from_fn(-8.0, 5.0, 261, |s| {
        ln_f2_determinant(ThinningParams::new(s, 1.0)?, 96).map(f64::exp)
    })?;
    let ks = empirical_vs_analytic(&batch, &cdf)?;
    println!(
        "gamma = 1:   KS = {:.4} over {} draws",
        ks.ks_distance, ks.n_effective
    );

    let d = AsDistributions::new(0.5, -30.0, 5.0, 1e-10)?;
    let cdf = TabulatedCdf::from_fn(-30.0, 5.0, 701, |s| d.f(2, s))?;
    let batch = SampleBatch::generate(n, 2, 0.5, seed, draws)?;
    let ks = empirical_vs_analytic(&batch, &cdf)?;
    println!(
        "gamma = 0.5: KS = {:.4} over {} draws",
        ks.ks_distance, ks.n_effective
    );

    let small = SampleBatch::generate(5, 2, 0.3, seed, draws)?;
    println!(
        "N = 5, gamma = 0.3: all-thinned frequency {:.4}, (1 - gamma)^N = {:.4}",
        small.sentinel_count() as f64 / draws as f64,
        0.7f64.powi(5)
    );
    Ok(())
}

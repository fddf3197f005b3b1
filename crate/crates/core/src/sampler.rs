//! Monte Carlo draws of thinned Gaussian-ensemble spectra.
//!
//! Matrices come from the tridiagonal β-Hermite model. With eigenvalue
//! density ∝ Π|λ_k - λ_j|^β exp(-(β/2) Σ λ²) the model has diagonal entries
//! N(0, 1/β) and off-diagonal entries χ_{β(N-k)}/√(2β), k = 1..N-1; the
//! semicircle then has support (-√(2N), √(2N)).
//!
//! Draw `i` of a batch uses ChaCha8 seeded with the batch seed on stream `i`,
//! so a batch is bit-identical under any thread schedule.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{ChiSquared, Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};

const QL_MAX_ITER: usize = 60;

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (`e[i]` couples rows i and i+1), by implicit QL.
/// Returned ascending.
pub fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 || off.len() + 1 != n {
        return Err(Error::Precondition(format!(
            "tridiagonal sizes: {} diagonal, {} off-diagonal",
            n,
            off.len()
        )));
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_MAX_ITER {
                return Err(Error::Numeric(format!(
                    "tridiagonal QL did not converge for eigenvalue {l} of {n}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    if d.iter().any(|x| !x.is_finite()) {
        return Err(Error::Numeric(
            "non-finite eigenvalue from tridiagonal QL".into(),
        ));
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Number of eigenvalues strictly below `x` (Sturm sequence count).
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = diag[0] - x;
    for i in 0..diag.len() {
        if i > 0 {
            let prev = if q == 0.0 {
                f64::EPSILON * (1.0 + x.abs())
            } else {
                q
            };
            q = diag[i] - x - off[i - 1] * off[i - 1] / prev;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The eigenvalue with ascending index `k`, by bisection on the Sturm count.
pub fn tridiagonal_eigenvalue(diag: &[f64], off: &[f64], k: usize) -> Result<f64> {
    let n = diag.len();
    if k >= n || off.len() + 1 != n {
        return Err(Error::Precondition(format!(
            "eigenvalue index {k} for a {n}x{n} matrix"
        )));
    }
    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r =
            if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    if !x.is_finite() {
        return Err(Error::Numeric(
            "non-finite eigenvalue from bisection".into(),
        ));
    }
    Ok(x)
}

fn check_beta(beta: u8) -> Result<()> {
    match beta {
        1 | 2 | 4 => Ok(()),
        _ => Err(Error::domain(
            "sampler",
            format!("beta = {beta} not in {{1, 2, 4}}"),
        )),
    }
}

/// Draws the tridiagonal β-Hermite matrix `(diagonal, off_diagonal)`.
///
/// Diagonal N(0, 1/β), off-diagonal χ_{β(N-k)}/√(2β): the Dumitriu–Edelman
/// matrix divided by √(2β), whose eigenvalue density is
/// ∏|λ_k - λ_j|^β exp(-(β/2) Σλ²).
pub fn sample_tridiagonal<R: Rng + ?Sized>(
    n: usize,
    beta: u8,
    rng: &mut R,
) -> Result<(Vec<f64>, Vec<f64>)> {
    check_beta(beta)?;
    if n < 2 {
        return Err(Error::Precondition(format!("matrix dimension {n} < 2")));
    }
    let b = beta as f64;
    let sd = b.recip().sqrt();
    let diag: Vec<f64> = (0..n)
        .map(|_| sd * rng.sample::<f64, _>(StandardNormal))
        .collect();
    let scale = (2.0 * b).sqrt().recip();
    let mut off = Vec::with_capacity(n - 1);
    for k in 1..n {
        let chi2 = ChiSquared::new(b * (n - k) as f64)
            .map_err(|e| Error::Numeric(format!("chi-squared parameter: {e}")))?;
        off.push(scale * chi2.sample(rng).sqrt());
    }
    Ok((diag, off))
}

/// Eigenvalues (ascending) of one Gaussian β-ensemble draw.
pub fn sample_spectrum<R: Rng + ?Sized>(n: usize, beta: u8, rng: &mut R) -> Result<Vec<f64>> {
    let (d, e) = sample_tridiagonal(n, beta, rng)?;
    tridiagonal_eigenvalues(&d, &e)
}

/// μ = √2 N^{1/6} (λ - √(2N)).
pub fn rescale_edge(eigenvalues: &[f64], n: usize) -> Result<Vec<f64>> {
    if eigenvalues.is_empty() || n == 0 {
        return Err(Error::Precondition(
            "rescale_edge needs a nonempty spectrum".into(),
        ));
    }
    let nf = n as f64;
    let edge = (2.0 * nf).sqrt();
    let scale = 2f64.sqrt() * nf.powf(1.0 / 6.0);
    Ok(eigenvalues.iter().map(|l| scale * (l - edge)).collect())
}

/// Largest kept value after thinning, or the all-thinned marker.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThinnedMax {
    Value(f64),
    AllThinned,
}

impl ThinnedMax {
    pub fn value(self) -> Option<f64> {
        match self {
            ThinnedMax::Value(x) => Some(x),
            ThinnedMax::AllThinned => None,
        }
    }
}

/// One keep/discard decision per entry, in input order.
pub fn thinning_mask<R: Rng + ?Sized>(len: usize, gamma: f64, rng: &mut R) -> Result<Vec<bool>> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::domain(
            "thinning",
            format!("gamma = {gamma} outside [0, 1]"),
        ));
    }
    Ok((0..len).map(|_| rng.random_bool(gamma)).collect())
}

/// Keeps each entry with probability `gamma` and returns the largest kept one.
pub fn thin_and_max<R: Rng + ?Sized>(
    values: &[f64],
    gamma: f64,
    rng: &mut R,
) -> Result<ThinnedMax> {
    let mask = thinning_mask(values.len(), gamma, rng)?;
    Ok(values
        .iter()
        .zip(mask)
        .filter(|(_, keep)| *keep)
        .map(|(x, _)| *x)
        .reduce(f64::max)
        .map_or(ThinnedMax::AllThinned, ThinnedMax::Value))
}

/// Generator for draw `index` of a batch with `seed`.
pub fn draw_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Rescaled thinned maxima of independent draws.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub n_matrix: usize,
    pub beta: u8,
    pub gamma: f64,
    pub seed: u64,
    pub maxima: Vec<ThinnedMax>,
}

impl SampleBatch {
    pub fn generate(
        n_matrix: usize,
        beta: u8,
        gamma: f64,
        seed: u64,
        draws: usize,
    ) -> Result<Self> {
        check_beta(beta)?;
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::domain(
                "SampleBatch",
                format!("gamma = {gamma} outside [0, 1]"),
            ));
        }
        let maxima = (0..draws as u64)
            .into_par_iter()
            .map(|i| {
                // Same random stream as thin_and_max(rescale_edge(sample_spectrum)),
                // but only the largest kept eigenvalue is computed.
                let mut rng = draw_rng(seed, i);
                let (d, e) = sample_tridiagonal(n_matrix, beta, &mut rng)?;
                let mask = thinning_mask(n_matrix, gamma, &mut rng)?;
                Ok(match mask.iter().rposition(|keep| *keep) {
                    None => ThinnedMax::AllThinned,
                    Some(k) => {
                        let lambda = tridiagonal_eigenvalue(&d, &e, k)?;
                        ThinnedMax::Value(rescale_edge(&[lambda], n_matrix)?[0])
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SampleBatch {
            n_matrix,
            beta,
            gamma,
            seed,
            maxima,
        })
    }

    pub fn len(&self) -> usize {
        self.maxima.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maxima.is_empty()
    }

    pub fn sentinel_count(&self) -> usize {
        self.maxima
            .iter()
            .filter(|m| **m == ThinnedMax::AllThinned)
            .count()
    }

    /// Writes `draw_index,value_or_empty,is_sentinel` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "draw_index,value_or_empty,is_sentinel")?;
        for (i, m) in self.maxima.iter().enumerate() {
            match m {
                ThinnedMax::Value(x) => writeln!(out, "{i},{x:e},false")?,
                ThinnedMax::AllThinned => writeln!(out, "{i},,true")?,
            }
        }
        Ok(())
    }
}

/// Factor `a` such that the rescaled largest eigenvalue has law F_β(a s).
///
/// The tridiagonal β = 4 model with weight exp(-2Σλ²) and the edge map of
/// [`rescale_edge`] converges to F₄(2^{2/3} s); β = 1, 2 need no correction.
pub fn tracy_widom_argument_scale(beta: u8) -> f64 {
    if beta == 4 {
        2f64.powf(2.0 / 3.0)
    } else {
        1.0
    }
}

/// A distribution function that can be evaluated pointwise.
pub trait Cdf {
    fn cdf(&self, x: f64) -> Result<f64>;
}

impl<F: Fn(f64) -> Result<f64>> Cdf for F {
    fn cdf(&self, x: f64) -> Result<f64> {
        self(x)
    }
}

/// Piecewise-linear interpolation of tabulated CDF values on an increasing
/// grid; 0 left of the grid and 1 right of it.
#[derive(Debug, Clone)]
pub struct TabulatedCdf {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl TabulatedCdf {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() < 2 || grid.len() != values.len() || grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Precondition(
                "tabulated CDF needs >= 2 strictly increasing nodes with one value each".into(),
            ));
        }
        Ok(TabulatedCdf { grid, values })
    }

    /// Tabulates `f` on `n` equispaced nodes of `[lo, hi]` in parallel.
    pub fn from_fn<F>(lo: f64, hi: f64, n: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64> + Sync,
    {
        if n < 2 || !(hi > lo) {
            return Err(Error::Precondition(format!(
                "bad table range [{lo}, {hi}] with {n} nodes"
            )));
        }
        let grid: Vec<f64> = (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect();
        let values = grid.par_iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
        Self::new(grid, values)
    }
}

impl Cdf for TabulatedCdf {
    fn cdf(&self, x: f64) -> Result<f64> {
        let g = &self.grid;
        if x <= g[0] {
            return Ok(if x == g[0] { self.values[0] } else { 0.0 });
        }
        if x >= g[g.len() - 1] {
            return Ok(if x == g[g.len() - 1] {
                self.values[g.len() - 1]
            } else {
                1.0
            });
        }
        let i = g.partition_point(|t| *t <= x) - 1;
        let w = (x - g[i]) / (g[i + 1] - g[i]);
        Ok(self.values[i] + w * (self.values[i + 1] - self.values[i]))
    }
}

/// Kolmogorov–Smirnov comparison result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub ks_distance: f64,
    /// Number of draws that kept at least one eigenvalue.
    pub n_effective: usize,
}

/// Minimum number of non-sentinel maxima for [`empirical_vs_analytic`].
pub const MIN_EFFECTIVE: usize = 100;

/// Sup distance between the empirical law of the maxima and `cdf`.
///
/// All-thinned draws sit at -∞: they lift the empirical CDF by their
/// frequency everywhere, so the analytic side must carry the same floor
/// (for the limit laws it is (1-γ)^N → 0).
pub fn empirical_vs_analytic<C: Cdf + ?Sized>(batch: &SampleBatch, cdf: &C) -> Result<KsResult> {
    let mut values: Vec<f64> = batch.maxima.iter().filter_map(|m| m.value()).collect();
    if values.len() < MIN_EFFECTIVE {
        return Err(Error::Precondition(format!(
            "{} non-sentinel maxima, need at least {MIN_EFFECTIVE}",
            values.len()
        )));
    }
    values.sort_by(f64::total_cmp);
    let n = batch.len() as f64;
    let floor = batch.sentinel_count() as f64;
    let mut d = floor / n;
    for (j, x) in values.iter().enumerate() {
        let f = cdf.cdf(*x)?;
        let below = (floor + j as f64) / n;
        let above = (floor + j as f64 + 1.0) / n;
        d = d.max((f - below).abs()).max((above - f).abs());
    }
    Ok(KsResult {
        ks_distance: d,
        n_effective: values.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    #[test]
    fn ql_matches_dense_solver() {
        let mut rng = draw_rng(7, 0);
        for n in [2, 3, 10, 57] {
            let (d, e) = sample_tridiagonal(n, 1, &mut rng).unwrap();
            let ours = tridiagonal_eigenvalues(&d, &e).unwrap();
            let m = DMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    d[i]
                } else if i + 1 == j {
                    e[i]
                } else if j + 1 == i {
                    e[j]
                } else {
                    0.0
                }
            });
            let mut dense: Vec<f64> = m.symmetric_eigenvalues().iter().cloned().collect();
            dense.sort_by(f64::total_cmp);
            for (a, b) in ours.iter().zip(&dense) {
                assert!((a - b).abs() < 1e-12 * (1.0 + b.abs()), "n {n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn bisection_matches_ql() {
        let (d, e) = sample_tridiagonal(80, 4, &mut draw_rng(2, 9)).unwrap();
        let all = tridiagonal_eigenvalues(&d, &e).unwrap();
        for k in [0, 1, 40, 78, 79] {
            let x = tridiagonal_eigenvalue(&d, &e, k).unwrap();
            assert!(
                (x - all[k]).abs() < 1e-13 * (1.0 + x.abs()),
                "k {k}: {x} vs {}",
                all[k]
            );
        }
        assert!(tridiagonal_eigenvalue(&d, &e, 80).is_err());
    }

    #[test]
    fn batch_fast_path_matches_full_spectrum() {
        let (n, gamma, seed) = (60, 0.4, 77);
        let batch = SampleBatch::generate(n, 2, gamma, seed, 40).unwrap();
        for (i, m) in batch.maxima.iter().enumerate() {
            let mut rng = draw_rng(seed, i as u64);
            let spectrum = sample_spectrum(n, 2, &mut rng).unwrap();
            let full = thin_and_max(&rescale_edge(&spectrum, n).unwrap(), gamma, &mut rng).unwrap();
            match (full, *m) {
                (ThinnedMax::Value(a), ThinnedMax::Value(b)) => assert!((a - b).abs() < 1e-11),
                (a, b) => assert_eq!(a, b),
            }
        }
    }

    #[test]
    fn ql_handles_decoupled_blocks() {
        let v = tridiagonal_eigenvalues(&[3.0, 1.0, 2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(v, vec![1.0, 2.0, 3.0]);
        assert!(tridiagonal_eigenvalues(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn spectrum_is_sorted_and_semicircular() {
        let mut rng = draw_rng(11, 3);
        let n = 500;
        let ev = sample_spectrum(n, 2, &mut rng).unwrap();
        assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        let r = 1.05 * (2.0 * n as f64).sqrt();
        let inside = ev.iter().filter(|x| x.abs() <= r).count();
        assert!(inside as f64 >= 0.99 * n as f64);
    }

    #[test]
    fn two_by_two_gue_mean_maximum() {
        // Dense 2×2 GUE with density ∝ exp(-tr H²): diagonal N(0, 1/2),
        // off-diagonal complex with E|h₁₂|² = 1/2.
        let draws = 100_000;
        let (mut sum_tri, mut sq_tri, mut sum_dense, mut sq_dense) = (0.0, 0.0, 0.0, 0.0);
        let mut rng = draw_rng(5, 0);
        for _ in 0..draws {
            let ev = sample_spectrum(2, 2, &mut rng).unwrap();
            sum_tri += ev[1];
            sq_tri += ev[1] * ev[1];
            let a: f64 = rng.sample::<f64, _>(StandardNormal) * 0.5f64.sqrt();
            let b: f64 = rng.sample::<f64, _>(StandardNormal) * 0.5f64.sqrt();
            let re: f64 = rng.sample::<f64, _>(StandardNormal) * 0.5;
            let im: f64 = rng.sample::<f64, _>(StandardNormal) * 0.5;
            // Largest eigenvalue of [[a, h], [h̄, b]] in closed form.
            let top = 0.5 * (a + b) + (0.25 * (a - b).powi(2) + re * re + im * im).sqrt();
            sum_dense += top;
            sq_dense += top * top;
        }
        let n = draws as f64;
        let (m1, m2) = (sum_tri / n, sum_dense / n);
        let se = ((sq_tri / n - m1 * m1) / n + (sq_dense / n - m2 * m2) / n).sqrt();
        assert!((m1 - m2).abs() <= 2.0 * se, "{m1} vs {m2} (se {se})");
    }

    #[test]
    fn rescale_edge_is_the_affine_map() {
        let n = 64;
        let edge = (2.0 * n as f64).sqrt();
        let unit = edge + 2f64.powf(-0.5) * (n as f64).powf(-1.0 / 6.0);
        let r = rescale_edge(&[edge - 1.0, edge, unit], n).unwrap();
        assert_eq!(r[1], 0.0);
        assert!((r[2] - 1.0).abs() < 1e-12);
        assert!(r[0] < r[1] && r[1] < r[2]);
        assert!(rescale_edge(&[], 3).is_err());
    }

    #[test]
    fn thinning_extremes() {
        let xs = [0.3, -1.0, 2.5, 1.0];
        let mut rng = draw_rng(1, 1);
        assert_eq!(
            thin_and_max(&xs, 1.0, &mut rng).unwrap(),
            ThinnedMax::Value(2.5)
        );
        assert_eq!(
            thin_and_max(&xs, 0.0, &mut rng).unwrap(),
            ThinnedMax::AllThinned
        );
        assert!(thin_and_max(&xs, 1.5, &mut rng).is_err());
    }

    #[test]
    fn seeded_thinning_is_reproducible() {
        let xs: Vec<f64> = (0..50).map(|i| (i as f64 * 0.37).sin()).collect();
        let a = thin_and_max(&xs, 0.5, &mut draw_rng(99, 4)).unwrap();
        let b = thin_and_max(&xs, 0.5, &mut draw_rng(99, 4)).unwrap();
        assert_eq!(a.value().map(f64::to_bits), b.value().map(f64::to_bits));
    }

    #[test]
    fn thinning_commutes_with_rescaling() {
        let n = 30;
        let ev = sample_spectrum(n, 1, &mut draw_rng(3, 0)).unwrap();
        for stream in 0..20 {
            let rescaled = rescale_edge(&ev, n).unwrap();
            let first = thin_and_max(&rescaled, 0.3, &mut draw_rng(42, stream)).unwrap();
            let raw = thin_and_max(&ev, 0.3, &mut draw_rng(42, stream)).unwrap();
            let second = match raw {
                ThinnedMax::Value(x) => ThinnedMax::Value(rescale_edge(&[x], n).unwrap()[0]),
                other => other,
            };
            assert_eq!(first, second);
        }
    }

    #[test]
    fn batch_is_deterministic() {
        let a = SampleBatch::generate(40, 2, 0.5, 2024, 64).unwrap();
        let b = SampleBatch::generate(40, 2, 0.5, 2024, 64).unwrap();
        assert_eq!(a, b);
        let mut csv = Vec::new();
        a.write_csv(&mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        assert!(text.starts_with("draw_index,value_or_empty,is_sentinel\n"));
        assert_eq!(text.lines().count(), 65);
    }

    #[test]
    fn sentinel_frequency_small_n() {
        let (n, gamma, draws) = (5usize, 0.3, 20_000);
        let batch = SampleBatch::generate(n, 1, gamma, 8, draws).unwrap();
        let p = (1.0f64 - gamma).powi(n as i32);
        let se = (p * (1.0 - p) / draws as f64).sqrt();
        let freq = batch.sentinel_count() as f64 / draws as f64;
        assert!((freq - p).abs() <= 3.0 * se, "{freq} vs {p}");
    }

    #[test]
    fn ks_against_own_empirical_law() {
        let batch = SampleBatch::generate(20, 2, 1.0, 1, 400).unwrap();
        let mut xs: Vec<f64> = batch.maxima.iter().filter_map(|m| m.value()).collect();
        xs.sort_by(f64::total_cmp);
        let n = xs.len() as f64;
        let own = |x: f64| -> Result<f64> { Ok(xs.partition_point(|t| *t <= x) as f64 / n) };
        let r = empirical_vs_analytic(&batch, &own).unwrap();
        assert!(r.ks_distance <= 1.0 / n + 1e-15);
        assert_eq!(r.n_effective, 400);
        let few = SampleBatch::generate(20, 2, 1.0, 1, 50).unwrap();
        assert!(empirical_vs_analytic(&few, &own).is_err());
    }

    #[test]
    fn tabulated_cdf_interpolates() {
        let t = TabulatedCdf::new(vec![0.0, 1.0, 2.0], vec![0.1, 0.5, 0.9]).unwrap();
        assert_eq!(t.cdf(-1.0).unwrap(), 0.0);
        assert!((t.cdf(0.5).unwrap() - 0.3).abs() < 1e-15);
        assert_eq!(t.cdf(2.0).unwrap(), 0.9);
        assert_eq!(t.cdf(3.0).unwrap(), 1.0);
        assert!(TabulatedCdf::new(vec![0.0, 0.0], vec![0.0, 1.0]).is_err());
    }
}

//! Nyström evaluation of det(1 - γ K_Ai) on L²(s, ∞).
//!
//! The semi-infinite interval is truncated at `x_max = max(s, 0) + 14`
//! (Ai(14)² < 1e-29) and discretized with a Gauss–Legendre rule. The
//! symmetrized matrix `√w_i K(x_i, x_j) √w_j` has the same eigenvalues as the
//! discretized operator; one symmetric eigendecomposition then serves the
//! determinant, the counting probabilities and the resolvent.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::specfun::{airy, AiryPair};

/// Length of the truncated tail beyond `max(s, 0)`.
pub const TAIL_LENGTH: f64 = 14.0;
/// Minimum Nyström order.
pub const MIN_ORDER: usize = 8;
/// Allowed excursion of kernel eigenvalues outside [0, 1].
pub const SPECTRUM_SLACK: f64 = 1e-10;
/// Tiny negative counting probabilities above this threshold are clamped to 0.
pub const CLAMP_THRESHOLD: f64 = 1e-12;

/// A point (s, γ) together with the derived quantities used throughout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThinningParams {
    pub s: f64,
    /// Retention probability.
    pub gamma: f64,
    /// v = -ln(1 - γ); infinite at γ = 1.
    pub v: f64,
    /// t = (-s)^{3/2} for s < 0, else 0.
    pub t: f64,
    /// γ̄ = 2γ - γ².
    pub gamma_bar: f64,
}

impl ThinningParams {
    pub fn new(s: f64, gamma: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::domain(
                "ThinningParams",
                format!("s = {s} is not finite"),
            ));
        }
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::domain(
                "ThinningParams",
                format!("gamma = {gamma} outside [0, 1]"),
            ));
        }
        Ok(ThinningParams {
            s,
            gamma,
            v: -(-gamma).ln_1p(),
            t: if s < 0.0 { (-s).powf(1.5) } else { 0.0 },
            gamma_bar: gamma * (2.0 - gamma),
        })
    }
}

/// Upper truncation point of (s, ∞).
pub fn x_max(s: f64) -> f64 {
    s.max(0.0) + TAIL_LENGTH
}

/// Default Nyström order: twelve nodes per unit length, at least 64.
pub fn default_order(s: f64) -> usize {
    ((12.0 * (x_max(s) - s)).ceil() as usize).max(64)
}

/// K_Ai(x, y) from precomputed Airy values.
pub fn airy_kernel_from(a: &AiryPair, b: &AiryPair) -> f64 {
    if a.x == b.x {
        a.aip * a.aip - a.x * a.ai * a.ai
    } else {
        (a.ai * b.aip - a.aip * b.ai) / (a.x - b.x)
    }
}

/// The Airy kernel (Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x - y), with the diagonal
/// limit Ai'(x)² - x Ai(x)².
pub fn airy_kernel(x: f64, y: f64) -> Result<f64> {
    Ok(airy_kernel_from(&airy(x)?, &airy(y)?))
}

/// The discretized, symmetrized Airy kernel on (s, x_max).
#[derive(Debug, Clone)]
pub struct DiscretizedKernel {
    pub s: f64,
    pub x_max: f64,
    pub order: usize,
    pub points: Vec<f64>,
    pub sqrt_weights: Vec<f64>,
    /// Entries √w_i K(x_i, x_j) √w_j.
    pub matrix: DMatrix<f64>,
    airy_values: Vec<AiryPair>,
}

pub fn build_kernel(s: f64, order: usize) -> Result<DiscretizedKernel> {
    if !s.is_finite() {
        return Err(Error::domain(
            "build_kernel",
            format!("s = {s} is not finite"),
        ));
    }
    if order < MIN_ORDER {
        return Err(Error::domain(
            "build_kernel",
            format!("order {order} below minimum {MIN_ORDER}"),
        ));
    }
    let upper = x_max(s);
    let rule = gauss_legendre(order)?;
    let (points, weights) = rule.mapped(s, upper);
    let sqrt_weights: Vec<f64> = weights.iter().map(|w| w.sqrt()).collect();
    let airy_values = points
        .par_iter()
        .map(|&x| airy(x))
        .collect::<Result<Vec<_>>>()?;

    let rows: Vec<Vec<f64>> = (0..order)
        .into_par_iter()
        .map(|i| {
            (0..order)
                .map(|j| {
                    let (a, b) = if i <= j { (i, j) } else { (j, i) };
                    sqrt_weights[a]
                        * airy_kernel_from(&airy_values[a], &airy_values[b])
                        * sqrt_weights[b]
                })
                .collect()
        })
        .collect();
    let matrix = DMatrix::from_fn(order, order, |i, j| rows[i][j]);

    Ok(DiscretizedKernel {
        s,
        x_max: upper,
        order,
        points,
        sqrt_weights,
        matrix,
        airy_values,
    })
}

impl DiscretizedKernel {
    /// Eigenvalues of the symmetrized matrix, checked against [0, 1] and
    /// clamped into it.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let raw = self.matrix.symmetric_eigenvalues();
        check_spectrum(raw.iter().copied())
    }

    fn eigen(&self) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
        SymmetricEigen::try_new(self.matrix.clone(), f64::EPSILON, 0).ok_or_else(|| {
            Error::Numeric(format!(
                "symmetric eigensolver failed for order {} at s = {}",
                self.order, self.s
            ))
        })
    }

    /// Σ_i w_i K(x_i, x_i), the discrete trace of the kernel.
    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().sum()
    }
}

fn check_spectrum(values: impl Iterator<Item = f64>) -> Result<Vec<f64>> {
    values
        .map(|k| {
            if !(-SPECTRUM_SLACK..=1.0 + SPECTRUM_SLACK).contains(&k) {
                Err(Error::Numeric(format!(
                    "kernel eigenvalue {k} outside [0, 1]; discretization is unreliable"
                )))
            } else {
                Ok(k.clamp(0.0, 1.0))
            }
        })
        .collect()
}

/// ln det(I - γ A) from kernel eigenvalues.
fn ln_det(eigenvalues: &[f64], gamma: f64) -> f64 {
    eigenvalues.iter().map(|k| (-gamma * k).ln_1p()).sum()
}

/// ln F₂(s, γ) by the determinant route.
pub fn ln_f2_determinant(p: ThinningParams, order: usize) -> Result<f64> {
    if p.gamma == 0.0 {
        return Ok(0.0);
    }
    let kernel = build_kernel(p.s, order)?;
    Ok(ln_det(&kernel.eigenvalues()?, p.gamma))
}

/// F₂(s, γ) = det(1 - γ K_Ai) on L²(s, ∞). γ = 1 is allowed.
pub fn f2_determinant(p: ThinningParams, order: usize) -> Result<f64> {
    ln_f2_determinant(p, order).map(f64::exp)
}

/// 1 - F₂(s, γ), accurate when F₂ is close to 1.
pub fn one_minus_f2_determinant(p: ThinningParams, order: usize) -> Result<f64> {
    ln_f2_determinant(p, order).map(|l| -l.exp_m1())
}

/// F₂(s, γ) at the default order.
pub fn f2(s: f64, gamma: f64) -> Result<f64> {
    f2_determinant(ThinningParams::new(s, gamma)?, default_order(s))
}

/// Probabilities E₂(m, (s, ∞)) of exactly m points in (s, ∞).
#[derive(Debug, Clone, PartialEq)]
pub struct CountingDistribution {
    pub s: f64,
    /// E₂(m) for m = 0..=m_max.
    pub probabilities: Vec<f64>,
}

impl CountingDistribution {
    /// Σ_m E₂(m) (1-γ)^m, which reproduces F₂(s, γ) when m_max is large enough.
    pub fn thinned_sum(&self, gamma: f64) -> f64 {
        self.probabilities
            .iter()
            .rev()
            .fold(0.0, |acc, e| acc * (1.0 - gamma) + e)
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }
}

/// E₂(m) for m ≤ m_max from the Nyström eigenvalues κ_i.
///
/// With det(1 - ξK) = Π(1 - ξκ_i), the m-th coefficient in (1 - ξ) at ξ = 1
/// is the probability of m successes among independent Bernoulli(κ_i)
/// trials, which the recursion `p_m ← p_m (1-κ) + p_{m-1} κ` accumulates with
/// only convex combinations.
pub fn counting_distribution(s: f64, m_max: usize, order: usize) -> Result<CountingDistribution> {
    if 4 * m_max > order {
        return Err(Error::Precondition(format!(
            "m_max = {m_max} exceeds order/4 = {}",
            order / 4
        )));
    }
    let kernel = build_kernel(s, order)?;
    let eigenvalues = kernel.eigenvalues()?;
    let mut p = vec![0.0; m_max + 1];
    p[0] = 1.0;
    for &k in &eigenvalues {
        for m in (1..=m_max).rev() {
            p[m] = p[m] * (1.0 - k) + p[m - 1] * k;
        }
        p[0] *= 1.0 - k;
    }
    for e in p.iter_mut() {
        if *e < 0.0 && *e >= -CLAMP_THRESHOLD {
            *e = 0.0;
        }
    }
    Ok(CountingDistribution {
        s,
        probabilities: p,
    })
}

/// Logarithmic derivatives of F₂ obtained from the discrete resolvent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventDiagnostics {
    /// ∂/∂s ln F₂ = R(s, s).
    pub dlnf2_ds: f64,
    /// ∂/∂γ ln F₂ = -(1/γ) ∫ R(λ, λ) dλ.
    pub dlnf2_dgamma: f64,
}

/// Resolvent identities for R = γK(1 - γK)⁻¹ at `0 < γ < 1`.
///
/// R(s, s) is evaluated off-grid by Nyström interpolation:
/// `R(s,s) = γK(s,s) + γ Σ_j w_j K(s, x_j) R(x_j, s)`.
pub fn resolvent_diagnostics(p: ThinningParams, order: usize) -> Result<ResolventDiagnostics> {
    if !(p.gamma > 0.0 && p.gamma < 1.0) {
        return Err(Error::domain(
            "resolvent_diagnostics",
            format!("gamma = {} must lie in (0, 1)", p.gamma),
        ));
    }
    let gamma = p.gamma;
    let kernel = build_kernel(p.s, order)?;
    let eig = kernel.eigen()?;
    let kappa = check_spectrum(eig.eigenvalues.iter().copied())?;
    let denom: Vec<f64> = kappa.iter().map(|k| 1.0 - gamma * k).collect();
    if let Some(d) = denom.iter().copied().find(|d| *d <= 1e-14) {
        return Err(Error::Numeric(format!(
            "1 - γK is numerically singular (smallest factor {d:e})"
        )));
    }

    let trace_resolvent: f64 = kappa.iter().zip(&denom).map(|(k, d)| k / d).sum();

    let at_s = airy(p.s)?;
    let k_col = DVector::from_iterator(
        order,
        kernel
            .airy_values
            .iter()
            .zip(&kernel.sqrt_weights)
            .map(|(a, sw)| sw * airy_kernel_from(a, &at_s)),
    );
    let projections = eig.eigenvectors.transpose() * &k_col;
    let quad: f64 = projections.iter().zip(&denom).map(|(c, d)| c * c / d).sum();
    let r_ss = gamma * airy_kernel_from(&at_s, &at_s) + gamma * gamma * quad;

    Ok(ResolventDiagnostics {
        dlnf2_ds: r_ss,
        dlnf2_dgamma: -trace_resolvent,
    })
}

//! Ablowitz–Segur solution of Painlevé II, `u'' = x u + 2u³` with
//! `u ~ √γ Ai(x)` as `x → +∞`, integrated leftward from an anchor `x0`.
//!
//! The trajectory carries three running integrals alongside `(u, u')`:
//! `∫_x^{x0} u`, `-∫_x^{x0} H` with `H = u'² - x u² - u⁴`, and `∫_x^{x0} u²`.
//! Beyond the anchor the integrals are closed with the linearized (Airy)
//! solution, whose error is quadratic in `√γ Ai(x0)`.

pub mod ode;

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::specfun::{airy, log_barnes_g_product};
use ode::{DenseStep, Settings, System};

/// Default anchor.
pub const X0: f64 = 10.0;
pub const DEFAULT_TOL: f64 = 1e-10;
/// Length of the quadrature window used for `∫_{x0}^∞ Ai`.
const AI_TAIL_WINDOW: f64 = 12.0;

const STATE_DIM: usize = 5;

struct AblowitzSegur;

impl System<STATE_DIM> for AblowitzSegur {
    fn rhs(&self, x: f64, y: &[f64; STATE_DIM]) -> [f64; STATE_DIM] {
        let [u, up, ..] = *y;
        let u2 = u * u;
        [
            up,
            x * u + 2.0 * u2 * u,
            -u,
            up * up - x * u2 - u2 * u2,
            -u2,
        ]
    }
}

/// Dense state at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PainleveState {
    pub x: f64,
    pub u: f64,
    pub u_prime: f64,
    /// ∫_x^{x0} u
    pub mu_partial: f64,
    /// -∫_x^{x0} H
    pub ln_f2_partial: f64,
    /// ∫_x^{x0} u²
    pub u2_partial: f64,
}

/// An immutable solution record on `[s_min, x0]`.
#[derive(Debug, Clone)]
pub struct PainleveTrajectory {
    gamma: f64,
    x0: f64,
    s_min: f64,
    tol: f64,
    steps: Vec<DenseStep<STATE_DIM>>,
    initial: [f64; STATE_DIM],
    mu_tail: f64,
    ln_f2_tail: f64,
    hamiltonian_tail: f64,
}

/// Solves from the default anchor.
pub fn solve_as(gamma: f64, s_min: f64, tol: f64) -> Result<PainleveTrajectory> {
    solve_as_from(gamma, s_min, tol, X0)
}

/// Solves from an explicit anchor `x0` (useful when `s` lies right of 10).
pub fn solve_as_from(gamma: f64, s_min: f64, tol: f64, x0: f64) -> Result<PainleveTrajectory> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::domain(
            "solve_as",
            format!("gamma = {gamma}: the Ablowitz–Segur route requires 0 <= gamma < 1"),
        ));
    }
    if !(tol > 0.0 && tol < 1e-2) {
        return Err(Error::domain(
            "solve_as",
            format!("tol = {tol} must lie in (0, 1e-2)"),
        ));
    }
    if !s_min.is_finite() || !x0.is_finite() || s_min > x0 {
        return Err(Error::domain(
            "solve_as",
            format!("need finite s_min <= x0, got s_min = {s_min}, x0 = {x0}"),
        ));
    }
    let a = airy(x0)?;
    let sg = gamma.sqrt();
    let initial = [sg * a.ai, sg * a.aip, 0.0, 0.0, 0.0];

    // ∫_x^∞ (t - x) Ai² = (2x² Ai² - 2x Ai'² - Ai Ai') / 3 and ∫_x^∞ Ai² = Ai'² - x Ai².
    let ln_f2_tail =
        -gamma * (2.0 * x0 * x0 * a.ai * a.ai - 2.0 * x0 * a.aip * a.aip - a.ai * a.aip) / 3.0;
    let hamiltonian_tail = gamma * (a.aip * a.aip - x0 * a.ai * a.ai);
    let rule = gauss_legendre(64)?;
    let mut ai_integral = 0.0;
    let (nodes, weights) = rule.mapped(x0, x0 + AI_TAIL_WINDOW);
    for (t, w) in nodes.iter().zip(&weights) {
        ai_integral += w * airy(*t)?.ai;
    }
    let mu_tail = sg * ai_integral;

    let steps = if gamma == 0.0 || s_min == x0 {
        Vec::new()
    } else {
        ode::integrate(&AblowitzSegur, x0, initial, s_min, Settings::with_tol(tol))?
    };
    Ok(PainleveTrajectory {
        gamma,
        x0,
        s_min,
        tol,
        steps,
        initial,
        mu_tail,
        ln_f2_tail,
        hamiltonian_tail,
    })
}

impl PainleveTrajectory {
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn x0(&self) -> f64 {
        self.x0
    }
    pub fn s_min(&self) -> f64 {
        self.s_min
    }
    pub fn tol(&self) -> f64 {
        self.tol
    }
    pub fn mu_tail(&self) -> f64 {
        self.mu_tail
    }
    pub fn ln_f2_tail(&self) -> f64 {
        self.ln_f2_tail
    }
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// `(x, u, u')` at every accepted step boundary, from `x0` leftward.
    pub fn samples(&self) -> Vec<(f64, f64, f64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push((self.x0, self.initial[0], self.initial[1]));
        for st in &self.steps {
            let y = st.eval(st.x_end());
            out.push((st.x_end(), y[0], y[1]));
        }
        out
    }

    fn check_range(&self, x: f64) -> Result<()> {
        if x.is_nan() || x < self.s_min || x > self.x0 {
            return Err(Error::Range(format!(
                "x = {x} outside the trajectory range [{}, {}]",
                self.s_min, self.x0
            )));
        }
        Ok(())
    }

    fn step_at(&self, x: f64) -> Option<&DenseStep<STATE_DIM>> {
        if self.steps.is_empty() {
            return None;
        }
        let i = self.steps.partition_point(|st| st.x_end() > x);
        Some(&self.steps[i.min(self.steps.len() - 1)])
    }

    fn raw(&self, x: f64) -> [f64; STATE_DIM] {
        match self.step_at(x) {
            Some(st) => st.eval(x),
            None => self.initial,
        }
    }

    pub fn state(&self, x: f64) -> Result<PainleveState> {
        self.check_range(x)?;
        let [u, up, m, l, p] = self.raw(x);
        Ok(PainleveState {
            x,
            u,
            u_prime: up,
            mu_partial: m,
            ln_f2_partial: l,
            u2_partial: p,
        })
    }

    pub fn u(&self, x: f64) -> Result<f64> {
        Ok(self.state(x)?.u)
    }

    /// ln F₂(s, γ) = -∫_s^∞ H.
    pub fn ln_f2(&self, s: f64) -> Result<f64> {
        Ok(self.state(s)?.ln_f2_partial + self.ln_f2_tail)
    }

    /// μ(s, γ) = ∫_s^∞ u.
    pub fn mu(&self, s: f64) -> Result<f64> {
        Ok(self.state(s)?.mu_partial + self.mu_tail)
    }

    /// `H = u'² - x u² - u⁴` from the pointwise state.
    pub fn hamiltonian(&self, x: f64) -> Result<f64> {
        let st = self.state(x)?;
        let u2 = st.u * st.u;
        Ok(st.u_prime * st.u_prime - x * u2 - u2 * u2)
    }

    /// `∫_x^∞ u²` from the accumulator, which equals `H(x)` analytically.
    pub fn u2_integral(&self, x: f64) -> Result<f64> {
        Ok(self.state(x)?.u2_partial + self.hamiltonian_tail)
    }

    /// `|u'' - x u - 2u³|` with `u''` taken from the dense interpolant of `u'`.
    pub fn ode_residual(&self, x: f64) -> Result<f64> {
        self.check_range(x)?;
        let Some(st) = self.step_at(x) else {
            return Ok(0.0);
        };
        let y = st.eval(x);
        let d = st.eval_derivative(x);
        Ok((d[1] - x * y[0] - 2.0 * y[0].powi(3)).abs())
    }
}

/// ln cosh(y), accurate near zero.
fn ln_cosh(y: f64) -> f64 {
    let s = (0.5 * y).sinh();
    (2.0 * s * s).ln_1p()
}

/// F₁, F₂, F₄ at one γ from a pair of trajectories (at γ and at γ̄ = 2γ - γ²).
#[derive(Debug, Clone)]
pub struct AsDistributions {
    gamma: f64,
    traj: PainleveTrajectory,
    traj_bar: PainleveTrajectory,
}

impl AsDistributions {
    /// Covers `[s_min, s_max]`; the anchor moves right of 10 if `s_max` needs it.
    pub fn new(gamma: f64, s_min: f64, s_max: f64, tol: f64) -> Result<Self> {
        let x0 = X0.max(s_max + 1.0);
        let gamma_bar = 2.0 * gamma - gamma * gamma;
        let (traj, traj_bar) = rayon::join(
            || solve_as_from(gamma, s_min, tol, x0),
            || solve_as_from(gamma_bar, s_min, tol, x0),
        );
        Ok(AsDistributions {
            gamma,
            traj: traj?,
            traj_bar: traj_bar?,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn trajectory(&self) -> &PainleveTrajectory {
        &self.traj
    }
    pub fn trajectory_bar(&self) -> &PainleveTrajectory {
        &self.traj_bar
    }

    pub fn ln_f2(&self, s: f64) -> Result<f64> {
        self.traj.ln_f2(s)
    }

    /// ln F₄ = ½ ln F₂ + ln cosh(μ/2).
    pub fn ln_f4(&self, s: f64) -> Result<f64> {
        Ok(0.5 * self.traj.ln_f2(s)? + ln_cosh(0.5 * self.traj.mu(s)?))
    }

    /// ln F₁ from F₁² = F₂(s, γ̄) (γ - 1 - cosh μ̄ + √γ̄ sinh μ̄) / (γ - 2).
    pub fn ln_f1(&self, s: f64) -> Result<f64> {
        let gamma_bar = self.traj_bar.gamma;
        let mu_bar = self.traj_bar.mu(s)?;
        let half = (0.5 * mu_bar).sinh();
        let excess = (2.0 * half * half - gamma_bar.sqrt() * mu_bar.sinh()) / (2.0 - self.gamma);
        if !(excess > -1.0) {
            return Err(Error::Numeric(format!(
                "F1 ratio nonpositive at s = {s}, gamma = {}: 1 + {excess} (mu_bar = {mu_bar}); \
                 tighten the tolerance",
                self.gamma
            )));
        }
        Ok(0.5 * (self.traj_bar.ln_f2(s)? + excess.ln_1p()))
    }

    pub fn ln_f(&self, beta: u8, s: f64) -> Result<f64> {
        match beta {
            1 => self.ln_f1(s),
            2 => self.ln_f2(s),
            4 => self.ln_f4(s),
            _ => Err(Error::domain(
                "ln_f",
                format!("beta = {beta} not in {{1, 2, 4}}"),
            )),
        }
    }

    pub fn f(&self, beta: u8, s: f64) -> Result<f64> {
        self.ln_f(beta, s).map(f64::exp)
    }
}

fn single(gamma: f64, s: f64) -> Result<AsDistributions> {
    AsDistributions::new(gamma, s.min(X0), s, DEFAULT_TOL)
}

/// F₂(s, γ) by the Painlevé route.
pub fn f2(s: f64, gamma: f64) -> Result<f64> {
    single(gamma, s)?.f(2, s)
}

/// F₄(s, γ) = √F₂ cosh(μ/2).
pub fn f4(s: f64, gamma: f64) -> Result<f64> {
    single(gamma, s)?.f(4, s)
}

/// F₁(s, γ) through the trajectory at γ̄ = 2γ - γ².
pub fn f1(s: f64, gamma: f64) -> Result<f64> {
    single(gamma, s)?.f(1, s)
}

/// Extrapolated limits as s → -∞ next to their closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TotalIntegralCheck {
    pub gamma: f64,
    /// Extrapolated ∫_{-∞}^∞ u.
    pub mu_lhs: f64,
    /// ½ ln((1+√γ)/(1-√γ)).
    pub mu_rhs: f64,
    /// Extrapolated lim [ln F₂ + (2v/3π)(-s)^{3/2} - (3v²/8π²) ln(-s)].
    pub constant_lhs: f64,
    /// (3v²/4π²) ln 2 + ln G(1+iv/2π)G(1-iv/2π).
    pub constant_rhs: f64,
}

/// Abscissae used by [`total_integral_check`].
pub const EXTRAPOLATION_POINTS: [f64; 3] = [-30.0, -40.0, -50.0];

/// Closed form of ∫_{-∞}^∞ u_AS.
pub fn total_integral(gamma: f64) -> f64 {
    gamma.sqrt().atanh()
}

/// Estimate of μ(-∞) from the state at `s`.
///
/// Integrating `u = (u'' - 2u³)/t` by parts twice gives
/// `μ(-∞) = μ(s) + u'(s)/s + u(s)/s² + 2∫_{-∞}^s (u/t³ - u³/t) dt`; the last
/// integral is O(|s|^{-9/4}) and is dropped. This removes the oscillating
/// O(|s|^{-3/4}) part of the raw remainder.
pub fn mu_limit_estimate(traj: &PainleveTrajectory, s: f64) -> Result<f64> {
    let st = traj.state(s)?;
    Ok(traj.mu(s)? + st.u_prime / s + st.u / (s * s))
}

/// `ln F₂ + (2v/3π)(-s)^{3/2} - (3v²/8π²) ln(-s)` at `s < 0`.
pub fn constant_term_quantity(traj: &PainleveTrajectory, s: f64) -> Result<f64> {
    let v = -(-traj.gamma).ln_1p();
    Ok(traj.ln_f2(s)? + 2.0 * v / (3.0 * PI) * (-s).powf(1.5)
        - 3.0 * v * v / (8.0 * PI * PI) * (-s).ln())
}

/// Estimate of the constant-term limit from the state at `s`.
///
/// The remainder of [`constant_term_quantity`] is led by an oscillation
/// `(H - (v/π)|s|^{1/2} ...)` integrated against a phase with frequency
/// `2|s|^{1/2}`; averaging over one full period of that oscillation
/// removes it to O(|s|^{-5/2}).
pub fn constant_term_estimate(traj: &PainleveTrajectory, s: f64) -> Result<f64> {
    let period = PI / (-s).sqrt();
    let rule = gauss_legendre(32)?;
    let (nodes, weights) = rule.mapped(s - 0.5 * period, s + 0.5 * period);
    let mut acc = 0.0;
    for (t, w) in nodes.iter().zip(&weights) {
        acc += w * constant_term_quantity(traj, *t)?;
    }
    Ok(acc / period)
}

/// Compares extrapolated total integrals with their closed forms.
pub fn total_integral_check(gamma: f64) -> Result<TotalIntegralCheck> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::domain(
            "total_integral_check",
            format!("gamma = {gamma} must lie in (0, 1)"),
        ));
    }
    let s_far = EXTRAPOLATION_POINTS
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let traj = solve_as(gamma, s_far - 1.0, 1e-12)?;
    let n = EXTRAPOLATION_POINTS.len() as f64;
    let mut mu_lhs = 0.0;
    let mut constant_lhs = 0.0;
    for &s in &EXTRAPOLATION_POINTS {
        mu_lhs += mu_limit_estimate(&traj, s)? / n;
        constant_lhs += constant_term_estimate(&traj, s)? / n;
    }
    let v = -(-gamma).ln_1p();
    Ok(TotalIntegralCheck {
        gamma,
        mu_lhs,
        mu_rhs: total_integral(gamma),
        constant_lhs,
        constant_rhs: 3.0 * v * v / (4.0 * PI * PI) * LN_2 + log_barnes_g_product(v)?,
    })
}

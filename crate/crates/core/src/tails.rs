//! Closed-form tail, Weibull and transition expansions.
//!
//! Every left-tail evaluator works in `v = -ln(1-γ)` and `t = (-s)^{3/2}`.

use std::f64::consts::{FRAC_PI_4, LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::{log_barnes_g_product, log_gamma, zeta_prime_minus_one};

/// Which expansion produced a [`TailEvaluation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TailName {
    F2Left,
    F1Left,
    F4Left,
    RightTail { beta: u8 },
    Weibull { beta: u8 },
    Transition,
    DlnF2Ds,
    Phase,
    UAsOscillatory,
}

/// Value of an expansion plus the error order it is claimed to carry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailEvaluation {
    pub name: TailName,
    pub value: f64,
    pub claimed_error_order: &'static str,
}

fn check_beta(func: &'static str, beta: u8) -> Result<()> {
    match beta {
        1 | 2 | 4 => Ok(()),
        _ => Err(Error::domain(
            func,
            format!("beta = {beta} not in {{1, 2, 4}}"),
        )),
    }
}

fn check_v(func: &'static str, v: f64) -> Result<()> {
    if !(v >= 0.0 && v.is_finite()) {
        return Err(Error::domain(
            func,
            format!("v = {v} must be finite and nonnegative"),
        ));
    }
    Ok(())
}

fn check_s_at_most(func: &'static str, s: f64, bound: f64) -> Result<()> {
    if !(s <= bound) {
        return Err(Error::domain(func, format!("s = {s} must be <= {bound}")));
    }
    Ok(())
}

/// `v = -ln(1-γ)`.
pub fn v_of_gamma(gamma: f64) -> f64 {
    -(-gamma).ln_1p()
}

/// `γ = 1 - e^{-v}`.
pub fn gamma_of_v(v: f64) -> f64 {
    -(-v).exp_m1()
}

/// Right-tail constants `c_β`.
pub fn c_beta(beta: u8) -> Result<f64> {
    check_beta("c_beta", beta)?;
    Ok(match beta {
        1 => 1.0 / (4.0 * PI.sqrt()),
        2 => 1.0 / (16.0 * PI),
        _ => 1.0 / (512.0 * PI),
    })
}

/// Weibull scale parameters `g_β`.
pub fn g_beta(beta: u8) -> Result<f64> {
    check_beta("g_beta", beta)?;
    Ok(if beta == 4 {
        1.0 / (3.0 * PI)
    } else {
        2.0 / (3.0 * PI)
    })
}

/// Left-tail constants `τ_β` of the unthinned laws.
pub fn tau_beta(beta: u8) -> Result<f64> {
    check_beta("tau_beta", beta)?;
    let z = zeta_prime_minus_one();
    Ok(match beta {
        1 => 2f64.powf(-11.0 / 48.0) * (0.5 * z).exp(),
        2 => 2f64.powf(1.0 / 24.0) * z.exp(),
        _ => 2f64.powf(-35.0 / 48.0) * (0.5 * z).exp(),
    })
}

fn left_leading(s: f64, v: f64, coef: f64, log_coef: f64) -> f64 {
    let t = (-s).powf(1.5);
    -coef * v / (3.0 * PI) * t + log_coef * v * v / (PI * PI) * (8.0 * t).ln()
}

/// ln F₂ for fixed v as s → -∞.
pub fn ln_f2_left(s: f64, v: f64) -> Result<TailEvaluation> {
    check_s_at_most("ln_f2_left", s, -1.0)?;
    check_v("ln_f2_left", v)?;
    Ok(TailEvaluation {
        name: TailName::F2Left,
        value: left_leading(s, v, 2.0, 0.25) + log_barnes_g_product(v)?,
        claimed_error_order: "O(v^3 |s|^{-3/2} + v |s|^{-1})",
    })
}

/// ln F₁ for fixed v as s → -∞.
pub fn ln_f1_left(s: f64, v: f64) -> Result<TailEvaluation> {
    check_s_at_most("ln_f1_left", s, -1.0)?;
    check_v("ln_f1_left", v)?;
    // ln(2/(1+e^v)) = -ln(1 + e^v) + ln 2, evaluated without overflow.
    let log_ratio = LN_2 - (v + (-v).exp().ln_1p());
    Ok(TailEvaluation {
        name: TailName::F1Left,
        value: left_leading(s, v, 2.0, 0.5)
            + 0.5 * log_barnes_g_product(2.0 * v)?
            + 0.5 * log_ratio,
        claimed_error_order: "O(|s|^{-3/4})",
    })
}

/// `ln(½ q^{1/4} + ½ q^{-1/4})` with `q = (1+√γ)/(1-√γ)`, `γ = 1 - e^{-v}`.
pub fn f4_bracket_log(v: f64) -> f64 {
    let r = gamma_of_v(v).sqrt();
    // ln q = 2 atanh(√γ); the bracket is cosh(ln q / 4).
    let y = 0.5 * r.atanh();
    let h = (0.5 * y).sinh();
    (2.0 * h * h).ln_1p()
}

/// ln F₄ for fixed v as s → -∞.
pub fn ln_f4_left(s: f64, v: f64) -> Result<TailEvaluation> {
    check_s_at_most("ln_f4_left", s, -1.0)?;
    check_v("ln_f4_left", v)?;
    Ok(TailEvaluation {
        name: TailName::F4Left,
        value: left_leading(s, v, 1.0, 0.125) + 0.5 * log_barnes_g_product(v)? + f4_bracket_log(v),
        claimed_error_order: "O(|s|^{-3/4})",
    })
}

/// `c_β γ^{β/2} s^{-3β/4} e^{-(2β/3) s^{3/2}}`, the leading deficit `1 - F_β`.
pub fn right_tail_deficit(s: f64, gamma: f64, beta: u8) -> Result<f64> {
    let b = beta as f64;
    Ok(c_beta(beta)?
        * gamma.powf(0.5 * b)
        * s.powf(-0.75 * b)
        * (-2.0 * b / 3.0 * s.powf(1.5)).exp())
}

/// `F_β(s, γ) ≈ 1 - c_β γ^{β/2} s^{-3β/4} e^{-(2β/3) s^{3/2}}` for s ≥ 1.
pub fn right_tail(s: f64, gamma: f64, beta: u8) -> Result<TailEvaluation> {
    if !(s >= 1.0 && s.is_finite()) {
        return Err(Error::domain("right_tail", format!("s = {s} must be >= 1")));
    }
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::domain(
            "right_tail",
            format!("gamma = {gamma} outside [0, 1]"),
        ));
    }
    Ok(TailEvaluation {
        name: TailName::RightTail { beta },
        value: 1.0 - right_tail_deficit(s, gamma, beta)?,
        claimed_error_order: "relative o(1) in the deficit",
    })
}

/// Limit of F_β(γ^{-2/3} s, γ) as γ ↓ 0.
pub fn weibull_limit(s: f64, beta: u8) -> Result<f64> {
    let g = g_beta(beta)?;
    if s.is_nan() {
        return Err(Error::domain("weibull_limit", "s is NaN".to_string()));
    }
    Ok(if s > 0.0 {
        1.0
    } else {
        (-g * (-s).powf(1.5)).exp()
    })
}

/// Number of correction factors kept for a given χ.
pub fn transition_terms(chi: f64) -> usize {
    if chi < -0.5 {
        0
    } else {
        // The unique integer in (χ + ½, χ + 3/2].
        (chi + 1.5).floor() as usize
    }
}

/// Factor `j!/√π 2^{-7j/2 - 9/4} (-s)^{-3j/2 - 3/4} e^{(2/3)√2 (-s)^{3/2} - v}`.
pub fn transition_correction(s: f64, v: f64, j: usize) -> f64 {
    let jf = j as f64;
    let log_fact: f64 = (1..=j).map(|k| (k as f64).ln()).sum();
    let x = -s;
    let log_term = log_fact - 0.5 * PI.ln()
        + (-3.5 * jf - 2.25) * LN_2
        + (-1.5 * jf - 0.75) * x.ln()
        + 2.0 / 3.0 * 2f64.sqrt() * x.powf(1.5)
        - v;
    log_term.exp()
}

/// ln F₂ in the regime where v grows like (2√2/3)(-s)^{3/2}.
pub fn transition_ln_f2(s: f64, v: f64, chi: f64) -> Result<TailEvaluation> {
    check_s_at_most("transition_ln_f2", s, -2.0)?;
    check_v("transition_ln_f2", v)?;
    if !chi.is_finite() {
        return Err(Error::domain(
            "transition_ln_f2",
            format!("chi = {chi} must be finite"),
        ));
    }
    let base = s.powi(3) / 12.0 - 0.25 * (-s).ln() + tau_beta(2)?.ln();
    let sum: f64 = (0..transition_terms(chi))
        .map(|j| transition_correction(s, v, j).ln_1p())
        .sum();
    Ok(TailEvaluation {
        name: TailName::Transition,
        value: base + sum,
        claimed_error_order: "o(1)",
    })
}

/// `arg Γ(-iv/2π)` on the continuous branch; shared by [`phase`] and
/// [`u_as_oscillatory`].
fn arg_gamma_minus_iv(v: f64) -> Result<f64> {
    Ok(log_gamma(Complex64::new(0.0, -v / (2.0 * PI)))?.arg())
}

/// φ(s) = (2/3)|s|^{3/2} - (v/2π) ln(8|s|^{3/2}) - arg Γ(-iv/2π).
///
/// At v = 0 the Gamma argument sits on a pole; only the leading term is
/// returned since every use multiplies the phase by an amplitude ∝ √v.
pub fn phase(s: f64, v: f64) -> Result<f64> {
    if !(s < 0.0) {
        return Err(Error::domain("phase", format!("s = {s} must be negative")));
    }
    check_v("phase", v)?;
    let t = (-s).powf(1.5);
    if v == 0.0 {
        return Ok(2.0 / 3.0 * t);
    }
    Ok(2.0 / 3.0 * t - v / (2.0 * PI) * (8.0 * t).ln() - arg_gamma_minus_iv(v)?)
}

/// Evaluation wrapper for [`phase`].
pub fn phase_evaluation(s: f64, v: f64) -> Result<TailEvaluation> {
    Ok(TailEvaluation {
        name: TailName::Phase,
        value: phase(s, v)?,
        claimed_error_order: "exact definition",
    })
}

/// ∂_s ln F₂ ≈ (v/π)|s|^{1/2} + (1/|s|)[-3v²/8π² + (v/4π) cos 2φ].
pub fn dlnf2_ds_expansion(s: f64, v: f64) -> Result<TailEvaluation> {
    check_s_at_most("dlnf2_ds_expansion", s, -5.0)?;
    check_v("dlnf2_ds_expansion", v)?;
    let a = -s;
    let value = if v == 0.0 {
        0.0
    } else {
        v / PI * a.sqrt()
            + (-3.0 * v * v / (8.0 * PI * PI) + v / (4.0 * PI) * (2.0 * phase(s, v)?).cos()) / a
    };
    Ok(TailEvaluation {
        name: TailName::DlnF2Ds,
        value,
        claimed_error_order: "O(|s|^{-5/2})",
    })
}

/// (-x)^{-1/4} √(v/π) cos((2/3)(-x)^{3/2} - (v/2π) ln(8(-x)^{3/2}) + π/4 - arg Γ(v/2πi)).
pub fn u_as_oscillatory(x: f64, v: f64) -> Result<TailEvaluation> {
    check_s_at_most("u_as_oscillatory", x, -5.0)?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::domain(
            "u_as_oscillatory",
            format!("v = {v} must be positive"),
        ));
    }
    let a = -x;
    let t = a.powf(1.5);
    // v/(2πi) = -iv/2π, so this is the same Gamma argument as in `phase`.
    let arg = 2.0 / 3.0 * t - v / (2.0 * PI) * (8.0 * t).ln() + FRAC_PI_4 - arg_gamma_minus_iv(v)?;
    Ok(TailEvaluation {
        name: TailName::UAsOscillatory,
        value: a.powf(-0.25) * (v / PI).sqrt() * arg.cos(),
        claimed_error_order: "O(|x|^{-1})",
    })
}

//! Airy function Ai and its derivative on the real line.
//!
//! Three regimes:
//!
//! * `|x| <= 8`: Maclaurin series `Ai = c1 f(x) - c2 g(x)` summed in
//!   double-double arithmetic. For positive `x` the two series cancel down to
//!   `Ai ~ exp(-2/3 x^{3/2})`, which costs about 13 digits at `x = 8`; the
//!   extended precision absorbs that.
//! * `x > 8`: the exponentially decaying Poincaré expansion truncated at its
//!   smallest term.
//! * `x < -8`: the modulus/phase form of the same expansion with the phase
//!   reduced modulo 2π in double-double.
//!
//! Both regimes are accurate across `8 <= |x| <= 10`, which the tests use as
//! an overlap window.

use super::ddouble::DD;
use crate::error::{Error, Result};

/// Ai(x) and Ai'(x) at a real argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryPair {
    pub x: f64,
    pub ai: f64,
    pub aip: f64,
    /// Set when Ai(x) (or Ai'(x)) underflowed to zero or a subnormal.
    pub underflow: bool,
}

/// Ai(0) = 1/(3^{2/3} Γ(2/3)).
const AI0: DD = DD::new(0.3550280538878172, 2.05233632436212e-17);
/// -Ai'(0) = 1/(3^{1/3} Γ(1/3)).
const MINUS_AIP0: DD = DD::new(0.2588194037928068, -2.522243111610832e-17);
const TWO_PI: DD = DD::new(std::f64::consts::TAU, 2.4492935982947064e-16);
const QUARTER_PI: DD = DD::new(std::f64::consts::FRAC_PI_4, 3.061616997868383e-17);
const TWO_THIRDS: DD = DD::new(0.6666666666666666, 3.700743415417188e-17);

/// Boundary between the series and the asymptotic regimes.
pub const SERIES_LIMIT: f64 = 8.0;
/// Largest accepted |x|. Beyond +2000 Ai is far below the smallest subnormal.
pub const MAX_ABS_ARG: f64 = 2000.0;

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

/// Evaluates Ai(x) and Ai'(x).
///
/// Returns a domain error for non-finite input or `x < -2000`. Large positive
/// arguments underflow gracefully: the values go to zero and `underflow` is set.
pub fn airy(x: f64) -> Result<AiryPair> {
    if !x.is_finite() {
        return Err(Error::domain("airy", format!("non-finite argument {x}")));
    }
    if x < -MAX_ABS_ARG {
        return Err(Error::domain(
            "airy",
            format!("argument {x} below -{MAX_ABS_ARG}"),
        ));
    }
    let (ai, aip) = if x.abs() <= SERIES_LIMIT {
        airy_series(x)
    } else if x > MAX_ABS_ARG {
        (0.0, -0.0)
    } else {
        airy_asymptotic(x)
    };
    let underflow = x > 0.0 && (!ai.is_normal() || !aip.is_normal());
    Ok(AiryPair {
        x,
        ai,
        aip,
        underflow,
    })
}

/// Maclaurin-series evaluation. Accurate for `|x| <= 10`.
pub fn airy_series(x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (AI0.to_f64(), -MINUS_AIP0.to_f64());
    }
    let x2 = DD::from_f64(x) * DD::from_f64(x);
    let x3 = x2.mul_f64(x);

    // f = Σ t_k,  f' = Σ a_k,  g = Σ s_k,  g' = Σ b_k
    let mut t = DD::from_f64(1.0);
    let mut f = t;
    let mut s = DD::from_f64(x);
    let mut g = s;
    let mut a = x2.div_f64(2.0);
    let mut fp = a;
    let mut b = DD::from_f64(1.0);
    let mut gp = b;

    for k in 1..400u32 {
        let kf = f64::from(k);
        t = (t * x3).div_f64((3.0 * kf - 1.0) * (3.0 * kf));
        s = (s * x3).div_f64((3.0 * kf) * (3.0 * kf + 1.0));
        b = (b * x3).div_f64((3.0 * kf - 2.0) * (3.0 * kf));
        f = f + t;
        g = g + s;
        gp = gp + b;
        // a_k is indexed from 1 so it trails the others by one step.
        a = (a * x3).div_f64((3.0 * kf) * (3.0 * kf + 2.0));
        fp = fp + a;

        let scale = f.hi.abs() + g.hi.abs() + fp.hi.abs() + gp.hi.abs();
        let tail = t.hi.abs() + s.hi.abs() + a.hi.abs() + b.hi.abs();
        if tail < 1e-34 * scale {
            break;
        }
    }
    let ai = AI0 * f - MINUS_AIP0 * g;
    let aip = AI0 * fp - MINUS_AIP0 * gp;
    (ai.to_f64(), aip.to_f64())
}

/// Coefficient pairs (u_k, v_k) of the large-argument expansions.
fn coefficient_pairs(max_k: usize) -> impl Iterator<Item = (f64, f64)> {
    let mut u = 1.0_f64;
    (0..=max_k).map(move |k| {
        if k > 0 {
            let kf = k as f64;
            u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
                / (216.0 * kf * (2.0 * kf - 1.0));
        }
        let kf = k as f64;
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        (u, v)
    })
}

/// 2/3 |x|^{3/2} in double-double.
fn zeta_dd(y: f64) -> DD {
    let root = DD::sqrt_f64(y);
    (root.mul_f64(y)) * TWO_THIRDS
}

/// Large-|x| expansion, truncated at the smallest term. Accurate for `|x| >= 8`.
pub fn airy_asymptotic(x: f64) -> (f64, f64) {
    let y = x.abs();
    let zeta_full = zeta_dd(y);
    let zeta = zeta_full.to_f64();
    let max_k = (2.0 * zeta).ceil() as usize + 2;

    if x > 0.0 {
        let mut su = 0.0;
        let mut sv = 0.0;
        let mut prev = f64::INFINITY;
        let mut zk = 1.0;
        let mut sign = 1.0;
        for (u, v) in coefficient_pairs(max_k) {
            let term = u / zk;
            if term > prev || term < 1e-18 {
                break;
            }
            su += sign * term;
            sv += sign * v / zk;
            prev = term;
            zk *= zeta;
            sign = -sign;
        }
        // Work with logarithms so intermediate exponentials cannot underflow
        // before the prefactor is applied.
        let ln_pref = -zeta - (2.0 * std::f64::consts::PI.sqrt()).ln();
        let ln_y4 = 0.25 * y.ln();
        let ai = (ln_pref - ln_y4).exp() * su;
        let aip = -(ln_pref + ln_y4).exp() * sv;
        (ai, aip)
    } else {
        // Ai(-y) = y^{-1/4}/sqrt(pi) [cos(θ) P_u + sin(θ) Q_u],  θ = ζ - π/4
        // Ai'(-y) = y^{1/4}/sqrt(pi) [sin(θ) P_v - cos(θ) Q_v]
        let (mut pu, mut qu, mut pv, mut qv) = (0.0, 0.0, 0.0, 0.0);
        let mut prev = f64::INFINITY;
        let mut zk = 1.0;
        for (k, (u, v)) in coefficient_pairs(max_k).enumerate() {
            let term = u / zk;
            if term > prev || term < 1e-18 {
                break;
            }
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 {
                pu += sign * term;
                pv += sign * v / zk;
            } else {
                qu += sign * term;
                qv += sign * v / zk;
            }
            prev = term;
            zk *= zeta;
        }
        let theta = zeta_full - QUARTER_PI;
        let turns = (theta.hi / TWO_PI.hi).round();
        let reduced = (theta - TWO_PI.mul_f64(turns)).to_f64();
        let (sn, cs) = reduced.sin_cos();
        let y4 = y.powf(0.25);
        let ai = FRAC_1_SQRT_PI / y4 * (cs * pu + sn * qu);
        let aip = FRAC_1_SQRT_PI * y4 * (sn * pv - cs * qv);
        (ai, aip)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // High-precision reference values (50-digit arithmetic).
    const REFERENCE: &[(f64, f64, f64)] = &[
        (-200.0, 0.148_893_942_483_810_25, -0.260_006_645_433_406),
        (-100.0, 0.176_753_393_239_552_9, -0.242_297_031_660_583_8),
        (-50.0, -0.161_881_423_612_320_9, 0.968_989_837_276_749_1),
        (-20.0, -0.176_406_127_077_984_7, 0.892_862_856_736_471_2),
        (-10.0, 0.040_241_238_486_443_19, 0.996_265_044_132_79),
        (-9.0, -0.022_133_721_547_341_404, -0.975_663_980_926_331_6),
        (-5.0, 0.350_761_009_024_114_3, 0.327_192_818_554_443_1),
        (0.5, 0.231_693_606_480_833_5, -0.224_910_532_664_683_9),
        (1.0, 0.135_292_416_312_881_4, -0.159_147_441_296_793_2),
        (2.0, 0.034_924_130_423_274_38, -0.053_090_384_433_653_63),
        (5.0, 1.083_444_281_360_744_2e-4, -2.474_138_908_684_625e-4),
        (8.0, 4.692_207_616_099_231_6e-8, -1.341_439_297_906_786_6e-7),
        (9.0, 2.471_168_430_872_49e-9, -7.480_641_389_658_946e-9),
        (
            10.0,
            1.104_753_255_289_868_6e-10,
            -3.520_633_676_738_924e-10,
        ),
        (14.0, 9.920_205_491_192_377e-17, -3.729_310_110_017_901e-16),
        (
            20.0,
            1.691_672_868_670_540_3e-27,
            -7.586_391_625_748_355e-27,
        ),
        (
            50.0,
            4.584_941_724_074_828_5e-104,
            -3.244_331_819_828_799e-103,
        ),
    ];

    #[test]
    fn origin_closed_form() {
        let p = airy(0.0).unwrap();
        assert_eq!(p.ai, 0.355_028_053_887_817_2);
        assert_eq!(p.aip, -0.258_819_403_792_806_8);
    }

    #[test]
    fn matches_reference_values() {
        for &(x, ai, aip) in REFERENCE {
            let p = airy(x).unwrap();
            // Relative to the local envelope on the oscillatory side.
            let (sa, sd) = if x < 0.0 {
                let y = -x;
                (
                    y.powf(-0.25) * FRAC_1_SQRT_PI,
                    y.powf(0.25) * FRAC_1_SQRT_PI,
                )
            } else {
                (ai.abs(), aip.abs())
            };
            assert!(
                (p.ai - ai).abs() <= 1e-12 * sa,
                "Ai({x}) = {} vs {ai}",
                p.ai
            );
            assert!(
                (p.aip - aip).abs() <= 1e-12 * sd,
                "Ai'({x}) = {} vs {aip}",
                p.aip
            );
        }
    }

    #[test]
    fn leading_decay_at_ten() {
        let x = 10.0_f64;
        let p = airy(x).unwrap();
        let lead =
            x.powf(-0.25) * (-2.0 / 3.0 * x.powf(1.5)).exp() / (2.0 * std::f64::consts::PI.sqrt());
        assert!((p.ai / lead - 1.0).abs() < 0.005);
    }

    #[test]
    fn graceful_underflow() {
        let p = airy(200.0).unwrap();
        assert_eq!(p.ai, 0.0);
        assert!(p.underflow);
        let p = airy(1e6).unwrap();
        assert_eq!(p.ai, 0.0);
        assert!(p.underflow);
        assert!(!airy(3.0).unwrap().underflow);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(airy(f64::NAN).is_err());
        assert!(airy(f64::NEG_INFINITY).is_err());
        assert!(airy(-2500.0).is_err());
    }

    #[test]
    fn regime_overlap_agreement() {
        let mut x = 8.0;
        while x <= 10.0 {
            for &arg in &[x, -x] {
                let (a1, d1) = airy_series(arg);
                let (a2, d2) = airy_asymptotic(arg);
                let (sa, sd) = if arg < 0.0 {
                    (arg.abs().powf(-0.25), arg.abs().powf(0.25))
                } else {
                    (a2.abs(), d2.abs())
                };
                assert!(
                    (a1 - a2).abs() <= 1e-12 * sa,
                    "Ai overlap at {arg}: {a1} vs {a2}"
                );
                assert!(
                    (d1 - d2).abs() <= 1e-12 * sd,
                    "Ai' overlap at {arg}: {d1} vs {d2}"
                );
            }
            x += 0.125;
        }
    }

    #[test]
    fn positive_axis_invariants() {
        let ai0 = airy(0.0).unwrap().ai;
        for i in 0..400 {
            let p = airy(i as f64 * 0.25).unwrap();
            if p.underflow {
                continue;
            }
            assert!(p.ai > 0.0 && p.ai <= ai0);
            assert!(p.aip < 0.0);
        }
    }

    #[test]
    fn derivative_consistency() {
        let h = 1e-5;
        let mut x = -10.0;
        while x <= 10.0 {
            let fd = (airy(x + h).unwrap().ai - airy(x - h).unwrap().ai) / (2.0 * h);
            let d = airy(x).unwrap().aip;
            assert!((fd - d).abs() < 1e-8, "x = {x}: fd {fd} vs {d}");
            x += 0.37;
        }
    }
}

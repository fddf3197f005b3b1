//! Independent oracles for the special functions and the determinant route.

use num_complex::Complex64;
use proptest::prelude::*;
use thinned_tw::fredholm::{
    counting_distribution, default_order, f2_determinant, ln_f2_determinant, resolvent_diagnostics,
    ThinningParams,
};
use thinned_tw::specfun::{airy, log_gamma, ZETA_PRIME_MINUS_ONE};

/// Unevaluated sum hi + lo, enough for a compensated series oracle.
#[derive(Clone, Copy)]
struct Dd(f64, f64);

impl Dd {
    fn add(self, o: Dd) -> Dd {
        let s = self.0 + o.0;
        let bb = s - self.0;
        let err = (self.0 - (s - bb)) + (o.0 - bb);
        let lo = err + self.1 + o.1;
        let hi = s + lo;
        Dd(hi, lo - (hi - s))
    }
    fn mul(self, o: Dd) -> Dd {
        let p = self.0 * o.0;
        let e = self.0.mul_add(o.0, -p);
        let lo = e + self.0 * o.1 + self.1 * o.0;
        let hi = p + lo;
        Dd(hi, lo - (hi - p))
    }
    fn div_f(self, d: f64) -> Dd {
        let q = self.0 / d;
        let r = Dd(self.0, self.1).add(Dd(-q * d, -q.mul_add(d, -(q * d))));
        let q2 = r.0 / d;
        let hi = q + q2;
        Dd(hi, q2 - (hi - q))
    }
}

/// Ai and Ai' from 200 Maclaurin terms summed in double-double.
fn airy_maclaurin_oracle(x: f64) -> (f64, f64) {
    // Ai(0) and -Ai'(0) to 34 digits, split into two doubles.
    let c1 = Dd(0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
    let c2 = Dd(0.258_819_403_792_806_8, -2.522_243_111_610_832e-17);
    let xd = Dd(x, 0.0);
    let x3 = xd.mul(xd).mul(xd);
    // f = Σ a_k, a_{k+1} = a_k x³ / ((3k+2)(3k+3)); g = Σ b_k, b_{k+1} = b_k x³ / ((3k+3)(3k+4)).
    let (mut a, mut b) = (Dd(1.0, 0.0), xd);
    let (mut f, mut g) = (Dd(0.0, 0.0), Dd(0.0, 0.0));
    // Derivatives: f' = Σ 3k a_k / x, g' = Σ (3k+1) b_k / x.
    let (mut fp, mut gp) = (Dd(0.0, 0.0), Dd(0.0, 0.0));
    for k in 0..200 {
        let kf = k as f64;
        f = f.add(a);
        g = g.add(b);
        if k > 0 {
            fp = fp.add(a.mul(Dd(3.0 * kf, 0.0)).div_f(x));
        }
        gp = gp.add(b.mul(Dd(3.0 * kf + 1.0, 0.0)).div_f(x));
        a = a.mul(x3).div_f((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        b = b.mul(x3).div_f((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
    }
    let neg = |d: Dd| Dd(-d.0, -d.1);
    let ai = c1.mul(f).add(neg(c2.mul(g)));
    let aip = c1.mul(fp).add(neg(c2.mul(gp)));
    (ai.0, aip.0)
}

#[test]
fn airy_at_minus_five_matches_series_oracle() {
    let (ai, aip) = airy_maclaurin_oracle(-5.0);
    // The oracle itself against 40-digit references.
    assert!((ai - 0.350_761_009_024_114_3).abs() < 1e-15);
    assert!((aip - 0.327_192_818_554_443_1).abs() < 1e-15);
    let got = airy(-5.0).unwrap();
    assert!(
        (got.ai - ai).abs() <= 1e-13 * ai.abs(),
        "{} vs {ai}",
        got.ai
    );
    assert!(
        (got.aip - aip).abs() <= 1e-13 * aip.abs(),
        "{} vs {aip}",
        got.aip
    );
}

#[test]
fn airy_series_oracle_on_a_grid() {
    for i in 0..=40 {
        // Offset grid: the derivative series divides by x.
        let x = -7.9 + 0.4 * i as f64;
        let (ai, aip) = airy_maclaurin_oracle(x);
        let got = airy(x).unwrap();
        let scale = ai.abs().max(aip.abs()).max(1e-3);
        assert!((got.ai - ai).abs() <= 1e-12 * scale, "Ai({x})");
        assert!((got.aip - aip).abs() <= 1e-12 * scale, "Ai'({x})");
    }
}

/// ln Γ(z) by eight upward shifts and a short Stirling series at z + 8.
fn log_gamma_oracle(z: Complex64) -> Complex64 {
    let w = z + 8.0;
    let inv = w.inv();
    let inv2 = inv * inv;
    let coef = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
    ];
    let series = inv
        * coef
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * inv2 + c);
    let stirling = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * std::f64::consts::PI).ln() + series;
    let shift: Complex64 = (0..8).map(|k| (z + k as f64).ln()).sum();
    stirling - shift
}

#[test]
fn log_gamma_matches_shift_and_recurse_oracle() {
    let z = Complex64::new(1.0, 1.0);
    let oracle = log_gamma_oracle(z);
    assert!(
        (oracle - Complex64::new(-0.650_923_199_301_856_3, -0.301_640_320_467_533_2)).norm()
            < 1e-14
    );
    assert!((log_gamma(z).unwrap().value - oracle).norm() < 1e-13);
    for (re, im) in [(0.5, 3.0), (2.5, -1.0), (1.0, 0.2), (4.0, 7.0)] {
        let z = Complex64::new(re, im);
        assert!(
            (log_gamma(z).unwrap().value - log_gamma_oracle(z)).norm() < 1e-12,
            "{z}"
        );
    }
}

/// ζ'(-1) from the Euler–Maclaurin representation of ζ(s), differentiated
/// term by term at s = -1.
fn zeta_prime_minus_one_oracle() -> f64 {
    let s = -1.0_f64;
    let n = 12.0_f64;
    let ln_n = n.ln();
    // Σ_{k<N} -ln k · k^{-s}
    let mut d: f64 = (1..12)
        .map(|k| -(k as f64).ln() * (k as f64).powf(-s))
        .sum();
    // d/ds [N^{1-s}/(s-1)]
    d += -ln_n * n.powf(1.0 - s) / (s - 1.0) - n.powf(1.0 - s) / ((s - 1.0) * (s - 1.0));
    // d/ds [N^{-s}/2]
    d += -0.5 * ln_n * n.powf(-s);
    // Σ_k B_{2k}/(2k)! · P_k(s) N^{-s-2k+1}, P_k(s) = Π_{j=0}^{2k-2} (s+j)
    let bernoulli = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
    ];
    let mut fact = 1.0;
    for (idx, b) in bernoulli.iter().enumerate() {
        let k = idx + 1;
        fact *= (2 * k - 1) as f64 * (2 * k) as f64;
        let factors: Vec<f64> = (0..(2 * k - 1)).map(|j| s + j as f64).collect();
        let p: f64 = factors.iter().product();
        let dp: f64 = (0..factors.len())
            .map(|skip| {
                factors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, f)| f)
                    .product::<f64>()
            })
            .sum();
        let pow = n.powf(-s - 2.0 * k as f64 + 1.0);
        d += b / fact * (dp - ln_n * p) * pow;
    }
    d
}

#[test]
fn zeta_prime_constant_matches_euler_maclaurin() {
    let oracle = zeta_prime_minus_one_oracle();
    assert!((oracle - ZETA_PRIME_MINUS_ONE).abs() < 1e-12, "{oracle}");
}

proptest! {
    #[test]
    fn log_gamma_conjugate_symmetry(re in -20.0f64..20.0, im in 0.01f64..30.0) {
        let z = Complex64::new(re, im);
        let a = log_gamma(z).unwrap().value;
        let b = log_gamma(z.conj()).unwrap().value;
        prop_assert!((a.conj() - b).norm() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn log_gamma_recursion(re in -15.0f64..15.0, im in 0.05f64..20.0) {
        let z = Complex64::new(re, im);
        let d = log_gamma(z + 1.0).unwrap().value - log_gamma(z).unwrap().value - z.ln();
        prop_assert!(d.norm() <= 1e-13 * (1.0 + log_gamma(z).unwrap().value.norm()));
    }

    #[test]
    fn airy_derivative_consistency(x in -10.0f64..10.0) {
        let h = 1e-5;
        let fd = (airy(x + h).unwrap().ai - airy(x - h).unwrap().ai) / (2.0 * h);
        prop_assert!((fd - airy(x).unwrap().aip).abs() <= 1e-8);
    }
}

#[test]
fn determinant_order_doubling_regression() {
    let p = ThinningParams::new(-2.0, 0.5).unwrap();
    let a = f2_determinant(p, 80).unwrap();
    let b = f2_determinant(p, 160).unwrap();
    assert!((a - b).abs() <= 1e-10);
    assert!((a - 0.703_131_932_842_287_5).abs() <= 1e-12, "{a}");
    for s in [-8.0, -4.0, 0.0, 2.0] {
        let n = default_order(s);
        let p = ThinningParams::new(s, 0.7).unwrap();
        let d = (f2_determinant(p, 2 * n).unwrap() - f2_determinant(p, n).unwrap()).abs();
        assert!(d <= 1e-9, "s {s}: {d:e}");
    }
}

#[test]
fn determinant_monotone_and_in_range() {
    for gamma in [0.1, 0.5, 0.9] {
        let mut prev = 0.0;
        for s in -8..=2 {
            let s = s as f64;
            let f =
                f2_determinant(ThinningParams::new(s, gamma).unwrap(), default_order(s)).unwrap();
            assert!(f > 0.0 && f <= 1.0);
            assert!(f >= prev);
            prev = f;
        }
    }
    for s in [-5.0, -1.0, 1.0] {
        let mut prev = 1.0;
        for gamma in [0.0, 0.2, 0.5, 0.8, 1.0] {
            let f =
                f2_determinant(ThinningParams::new(s, gamma).unwrap(), default_order(s)).unwrap();
            assert!(f <= prev);
            prev = f;
        }
    }
}

#[test]
fn counting_distribution_identities() {
    let s = -4.0;
    let n = default_order(s);
    let c = counting_distribution(s, 30, n).unwrap();
    let f = f2_determinant(ThinningParams::new(s, 0.3).unwrap(), n).unwrap();
    assert!((c.thinned_sum(0.3) - f).abs() <= 1e-8);
    let f1 = f2_determinant(ThinningParams::new(s, 1.0).unwrap(), n).unwrap();
    assert!((c.probabilities[0] - f1).abs() <= 1e-10);
    let c6 = counting_distribution(-6.0, 40, default_order(-6.0)).unwrap();
    assert!((c6.total() - 1.0).abs() <= 1e-8);
    assert!(c6.probabilities.iter().all(|p| *p >= 0.0));
}

#[test]
fn resolvent_derivatives_match_finite_differences() {
    let (s, gamma, h) = (-3.0, 0.5, 1e-5);
    let n = default_order(s);
    let r = resolvent_diagnostics(ThinningParams::new(s, gamma).unwrap(), n).unwrap();
    let lf = |s: f64, g: f64| ln_f2_determinant(ThinningParams::new(s, g).unwrap(), n).unwrap();
    let ds = (lf(s + h, gamma) - lf(s - h, gamma)) / (2.0 * h);
    let dg = (lf(s, gamma + h) - lf(s, gamma - h)) / (2.0 * h);
    assert!((r.dlnf2_ds - ds).abs() <= 1e-6, "{} vs {ds}", r.dlnf2_ds);
    assert!(
        (r.dlnf2_dgamma - dg).abs() <= 1e-6,
        "{} vs {dg}",
        r.dlnf2_dgamma
    );
}

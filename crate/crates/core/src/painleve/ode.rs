//! Dormand–Prince 5(4) with the standard fourth-order continuous extension.

use crate::error::{Error, Result};

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// Right-hand side of an autonomous-in-form system `y' = f(x, y)`.
pub trait System<const N: usize> {
    fn rhs(&self, x: f64, y: &[f64; N]) -> [f64; N];
}

/// Step-size and tolerance settings.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub rtol: f64,
    /// Absolute floor added to every component's error scale.
    pub atol: f64,
    pub h_max: f64,
    pub h_init: f64,
    pub max_steps: usize,
}

impl Settings {
    pub fn with_tol(tol: f64) -> Self {
        Settings {
            rtol: tol,
            atol: tol * 1e-25,
            h_max: 0.25,
            h_init: 1e-3,
            max_steps: 2_000_000,
        }
    }
}

/// One accepted step with the coefficients of its continuous extension.
#[derive(Debug, Clone)]
pub struct DenseStep<const N: usize> {
    pub x: f64,
    pub h: f64,
    coef: [[f64; N]; 5],
}

impl<const N: usize> DenseStep<N> {
    pub fn x_end(&self) -> f64 {
        self.x + self.h
    }

    /// Interpolated state at `x` (expected within the step).
    pub fn eval(&self, x: f64) -> [f64; N] {
        let th = (x - self.x) / self.h;
        let th1 = 1.0 - th;
        let [r1, r2, r3, r4, r5] = &self.coef;
        std::array::from_fn(|i| r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i]))))
    }

    /// x-derivative of the interpolant at `x`.
    pub fn eval_derivative(&self, x: f64) -> [f64; N] {
        let th = (x - self.x) / self.h;
        let th1 = 1.0 - th;
        let [_, r2, r3, r4, r5] = &self.coef;
        std::array::from_fn(|i| {
            let g = r3[i] + th * (r4[i] + th1 * r5[i]);
            let dg = r4[i] + (1.0 - 2.0 * th) * r5[i];
            let f = r2[i] + th1 * g;
            let df = -g + th1 * dg;
            (f + th * df) / self.h
        })
    }
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    std::array::from_fn(|i| y[i] + h * terms.iter().map(|(c, k)| c * k[i]).sum::<f64>())
}

/// Integrates from `x0` to `x_end` (either direction) and returns the dense
/// record of accepted steps.
pub fn integrate<const N: usize, S: System<N>>(
    system: &S,
    x0: f64,
    y0: [f64; N],
    x_end: f64,
    settings: Settings,
) -> Result<Vec<DenseStep<N>>> {
    let dir = if x_end >= x0 { 1.0 } else { -1.0 };
    let mut x = x0;
    let mut y = y0;
    let mut k1 = system.rhs(x, &y);
    let mut h = dir
        * settings
            .h_init
            .min((x_end - x0).abs())
            .max(f64::MIN_POSITIVE);
    let mut steps = Vec::new();
    let mut rejected_last = false;

    while (x_end - x) * dir > 0.0 {
        if steps.len() >= settings.max_steps {
            return Err(Error::Numeric(format!(
                "step budget of {} exhausted at x = {x}",
                settings.max_steps
            )));
        }
        if h.abs() < 1e-12 * (1.0 + x.abs()) {
            return Err(Error::StepCollapse { x, h: h.abs() });
        }
        if (x + h - x_end) * dir > 0.0 {
            h = x_end - x;
        }

        let k2 = system.rhs(x + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
        let k3 = system.rhs(x + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = system.rhs(
            x + C4 * h,
            &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
        );
        let k5 = system.rhs(
            x + C5 * h,
            &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = system.rhs(
            x + h,
            &axpy(
                &y,
                h,
                &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
            ),
        );
        let y_new = axpy(
            &y,
            h,
            &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
        );
        let k7 = system.rhs(x + h, &y_new);

        let mut err = 0.0_f64;
        for i in 0..N {
            let e =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = settings.atol + settings.rtol * y[i].abs().max(y_new[i].abs());
            err = err.max((e / sc).abs());
        }
        if !err.is_finite() {
            h *= 0.2;
            rejected_last = true;
            continue;
        }

        if err <= 1.0 {
            let r2: [f64; N] = std::array::from_fn(|i| y_new[i] - y[i]);
            let r3: [f64; N] = std::array::from_fn(|i| h * k1[i] - r2[i]);
            let r4: [f64; N] = std::array::from_fn(|i| r2[i] - h * k7[i] - r3[i]);
            let r5: [f64; N] = std::array::from_fn(|i| {
                h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i])
            });
            steps.push(DenseStep {
                x,
                h,
                coef: [y, r2, r3, r4, r5],
            });
            x += h;
            y = y_new;
            k1 = k7;
            let mut fac = 0.9 * err.max(1e-10).powf(-0.2);
            if rejected_last {
                fac = fac.min(1.0);
            }
            h *= fac.clamp(0.2, 5.0);
            rejected_last = false;
        } else {
            h *= (0.9 * err.powf(-0.2)).clamp(0.1, 0.9);
            rejected_last = true;
        }
        if h.abs() > settings.h_max {
            h = dir * settings.h_max;
        }
    }
    Ok(steps)
}

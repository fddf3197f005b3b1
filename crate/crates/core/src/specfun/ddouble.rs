//! Minimal double-double arithmetic (an unevaluated sum `hi + lo` with
//! `|lo| <= ulp(hi)/2`), enough to sum cancelling power series to ~32 digits.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DD {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DD {
    pub const ZERO: DD = DD { hi: 0.0, lo: 0.0 };

    pub const fn new(hi: f64, lo: f64) -> Self {
        DD { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        DD { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn mul_f64(self, b: f64) -> DD {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> DD {
        let q1 = self.hi / b;
        let r = self - DD::from_f64(b).mul_f64(q1);
        let q2 = r.hi / b;
        let r = r - DD::from_f64(b).mul_f64(q2);
        let q3 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        DD { hi, lo } + DD::from_f64(q3)
    }

    /// Square root of a non-negative f64 as a double-double.
    pub fn sqrt_f64(x: f64) -> DD {
        let s = x.sqrt();
        if s == 0.0 {
            return DD::ZERO;
        }
        let r = (-s).mul_add(s, x);
        DD::from_f64(s) + DD::from_f64(r / (2.0 * s))
    }
}

impl Add for DD {
    type Output = DD;
    fn add(self, b: DD) -> DD {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        DD { hi, lo }
    }
}

impl Neg for DD {
    type Output = DD;
    fn neg(self) -> DD {
        DD {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DD {
    type Output = DD;
    fn sub(self, b: DD) -> DD {
        self + (-b)
    }
}

impl Mul for DD {
    type Output = DD;
    fn mul(self, b: DD) -> DD {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_times_three_is_one() {
        let third = DD::from_f64(1.0).div_f64(3.0);
        let one = third.mul_f64(3.0);
        assert!((one - DD::from_f64(1.0)).to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_two_squared() {
        let r = DD::sqrt_f64(2.0);
        let sq = r * r;
        assert!((sq - DD::from_f64(2.0)).to_f64().abs() < 1e-30);
    }

    #[test]
    fn cancellation_is_recovered() {
        // (1e16 + 1) - 1e16 loses the 1 in plain f64.
        let a = DD::from_f64(1e16) + DD::from_f64(1.0);
        let b = a - DD::from_f64(1e16);
        assert_eq!(b.to_f64(), 1.0);
    }
}

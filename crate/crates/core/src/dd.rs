//! Double-double arithmetic, just enough for large phase reduction.
//!
//! A [`Dd`] is an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const LN2: Dd = Dd::new(std::f64::consts::LN_2, 2.3190468138462996e-17);
pub const PI: Dd = Dd::new(std::f64::consts::PI, 1.2246467991473532e-16);
pub const TWO_PI: Dd = Dd::new(std::f64::consts::TAU, 2.4492935982947064e-16);
pub const LN_2PI: Dd = Dd::new(1.8378770664093456, -7.756588316134483e-17);

#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let r = self - Dd::from_f64(b).mul_f64(q1);
        let q2 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    /// Exact scaling by a power of two.
    pub fn ldexp(self, k: i32) -> Dd {
        let f = 2f64.powi(k);
        Dd { hi: self.hi * f, lo: self.lo * f }
    }

    pub fn exp(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::from_f64(1.0);
        }
        const SQUARINGS: i32 = 5;
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2.mul_f64(k)).ldexp(-SQUARINGS);
        // |r| < 0.011, fourteen terms reach 1e-32
        let mut sum = Dd::from_f64(1.0);
        let mut term = Dd::from_f64(1.0);
        for j in 1..=14 {
            term = (term * r).div_f64(j as f64);
            sum = sum + term;
        }
        for _ in 0..SQUARINGS {
            sum = sum * sum;
        }
        sum.ldexp(k as i32)
    }

    /// Natural log of a positive double, Newton-polished to double-double accuracy.
    pub fn ln(x: f64) -> Dd {
        debug_assert!(x > 0.0);
        let mut y = Dd::from_f64(x.ln());
        if x == 1.0 {
            return Dd::from_f64(0.0);
        }
        for _ in 0..2 {
            let corr = (-y).exp().mul_f64(x) - Dd::from_f64(1.0);
            y = y + corr;
        }
        y
    }

    /// Reduce into `[-pi, pi]` and round to double.
    pub fn rem_two_pi(self) -> f64 {
        let k = (self.hi / TWO_PI.hi).round();
        (self - TWO_PI.mul_f64(k)).to_f64()
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_two_matches_constant() {
        let l = Dd::ln(2.0);
        assert_eq!(l.hi, LN2.hi);
        assert!((l.lo - LN2.lo).abs() < 1e-31);
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[3.0, 17.0, 12615.0, 0.125, 1e9] {
            let y = Dd::ln(x).exp() - Dd::from_f64(x);
            assert!(y.to_f64().abs() <= x * 1e-30, "x={x} resid={:?}", y);
        }
    }

    #[test]
    fn ln_two_pi_constant_consistent() {
        let l = Dd::ln(TWO_PI.hi) + Dd::from_f64(TWO_PI.lo / TWO_PI.hi);
        assert!((l - LN_2PI).to_f64().abs() < 1e-30);
    }

    #[test]
    fn reduction_of_large_multiple() {
        let x = TWO_PI.mul_f64(123456789.0) + Dd::from_f64(0.5);
        assert!((x.rem_two_pi() - 0.5).abs() < 1e-15);
    }
}

//! Scalar building blocks: the grid quantities `N`, `p`, `omega`, the phase `theta`,
//! the scale factors `F` and `f`, a truncated Stirling series and the merged `1/t`
//! error terms.

use crate::oracle;
use crate::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::{E, PI};
use std::sync::atomic::{AtomicBool, Ordering};

const TWO_PI: f64 = 2.0 * PI;

/// `s = 1/2 + epsilon + i t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StripPoint {
    pub t: f64,
    pub epsilon: f64,
}

impl StripPoint {
    /// Hard checks only: `t > 0`, `|epsilon| <= 1`. Below `t = 20` the formula is
    /// usable but outside its guaranteed range, which is logged.
    pub fn new(t: f64, epsilon: f64) -> Result<Self> {
        check_t(t)?;
        if !epsilon.is_finite() || epsilon.abs() > 1.0 {
            return Err(Error::domain(format!("epsilon must lie in [-1, 1], got {epsilon}")));
        }
        if t < 20.0 {
            static WARNED: AtomicBool = AtomicBool::new(false);
            if !WARNED.swap(true, Ordering::Relaxed) {
                log::warn!("t = {t} is below 20, where accuracy is not guaranteed (reported once)");
            }
        }
        Ok(StripPoint { t, epsilon })
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(0.5 + self.epsilon, self.t)
    }
}

/// Log-space value that may sit exactly on a zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogValue {
    Finite(Complex64),
    AtZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridQuantities {
    pub n: usize,
    pub p: f64,
    pub omega: f64,
    pub a_mod: f64,
}

pub(crate) fn check_t(t: f64) -> Result<()> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::domain(format!("t must be finite and positive, got {t}")));
    }
    Ok(())
}

/// `N = floor(sqrt(t / 2pi))`, `p` its fractional part, `omega = sqrt(2pi / t)`.
///
/// The square root is carried with one correction term so that `t` within rounding
/// of a lattice point `2 pi k^2` is classified by its true side. The double nearest
/// `2 pi` is taken as exact, so `t = 2 pi` gives `N = 1`, `p = 0`.
pub fn grid_quantities(t: f64) -> Result<GridQuantities> {
    check_t(t)?;
    let q = t / TWO_PI;
    let q_lo = (-q).mul_add(TWO_PI, t) / TWO_PI;
    let s = q.sqrt();
    let s_lo = ((-s).mul_add(s, q) + q_lo) / (2.0 * s);
    let mut n = s.floor();
    let mut p = (s - n) + s_lo;
    if p < 0.0 {
        n -= 1.0;
        // p + 1 can round up to exactly 1 when p was a tiny negative
        p = (p + 1.0).min(1.0 - f64::EPSILON / 2.0);
    } else if p >= 1.0 {
        n += 1.0;
        p -= 1.0;
    }
    Ok(GridQuantities {
        n: n as usize,
        p,
        omega: (TWO_PI / t).sqrt(),
        a_mod: (TWO_PI * t).sqrt(),
    })
}

/// `theta_1(t) = (t/2) ln(t / (2 pi e)) - pi/8`.
pub fn theta1(t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(0.5 * t * (t / (TWO_PI * E)).ln() - PI / 8.0)
}

/// `theta_1(t) + 1/(48 t) + 7/(5760 t^3)`.
pub fn theta(t: f64) -> Result<f64> {
    Ok(theta1(t)? + theta_correction(t))
}

pub(crate) fn theta_correction(t: f64) -> f64 {
    1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t)
}

/// `F(t) = (pi/2)^{1/4} t^{7/4} e^{-pi t / 4}`. Underflows to zero near `t = 950`;
/// use [`log_scale_factor`] for ratios.
pub fn scale_factor(t: f64) -> Result<f64> {
    check_t(t)?;
    Ok((PI / 2.0).powf(0.25) * t.powf(1.75) * (-PI * t / 4.0).exp())
}

pub fn log_scale_factor(t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(0.75 * (t / 2.0).ln() + 0.5 * TWO_PI.ln() - 0.25 * PI.ln() - PI / 4.0 * t + t.ln())
}

/// `f(t) = (1/2) pi^{-1/4} (t^2 + 1/4) |Gamma(1/4 + i t/2)|`, via the oracle's log-gamma.
pub fn scale_factor_small(t: f64) -> Result<f64> {
    Ok(log_scale_factor_small(t)?.exp())
}

pub fn log_scale_factor_small(t: f64) -> Result<f64> {
    check_t(t)?;
    let lg = oracle::log_gamma_ref(Complex64::new(0.25, t / 2.0))?;
    Ok((0.5f64).ln() - 0.25 * PI.ln() + (t * t + 0.25).ln() + lg.re)
}

/// B_2 .. B_12.
const BERNOULLI: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

pub const STIRLING_MAX_K: usize = 6;

fn check_stirling(z: Complex64, k: usize) -> Result<()> {
    if k == 0 || k > STIRLING_MAX_K {
        return Err(Error::arg(format!("Stirling order K must be in 1..={STIRLING_MAX_K}, got {k}")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain("non-finite Stirling argument"));
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::domain(format!("Stirling series undefined on the cut, z = {z}")));
    }
    Ok(())
}

/// `ln Gamma(z + 1)` from the Stirling series with `K - 1` Bernoulli terms.
pub fn stirling_log_gamma(z: Complex64, k: usize) -> Result<Complex64> {
    check_stirling(z, k)?;
    let ln_z = z.ln();
    let mut acc = (z + 0.5) * ln_z - z + 0.5 * TWO_PI.ln();
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pw = inv;
    for (j, b) in BERNOULLI.iter().enumerate().take(k - 1) {
        let m = 2.0 * (j + 1) as f64;
        acc += pw * (b / (m * (m - 1.0)));
        pw *= inv2;
    }
    Ok(acc)
}

/// `|B_2K / (2K (2K-1) z^{2K-1})| / cos(arg z / 2)^{2K}`, the Stieltjes bound on the
/// truncation error of [`stirling_log_gamma`].
pub fn stirling_remainder_bound(z: Complex64, k: usize) -> Result<f64> {
    check_stirling(z, k)?;
    let m = 2.0 * k as f64;
    let b = BERNOULLI[k - 1].abs();
    let c = (z.arg() / 2.0).cos();
    Ok(b / (m * (m - 1.0) * z.norm().powf(m - 1.0)) / c.powf(m))
}

/// Leading `1/t` imaginary error term; `sign = +1` or `-1`.
pub fn err_series_im(t: f64, epsilon: f64, sign: i32) -> Result<f64> {
    check_t(t)?;
    let e = epsilon;
    match sign {
        1 => Ok((1.0 - 84.0 * e + 10.0 * e * e) / (48.0 * t)),
        -1 => Ok(-(1.0 + 108.0 * e - 12.0 * e * e) / (48.0 * t)),
        _ => Err(Error::arg(format!("sign must be +1 or -1, got {sign}"))),
    }
}

/// Leading `1/t^2` real error term; `sign = +1` or `-1`.
pub fn err_series_re(t: f64, epsilon: f64, sign: i32) -> Result<f64> {
    check_t(t)?;
    let e = epsilon;
    let t2 = 96.0 * t * t;
    match sign {
        1 => Ok((27.0 + 94.0 * e + 84.0 * e * e + 8.0 * e * e * e) / t2),
        -1 => Ok((27.0 - 22.0 * e + 36.0 * e * e - 8.0 * e * e * e) / t2),
        _ => Err(Error::arg(format!("sign must be +1 or -1, got {sign}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_at_two_pi() {
        let g = grid_quantities(TWO_PI).unwrap();
        assert_eq!(g.n, 1);
        assert_eq!(g.p, 0.0);
        assert_eq!(g.omega, 1.0);
    }

    #[test]
    fn grid_rejects_bad_t() {
        for t in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(grid_quantities(t).is_err());
        }
    }

    #[test]
    fn theta_trivial_points() {
        assert!((theta1(TWO_PI * E).unwrap() + PI / 8.0).abs() < 1e-15);
        assert!((theta1(TWO_PI).unwrap() + PI + PI / 8.0).abs() < 1e-14);
    }

    #[test]
    fn err_series_constant_terms() {
        let t = 1234.5;
        assert_eq!(err_series_im(t, 0.0, 1).unwrap(), 1.0 / (48.0 * t));
        assert_eq!(err_series_im(t, 0.0, -1).unwrap(), -1.0 / (48.0 * t));
        assert!(err_series_im(t, 0.0, 0).is_err());
        assert_eq!(err_series_re(100.0, 0.0, 1).unwrap(), 27.0 / 960000.0);
    }

    #[test]
    fn stirling_order_limits() {
        let z = Complex64::new(3.0, 1.0);
        assert!(stirling_log_gamma(z, 0).is_err());
        assert!(stirling_log_gamma(z, 7).is_err());
        assert!(stirling_log_gamma(Complex64::new(-2.0, 0.0), 3).is_err());
    }
}

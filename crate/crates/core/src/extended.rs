//! Extended `Z(t, eps)`: hyperbolic main sums plus the remainder `R_M`.
//!
//! ```text
//! Z(t, eps) = 2 sum_{n <= N} [cosh(eps L_n) cos(phi_n) + i sinh(eps L_n) sin(phi_n)] / sqrt(n) + R_M
//! L_n = ln sqrt(t / (2 pi n^2)),  phi_n = theta_1(t) - t ln n
//! ```

use crate::dd::{self, Dd};
use crate::remainder::{check_order, remainder_from_grid};
use crate::scalar::{grid_quantities, log_scale_factor, theta1, theta_correction, LogValue, StripPoint};
use crate::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;
use std::sync::atomic::{AtomicBool, Ordering};

/// Above this `t` phases are formed and reduced in double-double.
pub const DD_PHASE_THRESHOLD: f64 = 1.0e7;

/// Phase used in the main sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    /// `theta_1(t)`, the closed form without `1/t` corrections.
    #[default]
    Theta1,
    /// `theta_1(t) + 1/(48 t) + 7/(5760 t^3)`.
    ThetaCorrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct ZOptions {
    pub phase: Phase,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZEvaluation {
    pub point: StripPoint,
    pub n: usize,
    pub p: f64,
    pub omega: f64,
    pub main_sum: Complex64,
    pub remainder: Complex64,
    pub z: Complex64,
    pub remainder_order: usize,
}

pub fn z_ext(t: f64, epsilon: f64, m: usize) -> Result<ZEvaluation> {
    z_ext_with(t, epsilon, m, ZOptions::default())
}

pub fn z_ext_with(t: f64, epsilon: f64, m: usize, opts: ZOptions) -> Result<ZEvaluation> {
    let point = StripPoint::new(t, epsilon)?;
    check_order(m, epsilon)?;
    if m == 1 && epsilon.abs() > 0.5 {
        static WARNED: AtomicBool = AtomicBool::new(false);
        if !WARNED.swap(true, Ordering::Relaxed) {
            log::warn!("M = 1 with |epsilon| = {} > 0.5 is outside the bounded range (reported once)", epsilon.abs());
        }
    }
    let g = grid_quantities(t)?;
    let main_sum = main_sum(t, epsilon, g.n, opts.phase)?;
    let remainder = remainder_from_grid(g.n, g.p, g.omega, epsilon, m)?;
    Ok(ZEvaluation {
        point,
        n: g.n,
        p: g.p,
        omega: g.omega,
        main_sum,
        remainder,
        z: main_sum + remainder,
        remainder_order: m,
    })
}

fn main_sum(t: f64, epsilon: f64, n_terms: usize, phase: Phase) -> Result<Complex64> {
    let corr = match phase {
        Phase::Theta1 => 0.0,
        Phase::ThetaCorrected => theta_correction(t),
    };
    let half_log = 0.5 * (t / (2.0 * PI)).ln();
    let mut re = 0.0;
    let mut im = 0.0;
    if t <= DD_PHASE_THRESHOLD {
        let th = theta1(t)? + corr;
        for n in 1..=n_terms {
            let ln_n = (n as f64).ln();
            let (sn, cs) = (th - t * ln_n).sin_cos();
            let x = epsilon * (half_log - ln_n);
            let w = 1.0 / (n as f64).sqrt();
            re += x.cosh() * cs * w;
            im += x.sinh() * sn * w;
        }
    } else {
        // theta_1 = (t/2)(ln t - ln 2pi - 1) - pi/8
        let th = (Dd::ln(t) - dd::LN_2PI - Dd::from_f64(1.0)).mul_f64(0.5 * t)
            - Dd::new(dd::PI.hi / 8.0, dd::PI.lo / 8.0)
            + Dd::from_f64(corr);
        for n in 1..=n_terms {
            let ln_n = Dd::ln(n as f64);
            let (sn, cs) = (th - ln_n.mul_f64(t)).rem_two_pi().sin_cos();
            let x = epsilon * (half_log - ln_n.hi);
            let w = 1.0 / (n as f64).sqrt();
            re += x.cosh() * cs * w;
            im += x.sinh() * sn * w;
        }
    }
    Ok(Complex64::new(2.0 * re, 2.0 * im))
}

/// Classical `Z(t)`, the real part of [`z_ext`] on the critical line.
pub fn z_classic(t: f64, m: usize) -> Result<f64> {
    Ok(z_ext(t, 0.0, m)?.z.re)
}

/// `e^{i pi eps / 4} Z(t, eps)`, whose real and imaginary zero sets track those of
/// `-xi(1/2 + eps + i t)`.
pub fn xi_scaled(t: f64, epsilon: f64, m: usize) -> Result<Complex64> {
    xi_scaled_with(t, epsilon, m, ZOptions::default())
}

pub fn xi_scaled_with(t: f64, epsilon: f64, m: usize, opts: ZOptions) -> Result<Complex64> {
    let z = z_ext_with(t, epsilon, m, opts)?.z;
    Ok(rotate(z, epsilon))
}

fn rotate(z: Complex64, epsilon: f64) -> Complex64 {
    if epsilon == 0.0 {
        return z;
    }
    z * Complex64::from_polar(1.0, PI * epsilon / 4.0)
}

/// `ln(-xi(1/2 + eps + i t))` reconstructed as `ln F(t) + ln(e^{i pi eps/4} Z)`.
pub fn xi_log(t: f64, epsilon: f64, m: usize) -> Result<LogValue> {
    let x = xi_scaled(t, epsilon, m)?;
    if x == Complex64::new(0.0, 0.0) {
        return Ok(LogValue::AtZero);
    }
    Ok(LogValue::Finite(Complex64::new(log_scale_factor(t)? + x.norm().ln(), x.arg())))
}

/// Central-difference Cauchy-Riemann residuals of `Z` viewed as a function of
/// `t - i eps`: `(dIm/deps + dRe/dt, dRe/deps - dIm/dt)`.
pub fn cauchy_riemann_residual(t: f64, epsilon: f64, dt: f64, de: f64, m: usize) -> Result<(f64, f64)> {
    if !(dt > 0.0 && dt < t) {
        return Err(Error::domain(format!("need 0 < dt < t, got dt = {dt}")));
    }
    if !(de > 0.0 && de < 1.0) {
        return Err(Error::domain(format!("need 0 < de < 1, got de = {de}")));
    }
    let z = |tt: f64, ee: f64| z_ext(tt, ee, m).map(|e| e.z);
    let zt = (z(t + dt, epsilon)? - z(t - dt, epsilon)?) / (2.0 * dt);
    let ze = (z(t, epsilon + de)? - z(t, epsilon - de)?) / (2.0 * de);
    Ok((ze.im + zt.re, ze.re - zt.im))
}

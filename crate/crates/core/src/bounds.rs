//! Upper bounds on the path integrals dropped from the remainder, relative to the
//! leading remainder term at `p = 1/2`.
//!
//! The steepest-descent path is split at a parameter `r` in `(1, 2]`; `K0(r)` and
//! `K2(r)` are the (negative) exponential rates on the outer segments.
//!
//! A further spurious contribution from the inner segment is estimated in the
//! literature at roughly 0.003 of the remainder; it needs contour-segment integrals
//! and is not computed here.

use crate::psi::psi;
use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::{PI, SQRT_2};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub t: f64,
    pub epsilon: f64,
    pub r: f64,
    pub k0: f64,
    pub k2: f64,
    pub ub_l0: f64,
    pub ub_l2: f64,
    pub ub_l3: f64,
    /// `ub_l0 + ub_l2 + ub_l3`.
    pub ratio: f64,
}

fn check_r(r: f64) -> Result<()> {
    if !(r > 1.0 && r <= 2.0) {
        return Err(Error::domain(format!("r must lie in (1, 2], got {r}")));
    }
    Ok(())
}

fn check_args(t: f64, epsilon: f64, r: f64) -> Result<()> {
    check_r(r)?;
    if !(t.is_finite() && t > 10.0) {
        return Err(Error::domain(format!("bounds need t > 10, got {t}")));
    }
    if !(-0.5..=0.5).contains(&epsilon) {
        return Err(Error::domain(format!("bounds need epsilon in [-1/2, 1/2], got {epsilon}")));
    }
    Ok(())
}

pub fn k0(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok((1.0 / (r * SQRT_2 + 1.0)).atan() - 1.0 / (r * SQRT_2))
}

pub fn k2(r: f64) -> Result<f64> {
    check_r(r)?;
    Ok(-((1.0 / (SQRT_2 * r - 1.0)).atan() - 1.0 / (SQRT_2 * r)))
}

/// `R_0(t)` at `p = 1/2`: `(2 pi / t)^{1/4} psi(1/2)`.
fn r0_half(t: f64) -> Result<f64> {
    Ok((2.0 * PI / t).powf(0.25) * psi(0.5)?)
}

pub fn upper_bound_l0(t: f64, epsilon: f64, r: f64) -> Result<f64> {
    check_args(t, epsilon, r)?;
    let num = 2.0 * SQRT_2 * (k0(r)? * t).exp();
    let den = (2.0 * PI).sqrt().powf((1.0 + epsilon) / 2.0) * (2.0 * PI * t).powf(0.25);
    Ok(num / den / r0_half(t)?)
}

/// The bound on the `L_0` segment before the final simplification, which still
/// carries the `1 / (1 - e^{-sqrt(pi t)/r})` geometric factor and the full
/// `(2 pi)^{(1+eps)/2}`.
pub fn upper_bound_l0_intermediate(t: f64, epsilon: f64, r: f64) -> Result<f64> {
    check_args(t, epsilon, r)?;
    let num = 2.0 * SQRT_2 * (k0(r)? * t).exp() * (2.0 * PI * t).powf(-0.25);
    let den = (2.0 * PI).powf((1.0 + epsilon) / 2.0) * (1.0 - (-(PI * t).sqrt() / r).exp());
    Ok(num / den / r0_half(t)?)
}

pub fn upper_bound_l2(t: f64, epsilon: f64, r: f64) -> Result<f64> {
    check_args(t, epsilon, r)?;
    let v = (1.0 / (r * SQRT_2)).powf(epsilon) * (k2(r)? * t).exp() * 2.0 * r.sqrt() * (t / PI).powf(0.25);
    Ok(v / r0_half(t)?)
}

pub fn upper_bound_l3(t: f64, epsilon: f64, r: f64) -> Result<f64> {
    check_args(t, epsilon, r)?;
    let a = (2.0 * PI * t).sqrt();
    let v = ((a + PI) / a).powf(epsilon) * (-t).exp() / (PI * t).sqrt();
    Ok(v / r0_half(t)?)
}

pub fn bound_report(t: f64, epsilon: f64, r: f64) -> Result<BoundReport> {
    let ub_l0 = upper_bound_l0(t, epsilon, r)?;
    let ub_l2 = upper_bound_l2(t, epsilon, r)?;
    let ub_l3 = upper_bound_l3(t, epsilon, r)?;
    Ok(BoundReport {
        t,
        epsilon,
        r,
        k0: k0(r)?,
        k2: k2(r)?,
        ub_l0,
        ub_l2,
        ub_l3,
        ratio: ub_l0 + ub_l2 + ub_l3,
    })
}

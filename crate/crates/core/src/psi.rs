//! The Riemann-Siegel kernel `psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)` and
//! its derivatives through order 6.
//!
//! Numerator and denominator both vanish at `p = 1/4` and `p = 3/4`. `psi` is in fact
//! entire, but the plain quotient jet loses roughly one digit per derivative order
//! per decade of closeness to those points. Inside [`SWITCH_RADIUS`] the jet is
//! instead taken from a high-order series about the singular point, in which the
//! common factor `h` has been cancelled exactly.

use crate::jet::Jet;
use crate::{Error, Result};
use std::f64::consts::PI;

pub const MAX_ORDER: usize = 6;

/// Distance from 1/4 or 3/4 below which the re-expanded series is used.
pub const SWITCH_RADIUS: f64 = 0.1;

const SERIES_LEN: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiJet {
    pub p: f64,
    /// `values[k]` is the k-th derivative of psi at `p`; entries above the requested
    /// order are zero.
    pub values: [f64; MAX_ORDER + 1],
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("psi needs p in [0, 1], got {p}")));
    }
    Ok(())
}

pub fn psi(p: f64) -> Result<f64> {
    Ok(psi_jet(p, 0)?.values[0])
}

pub fn psi_jet(p: f64, max_order: usize) -> Result<PsiJet> {
    check_p(p)?;
    if max_order > MAX_ORDER {
        return Err(Error::arg(format!("psi derivatives available through order {MAX_ORDER}, asked for {max_order}")));
    }
    let jet = if (p - 0.25).abs() < SWITCH_RADIUS {
        jet_series(0.25, p)
    } else if (p - 0.75).abs() < SWITCH_RADIUS {
        jet_series(0.75, p)
    } else {
        jet_direct(p)
    };
    let mut values = [0.0; MAX_ORDER + 1];
    for (k, v) in values.iter_mut().enumerate().take(max_order + 1) {
        *v = jet.derivative(k);
    }
    Ok(PsiJet { p, values })
}

/// Plain quotient jet; accurate away from 1/4 and 3/4.
pub fn jet_direct(p: f64) -> Jet<{ MAX_ORDER + 1 }> {
    let x = Jet::variable(p);
    let arg = (x * x - x).add_scalar(-0.0625).scale(2.0 * PI);
    let num = arg.cos();
    let den = x.scale(2.0 * PI).cos();
    num / den
}

/// Series of psi about `centre` in {1/4, 3/4}, re-centred at `p`.
pub fn jet_series(centre: f64, p: f64) -> Jet<{ MAX_ORDER + 1 }> {
    // With p = centre + h:
    //   numerator   = sin(2 pi (2 centre - 1) h + 2 pi h^2)
    //   denominator = -sin(2 pi h) at 1/4,  +sin(2 pi h) at 3/4
    let mut w = [0.0; SERIES_LEN];
    w[1] = 2.0 * PI * (2.0 * centre - 1.0);
    w[2] = 2.0 * PI;
    let num = Jet::<SERIES_LEN>::from_coeffs(w).sin().shift_down();
    let sign = if centre < 0.5 { -1.0 } else { 1.0 };
    let den = Jet::<SERIES_LEN>::variable(0.0).scale(2.0 * PI).sin().shift_down().scale(sign);
    // shift_down loses the top coefficient of each, so the last entry is unreliable
    let mut q = (num / den).c;
    q[SERIES_LEN - 1] = 0.0;
    // re-centre at p: out[m] = sum_k q[k] C(k, m) delta^(k-m)
    let delta = p - centre;
    let mut out = [0.0; MAX_ORDER + 1];
    for (m, o) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for k in (m..SERIES_LEN).rev() {
            acc = acc * delta + q[k] * binomial(k, m);
        }
        *o = acc;
    }
    Jet::from_coeffs(out)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

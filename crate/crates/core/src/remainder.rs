//! Remainder coefficients `C_k(p, eps)` and the truncated remainder `R_M(t, eps)`.
//!
//! The generalised matching factor expands as `sum_n b_n(omega) c_n(p)`. The
//! polynomials `b_n` follow the recursion
//!
//! ```text
//! b_{n+1} = omega (2 pi i (n + 1/2 - eps) b_n - b_{n-2}) / (4 pi^2 (n + 1)),
//! b_0 = 1, b_{-1} = b_{-2} = 0,
//! ```
//!
//! and `c_n` are combinations of psi derivatives. Collecting powers of `omega` gives
//! `C_k = sum_i c_i B_{i,k}`.

use crate::psi::{psi_jet, PsiJet};
use crate::scalar::grid_quantities;
use crate::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::f64::consts::PI;

pub const B_MAX_INDEX: usize = 9;

#[derive(Debug, Clone, PartialEq)]
pub struct BPolynomial {
    pub n: usize,
    /// Power of omega to coefficient `B_{n,k}(eps)`. Keys are the structural support,
    /// kept even where a coefficient happens to vanish for the given eps.
    pub coeffs: BTreeMap<usize, Complex64>,
}

impl BPolynomial {
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(&k).copied().unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemainderCoeffs {
    pub p: f64,
    pub epsilon: f64,
    pub c0: f64,
    pub c1: Complex64,
    /// Present only at `eps = 0`.
    pub c2: Option<f64>,
}

/// `prod_{n = n1}^{n2} (n - 1/2 - eps)`.
pub fn p_eps_product(n1: i64, n2: i64, epsilon: f64) -> Result<f64> {
    if n1 > n2 {
        return Err(Error::arg(format!("empty product range {n1}..={n2}")));
    }
    Ok((n1..=n2).map(|n| n as f64 - 0.5 - epsilon).product())
}

/// `b_0 .. b_{n_max}` as polynomials in omega.
pub fn b_polynomials(epsilon: f64, n_max: usize) -> Result<Vec<BPolynomial>> {
    if n_max > B_MAX_INDEX {
        return Err(Error::arg(format!("b_n tabulated through n = {B_MAX_INDEX}, asked for {n_max}")));
    }
    let mut out: Vec<BPolynomial> = Vec::with_capacity(n_max + 1);
    out.push(BPolynomial { n: 0, coeffs: BTreeMap::from([(0, Complex64::new(1.0, 0.0))]) });
    let i2pi = Complex64::new(0.0, 2.0 * PI);
    for n in 0..n_max {
        let mut next = BTreeMap::new();
        let denom = 4.0 * PI * PI * (n + 1) as f64;
        let a = i2pi * (n as f64 + 0.5 - epsilon);
        for (&k, &v) in &out[n].coeffs {
            *next.entry(k + 1).or_insert(Complex64::default()) += a * v / denom;
        }
        if n >= 2 {
            for (&k, &v) in &out[n - 2].coeffs {
                *next.entry(k + 1).or_insert(Complex64::default()) -= v / denom;
            }
        }
        out.push(BPolynomial { n: n + 1, coeffs: next });
    }
    Ok(out)
}

/// Lowest omega power present in `b_n`.
pub fn b_min_degree(n: usize) -> usize {
    n / 3 + n - 3 * (n / 3)
}

/// `c_n = (n!/2^n) sum_j (2 pi i)^j / j! psi^(n-2j) / (n-2j)!`.
pub fn c_coefficient(n: usize, p: f64) -> Result<Complex64> {
    let jet = psi_jet(p, n.min(6))?;
    c_from_jet(n, &jet)
}

fn c_from_jet(n: usize, jet: &PsiJet) -> Result<Complex64> {
    if n > 6 {
        return Err(Error::arg(format!("c_n available for n <= 6, asked for {n}")));
    }
    let fact = |m: usize| -> f64 { (1..=m).map(|k| k as f64).product() };
    let i2pi = Complex64::new(0.0, 2.0 * PI);
    let mut acc = Complex64::default();
    for j in 0..=n / 2 {
        acc += i2pi.powu(j as u32) / fact(j) * (jet.values[n - 2 * j] / fact(n - 2 * j));
    }
    Ok(acc * (fact(n) / 2f64.powi(n as i32)))
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("p must lie in [0, 1], got {p}")));
    }
    Ok(())
}

/// `C_1(p, eps) = -i eps psi'(p) / (4 pi) - psi'''(p) / (96 pi^2)`.
pub fn c1(p: f64, epsilon: f64) -> Result<Complex64> {
    check_p(p)?;
    Ok(c1_from_jet(&psi_jet(p, 3)?, epsilon))
}

fn c1_from_jet(j: &PsiJet, epsilon: f64) -> Complex64 {
    Complex64::new(-j.values[3] / (96.0 * PI * PI), -epsilon * j.values[1] / (4.0 * PI))
}

/// `C_2(p, 0) = psi''(p) / (64 pi^2) + 5 psi^(6)(p) / (2^7 pi^4 6!)`.
pub fn c2_at_eps0(p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(c2_from_jet(&psi_jet(p, 6)?))
}

fn c2_from_jet(j: &PsiJet) -> f64 {
    let pi2 = PI * PI;
    j.values[2] / (64.0 * pi2) + 5.0 * j.values[6] / (128.0 * pi2 * pi2 * 720.0)
}

/// Phase slope of the `omega^2` correction `exp(i (Im_2^- + Im_3^-))`:
/// `Im_2^- + Im_3^- = phase_slope(eps) * omega^2`.
fn phase_slope(epsilon: f64) -> f64 {
    -(1.0 + 108.0 * epsilon - 12.0 * epsilon * epsilon) / (96.0 * PI)
}

/// `sum_i c_i B_{i,k}` without the phase correction.
fn raw_ck(k: usize, p: f64, epsilon: f64) -> Result<Complex64> {
    let jet = psi_jet(p, 6)?;
    let bs = b_polynomials(epsilon, 3 * k)?;
    let mut acc = Complex64::default();
    for (i, b) in bs.iter().enumerate().skip(k) {
        if let Some(v) = b.coeffs.get(&k) {
            acc += c_from_jet(i, &jet)? * v;
        }
    }
    Ok(acc)
}

/// `C_k` assembled from the b-recursion and `c_n`. For `k = 2` (only at `eps = 0`)
/// the `omega^2` term of the phase correction acting on `C_0` is folded in, which
/// makes the result real.
pub fn assemble_ck(k: usize, p: f64, epsilon: f64) -> Result<Complex64> {
    check_p(p)?;
    match k {
        0 | 1 => raw_ck(k, p, epsilon),
        2 if epsilon == 0.0 => {
            let c0 = psi_jet(p, 0)?.values[0];
            Ok(raw_ck(2, p, 0.0)? + Complex64::new(0.0, phase_slope(0.0) * c0))
        }
        _ => Err(Error::UnsupportedOrder { order: k, epsilon }),
    }
}

pub fn remainder_coeffs(p: f64, epsilon: f64) -> Result<RemainderCoeffs> {
    check_p(p)?;
    let j = psi_jet(p, 6)?;
    Ok(RemainderCoeffs {
        p,
        epsilon,
        c0: j.values[0],
        c1: c1_from_jet(&j, epsilon),
        c2: (epsilon == 0.0).then(|| c2_from_jet(&j)),
    })
}

/// Highest order supported on the critical line.
pub const MAX_LINE_ORDER: usize = 2;

/// Highest order supported off the line.
pub const MAX_OFF_LINE_ORDER: usize = 1;

pub fn check_order(m: usize, epsilon: f64) -> Result<()> {
    if m > MAX_LINE_ORDER || (m > MAX_OFF_LINE_ORDER && epsilon != 0.0) {
        return Err(Error::UnsupportedOrder { order: m, epsilon });
    }
    Ok(())
}

/// `R_M(t, eps) = (-1)^{N-1} omega^{1/2} sum_{j <= M} C_j omega^j`.
///
/// At `M = 2` the sum is `C_0 + C_1 omega + C_2^raw omega^2` multiplied by
/// `exp(i (Im_2^- + Im_3^-))`, whose first-order part turns `C_2^raw` into the real
/// `C_2`.
pub fn remainder_r(t: f64, epsilon: f64, m: usize) -> Result<Complex64> {
    check_order(m, epsilon)?;
    let g = grid_quantities(t)?;
    remainder_from_grid(g.n, g.p, g.omega, epsilon, m)
}

pub(crate) fn remainder_from_grid(n: usize, p: f64, omega: f64, epsilon: f64, m: usize) -> Result<Complex64> {
    let jet = psi_jet(p, [0, 3, 6][m])?;
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let scale = sign * omega.sqrt();
    let c0 = jet.values[0];
    Ok(match m {
        0 => Complex64::new(scale * c0, 0.0),
        1 => (Complex64::new(c0, 0.0) + c1_from_jet(&jet, epsilon) * omega) * scale,
        _ => {
            let slope = phase_slope(0.0);
            let c2raw = Complex64::new(c2_from_jet(&jet), -slope * c0);
            let w2 = omega * omega;
            let sum = Complex64::new(c0, 0.0) + c1_from_jet(&jet, 0.0) * omega + c2raw * w2;
            sum * Complex64::from_polar(scale, slope * w2)
        }
    })
}

//! Reference values that do not go through the Riemann-Siegel machinery.
//!
//! `zeta` by Euler-Maclaurin summation, `ln Gamma` by a recurrence-shifted Stirling
//! series with its own coefficient table, and `xi`/`Z` assembled in log space.
//! Nothing here reads the constants or code paths of [`crate::scalar`],
//! [`crate::psi`] or [`crate::remainder`].

use crate::{Error, LogValue, Result};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

/// Largest `|Im s|` for which the automatic term count is trusted.
pub const MAX_IM: f64 = 3.0e5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    /// Direct-sum length; `None` picks `max(20, ceil|Im s|)` capped at `MAX_IM`.
    pub em_terms: Option<usize>,
    /// Maximum number of Bernoulli correction terms, 2..=10.
    pub em_bernoulli_order: usize,
    /// Tail terms are added until one falls below this.
    pub target_abs_err: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { em_terms: None, em_bernoulli_order: 10, target_abs_err: 1e-10 }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if !(2..=10).contains(&self.em_bernoulli_order) {
            return Err(Error::arg(format!(
                "em_bernoulli_order must be in 2..=10, got {}",
                self.em_bernoulli_order
            )));
        }
        if let Some(m) = self.em_terms {
            if m < 10 {
                return Err(Error::arg(format!("em_terms must be at least 10, got {m}")));
            }
        }
        if self.target_abs_err.is_nan() || self.target_abs_err <= 0.0 {
            return Err(Error::arg("target_abs_err must be positive"));
        }
        Ok(())
    }

    fn terms_for(&self, s: Complex64) -> usize {
        match self.em_terms {
            Some(m) => {
                if (m as f64) < s.im.abs() {
                    log::warn!("em_terms = {m} is below |Im s| = {}; tail may not converge", s.im.abs());
                }
                m
            }
            None => (s.im.abs().ceil() as usize).clamp(20, MAX_IM as usize),
        }
    }
}

/// B_2 .. B_20.
const B2K: [f64; 10] = [
    0.16666666666666666,
    -0.03333333333333333,
    0.023809523809523808,
    -0.03333333333333333,
    0.07575757575757576,
    -0.2531135531135531,
    1.1666666666666667,
    -7.092156862745098,
    54.971177944862156,
    -529.1242424242424,
];

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `n^{-s}` with the phase `Im(s) ln n` split so its rounding stays near one ulp of
/// the reduced angle.
fn pow_neg(n: f64, s: Complex64) -> Complex64 {
    let ln_n = n.ln();
    let mag = (-s.re * ln_n).exp();
    let ph = s.im * ln_n;
    let ph_err = s.im.mul_add(ln_n, -ph);
    let k = (ph / (2.0 * PI)).round();
    // two-part 2 pi; the fused multiply-add keeps ph - k P1 exact
    const P1: f64 = std::f64::consts::TAU;
    const P2: f64 = 2.4492935982947064e-16;
    let r = (-k).mul_add(P1, ph) - k * P2 + ph_err;
    let (sn, cs) = r.sin_cos();
    Complex64::new(mag * cs, -mag * sn)
}

/// Riemann zeta by Euler-Maclaurin summation.
pub fn zeta_em(s: Complex64, cfg: &OracleConfig) -> Result<Complex64> {
    cfg.validate()?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("zeta has a pole at s = 1".into()));
    }
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::domain("non-finite zeta argument"));
    }
    if s.im.abs() > MAX_IM {
        log::warn!("|Im s| = {} exceeds the oracle accuracy range {MAX_IM}", s.im.abs());
    }
    let m = cfg.terms_for(s);

    // Neumaier-compensated direct sum
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for n in 1..m {
        let term = pow_neg(n as f64, s);
        let t = sum + term;
        comp.re += if sum.re.abs() >= term.re.abs() { (sum.re - t.re) + term.re } else { (term.re - t.re) + sum.re };
        comp.im += if sum.im.abs() >= term.im.abs() { (sum.im - t.im) + term.im } else { (term.im - t.im) + sum.im };
        sum = t;
    }
    let mf = m as f64;
    let m_pow = pow_neg(mf, s);
    let mut acc = sum + comp + m_pow * mf / (s - 1.0) + m_pow * 0.5;

    // tail: B_2k/(2k)! s(s+1)..(s+2k-2) M^{-s-2k+1}
    let mut rising = s;
    let mut mp = m_pow / mf;
    for k in 1..=cfg.em_bernoulli_order {
        let term = rising * mp * (B2K[k - 1] / factorial(2 * k));
        acc += term;
        if term.norm() < cfg.target_abs_err * 1e-3 {
            break;
        }
        let a = 2.0 * k as f64 - 1.0;
        rising = rising * (s + a) * (s + a + 1.0);
        mp /= mf * mf;
    }
    Ok(acc)
}

/// Principal `ln Gamma(z)`: shift `Re z` above 12 by recurrence, then Stirling with
/// ten Bernoulli terms.
pub fn log_gamma_ref(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain("non-finite log-gamma argument"));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::Pole(format!("Gamma has a pole at z = {}", z.re)));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 12.0 {
        shift += w.ln();
        w += 1.0;
    }
    let lw = w.ln();
    let mut acc = (w - 0.5) * lw - w + 0.5 * (2.0 * PI).ln();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pw = inv;
    for (j, b) in B2K.iter().enumerate() {
        let k = (j + 1) as f64;
        acc += pw * (b / (2.0 * k * (2.0 * k - 1.0)));
        pw *= inv2;
    }
    Ok(acc - shift)
}

fn principal_arg_wrap(x: f64) -> f64 {
    let k = (x / (2.0 * PI)).round();
    x - 2.0 * PI * k
}

/// `ln xi(s)` with `xi(s) = Gamma(s/2 + 1)(s - 1) pi^{-s/2} zeta(s)`.
/// The imaginary part is reduced to `(-pi, pi]`.
pub fn xi_direct(s: Complex64, cfg: &OracleConfig) -> Result<LogValue> {
    if s == Complex64::new(1.0, 0.0) {
        // xi(1) = 1/2 by continuity, but the factorisation used here has a 0 * inf
        return Err(Error::Pole("use the limit xi(1) = 1/2".into()));
    }
    let z = zeta_em(s, cfg)?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(LogValue::AtZero);
    }
    let half = s / 2.0;
    if half == Complex64::new(0.0, 0.0) {
        // Gamma(s/2) pole cancels against s/2; xi(0) = xi(1) = 1/2
        return Err(Error::Pole("use the limit xi(0) = 1/2".into()));
    }
    let v = log_gamma_ref(half)? + half.ln() + (s - 1.0).ln() - half * PI.ln() + z.ln();
    Ok(LogValue::Finite(Complex64::new(v.re, principal_arg_wrap(v.im))))
}

/// Continued Riemann-Siegel phase `theta(w)` for complex `w`:
/// `[ln Gamma(1/4 + i w/2) - ln Gamma(1/4 - i w/2)] / (2i) - (w/2) ln pi`.
pub fn theta_continued(w: Complex64) -> Result<Complex64> {
    let i = Complex64::i();
    let a = log_gamma_ref(0.25 + i * w / 2.0)?;
    let b = log_gamma_ref(0.25 - i * w / 2.0)?;
    Ok((a - b) / (2.0 * i) - w / 2.0 * PI.ln())
}

/// Reference `Z(t, eps) = exp(i theta(t - i eps)) zeta(1/2 + eps + i t)`, the analytic
/// continuation of the classical `Z` off the critical line.
pub fn z_reference(t: f64, epsilon: f64, cfg: &OracleConfig) -> Result<Complex64> {
    check_point(t, epsilon)?;
    let th = theta_continued(Complex64::new(t, -epsilon))?;
    let z = zeta_em(Complex64::new(0.5 + epsilon, t), cfg)?;
    Ok((Complex64::i() * th).exp() * z)
}

/// Alternative reference `-xi(s) / (F(t) e^{i pi eps / 4})` in log space, with
/// `ln F(t) = (3/4) ln(t/2) + ln(2pi)/2 - ln(pi)/4 - pi t/4 + ln t`.
///
/// Agrees with [`z_reference`] to leading order only; the two differ by the ratio of
/// the exact Gamma-factor phase and modulus to their asymptotic forms.
pub fn z_reference_via_xi(t: f64, epsilon: f64, cfg: &OracleConfig) -> Result<Complex64> {
    check_point(t, epsilon)?;
    let lf = 0.75 * (t / 2.0).ln() + 0.5 * (2.0 * PI).ln() - 0.25 * PI.ln() - PI / 4.0 * t + t.ln();
    match xi_direct(Complex64::new(0.5 + epsilon, t), cfg)? {
        LogValue::AtZero => Ok(Complex64::new(0.0, 0.0)),
        LogValue::Finite(lx) => {
            let v = lx - lf - Complex64::new(0.0, PI * epsilon / 4.0);
            Ok(-v.exp())
        }
    }
}

fn check_point(t: f64, epsilon: f64) -> Result<()> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::domain(format!("t must be finite and positive, got {t}")));
    }
    if !epsilon.is_finite() || epsilon.abs() > 1.0 {
        return Err(Error::domain(format!("epsilon must lie in [-1, 1], got {epsilon}")));
    }
    if t > MAX_IM {
        log::warn!("t = {t} is beyond the oracle's accuracy range");
    }
    Ok(())
}

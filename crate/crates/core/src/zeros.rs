//! Zero sets of `e^{i pi eps/4} Z(t, eps)` and critical-line zeros of `Z(t)`.

use crate::extended::{xi_scaled_with, z_ext_with, ZOptions};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelKind {
    /// Real part vanishes.
    ReZero,
    /// Imaginary part vanishes.
    ImZero,
}

impl LevelKind {
    pub fn name(self) -> &'static str {
        match self {
            LevelKind::ReZero => "re",
            LevelKind::ImZero => "im",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroCurve {
    pub kind: LevelKind,
    pub points: Vec<(f64, f64)>,
    pub scan_dt: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalZero {
    pub t: f64,
    pub refinement_width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceConfig {
    pub m: usize,
    pub opts: ZOptions,
    pub parallelism: usize,
    /// Maximum number of grid samples (scan lines times samples per line).
    pub point_budget: usize,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig { m: 1, opts: ZOptions::default(), parallelism: 1, point_budget: 2_000_000 }
    }
}

pub const ROOT_VALUE_TOL: f64 = 1e-9;
pub const ROOT_EPS_WIDTH: f64 = 1e-12;

fn component(t: f64, eps: f64, kind: LevelKind, m: usize, opts: ZOptions) -> Result<f64> {
    // off the line the order-2 remainder is not defined; fall back to order 1
    let m = if eps != 0.0 { m.min(1) } else { m };
    let x = xi_scaled_with(t, eps, m, opts)?;
    Ok(match kind {
        LevelKind::ReZero => x.re,
        LevelKind::ImZero => x.im,
    })
}

/// Roots in `epsilon` of the selected component along the line of constant `t`.
pub fn scan_line(t: f64, eps_range: (f64, f64), n_samples: usize, kind: LevelKind, m: usize) -> Result<Vec<f64>> {
    scan_line_with(t, eps_range, n_samples, kind, m, ZOptions::default())
}

pub fn scan_line_with(
    t: f64,
    eps_range: (f64, f64),
    n_samples: usize,
    kind: LevelKind,
    m: usize,
    opts: ZOptions,
) -> Result<Vec<f64>> {
    let (e0, e1) = eps_range;
    if !(e0 >= -1.0 && e1 <= 1.0 && e0 < e1) {
        return Err(Error::arg(format!("eps_range must satisfy -1 <= lo < hi <= 1, got ({e0}, {e1})")));
    }
    if n_samples < 8 {
        return Err(Error::arg(format!("need at least 8 samples per line, got {n_samples}")));
    }
    let f = |e: f64| component(t, e, kind, m, opts);
    let step = (e1 - e0) / (n_samples - 1) as f64;
    let xs: Vec<f64> = (0..n_samples)
        .map(|i| if i == n_samples - 1 { e1 } else { e0 + step * i as f64 })
        .collect();
    let vals = xs.iter().map(|&e| f(e)).collect::<Result<Vec<_>>>()?;
    let mut roots = Vec::new();
    for i in 0..n_samples {
        if vals[i] == 0.0 {
            roots.push(xs[i]);
        }
        if i + 1 < n_samples && vals[i] * vals[i + 1] < 0.0 {
            roots.push(bisect(&f, xs[i], xs[i + 1], vals[i], ROOT_VALUE_TOL, ROOT_EPS_WIDTH)?.0);
        }
    }
    Ok(roots)
}

/// Bisection on a sign-changing bracket. Stops when `|f(mid)| <= value_tol` or the
/// bracket is no wider than `width`. Returns `(root, final bracket width)`.
fn bisect<F>(f: &F, mut a: f64, mut b: f64, mut fa: f64, value_tol: f64, width: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    loop {
        let mid = 0.5 * (a + b);
        if b - a <= width || mid <= a || mid >= b {
            return Ok((mid, b - a));
        }
        let fm = f(mid)?;
        if fm == 0.0 || fm.abs() <= value_tol {
            return Ok((mid, b - a));
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
}

fn t_grid(t_range: (f64, f64), dt: f64) -> Result<Vec<f64>> {
    let (t0, t1) = t_range;
    if !(t0.is_finite() && t1.is_finite() && t0 > 0.0 && t0 <= t1) {
        return Err(Error::arg(format!("t range must satisfy 0 < lo <= hi, got ({t0}, {t1})")));
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::arg(format!("dt must be positive, got {dt}")));
    }
    let steps = ((t1 - t0) / dt + 1e-9).floor() as usize;
    let mut ts: Vec<f64> = (0..=steps).map(|k| t0 + dt * k as f64).collect();
    if let Some(&last) = ts.last() {
        if t1 - last > 1e-9 * dt {
            ts.push(t1);
        }
    }
    Ok(ts)
}

fn pool(parallelism: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::arg(format!("cannot build worker pool: {e}")))
}

/// Scan lines of constant `t` and link roots into polylines.
///
/// Linking is greedy: roots on each line, in increasing `eps`, extend the nearest
/// curve that ended on the previous line, if within `3 (hi - lo) / n_eps`.
pub fn trace_curves(
    t_range: (f64, f64),
    dt: f64,
    eps_range: (f64, f64),
    n_eps: usize,
    kind: LevelKind,
    cfg: &TraceConfig,
) -> Result<Vec<ZeroCurve>> {
    if t_range.0 < 13.0 {
        log::warn!("tracing below t = 13 is outside the intended range");
    }
    let ts = t_grid(t_range, dt)?;
    let requested = ts.len().saturating_mul(n_eps);
    if requested > cfg.point_budget {
        return Err(Error::Budget { requested, budget: cfg.point_budget });
    }
    let lines: Vec<Vec<f64>> = pool(cfg.parallelism)?.install(|| {
        ts.par_iter()
            .map(|&t| scan_line_with(t, eps_range, n_eps, kind, cfg.m, cfg.opts))
            .collect::<Result<Vec<_>>>()
    })?;

    let jump = 3.0 * (eps_range.1 - eps_range.0) / n_eps as f64;
    let mut curves: Vec<ZeroCurve> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for (li, roots) in lines.iter().enumerate() {
        let t = ts[li];
        let mut taken = vec![false; open.len()];
        let mut next_open = Vec::new();
        for &e in roots {
            let mut best: Option<(usize, f64)> = None;
            for (j, &ci) in open.iter().enumerate() {
                if taken[j] {
                    continue;
                }
                let d = (curves[ci].points.last().unwrap().1 - e).abs();
                if d <= jump && best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
            match best {
                Some((j, _)) => {
                    taken[j] = true;
                    curves[open[j]].points.push((t, e));
                    next_open.push(open[j]);
                }
                None => {
                    curves.push(ZeroCurve { kind, points: vec![(t, e)], scan_dt: dt });
                    next_open.push(curves.len() - 1);
                }
            }
        }
        open = next_open;
    }
    Ok(curves)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalScan {
    pub zeros: Vec<CriticalZero>,
    /// Sample points where `|Z|` has a small local minimum without a sign change,
    /// which may hide two zeros inside one cell.
    pub suspects: Vec<f64>,
}

pub const SUSPECT_THRESHOLD: f64 = 0.05;
pub const CRITICAL_WIDTH: f64 = 1e-9;

/// Sign changes of `Z(t)` on a grid of spacing `dt`, refined by bisection to a
/// bracket of width at most `1e-9`. Remainder order 1.
/// Critical-line zeros using the highest remainder order available on the line.
pub fn critical_zeros(t_range: (f64, f64), dt: f64) -> Result<Vec<CriticalZero>> {
    let cfg = TraceConfig { m: crate::remainder::MAX_LINE_ORDER, ..Default::default() };
    Ok(critical_scan(t_range, dt, &cfg)?.zeros)
}

pub fn critical_scan(t_range: (f64, f64), dt: f64, cfg: &TraceConfig) -> Result<CriticalScan> {
    let ts = t_grid(t_range, dt)?;
    if ts.len() > cfg.point_budget {
        return Err(Error::Budget { requested: ts.len(), budget: cfg.point_budget });
    }
    let (m, opts) = (cfg.m, cfg.opts);
    let f = move |t: f64| z_ext_with(t, 0.0, m, opts).map(|e| e.z.re);
    let vals: Vec<f64> = pool(cfg.parallelism)?
        .install(|| ts.par_iter().map(|&t| f(t)).collect::<Result<Vec<_>>>())?;

    let mut brackets = Vec::new();
    let mut zeros_exact = Vec::new();
    let mut suspects = Vec::new();
    for i in 0..ts.len() {
        if vals[i] == 0.0 {
            zeros_exact.push(i);
        }
        if i + 1 < ts.len() && vals[i] * vals[i + 1] < 0.0 {
            brackets.push(i);
        }
        if i > 0 && i + 1 < ts.len() {
            let (a, b, c) = (vals[i - 1], vals[i], vals[i + 1]);
            let same_sign = a * b > 0.0 && b * c > 0.0;
            if same_sign && b.abs() < a.abs() && b.abs() < c.abs() && b.abs() < SUSPECT_THRESHOLD {
                log::warn!("possible close zero pair near t = {} (|Z| = {:.3e} with no sign change)", ts[i], b.abs());
                suspects.push(ts[i]);
            }
        }
    }
    let refined: Vec<CriticalZero> = pool(cfg.parallelism)?.install(|| {
        brackets
            .par_iter()
            .map(|&i| {
                let (r, w) = bisect(&f, ts[i], ts[i + 1], vals[i], 0.0, CRITICAL_WIDTH)?;
                Ok(CriticalZero { t: r, refinement_width: w })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut zeros: Vec<CriticalZero> = zeros_exact
        .into_iter()
        .map(|i| CriticalZero { t: ts[i], refinement_width: 0.0 })
        .chain(refined)
        .collect();
    zeros.sort_by(|a, b| a.t.total_cmp(&b.t));
    Ok(CriticalScan { zeros, suspects })
}

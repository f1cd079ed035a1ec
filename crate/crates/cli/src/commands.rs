use rayon::prelude::*;
use rayon::ThreadPool;
use thiserror::Error;

use zext::bounds::bound_report;
use zext::oracle::{z_reference, OracleConfig, MAX_IM};
use zext::zeros::{critical_scan, trace_curves, LevelKind, TraceConfig};
use zext::{z_ext_with, Phase, ZEvaluation, ZOptions};

use crate::args::*;
use crate::output::{Cell, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] zext::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                zext::Error::Argument(_) | zext::Error::UnsupportedOrder { .. } => 2,
                zext::Error::Domain(_) | zext::Error::Pole(_) => 3,
                zext::Error::Budget { .. } => 5,
            },
            CliError::Io(_) | CliError::Pool(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub struct Outcome {
    pub table: Table,
    /// Set when compare finds a delta above tolerance.
    pub tolerance_exceeded: bool,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Outcome { table, tolerance_exceeded: false }
    }
}

pub fn run(cmd: &Command, common: &Common) -> CliResult<Outcome> {
    if common.parallelism == 0 {
        return Err(CliError::Usage("--parallelism must be at least 1".into()));
    }
    let opts = ZOptions { phase: if common.theta_corrected { Phase::ThetaCorrected } else { Phase::Theta1 } };
    match cmd {
        Command::Eval(a) => eval(a, opts),
        Command::Grid(a) => grid(a, opts, common.parallelism),
        Command::Zeros(a) => zeros(a, opts, common.parallelism),
        Command::Curves(a) => curves(a, opts, common.parallelism),
        Command::Bounds(a) => bounds(a),
        Command::Compare(a) => compare(a, opts, common.parallelism),
    }
}

fn pool(n: usize) -> CliResult<ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?)
}

fn pair(v: &[f64], name: &str) -> CliResult<(f64, f64)> {
    match v {
        [a, b] if a.is_finite() && b.is_finite() && a <= b => Ok((*a, *b)),
        _ => Err(CliError::Usage(format!("--{name} needs two finite values A <= B"))),
    }
}

const EVAL_COLUMNS: [&str; 9] = ["t", "epsilon", "M", "N", "p", "re_z", "im_z", "re_xi_scaled", "im_xi_scaled"];

fn eval_row(e: &ZEvaluation) -> Vec<Cell> {
    let eps = e.point.epsilon;
    let rot = if eps == 0.0 { e.z } else { e.z * zext::Complex64::from_polar(1.0, std::f64::consts::PI * eps / 4.0) };
    vec![
        Cell::F(e.point.t),
        Cell::F(eps),
        Cell::U(e.remainder_order as u64),
        Cell::U(e.n as u64),
        Cell::F(e.p),
        Cell::F(e.z.re),
        Cell::F(e.z.im),
        Cell::F(rot.re),
        Cell::F(rot.im),
    ]
}

fn eval(a: &EvalArgs, opts: ZOptions) -> CliResult<Outcome> {
    let e = z_ext_with(a.t, a.eps, a.m, opts)?;
    let mut table = Table::new(&EVAL_COLUMNS);
    table.push(eval_row(&e));
    Ok(table.into())
}

/// `a, a + dt, ...` up to and including `b`.
fn t_values(a: f64, b: f64, dt: f64) -> CliResult<Vec<f64>> {
    if !(dt > 0.0) {
        return Err(CliError::Usage("--dt must be positive".into()));
    }
    let n = ((b - a) / dt + 1e-9).floor() as usize;
    let mut ts: Vec<f64> = (0..=n).map(|i| a + i as f64 * dt).collect();
    if b - ts[n] > 1e-9 * dt {
        ts.push(b);
    }
    Ok(ts)
}

fn grid(a: &GridArgs, opts: ZOptions, parallelism: usize) -> CliResult<Outcome> {
    let (t0, t1) = pair(&a.t_range, "t-range")?;
    let (e0, e1) = pair(&a.eps_range, "eps-range")?;
    if a.n_eps < 1 {
        return Err(CliError::Usage("--n-eps must be at least 1".into()));
    }
    let ts = t_values(t0, t1, a.dt)?;
    let requested = ts.len().saturating_mul(a.n_eps);
    if requested > a.max_points {
        return Err(zext::Error::Budget { requested, budget: a.max_points }.into());
    }
    let eps: Vec<f64> = if a.n_eps == 1 {
        vec![e0]
    } else {
        (0..a.n_eps).map(|j| e0 + (e1 - e0) * j as f64 / (a.n_eps - 1) as f64).collect()
    };
    let points: Vec<(f64, f64)> = ts.iter().flat_map(|&t| eps.iter().map(move |&e| (t, e))).collect();
    let m = a.m;
    let evals = pool(parallelism)?
        .install(|| points.par_iter().map(|&(t, e)| z_ext_with(t, e, m, opts)).collect::<Result<Vec<_>, _>>())?;
    let mut table = Table::new(&EVAL_COLUMNS);
    for e in &evals {
        table.push(eval_row(e));
    }
    Ok(table.into())
}

fn trace_config(m: usize, opts: ZOptions, parallelism: usize, max_points: usize) -> TraceConfig {
    TraceConfig { m, opts, parallelism, point_budget: max_points }
}

fn zeros(a: &ZerosArgs, opts: ZOptions, parallelism: usize) -> CliResult<Outcome> {
    let range = pair(&a.t_range, "t-range")?;
    zext::remainder::check_order(a.m, 0.0)?;
    let scan = critical_scan(range, a.dt, &trace_config(a.m, opts, parallelism, a.max_points))?;
    let mut table = Table::new(&["t", "width", "M"]);
    for z in &scan.zeros {
        table.push(vec![Cell::F(z.t), Cell::F(z.refinement_width), Cell::U(a.m as u64)]);
    }
    Ok(table.into())
}

fn curves(a: &CurvesArgs, opts: ZOptions, parallelism: usize) -> CliResult<Outcome> {
    let range = pair(&a.t_range, "t-range")?;
    let eps = pair(&a.eps_range, "eps-range")?;
    let kinds: &[LevelKind] = match a.kind {
        KindArg::Re => &[LevelKind::ReZero],
        KindArg::Im => &[LevelKind::ImZero],
        KindArg::Both => &[LevelKind::ReZero, LevelKind::ImZero],
    };
    let cfg = trace_config(a.m, opts, parallelism, a.max_points);
    let mut table = Table::new(&["curve_id", "kind", "t", "epsilon", "M"]);
    let mut id = 0u64;
    for &kind in kinds {
        for c in trace_curves(range, a.dt, eps, a.n_eps, kind, &cfg)? {
            for &(t, e) in &c.points {
                // off the line the trace falls back to order 1
                let m = if e == 0.0 { a.m } else { a.m.min(1) };
                table.push(vec![Cell::U(id), Cell::S(kind.name().into()), Cell::F(t), Cell::F(e), Cell::U(m as u64)]);
            }
            id += 1;
        }
    }
    Ok(table.into())
}

fn bounds(a: &BoundsArgs) -> CliResult<Outcome> {
    let (t0, t1) = pair(&a.t_range, "t-range")?;
    if !(t0 > 0.0) || a.n_t < 1 {
        return Err(CliError::Usage("--t-range must be positive and --n-t at least 1".into()));
    }
    let ts: Vec<f64> = if a.n_t == 1 {
        vec![t0]
    } else {
        let (l0, l1) = (t0.ln(), t1.ln());
        let last = a.n_t - 1;
        (0..a.n_t)
            .map(|i| match i {
                0 => t0,
                i if i == last => t1,
                i => (l0 + (l1 - l0) * i as f64 / last as f64).exp(),
            })
            .collect()
    };
    if let Some(r) = a.r.iter().find(|&&r| !(r > 1.0 && r <= 2.0)) {
        return Err(CliError::Usage(format!("--r must lie in (1, 2], got {r}")));
    }
    if let Some(e) = a.eps.iter().find(|&&e| !(-0.5..=0.5).contains(&e)) {
        return Err(CliError::Usage(format!("--eps must lie in [-0.5, 0.5], got {e}")));
    }
    let mut table = Table::new(&["r", "epsilon", "t", "ratio", "ub_l0", "ub_l2", "ub_l3"]);
    for &r in &a.r {
        for &e in &a.eps {
            for &t in &ts {
                let b = bound_report(t, e, r)?;
                table.push(vec![
                    Cell::F(r),
                    Cell::F(e),
                    Cell::F(t),
                    Cell::F(b.ratio),
                    Cell::F(b.ub_l0),
                    Cell::F(b.ub_l2),
                    Cell::F(b.ub_l3),
                ]);
            }
        }
    }
    Ok(table.into())
}

fn compare(a: &CompareArgs, opts: ZOptions, parallelism: usize) -> CliResult<Outcome> {
    let t = match (&a.preset, a.t) {
        (Some(p), _) => p.parse().map_err(|_| CliError::Usage(format!("bad preset {p}")))?,
        (None, Some(t)) => t,
        (None, None) => return Err(CliError::Usage("give --t or --preset".into())),
    };
    if !(t > 0.0 && t <= MAX_IM) {
        return Err(CliError::Usage(format!("compare needs 0 < t <= {MAX_IM}, got {t}")));
    }
    if !(a.tolerance >= 0.0) {
        return Err(CliError::Usage("--tolerance must be non-negative".into()));
    }
    let cfg = OracleConfig { em_terms: a.oracle.em_terms, em_bernoulli_order: a.oracle.em_order, target_abs_err: a.oracle.oracle_tol };
    cfg.validate()?;
    let m = a.m;
    let rows = pool(parallelism)?.install(|| {
        a.eps
            .par_iter()
            .map(|&e| -> CliResult<_> {
                let z = z_ext_with(t, e, m, opts)?;
                let r = z_reference(t, e, &cfg)?;
                Ok((z, r))
            })
            .collect::<CliResult<Vec<_>>>()
    })?;
    let mut table = Table::new(&["t", "epsilon", "M", "re_z", "im_z", "re_ref", "im_ref", "delta"]);
    let mut exceeded = false;
    for (z, r) in &rows {
        let delta = (z.z - r).norm();
        if !(delta <= a.tolerance) {
            log::error!("eps = {}: delta {delta:e} exceeds tolerance {:e}", z.point.epsilon, a.tolerance);
            exceeded = true;
        }
        table.push(vec![
            Cell::F(t),
            Cell::F(z.point.epsilon),
            Cell::U(m as u64),
            Cell::F(z.z.re),
            Cell::F(z.z.im),
            Cell::F(r.re),
            Cell::F(r.im),
            Cell::F(delta),
        ]);
    }
    Ok(Outcome { table, tolerance_exceeded: exceeded })
}

//! Simulation campaigns checked against the solver.

use halftrace_core::montecarlo::{
    empirical_cf, empirical_levy_measure, excursion_decompose, tail_rate, trace, ExcursionRecord, LevyBin,
    SimConfig,
};
use halftrace_core::ode::{exponent, SolverOptions};
use halftrace_core::string_model::{canonicalize, StringSpec};

use crate::error::Result;
use crate::parallel::simulate_par;
use crate::report::{CfRow, Estimate, LevyReport, RunProvenance, TailSummary, VerificationReport};

/// Default `C` of the tolerance rule.
pub const DEFAULT_C: f64 = 3.0;

/// Compares `E[1{alive} e^{i xi Z(u)}]` with `e^{-u psi(xi)}` on every `(u, xi)`.
///
/// Unless `cfg.max_local_time` is set, paths stop once `L0` passes the last `u`.
pub fn verify_cf(
    spec: &StringSpec,
    u_list: &[f64],
    xi_list: &[f64],
    cfg: &SimConfig,
    c: f64,
    solver: &SolverOptions,
) -> Result<VerificationReport> {
    let spec = canonicalize(spec)?;
    cfg.check()?;
    let mut cfg = cfg.clone();
    if cfg.max_local_time.is_none() {
        cfg.max_local_time = u_list.iter().copied().reduce(f64::max);
    }
    let psis: Vec<_> = xi_list.iter().map(|&xi| exponent(&spec, xi, solver).map(|s| s.psi)).collect();
    let traces = simulate_par(&spec, &cfg, |_, p| trace(&p, u_list));
    let tolerance_floor = c * cfg.dt.sqrt();
    let mut rows = Vec::new();
    for (j, &u) in u_list.iter().enumerate() {
        for (&xi, psi) in xi_list.iter().zip(&psis) {
            let est = empirical_cf(&traces, xi, j);
            let tolerance = 3.0 * est.stderr.norm() + tolerance_floor;
            let (model, deviation, error) = match psi {
                Ok(p) => {
                    let m = (-*p * u).exp();
                    (Some([m.re, m.im]), Some((est.mean - m).norm()), None)
                }
                Err(e) => (None, None, Some(e.to_string())),
            };
            rows.push(CfRow {
                u,
                xi,
                model,
                empirical: [est.mean.re, est.mean.im],
                stderr: [est.stderr.re, est.stderr.im],
                n: est.n,
                excluded: est.excluded,
                deviation,
                tolerance,
                pass: deviation.is_some_and(|d| d <= tolerance),
                error,
            });
        }
    }
    Ok(VerificationReport {
        c,
        verdict: rows.iter().all(|r| r.pass),
        rows,
        provenance: RunProvenance::new(cfg.seed, cfg.dt, cfg.n_paths, solver),
    })
}

/// Pooled excursions of a campaign with the boundary local time they span.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcursionPool {
    pub records: Vec<ExcursionRecord>,
    pub discarded: usize,
    pub total_local_time: f64,
}

pub fn pool_excursions(spec: &StringSpec, cfg: &SimConfig) -> Result<ExcursionPool> {
    let spec = canonicalize(spec)?;
    cfg.check()?;
    let per_path = simulate_par(&spec, cfg, |_, p| {
        let ex = excursion_decompose(&p, cfg.min_excursion_steps);
        let alive_end = p.killed_at.unwrap_or(p.len() - 1);
        (ex, p.l0(alive_end))
    });
    let mut pool = ExcursionPool {
        records: Vec::new(),
        discarded: 0,
        total_local_time: 0.0,
    };
    for (ex, l0) in per_path {
        pool.records.extend(ex.records);
        pool.discarded += ex.discarded;
        pool.total_local_time += l0;
    }
    Ok(pool)
}

/// Symmetric log-spaced edges: `bins` per side on `[xmin, xmax]`, plus the
/// central bin `(-xmin, xmin)`.
pub fn log_edges(xmin: f64, xmax: f64, bins: usize) -> Vec<f64> {
    let side: Vec<f64> = (0..=bins)
        .map(|k| xmin * (xmax / xmin).powf(k as f64 / bins as f64))
        .collect();
    side.iter().rev().map(|x| -x).chain(side.iter().copied()).collect()
}

/// Histogram and tail summary of the pooled jumps.
pub fn levy_measure(
    pool: &ExcursionPool,
    edges: &[f64],
    min_local_time: f64,
    cfg: &SimConfig,
    tail_points: &[f64],
    solver: &SolverOptions,
) -> Result<(Vec<LevyBin>, LevyReport)> {
    let bins = empirical_levy_measure(&pool.records, edges, pool.total_local_time, min_local_time, cfg.min_jump)?;
    let tails = tail_points
        .iter()
        .map(|&x| {
            let side = |positive| {
                let (rate, se, n) = tail_rate(&pool.records, x, positive, pool.total_local_time);
                Estimate {
                    estimate: rate,
                    stderr: se,
                    n,
                }
            };
            TailSummary {
                x,
                positive: side(true),
                negative: side(false),
            }
        })
        .collect();
    let report = LevyReport {
        total_local_time: pool.total_local_time,
        completed_excursions: pool.records.iter().filter(|e| e.completed).count(),
        discarded_excursions: pool.discarded,
        tails,
        provenance: RunProvenance::new(cfg.seed, cfg.dt, cfg.n_paths, solver),
    };
    Ok((bins, report))
}

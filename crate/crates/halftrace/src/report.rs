//! JSON reports. Every statistic is written as `{estimate, stderr, n}`.

use halftrace_core::ode::SolverOptions;
use halftrace_core::rogers::PropertyReport;
use halftrace_core::string_model::ValidationReport;
use serde::Serialize;

use crate::csvio::VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub estimate: f64,
    pub stderr: f64,
    pub n: usize,
}

impl Estimate {
    /// Sample mean with its standard error.
    pub fn mean_of(xs: &[f64]) -> Estimate {
        let n = xs.len();
        let nf = n as f64;
        let m = xs.iter().sum::<f64>() / nf;
        let var = if n > 1 {
            xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (nf - 1.0)
        } else {
            f64::INFINITY
        };
        Estimate {
            estimate: m,
            stderr: (var / nf).sqrt(),
            n,
        }
    }

    pub fn within(&self, target: f64, k: f64) -> bool {
        (self.estimate - target).abs() <= k * self.stderr
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverSummary {
    pub rtol: f64,
    pub resolution: f64,
    pub initial_cut: f64,
    pub max_cut: f64,
}

impl From<&SolverOptions> for SolverSummary {
    fn from(o: &SolverOptions) -> Self {
        SolverSummary {
            rtol: o.rtol,
            resolution: o.resolution,
            initial_cut: o.initial_cut,
            max_cut: o.max_cut,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunProvenance {
    pub seed: u64,
    pub dt: f64,
    pub n_paths: usize,
    pub version: &'static str,
    pub solver: SolverSummary,
}

impl RunProvenance {
    pub fn new(seed: u64, dt: f64, n_paths: usize, solver: &SolverOptions) -> Self {
        RunProvenance {
            seed,
            dt,
            n_paths,
            version: VERSION,
            solver: solver.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CfRow {
    pub u: f64,
    pub xi: f64,
    /// `e^{-u psi(xi)}` as `[re, im]`; absent when the exponent failed.
    pub model: Option<[f64; 2]>,
    pub empirical: [f64; 2],
    pub stderr: [f64; 2],
    pub n: usize,
    /// Paths that stopped before reaching local time `u`.
    pub excluded: usize,
    pub deviation: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    /// The `C` of the rule `|delta| <= 3 stderr + C sqrt(dt)`.
    pub c: f64,
    pub rows: Vec<CfRow>,
    pub verdict: bool,
    pub provenance: RunProvenance,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetailReport {
    pub name: &'static str,
    pub ok: bool,
    pub max_violation: f64,
    pub location: Option<f64>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RogersReport {
    pub passed: bool,
    pub conclusive: bool,
    pub hermitian_ok: bool,
    pub nonneg_real_ok: bool,
    pub pick_trace_ok: bool,
    pub cm_plus_ok: Option<bool>,
    pub cm_minus_ok: Option<bool>,
    pub details: Vec<DetailReport>,
}

impl From<&PropertyReport> for RogersReport {
    fn from(r: &PropertyReport) -> Self {
        RogersReport {
            passed: r.passed(),
            conclusive: r.conclusive(),
            hermitian_ok: r.hermitian_ok,
            nonneg_real_ok: r.nonneg_real_ok,
            pick_trace_ok: r.pick_trace_ok,
            cm_plus_ok: r.cm_plus_ok,
            cm_minus_ok: r.cm_minus_ok,
            details: r
                .details
                .iter()
                .map(|d| DetailReport {
                    name: d.name,
                    ok: d.ok,
                    max_violation: d.max_violation,
                    location: d.location,
                    note: d.note.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationEntry {
    pub invariant: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationSummary {
    pub ok: bool,
    pub violations: Vec<ViolationEntry>,
}

impl From<&ValidationReport> for ValidationSummary {
    fn from(r: &ValidationReport) -> Self {
        ValidationSummary {
            ok: r.ok,
            violations: r
                .violations
                .iter()
                .map(|v| ViolationEntry {
                    invariant: v.invariant.clone(),
                    detail: v.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailSummary {
    pub x: f64,
    /// Rate of jumps `>= x` per unit `L0`.
    pub positive: Estimate,
    /// Rate of jumps `<= -x` per unit `L0`.
    pub negative: Estimate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevyReport {
    pub total_local_time: f64,
    pub completed_excursions: usize,
    pub discarded_excursions: usize,
    pub tails: Vec<TailSummary>,
    pub provenance: RunProvenance,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

//! The `halftrace` command.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use halftrace_core::gallery;
use halftrace_core::montecarlo::{excursion_decompose, sample_path, trace, SimConfig};
use halftrace_core::ode::{exponent_grid, ExponentSample, SolverOptions};
use halftrace_core::rogers::{check_rogers_properties, RogersCheckOptions};
use halftrace_core::string_model::{canonicalize, validate_string, StringSpec};
use halftrace_core::Error as CoreError;

use crate::csvio::{self, Provenance};
use crate::error::{Error, Result};
use crate::format::{read_string, string_to_json};
use crate::report::{to_json, RogersReport, ValidationSummary};
use crate::verify::{levy_measure, log_edges, pool_excursions, verify_cf, DEFAULT_C};

#[derive(Debug, Parser)]
#[command(name = "halftrace", version, about = "Trace exponents and boundary-trace simulation for Krein strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate psi on a log-spaced grid as CSV `xi,re_psi,im_psi`.
    Exponent {
        #[command(flatten)]
        input: StringArg,
        #[command(flatten)]
        grid: XiGrid,
        #[command(flatten)]
        out: OutArg,
    },
    /// Simulate one path and dump it, its trace or its excursions as CSV.
    Simulate {
        #[command(flatten)]
        input: StringArg,
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, value_enum, default_value_t = Dump::Trace)]
        dump: Dump,
        #[arg(long, default_value_t = 0)]
        path_index: u64,
        /// Trace grid, in units of `L0`.
        #[arg(long, value_delimiter = ',', default_value = "0.5,1")]
        u: Vec<f64>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare the empirical trace characteristic function with `e^{-u psi}`.
    VerifyCf {
        #[command(flatten)]
        input: StringArg,
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        xi: Vec<f64>,
        /// `C` in the rule `|delta| <= 3 stderr + C sqrt(dt)`.
        #[arg(long, default_value_t = DEFAULT_C)]
        tolerance: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Histogram the excursion jumps per unit of boundary local time.
    LevyMeasure {
        #[command(flatten)]
        input: StringArg,
        #[command(flatten)]
        sim: SimArgs,
        /// Bins per side.
        #[arg(long, default_value_t = 12)]
        bins: usize,
        #[arg(long, default_value_t = 0.05)]
        xmin: f64,
        #[arg(long, default_value_t = 20.0)]
        xmax: f64,
        /// Fail unless the pooled `L0` reaches this level.
        #[arg(long, default_value_t = 1.0)]
        min_local_time: f64,
        /// Discretization floor; bins meeting `(-min_jump, min_jump)` are marked
        /// excluded. Defaults to `10 sqrt(dt)`.
        #[arg(long)]
        min_jump: Option<f64>,
        /// JSON summary; standard error when absent.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run the Rogers-function battery on a string or on an exponent table.
    CheckRogers {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        string: Option<PathBuf>,
        /// CSV with header `xi,re_psi,im_psi`.
        #[arg(long)]
        table: Option<PathBuf>,
        #[command(flatten)]
        grid: XiGrid,
        #[command(flatten)]
        out: OutArg,
    },
    /// Example strings.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Check admissibility of a string file.
    Validate {
        #[command(flatten)]
        input: StringArg,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum GalleryAction {
    /// Print the entry names.
    List,
    /// Write the string file of an entry.
    Emit {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<f64>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dump {
    Path,
    Trace,
    Excursions,
}

#[derive(Debug, Args)]
pub struct StringArg {
    #[arg(long)]
    pub string: PathBuf,
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct XiGrid {
    #[arg(long, default_value_t = 0.1)]
    pub xi_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub xi_max: f64,
    #[arg(long, default_value_t = 41)]
    pub xi_points: usize,
}

#[derive(Debug, Args)]
pub struct SimArgs {
    #[arg(long, default_value_t = 1000)]
    pub paths: usize,
    #[arg(long, default_value_t = 1e-4)]
    pub dt: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Maximal diffusion time per path.
    #[arg(long, default_value_t = 1e4)]
    pub horizon: f64,
    /// Stop each path once `L0` reaches this level.
    #[arg(long)]
    pub max_local_time: Option<f64>,
}

impl SimArgs {
    fn config(&self) -> SimConfig {
        SimConfig {
            horizon: self.horizon,
            max_local_time: self.max_local_time,
            ..SimConfig::new(self.dt, self.paths, self.seed)
        }
    }

    fn provenance(&self) -> Provenance {
        Provenance {
            seed: Some(self.seed),
            dt: Some(self.dt),
        }
    }
}

impl XiGrid {
    fn points(&self) -> Result<Vec<f64>> {
        let (lo, hi, n) = (self.xi_min, self.xi_max, self.xi_points);
        if !(lo > 0.0 && hi >= lo && hi.is_finite()) || n == 0 {
            return Err(Error::Usage("need 0 < xi-min <= xi-max and xi-points >= 1".into()));
        }
        if n == 1 {
            return Ok(vec![lo]);
        }
        Ok((0..n)
            .map(|k| {
                if k == n - 1 {
                    hi
                } else {
                    lo * (hi / lo).powf(k as f64 / (n - 1) as f64)
                }
            })
            .collect())
    }
}

fn emit(out: &OutArg, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, bytes).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => Ok(stdout.write_all(bytes)?),
    }
}

fn load(path: &Path) -> Result<StringSpec> {
    let spec = read_string(path)?;
    let report = validate_string(&spec);
    if !report.ok {
        let what: Vec<String> = report
            .violations
            .iter()
            .map(|v| format!("{} ({})", v.invariant, v.detail))
            .collect();
        return Err(CoreError::InvalidString(what.join("; ")).into());
    }
    Ok(canonicalize(&spec)?)
}

fn tabulate(spec: &StringSpec, xis: &[f64]) -> Result<Vec<ExponentSample>> {
    exponent_grid(spec, xis, &SolverOptions::default())
        .into_iter()
        .map(|r| r.map_err(Error::from))
        .collect()
}

/// Executes one command, writing results to `stdout` unless `--out` is given.
/// Reports are written before a failing verdict is returned.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Exponent { input, grid, out } => {
            let spec = load(&input.string)?;
            let samples = tabulate(&spec, &grid.points()?)?;
            let mut buf = Vec::new();
            csvio::write_exponent_table(&mut buf, &samples, &Provenance::default())?;
            emit(out, &buf, stdout)
        }
        Command::Simulate {
            input,
            sim,
            dump,
            path_index,
            u,
            out,
        } => {
            let spec = load(&input.string)?;
            let cfg = sim.config();
            cfg.check()?;
            let path = sample_path(&spec, &cfg, *path_index);
            let mut buf = Vec::new();
            let prov = sim.provenance();
            match dump {
                Dump::Path => csvio::write_path(&mut buf, &path, &prov)?,
                Dump::Trace => csvio::write_trace(&mut buf, &trace(&path, u), &prov)?,
                Dump::Excursions => {
                    let ex = excursion_decompose(&path, cfg.min_excursion_steps);
                    csvio::write_excursions(&mut buf, &ex.records, &prov)?
                }
            }
            emit(out, &buf, stdout)
        }
        Command::VerifyCf {
            input,
            sim,
            u,
            xi,
            tolerance,
            out,
        } => {
            let spec = load(&input.string)?;
            if sim.paths < 100 {
                return Err(Error::Usage("verify-cf needs at least 100 paths".into()));
            }
            if u.iter().any(|v| !(*v >= 0.0)) || xi.iter().any(|v| !(*v > 0.0)) {
                return Err(Error::Usage("need u >= 0 and xi > 0".into()));
            }
            let report = verify_cf(&spec, u, xi, &sim.config(), *tolerance, &SolverOptions::default())?;
            emit(out, to_json(&report).as_bytes(), stdout)?;
            if report.verdict {
                Ok(())
            } else {
                let failed = report.rows.iter().filter(|r| !r.pass).count();
                Err(Error::Verification(format!("{failed} of {} rows outside tolerance", report.rows.len())))
            }
        }
        Command::LevyMeasure {
            input,
            sim,
            bins,
            xmin,
            xmax,
            min_local_time,
            min_jump,
            report,
            out,
        } => {
            let spec = load(&input.string)?;
            if *bins == 0 || !(*xmin > 0.0 && xmax > xmin) {
                return Err(Error::Usage("need bins >= 1 and 0 < xmin < xmax".into()));
            }
            let cfg = SimConfig {
                min_jump: min_jump.unwrap_or(10.0 * sim.dt.sqrt()),
                ..sim.config()
            };
            let pool = pool_excursions(&spec, &cfg)?;
            let edges = log_edges(*xmin, *xmax, *bins);
            let tails = [*xmin, 2.0 * xmin];
            let solver = SolverOptions::default();
            let result = levy_measure(&pool, &edges, *min_local_time, &cfg, &tails, &solver);
            let (hist, summary) = match result {
                Ok(v) => v,
                Err(e) => {
                    // partial output: the local time actually collected
                    let partial = levy_measure(&pool, &edges, 0.0, &cfg, &tails, &solver)
                        .ok()
                        .map(|(_, r)| to_json(&r));
                    if let Some(text) = partial {
                        write_report(report.as_deref(), &text)?;
                    }
                    return Err(e);
                }
            };
            write_report(report.as_deref(), &to_json(&summary))?;
            let mut buf = Vec::new();
            csvio::write_levy_bins(&mut buf, &hist, &sim.provenance())?;
            emit(out, &buf, stdout)
        }
        Command::CheckRogers {
            string,
            table,
            grid,
            out,
        } => {
            let samples = match (string, table) {
                (Some(path), _) => tabulate(&load(path)?, &grid.points()?)?,
                (None, Some(path)) => {
                    let file = fs::File::open(path).map_err(|source| Error::Io {
                        path: path.clone(),
                        source,
                    })?;
                    csvio::read_exponent_table(file)?
                }
                (None, None) => return Err(Error::Usage("need --string or --table".into())),
            };
            let r = check_rogers_properties(&samples, None, &RogersCheckOptions::default());
            let rep = RogersReport::from(&r);
            emit(out, to_json(&rep).as_bytes(), stdout)?;
            if rep.passed {
                Ok(())
            } else {
                let failed: Vec<&str> = rep.details.iter().filter(|d| !d.ok).map(|d| d.name).collect();
                Err(Error::Rejected(format!("not a Rogers function: {}", failed.join(", "))))
            }
        }
        Command::Gallery { action } => match action {
            GalleryAction::List => {
                let mut s = gallery::NAMES.join("\n");
                s.push('\n');
                Ok(stdout.write_all(s.as_bytes())?)
            }
            GalleryAction::Emit { name, params, out } => {
                let e = gallery::make(name, params)?;
                emit(out, string_to_json(&e.spec).as_bytes(), stdout)
            }
        },
        Command::Validate { input, out } => {
            let spec = read_string(&input.string)?;
            let r = validate_string(&spec);
            emit(out, to_json(&ValidationSummary::from(&r)).as_bytes(), stdout)?;
            if r.ok {
                Ok(())
            } else {
                Err(Error::Rejected(format!("{} violation(s)", r.violations.len())))
            }
        }
    }
}

fn write_report(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => Ok(std::io::stderr().write_all(text.as_bytes())?),
    }
}

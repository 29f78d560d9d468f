//! Multi-threaded counterpart of [`halftrace_core::montecarlo::simulate`].

use halftrace_core::montecarlo::{sample_path, PathRecord, SimConfig};
use halftrace_core::string_model::StringSpec;
use rayon::prelude::*;

/// Simulates paths `0..cfg.n_paths` across threads, reducing each with `f`.
/// Results come back in path order, identical to the sequential run.
pub fn simulate_par<T: Send>(
    spec: &StringSpec,
    cfg: &SimConfig,
    f: impl Fn(u64, PathRecord) -> T + Sync + Send,
) -> Vec<T> {
    (0..cfg.n_paths as u64)
        .into_par_iter()
        .map(|i| f(i, sample_path(spec, cfg, i)))
        .collect()
}

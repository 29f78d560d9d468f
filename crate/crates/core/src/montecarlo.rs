//! Pathwise simulation of the reflected diffusion `(X, Y)`, its boundary
//! trace and its excursions.
//!
//! `Y` is built from a free Brownian path `Ydot` by the discrete Skorokhod
//! regulator `rho`, with `L0 = 2 rho`. `A` and `B` are the additive functional
//! and the shear integral, and `X = W(A) + B` with `W` drawn from its own stream.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::numeric::Compensated;
use crate::string_model::{Atom, DensityProfile, DriftProfile, StringSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// Base time step, used within `far_ratio * sqrt(dt)` of every feature.
    pub dt: f64,
    /// Maximal diffusion time per path.
    pub horizon: f64,
    pub n_paths: usize,
    pub seed: u64,
    /// Band width of the occupation estimator of interior local times; `None` means `4 sqrt(dt)`.
    pub epsilon: Option<f64>,
    /// Excursions with fewer steps are discarded.
    pub min_excursion_steps: usize,
    /// Jumps below this size are excluded from histograms.
    pub min_jump: f64,
    /// Stop a path once `L0` reaches this level.
    pub max_local_time: Option<f64>,
    /// Coarsen the step away from the boundary, atoms, breakpoints and `levels`.
    pub adaptive: bool,
    /// Step standard deviation is at most `distance / far_ratio`.
    pub far_ratio: f64,
    /// Step standard deviation is at most `variation_ratio` times the
    /// variation length of the coefficients.
    pub variation_ratio: f64,
    /// Extra heights near which the base step is kept.
    pub levels: Vec<f64>,
    pub max_steps: usize,
}

impl SimConfig {
    pub fn new(dt: f64, n_paths: usize, seed: u64) -> Self {
        SimConfig {
            dt,
            horizon: 1e4,
            n_paths,
            seed,
            epsilon: None,
            min_excursion_steps: 3,
            min_jump: 0.0,
            max_local_time: None,
            adaptive: true,
            far_ratio: 6.0,
            variation_ratio: 0.1,
            levels: Vec::new(),
            max_steps: 100_000_000,
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon.unwrap_or(4.0 * self.dt.sqrt())
    }

    pub fn check(&self) -> Result<()> {
        let eps = self.epsilon();
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::BadParameter("dt must be positive".into()));
        }
        if !(eps >= self.dt.sqrt()) {
            return Err(Error::BadParameter("epsilon must be at least sqrt(dt)".into()));
        }
        if self.n_paths == 0 {
            return Err(Error::BadParameter("n_paths must be at least 1".into()));
        }
        if !(self.horizon > 0.0) || !(self.far_ratio > 0.0) || !(self.variation_ratio > 0.0) {
            return Err(Error::BadParameter("horizon and step ratios must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    Killed,
    Horizon,
    LocalTime,
}

/// One simulated path on its (possibly nonuniform) time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PathRecord {
    pub t: Vec<f64>,
    pub ydot: Vec<f64>,
    pub rho: Vec<f64>,
    pub y: Vec<f64>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub x: Vec<f64>,
    pub alive: Vec<bool>,
    /// First index with `Y >= R`.
    pub killed_at: Option<usize>,
    pub stop: StopReason,
}

impl PathRecord {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn l0(&self, k: usize) -> f64 {
        2.0 * self.rho[k]
    }

    pub fn final_l0(&self) -> f64 {
        self.l0(self.len() - 1)
    }
}

/// Precomputed per-spec data for the stepping loop.
struct Stepper<'a> {
    spec: &'a StringSpec,
    cfg: &'a SimConfig,
    features: Vec<f64>,
    atoms: Vec<Atom>,
    boundary_mass: f64,
    shear: Shear,
    b0: f64,
    eps: f64,
    fine: f64,
    /// Width of the boundary layer where singular coefficients are charged to `L0`.
    layer: f64,
    split_density: bool,
    layer_a: f64,
    layer_b2: f64,
    b_layer: f64,
    /// Mean of `b - b(layer)` over the layer.
    layer_shift: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shear {
    Zero,
    Constant,
    /// Itô's formula for the antiderivative of `b`; exact in the noise.
    Exact,
    /// Itô's formula for `b(max(y, layer))`, the rest charged to `L0`.
    Layered,
    /// Cell-averaged Euler step with a variance correction.
    Averaged,
}

/// Signed `int_lo^hi b`.
fn signed_integral(b: &DriftProfile, lo: f64, hi: f64) -> f64 {
    if hi >= lo {
        b.integral(lo, hi)
    } else {
        -b.integral(hi, lo)
    }
}

/// Occupation band `[lo, hi)` of width `eps` for level `y`.
pub fn band(y: f64, eps: f64) -> (f64, f64) {
    if y < 0.5 * eps {
        (0.0, eps)
    } else {
        (y - 0.5 * eps, y + 0.5 * eps)
    }
}

impl<'a> Stepper<'a> {
    fn new(spec: &'a StringSpec, cfg: &'a SimConfig) -> Self {
        let mut features = spec.features();
        features.push(0.0);
        if spec.is_finite() {
            features.push(spec.horizon);
        }
        features.extend(cfg.levels.iter().copied());
        features.sort_by(|a, b| a.total_cmp(b));
        features.dedup();
        let shear = match spec.b {
            _ if spec.b.is_zero() => Shear::Zero,
            DriftProfile::Constant(_) => Shear::Constant,
            DriftProfile::Sine(_) | DriftProfile::Cosine(_) => Shear::Exact,
            DriftProfile::Power { .. } => Shear::Layered,
            _ => Shear::Averaged,
        };
        let fine = cfg.dt.sqrt();
        let layer = cfg.far_ratio * fine;
        let split_density = matches!(spec.density, DensityProfile::Power { coef, exponent } if coef != 0.0 && exponent < 0.0);
        let b_layer = spec.b.value(layer);
        // With the layer field L_y - L0 Brownian in y, the residual of b splits
        // into its regression on L_layer - L0 and an independent bridge part.
        let (layer_b2, layer_shift) = if shear == Shear::Layered {
            let shift = spec.b.integral(0.0, layer) / layer - b_layer;
            let sq = spec.b.sq_integral(0.0, layer) - 2.0 * b_layer * spec.b.integral(0.0, layer)
                + b_layer * b_layer * layer;
            ((sq - layer * shift * shift).max(0.0), shift)
        } else {
            (0.0, 0.0)
        };
        Stepper {
            spec,
            cfg,
            features,
            atoms: spec.interior_atoms(),
            boundary_mass: spec.boundary_atom(),
            shear,
            b0: spec.b.value(0.0),
            eps: cfg.epsilon(),
            fine,
            layer,
            split_density,
            layer_a: if split_density { spec.density.integral(0.0, layer) } else { 0.0 },
            layer_b2,
            b_layer,
            layer_shift,
        }
    }

    /// Standard deviation of the next Brownian increment.
    fn sigma(&self, y: f64) -> f64 {
        if !self.cfg.adaptive {
            return self.fine;
        }
        let i = self.features.partition_point(|&f| f <= y);
        let mut d = f64::INFINITY;
        if i > 0 {
            d = y - self.features[i - 1];
        }
        if i < self.features.len() {
            d = d.min(self.features[i] - y);
        }
        let var = self
            .spec
            .density
            .variation_length(y)
            .min(self.spec.b.variation_length(y));
        let s = (d / self.cfg.far_ratio).min(self.cfg.variation_ratio * var);
        s.max(self.fine)
    }

    /// Increment of `A` over a step of variance `h` started at `y`, excluding the boundary atom.
    fn d_a(&self, y: f64, sigma: f64, h: f64) -> f64 {
        let mut da = 0.0;
        if !self.spec.density.is_zero() {
            let lo = (y - sigma).max(0.0);
            let hi = y + sigma;
            let from = if self.split_density { lo.max(self.layer) } else { lo };
            if hi > from {
                da += self.spec.density.integral(from, hi) / (hi - lo) * h;
            }
        }
        for atom in &self.atoms {
            let (lo, hi) = band(atom.y, self.eps);
            if y >= lo && y < hi {
                da += atom.mass * h / self.eps;
            }
        }
        da
    }

    /// `int_y^y1 b(max(v, layer)) dv`.
    fn layered_integral(&self, y: f64, y1: f64) -> f64 {
        let d = self.layer;
        let b = &self.spec.b;
        let (lo, hi, sign) = if y1 >= y { (y, y1, 1.0) } else { (y1, y, -1.0) };
        let flat = (hi.min(d) - lo).max(0.0) * self.b_layer;
        let curved = if hi > d { b.integral(lo.max(d), hi) } else { 0.0 };
        sign * (flat + curved)
    }

    fn run(&self, index: u64) -> PathRecord {
        let cfg = self.cfg;
        let mut ry = ChaCha8Rng::seed_from_u64(cfg.seed);
        ry.set_stream(2 * index);
        let mut rw = ChaCha8Rng::seed_from_u64(cfg.seed);
        rw.set_stream(2 * index + 1);

        let mut rec = PathRecord {
            t: Vec::new(),
            ydot: Vec::new(),
            rho: Vec::new(),
            y: Vec::new(),
            a: Vec::new(),
            b: Vec::new(),
            x: Vec::new(),
            alive: Vec::new(),
            killed_at: None,
            stop: StopReason::Horizon,
        };
        let (mut t, mut ydot, mut rho, mut y, mut a, mut b, mut x) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        let push = |rec: &mut PathRecord, v: [f64; 7], alive: bool| {
            rec.t.push(v[0]);
            rec.ydot.push(v[1]);
            rec.rho.push(v[2]);
            rec.y.push(v[3]);
            rec.a.push(v[4]);
            rec.b.push(v[5]);
            rec.x.push(v[6]);
            rec.alive.push(alive);
        };
        push(&mut rec, [t, ydot, rho, y, a, b, x], true);
        let bprof = &self.spec.b;

        for _ in 0..cfg.max_steps {
            if t >= cfg.horizon {
                break;
            }
            let sigma = self.sigma(y);
            let h = sigma * sigma;
            let n: f64 = StandardNormal.sample(&mut ry);
            let dw = sigma * n;
            let ydot1 = ydot + dw;
            let rho1 = rho.max(-ydot1);
            let y1 = ydot1 + rho1;
            let drho = rho1 - rho;

            let dl = 2.0 * drho;
            let mut da = self.d_a(y, sigma, h) + self.boundary_mass * dl;
            if self.split_density {
                // occupation density of the layer is L0 up to mean-zero fluctuations
                da += self.layer_a * dl;
            }
            let (db, extra) = match self.shear {
                Shear::Zero => (0.0, 0.0),
                Shear::Constant => (self.b0 * dw, 0.0),
                Shear::Exact => {
                    // Itô's formula for G(Y) with G' = b, so only the time integral is approximated
                    let g = signed_integral(bprof, y, y1);
                    let ito = 0.25 * (bprof.derivative(y) + bprof.derivative(y1)) * h;
                    (g - ito - self.b0 * drho, 0.0)
                }
                Shear::Layered => {
                    let g = self.layered_integral(y, y1);
                    let slope = |v: f64| if v > self.layer { bprof.derivative(v) } else { 0.0 };
                    let ito = 0.25 * (slope(y) + slope(y1)) * h;
                    let d = self.layer;
                    // discrete Tanaka increment, half the local time gained at the layer edge
                    let half_edge = (y1 - d).max(0.0) - (y - d).max(0.0)
                        - if y > d { y1 - y } else { 0.0 };
                    let regression = self.layer_shift * (half_edge - drho);
                    (g - ito - self.b_layer * drho + regression, self.layer_b2 * dl)
                }
                Shear::Averaged => {
                    let lo = (y - sigma).max(0.0);
                    let hi = y + sigma;
                    let w = hi - lo;
                    let mean = bprof.integral(lo, hi) / w;
                    let sq = bprof.sq_integral(lo, hi) / w;
                    (mean * dw, (sq - mean * mean).max(0.0) * h)
                }
            };
            let var = da + extra;
            let dx = if var > 0.0 {
                let g: f64 = StandardNormal.sample(&mut rw);
                var.sqrt() * g + db
            } else {
                db
            };

            t += h;
            ydot = ydot1;
            rho = rho1;
            y = y1;
            a += da;
            b += db;
            x += dx;
            let killed = self.spec.is_finite() && y >= self.spec.horizon;
            push(&mut rec, [t, ydot, rho, y, a, b, x], !killed);
            if killed {
                rec.killed_at = Some(rec.len() - 1);
                rec.stop = StopReason::Killed;
                return rec;
            }
            if let Some(limit) = cfg.max_local_time {
                if 2.0 * rho >= limit {
                    rec.stop = StopReason::LocalTime;
                    return rec;
                }
            }
        }
        rec.stop = StopReason::Horizon;
        rec
    }
}

/// Simulates path `index` of the run described by `cfg`; paths use disjoint
/// random streams, so any subset can be simulated in any order.
pub fn sample_path(spec: &StringSpec, cfg: &SimConfig, index: u64) -> PathRecord {
    Stepper::new(spec, cfg).run(index)
}

/// Simulates paths `0..cfg.n_paths` in order and reduces each with `f`.
pub fn simulate<T>(spec: &StringSpec, cfg: &SimConfig, mut f: impl FnMut(u64, PathRecord) -> T) -> Vec<T> {
    let stepper = Stepper::new(spec, cfg);
    (0..cfg.n_paths as u64).map(|i| f(i, stepper.run(i))).collect()
}

/// Occupation estimates `(1/eps) * time spent in band(y)` while alive.
pub fn local_time_profile(path: &PathRecord, y_grid: &[f64], eps: f64) -> Vec<f64> {
    y_grid
        .iter()
        .map(|&level| {
            let (lo, hi) = band(level, eps);
            let mut acc = Compensated::new();
            for k in 0..path.len().saturating_sub(1) {
                if path.alive[k] && path.y[k] >= lo && path.y[k] < hi {
                    acc.add(path.t[k + 1] - path.t[k]);
                }
            }
            acc.value() / eps
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TracePoint {
    Alive(f64),
    Dead,
    /// The path stopped before its local time reached `u`.
    HorizonTooShort,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceSample {
    pub u: Vec<f64>,
    pub z: Vec<TracePoint>,
}

/// `Z(u) = X` at the first grid time with `L0 >= u`.
pub fn trace(path: &PathRecord, u_grid: &[f64]) -> TraceSample {
    let mut z = Vec::with_capacity(u_grid.len());
    let mut k = 0;
    for &u in u_grid {
        while k < path.len() && path.l0(k) < u {
            k += 1;
        }
        z.push(if k < path.len() {
            if path.alive[k] {
                TracePoint::Alive(path.x[k])
            } else {
                TracePoint::Dead
            }
        } else if path.killed_at.is_some() {
            TracePoint::Dead
        } else {
            TracePoint::HorizonTooShort
        });
    }
    TraceSample {
        u: u_grid.to_vec(),
        z,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CfEstimate {
    pub mean: Complex64,
    /// Componentwise standard errors.
    pub stderr: Complex64,
    pub n: usize,
    /// Traces dropped because they stopped before `u`.
    pub excluded: usize,
}

/// Mean of `1{alive} e^{i xi Z(u_j)}` over traces.
pub fn empirical_cf(traces: &[TraceSample], xi: f64, j: usize) -> CfEstimate {
    let (mut re, mut im, mut re2, mut im2) = (
        Compensated::new(),
        Compensated::new(),
        Compensated::new(),
        Compensated::new(),
    );
    let mut n = 0usize;
    let mut excluded = 0usize;
    for tr in traces {
        let v = match tr.z[j] {
            TracePoint::Alive(z) => Complex64::new(0.0, xi * z).exp(),
            TracePoint::Dead => Complex64::new(0.0, 0.0),
            TracePoint::HorizonTooShort => {
                excluded += 1;
                continue;
            }
        };
        n += 1;
        re.add(v.re);
        im.add(v.im);
        re2.add(v.re * v.re);
        im2.add(v.im * v.im);
    }
    let nf = n as f64;
    let mean = Complex64::new(re.value() / nf, im.value() / nf);
    let se = |m: f64, s2: f64| {
        if n < 2 {
            f64::INFINITY
        } else {
            ((s2 / nf - m * m).max(0.0) * nf / (nf - 1.0) / nf).sqrt()
        }
    };
    CfEstimate {
        mean,
        stderr: Complex64::new(se(mean.re, re2.value()), se(mean.im, im2.value())),
        n,
        excluded,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcursionRecord {
    /// `L0` at the start of the excursion.
    pub u: f64,
    pub zeta: f64,
    pub max: f64,
    pub dx: f64,
    pub completed: bool,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Excursions {
    pub records: Vec<ExcursionRecord>,
    pub discarded: usize,
    pub discarded_time: f64,
    /// Time of steps that start and end at the boundary.
    pub boundary_time: f64,
}

/// Splits a path into maximal runs with `Y > 0`.
pub fn excursion_decompose(path: &PathRecord, min_steps: usize) -> Excursions {
    let mut out = Excursions {
        records: Vec::new(),
        discarded: 0,
        discarded_time: 0.0,
        boundary_time: 0.0,
    };
    let n = path.len();
    let mut k = 0;
    while k + 1 < n {
        if path.y[k + 1] <= 0.0 {
            if path.alive[k + 1] {
                out.boundary_time += path.t[k + 1] - path.t[k];
            }
            k += 1;
            continue;
        }
        let start = k;
        let mut e = k + 1;
        let mut max = path.y[e];
        while e + 1 < n && path.y[e] > 0.0 && path.alive[e] {
            e += 1;
            max = max.max(path.y[e]);
        }
        let completed = path.y[e] <= 0.0 && path.alive[e];
        let steps = e - start;
        let zeta = path.t[e] - path.t[start];
        if steps < min_steps {
            out.discarded += 1;
            out.discarded_time += zeta;
        } else {
            out.records.push(ExcursionRecord {
                u: path.l0(start),
                zeta,
                max,
                dx: path.x[e] - path.x[start],
                completed,
                steps,
            });
        }
        k = e;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevyBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    /// `count / U`
    pub mass: f64,
    pub stderr: f64,
    /// The bin meets `(-min_jump, min_jump)`.
    pub excluded: bool,
}

impl LevyBin {
    pub fn density(&self) -> f64 {
        self.mass / (self.hi - self.lo)
    }
}

/// Histogram of completed-excursion jumps per unit of boundary local time.
pub fn empirical_levy_measure(
    excursions: &[ExcursionRecord],
    edges: &[f64],
    total_local_time: f64,
    min_local_time: f64,
    min_jump: f64,
) -> Result<Vec<LevyBin>> {
    if !(total_local_time >= min_local_time) || !(total_local_time > 0.0) {
        return Err(Error::InsufficientLocalTime {
            have: total_local_time,
            need: min_local_time,
        });
    }
    if edges.len() < 2 || edges.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::BadParameter("bin edges must increase".into()));
    }
    let mut counts = alloc::vec![0usize; edges.len() - 1];
    for e in excursions.iter().filter(|e| e.completed) {
        let i = edges.partition_point(|&v| v <= e.dx);
        if i > 0 && i < edges.len() {
            counts[i - 1] += 1;
        }
    }
    Ok(edges
        .windows(2)
        .zip(counts)
        .map(|(w, c)| LevyBin {
            lo: w[0],
            hi: w[1],
            count: c,
            mass: c as f64 / total_local_time,
            stderr: (c as f64).sqrt() / total_local_time,
            excluded: w[0] < min_jump && w[1] > -min_jump,
        })
        .collect())
}

/// Rate of completed excursions with `dx >= x` (`positive`) or `dx <= -x`,
/// per unit of local time, with its Poisson standard error and count.
pub fn tail_rate(excursions: &[ExcursionRecord], x: f64, positive: bool, total_local_time: f64) -> (f64, f64, usize) {
    let c = excursions
        .iter()
        .filter(|e| e.completed && if positive { e.dx >= x } else { e.dx <= -x })
        .count();
    let cf = c as f64;
    (cf / total_local_time, cf.sqrt() / total_local_time, c)
}

/// Kolmogorov–Smirnov statistic of `samples` against the exponential law
/// with the given mean, with its asymptotic p-value.
pub fn ks_exponential(samples: &[f64], mean: f64) -> (f64, f64) {
    let mut s: Vec<f64> = samples.to_vec();
    s.sort_by(|a, b| a.total_cmp(b));
    let n = s.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &v) in s.iter().enumerate() {
        let f = -(-v / mean).exp_m1();
        d = d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n);
    }
    let lambda = (n.sqrt() + 0.12 + 0.11 / n.sqrt()) * d;
    if lambda <= 0.0 {
        return (d, 1.0);
    }
    let mut p = 0.0;
    if lambda < 1.18 {
        // dual theta series, fast for small lambda
        let c = core::f64::consts::PI * core::f64::consts::PI / (8.0 * lambda * lambda);
        let mut cdf = 0.0;
        for k in 1..=20 {
            let m = (2 * k - 1) as f64;
            let term = (-m * m * c).exp();
            cdf += term;
            if term < 1e-17 {
                break;
            }
        }
        p = 1.0 - (2.0 * core::f64::consts::PI).sqrt() / lambda * cdf;
    } else {
        for k in 1..=100 {
            let kf = k as f64;
            let term = (-2.0 * kf * kf * lambda * lambda).exp();
            p += if k % 2 == 1 { 2.0 * term } else { -2.0 * term };
            if term < 1e-17 {
                break;
            }
        }
    }
    (d, p.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(r: f64, b: DriftProfile) -> StringSpec {
        StringSpec::new(r, vec![], DensityProfile::Zero, b)
    }

    #[test]
    fn empty_string_gives_zero_path() {
        let cfg = SimConfig {
            horizon: 1.0,
            ..SimConfig::new(1e-3, 1, 7)
        };
        let p = sample_path(&spec(f64::INFINITY, DriftProfile::Zero), &cfg, 0);
        assert!(p.x.iter().all(|&x| x == 0.0));
        assert!(p.y.iter().all(|&y| y >= 0.0));
    }

    #[test]
    fn pure_shear_tracks_the_free_path() {
        let cfg = SimConfig {
            horizon: 2.0,
            adaptive: false,
            ..SimConfig::new(1e-3, 1, 3)
        };
        let p = sample_path(&spec(f64::INFINITY, DriftProfile::Constant(-2.0)), &cfg, 0);
        for k in 0..p.len() {
            assert!((p.x[k] + 2.0 * p.ydot[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn seeds_are_deterministic_and_streams_disjoint() {
        let cfg = SimConfig {
            horizon: 0.5,
            ..SimConfig::new(1e-3, 2, 11)
        };
        let s = spec(f64::INFINITY, DriftProfile::Sine(-1.0));
        assert_eq!(sample_path(&s, &cfg, 1), sample_path(&s, &cfg, 1));
        assert_ne!(sample_path(&s, &cfg, 0).ydot, sample_path(&s, &cfg, 1).ydot);
    }

    #[test]
    fn ks_accepts_exact_quantiles() {
        let n = 1000;
        let v: Vec<f64> = (0..n).map(|i| -(1.0 - (i as f64 + 0.5) / n as f64).ln()).collect();
        let (d, p) = ks_exponential(&v, 1.0);
        assert!(d < 1e-3 && p > 0.99);
        let (_, p) = ks_exponential(&v, 2.0);
        assert!(p < 1e-6);
    }
}

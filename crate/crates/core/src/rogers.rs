//! Lévy–Khintchine and Rogers-function evaluators, and the real-axis
//! property battery for exponents of processes with completely monotone jumps.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::numeric::{
    divided_differences, gamma, gamma_real, integrate_log_line, integrate_oscillatory_tail,
    integrate_with_breaks, QuadTol,
};
use crate::ode::ExponentSample;
use crate::string_model::{DensityProfile, Table};

/// One side of a Lévy density, as a function of `|x|` on `(0, inf)`.
#[derive(Debug, Clone, PartialEq)]
pub enum LevyDensity {
    Zero,
    /// `coef * x^(-1-index)`
    Stable { coef: f64, index: f64 },
    /// Linear interpolation between breakpoints, zero outside them.
    Table(Table),
}

impl LevyDensity {
    pub fn value(&self, x: f64) -> f64 {
        match self {
            LevyDensity::Zero => 0.0,
            LevyDensity::Stable { coef, index } => coef * x.powf(-1.0 - index),
            LevyDensity::Table(t) => {
                if x < t.ys[0] || x > t.ys[t.ys.len() - 1] {
                    0.0
                } else {
                    t.value(x)
                }
            }
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            LevyDensity::Zero => true,
            LevyDensity::Stable { coef, .. } => *coef == 0.0,
            LevyDensity::Table(t) => t.values.iter().all(|&v| v == 0.0),
        }
    }

    fn breakpoints(&self) -> &[f64] {
        match self {
            LevyDensity::Table(t) => &t.ys,
            _ => &[],
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            LevyDensity::Zero => Ok(()),
            LevyDensity::Stable { coef, index } => {
                if !(*coef >= 0.0) || !(*index > 0.0 && *index < 2.0) {
                    Err(Error::InvalidMeasure(alloc::format!(
                        "stable tail needs coef >= 0 and index in (0, 2), got {coef}, {index}"
                    )))
                } else {
                    Ok(())
                }
            }
            LevyDensity::Table(t) => {
                let ok = !t.ys.is_empty()
                    && t.ys.len() == t.values.len()
                    && t.ys[0] > 0.0
                    && t.ys.windows(2).all(|w| w[1] > w[0])
                    && t.values.iter().all(|&v| v >= 0.0 && v.is_finite());
                if ok {
                    Ok(())
                } else {
                    Err(Error::InvalidMeasure("malformed density table".into()))
                }
            }
        }
    }
}

/// `(gaussian, drift, kill, nu)` with `nu` split into its two half-lines.
#[derive(Debug, Clone, PartialEq)]
pub struct LevyTriplet {
    pub gaussian: f64,
    pub drift: f64,
    pub kill: f64,
    pub plus: LevyDensity,
    pub minus: LevyDensity,
}

impl LevyTriplet {
    pub fn check(&self) -> Result<()> {
        if !(self.gaussian >= 0.0) || !(self.kill >= 0.0) || !self.drift.is_finite() {
            return Err(Error::BadParameter(
                "gaussian and kill must be nonnegative, drift finite".into(),
            ));
        }
        self.plus.check()?;
        self.minus.check()
    }
}

/// `t - sin t` without cancellation.
fn t_minus_sin(t: f64) -> f64 {
    if t.abs() < 0.1 {
        let t2 = t * t;
        t * t2 * (1.0 / 6.0 - t2 * (1.0 / 120.0 - t2 * (1.0 / 5040.0 - t2 / 362_880.0)))
    } else {
        t - t.sin()
    }
}

/// `x - 1 + e^{-x}` without cancellation.
fn x_minus_one_plus_exp(x: f64) -> f64 {
    if x.abs() < 0.1 {
        let x2 = x * x;
        x2 * (0.5 - x / 6.0 + x2 / 24.0 - x2 * x / 120.0 + x2 * x2 / 720.0)
    } else {
        x + (-x).exp_m1()
    }
}

fn lk_tol() -> QuadTol {
    QuadTol {
        abs: 1e-13,
        rel: 1e-10,
        max_intervals: 4000,
    }
}

/// `int_0^inf (1 - e^{i xi x} + i xi (1 - e^{-x})) nu(x) dx` for `xi > 0`.
fn lk_side(nu: &LevyDensity, xi: f64) -> Result<Complex64> {
    if nu.is_zero() || xi == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let tol = lk_tol();
    let breaks = nu.breakpoints();
    let near = |x: f64| {
        let s = (0.5 * xi * x).sin();
        let re = 2.0 * s * s;
        let im = t_minus_sin(xi * x) - xi * x_minus_one_plus_exp(x);
        Complex64::new(re, im) * nu.value(x)
    };
    let small = match nu {
        // x^(1-index) decays too slowly on the log line near 2; integrate down
        // to x0 and add the Taylor remainder on (0, x0)
        LevyDensity::Stable { coef, index } => {
            let x0 = 1e-3 * xi.recip().min(1.0);
            let t0 = x0.ln();
            let n = (-t0).ceil() as usize;
            let ts: Vec<f64> = (0..=n).map(|j| t0 * (1.0 - j as f64 / n as f64)).collect();
            let body = integrate_with_breaks(
                &mut |t: f64| {
                    let x = t.exp();
                    near(x) * x
                },
                &ts,
                tol,
            )?;
            let m = |k: f64| x0.powf(k - index) / (k - index);
            let (x2, x4) = (xi * xi, xi * xi * xi * xi);
            let re = x2 / 2.0 * m(2.0) - x4 / 24.0 * m(4.0);
            let im = -xi / 2.0 * m(2.0) + (xi * x2 + xi) / 6.0 * m(3.0) - xi / 24.0 * m(4.0);
            body.value + Complex64::new(re, im) * *coef
        }
        _ => integrate_log_line(
            |x| if x > 1.0 { Complex64::new(0.0, 0.0) } else { near(x) },
            1e-4,
            1.0,
            breaks,
            tol,
        )?
        .value,
    };
    let smooth = integrate_log_line(
        |x| {
            if x < 1.0 {
                return Complex64::new(0.0, 0.0);
            }
            Complex64::new(1.0, -xi * (-x).exp_m1()) * nu.value(x)
        },
        1.0,
        1e4,
        breaks,
        tol,
    )?;
    let osc = integrate_oscillatory_tail(|x| Complex64::new(nu.value(x), 0.0), 1.0, xi, tol)?;
    Ok(small + smooth.value - osc.value)
}

/// `Psi(xi) = gaussian xi^2 - i drift xi + kill
///   + int (1 - e^{i xi x} + i xi (1 - e^{-|x|}) sign x) nu(dx)`.
pub fn levy_khintchine(t: &LevyTriplet, xi: f64) -> Result<Complex64> {
    t.check()?;
    let base = Complex64::new(t.gaussian * xi * xi + t.kill, -t.drift * xi);
    let a = xi.abs();
    let plus = lk_side(&t.plus, a)?;
    let minus = lk_side(&t.minus, a)?.conj();
    let total = base + if xi >= 0.0 { plus + minus } else { (plus + minus).conj() };
    Ok(total)
}

/// A point mass of `mu` at a nonzero location.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuAtom {
    pub s: f64,
    pub mass: f64,
}

/// `mu` restricted to `s > 0` (`plus`) and to `s < 0` (`minus`, as a function of `|s|`).
#[derive(Debug, Clone, PartialEq)]
pub struct MuRepresentation {
    pub gaussian: f64,
    pub drift: f64,
    pub kill: f64,
    pub atoms: Vec<MuAtom>,
    pub plus: DensityProfile,
    pub minus: DensityProfile,
}

fn mu_density_integrable(d: &DensityProfile) -> core::result::Result<(), String> {
    match d {
        DensityProfile::Zero => Ok(()),
        DensityProfile::Constant(c) if *c == 0.0 => Ok(()),
        DensityProfile::Constant(_) => Err("constant density diverges against ds/|s| at 0".into()),
        DensityProfile::Power { coef, exponent } => {
            if *coef == 0.0 || (*exponent > 0.0 && *exponent < 2.0) {
                Ok(())
            } else {
                Err(alloc::format!("power exponent {exponent} outside (0, 2)"))
            }
        }
        DensityProfile::RationalPower { coef, .. } => {
            if *coef == 0.0 {
                Ok(())
            } else {
                Err("rational power is positive at 0, so mu(ds)/|s| diverges there".into())
            }
        }
        DensityProfile::Table(t) => {
            if t.values.first() == Some(&0.0) && t.values.iter().all(|&v| v >= 0.0) {
                Ok(())
            } else {
                Err("table must vanish at its first breakpoint and be nonnegative".into())
            }
        }
    }
}

/// `(1/pi) int_0^inf (xi/(xi+is) + i xi/(1+s)) f(s) ds / s` for `xi > 0`.
fn mu_side(f: &DensityProfile, xi: f64) -> Result<Complex64> {
    if f.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut breaks: Vec<f64> = f.breakpoints().iter().copied().filter(|&s| s > 0.0).collect();
    breaks.push(xi);
    breaks.push(1.0);
    breaks.sort_by(|a, b| a.total_cmp(b));
    let r = integrate_log_line(
        |s| {
            let den = xi * xi + s * s;
            let re = xi * xi / (den * s);
            let im = xi * (xi * xi - s) / (den * (1.0 + s) * s);
            Complex64::new(re, im) * f.value(s)
        },
        1e-3 * xi.min(1.0),
        1e3 * xi.max(1.0),
        &breaks,
        lk_tol(),
    )?;
    Ok(r.value / PI)
}

/// `Psi(xi) = gaussian xi^2 - i drift xi + kill
///   + (1/pi) int (xi/(xi+is) + i xi sign s / (1+|s|)) mu(ds) / |s|`.
pub fn rogers_from_mu(m: &MuRepresentation, xi: f64) -> Result<Complex64> {
    if !(m.gaussian >= 0.0 && m.kill >= 0.0) {
        return Err(Error::BadParameter("gaussian and kill must be nonnegative".into()));
    }
    if xi == 0.0 {
        return Err(Error::BadParameter("xi must be nonzero".into()));
    }
    mu_density_integrable(&m.plus).map_err(Error::InvalidMeasure)?;
    mu_density_integrable(&m.minus).map_err(Error::InvalidMeasure)?;
    if m.atoms.iter().any(|a| a.s == 0.0 || !(a.mass >= 0.0)) {
        return Err(Error::InvalidMeasure("atoms need s != 0 and mass >= 0".into()));
    }
    let a = xi.abs();
    let mut sum = mu_side(&m.plus, a)? + mu_side(&m.minus, a)?.conj();
    for atom in &m.atoms {
        let s = atom.s;
        let term = Complex64::new(a, 0.0) / Complex64::new(a, s)
            + Complex64::new(0.0, a * s.signum() / (1.0 + s.abs()));
        sum += term * (atom.mass / (PI * s.abs()));
    }
    let base = Complex64::new(m.gaussian * a * a + m.kill, -m.drift * a);
    let total = base + sum;
    Ok(if xi > 0.0 { total } else { total.conj() })
}

/// Angle function of the exponential representation, as a function of `|s|`.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaProfile {
    Constant(f64),
    /// `values[0]` on `[0, breaks[0])`, `values[j]` on `[breaks[j-1], breaks[j])`.
    PiecewiseConstant { breaks: Vec<f64>, values: Vec<f64> },
    Table(Table),
}

impl ThetaProfile {
    pub fn value(&self, s: f64) -> f64 {
        match self {
            ThetaProfile::Constant(v) => *v,
            ThetaProfile::PiecewiseConstant { breaks, values } => {
                values[breaks.partition_point(|&t| t <= s)]
            }
            ThetaProfile::Table(t) => t.value(s),
        }
    }

    fn breakpoints(&self) -> &[f64] {
        match self {
            ThetaProfile::Constant(_) => &[],
            ThetaProfile::PiecewiseConstant { breaks, .. } => breaks,
            ThetaProfile::Table(t) => &t.ys,
        }
    }

    fn values(&self) -> &[f64] {
        match self {
            ThetaProfile::Constant(v) => core::slice::from_ref(v),
            ThetaProfile::PiecewiseConstant { values, .. } => values,
            ThetaProfile::Table(t) => &t.values,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaRepresentation {
    pub c: f64,
    pub plus: ThetaProfile,
    pub minus: ThetaProfile,
}

/// `(1/pi) int_0^inf (xi/(xi+is) - 1/(1+s)) theta(s) ds / s` for `xi > 0`.
fn theta_side(th: &ThetaProfile, xi: f64) -> Result<Complex64> {
    if th.values().iter().all(|&v| v == 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut breaks: Vec<f64> = th.breakpoints().iter().copied().filter(|&s| s > 0.0).collect();
    breaks.push(xi);
    breaks.push(1.0);
    breaks.sort_by(|a, b| a.total_cmp(b));
    let r = integrate_log_line(
        |s| {
            let den = xi * xi + s * s;
            let re = (xi * xi - s) / (den * (1.0 + s));
            let im = -xi / den;
            Complex64::new(re, im) * th.value(s)
        },
        1e-3 * xi.min(1.0),
        1e3 * xi.max(1.0),
        &breaks,
        lk_tol(),
    )?;
    Ok(r.value / PI)
}

/// `Psi(xi) = c exp((1/pi) int (xi/(xi+is) - 1/(1+|s|)) theta(s) ds / |s|)`, `xi > 0`.
pub fn rogers_from_theta(r: &ThetaRepresentation, xi: f64) -> Result<Complex64> {
    if !(r.c > 0.0) || !(xi > 0.0) {
        return Err(Error::BadParameter("need c > 0 and xi > 0".into()));
    }
    for side in [&r.plus, &r.minus] {
        if side.values().iter().any(|&v| !(0.0..=PI).contains(&v)) {
            return Err(Error::BadParameter("theta must take values in [0, pi]".into()));
        }
    }
    let e = theta_side(&r.plus, xi)? + theta_side(&r.minus, xi)?.conj();
    Ok(e.exp() * r.c)
}

/// First failing entry of a finite-difference sign battery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CmViolation {
    pub order: usize,
    pub index: usize,
    pub x: f64,
    /// Signed amount by which the difference has the wrong sign.
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CmOutcome {
    pub ok: bool,
    pub first_violation: Option<CmViolation>,
}

/// Rounding allowance, in units of the absolute terms forming a difference.
const CM_ROUNDING: f64 = 1e3 * f64::EPSILON;

fn sign_battery(
    x: &[f64],
    f: &[f64],
    order: usize,
    sign_of: impl Fn(usize) -> f64,
) -> Result<CmOutcome> {
    if x.len() < order + 1 || x.len() != f.len() {
        return Err(Error::InsufficientSamples {
            needed: order + 1,
            got: x.len().min(f.len()),
        });
    }
    if x.iter().any(|&v| !(v > 0.0)) || x.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::BadParameter("grid must be positive and increasing".into()));
    }
    let (cols, scales) = divided_differences(x, f, order);
    for j in 0..=order {
        let s = sign_of(j);
        for (i, (&d, &sc)) in cols[j].iter().zip(&scales[j]).enumerate() {
            if s * d < -CM_ROUNDING * sc {
                return Ok(CmOutcome {
                    ok: false,
                    first_violation: Some(CmViolation {
                        order: j,
                        index: i,
                        x: x[i],
                        value: s * d,
                    }),
                });
            }
        }
    }
    Ok(CmOutcome {
        ok: true,
        first_violation: None,
    })
}

/// Necessary test for complete monotonicity: divided differences of order `j`
/// must have sign `(-1)^j` for `j = 0..=order`.
pub fn complete_monotonicity_check(x: &[f64], f: &[f64], order: usize) -> Result<CmOutcome> {
    sign_battery(x, f, order, |j| if j % 2 == 0 { 1.0 } else { -1.0 })
}

/// Necessary test for a Bernstein function: nonnegative, and divided
/// differences of order `j >= 1` with sign `(-1)^(j+1)`, i.e. a completely
/// monotone derivative tested to order `order - 1`.
pub fn bernstein_check(x: &[f64], f: &[f64], order: usize) -> Result<CmOutcome> {
    sign_battery(x, f, order, |j| if j == 0 || j % 2 == 1 { 1.0 } else { -1.0 })
}

/// `n` points `x0 * ratio^k`.
pub fn geometric_grid(x0: f64, ratio: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| x0 * ratio.powi(k as i32)).collect()
}

/// `n` points spanning `decades` decades from `x0`.
pub fn decade_grid(x0: f64, decades: f64, n: usize) -> Vec<f64> {
    let ratio = 10f64.powf(decades / (n - 1) as f64);
    geometric_grid(x0, ratio, n)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckDetail {
    pub name: &'static str,
    pub ok: bool,
    pub max_violation: f64,
    pub location: Option<f64>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub hermitian_ok: bool,
    pub nonneg_real_ok: bool,
    /// Real-axis traces of the Nevanlinna–Pick property of `psi(xi)/xi`.
    pub pick_trace_ok: bool,
    /// `None` when no Lévy density was supplied.
    pub cm_plus_ok: Option<bool>,
    pub cm_minus_ok: Option<bool>,
    pub details: Vec<CheckDetail>,
}

impl PropertyReport {
    /// Conjunction of every check that could be run.
    pub fn passed(&self) -> bool {
        self.hermitian_ok
            && self.nonneg_real_ok
            && self.pick_trace_ok
            && self.cm_plus_ok.unwrap_or(true)
            && self.cm_minus_ok.unwrap_or(true)
    }

    pub fn conclusive(&self) -> bool {
        self.cm_plus_ok.is_some() && self.cm_minus_ok.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RogersCheckOptions {
    /// Allowed negative real part, relative to `1 + |psi|`.
    pub re_tol: f64,
    /// Slack on the elasticity bounds.
    pub elasticity_tol: f64,
    pub cm_order: usize,
    pub cm_points: usize,
    pub cm_x0: f64,
    pub cm_decades: f64,
}

impl Default for RogersCheckOptions {
    fn default() -> Self {
        RogersCheckOptions {
            re_tol: 1e-8,
            elasticity_tol: 1e-6,
            cm_order: 8,
            cm_points: 64,
            cm_x0: 0.01,
            cm_decades: 4.0,
        }
    }
}

/// Real-axis battery for a sampled exponent.
///
/// The elasticity `e = d log|psi| / d log xi` of a Rogers function with
/// argument `a = arg psi` satisfies `1 - cos a <= e <= 1 + cos a`; this is
/// tested between consecutive positive samples together with `|a| <= pi/2`.
pub fn check_rogers_properties(
    samples: &[ExponentSample],
    levy: Option<(&LevyDensity, &LevyDensity)>,
    opts: &RogersCheckOptions,
) -> PropertyReport {
    let mut details = Vec::new();

    // Hermitian symmetry on any pairs +xi / -xi present in a table.
    let mut herm_worst: f64 = 0.0;
    let mut herm_at = None;
    let mut pairs = 0;
    for s in samples.iter().filter(|s| s.xi < 0.0) {
        if let Some(p) = samples.iter().find(|p| p.xi == -s.xi) {
            pairs += 1;
            let gap = (p.psi.conj() - s.psi).norm() / (1.0 + p.psi.norm());
            if gap > herm_worst {
                herm_worst = gap;
                herm_at = Some(p.xi);
            }
        }
    }
    let hermitian_ok = herm_worst <= opts.re_tol;
    details.push(CheckDetail {
        name: "hermitian",
        ok: hermitian_ok,
        max_violation: herm_worst,
        location: herm_at,
        note: if pairs == 0 {
            "negative xi defined by conjugation".into()
        } else {
            alloc::format!("{pairs} conjugate pairs compared")
        },
    });

    let mut pos: Vec<ExponentSample> = samples.iter().copied().filter(|s| s.xi > 0.0).collect();
    pos.sort_by(|a, b| a.xi.total_cmp(&b.xi));

    let mut re_worst: f64 = 0.0;
    let mut re_at = None;
    for s in &pos {
        let v = -s.psi.re / (1.0 + s.psi.norm());
        if v > re_worst {
            re_worst = v;
            re_at = Some(s.xi);
        }
    }
    let nonneg_real_ok = re_worst <= opts.re_tol;
    details.push(CheckDetail {
        name: "nonneg_real",
        ok: nonneg_real_ok,
        max_violation: re_worst,
        location: re_at,
        note: String::new(),
    });

    let mut pick_worst: f64 = 0.0;
    let mut pick_at = None;
    for w in pos.windows(2) {
        let (s1, s2) = (w[0], w[1]);
        if s1.psi.norm() == 0.0 || s2.psi.norm() == 0.0 {
            // the zero exponent is a Rogers function; a jump away from it is not
            if s1.psi.norm() != s2.psi.norm() && s2.psi.norm() == 0.0 {
                pick_worst = pick_worst.max(1.0);
                pick_at = Some(s2.xi);
            }
            continue;
        }
        let (a1, a2) = (s1.psi.arg(), s2.psi.arg());
        let arg_excess = (a1.abs().max(a2.abs()) - PI / 2.0).max(0.0);
        let cmax = if a1.signum() != a2.signum() {
            1.0
        } else {
            a1.cos().max(a2.cos()).max(0.0)
        };
        let e = (s2.psi.norm() / s1.psi.norm()).ln() / (s2.xi / s1.xi).ln();
        let excess = (e - (1.0 + cmax)).max((1.0 - cmax) - e).max(0.0) + arg_excess;
        if excess > pick_worst {
            pick_worst = excess;
            pick_at = Some(s1.xi);
        }
    }
    let pick_trace_ok = pick_worst <= opts.elasticity_tol;
    details.push(CheckDetail {
        name: "pick_trace",
        ok: pick_trace_ok,
        max_violation: pick_worst,
        location: pick_at,
        note: "elasticity within [1 - cos arg, 1 + cos arg]".into(),
    });

    let (cm_plus_ok, cm_minus_ok) = match levy {
        Some((plus, minus)) => {
            let grid = decade_grid(opts.cm_x0, opts.cm_decades, opts.cm_points);
            let mut run = |nu: &LevyDensity, name: &'static str| {
                let f: Vec<f64> = grid.iter().map(|&x| nu.value(x)).collect();
                let out = complete_monotonicity_check(&grid, &f, opts.cm_order);
                let (ok, v) = match out {
                    Ok(o) => (o.ok, o.first_violation),
                    Err(_) => (false, None),
                };
                details.push(CheckDetail {
                    name,
                    ok,
                    max_violation: v.map_or(0.0, |v| -v.value),
                    location: v.map(|v| v.x),
                    note: v.map_or(String::new(), |v| alloc::format!("order {}", v.order)),
                });
                ok
            };
            (Some(run(plus, "cm_plus")), Some(run(minus, "cm_minus")))
        }
        None => {
            details.push(CheckDetail {
                name: "cm",
                ok: true,
                max_violation: 0.0,
                location: None,
                note: "inconclusive without levy density".into(),
            });
            (None, None)
        }
    };

    PropertyReport {
        hermitian_ok,
        nonneg_real_ok,
        pick_trace_ok,
        cm_plus_ok,
        cm_minus_ok,
        details,
    }
}

fn check_index(alpha: f64) -> Result<()> {
    if alpha == 1.0 {
        return Err(Error::IndexOne);
    }
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::BadParameter("stable index must lie in (0, 2)".into()));
    }
    Ok(())
}

/// Reference side constants of the stable string with parameters `(alpha, p, q)`:
/// `C+- = |A / (2 cos(alpha pi/2)) -+ B / (2 sin(alpha pi/2))|` with `A + iB`
/// from the Gamma-ratio formula (`p > 0`) or the phase formula (`p = 0`).
/// Their ratio is that of the Lévy measure; their common scale is `2 |Gamma(-alpha)|`
/// times the scale of [`stable_tail_constants`] under this crate's clock.
pub fn stable_levy_constants(alpha: f64, p: f64, q: f64) -> Result<(f64, f64)> {
    check_index(alpha)?;
    if !(p >= 0.0) || !q.is_finite() || (p == 0.0 && q == 0.0) {
        return Err(Error::BadParameter("need p >= 0, q finite, not both zero".into()));
    }
    let ab = if p > 0.0 {
        let z = Complex64::new(p, -q) * ((1.0 - alpha) / (2.0 * p));
        let ratio = gamma(z + alpha) / gamma(z);
        ratio * (-gamma_real(-alpha) / gamma_real(alpha)) * (2.0 * alpha * p).powf(alpha)
    } else {
        let sign = (q * (1.0 - alpha)).signum();
        let phase = Complex64::new(0.0, -PI * alpha / 2.0 * sign).exp();
        phase * (-gamma_real(-alpha) / gamma_real(alpha)) * (q * alpha * (1.0 - alpha)).abs().powf(alpha)
    };
    let (c, s) = ((alpha * PI / 2.0).cos(), (alpha * PI / 2.0).sin());
    let plus = (ab.re / (2.0 * c) - ab.im / (2.0 * s)).abs();
    let minus = (ab.re / (2.0 * c) + ab.im / (2.0 * s)).abs();
    Ok((plus, minus))
}

/// Lévy-measure constants `nu(x) = C+- |x|^(-1-alpha)` of an exponent
/// `psi(xi) = k xi^alpha` (plus any linear drift) at `xi > 0`.
pub fn stable_tail_constants(alpha: f64, k: Complex64) -> Result<(f64, f64)> {
    check_index(alpha)?;
    let g = -gamma_real(-alpha);
    let (c, s) = ((alpha * PI / 2.0).cos(), (alpha * PI / 2.0).sin());
    let sum = k.re / (g * c);
    let diff = -k.im / (g * s);
    Ok((0.5 * (sum + diff), 0.5 * (sum - diff)))
}

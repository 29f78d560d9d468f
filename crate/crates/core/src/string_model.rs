//! Generalized Krein strings `(R, a(dy), b(y))`.
//!
//! `a(dy)` is a finite list of atoms plus one density from a small set of
//! parametric families; `b` is a real shear profile. All integrals the solver
//! needs are exact antiderivatives of the family in question.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// A point mass of `a(dy)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub y: f64,
    pub mass: f64,
}

/// Breakpoints with values; linear in between, constant outside.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub ys: Vec<f64>,
    pub values: Vec<f64>,
}

impl Table {
    pub fn new(ys: Vec<f64>, values: Vec<f64>) -> Self {
        Table { ys, values }
    }

    fn segment(&self, y: f64) -> usize {
        self.ys.partition_point(|&t| t <= y)
    }

    pub fn value(&self, y: f64) -> f64 {
        let n = self.ys.len();
        let k = self.segment(y);
        if k == 0 {
            self.values[0]
        } else if k == n {
            self.values[n - 1]
        } else {
            let (y0, y1) = (self.ys[k - 1], self.ys[k]);
            let t = (y - y0) / (y1 - y0);
            self.values[k - 1] * (1.0 - t) + self.values[k] * t
        }
    }

    pub fn slope(&self, y: f64) -> f64 {
        let k = self.segment(y);
        if k == 0 || k == self.ys.len() {
            0.0
        } else {
            (self.values[k] - self.values[k - 1]) / (self.ys[k] - self.ys[k - 1])
        }
    }

    /// `int_lo^hi g(f)` for `g` applied to the interpolant; `piece(v0, v1, h)`
    /// must integrate `g` exactly over a linear segment from `v0` to `v1`.
    fn integrate_with(&self, lo: f64, hi: f64, piece: impl Fn(f64, f64, f64) -> f64) -> f64 {
        let mut total = 0.0;
        let mut a = lo;
        while a < hi {
            let k = self.segment(a);
            let b = if k < self.ys.len() { self.ys[k].min(hi) } else { hi };
            total += piece(self.value(a), self.value(b), b - a);
            a = b;
        }
        total
    }

    fn check(&self, horizon: f64, what: &str, nonneg: bool, out: &mut Vec<Violation>) {
        if self.ys.is_empty() || self.ys.len() != self.values.len() {
            out.push(Violation::new(
                format!("{what} table shape"),
                format!("{} breakpoints, {} values", self.ys.len(), self.values.len()),
            ));
            return;
        }
        for w in self.ys.windows(2) {
            if !(w[1] > w[0]) {
                out.push(Violation::new(
                    format!("{what} table breakpoints not strictly increasing"),
                    format!("{} then {}", w[0], w[1]),
                ));
            }
        }
        for &y in &self.ys {
            if !(y >= 0.0 && y < horizon) {
                out.push(Violation::new(
                    format!("{what} table breakpoint outside [0, R)"),
                    format!("y = {y}"),
                ));
            }
        }
        for (&y, &v) in self.ys.iter().zip(&self.values) {
            if !v.is_finite() {
                out.push(Violation::new(format!("{what} table value not finite"), format!("at y = {y}")));
            } else if nonneg && v < 0.0 {
                out.push(Violation::new(
                    format!("negative {what} table value"),
                    format!("{v} at y = {y}"),
                ));
            }
        }
    }
}

/// Absolutely continuous part of `a(dy)`.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityProfile {
    Zero,
    Constant(f64),
    /// `coef * y^exponent`
    Power { coef: f64, exponent: f64 },
    /// `coef * (1 + 2 scale y)^exponent`
    RationalPower { coef: f64, scale: f64, exponent: f64 },
    Table(Table),
}

/// Shear coefficient `b(y)`.
#[derive(Debug, Clone, PartialEq)]
pub enum DriftProfile {
    Zero,
    Constant(f64),
    /// `coef * y^exponent`
    Power { coef: f64, exponent: f64 },
    /// `values[0]` on `[0, breaks[0])`, `values[j]` on `[breaks[j-1], breaks[j])`.
    PiecewiseConstant { breaks: Vec<f64>, values: Vec<f64> },
    /// `amplitude * sin y`
    Sine(f64),
    /// `amplitude * cos y`
    Cosine(f64),
    Table(Table),
}

/// `y2^p - y1^p` without cancellation when `y1` and `y2` are close.
fn pow_diff(y1: f64, y2: f64, p: f64) -> f64 {
    if y1 <= 0.0 {
        return y2.powf(p);
    }
    y1.powf(p) * (p * ((y2 - y1) / y1).ln_1p()).exp_m1()
}

/// `int_y1^y2 t^k dt` for `k > -1`.
fn power_integral(y1: f64, y2: f64, k: f64) -> f64 {
    if k == -1.0 {
        ((y2 - y1) / y1).ln_1p()
    } else {
        pow_diff(y1, y2, k + 1.0) / (k + 1.0)
    }
}

impl DensityProfile {
    pub fn value(&self, y: f64) -> f64 {
        match self {
            DensityProfile::Zero => 0.0,
            DensityProfile::Constant(c) => *c,
            DensityProfile::Power { coef, exponent } => coef * y.powf(*exponent),
            DensityProfile::RationalPower {
                coef,
                scale,
                exponent,
            } => coef * (1.0 + 2.0 * scale * y).powf(*exponent),
            DensityProfile::Table(t) => t.value(y),
        }
    }

    /// `int_lo^hi density(y) dy`.
    pub fn integral(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        match self {
            DensityProfile::Zero => 0.0,
            DensityProfile::Constant(c) => c * (hi - lo),
            DensityProfile::Power { coef, exponent } => coef * power_integral(lo, hi, *exponent),
            DensityProfile::RationalPower {
                coef,
                scale,
                exponent,
            } => {
                let (u1, u2) = (1.0 + 2.0 * scale * lo, 1.0 + 2.0 * scale * hi);
                coef * power_integral(u1, u2, *exponent) / (2.0 * scale)
            }
            DensityProfile::Table(t) => t.integrate_with(lo, hi, |v0, v1, h| 0.5 * (v0 + v1) * h),
        }
    }

    /// Length over which the profile changes by an O(1) factor near `y`.
    pub fn variation_length(&self, y: f64) -> f64 {
        match self {
            DensityProfile::Power { coef, exponent } if *coef != 0.0 && *exponent != 0.0 => y,
            DensityProfile::RationalPower {
                coef,
                scale,
                exponent,
            } if *coef != 0.0 && *exponent != 0.0 => (1.0 + 2.0 * scale * y) / (2.0 * scale),
            _ => f64::INFINITY,
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        match self {
            DensityProfile::Table(t) => &t.ys,
            _ => &[],
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            DensityProfile::Zero => true,
            DensityProfile::Constant(c) => *c == 0.0,
            DensityProfile::Power { coef, .. } | DensityProfile::RationalPower { coef, .. } => {
                *coef == 0.0
            }
            DensityProfile::Table(t) => t.values.iter().all(|&v| v == 0.0),
        }
    }
}

impl DriftProfile {
    pub fn value(&self, y: f64) -> f64 {
        match self {
            DriftProfile::Zero => 0.0,
            DriftProfile::Constant(q) => *q,
            DriftProfile::Power { coef, exponent } => {
                if *coef == 0.0 {
                    0.0
                } else {
                    coef * y.powf(*exponent)
                }
            }
            DriftProfile::PiecewiseConstant { breaks, values } => {
                values[breaks.partition_point(|&t| t <= y)]
            }
            DriftProfile::Sine(c) => c * y.sin(),
            DriftProfile::Cosine(c) => c * y.cos(),
            DriftProfile::Table(t) => t.value(y),
        }
    }

    /// Derivative away from breakpoints (jumps are not included).
    pub fn derivative(&self, y: f64) -> f64 {
        match self {
            DriftProfile::Power { coef, exponent } if *coef != 0.0 && *exponent != 0.0 => {
                coef * exponent * y.powf(exponent - 1.0)
            }
            DriftProfile::Sine(c) => c * y.cos(),
            DriftProfile::Cosine(c) => -c * y.sin(),
            DriftProfile::Table(t) => t.slope(y),
            _ => 0.0,
        }
    }

    /// `int_lo^hi b(y) dy`.
    pub fn integral(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        match self {
            DriftProfile::Zero => 0.0,
            DriftProfile::Constant(q) => q * (hi - lo),
            DriftProfile::Power { coef, exponent } => {
                if *coef == 0.0 {
                    0.0
                } else {
                    coef * power_integral(lo, hi, *exponent)
                }
            }
            DriftProfile::PiecewiseConstant { breaks, values } => {
                piecewise_integral(breaks, values, lo, hi, |v| v)
            }
            DriftProfile::Sine(c) => 2.0 * c * (0.5 * (lo + hi)).sin() * (0.5 * (hi - lo)).sin(),
            DriftProfile::Cosine(c) => 2.0 * c * (0.5 * (lo + hi)).cos() * (0.5 * (hi - lo)).sin(),
            DriftProfile::Table(t) => t.integrate_with(lo, hi, |v0, v1, h| 0.5 * (v0 + v1) * h),
        }
    }

    /// `int_lo^hi b(y)^2 dy`.
    pub fn sq_integral(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        let h = hi - lo;
        match self {
            DriftProfile::Zero => 0.0,
            DriftProfile::Constant(q) => q * q * h,
            DriftProfile::Power { coef, exponent } => {
                if *coef == 0.0 {
                    0.0
                } else {
                    coef * coef * power_integral(lo, hi, 2.0 * exponent)
                }
            }
            DriftProfile::PiecewiseConstant { breaks, values } => {
                piecewise_integral(breaks, values, lo, hi, |v| v * v)
            }
            DriftProfile::Sine(c) => c * c * 0.5 * (h - (lo + hi).cos() * h.sin()),
            DriftProfile::Cosine(c) => c * c * 0.5 * (h + (lo + hi).cos() * h.sin()),
            DriftProfile::Table(t) => {
                t.integrate_with(lo, hi, |v0, v1, h| (v0 * v0 + v0 * v1 + v1 * v1) * h / 3.0)
            }
        }
    }

    pub fn variation_length(&self, y: f64) -> f64 {
        match self {
            DriftProfile::Power { coef, exponent } if *coef != 0.0 && *exponent != 0.0 => y,
            DriftProfile::Sine(c) | DriftProfile::Cosine(c) if *c != 0.0 => 1.0,
            _ => f64::INFINITY,
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        match self {
            DriftProfile::PiecewiseConstant { breaks, .. } => breaks,
            DriftProfile::Table(t) => &t.ys,
            _ => &[],
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            DriftProfile::Zero => true,
            DriftProfile::Constant(q) => *q == 0.0,
            DriftProfile::Power { coef, .. } => *coef == 0.0,
            DriftProfile::PiecewiseConstant { values, .. } => values.iter().all(|&v| v == 0.0),
            DriftProfile::Sine(c) | DriftProfile::Cosine(c) => *c == 0.0,
            DriftProfile::Table(t) => t.values.iter().all(|&v| v == 0.0),
        }
    }
}

fn piecewise_integral(
    breaks: &[f64],
    values: &[f64],
    lo: f64,
    hi: f64,
    g: impl Fn(f64) -> f64,
) -> f64 {
    let mut total = 0.0;
    let mut a = lo;
    let mut k = breaks.partition_point(|&t| t <= lo);
    while a < hi {
        let b = if k < breaks.len() { breaks[k].min(hi) } else { hi };
        total += g(values[k]) * (b - a);
        a = b;
        k += 1;
    }
    total
}

/// A generalized Krein string. `horizon` is `f64::INFINITY` for `R = inf`.
#[derive(Debug, Clone, PartialEq)]
pub struct StringSpec {
    pub horizon: f64,
    pub atoms: Vec<Atom>,
    pub density: DensityProfile,
    pub b: DriftProfile,
}

/// One failed admissibility condition.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub invariant: String,
    pub detail: String,
}

impl Violation {
    fn new(invariant: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            invariant: invariant.into(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl StringSpec {
    pub fn new(horizon: f64, atoms: Vec<Atom>, density: DensityProfile, b: DriftProfile) -> Self {
        StringSpec {
            horizon,
            atoms,
            density,
            b,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.horizon.is_finite()
    }

    /// Mass of the atom at the boundary `y = 0` (zero if absent).
    pub fn boundary_atom(&self) -> f64 {
        self.atoms.iter().filter(|a| a.y == 0.0).map(|a| a.mass).sum()
    }

    /// Atoms with `y > 0`, sorted.
    pub fn interior_atoms(&self) -> Vec<Atom> {
        let mut v: Vec<Atom> = self
            .atoms
            .iter()
            .copied()
            .filter(|a| a.y > 0.0 && a.mass != 0.0)
            .collect();
        v.sort_by(|a, b| a.y.total_cmp(&b.y));
        v
    }

    /// Interior points where the coefficients jump or change formula,
    /// sorted and deduplicated.
    pub fn features(&self) -> Vec<f64> {
        let mut f: Vec<f64> = self.interior_atoms().iter().map(|a| a.y).collect();
        f.extend(self.density.breakpoints().iter().copied().filter(|&y| y > 0.0));
        f.extend(self.b.breakpoints().iter().copied().filter(|&y| y > 0.0));
        f.retain(|&y| y < self.horizon);
        f.sort_by(|a, b| a.total_cmp(b));
        f.dedup();
        f
    }
}

pub fn validate_string(spec: &StringSpec) -> ValidationReport {
    let mut v = Vec::new();
    let r = spec.horizon;
    if r.is_nan() || r <= 0.0 {
        v.push(Violation::new("R must be positive", format!("R = {r}")));
    }
    for (i, a) in spec.atoms.iter().enumerate() {
        if !a.mass.is_finite() || !a.y.is_finite() {
            v.push(Violation::new("atom not finite", format!("atom {i}: y = {}, mass = {}", a.y, a.mass)));
            continue;
        }
        if a.mass < 0.0 {
            v.push(Violation::new("negative atom mass", format!("atom {i} at y = {}: mass {}", a.y, a.mass)));
        }
        if a.y < 0.0 || !(a.y < r) {
            v.push(Violation::new("atom outside [0, R)", format!("atom {i} at y = {}", a.y)));
        }
    }
    match &spec.density {
        DensityProfile::Zero => {}
        DensityProfile::Constant(c) => nonneg(*c, "density constant", &mut v),
        DensityProfile::Power { coef, exponent } => {
            nonneg(*coef, "density coefficient", &mut v);
            if !(*exponent > -1.0) {
                v.push(Violation::new(
                    "density not locally integrable",
                    format!("power exponent {exponent} must exceed -1"),
                ));
            }
        }
        DensityProfile::RationalPower {
            coef,
            scale,
            exponent,
        } => {
            nonneg(*coef, "density coefficient", &mut v);
            if !(*scale > 0.0 && scale.is_finite()) {
                v.push(Violation::new("density scale must be positive", format!("m = {scale}")));
            }
            if !exponent.is_finite() {
                v.push(Violation::new("density exponent not finite", format!("{exponent}")));
            }
        }
        DensityProfile::Table(t) => t.check(r, "density", true, &mut v),
    }
    match &spec.b {
        DriftProfile::Zero => {}
        DriftProfile::Constant(q) | DriftProfile::Sine(q) | DriftProfile::Cosine(q) => {
            if !q.is_finite() {
                v.push(Violation::new("b parameter not finite", format!("{q}")));
            }
        }
        DriftProfile::Power { coef, exponent } => {
            if !coef.is_finite() {
                v.push(Violation::new("b parameter not finite", format!("{coef}")));
            }
            if !(*exponent > -0.5) {
                v.push(Violation::new(
                    "b not locally square-integrable",
                    format!("power exponent {exponent} must exceed -1/2"),
                ));
            }
        }
        DriftProfile::PiecewiseConstant { breaks, values } => {
            if values.len() != breaks.len() + 1 {
                v.push(Violation::new(
                    "b piecewise shape",
                    format!("{} breaks need {} values, got {}", breaks.len(), breaks.len() + 1, values.len()),
                ));
            }
            for w in breaks.windows(2) {
                if !(w[1] > w[0]) {
                    v.push(Violation::new(
                        "b breakpoints not strictly increasing",
                        format!("{} then {}", w[0], w[1]),
                    ));
                }
            }
            for &y in breaks {
                if !(y > 0.0 && y < r) {
                    v.push(Violation::new("b breakpoint outside (0, R)", format!("y = {y}")));
                }
            }
            if values.iter().any(|x| !x.is_finite()) {
                v.push(Violation::new("b parameter not finite", "piecewise value"));
            }
        }
        DriftProfile::Table(t) => t.check(r, "b", false, &mut v),
    }
    ValidationReport {
        ok: v.is_empty(),
        violations: v,
    }
}

fn nonneg(x: f64, what: &str, v: &mut Vec<Violation>) {
    if !(x >= 0.0) || !x.is_finite() {
        v.push(Violation::new(format!("negative {what}"), format!("{x}")));
    }
}

/// Sorted atoms with zero masses dropped and equal locations merged.
/// A power law with exponent zero is rewritten as a constant.
pub fn canonicalize(spec: &StringSpec) -> Result<StringSpec> {
    let report = validate_string(spec);
    if !report.ok {
        return Err(Error::InvalidString(report.violations[0].invariant.clone()));
    }
    let mut atoms: Vec<Atom> = spec.atoms.iter().copied().filter(|a| a.mass > 0.0).collect();
    atoms.sort_by(|a, b| a.y.total_cmp(&b.y));
    let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
    for a in atoms {
        match merged.last_mut() {
            Some(last) if last.y == a.y => last.mass += a.mass,
            _ => merged.push(a),
        }
    }
    let density = match spec.density {
        DensityProfile::Power { coef, exponent } if exponent == 0.0 => DensityProfile::Constant(coef),
        ref d => d.clone(),
    };
    let b = match spec.b {
        DriftProfile::Power { coef, exponent } if exponent == 0.0 => DriftProfile::Constant(coef),
        ref d => d.clone(),
    };
    Ok(StringSpec {
        horizon: spec.horizon,
        atoms: merged,
        density,
        b,
    })
}

/// `a([y1, y2])`, closed at both ends.
pub fn a_mass(spec: &StringSpec, y1: f64, y2: f64) -> Result<f64> {
    check_interval(spec, y1, y2)?;
    let atoms: f64 = spec
        .atoms
        .iter()
        .filter(|a| a.y >= y1 && a.y <= y2)
        .map(|a| a.mass)
        .sum();
    Ok(atoms + spec.density.integral(y1, y2))
}

/// `a((y1, y2])`, open at the left end.
pub fn a_mass_left_open(spec: &StringSpec, y1: f64, y2: f64) -> Result<f64> {
    check_interval(spec, y1, y2)?;
    let atoms: f64 = spec
        .atoms
        .iter()
        .filter(|a| a.y > y1 && a.y <= y2)
        .map(|a| a.mass)
        .sum();
    Ok(atoms + spec.density.integral(y1, y2))
}

fn check_interval(spec: &StringSpec, y1: f64, y2: f64) -> Result<()> {
    if !(y1 >= 0.0 && y1 <= y2 && y2 < spec.horizon) {
        return Err(Error::OutOfDomain {
            lo: y1,
            hi: y2,
            horizon: spec.horizon,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn empty(r: f64) -> StringSpec {
        StringSpec::new(r, vec![], DensityProfile::Zero, DriftProfile::Zero)
    }

    #[test]
    fn rejects_negative_mass_and_bad_horizon() {
        let mut s = empty(1.0);
        s.atoms.push(Atom { y: 0.5, mass: -0.5 });
        let r = validate_string(&s);
        assert!(!r.ok);
        assert_eq!(r.violations[0].invariant, "negative atom mass");

        let r = validate_string(&empty(0.0));
        assert!(!r.ok);
        assert_eq!(r.violations[0].invariant, "R must be positive");
    }

    #[test]
    fn rejects_non_square_integrable_shear() {
        let mut s = empty(f64::INFINITY);
        s.b = DriftProfile::Power {
            coef: 1.0,
            exponent: -0.5,
        };
        let r = validate_string(&s);
        assert!(!r.ok);
        assert_eq!(r.violations[0].invariant, "b not locally square-integrable");
    }

    #[test]
    fn canonical_form_merges_and_drops() {
        let mut s = empty(5.0);
        s.atoms = vec![Atom { y: 1.0, mass: 0.2 }, Atom { y: 1.0, mass: 0.3 }];
        assert_eq!(canonicalize(&s).unwrap().atoms, vec![Atom { y: 1.0, mass: 0.5 }]);
        s.atoms = vec![Atom { y: 2.0, mass: 0.0 }, Atom { y: 1.0, mass: 1.0 }];
        let c = canonicalize(&s).unwrap();
        assert_eq!(c.atoms, vec![Atom { y: 1.0, mass: 1.0 }]);
        assert_eq!(canonicalize(&c).unwrap(), c);
    }

    #[test]
    fn measure_of_simple_strings() {
        let mut s = empty(f64::INFINITY);
        s.density = DensityProfile::Constant(1.0);
        assert_eq!(a_mass(&s, 0.0, 3.0).unwrap(), 3.0);

        let mut s = empty(f64::INFINITY);
        s.atoms.push(Atom { y: 1.0, mass: 2.5 });
        assert_eq!(a_mass(&s, 0.5, 1.5).unwrap(), 2.5);

        let mut s = empty(f64::INFINITY);
        s.density = DensityProfile::Power {
            coef: 1.0,
            exponent: -0.5,
        };
        assert!((a_mass(&s, 0.0, 1.0).unwrap() - 2.0).abs() < 1e-15);
        assert!(matches!(a_mass(&empty(1.0), 0.0, 1.0), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn shear_integrals_match_quadrature() {
        use crate::numeric::{integrate, QuadTol};
        use num_complex::Complex64;
        let profiles = [
            DriftProfile::Sine(-1.0),
            DriftProfile::Cosine(0.7),
            DriftProfile::Power {
                coef: -1.0,
                exponent: -1.0 / 3.0,
            },
            DriftProfile::PiecewiseConstant {
                breaks: vec![0.5, 1.5],
                values: vec![1.0, -2.0, 0.25],
            },
            DriftProfile::Table(Table::new(vec![0.2, 1.0, 2.0], vec![1.0, -1.0, 3.0])),
        ];
        for p in &profiles {
            for &(lo, hi) in &[(0.0, 0.3), (0.1, 2.7), (1.2, 1.2001), (3.0, 11.0)] {
                let one = integrate(|y| Complex64::new(p.value(y), 0.0), lo, hi, QuadTol::default());
                let two = integrate(|y| Complex64::new(p.value(y).powi(2), 0.0), lo, hi, QuadTol::default());
                let (one, two) = (one.unwrap().value.re, two.unwrap().value.re);
                assert!((p.integral(lo, hi) - one).abs() < 1e-9, "{p:?} {lo} {hi}");
                assert!((p.sq_integral(lo, hi) - two).abs() < 1e-9, "{p:?} {lo} {hi}");
            }
        }
    }

    #[test]
    fn density_integrals_match_quadrature() {
        use crate::numeric::{integrate, QuadTol};
        use num_complex::Complex64;
        let profiles = [
            DensityProfile::Power {
                coef: 1.0,
                exponent: -2.0 / 3.0,
            },
            DensityProfile::Power {
                coef: 2.0,
                exponent: 2.0,
            },
            DensityProfile::RationalPower {
                coef: 1.0,
                scale: 0.5,
                exponent: -1.0,
            },
            DensityProfile::RationalPower {
                coef: 1.0,
                scale: 2.0,
                exponent: -2.0,
            },
            DensityProfile::Table(Table::new(vec![0.0, 1.0, 4.0], vec![0.5, 2.0, 1.0])),
        ];
        for p in &profiles {
            for &(lo, hi) in &[(0.0, 0.3), (0.1, 2.7), (1.2, 1.2001), (3.0, 11.0)] {
                let q = integrate(|y| Complex64::new(p.value(y), 0.0), lo, hi, QuadTol::default())
                    .unwrap()
                    .value
                    .re;
                assert!((p.integral(lo, hi) - q).abs() < 1e-9 * (1.0 + q), "{p:?} {lo} {hi}");
            }
        }
    }
}

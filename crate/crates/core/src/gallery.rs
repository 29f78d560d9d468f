//! Named example strings with their reference exponents.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::rogers::stable_levy_constants;
use crate::string_model::{canonicalize, Atom, DensityProfile, DriftProfile, StringSpec};

pub const NAMES: &[&str] = &[
    "trivial",
    "cauchy",
    "relativistic",
    "relativistic_alt",
    "symmetric_stable",
    "stable",
    "one_atom",
    "meromorphic",
    "sine",
    "cosine",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedForm {
    /// `-i q xi / 2 + 1/(2R)` (no killing for infinite `R`)
    Shear { q: f64, horizon: f64 },
    /// `(p xi - i q xi) / 2`
    Linear { p: f64, q: f64 },
    /// `xi^2 m / (2 (1 + xi^2 m y0))`
    OneAtom { mass: f64, y0: f64 },
    /// `(sqrt(m^2 + xi^2) - m) / 2`
    Relativistic { m: f64 },
}

impl ClosedForm {
    pub fn eval(&self, xi: f64) -> Complex64 {
        match *self {
            ClosedForm::Shear { q, horizon } => {
                let kill = if horizon.is_finite() { 0.5 / horizon } else { 0.0 };
                Complex64::new(kill, -0.5 * q * xi)
            }
            ClosedForm::Linear { p, q } => Complex64::new(0.5 * p * xi, -0.5 * q * xi),
            ClosedForm::OneAtom { mass, y0 } => {
                let s = xi * xi * mass;
                (0.5 * s / (1.0 + s * y0)).into()
            }
            ClosedForm::Relativistic { m } => {
                // (sqrt(m^2 + xi^2) - m) / 2 written without cancellation
                (0.5 * xi * xi / ((m * m + xi * xi).sqrt() + m)).into()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Asymptotic {
    /// `psi(l xi) = l^degree psi(xi)` exactly.
    Homogeneous { degree: f64 },
    /// `psi(xi) / xi -> slope` as `xi -> inf`.
    HighFrequency { slope: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Reference {
    ClosedForm(ClosedForm),
    Asymptotic(Asymptotic),
    /// Homogeneous of degree `index`, with the reference side constants of the
    /// Lévy density `C+- |x|^(-1-index)`.
    Stable { index: f64, c_plus: f64, c_minus: f64 },
    /// Jump sides and drift described only qualitatively.
    Qualitative { drift: f64, note: &'static str },
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub spec: StringSpec,
    pub reference: Reference,
    pub notes: String,
}

fn entry(name: &'static str, spec: StringSpec, reference: Reference, notes: &str) -> Result<GalleryEntry> {
    Ok(GalleryEntry {
        name,
        spec: canonicalize(&spec)?,
        reference,
        notes: notes.into(),
    })
}

fn bad(msg: &str) -> Error {
    Error::BadParameter(msg.into())
}

/// Pure shear `b = -q`; the trace drifts at `q/2` per unit of `L0`.
pub fn trivial(q: f64, horizon: f64) -> Result<GalleryEntry> {
    if !q.is_finite() || !(horizon > 0.0) {
        return Err(bad("trivial needs finite q and R > 0"));
    }
    entry(
        "trivial",
        StringSpec::new(horizon, vec![], DensityProfile::Zero, DriftProfile::Constant(-q)),
        Reference::ClosedForm(ClosedForm::Shear { q, horizon }),
        "drift q/2 and killing 1/(2R) per unit L0; q and 1/R per unit L0/2",
    )
}

pub fn cauchy() -> Result<GalleryEntry> {
    entry(
        "cauchy",
        StringSpec::new(f64::INFINITY, vec![], DensityProfile::Constant(1.0), DriftProfile::Zero),
        Reference::ClosedForm(ClosedForm::Linear { p: 1.0, q: 0.0 }),
        "psi = xi/2, Lévy density 1/(2 pi x^2)",
    )
}

fn check_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(bad("m must be positive"))
    }
}

/// `a(dy) = dy / (1 + 2 m y)`; only the high-frequency slope is known.
pub fn relativistic(m: f64) -> Result<GalleryEntry> {
    check_mass(m)?;
    entry(
        "relativistic",
        StringSpec::new(
            f64::INFINITY,
            vec![],
            DensityProfile::RationalPower {
                coef: 1.0,
                scale: m,
                exponent: -1.0,
            },
            DriftProfile::Zero,
        ),
        Reference::Asymptotic(Asymptotic::HighFrequency { slope: 0.5 }),
        "does not reproduce (sqrt(m^2 + xi^2) - m)/2; see relativistic_alt",
    )
}

/// `a(dy) = dy / (1 + 2 m y)^2`, whose exponent is `(sqrt(m^2 + xi^2) - m) / 2`.
pub fn relativistic_alt(m: f64) -> Result<GalleryEntry> {
    check_mass(m)?;
    entry(
        "relativistic_alt",
        StringSpec::new(
            f64::INFINITY,
            vec![],
            DensityProfile::RationalPower {
                coef: 1.0,
                scale: m,
                exponent: -2.0,
            },
            DriftProfile::Zero,
        ),
        Reference::ClosedForm(ClosedForm::Relativistic { m }),
        "quasi-relativistic exponent (sqrt(m^2 + xi^2) - m)/2",
    )
}

fn check_index(index: f64) -> Result<()> {
    if index > 0.0 && index < 2.0 {
        Ok(())
    } else {
        Err(bad("stable index must lie in (0, 2)"))
    }
}

pub fn symmetric_stable(index: f64) -> Result<GalleryEntry> {
    check_index(index)?;
    entry(
        "symmetric_stable",
        StringSpec::new(
            f64::INFINITY,
            vec![],
            DensityProfile::Power {
                coef: 1.0,
                exponent: 2.0 / index - 2.0,
            },
            DriftProfile::Zero,
        ),
        Reference::Asymptotic(Asymptotic::Homogeneous { degree: index }),
        "",
    )
}

/// `a(dy) = p^2 y^(2/index - 2) dy`, `b(y) = -q y^(1/index - 1)`.
pub fn stable(index: f64, p: f64, q: f64) -> Result<GalleryEntry> {
    check_index(index)?;
    if !(p >= 0.0) || !q.is_finite() || (p == 0.0 && q == 0.0) {
        return Err(bad("stable needs p >= 0, finite q, not both zero"));
    }
    let spec = StringSpec::new(
        f64::INFINITY,
        vec![],
        DensityProfile::Power {
            coef: p * p,
            exponent: 2.0 / index - 2.0,
        },
        DriftProfile::Power {
            coef: -q,
            exponent: 1.0 / index - 1.0,
        },
    );
    if index == 1.0 {
        return entry(
            "stable",
            spec,
            Reference::ClosedForm(ClosedForm::Linear { p, q }),
            "index 1: Lévy density (p/(2 pi)) x^-2 and drift q/2 per unit L0",
        );
    }
    let (c_plus, c_minus) = stable_levy_constants(index, p, q)?;
    entry(
        "stable",
        spec,
        Reference::Stable {
            index,
            c_plus,
            c_minus,
        },
        "reference constants fix the ratio C+/C-; their scale differs from the Lévy density",
    )
}

pub fn one_atom(mass: f64, y0: f64) -> Result<GalleryEntry> {
    check_mass(mass)?;
    if !(y0 > 0.0 && y0.is_finite()) {
        return Err(bad("y0 must be positive"));
    }
    entry(
        "one_atom",
        StringSpec::new(
            f64::INFINITY,
            vec![Atom { y: y0, mass }],
            DensityProfile::Zero,
            DriftProfile::Zero,
        ),
        Reference::ClosedForm(ClosedForm::OneAtom { mass, y0 }),
        "",
    )
}

/// Finitely many atoms with a piecewise constant shear.
pub fn meromorphic(atoms: Vec<Atom>, breaks: Vec<f64>, values: Vec<f64>) -> Result<GalleryEntry> {
    if atoms.is_empty() || atoms.iter().any(|a| !(a.mass > 0.0) || !(a.y > 0.0)) {
        return Err(bad("meromorphic needs atoms with y > 0 and mass > 0"));
    }
    if values.len() != breaks.len() + 1 {
        return Err(bad("need one more b value than breakpoints"));
    }
    entry(
        "meromorphic",
        StringSpec::new(
            f64::INFINITY,
            atoms,
            DensityProfile::Zero,
            DriftProfile::PiecewiseConstant { breaks, values },
        ),
        Reference::None,
        "no closed form; checked against simulation only",
    )
}

pub fn sine() -> Result<GalleryEntry> {
    entry(
        "sine",
        StringSpec::new(f64::INFINITY, vec![], DensityProfile::Zero, DriftProfile::Sine(-1.0)),
        Reference::Qualitative {
            drift: 0.0,
            note: "two-sided jumps, infinite activity upward, finite downward, no drift",
        },
        "",
    )
}

pub fn cosine() -> Result<GalleryEntry> {
    entry(
        "cosine",
        StringSpec::new(f64::INFINITY, vec![], DensityProfile::Zero, DriftProfile::Cosine(-1.0)),
        Reference::Qualitative {
            drift: 0.5,
            note: "two-sided jumps, infinite activity downward, finite upward, drift 1/2 per unit L0",
        },
        "drift 1 per unit L0/2",
    )
}

fn param(params: &[f64], i: usize, default: f64) -> f64 {
    params.get(i).copied().unwrap_or(default)
}

/// Builds an entry by name; missing parameters take the defaults
/// `trivial(2, inf)`, `relativistic(1)`, `symmetric_stable(1.5)`, `stable(1.5, 1, 1)`,
/// `one_atom(1, 1)`. For `meromorphic` the parameters are `(y, mass)` pairs, with
/// a single shear step `b = -1` above the first atom.
pub fn make(name: &str, params: &[f64]) -> Result<GalleryEntry> {
    let max = match name {
        "cauchy" | "sine" | "cosine" => 0,
        "relativistic" | "relativistic_alt" | "symmetric_stable" => 1,
        "trivial" | "one_atom" => 2,
        "stable" => 3,
        "meromorphic" => usize::MAX,
        _ => return Err(bad(&alloc::format!("unknown gallery entry '{name}'"))),
    };
    if params.len() > max {
        return Err(bad(&alloc::format!("too many parameters for '{name}'")));
    }
    match name {
        "trivial" => trivial(param(params, 0, 2.0), param(params, 1, f64::INFINITY)),
        "cauchy" => cauchy(),
        "relativistic" => relativistic(param(params, 0, 1.0)),
        "relativistic_alt" => relativistic_alt(param(params, 0, 1.0)),
        "symmetric_stable" => symmetric_stable(param(params, 0, 1.5)),
        "stable" => stable(param(params, 0, 1.5), param(params, 1, 1.0), param(params, 2, 1.0)),
        "one_atom" => one_atom(param(params, 0, 1.0), param(params, 1, 1.0)),
        "meromorphic" => {
            let pairs: &[f64] = if params.is_empty() { &[0.5, 1.0, 1.5, 1.0] } else { params };
            if pairs.len() % 2 != 0 {
                return Err(bad("meromorphic parameters come in (y, mass) pairs"));
            }
            let atoms: Vec<Atom> = pairs
                .chunks(2)
                .map(|c| Atom { y: c[0], mass: c[1] })
                .collect();
            let first = atoms.iter().map(|a| a.y).fold(f64::INFINITY, f64::min);
            meromorphic(atoms, vec![first], vec![0.0, -1.0])
        }
        "sine" => sine(),
        _ => cosine(),
    }
}

/// Pointwise reference value at `xi > 0`, when one exists.
pub fn reference_exponent(entry: &GalleryEntry, xi: f64) -> Option<Complex64> {
    match &entry.reference {
        Reference::ClosedForm(c) if xi > 0.0 => Some(c.eval(xi)),
        _ => None,
    }
}

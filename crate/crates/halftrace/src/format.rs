//! The string file format: one JSON document per string.
//!
//! ```json
//! { "R": "inf",
//!   "atoms": [ { "y": 1.0, "mass": 0.5 } ],
//!   "density": { "kind": "power", "coef": 1.0, "exponent": -0.5 },
//!   "b": { "kind": "sine", "amplitude": -1.0 } }
//! ```

use std::fs;
use std::path::Path;

use halftrace_core::string_model::{Atom, DensityProfile, DriftProfile, StringSpec, Table};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawHorizon", into = "RawHorizon")]
pub struct Horizon(pub f64);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawHorizon {
    Number(f64),
    Text(String),
}

impl TryFrom<RawHorizon> for Horizon {
    type Error = String;

    fn try_from(raw: RawHorizon) -> std::result::Result<Self, String> {
        match raw {
            RawHorizon::Number(r) => Ok(Horizon(r)),
            RawHorizon::Text(s) if s == "inf" => Ok(Horizon(f64::INFINITY)),
            RawHorizon::Text(s) => Err(format!("R must be a number or \"inf\", got \"{s}\"")),
        }
    }
}

impl From<Horizon> for RawHorizon {
    fn from(h: Horizon) -> Self {
        if h.0.is_finite() {
            RawHorizon::Number(h.0)
        } else {
            RawHorizon::Text("inf".into())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomFile {
    pub y: f64,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DensityFile {
    Zero {},
    Constant { value: f64 },
    Power { coef: f64, exponent: f64 },
    RationalPower { coef: f64, scale: f64, exponent: f64 },
    Table { ys: Vec<f64>, values: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DriftFile {
    Zero {},
    Constant { value: f64 },
    Power { coef: f64, exponent: f64 },
    PiecewiseConstant { breaks: Vec<f64>, values: Vec<f64> },
    Sine { amplitude: f64 },
    Cosine { amplitude: f64 },
    Table { ys: Vec<f64>, values: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StringFile {
    #[serde(rename = "R")]
    pub horizon: Horizon,
    pub atoms: Vec<AtomFile>,
    pub density: DensityFile,
    pub b: DriftFile,
}

impl From<&StringSpec> for StringFile {
    fn from(s: &StringSpec) -> Self {
        let density = match &s.density {
            DensityProfile::Zero => DensityFile::Zero {},
            DensityProfile::Constant(value) => DensityFile::Constant { value: *value },
            DensityProfile::Power { coef, exponent } => DensityFile::Power {
                coef: *coef,
                exponent: *exponent,
            },
            DensityProfile::RationalPower { coef, scale, exponent } => DensityFile::RationalPower {
                coef: *coef,
                scale: *scale,
                exponent: *exponent,
            },
            DensityProfile::Table(t) => DensityFile::Table {
                ys: t.ys.clone(),
                values: t.values.clone(),
            },
        };
        let b = match &s.b {
            DriftProfile::Zero => DriftFile::Zero {},
            DriftProfile::Constant(value) => DriftFile::Constant { value: *value },
            DriftProfile::Power { coef, exponent } => DriftFile::Power {
                coef: *coef,
                exponent: *exponent,
            },
            DriftProfile::PiecewiseConstant { breaks, values } => DriftFile::PiecewiseConstant {
                breaks: breaks.clone(),
                values: values.clone(),
            },
            DriftProfile::Sine(amplitude) => DriftFile::Sine { amplitude: *amplitude },
            DriftProfile::Cosine(amplitude) => DriftFile::Cosine { amplitude: *amplitude },
            DriftProfile::Table(t) => DriftFile::Table {
                ys: t.ys.clone(),
                values: t.values.clone(),
            },
        };
        StringFile {
            horizon: Horizon(s.horizon),
            atoms: s.atoms.iter().map(|a| AtomFile { y: a.y, mass: a.mass }).collect(),
            density,
            b,
        }
    }
}

impl From<StringFile> for StringSpec {
    fn from(f: StringFile) -> Self {
        let density = match f.density {
            DensityFile::Zero {} => DensityProfile::Zero,
            DensityFile::Constant { value } => DensityProfile::Constant(value),
            DensityFile::Power { coef, exponent } => DensityProfile::Power { coef, exponent },
            DensityFile::RationalPower { coef, scale, exponent } => {
                DensityProfile::RationalPower { coef, scale, exponent }
            }
            DensityFile::Table { ys, values } => DensityProfile::Table(Table::new(ys, values)),
        };
        let b = match f.b {
            DriftFile::Zero {} => DriftProfile::Zero,
            DriftFile::Constant { value } => DriftProfile::Constant(value),
            DriftFile::Power { coef, exponent } => DriftProfile::Power { coef, exponent },
            DriftFile::PiecewiseConstant { breaks, values } => DriftProfile::PiecewiseConstant { breaks, values },
            DriftFile::Sine { amplitude } => DriftProfile::Sine(amplitude),
            DriftFile::Cosine { amplitude } => DriftProfile::Cosine(amplitude),
            DriftFile::Table { ys, values } => DriftProfile::Table(Table::new(ys, values)),
        };
        StringSpec::new(
            f.horizon.0,
            f.atoms.into_iter().map(|a| Atom { y: a.y, mass: a.mass }).collect(),
            density,
            b,
        )
    }
}

/// Parses a string file without validating the string.
pub fn parse_string(text: &str) -> Result<StringSpec> {
    let file: StringFile = serde_json::from_str(text)?;
    Ok(file.into())
}

pub fn read_string(path: &Path) -> Result<StringSpec> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_string(&text)
}

pub fn string_to_json(spec: &StringSpec) -> String {
    let mut s = serde_json::to_string_pretty(&StringFile::from(spec)).expect("string files always serialize");
    s.push('\n');
    s
}

//! CSV tables. Each ends with `# seed=`, `# dt=` and `# version=` comment lines.

use std::io::{Read, Write};

use halftrace_core::montecarlo::{ExcursionRecord, LevyBin, PathRecord, TracePoint, TraceSample};
use halftrace_core::ode::ExponentSample;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Seed and step of the run that produced a table, when it has them.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Provenance {
    pub seed: Option<u64>,
    pub dt: Option<f64>,
}

fn footer<W: Write>(mut w: W, p: &Provenance) -> Result<()> {
    let seed = p.seed.map_or("none".to_string(), |s| s.to_string());
    let dt = p.dt.map_or("none".to_string(), |d| d.to_string());
    writeln!(w, "# seed={seed}")?;
    writeln!(w, "# dt={dt}")?;
    writeln!(w, "# version={VERSION}")?;
    Ok(())
}

fn table<W: Write>(mut w: W, header: &[&str], rows: impl Iterator<Item = Vec<String>>, p: &Provenance) -> Result<()> {
    {
        let mut cw = csv::Writer::from_writer(&mut w);
        cw.write_record(header)?;
        for r in rows {
            cw.write_record(&r)?;
        }
        cw.flush()?;
    }
    footer(w, p)
}

fn flag(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

pub fn write_exponent_table<W: Write>(w: W, samples: &[ExponentSample], p: &Provenance) -> Result<()> {
    let rows = samples
        .iter()
        .map(|s| vec![s.xi.to_string(), s.psi.re.to_string(), s.psi.im.to_string()]);
    table(w, &["xi", "re_psi", "im_psi"], rows, p)
}

pub fn read_exponent_table<R: Read>(r: R) -> Result<Vec<ExponentSample>> {
    let mut rd = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(r);
    let headers = rd.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["xi", "re_psi", "im_psi"] {
        return Err(Error::Usage("exponent table header must be xi,re_psi,im_psi".into()));
    }
    let mut out = Vec::new();
    for rec in rd.deserialize::<(f64, f64, f64)>() {
        let (xi, re, im) = rec?;
        out.push(ExponentSample {
            xi,
            psi: Complex64::new(re, im),
        });
    }
    Ok(out)
}

/// `k,t,Y,L0,A,B,X,alive`
pub fn write_path<W: Write>(w: W, path: &PathRecord, p: &Provenance) -> Result<()> {
    let rows = (0..path.len()).map(|k| {
        vec![
            k.to_string(),
            path.t[k].to_string(),
            path.y[k].to_string(),
            path.l0(k).to_string(),
            path.a[k].to_string(),
            path.b[k].to_string(),
            path.x[k].to_string(),
            flag(path.alive[k]),
        ]
    });
    table(w, &["k", "t", "Y", "L0", "A", "B", "X", "alive"], rows, p)
}

/// `u,Z,alive`; `Z` is empty where the path died or stopped early.
pub fn write_trace<W: Write>(w: W, trace: &TraceSample, p: &Provenance) -> Result<()> {
    let rows = trace.u.iter().zip(&trace.z).filter_map(|(u, z)| match z {
        TracePoint::Alive(v) => Some(vec![u.to_string(), v.to_string(), flag(true)]),
        TracePoint::Dead => Some(vec![u.to_string(), String::new(), flag(false)]),
        TracePoint::HorizonTooShort => None,
    });
    table(w, &["u", "Z", "alive"], rows, p)
}

/// `u,zeta,max,dX,completed`
pub fn write_excursions<W: Write>(w: W, records: &[ExcursionRecord], p: &Provenance) -> Result<()> {
    let rows = records.iter().map(|e| {
        vec![
            e.u.to_string(),
            e.zeta.to_string(),
            e.max.to_string(),
            e.dx.to_string(),
            flag(e.completed),
        ]
    });
    table(w, &["u", "zeta", "max", "dX", "completed"], rows, p)
}

/// `lo,hi,count,density,stderr,excluded`; `stderr` is that of the density.
pub fn write_levy_bins<W: Write>(w: W, bins: &[LevyBin], p: &Provenance) -> Result<()> {
    let rows = bins.iter().map(|b| {
        let width = b.hi - b.lo;
        vec![
            b.lo.to_string(),
            b.hi.to_string(),
            b.count.to_string(),
            b.density().to_string(),
            (b.stderr / width).to_string(),
            flag(b.excluded),
        ]
    });
    table(w, &["lo", "hi", "count", "density", "stderr", "excluded"], rows, p)
}

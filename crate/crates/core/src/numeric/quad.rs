//! Adaptive quadrature for complex-valued integrands.
//!
//! Three entry points cover every integral in the crate:
//! [`integrate`] on a finite interval, [`integrate_log_line`] on `(0, inf)`
//! through the substitution `x = e^t` with power-law tail extrapolation,
//! and [`integrate_oscillatory_tail`] for `int_a^inf g(x) e^{i xi x} dx`
//! with Wynn-epsilon acceleration of the half-period partial sums.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Tolerances for the adaptive routines.
#[derive(Debug, Clone, Copy)]
pub struct QuadTol {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

impl Default for QuadTol {
    fn default() -> Self {
        QuadTol {
            abs: 1e-13,
            rel: 1e-11,
            max_intervals: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
}

struct Segment {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: FnMut(f64) -> Complex64>(f: &mut F, lo: f64, hi: f64) -> Result<Segment> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut gauss = fc * WG[3];
    let mut kron = fc * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kron += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let value = kron * half;
    let error = ((kron - gauss) * half).norm();
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::QuadratureFailure {
            error: f64::INFINITY,
        });
    }
    Ok(Segment {
        lo,
        hi,
        value,
        error,
    })
}

/// Adaptive Gauss–Kronrod (7/15) on `[lo, hi]`, bisecting the interval with
/// the largest error estimate until the global tolerance holds.
pub fn integrate<F: FnMut(f64) -> Complex64>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: QuadTol,
) -> Result<QuadResult> {
    integrate_with_breaks(&mut f, &[lo, hi], tol)
}

/// As [`integrate`], with the initial partition given by `breaks` (ascending).
pub fn integrate_with_breaks<F: FnMut(f64) -> Complex64>(
    f: &mut F,
    breaks: &[f64],
    tol: QuadTol,
) -> Result<QuadResult> {
    let mut heap = BinaryHeap::new();
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            let s = kronrod(f, w[0], w[1])?;
            total += s.value;
            err += s.error;
            heap.push(s);
        }
    }
    while err > tol.abs.max(tol.rel * total.norm()) {
        if heap.len() >= tol.max_intervals {
            return Err(Error::QuadratureFailure { error: err });
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(mid > worst.lo && mid < worst.hi) {
            // interval exhausted at machine resolution
            return Err(Error::QuadratureFailure { error: err });
        }
        let left = kronrod(f, worst.lo, mid)?;
        let right = kronrod(f, mid, worst.hi)?;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if err < 0.0 {
            err = heap.iter().map(|s| s.error).sum();
        }
    }
    // re-sum to shed accumulated cancellation in the running totals
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for s in heap.iter() {
        value += s.value;
        error += s.error;
    }
    Ok(QuadResult { value, error })
}

/// `int_0^inf f(x) dx` via `x = e^t`. The core range `[x_lo, x_hi]` (with
/// optional interior `breaks`) is integrated adaptively; outside it the
/// range is extended in chunks until the integrand decays, and the remainder
/// is closed with an exponential (power-law in `x`) tail estimate.
pub fn integrate_log_line<F: FnMut(f64) -> Complex64>(
    mut f: F,
    x_lo: f64,
    x_hi: f64,
    breaks: &[f64],
    tol: QuadTol,
) -> Result<QuadResult> {
    const CHUNK: f64 = 4.0;
    const T_MIN: f64 = -600.0;
    const T_MAX: f64 = 600.0;
    let mut g = |t: f64| {
        let x = t.exp();
        f(x) * x
    };
    let mut ts: Vec<f64> = Vec::with_capacity(breaks.len() + 2);
    ts.push(x_lo.ln());
    for &b in breaks {
        if b > x_lo && b < x_hi {
            ts.push(b.ln());
        }
    }
    ts.push(x_hi.ln());
    ts.sort_by(|a, b| a.total_cmp(b));
    ts.dedup();
    // add unit-width breaks so the core range starts well partitioned
    let mut fine = Vec::new();
    for w in ts.windows(2) {
        let n = ((w[1] - w[0]) / 2.0).ceil().max(1.0) as usize;
        for j in 0..n {
            fine.push(w[0] + (w[1] - w[0]) * j as f64 / n as f64);
        }
    }
    fine.push(*ts.last().unwrap());
    let core = integrate_with_breaks(&mut g, &fine, tol)?;
    let mut value = core.value;
    let mut error = core.error;

    // extend downwards then upwards
    for dir in [-1.0f64, 1.0] {
        let mut edge = if dir < 0.0 { fine[0] } else { *fine.last().unwrap() };
        loop {
            let next = edge + dir * CHUNK;
            let (a, b) = if dir < 0.0 { (next, edge) } else { (edge, next) };
            let piece = integrate_with_breaks(&mut g, &[a, b], tol)?;
            value += piece.value;
            error += piece.error;
            edge = next;
            let small = tol.abs.max(tol.rel * value.norm()) * 1e-2;
            let g_edge = g(edge).norm();
            let g_in = g(edge - dir * 1.0).norm();
            let decaying = g_edge < g_in;
            if decaying && g_edge > 0.0 {
                let rate = (g_in / g_edge).ln();
                let tail = g_edge / rate;
                if tail < small || (dir < 0.0 && edge <= T_MIN) || (dir > 0.0 && edge >= T_MAX) {
                    // close with the exponential tail in t (a power law in x)
                    let phase = g(edge);
                    value += phase / rate;
                    error += (tail * 1e-2).max(0.0);
                    if tail > tol.abs.max(tol.rel * value.norm()) * 1e3 {
                        return Err(Error::QuadratureFailure { error: tail });
                    }
                    break;
                }
            } else if g_edge == 0.0 && piece.value.norm() <= small {
                break;
            }
            if (dir < 0.0 && edge <= T_MIN) || (dir > 0.0 && edge >= T_MAX) {
                return Err(Error::QuadratureFailure { error: g_edge });
            }
        }
    }
    Ok(QuadResult { value, error })
}

/// `int_a^inf g(x) e^{i xi x} dx` for `xi > 0` and slowly decaying `g`,
/// summed over half periods and accelerated by the epsilon algorithm.
pub fn integrate_oscillatory_tail<F: FnMut(f64) -> Complex64>(
    mut g: F,
    a: f64,
    xi: f64,
    tol: QuadTol,
) -> Result<QuadResult> {
    const MAX_TERMS: usize = 400;
    let half_period = core::f64::consts::PI / xi;
    let mut integrand = |x: f64| g(x) * Complex64::new(0.0, xi * x).exp();
    let mut partial = Vec::with_capacity(MAX_TERMS);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut quad_err = 0.0;
    let mut last_estimate: Option<Complex64> = None;
    for n in 0..MAX_TERMS {
        let lo = a + n as f64 * half_period;
        let piece = integrate(&mut integrand, lo, lo + half_period, tol)?;
        sum += piece.value;
        quad_err += piece.error;
        partial.push(sum);
        if piece.value.norm() <= f64::MIN_POSITIVE {
            // compact support reached
            return Ok(QuadResult {
                value: sum,
                error: quad_err,
            });
        }
        if partial.len() >= 7 && partial.len() % 2 == 1 {
            let estimate = wynn_epsilon(&partial);
            if let Some(prev) = last_estimate {
                let change = (estimate - prev).norm();
                if change <= tol.abs.max(tol.rel * estimate.norm()) {
                    return Ok(QuadResult {
                        value: estimate,
                        error: change + quad_err,
                    });
                }
            }
            last_estimate = Some(estimate);
        }
    }
    Err(Error::QuadratureFailure {
        error: last_estimate.map_or(f64::INFINITY, |e| (e - sum).norm()),
    })
}

/// Epsilon-algorithm limit of a sequence of partial sums (odd length uses
/// the last even column).
pub fn wynn_epsilon(s: &[Complex64]) -> Complex64 {
    let n = s.len();
    let mut prev: Vec<Complex64> = alloc::vec![Complex64::new(0.0, 0.0); n + 1];
    let mut cur: Vec<Complex64> = s.to_vec();
    let mut best = s[n - 1];
    let mut k = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for j in 0..cur.len() - 1 {
            let diff = cur[j + 1] - cur[j];
            if diff.norm() == 0.0 {
                return best;
            }
            next.push(prev[j + 1] + diff.inv());
        }
        k += 1;
        prev = cur;
        cur = next;
        if k % 2 == 0 {
            best = *cur.last().unwrap();
        }
    }
    best
}

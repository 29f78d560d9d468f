//! The measure-coefficient ODE and the exponent it produces.
//!
//! Between features the equation
//! `phi'' = mass * a * phi + shear^2 * b^2 * phi - 2i * shear * b * phi'`
//! is integrated as a first-order system with a fourth-order Magnus step
//! whose first term uses exact cell integrals of `a` and `b`, so integrable
//! singularities at the boundary cost nothing special. Atoms enter through
//! the jump `phi'(y+) - phi'(y-) = mass * m * phi(y)`. The general equation
//! has `mass = xi^2, shear = xi`; the symmetric (Krein) one `mass = xi, shear = 0`.
//!
//! The solve runs backward from the cut, where the solution that is bounded
//! as `y` grows dominates, with per-step renormalization.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::string_model::{canonicalize, DensityProfile, StringSpec};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Upper bound on any cell length.
    pub max_step: f64,
    /// Cell length as a fraction of the local variation length of the coefficients.
    pub rel_step: f64,
    /// Cell length times the local oscillation/decay rate.
    pub rate_step: f64,
    /// First cell when the coefficients are singular or vanish at `y = 0`.
    pub first_cell: f64,
    /// Multiplies every step bound; halve it to refine the mesh.
    pub resolution: f64,
    pub initial_cut: f64,
    pub growth: f64,
    /// Relative change of `phi'(0+)` accepted between successive cuts.
    pub rtol: f64,
    pub atol: f64,
    /// Minimum accumulated decay `int Re sqrt(...)` before the first cut.
    pub decay_target: f64,
    pub max_cut: f64,
    pub max_doublings: usize,
    pub boundary_tol: f64,
    pub max_refinements: usize,
    pub max_cells: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_step: f64::INFINITY,
            rel_step: 0.025,
            rate_step: 0.025,
            first_cell: 1e-9,
            resolution: 1.0,
            initial_cut: 4.0,
            growth: 2.0,
            rtol: 1e-10,
            atol: 1e-14,
            decay_target: 30.0,
            max_cut: 1e8,
            max_doublings: 16,
            boundary_tol: 1e-12,
            max_refinements: 4,
            max_cells: 4_000_000,
        }
    }
}

impl SolverOptions {
    pub fn check(&self) -> Result<()> {
        let positive = [
            self.max_step,
            self.rel_step,
            self.rate_step,
            self.first_cell,
            self.resolution,
            self.initial_cut,
            self.rtol,
            self.atol,
            self.decay_target,
            self.max_cut,
            self.boundary_tol,
        ];
        if positive.iter().any(|x| !(*x > 0.0)) {
            return Err(Error::BadParameter("solver tolerances must be positive".into()));
        }
        if !(self.growth > 1.0) {
            return Err(Error::BadParameter("growth factor must exceed 1".into()));
        }
        Ok(())
    }
}

/// Solution of the interior equation normalized by `phi(0) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiSolution {
    pub mesh: Vec<f64>,
    pub phi: Vec<Complex64>,
    /// Right derivatives at the mesh points.
    pub dphi: Vec<Complex64>,
    pub dphi_at_zero: Complex64,
    pub y_cut: f64,
    /// Largest relative mismatch between a node and the forward cell map of its neighbour.
    pub residual: f64,
    dphi_left: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiInvariants {
    pub normalized: bool,
    pub modulus_nonincreasing: bool,
    pub modulus_convex: bool,
    pub derivative_nonincreasing: bool,
    pub boundary_ok: bool,
}

impl PhiInvariants {
    pub fn all(&self) -> bool {
        self.normalized
            && self.modulus_nonincreasing
            && self.modulus_convex
            && self.derivative_nonincreasing
            && self.boundary_ok
    }
}

impl PhiSolution {
    /// Cubic Hermite interpolation of `phi` inside the mesh.
    pub fn phi_at(&self, y: f64) -> Option<Complex64> {
        let n = self.mesh.len();
        if !(y >= self.mesh[0] && y <= self.mesh[n - 1]) {
            return None;
        }
        let k = self.mesh.partition_point(|&t| t <= y).clamp(1, n - 1) - 1;
        let (y0, y1) = (self.mesh[k], self.mesh[k + 1]);
        let h = y1 - y0;
        let t = (y - y0) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        Some(
            self.phi[k] * h00
                + self.dphi[k] * (h10 * h)
                + self.phi[k + 1] * h01
                + self.dphi_left[k + 1] * (h11 * h),
        )
    }

    /// Monotonicity and convexity of `|phi|^2`, monotonicity of `|phi'|`.
    pub fn check_invariants(&self, tol: f64, boundary_tol: f64, finite: bool) -> PhiInvariants {
        let sq: Vec<f64> = self.phi.iter().map(|p| p.norm_sqr()).collect();
        let modulus_nonincreasing = sq.windows(2).all(|w| w[1] <= w[0] + tol);
        // d|phi|^2/dy = 2 Re(conj(phi) phi') from the node derivatives
        let slopes: Vec<f64> = self
            .phi
            .iter()
            .zip(&self.dphi)
            .map(|(p, d)| 2.0 * (p.conj() * d).re)
            .collect();
        let modulus_convex = slopes
            .windows(2)
            .all(|w| w[1] >= w[0] - tol * (1.0 + w[0].abs()));
        let derivative_nonincreasing = self
            .dphi
            .windows(2)
            .all(|w| w[1].norm() <= w[0].norm() * (1.0 + tol) + tol);
        PhiInvariants {
            normalized: self.phi[0] == Complex64::new(1.0, 0.0),
            modulus_nonincreasing,
            modulus_convex,
            derivative_nonincreasing,
            boundary_ok: !finite || self.phi.last().map_or(false, |p| p.norm() <= boundary_tol),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentSample {
    pub xi: f64,
    pub psi: Complex64,
}

#[derive(Debug, Clone, Copy)]
struct Operator {
    mass: f64,
    shear: f64,
}

struct Problem<'a> {
    spec: &'a StringSpec,
    op: Operator,
    opts: &'a SolverOptions,
}

type Mat = [Complex64; 4];

/// `exp(x)` for a 2x2 complex matrix, row-major.
fn expm(x: &Mat) -> Mat {
    let tau = (x[0] + x[3]) * 0.5;
    let n0 = x[0] - tau;
    let delta2 = n0 * n0 + x[1] * x[2];
    let (ch, shc) = if delta2.norm() < 1e-3 {
        let d4 = delta2 * delta2;
        (
            1.0 + delta2 / 2.0 + d4 / 24.0 + d4 * delta2 / 720.0,
            1.0 + delta2 / 6.0 + d4 / 120.0 + d4 * delta2 / 5040.0,
        )
    } else {
        let d = delta2.sqrt();
        (d.cosh(), d.sinh() / d)
    };
    let e = tau.exp();
    [
        e * (ch + shc * n0),
        e * shc * x[1],
        e * shc * x[2],
        e * (ch - shc * n0),
    ]
}

fn apply(m: &Mat, v: (Complex64, Complex64)) -> (Complex64, Complex64) {
    (m[0] * v.0 + m[1] * v.1, m[2] * v.0 + m[3] * v.1)
}

impl<'a> Problem<'a> {
    fn c(&self, y: f64) -> f64 {
        let b = self.spec.b.value(y);
        self.op.mass * self.spec.density.value(y) + self.op.shear * self.op.shear * b * b
    }

    fn d(&self, y: f64) -> Complex64 {
        Complex64::new(0.0, -2.0 * self.op.shear * self.spec.b.value(y))
    }

    /// Fourth-order Magnus exponent of the forward map over `[y0, y1]`.
    fn omega(&self, y0: f64, y1: f64) -> Mat {
        let h = y1 - y0;
        let g1 = y0 + h * (0.5 - SQRT3 / 6.0);
        let g2 = y0 + h * (0.5 + SQRT3 / 6.0);
        let (c1, c2) = (Complex64::from(self.c(g1)), Complex64::from(self.c(g2)));
        let (d1, d2) = (self.d(g1), self.d(g2));
        let k = SQRT3 / 12.0 * h * h;
        let sh = self.op.shear;
        let ic = self.op.mass * self.spec.density.integral(y0, y1)
            + sh * sh * self.spec.b.sq_integral(y0, y1);
        let id = Complex64::new(0.0, -2.0 * sh * self.spec.b.integral(y0, y1));
        [
            (c1 - c2) * k,
            Complex64::from(h) + (d1 - d2) * k,
            Complex64::from(ic) + (d2 * c1 - d1 * c2) * k,
            id + (c2 - c1) * k,
        ]
    }

    fn step(&self, y: f64, res: f64) -> f64 {
        let s = self.spec;
        let var = s.density.variation_length(y).min(s.b.variation_length(y));
        let rate = (self.op.mass * s.density.value(y)).sqrt()
            + self.op.shear * s.b.value(y).abs()
            + (self.op.shear * s.b.derivative(y).abs()).sqrt();
        let mut h = self.opts.max_step.min(self.opts.rel_step * var);
        if rate > 0.0 {
            h = h.min(self.opts.rate_step / rate);
        }
        h *= res;
        if h > 0.0 {
            h
        } else {
            self.opts.first_cell * res
        }
    }

    fn mesh(&self, cut: f64, res: f64) -> Result<Vec<f64>> {
        let mut ends: Vec<f64> = self.spec.features().into_iter().filter(|&y| y < cut).collect();
        ends.push(cut);
        let mut mesh = alloc::vec![0.0];
        let mut y = 0.0;
        for end in ends {
            while y < end {
                let h = self.step(y, res);
                let mut next = y + h;
                if next >= end - 0.5 * h {
                    next = end;
                }
                mesh.push(next);
                y = next;
                if mesh.len() > self.opts.max_cells {
                    return Err(Error::NonConvergent {
                        cut,
                        change: f64::NAN,
                    });
                }
            }
        }
        Ok(mesh)
    }

    /// `phi'/phi` at a cut beyond every feature, from the local behaviour
    /// of the coefficients.
    fn terminal_slope(&self, y: f64) -> Complex64 {
        let s = self.spec;
        let sh = self.op.shear;
        if let DensityProfile::RationalPower {
            coef,
            scale,
            exponent,
        } = s.density
        {
            if exponent == -2.0 && (sh == 0.0 || s.b.is_zero()) {
                // exact power solution of the Euler equation
                let q = self.op.mass * coef;
                let root = 0.5 - 0.5 * (1.0 + q / (scale * scale)).sqrt();
                return Complex64::from(2.0 * scale * root / (1.0 + 2.0 * scale * y));
            }
        }
        let q = Complex64::new(self.op.mass * s.density.value(y), sh * s.b.derivative(y));
        Complex64::new(0.0, -sh * s.b.value(y)) - q.sqrt()
    }

    fn local_decay(&self, y: f64) -> f64 {
        let s = self.spec;
        Complex64::new(
            self.op.mass * s.density.value(y),
            self.op.shear * s.b.derivative(y),
        )
        .sqrt()
        .re
    }

    fn first_cut(&self) -> f64 {
        let last = self.spec.features().last().copied().unwrap_or(0.0);
        let mut cut = self.opts.initial_cut.max(2.0 * last);
        let mut acc = 0.0;
        let mut y = 1e-3;
        // leave room for the doublings that confirm convergence
        let limit = self.opts.max_cut / self.opts.growth.powi(4);
        while y < limit {
            let next = y * 1.02;
            acc += self.local_decay(0.5 * (y + next)) * (next - y);
            if acc >= self.opts.decay_target {
                cut = cut.max(next);
                break;
            }
            y = next;
        }
        cut
    }

    fn solve_at(&self, cut: f64, finite: bool, res: f64) -> Result<Option<PhiSolution>> {
        let mesh = self.mesh(cut, res)?;
        let n = mesh.len();
        let atoms = self.spec.interior_atoms();
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let mut v = if finite {
            (zero, -one)
        } else {
            (one, self.terminal_slope(cut))
        };
        let s0 = v.0.norm().max(v.1.norm());
        v = (v.0 / s0, v.1 / s0);

        let mut vs = alloc::vec![(zero, zero); n];
        let mut left = alloc::vec![zero; n];
        let mut logs = alloc::vec![0.0; n];
        let mut omegas: Vec<Mat> = Vec::with_capacity(n - 1);
        vs[n - 1] = v;
        left[n - 1] = v.1;
        let mut log = 0.0;
        let mut atom_idx = atoms.len();
        for k in (0..n - 1).rev() {
            let om = self.omega(mesh[k], mesh[k + 1]);
            let neg = [-om[0], -om[1], -om[2], -om[3]];
            let w = apply(&expm(&neg), v);
            let s = w.0.norm().max(w.1.norm());
            if !(s > 0.0 && s.is_finite()) {
                return Err(Error::NonConvergent {
                    cut,
                    change: f64::NAN,
                });
            }
            v = (w.0 / s, w.1 / s);
            log += s.ln();
            vs[k] = v;
            logs[k] = log;
            left[k] = v.1;
            omegas.push(om);
            if k > 0 {
                while atom_idx > 0 && atoms[atom_idx - 1].y > mesh[k] {
                    atom_idx -= 1;
                }
                if atom_idx > 0 && atoms[atom_idx - 1].y == mesh[k] {
                    let m = atoms[atom_idx - 1].mass;
                    v.1 -= v.0 * (self.op.mass * m);
                    left[k] = v.1;
                }
            }
        }
        omegas.reverse();

        let phi0 = vs[0].0;
        if phi0.norm() < 1e-12 {
            return Ok(None);
        }
        // forward consistency of the stored nodes
        let mut residual: f64 = 0.0;
        for k in 0..n - 1 {
            let fwd = apply(&expm(&omegas[k]), vs[k]);
            let scale = (logs[k + 1] - logs[k]).exp();
            let target = (vs[k + 1].0 * scale, left[k + 1] * scale);
            let err = (fwd.0 - target.0).norm().max((fwd.1 - target.1).norm());
            residual = residual.max(err / fwd.0.norm().max(fwd.1.norm()).max(f64::MIN_POSITIVE));
        }
        let mut phi = Vec::with_capacity(n);
        let mut dphi = Vec::with_capacity(n);
        let mut dphi_left = Vec::with_capacity(n);
        for k in 0..n {
            let f = (logs[k] - logs[0]).exp() / phi0;
            phi.push(vs[k].0 * f);
            dphi.push(vs[k].1 * f);
            dphi_left.push(left[k] * f);
        }
        phi[0] = one;
        Ok(Some(PhiSolution {
            dphi_at_zero: dphi[0],
            mesh,
            phi,
            dphi,
            y_cut: cut,
            residual,
            dphi_left,
        }))
    }

    fn solve_refining(&self, cut: f64, finite: bool) -> Result<PhiSolution> {
        let mut res = self.opts.resolution;
        for _ in 0..=self.opts.max_refinements {
            if let Some(sol) = self.solve_at(cut, finite, res)? {
                return Ok(sol);
            }
            res *= 0.5;
        }
        Err(Error::DegenerateNormalization {
            refinements: self.opts.max_refinements,
        })
    }

    fn solve(&self) -> Result<PhiSolution> {
        self.opts.check()?;
        if self.spec.is_finite() {
            return self.solve_refining(self.spec.horizon, true);
        }
        let mut cut = self.first_cut();
        let mut prev = self.solve_refining(cut, false)?;
        let mut change = f64::INFINITY;
        for _ in 0..self.opts.max_doublings {
            cut *= self.opts.growth;
            if cut > self.opts.max_cut {
                break;
            }
            let next = self.solve_refining(cut, false)?;
            change = (next.dphi_at_zero - prev.dphi_at_zero).norm();
            if change <= self.opts.rtol * next.dphi_at_zero.norm() + self.opts.atol {
                return Ok(next);
            }
            prev = next;
        }
        Err(Error::NonConvergent { cut, change })
    }
}

fn prepare(spec: &StringSpec, xi: f64) -> Result<StringSpec> {
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::BadParameter("xi must be positive and finite".into()));
    }
    canonicalize(spec)
}

/// Bounded solution of the general equation at `xi`, normalized by `phi(0) = 1`.
pub fn solve_phi(spec: &StringSpec, xi: f64, opts: &SolverOptions) -> Result<PhiSolution> {
    let spec = prepare(spec, xi)?;
    Problem {
        spec: &spec,
        op: Operator {
            mass: xi * xi,
            shear: xi,
        },
        opts,
    }
    .solve()
}

/// `psi(xi) = -phi'(0+)/2 + a({0}) xi^2 / 2`.
pub fn exponent(spec: &StringSpec, xi: f64, opts: &SolverOptions) -> Result<ExponentSample> {
    let sol = solve_phi(spec, xi, opts)?;
    let psi = -0.5 * sol.dphi_at_zero + 0.5 * spec.boundary_atom() * xi * xi;
    Ok(ExponentSample { xi, psi })
}

/// [`exponent`] on every point of `xis`, each failure reported in place.
pub fn exponent_grid(
    spec: &StringSpec,
    xis: &[f64],
    opts: &SolverOptions,
) -> Vec<Result<ExponentSample>> {
    xis.iter().map(|&xi| exponent(spec, xi, opts)).collect()
}

/// Laplace exponent `-phi'(0+) + a({0}) xi` of the inverse local time of the
/// string's generalized diffusion, from `phi'' = xi * phi * a(dy)`.
pub fn krein_laplace_exponent(spec: &StringSpec, xi: f64, opts: &SolverOptions) -> Result<f64> {
    if !spec.b.is_zero() {
        return Err(Error::NotSymmetric);
    }
    let spec = prepare(spec, xi)?;
    let sol = Problem {
        spec: &spec,
        op: Operator {
            mass: xi,
            shear: 0.0,
        },
        opts,
    }
    .solve()?;
    Ok(-sol.dphi_at_zero.re + spec.boundary_atom() * xi)
}

/// `lim Re psi(xi)` as `xi -> 0+`. Zero when the string is infinite; otherwise
/// a Richardson extrapolation in `xi^2` from two small frequencies.
pub fn killing_rate(spec: &StringSpec, opts: &SolverOptions) -> Result<f64> {
    if !spec.is_finite() {
        return Ok(0.0);
    }
    let (x1, x2) = (1e-3, 5e-4);
    let p1 = exponent(spec, x1, opts)?.psi.re;
    let p2 = exponent(spec, x2, opts)?.psi.re;
    Ok((4.0 * p2 - p1) / 3.0)
}

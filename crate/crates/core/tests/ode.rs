use halftrace_core::gallery;
use halftrace_core::ode::*;
use halftrace_core::string_model::*;
use halftrace_core::Error;
use num_complex::Complex64;
use proptest::prelude::*;

fn opts() -> SolverOptions {
    SolverOptions::default()
}

fn spec(r: f64, atoms: Vec<Atom>, density: DensityProfile, b: DriftProfile) -> StringSpec {
    StringSpec::new(r, atoms, density, b)
}

fn psi(s: &StringSpec, xi: f64) -> Complex64 {
    exponent(s, xi, &opts()).unwrap().psi
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| lo * (hi / lo).powf(k as f64 / (n - 1) as f64))
        .collect()
}

#[test]
fn solve_phi_examples() {
    let cauchy = spec(f64::INFINITY, vec![], DensityProfile::Constant(1.0), DriftProfile::Zero);
    let sol = solve_phi(&cauchy, 1.0, &opts()).unwrap();
    assert_eq!(sol.phi[0], Complex64::new(1.0, 0.0));
    assert!((sol.phi_at(1.0).unwrap() - (-1f64).exp()).norm() < 1e-8);

    let empty = spec(5.0, vec![], DensityProfile::Zero, DriftProfile::Zero);
    let sol = solve_phi(&empty, 3.0, &opts()).unwrap();
    assert!((sol.dphi_at_zero - (-0.2)).norm() < 1e-12);
    assert!((sol.phi_at(2.5).unwrap() - 0.5).norm() < 1e-12);
    assert!(sol.check_invariants(1e-10, 1e-12, true).all());
}

#[test]
fn exponent_examples() {
    let cauchy = spec(f64::INFINITY, vec![], DensityProfile::Constant(1.0), DriftProfile::Zero);
    assert!(rel(psi(&cauchy, 2.0), 1.0.into()) < 1e-8);
    let empty = spec(5.0, vec![], DensityProfile::Zero, DriftProfile::Zero);
    assert!(rel(psi(&empty, 7.0), 0.1.into()) < 1e-12);
    let atom = spec(f64::INFINITY, vec![Atom { y: 1.0, mass: 1.0 }], DensityProfile::Zero, DriftProfile::Zero);
    assert!(rel(psi(&atom, 1.0), 0.25.into()) < 1e-12);
    let shear = spec(f64::INFINITY, vec![], DensityProfile::Zero, DriftProfile::Constant(-3.0));
    assert!(rel(psi(&shear, 2.0), Complex64::new(0.0, -3.0)) < 1e-12);
    let boundary = spec(f64::INFINITY, vec![Atom { y: 0.0, mass: 2.0 }], DensityProfile::Constant(1.0), DriftProfile::Zero);
    assert!(rel(psi(&boundary, 3.0), (1.5 + 9.0).into()) < 1e-8);
}

#[test]
fn exponent_grid_matches_pointwise() {
    let cauchy = spec(f64::INFINITY, vec![], DensityProfile::Constant(1.0), DriftProfile::Zero);
    let grid = exponent_grid(&cauchy, &[1.0, 2.0, 4.0], &opts());
    for (r, want) in grid.iter().zip([0.5, 1.0, 2.0]) {
        assert!(rel(r.as_ref().unwrap().psi, want.into()) < 1e-8);
    }
    let empty = spec(1.0, vec![], DensityProfile::Zero, DriftProfile::Zero);
    for r in exponent_grid(&empty, &[0.1, 10.0], &opts()) {
        assert!(rel(r.unwrap().psi, 0.5.into()) < 1e-12);
    }
    let s = gallery::stable(1.5, 1.0, 1.0).unwrap().spec;
    let single = exponent_grid(&s, &[1.7], &opts());
    assert_eq!(single[0].as_ref().unwrap().psi, psi(&s, 1.7));
    let bad = exponent_grid(&s, &[1.0, -1.0], &opts());
    assert!(bad[0].is_ok() && matches!(bad[1], Err(Error::BadParameter(_))));
}

/// Transfer-matrix solution for atoms with a piecewise constant shear: on a
/// segment with `b = beta`, `phi = e^{-i xi beta y} (c1 + c2 y)`.
fn atomic_oracle(atoms: &[Atom], breaks: &[f64], values: &[f64], xi: f64) -> Complex64 {
    let b_at = |y: f64| values[breaks.partition_point(|&t| t <= y)];
    let mut points: Vec<f64> = atoms.iter().map(|a| a.y).chain(breaks.iter().copied()).collect();
    points.sort_by(|a, b| a.total_cmp(b));
    points.dedup();
    let top = *points.last().unwrap();
    let k_top = -xi * b_at(top);
    // bounded solution above the last feature
    let (mut phi, mut dphi) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, k_top));
    let mut y = top;
    for &p in points.iter().rev().chain(std::iter::once(&0.0)) {
        if p < y {
            let k = -xi * b_at(0.5 * (p + y));
            let i = Complex64::i();
            let e = (i * k * y).exp();
            let u = phi / e;
            let c2 = dphi / e - i * k * u;
            let u0 = u - c2 * (y - p);
            let e0 = (i * k * p).exp();
            phi = u0 * e0;
            dphi = (c2 + i * k * u0) * e0;
            y = p;
        }
        if let Some(a) = atoms.iter().find(|a| a.y == p && p > 0.0) {
            dphi -= xi * xi * a.mass * phi;
        }
    }
    -0.5 * dphi / phi
}

#[test]
fn closed_forms_over_frequency_grid() {
    let grid = log_grid(0.1, 10.0, 13);
    let cases: Vec<(StringSpec, Box<dyn Fn(f64) -> Complex64>)> = vec![
        (
            spec(f64::INFINITY, vec![], DensityProfile::Constant(1.0), DriftProfile::Zero),
            Box::new(|x| (0.5 * x).into()),
        ),
        (
            spec(3.0, vec![], DensityProfile::Zero, DriftProfile::Zero),
            Box::new(|_| (1.0 / 6.0).into()),
        ),
        (
            spec(1.5, vec![], DensityProfile::Constant(1.0), DriftProfile::Zero),
            Box::new(|x: f64| (0.5 * x / (x * 1.5).tanh()).into()),
        ),
        (
            spec(f64::INFINITY, vec![Atom { y: 0.7, mass: 2.0 }], DensityProfile::Zero, DriftProfile::Zero),
            Box::new(|x| (0.5 * x * x * 2.0 / (1.0 + x * x * 2.0 * 0.7)).into()),
        ),
        (
            spec(f64::INFINITY, vec![], DensityProfile::Zero, DriftProfile::Constant(-1.3)),
            Box::new(|x| Complex64::new(0.0, -0.5 * 1.3 * x)),
        ),
        (
            gallery::relativistic_alt(2.0).unwrap().spec,
            Box::new(|x: f64| (0.5 * ((4.0 + x * x).sqrt() - 2.0)).into()),
        ),
    ];
    for (s, f) in &cases {
        for &xi in &grid {
            let e = rel(psi(s, xi), f(xi));
            assert!(e <= 1e-6, "{s:?} xi={xi} err={e}");
        }
    }
}

#[test]
fn meromorphic_matches_transfer_matrices() {
    let atoms = vec![Atom { y: 0.5, mass: 1.0 }, Atom { y: 1.5, mass: 0.3 }];
    let (breaks, values) = (vec![0.8, 2.0], vec![0.0, -1.0, 0.7]);
    let s = spec(
        f64::INFINITY,
        atoms.clone(),
        DensityProfile::Zero,
        DriftProfile::PiecewiseConstant {
            breaks: breaks.clone(),
            values: values.clone(),
        },
    );
    for xi in [0.2, 1.0, 3.0, 8.0] {
        let want = atomic_oracle(&atoms, &breaks, &values, xi);
        assert!(rel(psi(&s, xi), want) < 1e-9, "xi={xi} {} {want}", psi(&s, xi));
    }
}

#[test]
fn krein_examples_and_identity() {
    let cauchy = spec(f64::INFINITY, vec![], DensityProfile::Constant(1.0), DriftProfile::Zero);
    assert!((krein_laplace_exponent(&cauchy, 4.0, &opts()).unwrap() - 2.0).abs() < 1e-8);
    let empty = spec(2.0, vec![], DensityProfile::Zero, DriftProfile::Zero);
    assert!((krein_laplace_exponent(&empty, 9.0, &opts()).unwrap() - 0.5).abs() < 1e-12);
    let shear = gallery::sine().unwrap().spec;
    assert_eq!(krein_laplace_exponent(&shear, 1.0, &opts()), Err(Error::NotSymmetric));

    let specs = [
        cauchy,
        gallery::symmetric_stable(1.5).unwrap().spec,
        gallery::symmetric_stable(0.6).unwrap().spec,
        gallery::relativistic(1.0).unwrap().spec,
        gallery::one_atom(1.0, 1.0).unwrap().spec,
    ];
    for s in &specs {
        let mut last = 0.0;
        for xi in [0.3, 1.0, 2.5] {
            let k = krein_laplace_exponent(s, xi * xi, &opts()).unwrap();
            assert!(k > last);
            last = k;
            let p = psi(s, xi);
            assert!((p.re - 0.5 * k).abs() <= 1e-8 * p.re && p.im.abs() <= 1e-8 * p.re);
        }
    }
}

#[test]
fn stable_strings_are_homogeneous() {
    for alpha in [0.5, 1.2, 1.5] {
        let s = gallery::symmetric_stable(alpha).unwrap().spec;
        let xs = log_grid(0.1, 10.0, 9);
        let logs: Vec<(f64, f64)> = xs.iter().map(|&x| (x.ln(), psi(&s, x).norm().ln())).collect();
        let n = logs.len() as f64;
        let (mx, my) = logs.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0 / n, a.1 + p.1 / n));
        let slope = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
            / logs.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
        assert!((slope - alpha).abs() <= 1e-3, "alpha={alpha} slope={slope}");
    }
}

#[test]
fn mesh_refinement_converges_at_second_order_or_better() {
    let s = spec(
        f64::INFINITY,
        vec![],
        DensityProfile::RationalPower {
            coef: 2.0,
            scale: 0.5,
            exponent: -1.5,
        },
        DriftProfile::Cosine(0.8),
    );
    let xi = 1.3;
    let at = |res: f64| {
        let o = SolverOptions {
            resolution: res,
            ..opts()
        };
        exponent(&s, xi, &o).unwrap().psi
    };
    let reference = at(0.125);
    let e1 = (at(8.0) - reference).norm();
    let e2 = (at(4.0) - reference).norm();
    let order = (e1 / e2).log2();
    assert!(order >= 2.0, "observed order {order}, errors {e1} {e2}");
}

#[test]
fn truncation_is_stable_under_one_more_doubling() {
    for s in [
        gallery::stable(1.5, 1.0, 1.0).unwrap().spec,
        gallery::relativistic(1.0).unwrap().spec,
        gallery::sine().unwrap().spec,
    ] {
        let sol = solve_phi(&s, 0.7, &opts()).unwrap();
        let deeper = SolverOptions {
            initial_cut: 2.0 * sol.y_cut,
            ..opts()
        };
        let again = solve_phi(&s, 0.7, &deeper).unwrap();
        let change = (again.dphi_at_zero - sol.dphi_at_zero).norm() / sol.dphi_at_zero.norm();
        assert!(change <= 1e-8, "{change}");
    }
}

#[test]
fn gallery_exponents_have_nonnegative_real_part() {
    for name in gallery::NAMES {
        let e = gallery::make(name, &[]).unwrap();
        for xi in log_grid(0.05, 20.0, 8) {
            let p = psi(&e.spec, xi);
            assert!(p.re >= -1e-8 * (1.0 + p.norm()), "{name} {xi} {p}");
            if e.spec.b.is_zero() {
                assert!(p.im.abs() <= 1e-8 * (1.0 + p.norm()), "{name} {xi} {p}");
            }
        }
    }
}

#[test]
fn killing_rate_is_half_the_inverse_horizon() {
    let s = spec(2.5, vec![Atom { y: 1.0, mass: 0.4 }], DensityProfile::Constant(0.3), DriftProfile::Sine(0.5));
    assert!((killing_rate(&s, &opts()).unwrap() - 0.2).abs() < 1e-8);
    assert_eq!(killing_rate(&gallery::cauchy().unwrap().spec, &opts()).unwrap(), 0.0);
}

fn admissible() -> impl Strategy<Value = StringSpec> {
    let density = prop_oneof![
        Just(DensityProfile::Zero),
        (0.1..3.0f64).prop_map(DensityProfile::Constant),
        (0.1..2.0f64, -0.8..1.5f64).prop_map(|(coef, exponent)| DensityProfile::Power { coef, exponent }),
    ];
    let b = prop_oneof![
        Just(DriftProfile::Zero),
        (-2.0..2.0f64).prop_map(DriftProfile::Constant),
        (-1.5..1.5f64).prop_map(DriftProfile::Sine),
        (-1.0..1.0f64, -0.4..0.6f64).prop_map(|(coef, exponent)| DriftProfile::Power { coef, exponent }),
    ];
    let atoms = proptest::collection::vec((0.0..3.0f64, 0.0..1.5f64).prop_map(|(y, mass)| Atom { y, mass }), 0..3);
    let horizon = prop_oneof![Just(f64::INFINITY), 3.5..6.0f64];
    (horizon, atoms, density, b).prop_map(|(r, a, d, b)| StringSpec::new(r, a, d, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi_invariants_hold(s in admissible(), xi in 0.1..5.0f64) {
        let sol = solve_phi(&s, xi, &opts()).unwrap();
        prop_assert_eq!(sol.phi[0], Complex64::new(1.0, 0.0));
        let inv = sol.check_invariants(1e-9, 1e-12, s.is_finite());
        prop_assert!(inv.all(), "{:?}", inv);
        let p = exponent(&s, xi, &opts()).unwrap().psi;
        prop_assert!(p.re >= -1e-8 * (1.0 + p.norm()));
    }
}

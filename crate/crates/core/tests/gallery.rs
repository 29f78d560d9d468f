use halftrace_core::gallery::{self, Asymptotic, Reference};
use halftrace_core::ode::{exponent, ExponentSample, SolverOptions};
use halftrace_core::rogers::{check_rogers_properties, decade_grid, stable_tail_constants, RogersCheckOptions};
use halftrace_core::Error;
use num_complex::Complex64;

fn psi(e: &gallery::GalleryEntry, xi: f64) -> Complex64 {
    exponent(&e.spec, xi, &SolverOptions::default()).unwrap().psi
}

#[test]
fn closed_form_entries_match_the_solver() {
    let entries = [
        gallery::trivial(2.0, f64::INFINITY).unwrap(),
        gallery::trivial(-0.7, 3.0).unwrap(),
        gallery::cauchy().unwrap(),
        gallery::one_atom(1.0, 1.0).unwrap(),
        gallery::one_atom(0.3, 2.0).unwrap(),
        gallery::relativistic_alt(1.0).unwrap(),
        gallery::stable(1.0, 0.8, 0.4).unwrap(),
    ];
    for e in &entries {
        for xi in decade_grid(0.1, 2.0, 15) {
            let want = gallery::reference_exponent(e, xi).unwrap();
            let err = (psi(e, xi) - want).norm() / want.norm();
            assert!(err <= 1e-6, "{} xi={xi} err={err}", e.name);
        }
    }
}

#[test]
fn homogeneous_entries_scale() {
    for e in [
        gallery::symmetric_stable(0.7).unwrap(),
        gallery::symmetric_stable(1.5).unwrap(),
        gallery::stable(1.5, 1.0, 1.0).unwrap(),
        gallery::stable(0.5, 0.0, 1.0).unwrap(),
    ] {
        let index = match e.reference {
            Reference::Stable { index, .. } => index,
            Reference::Asymptotic(Asymptotic::Homogeneous { degree }) => degree,
            ref r => panic!("{r:?}"),
        };
        for xi in [0.2, 1.0, 5.0] {
            let ratio = psi(&e, 3.0 * xi) / psi(&e, xi);
            assert!((ratio - 3f64.powf(index)).norm() <= 1e-7 * 3f64.powf(index), "{}", e.name);
        }
    }
}

#[test]
fn stable_reference_constants_fix_the_side_ratio() {
    for (p, q) in [(1.0, 1.0), (0.5, -1.0), (1.0, 0.0)] {
        let e = gallery::stable(1.5, p, q).unwrap();
        let Reference::Stable { index, c_plus, c_minus } = e.reference else {
            panic!()
        };
        let (tp, tm) = stable_tail_constants(index, psi(&e, 1.0)).unwrap();
        assert!(((tp / tm) / (c_plus / c_minus) - 1.0).abs() < 1e-6);
    }
    // one-sided limit: no positive jumps when p = 0, q > 0 and index in (1, 2)
    let e = gallery::stable(1.5, 0.0, 1.0).unwrap();
    let (tp, tm) = stable_tail_constants(1.5, psi(&e, 1.0)).unwrap();
    assert!(tp.abs() < 1e-7 * tm && tm > 0.0);
}

#[test]
fn relativistic_slope_and_alternative_density() {
    for m in [0.5, 1.0, 2.0] {
        let e = gallery::relativistic(m).unwrap();
        let Reference::Asymptotic(Asymptotic::HighFrequency { slope }) = e.reference else {
            panic!()
        };
        let xi = 1e3 * m;
        let ratio = psi(&e, xi).re / xi;
        assert!((ratio / slope - 1.0).abs() <= 0.01, "m={m} ratio={ratio}");
        // the density 1/(1 + 2 m y) does not give the square-root closed form
        let alt = gallery::relativistic_alt(m).unwrap();
        let gap = (psi(&e, m) - psi(&alt, m)).norm() / psi(&alt, m).norm();
        assert!(gap > 1e-2, "m={m} gap={gap}");
    }
}

#[test]
fn every_entry_passes_the_rogers_battery() {
    let o = RogersCheckOptions::default();
    for name in gallery::NAMES {
        let e = gallery::make(name, &[]).unwrap();
        let samples: Vec<ExponentSample> = decade_grid(0.05, 3.0, 31)
            .into_iter()
            .map(|xi| exponent(&e.spec, xi, &SolverOptions::default()).unwrap())
            .collect();
        let r = check_rogers_properties(&samples, None, &o);
        assert!(r.passed(), "{name}: {:?}", r.details);
    }
}

#[test]
fn make_parameters() {
    let e = gallery::make("stable", &[1.2, 0.5]).unwrap();
    assert_eq!(e.spec, gallery::stable(1.2, 0.5, 1.0).unwrap().spec);
    let m = gallery::make("meromorphic", &[1.0, 2.0]).unwrap();
    assert_eq!(m.spec.atoms.len(), 1);
    for (name, params) in [
        ("cauchy", vec![1.0]),
        ("meromorphic", vec![1.0]),
        ("one_atom", vec![-1.0]),
        ("trivial", vec![1.0, 0.0]),
        ("symmetric_stable", vec![2.0]),
        ("relativistic", vec![0.0]),
    ] {
        assert!(matches!(gallery::make(name, &params), Err(Error::BadParameter(_))), "{name}");
    }
}

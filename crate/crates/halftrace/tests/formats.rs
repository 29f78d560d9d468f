use halftrace::csvio::{self, Provenance};
use halftrace::format::{parse_string, string_to_json};
use halftrace::parallel::simulate_par;
use halftrace::Error;
use halftrace_core::gallery;
use halftrace_core::montecarlo::{simulate, SimConfig};
use halftrace_core::ode::ExponentSample;
use halftrace_core::string_model::{Atom, DensityProfile, DriftProfile, StringSpec, Table};
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn every_gallery_string_round_trips() {
    for name in gallery::NAMES {
        let spec = gallery::make(name, &[]).unwrap().spec;
        let text = string_to_json(&spec);
        assert_eq!(parse_string(&text).unwrap(), spec, "{name}");
    }
}

#[test]
fn horizon_is_a_number_or_inf() {
    let doc = |r: &str| format!(r#"{{"R": {r}, "atoms": [], "density": {{"kind": "zero"}}, "b": {{"kind": "zero"}}}}"#);
    assert_eq!(parse_string(&doc("\"inf\"")).unwrap().horizon, f64::INFINITY);
    assert_eq!(parse_string(&doc("2.5")).unwrap().horizon, 2.5);
    assert!(matches!(parse_string(&doc("\"infinity\"")), Err(Error::Format(_))));
    assert!(matches!(parse_string(&doc("null")), Err(Error::Format(_))));
}

#[test]
fn unknown_and_missing_keys_are_rejected() {
    let ok = r#"{"R": 1, "atoms": [{"y": 0.5, "mass": 1}], "density": {"kind": "power", "coef": 1, "exponent": 0.5}, "b": {"kind": "sine", "amplitude": -1}}"#;
    let spec = parse_string(ok).unwrap();
    assert_eq!(spec.atoms, vec![Atom { y: 0.5, mass: 1.0 }]);
    assert_eq!(spec.b, DriftProfile::Sine(-1.0));
    for bad in [
        r#"{"R": 1, "atoms": [], "density": {"kind": "zero"}, "b": {"kind": "zero"}, "extra": 1}"#,
        r#"{"R": 1, "atoms": [{"y": 0.5, "mass": 1, "w": 2}], "density": {"kind": "zero"}, "b": {"kind": "zero"}}"#,
        r#"{"R": 1, "atoms": [], "density": {"kind": "zero", "value": 1}, "b": {"kind": "zero"}}"#,
        r#"{"R": 1, "atoms": [], "density": {"kind": "constant"}, "b": {"kind": "zero"}}"#,
        r#"{"R": 1, "atoms": [], "density": {"kind": "gaussian"}, "b": {"kind": "zero"}}"#,
        r#"{"R": 1, "atoms": [], "density": {"kind": "zero"}}"#,
    ] {
        assert!(matches!(parse_string(bad), Err(Error::Format(_))), "{bad}");
    }
}

fn density() -> impl Strategy<Value = DensityProfile> {
    prop_oneof![
        Just(DensityProfile::Zero),
        (0.0..3.0f64).prop_map(DensityProfile::Constant),
        (0.0..3.0f64, -0.9..2.0f64).prop_map(|(coef, exponent)| DensityProfile::Power { coef, exponent }),
        (0.0..3.0f64, 0.1..3.0f64, -3.0..1.0f64)
            .prop_map(|(coef, scale, exponent)| DensityProfile::RationalPower { coef, scale, exponent }),
        proptest::collection::vec(0.0..2.0f64, 1..5)
            .prop_map(|v| DensityProfile::Table(Table::new((0..v.len()).map(|i| i as f64).collect(), v))),
    ]
}

fn drift() -> impl Strategy<Value = DriftProfile> {
    prop_oneof![
        Just(DriftProfile::Zero),
        (-3.0..3.0f64).prop_map(DriftProfile::Constant),
        (-3.0..3.0f64, -0.4..2.0f64).prop_map(|(coef, exponent)| DriftProfile::Power { coef, exponent }),
        proptest::collection::vec(-2.0..2.0f64, 2..5).prop_map(|values| DriftProfile::PiecewiseConstant {
            breaks: (1..values.len()).map(|i| i as f64).collect(),
            values,
        }),
        (-2.0..2.0f64).prop_map(DriftProfile::Sine),
        (-2.0..2.0f64).prop_map(DriftProfile::Cosine),
        proptest::collection::vec(-2.0..2.0f64, 1..5)
            .prop_map(|v| DriftProfile::Table(Table::new((0..v.len()).map(|i| 0.5 * i as f64).collect(), v))),
    ]
}

proptest! {
    #[test]
    fn string_files_round_trip(
        r in prop_oneof![Just(f64::INFINITY), 0.1..10.0f64],
        atoms in proptest::collection::vec((0.0..5.0f64, 0.0..2.0f64).prop_map(|(y, mass)| Atom { y, mass }), 0..4),
        d in density(),
        b in drift(),
    ) {
        let spec = StringSpec::new(r, atoms, d, b);
        prop_assert_eq!(parse_string(&string_to_json(&spec)).unwrap(), spec);
    }

    #[test]
    fn exponent_tables_round_trip(rows in proptest::collection::vec((0.01..100.0f64, -10.0..10.0f64, -10.0..10.0f64), 1..20)) {
        let samples: Vec<ExponentSample> = rows
            .iter()
            .map(|&(xi, re, im)| ExponentSample { xi, psi: Complex64::new(re, im) })
            .collect();
        let mut buf = Vec::new();
        csvio::write_exponent_table(&mut buf, &samples, &Provenance::default()).unwrap();
        prop_assert_eq!(csvio::read_exponent_table(buf.as_slice()).unwrap(), samples);
    }
}

#[test]
fn csv_tables_carry_headers_and_provenance() {
    let spec = gallery::sine().unwrap().spec;
    let cfg = SimConfig {
        horizon: 0.05,
        ..SimConfig::new(1e-4, 1, 5)
    };
    let path = halftrace_core::montecarlo::sample_path(&spec, &cfg, 0);
    let prov = Provenance {
        seed: Some(5),
        dt: Some(1e-4),
    };
    let mut buf = Vec::new();
    csvio::write_path(&mut buf, &path, &prov).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,t,Y,L0,A,B,X,alive");
    assert_eq!(lines.len(), path.len() + 4);
    assert_eq!(&lines[lines.len() - 3..], ["# seed=5", "# dt=0.0001", "# version=0.1.0"]);

    let mut buf = Vec::new();
    csvio::write_trace(&mut buf, &halftrace_core::montecarlo::trace(&path, &[0.0]), &prov).unwrap();
    assert!(String::from_utf8(buf).unwrap().starts_with("u,Z,alive\n0,0,1\n"));
    let mut buf = Vec::new();
    csvio::write_excursions(&mut buf, &[], &prov).unwrap();
    assert!(String::from_utf8(buf).unwrap().starts_with("u,zeta,max,dX,completed\n# seed=5"));
}

#[test]
fn malformed_exponent_table_is_rejected() {
    assert!(csvio::read_exponent_table("x,y,z\n1,2,3\n".as_bytes()).is_err());
    assert!(csvio::read_exponent_table("xi,re_psi,im_psi\n1,oops,3\n".as_bytes()).is_err());
}

#[test]
fn parallel_simulation_matches_sequential() {
    let spec = gallery::stable(1.5, 1.0, 1.0).unwrap().spec;
    let cfg = SimConfig {
        horizon: 0.2,
        ..SimConfig::new(1e-4, 8, 17)
    };
    let seq = simulate(&spec, &cfg, |i, p| (i, p));
    let par = simulate_par(&spec, &cfg, |i, p| (i, p));
    assert_eq!(seq, par);
}

#[test]
fn exit_codes_follow_the_failure_class() {
    use halftrace_core::Error as Core;
    assert_eq!(Error::from(Core::InvalidString("x".into())).exit_code(), 1);
    assert_eq!(Error::from(Core::NonConvergent { cut: 1.0, change: 1.0 }).exit_code(), 2);
    assert_eq!(Error::from(Core::QuadratureFailure { error: 1.0 }).exit_code(), 2);
    assert_eq!(Error::from(Core::InsufficientLocalTime { have: 0.0, need: 1.0 }).exit_code(), 3);
    assert_eq!(Error::Verification("x".into()).exit_code(), 3);
    assert_eq!(Error::Rejected("x".into()).exit_code(), 1);
}

//! Complex Gamma function by the Lanczos approximation (g = 7, n = 9).

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

const G: f64 = 7.0;
const COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma of a complex argument away from the poles `0, -1, -2, ...`.
pub fn gamma(z: Complex64) -> Complex64 {
    let pi = core::f64::consts::PI;
    if z.re < 0.5 {
        // reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        let s = (z * pi).sin();
        return Complex64::new(pi, 0.0) / (s * gamma(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(COEF[0], 0.0);
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    let lead = (2.0 * pi).sqrt();
    t.powc(z + 0.5) * (-t).exp() * x * lead
}

/// Real Gamma, via the complex routine.
pub fn gamma_real(x: f64) -> f64 {
    gamma(Complex64::new(x, 0.0)).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_known_values() {
        assert!((gamma_real(5.0) - 24.0).abs() < 1e-12 * 24.0);
        assert!((gamma_real(0.5) - core::f64::consts::PI.sqrt()).abs() < 1e-13);
        // Gamma(-0.5) = -2 sqrt(pi)
        assert!((gamma_real(-0.5) + 2.0 * core::f64::consts::PI.sqrt()).abs() < 1e-12);
        // Gamma(i) = -0.1549498283018107 - 0.4980156681183560 i
        let g = gamma(Complex64::new(0.0, 1.0));
        assert!((g.re + 0.154_949_828_301_810_7).abs() < 1e-13);
        assert!((g.im + 0.498_015_668_118_356).abs() < 1e-13);
    }

    #[test]
    fn satisfies_recurrence_off_axis() {
        for &(a, b) in &[(0.3, 2.0), (2.7, -1.4), (-1.3, 0.8), (6.5, 3.0)] {
            let z = Complex64::new(a, b);
            let lhs = gamma(z + 1.0);
            let rhs = z * gamma(z);
            assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm(), "{z}");
        }
    }
}

//! Divided differences and compensated sums.

use alloc::vec::Vec;

/// Neumaier-compensated sum, independent of how the caller batches terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// All divided-difference columns of orders `0..=order` at nodes `x` (distinct).
///
/// Column `j` has `x.len() - j` entries; entry `i` is `f[x_i, ..., x_{i+j}]`.
/// The second component holds, for every entry, the sum of absolute values
/// of the terms that formed it, which scales rounding-error tolerances.
pub fn divided_differences(x: &[f64], f: &[f64], order: usize) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let mut cols = alloc::vec![f.to_vec()];
    let mut scales = alloc::vec![f.iter().map(|v| v.abs()).collect::<Vec<_>>()];
    for j in 1..=order.min(x.len().saturating_sub(1)) {
        let prev = &cols[j - 1];
        let prev_s = &scales[j - 1];
        let mut col = Vec::with_capacity(prev.len() - 1);
        let mut sc = Vec::with_capacity(prev.len() - 1);
        for i in 0..prev.len() - 1 {
            let h = x[i + j] - x[i];
            col.push((prev[i + 1] - prev[i]) / h);
            sc.push((prev_s[i + 1] + prev_s[i]) / h.abs());
        }
        cols.push(col);
        scales.push(sc);
    }
    (cols, scales)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_differences_of_cubic_are_exact() {
        let x = [0.0, 0.5, 1.3, 2.0, 3.7];
        let f: Vec<f64> = x.iter().map(|t| 2.0 * t * t * t - t + 1.0).collect();
        let (cols, _) = divided_differences(&x, &f, 4);
        for v in &cols[3] {
            assert!((v - 2.0).abs() < 1e-12);
        }
        for v in &cols[4] {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = Compensated::new();
        s.add(1e16);
        for _ in 0..1000 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 1000.0);
    }
}

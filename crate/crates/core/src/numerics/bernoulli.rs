use crate::error::{Result, RootIdError};

/// Largest `k` for which `B_{2k}` is tabulated by default.
pub const DEFAULT_K_MAX: usize = 8;

// B_{2k} = num / den, k = 1..=10
const EVEN_BERNOULLI: [(i64, i64); 10] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

/// Even Bernoulli numbers `B_2, B_4, ..., B_{2 k_max}`, rendered from exact
/// rationals once.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<f64>,
}

impl BernoulliTable {
    pub fn new(k_max: usize) -> Result<Self> {
        if k_max == 0 || k_max > EVEN_BERNOULLI.len() {
            return Err(RootIdError::Range(format!(
                "Bernoulli table size {k_max} outside 1..={}",
                EVEN_BERNOULLI.len()
            )));
        }
        let values = EVEN_BERNOULLI[..k_max].iter().map(|&(n, d)| n as f64 / d as f64).collect();
        Ok(Self { values })
    }

    pub fn k_max(&self) -> usize {
        self.values.len()
    }

    /// `B_{2k}` for `1 <= k <= k_max`.
    pub fn get(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.values.len() {
            return Err(RootIdError::Range(format!("B_(2k) requested for k = {k}, table holds 1..={}", self.values.len())));
        }
        Ok(self.values[k - 1])
    }
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new(DEFAULT_K_MAX).expect("default table size is valid")
    }
}

/// `B_{2k}` from the default table (`k <= 8`).
pub fn bernoulli_even(k: usize) -> Result<f64> {
    if k == 0 || k > DEFAULT_K_MAX {
        return Err(RootIdError::Range(format!("B_(2k) for k = {k} outside 1..={DEFAULT_K_MAX}")));
    }
    let (n, d) = EVEN_BERNOULLI[k - 1];
    Ok(n as f64 / d as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values_exact() {
        assert_eq!(bernoulli_even(1).unwrap(), 1.0 / 6.0);
        assert_eq!(bernoulli_even(2).unwrap(), -1.0 / 30.0);
        assert_eq!(bernoulli_even(3).unwrap(), 1.0 / 42.0);
        assert!((bernoulli_even(1).unwrap() - 0.166_666_666_7).abs() < 1e-10);
    }

    #[test]
    fn out_of_table() {
        assert!(matches!(bernoulli_even(0), Err(RootIdError::Range(_))));
        assert!(matches!(bernoulli_even(9), Err(RootIdError::Range(_))));
        let t = BernoulliTable::new(10).unwrap();
        assert!((t.get(10).unwrap() + 174611.0 / 330.0).abs() < 1e-12);
        assert!(t.get(11).is_err());
    }

    #[test]
    fn matches_zeta_even_values() {
        // B_2k = (-1)^(k+1) 2 (2k)! zeta(2k) / (2 pi)^(2k)
        let t = BernoulliTable::default();
        let mut fact = 1.0;
        for k in 1..=t.k_max() {
            fact *= ((2 * k - 1) * (2 * k)) as f64;
            let zeta: f64 = (1..20000).map(|n| (n as f64).powi(-2 * k as i32)).sum();
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let expect = sign * 2.0 * fact * zeta / (2.0 * std::f64::consts::PI).powi(2 * k as i32);
            let got = t.get(k).unwrap();
            assert!(((got - expect) / got).abs() < 1e-4, "k={k}");
        }
    }
}

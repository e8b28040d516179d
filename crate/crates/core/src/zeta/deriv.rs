use super::IdentityPoint;
use crate::data::PrimeTable;
use crate::error::{Result, RootIdError};
use crate::numerics::{exp_i_pi, gamma_reciprocal, re, ComplexValue};
use crate::summation::sum_indexed;

/// `d_zeta` with a bound on what the prime and prime-power cutoffs leave out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivValue {
    pub value: ComplexValue,
    pub trunc_bound: f64,
}

/// `-e^{i pi mu} / Gamma(mu) sum_p (ln p)^mu sum_{k<=k_max} k^{mu-1} p^{-k s0}`.
///
/// The bound adds the Chebyshev-type integral of the `k = 1` terms past the
/// last prime to twice the first omitted prime-power term of every prime.
pub fn zeta_deriv_side(pt: IdentityPoint, primes: &PrimeTable, k_max: usize) -> Result<DerivValue> {
    let s0 = pt.s0;
    let mu = pt.mu;
    if !(s0.re > 1.0) {
        return Err(RootIdError::Domain(format!("Re(s0) must exceed 1, got {s0}")));
    }
    if k_max == 0 {
        return Err(RootIdError::Config("k_max must be at least 1".into()));
    }
    if primes.is_empty() {
        return Err(RootIdError::Config("empty prime table".into()));
    }
    let inv_gamma = gamma_reciprocal(re(mu))?;
    if inv_gamma == re(0.0) {
        return Ok(DerivValue { value: re(0.0), trunc_bound: 0.0 });
    }
    let ps = primes.as_slice();
    let sigma = s0.re;
    let kpow: Vec<f64> = (1..=k_max).map(|k| (k as f64).powf(mu - 1.0)).collect();
    let sum = sum_indexed(0..ps.len(), |i| {
        let lp = (ps[i] as f64).ln();
        // p^{-s0} and its powers
        let step = (-s0 * lp).exp();
        let mut pk = step;
        let mut inner = ComplexValue::new(0.0, 0.0);
        for &w in &kpow {
            inner += w * pk;
            pk *= step;
        }
        lp.powf(mu) * inner
    });
    let omitted = sum_indexed(0..ps.len(), |i| {
        let lp = (ps[i] as f64).ln();
        re(lp.powf(mu) * ((k_max + 1) as f64).powf(mu - 1.0) * (-(k_max as f64 + 1.0) * sigma * lp).exp())
    })
    .re;
    let big_p = primes.last() as f64;
    let prime_tail = big_p.ln().powf(mu - 1.0) * big_p.powf(1.0 - sigma) / (sigma - 1.0);
    let scale = inv_gamma.norm();
    let value = -exp_i_pi(re(mu)) * inv_gamma * sum;
    Ok(DerivValue { value, trunc_bound: scale * (2.0 * prime_tail + 2.0 * omitted) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::sieve_primes;

    #[test]
    fn vanishes_at_nonpositive_integers() {
        let primes = sieve_primes(100).unwrap();
        for mu in [0.0, -1.0, -2.0] {
            let pt = IdentityPoint::real(5.1238, mu).unwrap();
            let d = zeta_deriv_side(pt, &primes, 10).unwrap();
            assert_eq!(d.value, re(0.0));
        }
    }

    #[test]
    fn mu_one_is_log_derivative() {
        // d(s0, 1) = -zeta'/zeta(s0) = sum Lambda(n) n^{-s0}
        let primes = sieve_primes(2000).unwrap();
        let s = 3.0;
        let pt = IdentityPoint::real(s, 1.0).unwrap();
        let d = zeta_deriv_side(pt, &primes, 40).unwrap();
        let mut expect = 0.0;
        for &p in primes.as_slice() {
            let lp = (p as f64).ln();
            let mut pk = p as f64;
            while pk < 1e12 {
                expect += lp * pk.powf(-s);
                pk *= p as f64;
            }
        }
        assert!((d.value.re - expect).abs() < 1e-12, "{} {expect}", d.value.re);
        assert!(d.value.im.abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        let primes = sieve_primes(10).unwrap();
        let pt = IdentityPoint::real(5.0, 0.5).unwrap();
        assert!(zeta_deriv_side(pt, &primes, 0).is_err());
        let bad = IdentityPoint { s0: re(0.5), mu: 2.0 };
        assert!(matches!(zeta_deriv_side(bad, &primes, 10), Err(RootIdError::Domain(_))));
    }
}

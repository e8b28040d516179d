use super::IdentityPoint;
use crate::error::{Result, RootIdError};
use crate::euler_maclaurin::{em_tail, LADDER_TERMS};
use crate::gamma_identity::EMTruncation;
use crate::numerics::{cpow_principal, cpow_nonzero, exp_i_pi, re, ComplexValue};
use crate::summation::sum_indexed;

/// `r_T = e^{i pi mu} sum_j (s0 + 2j)^{-mu}` with the Euler-Maclaurin tail at
/// `s0 + 2 k_max` removed.
pub fn trivial_root_side(pt: IdentityPoint, trunc: EMTruncation) -> Result<ComplexValue> {
    pt.check_root_regime()?;
    let mu = pt.mu;
    if trunc.k_max < 10 {
        return Err(RootIdError::Config(format!("k_max = {} below the minimum of 10", trunc.k_max)));
    }
    let expected = EMTruncation::for_mu(trunc.k_max, mu).correction_order;
    if trunc.correction_order != expected {
        return Err(RootIdError::Config(format!(
            "correction order {} does not match mu = {mu} (needs {expected})",
            trunc.correction_order
        )));
    }
    let s0 = pt.s0;
    let k = trunc.k_max;
    let sum = if s0.im == 0.0 {
        let a = s0.re;
        sum_indexed(1..k + 1, |j| re((a + 2.0 * j as f64).powf(-mu)))
    } else {
        let m = re(-mu);
        sum_indexed(1..k + 1, |j| cpow_nonzero(s0 + 2.0 * j as f64, m))
    };
    let tail = em_tail(s0 + 2.0 * k as f64, 2.0, mu, LADDER_TERMS)?;
    let sub = if trunc.accelerated { tail.full() } else { tail.divergent(mu) };
    Ok(exp_i_pi(re(mu)) * (sum - sub))
}

/// `r_P = -e^{i pi mu} (s0 - 1)^{-mu}`.
pub fn pole_side(pt: IdentityPoint) -> Result<ComplexValue> {
    let w = pt.s0 - 1.0;
    if w == re(0.0) {
        return Err(RootIdError::Domain("s0 = 1 is the pole".into()));
    }
    Ok(-exp_i_pi(re(pt.mu)) * cpow_principal(w, re(-pt.mu))?)
}

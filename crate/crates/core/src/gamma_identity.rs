//! Root and derivative sides for `f(z) = Gamma(z + 1)`.
//!
//! The poles sit at `-1, -2, -3, ...` with multiplicity `-1`, so the root side is
//! `-e^{i pi mu} sum_j (z0 + j)^{-mu}`, divergent for `mu <= 1` and made sense of
//! by removing its Euler-Maclaurin divergent part.

use crate::error::{Result, RootIdError};
use crate::euler_maclaurin::{em_tail, LADDER_TERMS};
use crate::numerics::{cpow_principal, exp_i_pi, re, BernoulliTable, ComplexValue};
use crate::summation::sum_indexed;

/// Half-width of the excluded band around `mu = 1`.
pub const MU_ONE_MARGIN: f64 = 0.05;
/// Below this `|mu|` the root side is the closed form `z0 + 1/2`.
pub const MU_ZERO_MARGIN: f64 = 1e-6;
/// Default number of Bernoulli terms in the derivative-side expansion.
pub const DEFAULT_ORDER: usize = 3;
const MAX_ORDER: usize = 9;

/// How the pole sum is cut off and which tail pieces come off it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EMTruncation {
    /// Number of poles summed.
    pub k_max: usize,
    /// 0: no subtraction (`mu > 1`), 1: integral term (`0 < mu < 1`),
    /// 2: integral and half term (`-1 < mu < 0`).
    pub correction_order: u8,
    /// Also subtract the Bernoulli ladder and, for `mu > 1`, the convergent
    /// tail, so that `k_max = 1e5` already reaches `1e-6`.
    pub accelerated: bool,
}

impl EMTruncation {
    /// Accelerated truncation with the correction order for `mu`'s window.
    pub fn for_mu(k_max: usize, mu: f64) -> Self {
        Self { k_max, correction_order: correction_order_for(mu), accelerated: true }
    }

    /// Exactly the subtraction written out for each window, nothing more.
    pub fn plain(k_max: usize, mu: f64) -> Self {
        Self { accelerated: false, ..Self::for_mu(k_max, mu) }
    }
}

fn correction_order_for(mu: f64) -> u8 {
    if mu > 1.0 {
        0
    } else if mu > 0.0 {
        1
    } else {
        2
    }
}

fn check_branch(z0: ComplexValue) -> Result<()> {
    if z0.im == 0.0 && z0.re <= -1.0 {
        return Err(RootIdError::Domain(format!("z0 = {} lies on the branch cut (-inf, -1]", z0.re)));
    }
    Ok(())
}

/// `r_Gamma(z0, mu)`.
pub fn gamma_root_side(z0: ComplexValue, mu: f64, trunc: EMTruncation) -> Result<ComplexValue> {
    check_branch(z0)?;
    if mu == 1.0 {
        return Err(RootIdError::RenormalisationRequired);
    }
    if (mu - 1.0).abs() < MU_ONE_MARGIN {
        return Err(RootIdError::Regime(format!("mu = {mu} within {MU_ONE_MARGIN} of 1")));
    }
    if mu.abs() < MU_ZERO_MARGIN {
        return Ok(z0 + 0.5);
    }
    if mu <= -1.0 {
        return Err(RootIdError::Regime(format!(
            "mu = {mu}: root side below -1 needs tail terms that are not implemented"
        )));
    }
    if !mu.is_finite() {
        return Err(RootIdError::Domain(format!("mu = {mu}")));
    }
    if trunc.k_max < 10 {
        return Err(RootIdError::Config(format!("k_max = {} below the minimum of 10", trunc.k_max)));
    }
    let expected = correction_order_for(mu);
    if trunc.correction_order != expected {
        return Err(RootIdError::Config(format!(
            "correction order {} does not match mu = {mu} (needs {expected})",
            trunc.correction_order
        )));
    }

    let k = trunc.k_max;
    let sum = pole_sum(z0, mu, k);
    let x = z0 + k as f64;
    let tail = em_tail(x, 1.0, mu, LADDER_TERMS)?;
    let sub = if trunc.accelerated { tail.full() } else { tail.divergent(mu) };
    Ok(-exp_i_pi(re(mu)) * (sum - sub))
}

fn pole_sum(z0: ComplexValue, mu: f64, k: usize) -> ComplexValue {
    if z0.im == 0.0 {
        let a = z0.re;
        sum_indexed(1..k + 1, |j| re((a + j as f64).powf(-mu)))
    } else {
        let m = re(-mu);
        sum_indexed(1..k + 1, |j| crate::numerics::cpow_nonzero(z0 + j as f64, m))
    }
}

/// Derivative side with the size of the first omitted term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: ComplexValue,
    pub error_estimate: f64,
}

/// `d_Gamma(z0, mu)` from the asymptotic expansion in `1/(z0 + 1)` with `order`
/// Bernoulli terms.
pub fn gamma_deriv_side(z0: ComplexValue, mu: f64, order: usize) -> Result<SeriesValue> {
    check_branch(z0)?;
    if mu == 1.0 {
        return Err(RootIdError::Pole(1));
    }
    if !mu.is_finite() {
        return Err(RootIdError::Domain(format!("mu = {mu}")));
    }
    if order > MAX_ORDER {
        return Err(RootIdError::Range(format!("order {order} above {MAX_ORDER}")));
    }
    let a = z0 + 1.0;
    let table = BernoulliTable::new(order + 1)?;
    let inv_a2 = (a * a).inv();
    let phase = -exp_i_pi(re(mu));
    let pre = phase / (mu - 1.0) * cpow_principal(a, re(1.0 - mu))?;
    // leading pair kept apart from the bracket so mu = 0 gives a - 1/2 without rounding
    let lead = pre + 0.5 * phase * cpow_principal(a, re(-mu))?;

    let mut bracket = re(0.0);
    // (mu-1) mu ... (mu+2k-2) / (2k)!
    let mut coef = 1.0;
    let mut apow = re(1.0);
    let mut prev = f64::INFINITY;
    let mut omitted = 0.0;
    for k in 1..=order + 1 {
        let m = 2.0 * k as f64;
        coef *= (mu + m - 3.0) * (mu + m - 2.0) / ((m - 1.0) * m);
        apow *= inv_a2;
        let term = table.get(k)? * coef * apow;
        let mag = term.norm();
        if k <= order {
            if mag > prev {
                return Err(RootIdError::Accuracy { best_estimate: (pre * prev).norm() });
            }
            bracket += term;
            prev = mag;
        } else {
            omitted = mag;
        }
    }
    Ok(SeriesValue { value: lead + pre * bracket, error_estimate: (pre * omitted).norm() })
}

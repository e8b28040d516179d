//! Euler-Maclaurin tails of arithmetic power sums
//!
//! For `S_k = sum_{j=1}^k (a + h j)^{-mu}` and `x = a + h k`,
//!
//! ```text
//! S_k = C + x^{1-mu} / (h (1-mu)) + x^{-mu} / 2 + sum_m B_2m/(2m)! h^{2m-1} D^{2m-1} x^{-mu} + ...
//! ```
//!
//! where `C` is the Hurwitz-type constant `h^{-mu} zeta(mu, a/h + 1)` for every
//! real `mu != 1`. Subtracting the divergent pieces and letting `k -> inf`
//! gives the Cesaro limit of the divergent sums; subtracting all pieces gives
//! `C` at finite `k`.

use crate::error::{Result, RootIdError};
use crate::numerics::{cpow_principal, re, BernoulliTable, ComplexValue};

/// Bernoulli corrections used by accelerated tails.
pub const LADDER_TERMS: usize = 4;

/// Expansion pieces of `S_k` at `x = a + h k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmTail {
    /// `x^{1-mu} / (h (1-mu))`
    pub integral: ComplexValue,
    /// `x^{-mu} / 2`
    pub half: ComplexValue,
    /// Bernoulli ladder `sum_{m=1}^{terms} ...`
    pub ladder: ComplexValue,
    /// Magnitude of the first ladder term left out.
    pub next_term: f64,
}

impl EmTail {
    /// Pieces that do not vanish as `x -> inf`: the integral for `mu < 1`, the
    /// half term for `mu < 0`. Enough for the classical limit when `-1 < mu`.
    pub fn divergent(&self, mu: f64) -> ComplexValue {
        let mut t = ComplexValue::new(0.0, 0.0);
        if mu < 1.0 {
            t += self.integral;
        }
        if mu < 0.0 {
            t += self.half;
        }
        t
    }

    /// Every piece, so that `S_k - full()` approximates the constant directly.
    pub fn full(&self) -> ComplexValue {
        self.integral + self.half + self.ladder
    }
}

/// Tail pieces at `x` with step `h` and `terms` Bernoulli corrections.
pub fn em_tail(x: ComplexValue, h: f64, mu: f64, terms: usize) -> Result<EmTail> {
    if mu == 1.0 {
        return Err(RootIdError::RenormalisationRequired);
    }
    if !(h > 0.0) {
        return Err(RootIdError::Domain(format!("step must be positive, got {h}")));
    }
    let table = BernoulliTable::new(terms + 1)?;
    let x_neg = cpow_principal(x, re(-mu))?;
    let integral = x_neg * x / (h * (1.0 - mu));
    let half = 0.5 * x_neg;

    let inv_x = x.inv();
    // D^{n} x^{-mu} = (-mu)(-mu-1)...(-mu-n+1) x^{-mu-n}
    let mut deriv = x_neg * (-mu) * inv_x;
    let mut fact = 2.0; // (2m)!
    let mut hpow = h; // h^{2m-1}
    let mut ladder = ComplexValue::new(0.0, 0.0);
    let mut next_term = 0.0;
    for m in 1..=terms + 1 {
        let term = deriv * (table.get(m)? / fact * hpow);
        if m <= terms {
            ladder += term;
        } else {
            next_term = term.norm();
        }
        let n = (2 * m - 1) as f64;
        deriv = deriv * (-mu - n) * (-mu - n - 1.0) * inv_x * inv_x;
        fact *= (2 * m + 1) as f64 * (2 * m + 2) as f64;
        hpow *= h * h;
    }
    Ok(EmTail { integral, half, ladder, next_term })
}

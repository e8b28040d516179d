//! Scalar substrate: principal-branch powers, the complex gamma function,
//! even Bernoulli numbers and generalised Fresnel integrals.

mod bernoulli;
mod fresnel;
mod gamma;

pub use bernoulli::{bernoulli_even, BernoulliTable, DEFAULT_K_MAX};
pub use fresnel::{fresnel_closed, FresnelKind};
pub use gamma::{gamma_complex, gamma_real, gamma_reciprocal};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, RootIdError};

/// Complex scalar for every side evaluation.
pub type ComplexValue = Complex64;

/// Shorthand for a real number as a [`ComplexValue`].
#[inline]
pub fn re(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

pub(crate) fn ensure_finite(z: ComplexValue, what: &'static str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(RootIdError::NonFinite(what))
    }
}

/// `(cos(pi x), sin(pi x))` with exact values at integers and half integers.
pub fn cos_sin_pi(x: f64) -> (f64, f64) {
    // reduce to [-1, 1]
    let r = x - 2.0 * (0.5 * x).round();
    if r == 0.0 {
        (1.0, 0.0)
    } else if r == 1.0 || r == -1.0 {
        (-1.0, 0.0)
    } else if r == 0.5 {
        (0.0, 1.0)
    } else if r == -0.5 {
        (0.0, -1.0)
    } else {
        let (s, c) = (PI * r).sin_cos();
        (c, s)
    }
}

/// `sin(pi z)` for complex `z`, with argument reduction on the real part.
pub fn sin_pi(z: ComplexValue) -> ComplexValue {
    let (c, s) = cos_sin_pi(z.re);
    let y = PI * z.im;
    ComplexValue::new(s * y.cosh(), c * y.sinh())
}

/// `e^{i pi mu}`; exactly `+-1` or `+-i` at integer and half-integer real `mu`.
pub fn exp_i_pi(mu: ComplexValue) -> ComplexValue {
    let (c, s) = cos_sin_pi(mu.re);
    let scale = (-PI * mu.im).exp();
    ComplexValue::new(scale * c, scale * s)
}

/// Principal argument in `(-pi, pi]`; the negative real axis maps to `+pi`
/// regardless of the sign of a zero imaginary part.
pub fn principal_arg(z: ComplexValue) -> f64 {
    if z.im == 0.0 && z.re < 0.0 {
        PI
    } else {
        z.im.atan2(z.re)
    }
}

/// `exp(mu Log z)` on the principal branch.
///
/// `z = 0` gives `0` for `Re(mu) > 0` and a domain error otherwise.
pub fn cpow_principal(z: ComplexValue, mu: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        return if mu.re > 0.0 {
            Ok(ComplexValue::new(0.0, 0.0))
        } else {
            Err(RootIdError::Domain(format!("0^mu with Re(mu) = {} <= 0", mu.re)))
        };
    }
    ensure_finite(cpow_nonzero(z, mu), "cpow_principal")
}

/// [`cpow_principal`] without the zero and finiteness checks, for hot loops whose
/// callers have excluded `z = 0`.
#[inline]
pub(crate) fn cpow_nonzero(z: ComplexValue, mu: ComplexValue) -> ComplexValue {
    if mu.im == 0.0 && mu.re.fract() == 0.0 && mu.re.abs() <= 64.0 {
        return z.powi(mu.re as i32);
    }
    let theta = principal_arg(z);
    let r = z.re.hypot(z.im);
    if mu.im == 0.0 {
        let modulus = r.powf(mu.re);
        let (s, c) = (mu.re * theta).sin_cos();
        ComplexValue::new(modulus * c, modulus * s)
    } else {
        let ln_r = r.ln();
        let modulus = (mu.re * ln_r - mu.im * theta).exp();
        let (s, c) = (mu.re * theta + mu.im * ln_r).sin_cos();
        ComplexValue::new(modulus * c, modulus * s)
    }
}

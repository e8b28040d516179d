//! Closed forms for `f(z) = z` and for polynomials given by their roots.

use crate::error::{Result, RootIdError};
use crate::numerics::{
    cpow_principal, exp_i_pi, fresnel_closed, gamma_real, re, ComplexValue, FresnelKind,
};

/// A root (`multiplicity > 0`) or pole (`multiplicity < 0`) of `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootSpec {
    pub location: ComplexValue,
    pub multiplicity: i32,
}

impl RootSpec {
    pub fn new(location: ComplexValue, multiplicity: i32) -> Result<Self> {
        if multiplicity == 0 {
            return Err(RootIdError::Domain("root multiplicity must be nonzero".into()));
        }
        Ok(Self { location, multiplicity })
    }
}

/// Polynomial `prod_i (z - r_i)^{M_i}` up to a constant factor.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialSpec {
    roots: Vec<RootSpec>,
}

impl PolynomialSpec {
    pub fn new(roots: Vec<RootSpec>) -> Result<Self> {
        if roots.is_empty() {
            return Err(RootIdError::Domain("polynomial needs at least one root".into()));
        }
        if let Some(r) = roots.iter().find(|r| r.multiplicity <= 0) {
            return Err(RootIdError::Domain(format!(
                "polynomial root at {} has multiplicity {}",
                r.location, r.multiplicity
            )));
        }
        Ok(Self { roots })
    }

    pub fn roots(&self) -> &[RootSpec] {
        &self.roots
    }

    /// Roots of `self * other`.
    pub fn product(&self, other: &PolynomialSpec) -> PolynomialSpec {
        let mut roots = self.roots.clone();
        roots.extend_from_slice(&other.roots);
        PolynomialSpec { roots }
    }
}

/// Closest approach to an integer the Fresnel route accepts.
pub const FRESNEL_MU_MIN: f64 = 1e-300;

/// `e^{i pi mu} z0^{-mu}`.
pub fn monomial_root_side(z0: ComplexValue, mu: ComplexValue) -> Result<ComplexValue> {
    if z0 == re(0.0) {
        return Err(RootIdError::Domain("z0 = 0 is the root itself".into()));
    }
    Ok(exp_i_pi(mu) * cpow_principal(z0, -mu)?)
}

/// Derivative side of `f(z) = z` for real `z0 > 0`, built from the Fresnel integrals on
/// `(0, 1)` and moved to other `mu` by `d(mu + 1) = -d(mu) / z0`.
///
/// Integer `mu` uses direct differentiation, `(-1)^mu z0^{-mu}`.
pub fn monomial_deriv_side(z0: ComplexValue, mu: f64) -> Result<ComplexValue> {
    if z0.im != 0.0 || !(z0.re > 0.0) {
        return Err(RootIdError::Domain(format!("Fresnel route needs real z0 > 0, got {z0}")));
    }
    if !mu.is_finite() {
        return Err(RootIdError::Domain(format!("mu = {mu}")));
    }
    let x = z0.re;
    if mu.fract() == 0.0 {
        let sign = if mu.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
        return Ok(re(sign * x.powf(-mu)));
    }
    let base = mu - mu.floor();
    if base < FRESNEL_MU_MIN || 1.0 - base < FRESNEL_MU_MIN {
        return Err(RootIdError::Range(format!(
            "mu = {mu} is within {FRESNEL_MU_MIN:e} of an integer; Gamma(mu) on the Fresnel route overflows"
        )));
    }
    let mut d = fresnel_unit(x, base)?;
    if mu > base {
        for _ in 0..(mu - base).round() as i64 {
            d = -d / x;
        }
    } else {
        for _ in 0..(base - mu).round() as i64 {
            d = -d * x;
        }
    }
    Ok(d)
}

// mu in (0, 1): e^{i pi mu/2} / (2 Gamma(mu+1)) {(1 + e^{i pi mu}) C + i (1 - e^{i pi mu}) S} z0^{-mu}
fn fresnel_unit(x: f64, mu: f64) -> Result<ComplexValue> {
    let a = 1.0 / mu;
    let c = fresnel_closed(a, FresnelKind::Cos)?;
    let s = fresnel_closed(a, FresnelKind::Sin)?;
    let e = exp_i_pi(re(mu));
    let i = ComplexValue::i();
    let bracket = (1.0 + e) * c + i * (1.0 - e) * s;
    let pre = exp_i_pi(re(mu / 2.0)) / (2.0 * gamma_real(mu + 1.0)?);
    Ok(pre * bracket * x.powf(-mu))
}

/// `e^{i pi mu} sum_i M_i (z0 - r_i)^{-mu}`.
pub fn polynomial_root_side(p: &PolynomialSpec, z0: ComplexValue, mu: ComplexValue) -> Result<ComplexValue> {
    let mut acc = ComplexValue::new(0.0, 0.0);
    for r in p.roots() {
        let w = z0 - r.location;
        if w == re(0.0) {
            return Err(RootIdError::Domain(format!("z0 = {z0} coincides with a root")));
        }
        acc += r.multiplicity as f64 * cpow_principal(w, -mu)?;
    }
    Ok(exp_i_pi(mu) * acc)
}

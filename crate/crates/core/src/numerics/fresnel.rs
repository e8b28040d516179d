use std::f64::consts::PI;

use super::gamma_real;
use crate::error::{Result, RootIdError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FresnelKind {
    Sin,
    Cos,
}

/// Closed form of the generalised Fresnel integrals
/// `int_0^inf sin(x^a) dx = Gamma(1/a) sin(pi / 2a) / a` and its cosine partner.
pub fn fresnel_closed(a: f64, kind: FresnelKind) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(RootIdError::Domain(format!("Fresnel exponent must be positive, got {a}")));
    }
    let g = gamma_real(1.0 / a).map_err(|_| {
        RootIdError::Range(format!(
            "Gamma(1/a) overflows for a = {a:e}; exponents below {:e} are unsupported",
            1.0 / 171.6
        ))
    })?;
    let arg = PI / (2.0 * a);
    let trig = match kind {
        FresnelKind::Sin => arg.sin(),
        FresnelKind::Cos => arg.cos(),
    };
    Ok(g * trig / a)
}

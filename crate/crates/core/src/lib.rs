//! Both sides of the generalised root identities
//!
//! ```text
//! d(z0, mu) = -1/Gamma(mu) (d/dz)^mu ln f |_{z0}   =   e^{i pi mu} sum_i M_i (z0 - r_i)^{-mu} = r(z0, mu)
//! ```
//!
//! evaluated for `f(z) = z`, polynomials, `Gamma(z + 1)` and `zeta(s)` at real,
//! mostly non-integer `mu`. Divergent root sums are handled by subtracting
//! their Euler-Maclaurin or Riemann-von Mangoldt divergent parts and, for
//! `-1 < mu < 0`, by windowed averaging of the residual partial sums.
//!
//! Modules:
//! - [`numerics`]: principal-branch powers, complex gamma, Bernoulli numbers, Fresnel integrals
//! - [`identity`]: closed forms for `f(z) = z` and polynomials
//! - [`gamma_identity`]: root and derivative sides for `Gamma(z + 1)`
//! - [`zeta`]: prime-sum derivative side and the trivial/pole/nontrivial root side for `zeta`
//! - [`data`]: prime sieve, zero-table loading, CSV reports

pub mod data;
pub mod error;
pub mod euler_maclaurin;
pub mod gamma_identity;
pub mod identity;
pub mod numerics;
pub mod summation;
pub mod zeta;

pub use error::{Result, RootIdError};
pub use numerics::ComplexValue;

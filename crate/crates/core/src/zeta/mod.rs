//! Root identities for `zeta(s)` at real `s0 > 1`-ish points.
//!
//! The root side splits into trivial zeros at `-2j`, the pole at 1 and the
//! nontrivial zeros `1/2 +- i gamma`; the derivative side comes from the Euler
//! product.

mod counting;
mod deriv;
mod nontrivial;
mod trivial;

pub use counting::{counting_check, windowed_mean_s, CountingCheck};
pub use deriv::{zeta_deriv_side, DerivValue};
pub use nontrivial::{
    conjecture_eval, nt_divergent_piece, nt_expansion_terms, nt_residual, nt_root_side, nt_tail_estimate,
    nt_tilde, residual_flatness, ConjectureRecord, FlatnessFit, NTExpansionTerms,
};
pub use trivial::{pole_side, trivial_root_side};

use crate::data::{PrimeTable, ZeroTable};
use crate::error::{Result, RootIdError};
use crate::gamma_identity::EMTruncation;
use crate::numerics::ComplexValue;

/// Smallest `|mu|` accepted on the root side.
pub const MU_ZERO_GUARD: f64 = 1e-6;
/// Half-width of the excluded band around `mu = 1`.
pub const MU_ONE_GUARD: f64 = 1e-3;
/// Trivial zeros summed by default.
pub const DEFAULT_TRIVIAL_ROOTS: usize = 2_000_000;
/// Inner prime-power cutoff by default.
pub const DEFAULT_K_INNER: usize = 10;

/// A point `(s0, mu)` with `Re(s0) > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityPoint {
    pub s0: ComplexValue,
    pub mu: f64,
}

impl IdentityPoint {
    pub fn new(s0: ComplexValue, mu: f64) -> Result<Self> {
        if !(s0.re > 1.0) || !s0.im.is_finite() || !s0.re.is_finite() {
            return Err(RootIdError::Domain(format!("Re(s0) must exceed 1, got s0 = {s0}")));
        }
        if !mu.is_finite() {
            return Err(RootIdError::Domain(format!("mu = {mu}")));
        }
        Ok(Self { s0, mu })
    }

    pub fn real(s0: f64, mu: f64) -> Result<Self> {
        Self::new(ComplexValue::new(s0, 0.0), mu)
    }

    /// Rejects `mu` where the root side is not evaluated.
    pub fn check_root_regime(&self) -> Result<()> {
        let mu = self.mu;
        if mu == 1.0 {
            return Err(RootIdError::RenormalisationRequired);
        }
        if (mu - 1.0).abs() < MU_ONE_GUARD {
            return Err(RootIdError::Regime(format!("mu = {mu} within {MU_ONE_GUARD} of 1")));
        }
        if mu.abs() < MU_ZERO_GUARD {
            return Err(RootIdError::Regime(format!("|mu| = {} below {MU_ZERO_GUARD}", mu.abs())));
        }
        if mu <= -1.0 {
            return Err(RootIdError::Regime(format!("mu = {mu}: zeta root side is evaluated only for mu > -1")));
        }
        Ok(())
    }
}

/// Which half of the nontrivial zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `gamma > 0`.
    Plus,
    /// `gamma < 0`; the conjugate of [`Branch::Plus`] when `s0` is real.
    Minus,
    /// `gamma < 0` summed term by term even for real `s0`.
    MinusDirect,
}

/// Window over which the nontrivial residual is averaged for `-1 < mu < 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CesaroConfig {
    /// 1-based index `N` of the zero where the window opens.
    pub window_start_index: usize,
    /// Number of gaps `M`; the window is `[gamma_N, gamma_{N+M}]`.
    pub window_length: usize,
    pub subintervals_per_gap: usize,
    /// Distance kept from each zero, in units of `T`.
    pub jump_offset: f64,
}

impl Default for CesaroConfig {
    fn default() -> Self {
        Self { window_start_index: 1_000_000, window_length: 10_000, subintervals_per_gap: 5, jump_offset: 1e-9 }
    }
}

impl CesaroConfig {
    pub fn validate(&self, zeros: &ZeroTable) -> Result<()> {
        if self.window_start_index == 0 || self.window_length == 0 || self.subintervals_per_gap == 0 {
            return Err(RootIdError::Config(format!("window parameters must be positive: {self:?}")));
        }
        let end = self.window_start_index + self.window_length;
        if end > zeros.len() {
            return Err(RootIdError::Range(format!(
                "window ends at zero #{end}, table holds {}",
                zeros.len()
            )));
        }
        let g = &zeros.ordinates()[self.window_start_index - 1..end];
        let min_gap = g.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if !(self.jump_offset > 0.0) || self.jump_offset >= min_gap / 10.0 {
            return Err(RootIdError::Config(format!(
                "jump offset {} must lie in (0, {:e}) for this window",
                self.jump_offset,
                min_gap / 10.0
            )));
        }
        Ok(())
    }
}

/// Components of both sides at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideBreakdown {
    pub r_t: ComplexValue,
    pub r_p: ComplexValue,
    pub r_nt_plus: ComplexValue,
    pub r_nt_minus: ComplexValue,
    pub r_total: ComplexValue,
    pub d_total: ComplexValue,
    /// Truncation bound of `d_total`.
    pub d_bound: f64,
    /// Tail estimate of the nontrivial sum past the last zero (`mu > 1` only, else 0).
    pub nt_tail: f64,
}

/// `r_zeta = r_T + r_P + r_NT+ + r_NT-` next to `d_zeta`.
pub fn zeta_root_side(
    pt: IdentityPoint,
    zeros: &ZeroTable,
    primes: &PrimeTable,
    k_inner: usize,
    cfg: Option<&CesaroConfig>,
    trunc: EMTruncation,
) -> Result<SideBreakdown> {
    pt.check_root_regime()?;
    let r_t = trivial_root_side(pt, trunc)?;
    let r_p = pole_side(pt)?;
    let r_nt_plus = nt_root_side(pt, zeros, cfg, Branch::Plus)?;
    let r_nt_minus = nt_root_side(pt, zeros, cfg, Branch::Minus)?;
    let d = zeta_deriv_side(pt, primes, k_inner)?;
    let nt_tail = if pt.mu > 1.0 { nt_tail_estimate(pt, zeros.last())? } else { 0.0 };
    Ok(SideBreakdown {
        r_t,
        r_p,
        r_nt_plus,
        r_nt_minus,
        r_total: r_t + r_p + r_nt_plus + r_nt_minus,
        d_total: d.value,
        d_bound: d.trunc_bound,
        nt_tail,
    })
}

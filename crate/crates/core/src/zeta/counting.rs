use std::f64::consts::PI;

use crate::data::ZeroTable;
use crate::error::{Result, RootIdError};

/// Zero count against the smooth Riemann-von Mangoldt main term at height `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountingCheck {
    pub n_data: usize,
    pub n_smooth: f64,
    /// `n_data - n_smooth`, an estimate of `S(T)`.
    pub s_estimate: f64,
}

/// `(T/2pi) ln(T/2pi) - T/2pi + 7/8`
pub fn n_check(t: f64) -> f64 {
    let u = t / (2.0 * PI);
    u * u.ln() - u + 0.875
}

/// `1/(48T) + 7/(5760T^3) + 31/(80640T^5)`
pub fn delta_series(t: f64) -> f64 {
    let r = 1.0 / t;
    let r2 = r * r;
    r * (1.0 / 48.0 + r2 * (7.0 / 5760.0 + r2 * 31.0 / 80640.0))
}

fn n_smooth(t: f64) -> f64 {
    n_check(t) + delta_series(t) / PI
}

// antiderivative of n_smooth
fn n_smooth_integral(t: f64) -> f64 {
    let u = t / (2.0 * PI);
    let main = 2.0 * PI * (0.5 * u * u * u.ln() - 0.75 * u * u + 0.875 * u);
    let r2 = 1.0 / (t * t);
    let delta = t.ln() / 48.0 - r2 * (7.0 / 11520.0 + r2 * 31.0 / 322560.0);
    main + delta / PI
}

pub fn counting_check(zeros: &ZeroTable, t: f64) -> Result<CountingCheck> {
    if !(t > 0.0) || t > zeros.last() {
        return Err(RootIdError::Range(format!("T = {t} outside (0, {}]", zeros.last())));
    }
    let n_data = zeros.count_up_to(t);
    let n_smooth = n_smooth(t);
    Ok(CountingCheck { n_data, n_smooth, s_estimate: n_data as f64 - n_smooth })
}

/// Mean of `N(T) - n_smooth(T)` over `[gamma_from, gamma_to]` (1-based indices),
/// integrated exactly between zeros.
pub fn windowed_mean_s(zeros: &ZeroTable, from: usize, to: usize) -> Result<f64> {
    if from == 0 || to <= from || to > zeros.len() {
        return Err(RootIdError::Range(format!(
            "window [{from}, {to}] invalid for {} zeros",
            zeros.len()
        )));
    }
    let g = zeros.ordinates();
    // N = n on (gamma_n, gamma_{n+1})
    let mut stepped = 0.0;
    for n in from..to {
        stepped += n as f64 * (g[n] - g[n - 1]);
    }
    let (a, b) = (g[from - 1], g[to - 1]);
    let smooth = n_smooth_integral(b) - n_smooth_integral(a);
    Ok((stepped - smooth) / (b - a))
}

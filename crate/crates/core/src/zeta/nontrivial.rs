use std::f64::consts::PI;

use super::{Branch, CesaroConfig, IdentityPoint};
use crate::data::ZeroTable;
use crate::error::{Result, RootIdError};
use crate::numerics::{cpow_nonzero, exp_i_pi, re, ComplexValue};
use crate::summation::{sum_indexed, ComplexSum};

fn term(s0: ComplexValue, mu: f64, gamma: f64, plus: bool) -> ComplexValue {
    let w = if plus { s0 - ComplexValue::new(0.5, gamma) } else { s0 - ComplexValue::new(0.5, -gamma) };
    cpow_nonzero(w, re(-mu))
}

/// `sum_{i < n} (s0 - 1/2 -+ i gamma_i)^{-mu}` over the first `n` zeros.
fn zero_sum(pt: IdentityPoint, g: &[f64], n: usize, plus: bool) -> ComplexValue {
    sum_indexed(0..n, |i| term(pt.s0, pt.mu, g[i], plus))
}

fn check_window(mu: f64) -> Result<()> {
    if mu == 0.0 || mu.abs() < super::MU_ZERO_GUARD {
        return Err(RootIdError::Regime(format!("mu = {mu}: divergent piece is singular at 0")));
    }
    if !(mu > -1.0 && mu < 1.0) {
        return Err(RootIdError::Regime(format!("divergent piece defined for -1 < mu < 1, got {mu}")));
    }
    Ok(())
}

/// Divergent part of the nontrivial partial sums up to height `T`.
pub fn nt_divergent_piece(pt: IdentityPoint, t: f64, branch: Branch) -> Result<ComplexValue> {
    let mu = pt.mu;
    check_window(mu)?;
    if !(t >= 2.0 * PI) {
        return Err(RootIdError::Domain(format!("T = {t} below 2 pi")));
    }
    let u = t / (2.0 * PI);
    let ln_u = u.ln();
    let u_neg = u.powf(-mu);
    let two_pi_neg = (2.0 * PI).powf(-mu);
    let (phase, i) = match branch {
        Branch::Plus => (exp_i_pi(re(mu / 2.0)), ComplexValue::i()),
        Branch::Minus | Branch::MinusDirect => (exp_i_pi(re(-mu / 2.0)), -ComplexValue::i()),
    };
    let a = two_pi_neg * u * u_neg * (ln_u / (1.0 - mu) - 1.0 / ((1.0 - mu) * (1.0 - mu)));
    let b = two_pi_neg / (2.0 * PI) * u_neg * (ln_u + 1.0 / mu);
    Ok(phase * (a + i * (pt.s0 - 0.5) * b))
}

/// `sum_{gamma_i < T} (s0 - rho_i)^{-mu} - divgt(T)` on one branch.
pub fn nt_residual(pt: IdentityPoint, zeros: &ZeroTable, t: f64, branch: Branch) -> Result<ComplexValue> {
    if t > zeros.last() {
        return Err(RootIdError::Range(format!("T = {t} beyond the last loaded zero {}", zeros.last())));
    }
    if branch == Branch::Minus && pt.s0.im == 0.0 {
        return Ok(nt_residual(pt, zeros, t, Branch::Plus)?.conj());
    }
    let div = nt_divergent_piece(pt, t, branch)?;
    let g = zeros.ordinates();
    let n = g.partition_point(|&x| x < t);
    Ok(zero_sum(pt, g, n, branch == Branch::Plus) - div)
}

/// `r_NT+-` = `e^{i pi mu}` times [`nt_tilde`].
pub fn nt_root_side(
    pt: IdentityPoint,
    zeros: &ZeroTable,
    cfg: Option<&CesaroConfig>,
    branch: Branch,
) -> Result<ComplexValue> {
    Ok(exp_i_pi(re(pt.mu)) * nt_tilde(pt, zeros, cfg, branch)?)
}

/// The regularised nontrivial sum on one branch, before the `e^{i pi mu}` factor.
///
/// - `mu > 1`: the plain sum over all loaded zeros.
/// - `0 < mu < 1`: the residual at the last zero, taking half its jump.
/// - `-1 < mu < 0`: the trapezoidal mean of the residual over the window in `cfg`.
pub fn nt_tilde(
    pt: IdentityPoint,
    zeros: &ZeroTable,
    cfg: Option<&CesaroConfig>,
    branch: Branch,
) -> Result<ComplexValue> {
    pt.check_root_regime()?;
    if branch == Branch::Minus && pt.s0.im == 0.0 {
        return Ok(nt_tilde(pt, zeros, cfg, Branch::Plus)?.conj());
    }
    let plus = branch == Branch::Plus;
    let g = zeros.ordinates();
    let mu = pt.mu;
    if mu > 1.0 {
        return Ok(zero_sum(pt, g, g.len(), plus));
    }
    if mu > 0.0 {
        let n = g.len();
        let t = g[n - 1];
        let s = zero_sum(pt, g, n - 1, plus) + 0.5 * term(pt.s0, mu, t, plus);
        return Ok(s - nt_divergent_piece(pt, t, branch)?);
    }
    let cfg = cfg.ok_or_else(|| RootIdError::Config(format!("mu = {mu} < 0 needs an averaging window")))?;
    window_mean(pt, zeros, cfg, branch)
}

fn window_mean(pt: IdentityPoint, zeros: &ZeroTable, cfg: &CesaroConfig, branch: Branch) -> Result<ComplexValue> {
    cfg.validate(zeros)?;
    let plus = branch == Branch::Plus;
    let g = zeros.ordinates();
    let first = cfg.window_start_index; // gap n runs from gamma_n to gamma_{n+1}
    let gaps = cfg.window_length;
    // partial sums P_n, n = first .. first + gaps - 1
    let mut acc = ComplexSum::default();
    acc.add(zero_sum(pt, g, first, plus));
    let mut partial = Vec::with_capacity(gaps);
    partial.push(acc.value());
    for n in first + 1..first + gaps {
        acc.add(term(pt.s0, pt.mu, g[n - 1], plus));
        partial.push(acc.value());
    }
    let sub = cfg.subintervals_per_gap;
    let off = cfg.jump_offset;
    if g[first - 1] < 2.0 * PI {
        return Err(RootIdError::Domain("window starts below 2 pi".into()));
    }
    let div = |t: f64| nt_divergent_piece(pt, t, branch).expect("window lies above 2 pi");
    let integral = sum_indexed(0..gaps, |k| {
        let n = first + k;
        let a = g[n - 1] + off;
        let b = g[n] - off;
        let h = (b - a) / sub as f64;
        let mut s = ComplexSum::default();
        for j in 0..=sub {
            let w = if j == 0 || j == sub { 0.5 } else { 1.0 };
            s.add(w * (partial[k] - div(a + j as f64 * h)));
        }
        s.value() * h
    });
    let len = g[first + gaps - 1] - g[first - 1];
    Ok(integral / len)
}

/// Smooth count of what the nontrivial sum on one branch misses past `T`
/// for `mu > 1`: `(1/2pi) T^{1-mu} [ln(T/2pi)/(mu-1) + 1/(mu-1)^2]`, doubled for both branches.
pub fn nt_tail_estimate(pt: IdentityPoint, t: f64) -> Result<f64> {
    let mu = pt.mu;
    if !(mu > 1.0) {
        return Err(RootIdError::Regime(format!("tail estimate needs mu > 1, got {mu}")));
    }
    let m = mu - 1.0;
    let per_branch = t.powf(-m) * ((t / (2.0 * PI)).ln() / m + 1.0 / (m * m)) / (2.0 * PI);
    Ok(2.0 * per_branch)
}

/// Slopes of sub-window means of the residual against window centre, with their
/// standard errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatnessFit {
    pub slope: ComplexValue,
    pub std_err: ComplexValue,
    pub means: [ComplexValue; 5],
}

impl FlatnessFit {
    /// Both slopes within 10 standard errors of zero.
    pub fn is_flat(&self) -> bool {
        self.slope.re.abs() < 10.0 * self.std_err.re && self.slope.im.abs() < 10.0 * self.std_err.im
    }
}

/// Splits the window of `cfg` into five equal parts, averages the residual over
/// each and fits a line through the five means.
pub fn residual_flatness(
    pt: IdentityPoint,
    zeros: &ZeroTable,
    cfg: &CesaroConfig,
    branch: Branch,
) -> Result<FlatnessFit> {
    pt.check_root_regime()?;
    let part = cfg.window_length / 5;
    if part == 0 {
        return Err(RootIdError::Config("window too short to split in five".into()));
    }
    let g = zeros.ordinates();
    let mut xs = [0.0; 5];
    let mut means = [re(0.0); 5];
    for k in 0..5 {
        let sub = CesaroConfig { window_start_index: cfg.window_start_index + k * part, window_length: part, ..*cfg };
        means[k] = window_mean(pt, zeros, &sub, branch)?;
        xs[k] = 0.5 * (g[sub.window_start_index - 1] + g[sub.window_start_index + part - 1]);
    }
    let fit = |ys: [f64; 5]| {
        let xm = xs.iter().sum::<f64>() / 5.0;
        let ym = ys.iter().sum::<f64>() / 5.0;
        let sxx: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xm) * (y - ym)).sum();
        let slope = sxy / sxx;
        let rss: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - ym - slope * (x - xm)).powi(2)).sum();
        (slope, (rss / 3.0 / sxx).sqrt())
    };
    let (sr, er) = fit(means.map(|m| m.re));
    let (si, ei) = fit(means.map(|m| m.im));
    Ok(FlatnessFit { slope: ComplexValue::new(sr, si), std_err: ComplexValue::new(er, ei), means })
}

/// Power sums `sum gamma_i^{-mu-l}`, `l = 0..3`, over the loaded zeros.
///
/// Sums weighted by the off-line displacements of the zeros are never formed: the
/// table holds ordinates only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NTExpansionTerms {
    pub gamma_power_sums: [f64; 4],
    pub epsilon_terms_omitted: bool,
}

pub fn nt_expansion_terms(zeros: &ZeroTable, mu: f64) -> NTExpansionTerms {
    let g = zeros.ordinates();
    let mut sums = [0.0; 4];
    for (l, s) in sums.iter_mut().enumerate() {
        *s = sum_indexed(0..g.len(), |i| re(g[i].powf(-mu - l as f64))).re;
    }
    NTExpansionTerms { gamma_power_sums: sums, epsilon_terms_omitted: true }
}

/// Averaged plus-branch value against the small-`mu` prediction
/// `(s0/4 + 3/4) - i (s0 - 1/2) / (2 pi mu)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjectureRecord {
    pub re_actual: f64,
    pub re_predicted: f64,
    pub im_actual: f64,
    pub im_predicted_leading: f64,
    /// `im_actual - im_predicted_leading`, the fitted constant beyond leading order.
    pub im_offset: f64,
}

pub fn conjecture_eval(pt: IdentityPoint, zeros: &ZeroTable, cfg: &CesaroConfig) -> Result<ConjectureRecord> {
    if !(pt.mu < 0.0) {
        return Err(RootIdError::Regime(format!("conjecture concerns mu -> 0 from below, got {}", pt.mu)));
    }
    if pt.s0.im != 0.0 {
        return Err(RootIdError::Domain(format!("conjecture is stated for real s0, got {}", pt.s0)));
    }
    let s0 = pt.s0.re;
    let r = nt_tilde(pt, zeros, Some(cfg), Branch::Plus)?;
    let re_predicted = 0.25 * s0 + 0.75;
    let im_predicted_leading = -(s0 - 0.5) / (2.0 * PI * pt.mu);
    Ok(ConjectureRecord {
        re_actual: r.re,
        re_predicted,
        im_actual: r.im,
        im_predicted_leading,
        im_offset: r.im - im_predicted_leading,
    })
}

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use rootid::data::{
    fmt_g12, load_primes, load_zeros, load_zeros_cached, render_report, sieve_primes, PrimeTable, ReportRow, ZeroTable,
};
use rootid::gamma_identity::{gamma_deriv_side, gamma_root_side, EMTruncation};
use rootid::numerics::re;
use rootid::summation::with_workers;
use rootid::zeta::{conjecture_eval, zeta_root_side, CesaroConfig, IdentityPoint};
use rootid::RootIdError;
use serde_json::{json, Value};

use crate::mu::MuList;
use crate::{ConjectureArgs, GammaArgs, Output, WindowArgs, ZeroArgs, ZetaArgs};

pub const CONJECTURE_HEADER: &str = "s0,mu,re_actual,re_predicted,im_actual,im_predicted_leading,im_offset";

#[derive(Debug)]
pub struct Failure(String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<RootIdError> for Failure {
    fn from(e: RootIdError) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Whether every row is within tolerance.
pub type Outcome = Result<bool, Failure>;

/// Errors that mark a point as outside the evaluated windows rather than broken input.
fn is_guard(e: &RootIdError) -> bool {
    matches!(e, RootIdError::Regime(_) | RootIdError::RenormalisationRequired | RootIdError::Pole(_))
}

struct Check {
    mu: f64,
    diff: f64,
    tol: f64,
}

#[derive(Default)]
struct Sweep {
    checks: Vec<Check>,
    excluded: Vec<(f64, String)>,
}

impl Sweep {
    /// Runs `f` on one point, skipping guarded points that came from a range.
    fn point<T>(&mut self, mu: f64, explicit: bool, f: impl FnOnce() -> rootid::Result<T>) -> Result<Option<T>, Failure> {
        match f() {
            Ok(v) => Ok(Some(v)),
            Err(e) if !explicit && is_guard(&e) => {
                eprintln!("rootid: excluded mu = {}: {e}", fmt_g12(mu));
                self.excluded.push((mu, e.to_string()));
                Ok(None)
            }
            Err(e) => Err(Failure(format!("mu = {}: {e}", fmt_g12(mu)))),
        }
    }

    fn check(&mut self, mu: f64, diff: f64, tol: f64) {
        self.checks.push(Check { mu, diff, tol });
    }

    fn within(&self) -> bool {
        self.checks.iter().all(|c| c.diff <= c.tol)
    }

    fn meta(&mut self, command: &str, config: Value, inputs: Value) -> Value {
        self.checks.sort_by(|a, b| a.mu.total_cmp(&b.mu));
        let rows: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "mu": c.mu, "abs_diff": c.diff, "tolerance": c.tol, "within": c.diff <= c.tol }))
            .collect();
        let excluded: Vec<Value> = self.excluded.iter().map(|(mu, why)| json!({ "mu": mu, "reason": why })).collect();
        json!({
            "command": command,
            "version": env!("CARGO_PKG_VERSION"),
            "config": config,
            "inputs": inputs,
            "excluded": excluded,
            "rows": rows,
            "within_tolerance": self.within(),
        })
    }
}

fn mu_values(mu: &MuList) -> Vec<f64> {
    mu.0.iter().map(|p| p.mu).collect()
}

fn meta_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".meta");
    PathBuf::from(s)
}

fn emit(output: &Output, csv: &str, meta: &Value) -> Result<(), Failure> {
    match &output.out {
        Some(path) => {
            fs::write(path, csv)?;
            let mut text = serde_json::to_string_pretty(meta).expect("json values serialise");
            text.push('\n');
            fs::write(meta_path(path), text)?;
        }
        None => io::stdout().write_all(csv.as_bytes())?,
    }
    Ok(())
}

fn finish(output: &Output, csv: String, sweep: &Sweep, meta: Value) -> Outcome {
    emit(output, &csv, &meta)?;
    for c in sweep.checks.iter().filter(|c| c.diff > c.tol) {
        eprintln!("rootid: mu = {}: difference {:e} exceeds tolerance {:e}", fmt_g12(c.mu), c.diff, c.tol);
    }
    Ok(sweep.within())
}

fn run<T: Send>(workers: usize, f: impl FnOnce() -> Result<T, Failure> + Send) -> Result<T, Failure> {
    with_workers(workers, f)?
}

fn truncation(k: usize, mu: f64, plain: bool) -> EMTruncation {
    if plain {
        EMTruncation::plain(k, mu)
    } else {
        EMTruncation::for_mu(k, mu)
    }
}

fn empty(rows: &[ReportRow]) -> Result<(), Failure> {
    if rows.is_empty() {
        return Err(Failure("no mu values left to evaluate".into()));
    }
    Ok(())
}

pub fn gamma(a: &GammaArgs) -> Outcome {
    let z0 = re(a.z0);
    let (rows, mut sweep) = run(a.output.workers, || {
        let mut sweep = Sweep::default();
        let mut rows = Vec::new();
        for p in &a.mu.0 {
            let Some(r) = sweep.point(p.mu, p.explicit, || gamma_root_side(z0, p.mu, truncation(a.k, p.mu, a.plain_tail)))?
            else {
                continue;
            };
            let d = gamma_deriv_side(z0, p.mu, a.order).map_err(|e| Failure(format!("mu = {}: {e}", fmt_g12(p.mu))))?;
            let zero = re(0.0);
            rows.push(ReportRow {
                s0: a.z0,
                mu: p.mu,
                d: d.value,
                r,
                r_t: zero,
                r_p: zero,
                r_ntp: zero,
                r_ntm: zero,
                trunc_bound: d.error_estimate,
            });
            sweep.check(p.mu, (d.value - r).norm(), a.tol.max(3.0 * d.error_estimate));
        }
        Ok((rows, sweep))
    })?;
    empty(&rows)?;
    let config = json!({
        "z0": a.z0,
        "mu": mu_values(&a.mu),
        "k_max": a.k,
        "order": a.order,
        "accelerated_tail": !a.plain_tail,
        "tolerance_floor": a.tol,
    });
    let meta = sweep.meta("gamma", config, json!({}));
    finish(&a.output, render_report(&rows), &sweep, meta)
}

fn load_table(z: &ZeroArgs) -> Result<ZeroTable, Failure> {
    let max = z.max_zeros.unwrap_or(usize::MAX);
    let t = match &z.cache_dir {
        Some(dir) => load_zeros_cached(&z.zeros, max, dir)?,
        None => load_zeros(&z.zeros, max)?,
    };
    Ok(t)
}

fn zeros_meta(z: &ZeroArgs, t: &ZeroTable) -> Value {
    json!({
        "path": z.zeros.display().to_string(),
        "sha256": t.source_digest(),
        "count": t.len(),
        "last": t.last(),
    })
}

fn window(w: &WindowArgs) -> CesaroConfig {
    CesaroConfig {
        window_start_index: w.window_start,
        window_length: w.window_len,
        subintervals_per_gap: w.subintervals,
        jump_offset: w.offset,
    }
}

fn window_meta(w: &WindowArgs) -> Value {
    json!({
        "start_index": w.window_start,
        "length": w.window_len,
        "subintervals_per_gap": w.subintervals,
        "jump_offset": w.offset,
    })
}

pub fn zeta(a: &ZetaArgs) -> Outcome {
    // domain of s0 first, before any file is read
    IdentityPoint::real(a.s0, 0.0)?;
    let zeros = load_table(&a.zeros)?;
    let primes: PrimeTable = match &a.primes_file {
        Some(p) => load_primes(p)?,
        None => sieve_primes(a.primes)?,
    };
    let cfg = window(&a.window);
    let (rows, mut sweep) = run(a.output.workers, || {
        let mut sweep = Sweep::default();
        let mut rows = Vec::new();
        for p in &a.mu.0 {
            let pt = IdentityPoint::real(a.s0, p.mu)?;
            let trunc = truncation(a.trivial_roots, p.mu, a.plain_tail);
            let Some(b) = sweep.point(p.mu, p.explicit, || {
                zeta_root_side(pt, &zeros, &primes, a.kmax_inner, Some(&cfg), trunc)
            })?
            else {
                continue;
            };
            let bound = b.d_bound + b.nt_tail;
            rows.push(ReportRow {
                s0: a.s0,
                mu: p.mu,
                d: b.d_total,
                r: b.r_total,
                r_t: b.r_t,
                r_p: b.r_p,
                r_ntp: b.r_nt_plus,
                r_ntm: b.r_nt_minus,
                trunc_bound: bound,
            });
            sweep.check(p.mu, (b.d_total - b.r_total).norm(), a.tol.max(bound));
        }
        Ok((rows, sweep))
    })?;
    empty(&rows)?;
    let primes_meta = match &a.primes_file {
        Some(p) => json!({ "path": p.display().to_string(), "count": primes.len(), "last": primes.last() }),
        None => json!({ "sieved": primes.len(), "last": primes.last() }),
    };
    let config = json!({
        "s0": a.s0,
        "mu": mu_values(&a.mu),
        "kmax_inner": a.kmax_inner,
        "trivial_roots": a.trivial_roots,
        "accelerated_tail": !a.plain_tail,
        "window": window_meta(&a.window),
        "tolerance_floor": a.tol,
    });
    let inputs = json!({ "zeros": zeros_meta(&a.zeros, &zeros), "primes": primes_meta });
    let meta = sweep.meta("zeta", config, inputs);
    finish(&a.output, render_report(&rows), &sweep, meta)
}

pub fn conjecture(a: &ConjectureArgs) -> Outcome {
    IdentityPoint::real(a.s0, 0.0)?;
    if let Some(p) = a.mu.0.iter().find(|p| p.explicit && !(p.mu < 0.0)) {
        return Err(Failure(format!("mu = {}: the conjecture is about mu -> 0 from below", fmt_g12(p.mu))));
    }
    let zeros = load_table(&a.zeros)?;
    let cfg = window(&a.window);
    let (mut records, mut sweep) = run(a.output.workers, || {
        let mut sweep = Sweep::default();
        let mut records = Vec::new();
        for p in &a.mu.0 {
            let pt = IdentityPoint::real(a.s0, p.mu)?;
            let Some(c) = sweep.point(p.mu, p.explicit, || conjecture_eval(pt, &zeros, &cfg))? else {
                continue;
            };
            let re_off = ((c.re_actual - c.re_predicted) / c.re_predicted).abs();
            let im_off = (c.im_offset / c.im_predicted_leading).abs();
            sweep.check(p.mu, re_off.max(im_off), a.rel_tol);
            records.push((p.mu, c));
        }
        Ok((records, sweep))
    })?;
    if records.is_empty() {
        return Err(Failure("no mu values left to evaluate".into()));
    }
    records.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut csv = String::from(CONJECTURE_HEADER);
    csv.push('\n');
    for (mu, c) in &records {
        let cells = [a.s0, *mu, c.re_actual, c.re_predicted, c.im_actual, c.im_predicted_leading, c.im_offset];
        let cells: Vec<String> = cells.iter().map(|&v| fmt_g12(v)).collect();
        csv.push_str(&cells.join(","));
        csv.push('\n');
    }
    let config = json!({
        "s0": a.s0,
        "mu": mu_values(&a.mu),
        "window": window_meta(&a.window),
        "relative_tolerance": a.rel_tol,
    });
    let inputs = json!({ "zeros": zeros_meta(&a.zeros, &zeros) });
    let meta = sweep.meta("conjecture", config, inputs);
    finish(&a.output, csv, &sweep, meta)
}

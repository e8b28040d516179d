//! Generates tables of nontrivial zeta zero ordinates for test fixtures.
//!
//! Zeros are isolated with Gram blocks: a Gram point `g_n` solves
//! `theta(g_n) = n pi` and is *good* when `(-1)^n Z(g_n) > 0`. Between two
//! consecutive good Gram points `g_a < g_b` Rosser's rule places exactly
//! `b - a` zeros, and the rule is known to hold far beyond the heights
//! produced here (its first failure is near the 13,999,826th Gram block).
//! Every block is sampled on a grid that is refined until the expected number
//! of sign changes of `Z` shows up, then each bracket is polished.
//!
//! The output format matches the published plain-text zero tables: one
//! ordinate per line, ascending, nine decimals.

pub mod riemann_siegel;

use std::f64::consts::PI;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use riemann_siegel::{hardy_z, theta, theta_prime};

/// Coarsest grid: subintervals per Gram interval.
const INITIAL_SUBDIVISION: usize = 4;
/// Finest grid tried before giving up on a block.
const MAX_SUBDIVISION: usize = 1 << 14;

#[derive(Debug)]
pub enum GenError {
    MissingZeros { block_start: f64, expected: usize, found: usize },
    Io(io::Error),
}

impl std::fmt::Display for GenError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenError::MissingZeros { block_start, expected, found } => write!(
                f,
                "Gram block at t={block_start}: expected {expected} zeros, found {found}"
            ),
            GenError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for GenError {}

impl From<io::Error> for GenError {
    fn from(e: io::Error) -> Self {
        GenError::Io(e)
    }
}

/// Solves `theta(t) = n pi` by Newton iteration.
pub fn gram_point(n: i64) -> f64 {
    let target = n as f64 * PI;
    // Leading order theta(t) = (t/2) ln(t / 2 pi e) - pi/8 inverts through
    // Lambert W: t = 2 pi e^{1 + W((8n + 1) / 8e)}.
    let mut t = if n < 0 {
        10.0
    } else {
        let x = (8.0 * n as f64 + 1.0) / (8.0 * std::f64::consts::E);
        let mut w = if x < 3.0 { x.ln_1p() } else { x.ln() - x.ln().ln() };
        for _ in 0..50 {
            let ew = w.exp();
            let step = (w * ew - x) / (ew * (w + 1.0));
            w -= step;
            if step.abs() < 1e-15 * w.abs().max(1.0) {
                break;
            }
        }
        2.0 * PI * (1.0 + w).exp()
    };
    for _ in 0..100 {
        let step = (theta(t) - target) / theta_prime(t);
        t -= step;
        if step.abs() < 1e-13 * t {
            break;
        }
    }
    t
}

fn refine(mut a: f64, mut fa: f64, mut b: f64, mut fb: f64) -> f64 {
    // Illinois variant of regula falsi.
    let mut side = 0i8;
    for _ in 0..200 {
        if (b - a).abs() < 1e-11 {
            break;
        }
        let c = (a * fb - b * fa) / (fb - fa);
        let fc = hardy_z(c);
        if fc == 0.0 {
            return c;
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        } else {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        }
    }
    0.5 * (a + b)
}

/// Zeros in `[start, end)` located by sampling at `subdivision` points per Gram
/// interval spanned by the block.
fn block_zeros(start: f64, z_start: f64, end: f64, gram_intervals: usize, subdivision: usize) -> Vec<f64> {
    let steps = gram_intervals * subdivision;
    let h = (end - start) / steps as f64;
    let mut zeros = Vec::new();
    let mut prev_t = start;
    let mut prev_z = z_start;
    for i in 1..=steps {
        let t = if i == steps { end } else { start + h * i as f64 };
        let z = hardy_z(t);
        if prev_z == 0.0 {
            zeros.push(prev_t);
        } else if z != 0.0 && z.signum() != prev_z.signum() {
            zeros.push(refine(prev_t, prev_z, t, z));
        }
        prev_t = t;
        prev_z = z;
    }
    zeros
}

/// The first `count` positive zero ordinates, ascending.
pub fn generate_zeros(count: usize) -> Result<Vec<f64>, GenError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    // N(T) ~ (T/2pi) ln(T/2pi e): enough Gram points to pass the count, with slack.
    let gram_count = count as i64 + 64 + count as i64 / 100;
    let points: Vec<(i64, f64, f64)> = (-1..gram_count)
        .into_par_iter()
        .map(|n| {
            let g = gram_point(n);
            (n, g, hardy_z(g))
        })
        .collect();
    let good: Vec<&(i64, f64, f64)> = points
        .iter()
        .filter(|(n, _, z)| {
            let parity = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            parity * z > 0.0
        })
        .collect();

    let blocks: Vec<Result<Vec<f64>, GenError>> = good
        .par_windows(2)
        .map(|w| {
            let (a, ga, za) = *w[0];
            let (b, gb, _) = *w[1];
            let expected = (b - a) as usize;
            let mut sub = INITIAL_SUBDIVISION;
            loop {
                let zeros = block_zeros(ga, za, gb, expected, sub);
                if zeros.len() == expected {
                    return Ok(zeros);
                }
                if sub >= MAX_SUBDIVISION || zeros.len() > expected {
                    return Err(GenError::MissingZeros { block_start: ga, expected, found: zeros.len() });
                }
                sub *= 4;
            }
        })
        .collect();

    let mut zeros = Vec::with_capacity(count + 64);
    for block in blocks {
        zeros.extend(block?);
        if zeros.len() >= count {
            break;
        }
    }
    if zeros.len() < count {
        return Err(GenError::MissingZeros { block_start: points.last().map(|p| p.1).unwrap_or(0.0), expected: count, found: zeros.len() });
    }
    zeros.truncate(count);
    Ok(zeros)
}

/// Writes one ordinate per line with nine decimals.
pub fn write_zero_file(path: &Path, zeros: &[f64]) -> io::Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    for z in zeros {
        writeln!(out, "{z:.9}")?;
    }
    out.flush()
}

/// Returns a path to a table holding at least `count` zeros.
///
/// `ROOTID_ZEROS` wins when it points at a file with enough lines; otherwise a
/// generated table is cached under `dir` and reused across runs.
pub fn ensure_zero_file(dir: &Path, count: usize) -> Result<PathBuf, GenError> {
    if let Ok(p) = std::env::var("ROOTID_ZEROS") {
        let p = PathBuf::from(p);
        if let Ok(text) = fs::read_to_string(&p) {
            let lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).count();
            if lines >= count {
                return Ok(p);
            }
        }
    }
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("zeros_{count}.txt"));
    if path.exists() {
        return Ok(path);
    }
    let zeros = generate_zeros(count)?;
    // Concurrent test binaries may race here; rename is atomic on one filesystem.
    let tmp = dir.join(format!("zeros_{count}.{}.tmp", std::process::id()));
    write_zero_file(&tmp, &zeros)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

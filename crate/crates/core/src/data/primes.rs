use std::fs;
use std::path::Path;

use crate::error::{Result, RootIdError};

/// Largest prime count [`sieve_primes`] will produce.
pub const MAX_PRIMES: usize = 100_000_000;

const SEGMENT: u64 = 1 << 18;

/// The first `n` primes in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    primes: Vec<u64>,
}

impl PrimeTable {
    fn checked(primes: Vec<u64>, source: &str) -> Result<Self> {
        if primes.is_empty() {
            return Err(RootIdError::Sanity(format!("{source}: no primes")));
        }
        for (want, &got) in [2u64, 3, 5].iter().zip(&primes) {
            if *want != got {
                return Err(RootIdError::Sanity(format!("{source}: table starts {got}, expected {want}")));
            }
        }
        if let Some(w) = primes.windows(2).position(|w| w[0] >= w[1]) {
            return Err(RootIdError::Sanity(format!("{source}: entry {} not ascending", w + 2)));
        }
        // spot check: ends, and ~64 entries spread through the table
        let step = (primes.len() / 64).max(1);
        for i in (0..primes.len()).step_by(step).chain([primes.len() - 1]) {
            if !is_prime(primes[i]) {
                return Err(RootIdError::Sanity(format!("{source}: entry {} = {} is composite", i + 1, primes[i])));
            }
        }
        Ok(Self { primes })
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn last(&self) -> u64 {
        *self.primes.last().expect("tables are nonempty")
    }

    /// The first `n` entries.
    pub fn prefix(&self, n: usize) -> Result<PrimeTable> {
        if n == 0 || n > self.primes.len() {
            return Err(RootIdError::Range(format!("prefix {n} of a {}-prime table", self.primes.len())));
        }
        Ok(PrimeTable { primes: self.primes[..n].to_vec() })
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    true
}

// p_n < n (ln n + ln ln n) for n >= 6
fn nth_prime_bound(n: usize) -> u64 {
    if n < 6 {
        return 13;
    }
    let x = n as f64;
    (x * (x.ln() + x.ln().ln())).ceil() as u64 + 1
}

fn small_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// First `n` primes via a segmented sieve of Eratosthenes.
pub fn sieve_primes(n: usize) -> Result<PrimeTable> {
    if n == 0 || n > MAX_PRIMES {
        return Err(RootIdError::Range(format!("prime count {n} outside 1..={MAX_PRIMES}")));
    }
    let limit = nth_prime_bound(n);
    let base = small_primes((limit as f64).sqrt() as u64 + 1);
    let mut primes = Vec::with_capacity(n);
    let mut marks = vec![false; SEGMENT as usize];
    let mut lo = 2u64;
    while primes.len() < n && lo <= limit {
        let hi = (lo + SEGMENT).min(limit + 1);
        marks[..(hi - lo) as usize].fill(false);
        for &p in &base {
            if p * p >= hi {
                break;
            }
            let mut m = (lo.div_ceil(p) * p).max(p * p);
            while m < hi {
                marks[(m - lo) as usize] = true;
                m += p;
            }
        }
        for (i, &c) in marks[..(hi - lo) as usize].iter().enumerate() {
            if !c {
                primes.push(lo + i as u64);
                if primes.len() == n {
                    break;
                }
            }
        }
        lo = hi;
    }
    PrimeTable::checked(primes, "sieve")
}

/// Whitespace-separated primes from a text file, for parity with published prime lists.
pub fn load_primes(path: &Path) -> Result<PrimeTable> {
    let text = fs::read_to_string(path)?;
    let mut primes = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        for tok in line.split_whitespace() {
            let p = tok.parse::<u64>().map_err(|e| RootIdError::Format {
                path: path.to_path_buf(),
                line: lineno + 1,
                message: format!("{tok:?}: {e}"),
            })?;
            primes.push(p);
        }
    }
    PrimeTable::checked(primes, &path.display().to_string())
}

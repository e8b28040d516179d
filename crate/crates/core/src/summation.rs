//! Compensated, deterministic summation.
//!
//! Long sums are cut into fixed-size chunks starting at the range origin. Each
//! chunk is summed with Neumaier compensation and the chunk partials are folded
//! in ascending chunk order, so the result does not depend on how many rayon
//! workers ran the chunks.

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Result, RootIdError};
use crate::numerics::ComplexValue;

/// Terms per parallel chunk. Part of the numerical contract: changing it
/// changes the low bits of every long sum.
pub const CHUNK_LEN: usize = 8192;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn merge(&mut self, other: &NeumaierSum) {
        self.add(other.sum);
        self.add(other.comp);
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Component-wise [`NeumaierSum`] for complex terms.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    #[inline]
    pub fn add(&mut self, v: ComplexValue) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    pub fn merge(&mut self, other: &ComplexSum) {
        self.re.merge(&other.re);
        self.im.merge(&other.im);
    }

    #[inline]
    pub fn value(&self) -> ComplexValue {
        ComplexValue::new(self.re.value(), self.im.value())
    }
}

/// `sum_{i in range} term(i)`, parallel over fixed chunks, reduced in chunk order.
pub fn sum_indexed<F>(range: Range<usize>, term: F) -> ComplexValue
where
    F: Fn(usize) -> ComplexValue + Sync,
{
    if range.is_empty() {
        return ComplexValue::new(0.0, 0.0);
    }
    let start = range.start;
    let len = range.end - start;
    let chunks = len.div_ceil(CHUNK_LEN);
    let partials: Vec<ComplexSum> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = start + c * CHUNK_LEN;
            let hi = (lo + CHUNK_LEN).min(range.end);
            let mut acc = ComplexSum::default();
            for i in lo..hi {
                acc.add(term(i));
            }
            acc
        })
        .collect();
    let mut total = ComplexSum::default();
    for p in &partials {
        total.merge(p);
    }
    total.value()
}

/// Runs `f` on a dedicated pool with `workers` threads.
pub fn with_workers<T, F>(workers: usize, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    if workers == 0 {
        return Err(RootIdError::Config("worker count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| RootIdError::Config(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(f))
}

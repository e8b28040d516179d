//! Inputs and outputs: primes, zero ordinates, CSV reports.

mod primes;
mod report;
mod zeros;

pub use primes::{load_primes, sieve_primes, PrimeTable, MAX_PRIMES};
pub use report::{fmt_g12, read_report, render_report, write_report, ReportRow, REPORT_HEADER};
pub use zeros::{load_zeros, load_zeros_cached, ZeroTable};

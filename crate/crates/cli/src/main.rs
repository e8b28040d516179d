//! `rootid`: sweeps of both sides of the root identities for Gamma and zeta.
//!
//! Exit status: 0 when every row is within tolerance, 1 on a tolerance breach,
//! 2 on usage, domain or input errors.

mod commands;
mod mu;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mu::{g12_float, parse_mu, MuList};

#[derive(Parser, Debug)]
#[command(name = "rootid", version, about = "Derivative side against root side for Gamma(z+1) and zeta(s)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// d_Gamma and r_Gamma over a list or range of mu.
    Gamma(GammaArgs),
    /// Full breakdown of the zeta root side next to d_zeta.
    Zeta(ZetaArgs),
    /// Averaged plus-branch sum against the small-mu prediction.
    Conjecture(ConjectureArgs),
}

#[derive(Args, Debug)]
pub struct Output {
    /// CSV destination; a `.meta` JSON file is written next to it. Stdout if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; results do not depend on this.
    #[arg(long, default_value_t = default_workers())]
    pub workers: usize,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct GammaArgs {
    #[arg(long, value_parser = g12_float)]
    pub z0: f64,
    /// Comma-separated values or start:stop:step ranges.
    #[arg(long, value_parser = parse_mu, allow_hyphen_values = true)]
    pub mu: MuList,
    /// Poles summed on the root side.
    #[arg(long, default_value_t = 100_000)]
    pub k: usize,
    /// Bernoulli terms in the derivative-side expansion.
    #[arg(long, default_value_t = rootid::gamma_identity::DEFAULT_ORDER)]
    pub order: usize,
    /// Subtract only the divergent tail pieces.
    #[arg(long)]
    pub plain_tail: bool,
    /// Floor of the per-row tolerance; the row bound is three times the first omitted term.
    #[arg(long, default_value_t = 1e-6, value_parser = g12_float)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct ZeroArgs {
    /// Zero ordinates, one per line.
    #[arg(long, env = "ROOTID_ZEROS")]
    pub zeros: PathBuf,
    /// Use only the first this many zeros.
    #[arg(long)]
    pub max_zeros: Option<usize>,
    /// Keep a binary copy of parsed zero files here.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct WindowArgs {
    /// 1-based index of the zero opening the averaging window (mu < 0).
    #[arg(long, default_value_t = 1_000_000)]
    pub window_start: usize,
    /// Zero gaps in the window.
    #[arg(long, default_value_t = 10_000)]
    pub window_len: usize,
    /// Trapezoid panels per gap.
    #[arg(long, default_value_t = 5)]
    pub subintervals: usize,
    /// Distance kept from each zero.
    #[arg(long, default_value_t = 1e-9, value_parser = g12_float)]
    pub offset: f64,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct ZetaArgs {
    #[arg(long, value_parser = g12_float)]
    pub s0: f64,
    #[arg(long, value_parser = parse_mu, allow_hyphen_values = true)]
    pub mu: MuList,
    #[command(flatten)]
    pub zeros: ZeroArgs,
    /// Number of primes sieved for the derivative side.
    #[arg(long, default_value_t = 10_000, conflicts_with = "primes_file")]
    pub primes: usize,
    /// Read primes from a file instead of sieving.
    #[arg(long)]
    pub primes_file: Option<PathBuf>,
    /// Prime powers kept per prime.
    #[arg(long, default_value_t = rootid::zeta::DEFAULT_K_INNER)]
    pub kmax_inner: usize,
    /// Trivial zeros summed.
    #[arg(long, default_value_t = rootid::zeta::DEFAULT_TRIVIAL_ROOTS)]
    pub trivial_roots: usize,
    /// Subtract only the divergent tail pieces of the trivial sum.
    #[arg(long)]
    pub plain_tail: bool,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Floor of the per-row tolerance; the row bound is the reported truncation bound.
    #[arg(long, default_value_t = 1e-6, value_parser = g12_float)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct ConjectureArgs {
    #[arg(long, value_parser = g12_float)]
    pub s0: f64,
    #[arg(long, value_parser = parse_mu, allow_hyphen_values = true)]
    pub mu: MuList,
    #[command(flatten)]
    pub zeros: ZeroArgs,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Allowed relative distance from the predicted real part and leading imaginary part.
    #[arg(long, default_value_t = 0.02, value_parser = g12_float)]
    pub rel_tol: f64,
    #[command(flatten)]
    pub output: Output,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gamma(a) => commands::gamma(a),
        Command::Zeta(a) => commands::zeta(a),
        Command::Conjecture(a) => commands::conjecture(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rootid: {e}");
            ExitCode::from(2)
        }
    }
}

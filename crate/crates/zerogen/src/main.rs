use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

/// Writes the first N nontrivial zeta zero ordinates, one per line.
#[derive(Parser)]
#[command(name = "zerogen", version)]
struct Args {
    /// Number of zeros to generate.
    #[arg(long, default_value_t = 100_000)]
    count: usize,
    /// Output file.
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let zeros = match zerogen::generate_zeros(args.count) {
        Ok(z) => z,
        Err(e) => {
            eprintln!("zerogen: {e}");
            return ExitCode::FAILURE;
        }
    };
    if let Err(e) = zerogen::write_zero_file(&args.out, &zeros) {
        eprintln!("zerogen: {e}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}

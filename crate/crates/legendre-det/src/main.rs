//! Thin command-line front end over the library: `compute` for a single
//! determinant, `verify` for a range scan, `primes` for listing. Exit code 0
//! means every checked case passed (or was not applicable), 1 means at least
//! one counterexample, 2 means the invocation itself was bad.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use legendre_det::scan::{
    csv_header, encode_csv_line, encode_json_line, format_human, parse_bc_grid, parse_claim_list,
    run_scan_with, ScanConfig,
};
use legendre_det::{dp_det, dp_symbol, primes_in_range, Fp};

#[derive(Parser)]
#[command(name = "legendre-det", version, about = "Determinant congruence checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    #[value(name = "json-lines")]
    JsonLines,
    Csv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Compute D_p(b,c) and its Legendre symbol at one prime.
    Compute {
        #[arg(short = 'p', long = "prime")]
        p: u64,
        #[arg(short, long, allow_hyphen_values = true)]
        b: i64,
        #[arg(short, long, allow_hyphen_values = true)]
        c: i64,
    },
    /// Check claims over a prime range and report per-case records.
    Verify {
        /// "all" or a comma-separated list of claim names.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 3)]
        pmin: u64,
        #[arg(long)]
        pmax: u64,
        /// "default" or semicolon-separated pairs like "1,1;2,-3".
        #[arg(long = "bc-grid", default_value = "default")]
        bc_grid: String,
        /// Worker threads; defaults to LEGENDRE_DET_WORKERS, then the
        /// available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// List the primes in [pmin, pmax], one per line.
    Primes { pmin: u64, pmax: u64 },
}

const PRIMES_BOUND: u64 = 1_000_000;

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_workers(flag: Option<usize>) -> Result<usize, String> {
    if let Some(n) = flag {
        if n == 0 {
            return Err("--workers must be at least 1".to_string());
        }
        return Ok(n);
    }
    match std::env::var("LEGENDRE_DET_WORKERS") {
        Ok(s) => {
            let n: usize = s
                .trim()
                .parse()
                .map_err(|_| format!("LEGENDRE_DET_WORKERS is not a number: {s}"))?;
            if n == 0 {
                return Err("LEGENDRE_DET_WORKERS must be at least 1".to_string());
            }
            Ok(n)
        }
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

fn run_compute(p: u64, b: i64, c: i64) -> ExitCode {
    let field = match Fp::new(p) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let start = Instant::now();
    let det = dp_det(field, b, c);
    let sym = dp_symbol(field, b, c);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    println!("D_{p}({b},{c}) = {det} (mod {p})");
    println!("symbol = {sym}");
    println!("elapsed_ms = {ms:.3}");
    ExitCode::SUCCESS
}

fn run_verify(
    claims: &str,
    pmin: u64,
    pmax: u64,
    bc_grid: &str,
    workers: Option<usize>,
    format: Format,
) -> ExitCode {
    let claims = match parse_claim_list(claims) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    let bc_grid = match parse_bc_grid(bc_grid) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let workers = match resolve_workers(workers) {
        Ok(n) => n,
        Err(e) => return usage_error(&e),
    };
    if pmin > pmax {
        return usage_error(&format!("empty range: pmin {pmin} > pmax {pmax}"));
    }
    let config = ScanConfig { pmin, pmax, claims, bc_grid, workers };

    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    if let Format::Csv = format {
        writeln!(out, "{}", csv_header()).expect("stdout");
    }
    let result = run_scan_with(&config, |rec| {
        let line = match format {
            Format::JsonLines => encode_json_line(rec),
            Format::Csv => encode_csv_line(rec),
            Format::Human => format_human(rec),
        };
        writeln!(out, "{line}").expect("stdout");
    });
    let summary = match result {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    out.flush().expect("stdout");
    // Keep machine formats clean on stdout; totals go to stderr there.
    match format {
        Format::Human => print!("{}", summary.human()),
        _ => eprint!("{}", summary.human()),
    }
    if summary.failures() > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_primes(pmin: u64, pmax: u64) -> ExitCode {
    if pmax > PRIMES_BOUND {
        return usage_error(&format!("pmax {pmax} exceeds the bound {PRIMES_BOUND}"));
    }
    match primes_in_range(pmin, pmax) {
        Ok(primes) => {
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            for p in primes {
                writeln!(out, "{p}").expect("stdout");
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute { p, b, c } => run_compute(p, b, c),
        Command::Verify { claims, pmin, pmax, bc_grid, workers, format } => {
            run_verify(&claims, pmin, pmax, &bc_grid, workers, format)
        }
        Command::Primes { pmin, pmax } => run_primes(pmin, pmax),
    }
}

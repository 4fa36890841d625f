//! `liecheck` — batch runner for exact check suites over small Lie algebras.
//!
//! Runs one named suite against one catalog algebra (or an algebra file) and
//! emits a deterministic report. Exit status: 0 when no check failed, 1 when
//! some check failed, 2 on usage or schema errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use liecheck_core::catalog::CATALOG_NAMES;
use liecheck_core::suites::{run_suite, SuiteConfig, SuiteKind};

#[derive(Parser)]
#[command(
    name = "liecheck",
    version,
    about = "Exact checks for adjoint vector fields, covariant kernels and \
             determinantal conditions on small Lie algebras",
    after_help = format!(
        "Suites: wonderful, dixmier, kernel, fitting, symmetric-pair, moment.\n\
         Catalog algebras: {}.\n\
         --algebra also accepts a path to an algebra JSON file\n\
         ({{name, dim, structure_constants: [[i,j,k,num,den],...], grading?}}).",
        CATALOG_NAMES.join(", ")
    )
)]
struct Args {
    /// Catalog algebra name or path to an algebra file.
    #[arg(long)]
    algebra: String,

    /// Check suite to run.
    #[arg(long)]
    suite: String,

    /// Degree cap for kernel and decomposition searches.
    #[arg(long, default_value_t = 4)]
    max_degree: usize,

    /// Seed for all sampled points; recorded in the report.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Optional orbit-data JSON file.
    #[arg(long)]
    orbit_data: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format: json (the contract) or text (human summary).
    #[arg(long, default_value = "json")]
    format: String,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let suite: SuiteKind = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("liecheck: {e}");
            return ExitCode::from(2);
        }
    };
    if args.format != "json" && args.format != "text" {
        eprintln!("liecheck: unknown format '{}' (expected json or text)", args.format);
        return ExitCode::from(2);
    }
    let cfg = SuiteConfig {
        algebra: args.algebra,
        suite,
        max_degree: args.max_degree,
        seed: args.seed,
        orbit_data: args.orbit_data,
    };
    let report = match run_suite(&cfg) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("liecheck: {e}");
            return ExitCode::from(2);
        }
    };
    let bytes = if args.format == "json" {
        match report.to_json_bytes() {
            Ok(b) => b,
            Err(e) => {
                eprintln!("liecheck: {e}");
                return ExitCode::from(2);
            }
        }
    } else {
        report.to_text().into_bytes()
    };
    let write_result = match &args.out {
        Some(path) => std::fs::write(path, &bytes),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&bytes)
        }
    };
    if let Err(e) = write_result {
        eprintln!("liecheck: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(u8::try_from(report.exit_code()).unwrap_or(1))
}

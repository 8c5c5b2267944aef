use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twistlab::suites::{emit_report, run_suites, Format, Options, SuiteError};

#[derive(Parser)]
#[command(name = "twistlab", version, about = "Exact checks for quantisation by cochain twists")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one or more verification suites (`all` runs every suite).
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
        /// ℏ-order of truncation.
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Degree bound for monomial grids.
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Catalogue name or path to a definition file.
        #[arg(long)]
        algebra: Option<String>,
        /// Single α value, e.g. -1/4.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Fmt::Text)]
        format: Fmt,
        /// Report wall-clock times (otherwise written as 0 so output is reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Text,
    Json,
}

fn main() -> ExitCode {
    let Cmd::Verify { suites, order, max_degree, algebra, alpha, seed, jobs, format, timings } = Cli::parse().cmd;
    let opts = || -> Result<Options, SuiteError> {
        let mut o = Options { order, max_degree, seed, jobs, ..Options::default() };
        if let Some(a) = &algebra {
            o = o.with_algebra(a)?;
        }
        if let Some(a) = &alpha {
            o = o.with_alpha(a)?;
        }
        o.validate()?;
        Ok(o)
    };
    let names: Vec<&str> = suites.iter().map(String::as_str).collect();
    let results = match opts().and_then(|o| run_suites(&names, &o)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let format = match format {
        Fmt::Text => Format::Text,
        Fmt::Json => Format::Json,
    };
    print!("{}", emit_report(&results, format, timings));
    if results.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

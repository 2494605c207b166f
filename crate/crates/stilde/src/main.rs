use clap::error::ErrorKind;
use clap::Parser;
use std::path::PathBuf;
use std::process::ExitCode;
use stilde::cli::{self, Command, RunConfig};
use stilde::report::ReportFormat;

/// Numerical verification of hyperbolic-type metric inequalities.
#[derive(Parser, Debug)]
#[command(name = "stilde", version, about)]
struct Args {
    /// One of: eval, verify-axioms, verify-sharpness, verify-bounds, balls,
    /// mobius, hausdorff, dilatation
    command: String,

    /// Domain description file (JSON)
    #[arg(long)]
    domain: Option<PathBuf>,

    /// Metric constant c (the metric regime is c >= 2)
    #[arg(long, default_value_t = 2.0)]
    c: f64,

    /// Seed for every random sweep; echoed into the report header
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Sample count for the sweeps
    #[arg(long, default_value_t = 1000)]
    samples: usize,

    /// First point, comma-separated coordinates (eval, hausdorff)
    #[arg(long)]
    x: Option<String>,

    /// Second point, comma-separated coordinates (eval, hausdorff)
    #[arg(long)]
    y: Option<String>,

    /// Report file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format: csv or json
    #[arg(long, default_value = "csv")]
    format: String,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(args: Args) -> stilde::Result<ExitCode> {
    let command: Command = args.command.parse()?;
    let format: ReportFormat = args.format.parse().map_err(stilde::Error::Config)?;
    let config = RunConfig {
        command,
        domain: args.domain.as_deref().map(cli::load_domain).transpose()?,
        c: args.c,
        seed: args.seed,
        samples: args.samples,
        x: args.x.as_deref().map(cli::parse_point_arg).transpose()?,
        y: args.y.as_deref().map(cli::parse_point_arg).transpose()?,
        format,
    };
    let outcome = cli::run(&config)?;
    let rendered = outcome.rendered();
    match &args.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    for witness in &outcome.violations {
        println!("{}", witness.to_json());
    }
    Ok(ExitCode::from(outcome.exit_code() as u8))
}

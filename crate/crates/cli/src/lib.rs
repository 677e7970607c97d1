//! Command-line front end for [`halfshift`].
//!
//! The binary is a thin wrapper around [`run`]; every subcommand builds an
//! [`output::Report`] that is written as CSV or JSON.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod output;
pub mod verify;

use args::{Cli, Command, OutputArgs, VerifyArgs};
use config::RunConfig;
use error::{CliResult, Status};
use output::{emit, Destination, Format, Report};

/// Run a parsed command line and return the exit status.
pub fn run(cli: Cli) -> CliResult<Status> {
    let (report, output) = match &cli.command {
        Command::Dpss(a) => (commands::dpss(a)?, &a.output),
        Command::Shift(a) => (commands::shift(a)?, &a.output),
        Command::Tail(a) => (commands::tail(a)?, &a.output),
        Command::Bound(a) => (commands::bound(a)?, &a.output),
        Command::Equality(a) => (commands::equality(a)?, &a.output),
        Command::Concentration(a) => (commands::concentration(a)?, &a.output),
        Command::Basis(a) => (commands::basis(a)?, &a.output),
        Command::Random(a) => (commands::random(a)?, &a.output),
        Command::Verify(a) => return run_verify(a),
    };
    write(&report, output, Format::Csv)?;
    Ok(Status::Success)
}

fn write(report: &Report, output: &OutputArgs, default: Format) -> CliResult<()> {
    let format = output.format.unwrap_or(default);
    let dest = Destination::resolve(output.out.as_deref(), report.command, format);
    emit(report, format, &dest)?;
    Ok(())
}

/// Merge the config file (if any) with command-line overrides.
pub fn verify_config(args: &VerifyArgs) -> CliResult<RunConfig> {
    let mut config = match &args.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(n) = &args.n {
        config.n_list = n.clone();
    }
    if let Some(w) = &args.half_bandwidth {
        config.w_list = w.clone();
    }
    if args.tol.is_some() {
        config.tol = args.tol;
    }
    if let Some(c) = args.cases {
        config.cases = c;
    }
    if let Some(s) = args.search_samples {
        config.search_samples = s;
    }
    if let Some(f) = args.output.format {
        config.output_format = f;
    }
    if let Some(p) = &args.output.out {
        config.output_path = Some(p.clone());
    }
    config.validate()?;
    Ok(config)
}

fn run_verify(args: &VerifyArgs) -> CliResult<Status> {
    let config = verify_config(args)?;
    let suites = verify::select(&args.only)?;
    let outcome = verify::run(&config, &suites)?;
    let report = outcome.report(&config, &suites);
    let dest = Destination::resolve(config.output_path.as_deref(), "verify", config.output_format);
    emit(&report, config.output_format, &dest)?;
    if outcome.passed() {
        return Ok(Status::Success);
    }
    for row in outcome.failures() {
        eprintln!(
            "FAILED {}/{} n={} W={} residual={:e} tolerance={:e}",
            row.check,
            row.metric,
            row.n.map_or("-".into(), |n| n.to_string()),
            row.half_bandwidth.map_or("-".into(), |w| w.to_string()),
            row.residual,
            row.tolerance.unwrap_or(f64::NAN),
        );
    }
    Ok(Status::Failure)
}

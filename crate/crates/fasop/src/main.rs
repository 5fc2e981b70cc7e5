//! `fasop` — outage-probability sweeps for fluid antenna systems.
//!
//! Exit codes: 0 ok, 2 bad arguments, 3 numerical failure,
//! 4 validation gate failure.

use clap::{Parser, Subcommand};
use fasop::cli::{
    run_curve, run_severity, run_sweep_ports, run_sweep_threshold, run_table, run_validate,
    CurveArgs, SeverityArgs, SweepPortsArgs, SweepThresholdArgs, TableArgs, ValidateArgs,
};
use fasop::FasError;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fasop", version, about = "Outage probability of N-port fluid antenna systems over correlated Nakagami-m fading")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// OP vs average SNR at fixed geometry
    Curve(CurveArgs),
    /// OP vs number of ports for several antenna sizes
    SweepPorts(SweepPortsArgs),
    /// OP vs outage threshold for several port counts
    SweepThreshold(SweepThresholdArgs),
    /// OP vs number of ports for several fading severities
    Severity(SeverityArgs),
    /// Timing and NMSE comparison of the three analytical methods
    Table(TableArgs),
    /// Cross-method consistency gates (exit 4 on failure)
    Validate(ValidateArgs),
}

fn open_out(path: &Option<std::path::PathBuf>) -> std::io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<u8, FasError> = (|| {
        match &cli.command {
            Command::Curve(a) => run_curve(a, &mut *open_out(&a.output.out).map_err(io_err)?)?,
            Command::SweepPorts(a) => run_sweep_ports(a, &mut *open_out(&a.output.out).map_err(io_err)?)?,
            Command::SweepThreshold(a) => {
                run_sweep_threshold(a, &mut *open_out(&a.output.out).map_err(io_err)?)?
            }
            Command::Severity(a) => run_severity(a, &mut *open_out(&a.output.out).map_err(io_err)?)?,
            Command::Table(a) => {
                run_table(a, &mut *open_out(&a.output.out).map_err(io_err)?)?;
            }
            Command::Validate(a) => {
                let report = run_validate(a, &mut *open_out(&a.output.out).map_err(io_err)?)?;
                if !report.passed {
                    return Ok(4);
                }
            }
        }
        Ok(0)
    })();

    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                FasError::Domain(_) | FasError::InvalidSpec(_) | FasError::GridMismatch(_) => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(3),
            }
        }
    }
}

fn io_err(e: std::io::Error) -> FasError {
    FasError::InvalidSpec(format!("cannot open output: {e}"))
}

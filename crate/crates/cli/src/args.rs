use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::compare::run_compare;
use crate::error::{CliError, Result};
use crate::exponent::{parse_window, render_fit, run_exponent};
use crate::scenarios::{render_examples, run_examples};
use crate::sweep::{run_sweep, write_rows, Format, Quantity, Size, SweepConfig};

#[derive(Debug, Parser)]
#[command(
    name = "genent",
    version,
    about = "Generalized entanglement in the anisotropic XY chain"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate observables over a uniform coupling grid.
    Sweep(SweepArgs),
    /// Check exact diagonalization against the free-fermion solution.
    Compare(CompareArgs),
    /// Evaluate the canonical two-qubit and spin-1 scenarios.
    Examples,
    /// Fit the critical exponent of the shifted purity.
    Exponent(ExponentArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub gamma: f64,
    #[arg(long)]
    pub g_min: f64,
    #[arg(long)]
    pub g_max: f64,
    #[arg(long)]
    pub steps: usize,
    /// `inf` for the thermodynamic limit, or an even chain length.
    #[arg(long)]
    pub size: Size,
    #[arg(long, value_delimiter = ',', required = true)]
    pub quantities: Vec<Quantity>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub gamma: f64,
    #[arg(long)]
    pub g: f64,
}

#[derive(Debug, Args)]
pub struct ExponentArgs {
    #[arg(long)]
    pub gamma: f64,
    /// Coupling window `lo,hi`, strictly below the critical point.
    #[arg(long, value_parser = parse_window)]
    pub window: (f64, f64),
    #[arg(long, default_value_t = 50)]
    pub points: usize,
}

/// Run a parsed command, writing reports to `stdout`.
pub fn dispatch(cli: Cli, stdout: &mut impl Write) -> Result<()> {
    match cli.command {
        Command::Sweep(a) => {
            let cfg = SweepConfig {
                gamma: a.gamma,
                g_min: a.g_min,
                g_max: a.g_max,
                steps: a.steps,
                size: a.size,
                quantities: a.quantities,
            };
            let rows = run_sweep(&cfg)?;
            let mut buf = Vec::new();
            write_rows(&mut buf, &cfg, &rows, a.format)?;
            match a.out {
                Some(path) => std::fs::write(path, buf)?,
                None => stdout.write_all(&buf)?,
            }
        }
        Command::Compare(a) => {
            let report = run_compare(a.n, a.gamma, a.g)?;
            stdout.write_all(report.render().as_bytes())?;
            if !report.passed() {
                return Err(CliError::Contract(format!(
                    "max deviation {:e} exceeds tolerance",
                    report.max_deviation
                )));
            }
        }
        Command::Examples => {
            let results = run_examples()?;
            stdout.write_all(render_examples(&results).as_bytes())?;
            let failed = results.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(CliError::Contract(format!(
                    "{failed} scenario(s) off their expected purity"
                )));
            }
        }
        Command::Exponent(a) => {
            let fit = run_exponent(a.gamma, a.window, a.points)?;
            stdout.write_all(render_fit(a.gamma, a.window, &fit).as_bytes())?;
        }
    }
    Ok(())
}

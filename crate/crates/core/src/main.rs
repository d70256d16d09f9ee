use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use moment_bounds::fixtures::FIXTURES;
use moment_bounds::io;
use moment_bounds::report::{
    fixture_report, matrix_report, poly_report, render_json, render_text, sample_report,
    MatrixOptions, Precision, Report,
};
use moment_bounds::sample::SupportInterval;
use moment_bounds::trace::DensityFunctional;

/// Moment, eigenvalue and polynomial-root bounds with soundness checks.
///
/// Exit status: 0 when every checked bound holds, 2 when a bound is
/// violated, 1 on input errors.
#[derive(Parser)]
#[command(name = "moment-bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print numbers with 4 decimals for direct comparison with published tables.
    #[arg(long, global = true)]
    paper_mode: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Moment inequalities for a weighted sample (JSON or CSV).
    Moments {
        path: PathBuf,
        /// Support interval [m, M]; defaults to the sample's own range.
        #[arg(long, num_args = 2, value_names = ["M_LOW", "M_HIGH"], allow_negative_numbers = true)]
        interval: Option<Vec<f64>>,
    },
    /// Trace-based eigenvalue, spread and condition bounds.
    Matrix {
        path: PathBuf,
        /// Check bounds against Jacobi eigenvalues (Hermitian input only).
        #[arg(long)]
        with_oracle: bool,
        /// Density matrix W of the functional phi(A) = tr(W A).
        #[arg(long, value_name = "PATH")]
        functional: Option<PathBuf>,
    },
    /// Root and span bounds for a monic polynomial.
    Poly { path: PathBuf },
    /// Run every bundled fixture.
    Suite,
}

fn run(cli: &Cli) -> Result<Vec<Report>> {
    Ok(match &cli.command {
        Command::Moments { path, interval } => {
            let sample = io::read_sample(path)?;
            let interval = match interval.as_deref() {
                Some(&[m, big_m]) => Some(SupportInterval::new(m, big_m)?),
                _ => None,
            };
            vec![sample_report(&sample, interval)?.with_source(path.display().to_string())]
        }
        Command::Matrix {
            path,
            with_oracle,
            functional,
        } => {
            let input = io::parse_matrix_input(&io::read_to_string(path)?)?;
            let functional = match functional {
                Some(p) => {
                    let w = io::parse_matrix_json(&io::read_to_string(p)?)?;
                    Some(DensityFunctional::new(w).context("functional weight")?)
                }
                None => None,
            };
            let opts = MatrixOptions {
                with_oracle: *with_oracle,
                functional,
            };
            vec![matrix_report(&input, &opts)?.with_source(path.display().to_string())]
        }
        Command::Poly { path } => {
            let input = io::parse_poly_json(&io::read_to_string(path)?)?;
            vec![poly_report(&input)?.with_source(path.display().to_string())]
        }
        Command::Suite => FIXTURES
            .iter()
            .map(|f| fixture_report(f).with_context(|| f.name))
            .collect::<Result<_>>()?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reports = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    if cli.json {
        if let [single] = reports.as_slice() {
            print!("{}", render_json(single));
        } else {
            print!("{}", render_json(&reports));
        }
    } else {
        let precision = if cli.paper_mode {
            Precision::Decimals(4)
        } else {
            Precision::Significant(6)
        };
        let text: Vec<String> = reports.iter().map(|r| render_text(r, precision)).collect();
        print!("{}", text.join("\n"));
    }
    let code = reports.iter().map(Report::exit_code).max().unwrap_or(0);
    ExitCode::from(code as u8)
}

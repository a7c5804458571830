//! Command-line front end for `pagefold`: solve for optimal folds, export
//! curves as CSV, draw folds as SVG and run the verification checks.

pub mod curve;
pub mod error;
pub mod format;
pub mod report;
pub mod svg;
pub mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use pagefold::geometry::{FoldCase, FoldParams, PageSpec};
use pagefold::optimize::critical_aspect;

use crate::curve::{build_curve, CurveKind, CurveParams};
use crate::error::CliError;
use crate::verify::{format_table, outcome, run_checks, Formulas, Level};

#[derive(Debug, Parser)]
#[command(
    name = "pagefold",
    version,
    about = "Optimal single fold of a bound page"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Eb,
    Transition,
    Phase,
    Summary,
}

impl From<KindArg> for CurveKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Eb => CurveKind::Eb,
            KindArg::Transition => CurveKind::Transition,
            KindArg::Phase => CurveKind::Phase,
            KindArg::Summary => CurveKind::Summary,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LevelArg {
    Fast,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Best fold for a page of the given aspect ratio.
    Solve {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        aspect: f64,
        /// Keep the folded page below the top edge.
        #[arg(long)]
        constrained: bool,
        /// Also run the brute-force grid oracle.
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, default_value_t = 500)]
        oracle_n: usize,
        /// Print JSON instead of key/value text.
        #[arg(long)]
        json: bool,
    },
    /// Write sampled curve data as CSV.
    Curve {
        kind: KindArg,
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Aspect ratios for `transition`.
        #[arg(long, value_delimiter = ',', default_value = "1.05,1.15,1.2,1.35")]
        aspects: Vec<f64>,
        /// Aspect-ratio range for `phase`.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, default_value_t = 1.5, allow_negative_numbers = true)]
        to: f64,
        /// Fixed `a` values for `summary`.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.2,0.4,0.5437,0.6,0.8,1"
        )]
        a_values: Vec<f64>,
        /// Restrict `summary` to folds below the top edge.
        #[arg(long)]
        constrained: bool,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a single fold as SVG.
    Render {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        aspect: f64,
        #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=2))]
        case: u8,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reproduce the reference values and print a pass/fail table.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
    },
    /// Print the critical aspect ratio of the constrained problem.
    Critical {
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::InvalidArgs(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| CliError::Internal(format!("stdout: {e}"))),
    }
}

/// Execute one parsed command, writing results to standard output or the
/// requested file.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            aspect,
            constrained,
            with_oracle,
            oracle_n,
            json,
        } => {
            let report = report::solve(aspect, constrained, with_oracle.then_some(oracle_n))?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
        }
        Command::Curve {
            kind,
            samples,
            aspects,
            from,
            to,
            a_values,
            constrained,
            out,
        } => {
            let params = CurveParams {
                samples,
                aspects,
                from,
                to,
                a_values,
                constrained,
            };
            let file = build_curve(kind.into(), &params)?;
            write_output(out.as_deref(), &file.to_csv())?;
        }
        Command::Render {
            aspect,
            case,
            a,
            b,
            out,
        } => {
            let case = if case == 1 {
                FoldCase::Case1
            } else {
                FoldCase::Case2
            };
            let rendering = svg::render(PageSpec::new(aspect)?, FoldParams::new(case, a, b))?;
            write_output(Some(&out), &rendering.to_svg())?;
        }
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let results = run_checks(level, &Formulas::default());
            print!("{}", format_table(&results));
            outcome(&results)?;
        }
        Command::Critical { tol } => {
            println!("{:.6}", critical_aspect(tol)?);
        }
    }
    Ok(())
}

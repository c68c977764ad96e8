//! `inellipse`: classify quadrilaterals, build inscribed ellipses, find the
//! least eccentric one, and check the diagonal characterizations.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 unreadable input,
//! 3 non-convex input, 4 parameter out of range, 5 unwritable output.

mod input;
mod number;
mod report;
mod svg;
mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use inellipse_core::{equal_conjugate_diameters, inscribe, min_ecc, verify_t3, Error, InscribedEllipse, CLASSIFY_TOL};
use serde::Serialize;
use thiserror::Error as ThisError;

use input::read_document;
use report::{ConjugateBlock, EllipseBlock, MinEccBlock, ReportDocument};
use verify::Theorem;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("cannot read input: {0}")]
    Parse(String),
    #[error("{0}")]
    NonConvex(String),
    #[error("{0}")]
    ParamRange(String),
    #[error("cannot write output: {0}")]
    Unwritable(String),
    #[error(transparent)]
    Core(Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(_) => 1,
            CliError::Parse(_) => 2,
            CliError::NonConvex(_) => 3,
            CliError::ParamRange(_) => 4,
            CliError::Unwritable(_) => 5,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvexInput | Error::DuplicateVertex => CliError::NonConvex(e.to_string()),
            Error::NonFinite => CliError::Parse(e.to_string()),
            Error::ParamOutOfRegion { .. } => CliError::ParamRange(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "inellipse", version, about = "Ellipses inscribed in convex quadrilaterals")]
struct Cli {
    /// Tolerance for classification and verification checks.
    #[arg(long, global = true, value_parser = parse_tol)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the quadrilateral.
    Classify {
        /// JSON quadrilateral document; standard input when omitted or `-`.
        input: Option<PathBuf>,
    },
    /// The inscribed ellipse touching the first side at fraction R.
    Inscribe {
        input: Option<PathBuf>,
        /// Number in (0, 1), a fraction like `3/7`, or `r_star`.
        #[arg(long, value_parser = parse_param)]
        param: Param,
    },
    /// The inscribed ellipse of minimal eccentricity.
    MinEcc { input: Option<PathBuf> },
    /// Check a diagonal characterization over random family members.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw the quadrilateral and the requested inscribed ellipses as SVG.
    Plot {
        input: Option<PathBuf>,
        /// Comma-separated parameters, each as accepted by `inscribe --param`.
        /// Empty draws the quadrilateral alone.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A family parameter, or the one of the least eccentric ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Param {
    Value(f64),
    RStar,
}

fn parse_param(text: &str) -> Result<Param, String> {
    let text = text.trim();
    if text == "r_star" {
        return Ok(Param::RStar);
    }
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|e| format!("{text}: {e}"))?;
            let den: f64 = den.trim().parse().map_err(|e| format!("{text}: {e}"))?;
            num / den
        }
        None => text.parse().map_err(|e| format!("{text}: {e}"))?,
    };
    if value.is_finite() {
        Ok(Param::Value(value))
    } else {
        Err(format!("{text} is not a finite number"))
    }
}

fn parse_param_list(text: &str) -> Result<Vec<Param>, String> {
    text.split(',').filter(|t| !t.trim().is_empty()).map(parse_param).collect()
}

fn parse_tol(text: &str) -> Result<f64, String> {
    match text.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(format!("{text} is not a positive tolerance")),
    }
}

fn resolve(q: &inellipse_core::Quadrilateral, param: Param) -> Result<InscribedEllipse, CliError> {
    match param {
        Param::Value(r) => Ok(inscribe(q, r)?),
        Param::RStar => Ok(min_ecc(q)?.ellipse),
    }
}

#[derive(Serialize)]
struct PlotSummary {
    out: PathBuf,
    ellipses: Vec<EllipseBlock>,
}

/// Reports hold finite floats and string keys only, so writing them out
/// cannot fail.
fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(number::to_json(value).expect("report serializes"))
}

fn run(cli: Cli) -> Result<String, CliError> {
    let tol = cli.tol.unwrap_or(CLASSIFY_TOL);
    match cli.command {
        Command::Classify { input } => {
            let doc = read_document(input.as_deref())?;
            let q = doc.quad()?;
            json(&ReportDocument::new(doc.label, &q, tol))
        }
        Command::Inscribe { input, param } => {
            let doc = read_document(input.as_deref())?;
            let q = doc.quad()?;
            let mut report = ReportDocument::new(doc.label, &q, tol);
            report.ellipse = Some(EllipseBlock::new(&resolve(&q, param)?)?);
            json(&report)
        }
        Command::MinEcc { input } => {
            let doc = read_document(input.as_deref())?;
            let q = doc.quad()?;
            let mut report = ReportDocument::new(doc.label, &q, tol);
            let res = min_ecc(&q)?;
            report.ellipse = Some(EllipseBlock::new(&res.ellipse)?);
            report.min_ecc = Some(MinEccBlock::from(&res));
            if q.classify(CLASSIFY_TOL).is_mdq() {
                report.t3 = Some(verify_t3(&q, tol)?);
            }
            report.equal_conjugate_diameters = ConjugateBlock::new(&q, &res.ellipse);
            json(&report)
        }
        Command::Verify { input, theorem, trials, seed } => {
            let doc = read_document(input.as_deref())?;
            let q = doc.quad()?;
            let mut report = ReportDocument::new(doc.label, &q, tol);
            report.verification = Some(verify::run(&q, theorem, trials, seed, tol)?);
            json(&report)
        }
        Command::Plot { input, params, out } => {
            let doc = read_document(input.as_deref())?;
            let q = doc.quad()?;
            let params = parse_param_list(&params).map_err(CliError::Parse)?;
            let ellipses = params.iter().map(|&p| resolve(&q, p)).collect::<Result<Vec<_>, _>>()?;
            let conjugate_diameters = if q.classify(tol).is_mdq() {
                equal_conjugate_diameters(&min_ecc(&q)?.ellipse.conic)
                    .ok()
                    .map(|pair| [pair.endpoints1, pair.endpoints2])
            } else {
                None
            };
            let figure =
                svg::Figure { quad: &q, ellipses: &ellipses, conjugate_diameters, title: doc.label.as_deref() };
            write_file(&out, &figure.render())?;
            let blocks = ellipses.iter().map(EllipseBlock::new).collect::<Result<Vec<_>, _>>()?;
            json(&PlotSummary { out, ellipses: blocks })
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Unwritable(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

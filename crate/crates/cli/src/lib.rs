//! Command-line front end for `quartic-core`.

pub mod args;
mod commands;
pub mod report;
mod verify;

use std::time::{SystemTime, UNIX_EPOCH};

pub use args::Cli;
pub use commands::parse_scalar;
pub use report::{Check, ReportValue, RunReport, TableRow, SCHEMA_VERSION};

use args::Command;

/// Why a command could not produce a passing report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
    /// The computation ran but did not succeed; the partial report is kept.
    Runtime {
        message: String,
        report: Option<Box<RunReport>>,
    },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Domain(_) => 2,
            Failure::Runtime { .. } => 1,
        }
    }

    /// Attaches the diagnostic trace of a divergence to the command's report.
    pub(crate) fn from_core(err: quartic_core::Error, report: &RunReport) -> Failure {
        match err {
            quartic_core::Error::Divergence {
                iterations,
                last_error,
                ref trace,
            } => {
                let mut report = report.clone();
                report.trace = Some(quartic_core::numeric::ConvergenceReport {
                    iterations,
                    error_trace: trace.clone(),
                    estimated_order: None,
                    final_value: f64::NAN,
                    converged: false,
                    warnings: vec![format!("last error {last_error:e}")],
                });
                Failure::Runtime {
                    message: err.to_string(),
                    report: Some(Box::new(report)),
                }
            }
            other => other.into(),
        }
    }
}

impl From<quartic_core::Error> for Failure {
    fn from(err: quartic_core::Error) -> Self {
        match err {
            quartic_core::Error::Domain(msg) => Failure::Domain(msg),
            other => Failure::Runtime {
                message: other.to_string(),
                report: None,
            },
        }
    }
}

/// Rendered output and exit status of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

pub fn execute(cli: &Cli) -> Result<RunReport, Failure> {
    match &cli.command {
        Command::Quartic { a, m, method, tol } => {
            commands::quartic(a, *m, *method, *tol, cli.float)
        }
        Command::Table { m_max } => commands::table(*m_max, cli.float),
        Command::Landen {
            variant,
            params,
            tol,
            printed_d_map,
        } => commands::landen(*variant, params, *tol, *printed_d_map),
        Command::Verify { suite } => Ok(verify::verify(*suite)),
        Command::Transform {
            num,
            den,
            whole_line,
        } => commands::transform(num, den, *whole_line),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let stamp = |mut report: RunReport| {
        if !cli.no_timestamp {
            report.timestamp = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .ok()
                .map(|d| d.as_secs());
        }
        report
    };
    match execute(cli) {
        Ok(report) => {
            let report = stamp(report);
            let exit_code = if report.all_passed() { 0 } else { 1 };
            let stderr = report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("check failed: {}\n", c.name))
                .collect();
            Outcome {
                stdout: report.render(cli.format),
                stderr,
                exit_code,
            }
        }
        Err(failure) => {
            let exit_code = failure.exit_code();
            let (message, report) = match failure {
                Failure::Usage(m) => (format!("usage error: {m}"), None),
                Failure::Domain(m) => (format!("domain error: {m}"), None),
                Failure::Runtime { message, report } => (message, report),
            };
            let stdout = report
                .map(|r| stamp(*r).render(cli.format))
                .unwrap_or_default();
            Outcome {
                stdout,
                stderr: format!("{message}\n"),
                exit_code,
            }
        }
    }
}

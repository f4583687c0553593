//! File formats, the audit pipeline and the command-line front end.

mod audit;
mod commands;
mod file;
mod report;

pub use audit::{is_benson_gordon, kunneth, run_audit, run_pipeline, Pipeline, PipelineOptions};
pub use commands::{run, Cli, Command, Outcome};
pub use file::{load, load_graded, BasisRecord, BracketRecord, GradedAlgebraFile, LieAlgebraFile, ProductRecord, ProductTerm, TermRecord};
pub use report::{render_verdict, AuditReport, ClaimRecord, ClaimStatus};

use thiserror::Error;

use crate::gca::GcaError;
use crate::liealg::{LieError, ValidationReport};
use crate::mostow::MostowError;
use crate::sullivan::SullivanError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{record}: {message}")]
    Record { record: String, message: String },
    #[error("invalid Lie algebra: {}", .0.summary())]
    Validation(ValidationReport),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Gca(#[from] GcaError),
    #[error(transparent)]
    Mostow(#[from] MostowError),
    #[error(transparent)]
    Sullivan(#[from] SullivanError),
}

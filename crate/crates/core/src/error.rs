use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input, violated precondition, rejected parsing.
    Domain,
    /// Budgets, size limits, external solver trouble, I/O.
    Resource,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("input format: {0}")]
    InputFormat(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid parsing: {0}")]
    InvalidParsing(String),

    #[error("search budget of {budget} node expansions exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("no parsing with at most {bound} phrases exists")]
    NoParsingWithinBound { bound: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("inconsistent model: {0}")]
    InconsistentModel(String),

    #[error("encoder bug: {0}")]
    EncoderBug(String),

    #[error("solver: {message}")]
    Solver { message: String, output: String },

    #[error("reduction precondition: {0}")]
    ReductionPrecondition(String),

    #[error("reduction integrity: {0}")]
    ReductionIntegrity(String),

    #[error("segment alignment: {0}")]
    SegmentAlignment(String),

    #[error("family integrity: {0}")]
    FamilyIntegrity(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BudgetExceeded { .. }
            | Error::ResourceLimit(_)
            | Error::Solver { .. }
            | Error::Io(_) => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }

    /// Short machine-readable tag, stable across releases.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::InputFormat(_) => "input-format",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InvalidParsing(_) => "invalid-parsing",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::NoParsingWithinBound { .. } => "no-parsing-within-bound",
            Error::ResourceLimit(_) => "resource-limit",
            Error::InconsistentModel(_) => "inconsistent-model",
            Error::EncoderBug(_) => "encoder-bug",
            Error::Solver { .. } => "solver",
            Error::ReductionPrecondition(_) => "reduction-precondition",
            Error::ReductionIntegrity(_) => "reduction-integrity",
            Error::SegmentAlignment(_) => "segment-alignment",
            Error::FamilyIntegrity(_) => "family-integrity",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}

//! Sequence analytics and claim verification on top of the oracle tables.

mod distribution;
mod export;
mod sequence;
mod verify;

use thiserror::Error;

use crate::oracle::OracleError;

pub use distribution::{distribution_report, DistributionReport};
pub use export::{export_table, parse_table, TableDocument, TableFormat};
pub use sequence::{f_sequence, max_in_row, one_position_indicator, period_scan, PeriodScanResult};
pub use verify::{verify, Claim, Counterexample, Tables, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("sequence of length {len} is too short for the scan bounds (need at least {need})")]
    InsufficientPrefix { len: usize, need: usize },
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<csv::Error> for AnalysisError {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            AnalysisError::Io(e.to_string())
        } else {
            AnalysisError::Parse(e.to_string())
        }
    }
}

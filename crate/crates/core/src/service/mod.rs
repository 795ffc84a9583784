//! Game sessions and read-only analysis queries behind a JSON API.
//!
//! Everything except [`http`] is framework-free so it can be driven directly
//! from tests or other front ends.

#[cfg(feature = "server")]
pub mod http;
pub mod queries;
mod session;
mod store;

use std::path::PathBuf;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::AnalysisError;
use crate::game::IllegalMove;
use crate::oracle::{GrundyTable, OracleError};

pub use session::{GameSession, GameStatus, HistoryEntry, LabeledMove, PileLabel, Player};
pub use store::{SessionStore, Snapshot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ServiceError {
    #[error("{0}")]
    BadRequest(String),
    #[error("{0}")]
    NotFound(String),
    #[error("illegal move: {0}")]
    IllegalMove(#[from] IllegalMove),
    #[error("{0}")]
    Conflict(String),
}

impl ServiceError {
    /// Machine-readable error code used in the JSON body.
    pub fn code(&self) -> &'static str {
        match self {
            ServiceError::BadRequest(_) => "bad_request",
            ServiceError::NotFound(_) => "not_found",
            ServiceError::IllegalMove(_) => "illegal_move",
            ServiceError::Conflict(_) => "conflict",
        }
    }

    pub fn http_status(&self) -> u16 {
        match self {
            ServiceError::BadRequest(_) => 400,
            ServiceError::NotFound(_) => 404,
            ServiceError::IllegalMove(_) => 422,
            ServiceError::Conflict(_) => 409,
        }
    }

    pub fn body(&self) -> ErrorBody {
        ErrorBody {
            error: self.code(),
            detail: self.to_string(),
            violation: match self {
                ServiceError::IllegalMove(m) => Some(*m),
                _ => None,
            },
        }
    }
}

impl From<AnalysisError> for ServiceError {
    fn from(e: AnalysisError) -> Self {
        ServiceError::BadRequest(e.to_string())
    }
}

impl From<OracleError> for ServiceError {
    fn from(e: OracleError) -> Self {
        ServiceError::BadRequest(e.to_string())
    }
}

/// `{"error": code, "detail": text}`, plus the violated constraint for illegal moves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorBody {
    pub error: &'static str,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<IllegalMove>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceConfig {
    /// Size of the nim-value table built at startup; also the cap on every
    /// table-backed query.
    pub table_max_b: u64,
    /// Longest closed-form sequence (`f`, 1-position indicator) a query may request.
    pub max_sequence_len: u64,
    /// Cap on `max_pre` and `max_p` for period scans.
    pub max_scan_bound: usize,
    pub snapshot: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            table_max_b: GrundyTable::DEFAULT_MAX_B,
            max_sequence_len: 1_000_000,
            max_scan_bound: 4096,
            snapshot: None,
        }
    }
}

/// Shared state: the session store and an immutable nim-value table.
#[derive(Debug, Clone)]
pub struct AppState {
    pub store: Arc<SessionStore>,
    pub table: Arc<GrundyTable>,
    pub config: Arc<ServiceConfig>,
}

impl AppState {
    /// Builds the table and loads the snapshot named in `config`, if any.
    pub fn new(config: ServiceConfig) -> Result<Self, ServiceError> {
        let table = GrundyTable::build(config.table_max_b)?;
        let store = match &config.snapshot {
            Some(path) => SessionStore::load(path)?,
            None => SessionStore::new(),
        };
        Ok(Self::with_parts(config, table, store))
    }

    pub fn with_parts(config: ServiceConfig, table: GrundyTable, store: SessionStore) -> Self {
        AppState {
            store: Arc::new(store),
            table: Arc::new(table),
            config: Arc::new(config),
        }
    }

    /// Writes the snapshot if a path is configured.
    pub fn save_snapshot(&self) -> std::io::Result<()> {
        match &self.config.snapshot {
            Some(path) => self.store.save(path),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_body() {
        let e = ServiceError::from(IllegalMove::ZeroTokens);
        assert_eq!(e.http_status(), 422);
        let json = serde_json::to_value(e.body()).unwrap();
        assert_eq!(json["error"], "illegal_move");
        assert_eq!(json["violation"]["reason"], "zero_tokens");

        let json = serde_json::to_value(ServiceError::NotFound("x".into()).body()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"error": "not_found", "detail": "x"})
        );
    }
}

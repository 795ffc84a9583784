//! Read-only analysis queries with the service's limits applied.

use serde::{Deserialize, Serialize};

use crate::analysis::{
    distribution_report, f_sequence, one_position_indicator, period_scan, DistributionReport,
    PeriodScanResult, TableDocument,
};
use crate::game::{
    equal_pair_gap, is_1_position, status, two_adic, winning_moves, Move, NormalizedPosition,
    Outcome, Position,
};
use crate::oracle::{GrundyTable, NimValue};

use super::{ServiceConfig, ServiceError};

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct StatusQuery {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

/// Outcome of a position together with the decomposition that decides it.
///
/// `gap` is the distance between the repeated pile and the odd one out when
/// two piles are equal; `valuation` and `odd_part` split a nonzero gap as
/// `2^valuation * odd_part`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatusReply {
    pub position: Position,
    pub normalized: NormalizedPosition,
    pub outcome: Outcome,
    pub terminal: bool,
    pub gap: Option<u64>,
    pub valuation: Option<u32>,
    pub odd_part: Option<u64>,
    pub one_position: bool,
    pub winning_moves: Vec<Move>,
}

pub fn position_status(q: StatusQuery) -> StatusReply {
    let position = Position::new(q.a, q.b, q.c);
    let normalized = position.normalize();
    let st = status(position);
    let gap = equal_pair_gap(normalized);
    let split = gap.and_then(|g| two_adic(g).ok());
    StatusReply {
        position,
        normalized,
        outcome: st.outcome,
        terminal: st.terminal,
        gap,
        valuation: split.map(|s| s.valuation),
        odd_part: split.map(|s| s.odd_part),
        one_position: is_1_position(position),
        winning_moves: winning_moves(position),
    }
}

/// Nim-value of `(0, a, b)`; the pair may be given in either order.
#[derive(Debug, Clone, Copy, Deserialize)]
pub struct GrundyQuery {
    pub a: u64,
    pub b: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrundyReply {
    pub position: Position,
    pub grundy: NimValue,
}

pub fn grundy(q: GrundyQuery, table: &GrundyTable) -> Result<GrundyReply, ServiceError> {
    let position = Position::new(0, q.a, q.b);
    Ok(GrundyReply {
        position,
        grundy: table.value_of(position)?,
    })
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct TableQuery {
    pub max_b: u64,
}

pub fn table_slice(q: TableQuery, table: &GrundyTable) -> Result<TableDocument, ServiceError> {
    TableDocument::leading(table, q.max_b).ok_or_else(|| {
        ServiceError::BadRequest(format!(
            "max_b {} exceeds the configured limit {}",
            q.max_b,
            table.max_b()
        ))
    })
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct RowQuery {
    pub a: u64,
    pub count: u64,
}

/// `values[i] = G(0, a, a + i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReply {
    pub a: u64,
    pub count: u64,
    pub max: NimValue,
    pub values: Vec<NimValue>,
}

pub fn row(q: RowQuery, table: &GrundyTable) -> Result<RowReply, ServiceError> {
    if q.count == 0 {
        return Err(ServiceError::BadRequest("count must be positive".into()));
    }
    let last =
        q.a.checked_add(q.count - 1)
            .ok_or_else(|| ServiceError::BadRequest("row end overflows".into()))?;
    let values = table.row_sequence(q.a, last)?;
    Ok(RowReply {
        a: q.a,
        count: q.count,
        max: values.iter().copied().max().unwrap_or(0),
        values,
    })
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct FQuery {
    pub max_n: u64,
}

/// `values[n] = f(n)` for `n = 0 ..= max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FReply {
    pub max_n: u64,
    pub values: Vec<u8>,
}

fn check_sequence_len(max_n: u64, config: &ServiceConfig) -> Result<(), ServiceError> {
    if max_n >= config.max_sequence_len {
        return Err(ServiceError::BadRequest(format!(
            "max_n {max_n} exceeds the configured limit {}",
            config.max_sequence_len - 1
        )));
    }
    Ok(())
}

pub fn f_values(q: FQuery, config: &ServiceConfig) -> Result<FReply, ServiceError> {
    check_sequence_len(q.max_n, config)?;
    Ok(FReply {
        max_n: q.max_n,
        values: f_sequence(q.max_n),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    /// `f(n)`, `n = 0 ..= max_n`.
    F,
    /// 1-position indicator of `(0, 0, n)`, `n = 0 ..= max_n`.
    Ones,
    /// `G(0, a, n)`, `n = a ..= max_n`.
    Row,
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct PeriodScanQuery {
    pub seq: SequenceKind,
    #[serde(default)]
    pub a: u64,
    #[serde(default = "default_scan_max_n")]
    pub max_n: u64,
    pub max_pre: usize,
    pub max_p: usize,
}

fn default_scan_max_n() -> u64 {
    489
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodScanReply {
    pub seq: SequenceKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    pub max_n: u64,
    #[serde(flatten)]
    pub result: PeriodScanResult,
    /// The scan only certifies the searched window, never the infinite sequence.
    pub scope: &'static str,
}

pub fn period(
    q: PeriodScanQuery,
    table: &GrundyTable,
    config: &ServiceConfig,
) -> Result<PeriodScanReply, ServiceError> {
    let cap = config.max_scan_bound;
    if q.max_pre > cap || q.max_p > cap {
        return Err(ServiceError::BadRequest(format!(
            "max_pre and max_p must not exceed {cap}"
        )));
    }
    let result = match q.seq {
        SequenceKind::F => {
            check_sequence_len(q.max_n, config)?;
            period_scan(&f_sequence(q.max_n), q.max_pre, q.max_p)?
        }
        SequenceKind::Ones => {
            check_sequence_len(q.max_n, config)?;
            period_scan(&one_position_indicator(q.max_n), q.max_pre, q.max_p)?
        }
        SequenceKind::Row => period_scan(&table.row_sequence(q.a, q.max_n)?, q.max_pre, q.max_p)?,
    };
    Ok(PeriodScanReply {
        seq: q.seq,
        a: (q.seq == SequenceKind::Row).then_some(q.a),
        max_n: q.max_n,
        result,
        scope: "computed prefix within the given bounds only",
    })
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct DistributionQuery {
    pub g: NimValue,
    pub max_b: u64,
}

pub fn distribution(
    q: DistributionQuery,
    table: &GrundyTable,
) -> Result<DistributionReport, ServiceError> {
    Ok(distribution_report(q.g, q.max_b, table)?)
}

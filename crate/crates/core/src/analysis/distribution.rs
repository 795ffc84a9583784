use std::collections::BTreeMap;

use serde::Serialize;

use crate::oracle::{GrundyTable, NimValue};

use super::AnalysisError;

/// Where the g-positions `(0, a, b)` with `a <= b / 2` sit, and whether they
/// all satisfy `a <= 2g - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionReport {
    pub g: NimValue,
    pub max_b: u64,
    pub max_a_observed: Option<u64>,
    /// `a -> sorted b` for every g-position found.
    pub rows: BTreeMap<u64, Vec<u64>>,
    /// Number of g-positions in each row.
    pub row_counts: BTreeMap<u64, usize>,
    #[serde(rename = "bound_2g_minus_1_holds")]
    pub bound_holds: bool,
}

pub fn distribution_report(
    g: NimValue,
    max_b: u64,
    table: &GrundyTable,
) -> Result<DistributionReport, AnalysisError> {
    let scan = table.g_position_scan(g, max_b)?;
    let bound = 2 * g as i64 - 1;
    let bound_holds = scan.max_a.is_none_or(|a| (a as i64) <= bound);
    let row_counts = scan.rows.iter().map(|(&a, bs)| (a, bs.len())).collect();
    Ok(DistributionReport {
        g,
        max_b,
        max_a_observed: scan.max_a,
        rows: scan.rows,
        row_counts,
        bound_holds,
    })
}

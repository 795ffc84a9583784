use serde::Serialize;

use crate::game::{f_indicator, is_1_position, Position};
use crate::oracle::{GrundyTable, NimValue};

use super::AnalysisError;

/// `f(n)` for `n = 0 ..= max_n`.
pub fn f_sequence(max_n: u64) -> Vec<u8> {
    (0..=max_n).map(f_indicator).collect()
}

/// Indicator of `(0, 0, n)` being a 1-position, for `n = 0 ..= max_n`.
pub fn one_position_indicator(max_n: u64) -> Vec<u8> {
    (0..=max_n)
        .map(|n| u8::from(is_1_position(Position::new(0, 0, n))))
        .collect()
}

/// Outcome of searching a finite prefix for an ultimate period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodScanResult {
    pub found: bool,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    pub scanned_prefix_len: usize,
    pub max_preperiod: usize,
    pub max_period: usize,
}

impl PeriodScanResult {
    /// Re-checks the window condition without the scanner's shortcuts.
    pub fn holds_on<T: PartialEq>(&self, seq: &[T]) -> bool {
        match (self.preperiod, self.period) {
            (Some(n0), Some(p)) => {
                p > 0 && (n0..seq.len().saturating_sub(p)).all(|n| seq[n + p] == seq[n])
            }
            _ => !self.found,
        }
    }
}

/// Searches for the least period `p <= max_period`, then the least preperiod
/// `n0 <= max_preperiod`, with `seq[n + p] == seq[n]` for every `n >= n0`
/// inside the prefix.
///
/// The prefix must be longer than `max_preperiod + 2 * max_period` so a
/// reported period repeats over a full window.
pub fn period_scan<T: PartialEq>(
    seq: &[T],
    max_preperiod: usize,
    max_period: usize,
) -> Result<PeriodScanResult, AnalysisError> {
    let need = max_preperiod + 2 * max_period;
    if seq.len() <= need {
        return Err(AnalysisError::InsufficientPrefix {
            len: seq.len(),
            need: need + 1,
        });
    }
    let mut result = PeriodScanResult {
        found: false,
        preperiod: None,
        period: None,
        scanned_prefix_len: seq.len(),
        max_preperiod,
        max_period,
    };
    for p in 1..=max_period {
        // the least valid preperiod is one past the last mismatch
        let n0 = (0..seq.len() - p)
            .rev()
            .find(|&n| seq[n + p] != seq[n])
            .map_or(0, |n| n + 1);
        if n0 <= max_preperiod {
            result.found = true;
            result.preperiod = Some(n0);
            result.period = Some(p);
            break;
        }
    }
    Ok(result)
}

/// Largest of the first `count` values of `G(0, a, n)`, starting at `n = a`.
pub fn max_in_row(a: u64, count: u64, table: &GrundyTable) -> Result<NimValue, AnalysisError> {
    if count == 0 {
        return Err(AnalysisError::InvalidArgument(
            "count must be positive".into(),
        ));
    }
    let row = table.row_sequence(a, a + count - 1)?;
    Ok(row.into_iter().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_prefix() {
        assert_eq!(f_sequence(9), vec![0, 0, 1, 0, 0, 0, 1, 0, 1, 0]);
        let f = f_sequence(4000);
        assert!(f.iter().skip(1).step_by(2).all(|&v| v == 0));
        assert!((16..4000).step_by(32).all(|n| f[n] == 0));
    }

    #[test]
    fn constant_sequence() {
        let r = period_scan(&[7u8; 100], 10, 10).unwrap();
        assert!(r.found);
        assert_eq!((r.preperiod, r.period), (Some(0), Some(1)));
    }

    #[test]
    fn short_prefix_is_rejected() {
        let err = period_scan(&[0u8; 30], 10, 10).unwrap_err();
        assert_eq!(err, AnalysisError::InsufficientPrefix { len: 30, need: 31 });
        assert!(period_scan(&[0u8; 31], 10, 10).is_ok());
    }

    #[test]
    fn preperiod_is_minimal_for_the_least_period() {
        let mut s = vec![9u8, 8, 7];
        s.extend((0..60).map(|i| [1u8, 2, 3][i % 3]));
        let r = period_scan(&s, 10, 5).unwrap();
        assert_eq!((r.preperiod, r.period), (Some(3), Some(3)));
        assert!(r.holds_on(&s));
    }

    #[test]
    fn f_has_no_small_period() {
        let r = period_scan(&f_sequence(489), 128, 128).unwrap();
        assert!(!r.found);
        assert_eq!(r.scanned_prefix_len, 490);
    }

    #[test]
    fn one_positions_repeat_every_four() {
        let r = period_scan(&one_position_indicator(489), 8, 8).unwrap();
        assert_eq!((r.found, r.period), (true, Some(4)));
    }

    #[test]
    fn row_maxima() {
        let t = GrundyTable::build(100).unwrap();
        assert_eq!(max_in_row(0, 9, &t), Ok(3));
        assert!(max_in_row(0, 0, &t).is_err());
        assert!(max_in_row(0, 102, &t).is_err());
    }
}

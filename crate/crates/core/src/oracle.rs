//! Brute-force Sprague-Grundy values, computed by mex over every legal move.
//!
//! Nothing in here consults the closed-form tests in [`crate::game`]; the
//! tables are the reference those formulas are checked against.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::game::{NormalizedPosition, Position};

pub type NimValue = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} {requested} is outside the table bound {bound}")]
    OutOfRange {
        what: &'static str,
        requested: u64,
        bound: u64,
    },
    #[error("table would need {entries} entries, over the budget of {budget}")]
    ResourceLimit { entries: u128, budget: u128 },
    #[error("malformed table: {0}")]
    Malformed(String),
}

/// Minimum excluded value, reusing `seen` as scratch space.
fn mex(values: impl Iterator<Item = NimValue>, seen: &mut Vec<bool>, count: usize) -> NimValue {
    seen.clear();
    seen.resize(count + 1, false);
    for v in values {
        // values above the successor count can never be the mex
        if let Some(slot) = seen.get_mut(v as usize) {
            *slot = true;
        }
    }
    seen.iter().position(|&s| !s).unwrap_or(count) as NimValue
}

#[inline]
fn tri_index(mid: u64, top: u64) -> usize {
    (top * (top + 1) / 2 + mid) as usize
}

/// Nim-values of every class `(0, mid, top)` with `mid <= top <= max_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    max_b: u64,
    values: Vec<NimValue>,
}

impl GrundyTable {
    pub const DEFAULT_MAX_B: u64 = 600;
    /// Default cap on stored entries (256 MiB of values).
    pub const DEFAULT_ENTRY_BUDGET: u128 = 1 << 26;

    pub fn build(max_b: u64) -> Result<Self, OracleError> {
        Self::build_with_budget(max_b, Self::DEFAULT_ENTRY_BUDGET)
    }

    /// Fills the triangle bottom-up by `top`, then by `mid`. Every successor
    /// of `(0, mid, top)` normalizes to a class with a smaller `top`, so each
    /// entry only reads finished rows.
    pub fn build_with_budget(max_b: u64, budget: u128) -> Result<Self, OracleError> {
        let entries = Self::entries_for(max_b);
        if entries > budget {
            return Err(OracleError::ResourceLimit { entries, budget });
        }
        let mut values: Vec<NimValue> = Vec::with_capacity(entries as usize);
        let mut seen = Vec::new();
        for top in 0..=max_b {
            for mid in 0..=top {
                let p = Position::new(0, mid, top);
                let count = p.moves().count();
                let succ = p.successors().map(|q| {
                    let n = q.normalize();
                    values[tri_index(n.mid(), n.top())]
                });
                let g = mex(succ, &mut seen, count);
                values.push(g);
            }
        }
        Ok(GrundyTable { max_b, values })
    }

    pub fn entries_for(max_b: u64) -> u128 {
        let m = max_b as u128 + 1;
        m * (m + 1) / 2
    }

    /// Wraps raw values laid out row by row (`top` ascending, `mid` ascending).
    /// Does not recompute anything; see [`GrundyTable::find_mex_violation`].
    pub fn from_triangle(max_b: u64, values: Vec<NimValue>) -> Result<Self, OracleError> {
        let want = Self::entries_for(max_b);
        if values.len() as u128 != want {
            return Err(OracleError::Malformed(format!(
                "expected {want} values for max_b = {max_b}, got {}",
                values.len()
            )));
        }
        Ok(GrundyTable { max_b, values })
    }

    pub fn max_b(&self) -> u64 {
        self.max_b
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, mid: u64, top: u64) -> Option<NimValue> {
        (mid <= top && top <= self.max_b).then(|| self.values[tri_index(mid, top)])
    }

    pub fn grundy(&self, np: NormalizedPosition) -> Result<NimValue, OracleError> {
        self.get(np.mid(), np.top()).ok_or(OracleError::OutOfRange {
            what: "B",
            requested: np.top(),
            bound: self.max_b,
        })
    }

    /// Nim-value of any position, via its normalized class.
    pub fn value_of(&self, p: Position) -> Result<NimValue, OracleError> {
        self.grundy(p.normalize())
    }

    /// `G(0, a, n)` for `n = a ..= max_n`.
    pub fn row_sequence(&self, a: u64, max_n: u64) -> Result<Vec<NimValue>, OracleError> {
        if max_n > self.max_b {
            return Err(OracleError::OutOfRange {
                what: "max_n",
                requested: max_n,
                bound: self.max_b,
            });
        }
        if a > max_n {
            return Err(OracleError::OutOfRange {
                what: "a",
                requested: a,
                bound: max_n,
            });
        }
        Ok((a..=max_n).map(|n| self.values[tri_index(a, n)]).collect())
    }

    /// All classes `(0, a, b)` with `a <= b / 2`, `b <= max_b` and value `g`,
    /// grouped by `a`.
    pub fn g_position_scan(&self, g: NimValue, max_b: u64) -> Result<GPositionScan, OracleError> {
        if max_b > self.max_b {
            return Err(OracleError::OutOfRange {
                what: "max_b",
                requested: max_b,
                bound: self.max_b,
            });
        }
        let mut rows: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for b in 0..=max_b {
            for a in 0..=b / 2 {
                if self.values[tri_index(a, b)] == g {
                    rows.entry(a).or_default().push(b);
                }
            }
        }
        let max_a = rows.keys().next_back().copied();
        Ok(GPositionScan {
            g,
            max_b,
            rows,
            max_a,
        })
    }

    /// First entry whose stored value is not the mex of its successors, if any.
    pub fn find_mex_violation(&self) -> Option<NormalizedPosition> {
        let mut seen = Vec::new();
        for top in 0..=self.max_b {
            for mid in 0..=top {
                let p = Position::new(0, mid, top);
                let succ: Vec<NimValue> =
                    p.successors().map(|q| self.value_of(q).unwrap()).collect();
                let want = mex(succ.iter().copied(), &mut seen, succ.len());
                if self.values[tri_index(mid, top)] != want {
                    return NormalizedPosition::new(mid, top).ok();
                }
            }
        }
        None
    }
}

/// Result of [`GrundyTable::g_position_scan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GPositionScan {
    pub g: NimValue,
    pub max_b: u64,
    /// `a -> sorted b` for every hit.
    pub rows: BTreeMap<u64, Vec<u64>>,
    pub max_a: Option<u64>,
}

/// Nim-values of raw sorted triples with `a + b + c <= max_total`, computed
/// without reducing positions to their translation class.
#[derive(Debug, Clone)]
pub struct RawTripleTable {
    max_total: u64,
    values: HashMap<[u64; 3], NimValue>,
}

impl RawTripleTable {
    pub const DEFAULT_MAX_TOTAL: u64 = 150;

    /// Moves keep the token count and strictly lower the sum of squared pile
    /// sizes, so filling in order of that sum sees every successor first.
    pub fn build(max_total: u64) -> Self {
        let mut triples: Vec<[u64; 3]> = Vec::new();
        for c in 0..=max_total {
            for b in 0..=c {
                for a in 0..=b {
                    if a + b + c <= max_total {
                        triples.push([a, b, c]);
                    }
                }
            }
        }
        triples.sort_by_key(|t| t.iter().map(|&x| x * x).sum::<u64>());

        let mut values: HashMap<[u64; 3], NimValue> = HashMap::with_capacity(triples.len());
        let mut seen = Vec::new();
        for t in triples {
            let p = Position::from_piles(t);
            let count = p.moves().count();
            let g = mex(p.successors().map(|q| values[&q.piles()]), &mut seen, count);
            values.insert(t, g);
        }
        RawTripleTable { max_total, values }
    }

    pub fn max_total(&self) -> u64 {
        self.max_total
    }

    pub fn raw_grundy(&self, p: Position) -> Result<NimValue, OracleError> {
        self.values
            .get(&p.piles())
            .copied()
            .ok_or(OracleError::OutOfRange {
                what: "total",
                requested: p.total().min(u64::MAX as u128) as u64,
                bound: self.max_total,
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = (Position, NimValue)> + '_ {
        self.values
            .iter()
            .map(|(t, &g)| (Position::from_piles(*t), g))
    }
}

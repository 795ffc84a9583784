//! Positions, moves and the closed-form outcome tests for three-pile Sharing Nim.
//!
//! A move takes `k >= 1` tokens from one pile and adds them to a smaller pile,
//! provided the receiving pile does not end up larger than the pile it was
//! taken from. The player who makes the last move wins. Positions are kept as
//! sorted triples and every `Move` addresses piles by their rank in that order.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Why a move was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum IllegalMove {
    #[error("pile index {index} is out of range (expected 0, 1 or 2)")]
    PileOutOfRange { index: usize },
    #[error("source and destination are the same pile ({index})")]
    SamePile { index: usize },
    #[error("a move must transfer at least one token")]
    ZeroTokens,
    #[error("destination would exceed source: {dest_size} + {k} > {source_size} - {k}")]
    Overfill {
        source_size: u64,
        dest_size: u64,
        k: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("illegal move: {0}")]
    IllegalMove(#[from] IllegalMove),
    #[error("2-adic valuation is undefined for 0")]
    ZeroValuation,
    #[error("normalized position requires mid <= top, got ({mid}, {top})")]
    UnorderedNormalized { mid: u64, top: u64 },
}

/// A game position: three pile sizes, always stored in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 3]", into = "[u64; 3]")]
pub struct Position {
    piles: [u64; 3],
}

impl Position {
    pub fn new(x: u64, y: u64, z: u64) -> Self {
        Self::from_piles([x, y, z])
    }

    pub fn from_piles(mut piles: [u64; 3]) -> Self {
        piles.sort_unstable();
        Position { piles }
    }

    #[inline]
    pub fn piles(&self) -> [u64; 3] {
        self.piles
    }

    #[inline]
    pub fn smallest(&self) -> u64 {
        self.piles[0]
    }

    #[inline]
    pub fn middle(&self) -> u64 {
        self.piles[1]
    }

    #[inline]
    pub fn largest(&self) -> u64 {
        self.piles[2]
    }

    /// Total number of tokens. Widened so that three `u64::MAX` piles fit.
    pub fn total(&self) -> u128 {
        self.piles.iter().map(|&p| p as u128).sum()
    }

    /// The translation class representative `(0, b - a, c - a)`.
    #[inline]
    pub fn normalize(&self) -> NormalizedPosition {
        let [a, b, c] = self.piles;
        NormalizedPosition {
            mid: b - a,
            top: c - a,
        }
    }

    /// No move exists exactly when the largest and smallest piles differ by at most one.
    #[inline]
    pub fn is_terminal(&self) -> bool {
        self.piles[2] - self.piles[0] <= 1
    }

    /// Checks `m` against the transfer rule without applying it.
    pub fn check(&self, m: Move) -> Result<(), IllegalMove> {
        if m.source > 2 {
            return Err(IllegalMove::PileOutOfRange { index: m.source });
        }
        if m.dest > 2 {
            return Err(IllegalMove::PileOutOfRange { index: m.dest });
        }
        if m.source == m.dest {
            return Err(IllegalMove::SamePile { index: m.source });
        }
        if m.k == 0 {
            return Err(IllegalMove::ZeroTokens);
        }
        let source_size = self.piles[m.source];
        let dest_size = self.piles[m.dest];
        // dest + k <= source - k, written so that nothing can overflow
        let fits = source_size >= dest_size && m.k <= (source_size - dest_size) / 2;
        if !fits {
            return Err(IllegalMove::Overfill {
                source_size,
                dest_size,
                k: m.k,
            });
        }
        Ok(())
    }

    /// Applies a legal move and re-sorts the result.
    pub fn apply(&self, m: Move) -> Result<Position, IllegalMove> {
        self.check(m)?;
        Ok(self.apply_unchecked(m))
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, m: Move) -> Position {
        let mut piles = self.piles;
        piles[m.source] -= m.k;
        piles[m.dest] += m.k;
        Position::from_piles(piles)
    }

    /// Iterates the legal moves: type (middle -> smallest), then
    /// (largest -> smallest), then (largest -> middle), each with `k` ascending.
    pub fn moves(&self) -> Moves {
        Moves {
            piles: self.piles,
            dir: 0,
            k: 0,
        }
    }

    pub fn legal_moves(&self) -> Vec<Move> {
        self.moves().collect()
    }

    pub fn successors(&self) -> impl Iterator<Item = Position> + '_ {
        self.moves().map(move |m| self.apply_unchecked(m))
    }

    /// Legal moves after which two piles are equal, in a fixed order:
    /// halving the gap between (smallest, middle), (middle, largest) and
    /// (smallest, largest), then raising the smallest pile to the middle from
    /// the largest, then lowering the largest to the middle into the smallest.
    /// Duplicate `(source, dest, k)` triples are dropped.
    ///
    /// Every position with two equal piles is reachable only through one of
    /// these, so this list contains every move to a P-position.
    pub fn equalizing_moves(&self) -> Vec<Move> {
        let [a, b, c] = self.piles;
        let candidates = [
            Move::new(1, 0, (b - a) / 2),
            Move::new(2, 1, (c - b) / 2),
            Move::new(2, 0, (c - a) / 2),
            Move::new(2, 0, b - a),
            Move::new(2, 0, c - b),
        ];
        let mut out: Vec<Move> = Vec::with_capacity(candidates.len());
        for m in candidates {
            if self.check(m).is_ok() && !out.contains(&m) {
                let after = self.apply_unchecked(m).piles();
                if after[0] == after[1] || after[1] == after[2] {
                    out.push(m);
                }
            }
        }
        out
    }
}

impl From<[u64; 3]> for Position {
    fn from(piles: [u64; 3]) -> Self {
        Position::from_piles(piles)
    }
}

impl From<Position> for [u64; 3] {
    fn from(p: Position) -> Self {
        p.piles
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.piles;
        write!(f, "({a},{b},{c})")
    }
}

/// Iterator over the legal moves of a position; see [`Position::moves`].
#[derive(Debug, Clone)]
pub struct Moves {
    piles: [u64; 3],
    dir: usize,
    k: u64,
}

const DIRECTIONS: [(usize, usize); 3] = [(1, 0), (2, 0), (2, 1)];

impl Iterator for Moves {
    type Item = Move;

    fn next(&mut self) -> Option<Move> {
        while self.dir < DIRECTIONS.len() {
            let (source, dest) = DIRECTIONS[self.dir];
            let limit = (self.piles[source] - self.piles[dest]) / 2;
            if self.k < limit {
                self.k += 1;
                return Some(Move::new(source, dest, self.k));
            }
            self.dir += 1;
            self.k = 0;
        }
        None
    }
}

/// The class `(0, mid, top)` with `mid <= top`; all members share a nim-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalizedPosition {
    mid: u64,
    top: u64,
}

impl NormalizedPosition {
    pub fn new(mid: u64, top: u64) -> Result<Self, GameError> {
        if mid > top {
            return Err(GameError::UnorderedNormalized { mid, top });
        }
        Ok(NormalizedPosition { mid, top })
    }

    #[inline]
    pub fn mid(&self) -> u64 {
        self.mid
    }

    #[inline]
    pub fn top(&self) -> u64 {
        self.top
    }

    pub fn position(&self) -> Position {
        Position {
            piles: [0, self.mid, self.top],
        }
    }

    /// `(top - mid, top)`, the mirror class with the same nim-value.
    pub fn mirror(&self) -> NormalizedPosition {
        NormalizedPosition {
            mid: self.top - self.mid,
            top: self.top,
        }
    }
}

impl fmt::Display for NormalizedPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(0,{},{})", self.mid, self.top)
    }
}

/// Transfer `k` tokens from pile `source` to pile `dest` (ranks in the sorted triple).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub source: usize,
    pub dest: usize,
    pub k: u64,
}

impl Move {
    pub const fn new(source: usize, dest: usize, k: u64) -> Self {
        Move { source, dest, k }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} token(s) from pile {} to pile {}",
            self.k, self.source, self.dest
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The previous player wins.
    P,
    /// The next player wins.
    N,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Status {
    pub outcome: Outcome,
    pub terminal: bool,
}

/// `d = 2^v * odd`, returned as `(v, odd)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoAdic {
    pub valuation: u32,
    pub odd_part: u64,
}

pub fn two_adic_valuation(d: u64) -> Result<u32, GameError> {
    if d == 0 {
        return Err(GameError::ZeroValuation);
    }
    Ok(d.trailing_zeros())
}

pub fn two_adic(d: u64) -> Result<TwoAdic, GameError> {
    let valuation = two_adic_valuation(d)?;
    Ok(TwoAdic {
        valuation,
        odd_part: d >> valuation,
    })
}

/// True for `d = 4^k * (2l + 1)`.
#[inline]
fn is_even_power_times_odd(d: u64) -> bool {
    d != 0 && d.trailing_zeros().is_multiple_of(2)
}

/// When the class has a repeated pile, the difference between the repeated
/// size and the odd one out (`0` for three equal piles).
pub fn equal_pair_gap(np: NormalizedPosition) -> Option<u64> {
    if np.mid == 0 || np.mid == np.top {
        Some(np.top)
    } else {
        None
    }
}

pub fn is_p_position(p: Position) -> bool {
    match equal_pair_gap(p.normalize()) {
        Some(0) => true,
        Some(gap) => is_even_power_times_odd(gap),
        None => false,
    }
}

pub fn status(p: Position) -> Status {
    Status {
        outcome: if is_p_position(p) {
            Outcome::P
        } else {
            Outcome::N
        },
        terminal: p.is_terminal(),
    }
}

/// Moves to P-positions, drawn from [`Position::equalizing_moves`] in its order.
/// Empty exactly when `p` is a P-position.
pub fn winning_moves(p: Position) -> Vec<Move> {
    if is_p_position(p) {
        return Vec::new();
    }
    p.equalizing_moves()
        .into_iter()
        .filter(|&m| is_p_position(p.apply_unchecked(m)))
        .collect()
}

pub fn is_1_position(p: Position) -> bool {
    let np = p.normalize();
    let (mid, top) = (np.mid, np.top);
    // (0,0,4k+2) and (0,4k+2,4k+2)
    if (mid == 0 || mid == top) && top % 4 == 2 {
        return true;
    }
    // (0,2,4k+1), including the unsorted k = 0 case (0,1,2)
    if (mid == 2 && top % 4 == 1) || (mid == 1 && top == 2) {
        return true;
    }
    // (0,4l-1,4l+1) for l >= 1
    mid % 4 == 3 && top == mid + 2
}

/// Number of P-positions with three positive piles holding `n` tokens in total.
pub fn count_p_positions(n: u64) -> u64 {
    n / 3
}

/// `0` when `(0,0,n)` is a P-position, `1` otherwise.
pub fn f_indicator(n: u64) -> u8 {
    u8::from(!is_p_position(Position::new(0, 0, n)))
}

//! Three-pile Sharing Nim: rules, closed-form outcome tests, a brute-force
//! Sprague-Grundy oracle, sequence analysis and a JSON-over-HTTP play service.

pub mod analysis;
pub mod game;
pub mod oracle;
pub mod service;

pub use game::{
    count_p_positions, f_indicator, is_1_position, is_p_position, two_adic_valuation,
    winning_moves, GameError, IllegalMove, Move, NormalizedPosition, Outcome, Position,
};
pub use oracle::{GrundyTable, NimValue, OracleError, RawTripleTable};

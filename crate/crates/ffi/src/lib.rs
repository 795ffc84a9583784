//! C ABI over the `sharing-nim` engine.
//!
//! Every fallible call returns an [`SnStatus`] and writes its result through an
//! out-pointer. Tables are opaque handles created with
//! [`sn_grundy_table_build`] and released with [`sn_grundy_table_free`].

use std::ffi::c_char;
use std::panic::catch_unwind;
use std::ptr;

use sharing_nim::{
    count_p_positions, f_indicator, is_1_position, is_p_position, two_adic_valuation,
    winning_moves, GrundyTable, Move, OracleError, Position,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnStatus {
    SnOk = 0,
    SnNullPointer = 1,
    /// A pile index, bound or argument is outside its valid range.
    SnOutOfRange = 2,
    SnIllegalMove = 3,
    /// The position has no move of the requested kind.
    SnNoMove = 4,
    /// The requested table would exceed the entry budget.
    SnResourceLimit = 5,
    SnPanic = 6,
}

/// Three pile sizes. Inputs may be in any order; outputs are ascending.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnPosition {
    pub piles: [u64; 3],
}

/// Move `k` tokens from rank `source` to rank `dest` of the sorted position.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnMove {
    pub source: u32,
    pub dest: u32,
    pub k: u64,
}

/// Opaque nim-value table.
pub struct SnGrundyTable(GrundyTable);

impl From<SnPosition> for Position {
    fn from(p: SnPosition) -> Self {
        Position::from_piles(p.piles)
    }
}

impl From<Position> for SnPosition {
    fn from(p: Position) -> Self {
        SnPosition { piles: p.piles() }
    }
}

impl From<Move> for SnMove {
    fn from(m: Move) -> Self {
        SnMove {
            source: m.source as u32,
            dest: m.dest as u32,
            k: m.k,
        }
    }
}

impl From<SnMove> for Move {
    fn from(m: SnMove) -> Self {
        Move::new(m.source as usize, m.dest as usize, m.k)
    }
}

fn oracle_status(e: &OracleError) -> SnStatus {
    match e {
        OracleError::ResourceLimit { .. } => SnStatus::SnResourceLimit,
        _ => SnStatus::SnOutOfRange,
    }
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn sn_status_message(status: SnStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        SnStatus::SnOk => b"ok\0",
        SnStatus::SnNullPointer => b"null pointer argument\0",
        SnStatus::SnOutOfRange => b"argument out of range\0",
        SnStatus::SnIllegalMove => b"illegal move\0",
        SnStatus::SnNoMove => b"no such move\0",
        SnStatus::SnResourceLimit => b"table exceeds the entry budget\0",
        SnStatus::SnPanic => b"internal error\0",
    };
    msg.as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn sn_is_p_position(position: SnPosition) -> bool {
    is_p_position(position.into())
}

#[no_mangle]
pub extern "C" fn sn_is_1_position(position: SnPosition) -> bool {
    is_1_position(position.into())
}

/// True when no move is possible.
#[no_mangle]
pub extern "C" fn sn_is_terminal(position: SnPosition) -> bool {
    Position::from(position).is_terminal()
}

/// Sorts the piles and subtracts the smallest from each.
#[no_mangle]
pub extern "C" fn sn_normalize(position: SnPosition) -> SnPosition {
    Position::from(position).normalize().position().into()
}

#[no_mangle]
pub extern "C" fn sn_count_p_positions(n: u64) -> u64 {
    count_p_positions(n)
}

#[no_mangle]
pub extern "C" fn sn_f_indicator(n: u64) -> u8 {
    f_indicator(n)
}

/// Exponent of 2 in `d`. `SnOutOfRange` for `d == 0`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sn_two_adic_valuation(d: u64, out: *mut u32) -> SnStatus {
    if out.is_null() {
        return SnStatus::SnNullPointer;
    }
    match two_adic_valuation(d) {
        Ok(v) => {
            *out = v;
            SnStatus::SnOk
        }
        Err(_) => SnStatus::SnOutOfRange,
    }
}

/// Applies `mv` to the sorted form of `position`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sn_apply_move(
    position: SnPosition,
    mv: SnMove,
    out: *mut SnPosition,
) -> SnStatus {
    if out.is_null() {
        return SnStatus::SnNullPointer;
    }
    match Position::from(position).apply(mv.into()) {
        Ok(q) => {
            *out = q.into();
            SnStatus::SnOk
        }
        Err(_) => SnStatus::SnIllegalMove,
    }
}

/// First winning move, or `SnNoMove` at a P-position.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sn_winning_move(position: SnPosition, out: *mut SnMove) -> SnStatus {
    if out.is_null() {
        return SnStatus::SnNullPointer;
    }
    match winning_moves(position.into()).first() {
        Some(&m) => {
            *out = m.into();
            SnStatus::SnOk
        }
        None => SnStatus::SnNoMove,
    }
}

/// Writes up to `cap` winning moves to `out` and the total count to `len`.
/// `out` may be null when `cap` is 0.
///
/// # Safety
/// `len` must be valid for writes and `out` valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn sn_winning_moves(
    position: SnPosition,
    out: *mut SnMove,
    cap: usize,
    len: *mut usize,
) -> SnStatus {
    if len.is_null() || (out.is_null() && cap > 0) {
        return SnStatus::SnNullPointer;
    }
    let moves = winning_moves(position.into());
    for (i, &m) in moves.iter().take(cap).enumerate() {
        *out.add(i) = m.into();
    }
    *len = moves.len();
    SnStatus::SnOk
}

/// Builds the nim-value table for every class with largest gap `<= max_b`.
///
/// # Safety
/// `out` must be null or valid for writes. The handle written there must be
/// released with [`sn_grundy_table_free`].
#[no_mangle]
pub unsafe extern "C" fn sn_grundy_table_build(
    max_b: u64,
    out: *mut *mut SnGrundyTable,
) -> SnStatus {
    if out.is_null() {
        return SnStatus::SnNullPointer;
    }
    *out = ptr::null_mut();
    match catch_unwind(|| GrundyTable::build(max_b)) {
        Ok(Ok(t)) => {
            *out = Box::into_raw(Box::new(SnGrundyTable(t)));
            SnStatus::SnOk
        }
        Ok(Err(e)) => oracle_status(&e),
        Err(_) => SnStatus::SnPanic,
    }
}

/// Largest gap covered by `table`, or 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sn_grundy_table_max_b(table: *const SnGrundyTable) -> u64 {
    table.as_ref().map_or(0, |t| t.0.max_b())
}

/// Nim-value of `position` (any order, any translation).
///
/// # Safety
/// `table` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sn_grundy_table_value(
    table: *const SnGrundyTable,
    position: SnPosition,
    out: *mut u32,
) -> SnStatus {
    let (Some(t), false) = (table.as_ref(), out.is_null()) else {
        return SnStatus::SnNullPointer;
    };
    match t.0.value_of(position.into()) {
        Ok(v) => {
            *out = v;
            SnStatus::SnOk
        }
        Err(e) => oracle_status(&e),
    }
}

/// Releases a table handle. Null is ignored.
///
/// # Safety
/// `table` must be null or a handle from [`sn_grundy_table_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sn_grundy_table_free(table: *mut SnGrundyTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

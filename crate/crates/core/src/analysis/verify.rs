//! Checks of the structural claims about Sharing Nim against the oracle
//! tables, each up to a finite bound.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::game::{
    count_p_positions, f_indicator, is_1_position, is_p_position, winning_moves,
    NormalizedPosition, Position,
};
use crate::oracle::{GrundyTable, OracleError, RawTripleTable};

use super::AnalysisError;

/// A claim that can be checked exhaustively up to a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "&'static str")]
pub enum Claim {
    /// Raw triples share the value of their normalized class (bound on total tokens).
    TranslationInvariance,
    /// `G(0,A,B) = G(0,B-A,B)`, palindromic columns and row/diagonal identity.
    ColumnSymmetry,
    /// Value 0 exactly on the closed-form P-set.
    PPositionFormula,
    /// Value 1 exactly on the closed-form 1-set.
    OnePositionFormula,
    /// `floor(n/3)` P-positions among positive triples summing to `n`.
    PPositionCount,
    /// Residue-class rules for `f(n)` mod 32, plus agreement with the oracle.
    FResidueClasses,
    /// `winning_moves` is sound and complete against the oracle.
    WinningMoves,
    /// Every N-position has exactly one winning successor class.
    UniqueWinningMove,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::TranslationInvariance,
        Claim::ColumnSymmetry,
        Claim::PPositionFormula,
        Claim::OnePositionFormula,
        Claim::PPositionCount,
        Claim::FResidueClasses,
        Claim::WinningMoves,
        Claim::UniqueWinningMove,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::TranslationInvariance => "translation",
            Claim::ColumnSymmetry => "symmetry",
            Claim::PPositionFormula => "p-positions",
            Claim::OnePositionFormula => "one-positions",
            Claim::PPositionCount => "p-count",
            Claim::FResidueClasses => "f-residues",
            Claim::WinningMoves => "winning-moves",
            Claim::UniqueWinningMove => "unique-winning-move",
        }
    }
}

impl From<Claim> for &'static str {
    fn from(c: Claim) -> Self {
        c.id()
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| AnalysisError::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub position: Position,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub bound: u64,
    pub passed: bool,
    pub instances_checked: u64,
    pub counterexample: Option<Counterexample>,
}

/// Tables a verification run may read.
#[derive(Debug, Clone, Copy)]
pub struct Tables<'a> {
    pub grundy: &'a GrundyTable,
    pub raw: Option<&'a RawTripleTable>,
}

struct Run {
    checked: u64,
}

type Step = Result<(), Counterexample>;

fn fail(position: Position, detail: String) -> Step {
    Err(Counterexample { position, detail })
}

fn need_table(table: &GrundyTable, bound: u64) -> Result<(), AnalysisError> {
    if table.max_b() < bound {
        return Err(OracleError::OutOfRange {
            what: "bound",
            requested: bound,
            bound: table.max_b(),
        }
        .into());
    }
    Ok(())
}

fn classes(bound: u64) -> impl Iterator<Item = NormalizedPosition> {
    (0..=bound).flat_map(|top| (0..=top).map(move |mid| NormalizedPosition::new(mid, top).unwrap()))
}

pub fn verify(
    claim: Claim,
    bound: u64,
    tables: Tables<'_>,
) -> Result<VerificationReport, AnalysisError> {
    let t = tables.grundy;
    let mut run = Run { checked: 0 };
    let outcome = match claim {
        Claim::TranslationInvariance => {
            let raw = tables.raw.ok_or_else(|| {
                AnalysisError::InvalidArgument("raw triple table required".into())
            })?;
            if raw.max_total() < bound {
                return Err(OracleError::OutOfRange {
                    what: "bound",
                    requested: bound,
                    bound: raw.max_total(),
                }
                .into());
            }
            need_table(t, bound)?;
            translation(&mut run, bound, raw, t)
        }
        Claim::ColumnSymmetry => {
            need_table(t, bound)?;
            symmetry(&mut run, bound, t)
        }
        Claim::PPositionFormula => {
            need_table(t, bound)?;
            formula(&mut run, bound, t, 0, is_p_position)
        }
        Claim::OnePositionFormula => {
            need_table(t, bound)?;
            formula(&mut run, bound, t, 1, is_1_position)
        }
        Claim::PPositionCount => {
            need_table(t, bound)?;
            p_count(&mut run, bound, t)
        }
        Claim::FResidueClasses => f_residues(&mut run, bound, t),
        Claim::WinningMoves => {
            need_table(t, bound)?;
            winning(&mut run, bound, t)
        }
        Claim::UniqueWinningMove => {
            need_table(t, bound)?;
            unique_winning(&mut run, bound, t)
        }
    };
    Ok(VerificationReport {
        claim,
        bound,
        passed: outcome.is_ok(),
        instances_checked: run.checked,
        counterexample: outcome.err(),
    })
}

fn translation(run: &mut Run, bound: u64, raw: &RawTripleTable, t: &GrundyTable) -> Step {
    let mut entries: Vec<_> = raw
        .iter()
        .filter(|(p, _)| p.total() <= bound as u128)
        .collect();
    entries.sort();
    for (p, g) in entries {
        run.checked += 1;
        let class = t.value_of(p).unwrap();
        if g != class {
            return fail(
                p,
                format!("raw value {g}, class {} has value {class}", p.normalize()),
            );
        }
    }
    Ok(())
}

fn symmetry(run: &mut Run, bound: u64, t: &GrundyTable) -> Step {
    let g = |a: u64, b: u64| t.get(a, b).unwrap();
    for np in classes(bound) {
        run.checked += 1;
        let (a, b) = (np.mid(), np.top());
        if g(a, b) != g(b - a, b) {
            return fail(
                np.position(),
                format!(
                    "G(0,{a},{b}) = {} but G(0,{},{b}) = {}",
                    g(a, b),
                    b - a,
                    g(b - a, b)
                ),
            );
        }
    }
    // palindromic column segments (a .. b-a) for a <= b/2
    for b in 0..=bound {
        for a in 0..=b / 2 {
            let column: Vec<_> = (a..=b - a).map(|i| g(i, b)).collect();
            if !column.iter().eq(column.iter().rev()) {
                return fail(
                    Position::new(0, a, b),
                    format!("column {b} from {a} is not a palindrome"),
                );
            }
        }
    }
    // row to the right of (a, 2a) equals the diagonal starting there
    for a in 0..=bound / 2 {
        for i in 0..=bound - 2 * a {
            if g(a, 2 * a + i) != g(a + i, 2 * a + i) {
                return fail(
                    Position::new(0, a, 2 * a + i),
                    format!("row/diagonal mismatch at a={a}, i={i}"),
                );
            }
        }
    }
    Ok(())
}

fn formula(
    run: &mut Run,
    bound: u64,
    t: &GrundyTable,
    value: u32,
    test: fn(Position) -> bool,
) -> Step {
    for np in classes(bound) {
        run.checked += 1;
        let g = t.grundy(np).unwrap();
        let p = np.position();
        if (g == value) != test(p) {
            return fail(p, format!("oracle value {g}, closed form says {}", test(p)));
        }
    }
    Ok(())
}

fn p_count(run: &mut Run, bound: u64, t: &GrundyTable) -> Step {
    for n in 1..=bound {
        run.checked += 1;
        let mut count = 0u64;
        for a in 1..=n / 3 {
            for b in a..=(n - a) / 2 {
                let c = n - a - b;
                if c >= b && t.value_of(Position::new(a, b, c)).unwrap() == 0 {
                    count += 1;
                }
            }
        }
        if count != count_p_positions(n) {
            return fail(
                Position::new(0, 0, n),
                format!(
                    "{count} P-positions with {n} tokens, expected {}",
                    count_p_positions(n)
                ),
            );
        }
    }
    Ok(())
}

/// The mod-32 rules: `Some(value)` when `n`'s residue is covered.
fn residue_rule(n: u64) -> Option<u8> {
    if n % 2 == 1 {
        return Some(0);
    }
    match n % 32 {
        4 | 12 | 16 | 20 | 28 => Some(0),
        2 | 6 | 8 | 10 | 14 | 18 | 22 | 24 | 26 | 30 => Some(1),
        _ => None,
    }
}

fn f_residues(run: &mut Run, bound: u64, t: &GrundyTable) -> Step {
    for n in 3..=bound {
        run.checked += 1;
        if let Some(want) = residue_rule(n) {
            if f_indicator(n) != want {
                return fail(
                    Position::new(0, 0, n),
                    format!("f({n}) = {}, residue rule gives {want}", f_indicator(n)),
                );
            }
        }
    }
    for n in 0..=bound.min(t.max_b()) {
        run.checked += 1;
        let g = t.get(0, n).unwrap();
        if (f_indicator(n) == 0) != (g == 0) {
            return fail(
                Position::new(0, 0, n),
                format!("f({n}) = {}, oracle value {g}", f_indicator(n)),
            );
        }
    }
    Ok(())
}

fn winning(run: &mut Run, bound: u64, t: &GrundyTable) -> Step {
    for np in classes(bound) {
        run.checked += 1;
        let p = np.position();
        let moves = winning_moves(p);
        if t.grundy(np).unwrap() == 0 {
            if !moves.is_empty() {
                return fail(p, format!("P-position offered winning moves {moves:?}"));
            }
            if let Some(q) = p.successors().find(|&q| t.value_of(q).unwrap() == 0) {
                return fail(
                    p,
                    format!("P-position has a move to {q}, which has value 0"),
                );
            }
        } else {
            if moves.is_empty() {
                return fail(p, "N-position without a winning move".into());
            }
            for m in moves {
                let q = p.apply(m).map_err(|e| Counterexample {
                    position: p,
                    detail: e.to_string(),
                })?;
                let g = t.value_of(q).unwrap();
                if g != 0 {
                    return fail(p, format!("{m} lands on {q} with value {g}"));
                }
            }
        }
    }
    Ok(())
}

fn unique_winning(run: &mut Run, bound: u64, t: &GrundyTable) -> Step {
    for np in classes(bound) {
        if t.grundy(np).unwrap() == 0 {
            continue;
        }
        run.checked += 1;
        let p = np.position();
        let targets: BTreeSet<_> = p
            .successors()
            .filter(|&q| t.value_of(q).unwrap() == 0)
            .map(|q| q.normalize())
            .collect();
        if targets.len() != 1 {
            let list: Vec<String> = targets.iter().map(|c| c.to_string()).collect();
            return fail(
                p,
                format!(
                    "{} winning successor classes: {}",
                    targets.len(),
                    list.join(", ")
                ),
            );
        }
    }
    Ok(())
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::game::{winning_moves, IllegalMove, Move, Position};

use super::ServiceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Human,
    Engine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameStatus {
    InProgress,
    Finished,
}

/// Stable name of a physical pile (`L0`, `L1`, `L2`), fixed at creation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PileLabel(u8);

impl PileLabel {
    pub const ALL: [PileLabel; 3] = [PileLabel(0), PileLabel(1), PileLabel(2)];

    pub fn new(index: usize) -> Option<Self> {
        (index < 3).then_some(PileLabel(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<String> for PileLabel {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        match s.as_str() {
            "L0" => Ok(PileLabel(0)),
            "L1" => Ok(PileLabel(1)),
            "L2" => Ok(PileLabel(2)),
            _ => Err(format!("unknown pile label {s:?}, expected L0, L1 or L2")),
        }
    }
}

impl From<PileLabel> for String {
    fn from(l: PileLabel) -> Self {
        l.to_string()
    }
}

impl fmt::Display for PileLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

/// A move as a client addresses it: by pile label rather than by rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMove {
    pub from: PileLabel,
    pub to: PileLabel,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub mover: Player,
    #[serde(flatten)]
    pub action: LabeledMove,
    /// Pile sizes after the move, in label order.
    pub piles: [u64; 3],
    pub position: Position,
}

/// A game between a human and the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameSession {
    pub id: String,
    /// Starting pile sizes in label order.
    pub initial: [u64; 3],
    /// Current pile sizes in label order.
    pub piles: [u64; 3],
    pub position: Position,
    pub history: Vec<HistoryEntry>,
    pub status: GameStatus,
    pub winner: Option<Player>,
}

/// `order[rank]` is the label holding the pile of that rank; ties keep label order.
fn rank_order(piles: [u64; 3]) -> [usize; 3] {
    let mut order = [0, 1, 2];
    order.sort_by_key(|&label| (piles[label], label));
    order
}

impl GameSession {
    pub fn new(id: String, piles: [u64; 3]) -> Self {
        let position = Position::from_piles(piles);
        GameSession {
            id,
            initial: piles,
            piles,
            position,
            history: Vec::new(),
            status: if position.is_terminal() {
                GameStatus::Finished
            } else {
                GameStatus::InProgress
            },
            winner: None,
        }
    }

    pub fn is_finished(&self) -> bool {
        self.status == GameStatus::Finished
    }

    /// Translates a labelled move into rank space and validates it there.
    pub fn to_move(&self, lm: LabeledMove) -> Result<Move, IllegalMove> {
        if lm.from == lm.to {
            return Err(IllegalMove::SamePile {
                index: lm.from.index(),
            });
        }
        let order = rank_order(self.piles);
        let rank = |l: PileLabel| order.iter().position(|&x| x == l.index()).unwrap();
        let m = Move::new(rank(lm.from), rank(lm.to), lm.k);
        self.position.check(m)?;
        Ok(m)
    }

    pub fn to_labeled(&self, m: Move) -> LabeledMove {
        let order = rank_order(self.piles);
        LabeledMove {
            from: PileLabel(order[m.source] as u8),
            to: PileLabel(order[m.dest] as u8),
            k: m.k,
        }
    }

    pub fn play(&mut self, mover: Player, lm: LabeledMove) -> Result<(), ServiceError> {
        if self.is_finished() {
            return Err(ServiceError::Conflict(format!(
                "game {} is already finished",
                self.id
            )));
        }
        self.to_move(lm)?;
        self.piles[lm.from.index()] -= lm.k;
        self.piles[lm.to.index()] += lm.k;
        self.position = Position::from_piles(self.piles);
        self.history.push(HistoryEntry {
            mover,
            action: lm,
            piles: self.piles,
            position: self.position,
        });
        if self.position.is_terminal() {
            self.status = GameStatus::Finished;
            self.winner = Some(mover);
        }
        Ok(())
    }

    /// First winning move if any, else the legal move with least `(source, dest, k)`.
    pub fn engine_choice(&self) -> Option<LabeledMove> {
        winning_moves(self.position)
            .first()
            .copied()
            .or_else(|| self.position.moves().min())
            .map(|m| self.to_labeled(m))
    }

    pub fn play_engine(&mut self) -> Result<LabeledMove, ServiceError> {
        if self.is_finished() {
            return Err(ServiceError::Conflict(format!(
                "game {} is already finished",
                self.id
            )));
        }
        let lm = self
            .engine_choice()
            .ok_or_else(|| ServiceError::Conflict("no legal move available".into()))?;
        self.play(Player::Engine, lm)?;
        Ok(lm)
    }

    /// Replays the history from the initial piles and checks every recorded
    /// state, the status and the winner.
    pub fn replay(&self) -> Result<(), String> {
        let mut game = GameSession::new(self.id.clone(), self.initial);
        for (i, entry) in self.history.iter().enumerate() {
            game.play(entry.mover, entry.action)
                .map_err(|e| format!("move {i} does not replay: {e}"))?;
            if game.piles != entry.piles || game.position != entry.position {
                return Err(format!("move {i} records a different result"));
            }
        }
        if game.piles != self.piles || game.position != self.position {
            return Err("current position does not match the history".into());
        }
        if game.status != self.status || game.winner != self.winner {
            return Err("status or winner does not match the history".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lm(from: usize, to: usize, k: u64) -> LabeledMove {
        LabeledMove {
            from: PileLabel::new(from).unwrap(),
            to: PileLabel::new(to).unwrap(),
            k,
        }
    }

    #[test]
    fn creation() {
        let g = GameSession::new("g".into(), [3, 2, 5]);
        assert_eq!(g.position, Position::new(2, 3, 5));
        assert_eq!(g.status, GameStatus::InProgress);

        for piles in [[1, 1, 2], [0, 0, 0]] {
            let g = GameSession::new("g".into(), piles);
            assert_eq!(g.status, GameStatus::Finished);
            assert_eq!(g.winner, None);
        }
    }

    #[test]
    fn labels_follow_physical_piles() {
        // L0 = 5 is the largest pile, L2 = 0 the smallest
        let mut g = GameSession::new("g".into(), [5, 2, 0]);
        assert_eq!(g.to_move(lm(0, 2, 2)).unwrap(), Move::new(2, 0, 2));
        g.play(Player::Human, lm(0, 2, 2)).unwrap();
        assert_eq!(g.piles, [3, 2, 2]);
        assert_eq!(g.position, Position::new(2, 2, 3));
    }

    #[test]
    fn human_finishing_move_wins() {
        let mut g = GameSession::new("g".into(), [0, 2, 4]);
        g.play(Player::Human, lm(2, 0, 2)).unwrap();
        assert_eq!(g.position, Position::new(2, 2, 2));
        assert_eq!(
            (g.status, g.winner),
            (GameStatus::Finished, Some(Player::Human))
        );
        assert!(matches!(
            g.play(Player::Human, lm(0, 1, 1)),
            Err(ServiceError::Conflict(_))
        ));
        g.replay().unwrap();
    }

    #[test]
    fn illegal_moves() {
        let mut g = GameSession::new("g".into(), [0, 2, 4]);
        assert!(matches!(
            g.play(Player::Human, lm(0, 2, 1)),
            Err(ServiceError::IllegalMove(IllegalMove::Overfill { .. }))
        ));
        assert!(matches!(
            g.play(Player::Human, lm(1, 1, 1)),
            Err(ServiceError::IllegalMove(IllegalMove::SamePile {
                index: 1
            }))
        ));
        assert!(g.history.is_empty());
    }

    #[test]
    fn engine_choices() {
        let mut g = GameSession::new("g".into(), [0, 0, 2]);
        g.play_engine().unwrap();
        assert_eq!(g.position.normalize().position(), Position::new(0, 1, 1));
        assert_eq!(g.winner, Some(Player::Engine));

        // P-position: least legal move, 1 token from the largest to the smallest
        let g = GameSession::new("g".into(), [0, 0, 4]);
        assert_eq!(g.engine_choice(), Some(lm(2, 0, 1)));

        let mut g = GameSession::new("g".into(), [0, 1, 2]);
        assert_eq!(g.play_engine().unwrap(), lm(2, 0, 1));
        assert_eq!(g.position, Position::new(1, 1, 1));
    }

    #[test]
    fn replay_detects_tampering() {
        let mut g = GameSession::new("g".into(), [0, 3, 9]);
        g.play(Player::Human, lm(2, 0, 2)).unwrap();
        g.play_engine().unwrap();
        g.replay().unwrap();
        g.piles[0] += 1;
        assert!(g.replay().is_err());
    }

    #[test]
    fn label_wire_format() {
        let json = serde_json::to_string(&lm(2, 0, 3)).unwrap();
        assert_eq!(json, r#"{"from":"L2","to":"L0","k":3}"#);
        assert!(serde_json::from_str::<LabeledMove>(r#"{"from":"L3","to":"L0","k":3}"#).is_err());
    }
}

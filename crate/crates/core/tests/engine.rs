use proptest::prelude::*;
use sharing_nim::service::{GameSession, LabeledMove, PileLabel, Player, SessionStore};
use sharing_nim::{is_p_position, GrundyTable, Position};

#[test]
fn engine_moves_from_n_positions_reach_value_zero() {
    let t = GrundyTable::build(60).unwrap();
    for top in 0..=60 {
        for mid in 0..=top {
            let mut g = GameSession::new("g".into(), [0, mid, top]);
            if g.is_finished() {
                continue;
            }
            let was_p = is_p_position(g.position);
            let mv = g
                .play_engine()
                .expect("engine always moves at a non-terminal position");
            assert_eq!(g.history.len(), 1);
            if !was_p {
                assert!(is_p_position(g.position), "{mv:?} from (0,{mid},{top})");
                assert_eq!(t.value_of(g.position).unwrap(), 0);
            }
        }
    }
}

#[test]
fn engine_wins_from_every_small_n_position() {
    // Engine to move from an N-position; the opponent plays its least legal move.
    for top in 0..=30 {
        for mid in 0..=top {
            let start = Position::new(0, mid, top);
            if start.is_terminal() || is_p_position(start) {
                continue;
            }
            let mut g = GameSession::new("g".into(), [0, mid, top]);
            while !g.is_finished() {
                g.play_engine().unwrap();
                if g.is_finished() {
                    break;
                }
                let reply = g.to_labeled(g.position.moves().min().unwrap());
                g.play(Player::Human, reply).unwrap();
            }
            assert_eq!(g.winner, Some(Player::Engine), "from {start:?}");
            g.replay().unwrap();
        }
    }
}

fn label(i: usize) -> PileLabel {
    PileLabel::new(i).unwrap()
}

#[derive(Debug, Clone)]
enum Request {
    Human { from: usize, to: usize, k: u64 },
    Engine,
}

fn request() -> impl Strategy<Value = Request> {
    prop_oneof![
        (0..3usize, 0..3usize, 0..20u64).prop_map(|(from, to, k)| Request::Human { from, to, k }),
        Just(Request::Engine),
    ]
}

fn drive(piles: [u64; 3], requests: &[Request]) -> GameSession {
    let store = SessionStore::new();
    let id = store.create(piles).id;
    for r in requests {
        let _ = match *r {
            Request::Human { from, to, k } => store.submit_move(
                &id,
                LabeledMove {
                    from: label(from),
                    to: label(to),
                    k,
                },
            ),
            Request::Engine => store.engine_move(&id),
        };
        let s = store.get(&id).unwrap();
        s.replay().unwrap();
        assert_eq!(s.is_finished(), s.position.is_terminal());
    }
    store.get(&id).unwrap()
}

proptest! {
    #[test]
    fn sessions_replay_and_are_deterministic(
        piles in any::<[u8; 3]>(),
        requests in prop::collection::vec(request(), 0..40),
    ) {
        let piles = piles.map(u64::from);
        let a = drive(piles, &requests);
        let b = drive(piles, &requests);
        prop_assert_eq!(&a, &b);
        let total: u64 = a.piles.iter().sum();
        prop_assert_eq!(total, piles.iter().sum::<u64>());
        if let Some(last) = a.history.last() {
            prop_assert_eq!(a.winner.is_some(), a.is_finished());
            if a.is_finished() {
                prop_assert_eq!(a.winner, Some(last.mover));
            }
        }
    }
}

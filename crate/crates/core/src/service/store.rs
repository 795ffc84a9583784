use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use super::session::{GameSession, LabeledMove};
use super::ServiceError;

/// In-memory sessions. The map lock is held only to look sessions up; each
/// session has its own mutex so moves on one game never wait on another.
#[derive(Debug, Default)]
pub struct SessionStore {
    inner: RwLock<Inner>,
}

#[derive(Debug, Default)]
struct Inner {
    next_id: u64,
    sessions: HashMap<String, Arc<Mutex<GameSession>>>,
}

/// On-disk form of the store.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub next_id: u64,
    pub sessions: Vec<GameSession>,
}

impl SessionStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn create(&self, piles: [u64; 3]) -> GameSession {
        let mut inner = self.inner.write().unwrap();
        inner.next_id += 1;
        let id = format!("game-{}", inner.next_id);
        let session = GameSession::new(id.clone(), piles);
        inner
            .sessions
            .insert(id, Arc::new(Mutex::new(session.clone())));
        session
    }

    fn handle(&self, id: &str) -> Result<Arc<Mutex<GameSession>>, ServiceError> {
        self.inner
            .read()
            .unwrap()
            .sessions
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::NotFound(format!("no game with id {id:?}")))
    }

    fn with_session<T>(
        &self,
        id: &str,
        f: impl FnOnce(&mut GameSession) -> Result<T, ServiceError>,
    ) -> Result<T, ServiceError> {
        let handle = self.handle(id)?;
        let mut session = handle.lock().unwrap();
        f(&mut session)
    }

    pub fn get(&self, id: &str) -> Result<GameSession, ServiceError> {
        self.with_session(id, |s| Ok(s.clone()))
    }

    pub fn submit_move(&self, id: &str, mv: LabeledMove) -> Result<GameSession, ServiceError> {
        self.with_session(id, |s| {
            s.play(super::Player::Human, mv)?;
            Ok(s.clone())
        })
    }

    pub fn engine_move(&self, id: &str) -> Result<GameSession, ServiceError> {
        self.with_session(id, |s| {
            s.play_engine()?;
            Ok(s.clone())
        })
    }

    pub fn delete(&self, id: &str) -> Result<(), ServiceError> {
        self.inner
            .write()
            .unwrap()
            .sessions
            .remove(id)
            .map(|_| ())
            .ok_or_else(|| ServiceError::NotFound(format!("no game with id {id:?}")))
    }

    pub fn len(&self) -> usize {
        self.inner.read().unwrap().sessions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn snapshot(&self) -> Snapshot {
        let inner = self.inner.read().unwrap();
        let mut sessions: Vec<GameSession> = inner
            .sessions
            .values()
            .map(|s| s.lock().unwrap().clone())
            .collect();
        sessions.sort_by(|a, b| a.id.cmp(&b.id));
        Snapshot {
            next_id: inner.next_id,
            sessions,
        }
    }

    /// Rebuilds a store, rejecting sessions whose history does not replay.
    pub fn from_snapshot(snapshot: Snapshot) -> Result<Self, ServiceError> {
        let mut sessions = HashMap::with_capacity(snapshot.sessions.len());
        for s in snapshot.sessions {
            s.replay()
                .map_err(|e| ServiceError::BadRequest(format!("snapshot session {}: {e}", s.id)))?;
            let id = s.id.clone();
            if sessions
                .insert(id.clone(), Arc::new(Mutex::new(s)))
                .is_some()
            {
                return Err(ServiceError::BadRequest(format!(
                    "duplicate session id {id}"
                )));
            }
        }
        Ok(SessionStore {
            inner: RwLock::new(Inner {
                next_id: snapshot.next_id,
                sessions,
            }),
        })
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let json = serde_json::to_vec_pretty(&self.snapshot())?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, json)?;
        fs::rename(tmp, path)
    }

    /// Loads a snapshot file; a missing file yields an empty store.
    pub fn load(path: &Path) -> Result<Self, ServiceError> {
        match fs::read(path) {
            Ok(bytes) => {
                let snapshot: Snapshot = serde_json::from_slice(&bytes).map_err(|e| {
                    ServiceError::BadRequest(format!("snapshot {}: {e}", path.display()))
                })?;
                Self::from_snapshot(snapshot)
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::new()),
            Err(e) => Err(ServiceError::BadRequest(format!(
                "snapshot {}: {e}",
                path.display()
            ))),
        }
    }
}

//! Live games held in memory, one lock per session.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use icgame::families::FamilySpec;
use icgame::game::{apply_move, initial_state, GameState, Move, Player, Transcript, Variant};
use icgame::graph::Graph;
use icgame::solver::{evaluate, evaluate_moves, Evaluation, MoveValue, SolveLimits};
use serde::{Deserialize, Serialize};
use tokio::sync::{Mutex, RwLock};

use crate::error::ApiError;
use crate::layout::layout;

/// Who the person at the board plays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HumanRole {
    Alice,
    Bob,
    Observer,
}

impl HumanRole {
    fn player(self) -> Option<Player> {
        match self {
            HumanRole::Alice => Some(Player::Alice),
            HumanRole::Bob => Some(Player::Bob),
            HumanRole::Observer => None,
        }
    }
}

/// A family given either as `"path:6"` or as `{"name": "path", "params": {"n": 6}}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum FamilyRequest {
    Spec(String),
    Named {
        name: String,
        #[serde(default)]
        params: HashMap<String, serde_json::Value>,
    },
}

impl FamilyRequest {
    pub fn to_spec(&self) -> Result<FamilySpec, ApiError> {
        match self {
            FamilyRequest::Spec(s) => Ok(s.parse()?),
            FamilyRequest::Named { name, params } => {
                let params = params
                    .iter()
                    .map(|(k, v)| {
                        let v = match v {
                            serde_json::Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        (k.clone(), v)
                    })
                    .collect();
                Ok(FamilySpec::from_name_and_params(name, &params)?)
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CreateRequest {
    pub graph6: Option<String>,
    pub family: Option<FamilyRequest>,
    pub variant: Variant,
    pub human_role: HumanRole,
    /// Layout seed; the server default when absent.
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoredVertex {
    pub vertex: usize,
    pub color: u32,
}

/// Snapshot of a game position with everything a client needs to draw it.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StateView {
    pub colored: Vec<ColoredVertex>,
    pub uncolored: Vec<usize>,
    pub protected: Vec<usize>,
    pub mover: Player,
    pub fresh: bool,
    pub round: u32,
    pub legal: Vec<usize>,
    pub pass_allowed: bool,
    pub terminal: bool,
    pub colors_used: u32,
}

impl StateView {
    pub fn of(s: &GameState) -> Self {
        let legal = s.legal_moves();
        StateView {
            colored: s
                .coloring()
                .iter()
                .enumerate()
                .filter_map(|(vertex, c)| c.map(|color| ColoredVertex { vertex, color }))
                .collect(),
            uncolored: s.uncolored.iter().collect(),
            protected: s.protected.iter().collect(),
            mover: s.mover,
            fresh: s.fresh,
            round: s.round,
            legal: legal.vertices.iter().collect(),
            pass_allowed: legal.pass_allowed,
            terminal: s.is_terminal(),
            colors_used: s.rounds_used(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SessionView {
    pub id: String,
    pub counter: u64,
    pub variant: Variant,
    pub human_role: HumanRole,
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub layout: Vec<[f64; 2]>,
    pub labels: Option<Vec<String>>,
    pub state: StateView,
}

#[derive(Debug, Clone, Serialize)]
pub struct EngineReply {
    pub counter: u64,
    pub state: SessionView,
    /// Colors the game uses under optimal play, as seen before the move.
    pub value: u32,
    #[serde(rename = "move")]
    pub mv: Move,
    pub evaluation: Evaluation,
}

#[derive(Debug)]
pub struct Session {
    pub id: String,
    pub graph: Graph,
    pub graph6: String,
    pub labels: Option<Vec<String>>,
    pub layout: Vec<[f64; 2]>,
    pub variant: Variant,
    pub human_role: HumanRole,
    pub state: GameState,
    pub transcript: Transcript,
    pub limits: SolveLimits,
    /// Incremented on every committed action.
    pub counter: u64,
    last_active: Instant,
}

impl Session {
    pub fn view(&self) -> SessionView {
        SessionView {
            id: self.id.clone(),
            counter: self.counter,
            variant: self.variant,
            human_role: self.human_role,
            graph6: self.graph6.clone(),
            n: self.graph.n(),
            edges: self.graph.edges().map(|(a, b)| [a, b]).collect(),
            layout: self.layout.clone(),
            labels: self.labels.clone(),
            state: StateView::of(&self.state),
        }
    }

    fn check_counter(&self, expected: Option<u64>) -> Result<(), ApiError> {
        match expected {
            Some(c) if c != self.counter => Err(ApiError::StaleCounter {
                expected: c,
                current: self.counter,
            }),
            _ => Ok(()),
        }
    }

    fn commit(&mut self, mv: Move) -> Result<(), ApiError> {
        let next = apply_move(&self.graph, &self.state, mv).map_err(ApiError::IllegalMove)?;
        self.transcript.record(&self.state, mv, &next);
        self.state = next;
        self.counter += 1;
        Ok(())
    }

    /// A move by the human side. Observers cannot move.
    pub fn submit(&mut self, mv: Move, expected: Option<u64>) -> Result<SessionView, ApiError> {
        self.check_counter(expected)?;
        if self.state.is_terminal() {
            return Err(ApiError::Terminal);
        }
        if self.human_role.player() != Some(self.state.mover) {
            return Err(ApiError::OutOfTurn {
                mover: self.state.mover,
                actor: "human",
            });
        }
        self.commit(mv)?;
        Ok(self.view())
    }
}

/// Sessions by id. Each session sits behind its own lock, so actions on one
/// session are serialized while different sessions proceed independently.
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    idle: Duration,
    limits: SolveLimits,
    default_seed: u64,
    next: AtomicU64,
}

impl SessionStore {
    pub fn new(limits: SolveLimits, idle: Duration, default_seed: u64) -> Self {
        SessionStore {
            sessions: RwLock::new(HashMap::new()),
            idle,
            limits,
            default_seed,
            next: AtomicU64::new(1),
        }
    }

    pub fn limits(&self) -> SolveLimits {
        self.limits
    }

    pub fn default_seed(&self) -> u64 {
        self.default_seed
    }

    pub async fn len(&self) -> usize {
        self.sessions.read().await.len()
    }

    pub async fn is_empty(&self) -> bool {
        self.len().await == 0
    }

    fn fresh_id(&self) -> String {
        let seq = self.next.fetch_add(1, Ordering::Relaxed);
        format!("{:016x}{seq:04x}", rand::random::<u64>())
    }

    /// Drops sessions idle for longer than the expiry.
    pub async fn sweep(&self) {
        let mut sessions = self.sessions.write().await;
        let mut stale = Vec::new();
        for (id, s) in sessions.iter() {
            if let Ok(s) = s.try_lock() {
                if s.last_active.elapsed() > self.idle {
                    stale.push(id.clone());
                }
            }
        }
        for id in stale {
            sessions.remove(&id);
        }
    }

    pub async fn create(&self, req: CreateRequest) -> Result<SessionView, ApiError> {
        self.sweep().await;
        let (graph, labels) = match (&req.graph6, &req.family) {
            (Some(g6), None) => (Graph::from_graph6(g6.trim())?, None),
            (None, Some(f)) => {
                let fam = f.to_spec()?.generate()?;
                (fam.graph, Some(fam.labels))
            }
            _ => {
                return Err(ApiError::BadRequest(
                    "give exactly one of `graph6` and `family`".into(),
                ))
            }
        };
        let id = self.fresh_id();
        let session = Session {
            id: id.clone(),
            graph6: graph.to_graph6(),
            layout: layout(&graph, req.seed.unwrap_or(self.default_seed)),
            labels,
            variant: req.variant,
            human_role: req.human_role,
            state: initial_state(&graph, req.variant),
            graph,
            transcript: Transcript::default(),
            limits: self.limits,
            counter: 0,
            last_active: Instant::now(),
        };
        let view = session.view();
        self.sessions
            .write()
            .await
            .insert(id, Arc::new(Mutex::new(session)));
        Ok(view)
    }

    pub async fn get(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        let s = self
            .sessions
            .read()
            .await
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::UnknownSession(id.to_string()))?;
        s.lock().await.last_active = Instant::now();
        Ok(s)
    }

    pub async fn view(&self, id: &str) -> Result<SessionView, ApiError> {
        Ok(self.get(id).await?.lock().await.view())
    }

    pub async fn submit(
        &self,
        id: &str,
        mv: Move,
        expected: Option<u64>,
    ) -> Result<SessionView, ApiError> {
        self.get(id).await?.lock().await.submit(mv, expected)
    }

    /// Plays the engine's optimal move. The session stays locked while the
    /// solver runs, so a concurrent action waits instead of racing it.
    pub async fn engine(&self, id: &str, expected: Option<u64>) -> Result<EngineReply, ApiError> {
        let handle = self.get(id).await?;
        let mut s = handle.lock().await;
        s.check_counter(expected)?;
        if s.state.is_terminal() {
            return Err(ApiError::Terminal);
        }
        if s.human_role.player() == Some(s.state.mover) {
            return Err(ApiError::OutOfTurn {
                mover: s.state.mover,
                actor: "engine",
            });
        }
        let (g, state, limits) = (s.graph.clone(), s.state.clone(), s.limits);
        let evaluation = tokio::task::spawn_blocking(move || evaluate(&g, &state, limits))
            .await
            .map_err(|e| ApiError::Internal(e.to_string()))??;
        let mv = evaluation.best_move.expect("non-terminal position");
        s.commit(mv)?;
        Ok(EngineReply {
            counter: s.counter,
            state: s.view(),
            value: evaluation.total,
            mv,
            evaluation,
        })
    }

    /// Exact totals for every legal move, computed on a snapshot.
    pub async fn evaluate(&self, id: &str) -> Result<(u64, Vec<MoveValue>), ApiError> {
        let handle = self.get(id).await?;
        let (g, state, limits, counter) = {
            let s = handle.lock().await;
            (s.graph.clone(), s.state.clone(), s.limits, s.counter)
        };
        if state.is_terminal() {
            return Ok((counter, Vec::new()));
        }
        let values = tokio::task::spawn_blocking(move || evaluate_moves(&g, &state, limits))
            .await
            .map_err(|e| ApiError::Internal(e.to_string()))??;
        Ok((counter, values))
    }

    pub async fn transcript(&self, id: &str) -> Result<(u64, String), ApiError> {
        let handle = self.get(id).await?;
        let s = handle.lock().await;
        Ok((s.counter, s.transcript.to_json_lines()))
    }
}

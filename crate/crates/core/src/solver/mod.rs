//! Exact game values by memoized alpha-beta search over 64-bit masks.
//!
//! The search value of a position is `W`, the number of rounds that will
//! still be *opened* from it. A vertex move from a fresh position opens a
//! round and costs 1; every other move costs 0. The total number of colors
//! used by a game is then the rounds already opened plus `W`.
//!
//! Every node is bracketed by bounds from the residual graph (a round on a
//! graph with an edge leaves something behind; a vertex of residual degree
//! `d` is colored within `d + 1` rounds), and the transposition table keeps
//! a lower and an upper bound per position.

mod oracle;

pub use oracle::{oracle_solve, ORACLE_LIMIT};

use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::game::{
    apply_move, initial_state, GameState, Move, MoveError, Player, Transcript, Variant,
};
use crate::graph::Graph;

/// Largest residual the mask encoding supports.
pub const MASK_LIMIT: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_vertices: usize,
    pub max_states: usize,
    pub time_budget: Option<Duration>,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_vertices: 24,
            max_states: 20_000_000,
            time_budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolveError {
    #[error("exact solve infeasible: {n} vertices exceed the limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("exact solve infeasible: state limit of {limit} reached")]
    StateLimit { limit: usize },
    #[error("exact solve infeasible: time budget of {budget_ms} ms exhausted")]
    TimeBudget { budget_ms: u128 },
    #[error("the position is terminal")]
    Terminal,
}

/// Value of a position and an optimal move for its mover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    /// Rounds still to be played, counting the current one if it has begun.
    pub value: u32,
    /// Colors the whole game uses under optimal play from here.
    pub total: u32,
    pub best_move: Option<Move>,
}

/// Optimal outcome of one candidate move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MoveValue {
    #[serde(rename = "move")]
    pub mv: Move,
    /// Colors the whole game uses after this move under optimal play.
    pub value: u32,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes_expanded: u64,
    pub states_stored: usize,
}

#[derive(Clone, Copy)]
struct Bounds {
    lo: i8,
    hi: i8,
}

/// Search engine for one graph and variant. The transposition table lives
/// as long as the solver, so repeated queries on the same game reuse it.
pub struct Solver {
    variant: Variant,
    limits: SolveLimits,
    adj: Vec<u64>,
    table: FxHashMap<u128, Bounds>,
    nodes: u64,
    deadline: Option<Instant>,
}

fn key(u: u64, p: u64, alice: bool, fresh: bool) -> u128 {
    u128::from(u) | u128::from(p) << 62 | u128::from(alice) << 124 | u128::from(fresh) << 125
}

impl Solver {
    /// A solver on `g`, which must have at most `limits.max_vertices`
    /// vertices (and never more than [`MASK_LIMIT`]).
    pub fn new(g: &Graph, variant: Variant, limits: SolveLimits) -> Result<Self, SolveError> {
        let limit = limits.max_vertices.min(MASK_LIMIT);
        if g.n() > limit {
            return Err(SolveError::TooManyVertices { n: g.n(), limit });
        }
        Ok(Solver {
            variant,
            limits,
            adj: g.adjacency_masks().expect("n <= 62"),
            table: FxHashMap::default(),
            nodes: 0,
            deadline: None,
        })
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats {
            nodes_expanded: self.nodes,
            states_stored: self.table.len(),
        }
    }

    /// `W` for a settled position given as masks.
    pub fn rounds_to_open(
        &mut self,
        u: u64,
        p: u64,
        mover: Player,
        fresh: bool,
    ) -> Result<u32, SolveError> {
        self.deadline = self.limits.time_budget.map(|b| Instant::now() + b);
        let v = self.search(u, p, mover == Player::Alice, fresh, -1, i32::from(i8::MAX))?;
        Ok(v as u32)
    }

    /// Colors used by optimal play from the initial position.
    pub fn solve(&mut self) -> Result<u32, SolveError> {
        let full = if self.adj.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.adj.len())
        };
        self.rounds_to_open(full, 0, self.variant.first_mover(), true)
    }

    fn residual_degree(&self, v: usize, u: u64) -> i32 {
        (self.adj[v] & u).count_ones() as i32
    }

    fn has_edge_within(&self, set: u64) -> bool {
        iter_bits(set).any(|v| self.adj[v] & set != 0)
    }

    fn static_bounds(&self, u: u64, p: u64, fresh: bool) -> (i32, i32) {
        if fresh {
            let lo = if self.has_edge_within(u) { 2 } else { 1 };
            let hi = iter_bits(u)
                .map(|v| self.residual_degree(v, u))
                .max()
                .unwrap_or(0)
                + 1;
            (lo, hi)
        } else {
            let lo = if p == 0 {
                0
            } else if self.has_edge_within(p) {
                2
            } else {
                1
            };
            let hi_p = iter_bits(p)
                .map(|v| self.residual_degree(v, u) + 1)
                .max()
                .unwrap_or(0);
            let hi_free = iter_bits(u & !p)
                .map(|v| self.residual_degree(v, u))
                .max()
                .unwrap_or(0);
            (lo, hi_p.max(hi_free))
        }
    }

    /// Child after coloring `v`, with the round-end rule applied.
    fn child(&self, u: u64, p: u64, alice: bool, v: usize) -> (u64, u64, bool, bool) {
        let u2 = u & !(1u64 << v);
        let p2 = (p | self.adj[v]) & u2;
        let mover = !alice;
        if u2 != 0 && u2 & !p2 == 0 {
            let next = self
                .variant
                .next_starter(if mover { Player::Alice } else { Player::Bob });
            (u2, 0, next == Player::Alice, true)
        } else {
            (u2, p2, mover, false)
        }
    }

    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes & 4095 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    let budget_ms = self.limits.time_budget.unwrap_or_default().as_millis();
                    return Err(SolveError::TimeBudget { budget_ms });
                }
            }
        }
        if self.table.len() >= self.limits.max_states {
            return Err(SolveError::StateLimit {
                limit: self.limits.max_states,
            });
        }
        Ok(())
    }

    /// Fail-soft alpha-beta on `W`.
    fn search(
        &mut self,
        u: u64,
        p: u64,
        alice: bool,
        fresh: bool,
        alpha: i32,
        beta: i32,
    ) -> Result<i32, SolveError> {
        if u == 0 {
            return Ok(0);
        }
        let k = key(u, p, alice, fresh);
        let (mut lo, mut hi) = self.static_bounds(u, p, fresh);
        if let Some(b) = self.table.get(&k) {
            lo = lo.max(i32::from(b.lo));
            hi = hi.min(i32::from(b.hi));
        }
        if lo == hi || lo >= beta {
            return Ok(lo);
        }
        if hi <= alpha {
            return Ok(hi);
        }
        self.tick()?;
        let (mut a, mut b) = (alpha.max(lo - 1), beta.min(hi + 1));
        let (a0, b0) = (a, b);

        let free = u & !p;
        let mut order: Vec<(i32, usize)> = iter_bits(free)
            .map(|v| (self.residual_degree(v, u), v))
            .collect();
        if alice {
            order.sort_by_key(|&(d, v)| (-d, v));
        } else {
            order.sort_unstable();
        }
        let cost = i32::from(fresh);
        let pass = alice && self.variant == Variant::AliceSkip;
        let mut best = if alice { i32::MAX } else { i32::MIN };
        let moves = order
            .iter()
            .map(|&(_, v)| Some(v))
            .chain(pass.then_some(None));
        for mv in moves {
            let value = match mv {
                Some(v) => {
                    let (u2, p2, alice2, fresh2) = self.child(u, p, alice, v);
                    cost + self.search(u2, p2, alice2, fresh2, a - cost, b - cost)?
                }
                None => self.search(u, p, false, fresh, a, b)?,
            };
            if alice {
                best = best.min(value);
                b = b.min(best);
            } else {
                best = best.max(value);
                a = a.max(best);
            }
            if a >= b {
                break;
            }
        }

        let best = best.clamp(lo, hi);
        let entry = self.table.entry(k).or_insert(Bounds {
            lo: lo as i8,
            hi: hi as i8,
        });
        if best <= a0 {
            entry.hi = entry.hi.min(best as i8);
        } else if best >= b0 {
            entry.lo = entry.lo.max(best as i8);
        } else {
            *entry = Bounds {
                lo: best as i8,
                hi: best as i8,
            };
        }
        Ok(best)
    }
}

pub(crate) fn iter_bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            return None;
        }
        let v = set.trailing_zeros() as usize;
        set &= set - 1;
        Some(v)
    })
}

/// Colors used when both players play optimally.
pub fn solve(g: &Graph, variant: Variant, limits: SolveLimits) -> Result<u32, SolveError> {
    solve_with_stats(g, variant, limits).map(|(v, _)| v)
}

pub fn solve_with_stats(
    g: &Graph,
    variant: Variant,
    limits: SolveLimits,
) -> Result<(u32, SolveStats), SolveError> {
    let mut solver = Solver::new(g, variant, limits)?;
    let value = solver.solve()?;
    Ok((value, solver.stats()))
}

/// Values in the order of [`Variant::ALL`]: A, AB, B, BA, AliceSkip.
pub fn solve_all_variants(g: &Graph, limits: SolveLimits) -> Result<[u32; 5], SolveError> {
    let mut out = [0; 5];
    for (slot, variant) in out.iter_mut().zip(Variant::ALL) {
        *slot = solve(g, variant, limits)?;
    }
    Ok(out)
}

/// Search over the uncolored part of a game in progress. Vertices are
/// relabeled so that only the residual graph counts against the limits.
pub struct PositionSolver {
    ids: Vec<usize>,
    solver: Solver,
}

impl PositionSolver {
    pub fn new(g: &Graph, s: &GameState, limits: SolveLimits) -> Result<Self, SolveError> {
        let (residual, ids) = g.induced_subgraph(&s.uncolored);
        Ok(PositionSolver {
            solver: Solver::new(&residual, s.variant, limits)?,
            ids,
        })
    }

    fn masks(&self, s: &GameState) -> (u64, u64) {
        let mut u = 0;
        let mut p = 0;
        for (i, &v) in self.ids.iter().enumerate() {
            if s.uncolored.contains(v) {
                u |= 1 << i;
                if s.protected.contains(v) {
                    p |= 1 << i;
                }
            }
        }
        (u, p)
    }

    /// Remaining rounds of `s` (a position reachable from the one this
    /// solver was built for), counting the current round if begun.
    pub fn remaining(&mut self, s: &GameState) -> Result<u32, SolveError> {
        let (u, p) = self.masks(s);
        let w = self.solver.rounds_to_open(u, p, s.mover, s.fresh)?;
        Ok(w + u32::from(!s.fresh && u != 0))
    }

    /// Total colors of the game under optimal play from `s`.
    pub fn total(&mut self, s: &GameState) -> Result<u32, SolveError> {
        let opened = s.rounds_used();
        let (u, p) = self.masks(s);
        Ok(opened + self.solver.rounds_to_open(u, p, s.mover, s.fresh)?)
    }

    pub fn stats(&self) -> SolveStats {
        self.solver.stats()
    }
}

/// Exact game totals after each legal move, vertices ascending, pass last.
pub fn evaluate_moves(
    g: &Graph,
    s: &GameState,
    limits: SolveLimits,
) -> Result<Vec<MoveValue>, SolveError> {
    if s.is_terminal() {
        return Err(SolveError::Terminal);
    }
    let mut ps = PositionSolver::new(g, s, limits)?;
    s.legal_moves()
        .to_vec()
        .into_iter()
        .map(|mv| {
            let child = apply_move(g, s, mv).expect("legal move");
            Ok(MoveValue {
                mv,
                value: ps.total(&child)?,
            })
        })
        .collect()
}

/// An optimal move for the mover of `s`: ties go to the lowest vertex and
/// a pass is preferred only when strictly better.
pub fn best_move(g: &Graph, s: &GameState, limits: SolveLimits) -> Result<Evaluation, SolveError> {
    let values = evaluate_moves(g, s, limits)?;
    let pick = |a: &&MoveValue, b: &&MoveValue| a.value.cmp(&b.value);
    let best = match s.mover {
        // min_by/max_by return the first/last extremum respectively
        Player::Alice => values.iter().min_by(pick),
        Player::Bob => values.iter().rev().max_by(pick),
    }
    .expect("a non-terminal position has a legal move");
    let opened = s.rounds_used();
    Ok(Evaluation {
        value: best.value - opened + u32::from(!s.fresh),
        total: best.value,
        best_move: Some(best.mv),
    })
}

/// Evaluation of `s` including terminal positions.
pub fn evaluate(g: &Graph, s: &GameState, limits: SolveLimits) -> Result<Evaluation, SolveError> {
    if s.is_terminal() {
        return Ok(Evaluation {
            value: 0,
            total: s.rounds_used(),
            best_move: None,
        });
    }
    best_move(g, s, limits)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlayError {
    #[error("{player} chose an illegal move {mv}: {source}")]
    IllegalMove {
        player: Player,
        mv: Move,
        source: MoveError,
    },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone)]
pub struct Playout {
    pub rounds: u32,
    pub transcript: Transcript,
    pub final_state: GameState,
}

/// Plays a full game, asking `alice` and `bob` for moves and validating
/// each one.
pub fn play_out<FA, FB>(
    g: &Graph,
    variant: Variant,
    mut alice: FA,
    mut bob: FB,
) -> Result<Playout, PlayError>
where
    FA: FnMut(&GameState) -> Result<Move, SolveError>,
    FB: FnMut(&GameState) -> Result<Move, SolveError>,
{
    let mut s = initial_state(g, variant);
    let mut transcript = Transcript::default();
    while !s.is_terminal() {
        let player = s.mover;
        let mv = match player {
            Player::Alice => alice(&s)?,
            Player::Bob => bob(&s)?,
        };
        let next = apply_move(g, &s, mv).map_err(|source| PlayError::IllegalMove {
            player,
            mv,
            source,
        })?;
        transcript.record(&s, mv, &next);
        s = next;
    }
    Ok(Playout {
        rounds: s.rounds_used(),
        transcript,
        final_state: s,
    })
}

/// A strategy that plays [`best_move`].
pub fn optimal_strategy(
    g: &Graph,
    limits: SolveLimits,
) -> impl FnMut(&GameState) -> Result<Move, SolveError> + '_ {
    move |s| Ok(best_move(g, s, limits)?.best_move.expect("non-terminal"))
}

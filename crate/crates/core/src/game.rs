//! The independence coloring game: rounds of alternating vertex choices,
//! each round building a maximal independent set of the uncolored graph.
//!
//! Round ends are applied automatically inside [`apply_move`]: as soon as a
//! round has started and every uncolored vertex is protected, the next
//! round opens. A caller never observes a dead round.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Alice => "Alice",
            Player::Bob => "Bob",
        })
    }
}

impl FromStr for Player {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "alice" => Ok(Player::Alice),
            "bob" => Ok(Player::Bob),
            _ => Err(format!("unknown player `{s}` (expected Alice or Bob)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// Alice starts every round.
    A,
    /// Bob starts every round.
    B,
    /// Alice starts; later rounds are started by whoever did not end the
    /// previous one.
    AB,
    /// As `AB`, with Bob starting.
    BA,
    /// As `AB`, and Alice may pass whenever a vertex is available.
    AliceSkip,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::A,
        Variant::AB,
        Variant::B,
        Variant::BA,
        Variant::AliceSkip,
    ];
    pub const MAIN: [Variant; 4] = [Variant::A, Variant::AB, Variant::B, Variant::BA];

    pub fn first_mover(self) -> Player {
        match self {
            Variant::B | Variant::BA => Player::Bob,
            _ => Player::Alice,
        }
    }

    /// Who opens the next round, given the player to move when the
    /// previous round ended (the one who did not end it).
    pub fn next_starter(self, mover: Player) -> Player {
        match self {
            Variant::A => Player::Alice,
            Variant::B => Player::Bob,
            _ => mover,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Variant::A => "A",
            Variant::B => "B",
            Variant::AB => "AB",
            Variant::BA => "BA",
            Variant::AliceSkip => "AliceSkip",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" => Variant::A,
            "b" => Variant::B,
            "ab" => Variant::AB,
            "ba" => Variant::BA,
            "aliceskip" | "as" | "skip" => Variant::AliceSkip,
            _ => {
                return Err(format!(
                    "unknown variant `{s}` (expected A, B, AB, BA or AliceSkip)"
                ))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    Vertex(usize),
    Pass,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Vertex(v) => write!(f, "{v}"),
            Move::Pass => f.write_str("pass"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MoveError {
    #[error("vertex {vertex} does not exist")]
    UnknownVertex { vertex: usize },
    #[error("vertex {vertex} is already colored")]
    AlreadyColored { vertex: usize },
    #[error("vertex {vertex} is protected by neighbor {by}, colored this round")]
    Protected { vertex: usize, by: usize },
    #[error("passing is not allowed here")]
    PassNotAllowed,
    #[error("the game is over")]
    Terminal,
}

/// A full game position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    pub variant: Variant,
    pub uncolored: VertexSet,
    pub protected: VertexSet,
    pub mover: Player,
    /// No vertex has been chosen yet in the current round.
    pub fresh: bool,
    /// Color of the current round, starting at 1.
    pub round: u32,
    pub color_of: Vec<Option<u32>>,
}

pub fn initial_state(g: &Graph, variant: Variant) -> GameState {
    GameState {
        variant,
        uncolored: g.vertices(),
        protected: VertexSet::empty(g.n()),
        mover: variant.first_mover(),
        fresh: true,
        round: 1,
        color_of: vec![None; g.n()],
    }
}

/// Vertices available to the mover and whether passing is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegalMoves {
    pub vertices: VertexSet,
    pub pass_allowed: bool,
}

impl LegalMoves {
    /// Vertex moves in increasing order, then the pass if allowed.
    pub fn to_vec(&self) -> Vec<Move> {
        let mut out: Vec<Move> = self.vertices.iter().map(Move::Vertex).collect();
        if self.pass_allowed {
            out.push(Move::Pass);
        }
        out
    }
}

impl GameState {
    pub fn is_terminal(&self) -> bool {
        self.uncolored.is_empty()
    }

    pub fn legal_moves(&self) -> LegalMoves {
        let vertices = self.uncolored.difference(&self.protected);
        let pass_allowed = self.variant == Variant::AliceSkip
            && self.mover == Player::Alice
            && !vertices.is_empty();
        LegalMoves {
            vertices,
            pass_allowed,
        }
    }

    /// Colors used so far: the current round counts once it has a move.
    pub fn rounds_used(&self) -> u32 {
        if self.fresh {
            self.round - 1
        } else {
            self.round
        }
    }

    /// Color per vertex, `None` for uncolored ones.
    pub fn coloring(&self) -> &[Option<u32>] {
        &self.color_of
    }

    pub fn check_move(&self, g: &Graph, m: Move) -> Result<(), MoveError> {
        if self.is_terminal() {
            return Err(MoveError::Terminal);
        }
        match m {
            Move::Pass if self.legal_moves().pass_allowed => Ok(()),
            Move::Pass => Err(MoveError::PassNotAllowed),
            Move::Vertex(v) if v >= g.n() => Err(MoveError::UnknownVertex { vertex: v }),
            Move::Vertex(v) if !self.uncolored.contains(v) => {
                Err(MoveError::AlreadyColored { vertex: v })
            }
            Move::Vertex(v) if self.protected.contains(v) => {
                let by = g
                    .neighbors(v)
                    .iter()
                    .find(|&w| self.color_of[w] == Some(self.round))
                    .expect("a protected vertex has a neighbor colored this round");
                Err(MoveError::Protected { vertex: v, by })
            }
            Move::Vertex(_) => Ok(()),
        }
    }
}

/// Plays `m` and applies any resulting round end.
pub fn apply_move(g: &Graph, s: &GameState, m: Move) -> Result<GameState, MoveError> {
    s.check_move(g, m)?;
    let mut next = s.clone();
    match m {
        Move::Pass => next.mover = Player::Bob,
        Move::Vertex(v) => {
            next.uncolored.remove(v);
            next.protected.union_with(g.neighbors(v));
            next.protected.intersect_with(&next.uncolored);
            next.color_of[v] = Some(s.round);
            next.mover = s.mover.other();
            next.fresh = false;
        }
    }
    settle(&mut next);
    Ok(next)
}

/// The automatic round-end rule, applied to a fixpoint.
pub fn settle(s: &mut GameState) {
    while !s.fresh && !s.uncolored.is_empty() && s.uncolored.is_subset(&s.protected) {
        s.protected.clear();
        s.fresh = true;
        s.round += 1;
        s.mover = s.variant.next_starter(s.mover);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    Vertex,
    Pass,
    RoundEnd,
}

/// One transcript record. For `round_end` the actor is the player whose
/// move ended the round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptEntry {
    pub actor: Player,
    pub action: Action,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<usize>,
    pub round: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transcript {
    pub entries: Vec<TranscriptEntry>,
}

impl Transcript {
    /// Appends the records for the transition `before --m--> after`.
    pub fn record(&mut self, before: &GameState, m: Move, after: &GameState) {
        let (action, vertex) = match m {
            Move::Vertex(v) => (Action::Vertex, Some(v)),
            Move::Pass => (Action::Pass, None),
        };
        self.entries.push(TranscriptEntry {
            actor: before.mover,
            action,
            vertex,
            round: before.round,
        });
        for round in before.round..after.round {
            self.entries.push(TranscriptEntry {
                actor: before.mover,
                action: Action::RoundEnd,
                vertex: None,
                round,
            });
        }
    }

    /// The moves in order, without round ends.
    pub fn moves(&self) -> Vec<Move> {
        self.entries
            .iter()
            .filter_map(|e| match e.action {
                Action::Vertex => e.vertex.map(Move::Vertex),
                Action::Pass => Some(Move::Pass),
                Action::RoundEnd => None,
            })
            .collect()
    }

    /// Replays the moves from the initial state.
    pub fn replay(&self, g: &Graph, variant: Variant) -> Result<GameState, MoveError> {
        self.moves()
            .into_iter()
            .try_fold(initial_state(g, variant), |s, m| apply_move(g, &s, m))
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.entries
            .iter()
            .map(|e| serde_json::to_string(e).expect("transcript entries serialize") + "\n")
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn play(g: &Graph, variant: Variant, moves: &[Move]) -> GameState {
        moves.iter().fold(initial_state(g, variant), |s, &m| {
            apply_move(g, &s, m).unwrap()
        })
    }

    #[test]
    fn initial_movers() {
        let p4 = path(4);
        let s = initial_state(&p4, Variant::A);
        assert_eq!(s.mover, Player::Alice);
        assert_eq!(s.uncolored.iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(initial_state(&p4, Variant::BA).mover, Player::Bob);
        assert_eq!(initial_state(&p4, Variant::AliceSkip).mover, Player::Alice);
    }

    #[test]
    fn single_vertex_b_variant() {
        let k1 = Graph::new(1).unwrap();
        let s = initial_state(&k1, Variant::B);
        assert_eq!(s.legal_moves().to_vec(), vec![Move::Vertex(0)]);
        let s = apply_move(&k1, &s, Move::Vertex(0)).unwrap();
        assert!(s.is_terminal());
        assert_eq!(s.rounds_used(), 1);
        assert_eq!(
            apply_move(&k1, &s, Move::Vertex(0)),
            Err(MoveError::Terminal)
        );
    }

    #[test]
    fn center_of_p3_ends_the_round() {
        let p3 = path(3);
        let s = play(&p3, Variant::A, &[Move::Vertex(1)]);
        // round 1 closed automatically, both leaves are free again
        assert!(s.fresh);
        assert_eq!(s.round, 2);
        assert_eq!(s.legal_moves().vertices.len(), 2);
        assert_eq!(s.mover, Player::Alice);
    }

    #[test]
    fn round_starters_per_variant() {
        // P_3: the middle vertex ends round 1 on the first move, so the
        // player who did not end it is the second player
        let p3 = path(3);
        for (variant, starter) in [
            (Variant::A, Player::Alice),
            (Variant::B, Player::Bob),
            (Variant::AB, Player::Bob),
            (Variant::BA, Player::Alice),
            (Variant::AliceSkip, Player::Bob),
        ] {
            let s = play(&p3, variant, &[Move::Vertex(1)]);
            assert_eq!(s.mover, starter, "{variant}");
        }
    }

    #[test]
    fn p5_center_gives_two_rounds() {
        let p5 = path(5);
        let s = play(
            &p5,
            Variant::A,
            &[Move::Vertex(2), Move::Vertex(0), Move::Vertex(4)],
        );
        assert_eq!(s.round, 2);
        let s = play(&p5, Variant::A, &[2, 0, 4, 1, 3].map(Move::Vertex));
        assert!(s.is_terminal());
        assert_eq!(s.rounds_used(), 2);
        assert_eq!(s.coloring(), &[1, 2, 1, 2, 1].map(Some));
    }

    #[test]
    fn triangle_uses_a_round_per_vertex() {
        let k3 = Graph::from_graph6("Bw").unwrap();
        let s = play(&k3, Variant::AB, &[0, 1, 2].map(Move::Vertex));
        assert_eq!(s.coloring(), &[1, 2, 3].map(Some));
    }

    #[test]
    fn illegal_moves_are_named() {
        let p3 = path(3);
        let s = play(&p3, Variant::A, &[Move::Vertex(0)]);
        assert_eq!(
            apply_move(&p3, &s, Move::Vertex(1)),
            Err(MoveError::Protected { vertex: 1, by: 0 })
        );
        assert_eq!(
            apply_move(&p3, &s, Move::Vertex(0)),
            Err(MoveError::AlreadyColored { vertex: 0 })
        );
        assert_eq!(
            apply_move(&p3, &s, Move::Pass),
            Err(MoveError::PassNotAllowed)
        );
        assert_eq!(
            apply_move(&p3, &s, Move::Vertex(9)),
            Err(MoveError::UnknownVertex { vertex: 9 })
        );
    }

    #[test]
    fn pass_rules() {
        let p3 = path(3);
        let s = initial_state(&p3, Variant::AliceSkip);
        assert!(s.legal_moves().pass_allowed);
        let after = apply_move(&p3, &s, Move::Pass).unwrap();
        assert_eq!(after.mover, Player::Bob);
        assert!(!after.legal_moves().pass_allowed);
        assert!(!initial_state(&p3, Variant::B).legal_moves().pass_allowed);
        assert!(!initial_state(&p3, Variant::AB).legal_moves().pass_allowed);
    }

    #[test]
    fn edgeless_and_empty() {
        let empty = Graph::new(0).unwrap();
        let s = initial_state(&empty, Variant::A);
        assert!(s.is_terminal());
        assert_eq!(s.rounds_used(), 0);
        let e3 = Graph::new(3).unwrap();
        let s = play(&e3, Variant::A, &[Move::Vertex(1)]);
        assert_eq!(s.coloring(), &[None, Some(1), None]);
    }

    #[test]
    fn transcript_records_and_replays() {
        let p3 = path(3);
        let mut t = Transcript::default();
        let mut s = initial_state(&p3, Variant::AliceSkip);
        for m in [
            Move::Pass,
            Move::Vertex(1),
            Move::Vertex(0),
            Move::Vertex(2),
        ] {
            let next = apply_move(&p3, &s, m).unwrap();
            t.record(&s, m, &next);
            s = next;
        }
        let actions: Vec<Action> = t.entries.iter().map(|e| e.action).collect();
        assert_eq!(
            actions,
            [
                Action::Pass,
                Action::Vertex,
                Action::RoundEnd,
                Action::Vertex,
                Action::Vertex
            ]
        );
        assert_eq!(t.entries[2].actor, Player::Bob);
        assert_eq!(t.replay(&p3, Variant::AliceSkip).unwrap(), s);
        let lines = t.to_json_lines();
        assert_eq!(lines.lines().count(), 5);
        assert_eq!(
            lines.lines().nth(1).unwrap(),
            r#"{"actor":"Bob","action":"vertex","vertex":1,"round":1}"#
        );
    }

    #[test]
    fn tags_parse() {
        for v in Variant::ALL {
            assert_eq!(v.tag().parse::<Variant>().unwrap(), v);
            assert_eq!(
                serde_json::to_string(&v).unwrap(),
                format!("\"{}\"", v.tag())
            );
        }
        assert!("C".parse::<Variant>().is_err());
    }

    fn variant() -> impl Strategy<Value = Variant> {
        prop::sample::select(Variant::ALL.to_vec())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        /// Random legal playouts respect every state invariant.
        #[test]
        fn random_playouts(n in 0usize..14, p in 0.0f64..1.0, seed: u64, v in variant(), picks in prop::collection::vec(any::<prop::sample::Index>(), 64)) {
            let g = Graph::random(n, p, seed);
            let mut s = initial_state(&g, v);
            let mut vertex_moves = 0;
            let mut classes: Vec<VertexSet> = Vec::new();
            let mut residual_at_round: Vec<VertexSet> = vec![g.vertices()];
            let mut picks = picks.into_iter().cycle();
            while !s.is_terminal() {
                prop_assert!(s.protected.is_subset(&s.uncolored));
                prop_assert!(!s.fresh || s.protected.is_empty());
                let legal = s.legal_moves().to_vec();
                prop_assert!(!legal.is_empty());
                let m = legal[picks.next().unwrap().index(legal.len())];
                let next = apply_move(&g, &s, m).unwrap();
                match m {
                    Move::Pass => {
                        prop_assert_eq!(&next.uncolored, &s.uncolored);
                        prop_assert_eq!(&next.protected, &s.protected);
                        prop_assert_eq!(next.round, s.round);
                        prop_assert_eq!(&next.color_of, &s.color_of);
                    }
                    Move::Vertex(x) => {
                        vertex_moves += 1;
                        prop_assert_eq!(next.uncolored.len() + 1, s.uncolored.len());
                        let r = s.round as usize;
                        if classes.len() < r { classes.push(VertexSet::empty(g.n())); }
                        classes[r - 1].insert(x);
                    }
                }
                // settling again changes nothing
                let mut again = next.clone();
                settle(&mut again);
                prop_assert_eq!(&again, &next);
                if next.round > s.round || next.is_terminal() {
                    residual_at_round.push(next.uncolored.clone());
                }
                s = next;
            }
            prop_assert_eq!(vertex_moves, n);
            for (v, c) in s.coloring().iter().enumerate() {
                prop_assert!(c.is_some());
                prop_assert!(g.neighbors(v).iter().all(|w| s.coloring()[w] != *c));
            }
            // every class is a maximal independent set of the residual graph
            for (i, class) in classes.iter().enumerate() {
                let residual = &residual_at_round[i];
                prop_assert!(g.is_independent(class));
                for w in residual.difference(class).iter() {
                    prop_assert!(!g.neighbors(w).is_disjoint(class));
                }
            }
            if n > 0 {
                let used = s.rounds_used() as usize;
                prop_assert!(used >= g.chromatic_number().unwrap());
                prop_assert!(used <= g.max_degree() + 1);
            }
        }
    }
}

//! Plain minimax straight from the rules, used only to cross-check the
//! search. It keeps a color per vertex, decides legality by looking at the
//! neighbors' colors, and has no table, no pruning and no bounds.

use crate::game::{Player, Variant};
use crate::graph::Graph;

use super::SolveError;

pub const ORACLE_LIMIT: usize = 8;

struct Oracle<'g> {
    g: &'g Graph,
    variant: Variant,
    colors: Vec<u32>,
}

impl Oracle<'_> {
    fn can_take(&self, v: usize, round: u32) -> bool {
        self.colors[v] == 0 && self.g.neighbors(v).iter().all(|w| self.colors[w] != round)
    }

    /// Total colors used from here on with optimal play.
    fn value(&mut self, round: u32, mover: Player, started: bool) -> u32 {
        if self.colors.iter().all(|&c| c != 0) {
            return if started { round } else { round - 1 };
        }
        let legal: Vec<usize> = (0..self.g.n())
            .filter(|&v| self.can_take(v, round))
            .collect();
        if legal.is_empty() {
            // the round is over; the player to move did not end it
            return self.value(round + 1, self.variant.next_starter(mover), false);
        }
        let mut outcomes = Vec::with_capacity(legal.len() + 1);
        for v in legal {
            self.colors[v] = round;
            outcomes.push(self.value(round, mover.other(), true));
            self.colors[v] = 0;
        }
        if self.variant == Variant::AliceSkip && mover == Player::Alice {
            outcomes.push(self.value(round, Player::Bob, started));
        }
        match mover {
            Player::Alice => outcomes.into_iter().min(),
            Player::Bob => outcomes.into_iter().max(),
        }
        .expect("at least one outcome")
    }
}

/// Game value by exhaustive minimax, for graphs of at most
/// [`ORACLE_LIMIT`] vertices.
pub fn oracle_solve(g: &Graph, variant: Variant) -> Result<u32, SolveError> {
    if g.n() > ORACLE_LIMIT {
        return Err(SolveError::TooManyVertices {
            n: g.n(),
            limit: ORACLE_LIMIT,
        });
    }
    let mut oracle = Oracle {
        g,
        variant,
        colors: vec![0; g.n()],
    };
    Ok(oracle.value(1, variant.first_mover(), false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let e5 = Graph::new(5).unwrap();
        for v in Variant::ALL {
            assert_eq!(oracle_solve(&p2, v).unwrap(), 2);
            assert_eq!(oracle_solve(&e5, v).unwrap(), 1);
        }
        assert!(oracle_solve(&Graph::new(9).unwrap(), Variant::A).is_err());
    }
}

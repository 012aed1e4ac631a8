//! The classical coloring game and marking game.
//!
//! Coloring game: Alice and Bob alternately color any uncolored vertex with
//! any color from `1..=m` not used on its neighbors, Alice first, no
//! passing. Alice wins when every vertex is colored; Bob wins as soon as an
//! uncolored vertex sees all `m` colors.
//!
//! Marking game: the players alternately mark vertices, Alice first. The
//! score is the largest number of marked neighbors any vertex has when it
//! gets marked; Alice minimizes it, and the game coloring number is one
//! more than its value.

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::graph::Graph;
use crate::solver::iter_bits;

pub const CHROMATIC_GAME_LIMIT: usize = 12;
pub const COLORING_NUMBER_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicError {
    #[error("exact solve infeasible: {game} supports at most {limit} vertices, graph has {n}")]
    TooManyVertices {
        game: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("at least one color is needed")]
    NoColors,
}

fn check(game: &'static str, g: &Graph, limit: usize) -> Result<Vec<u64>, ClassicError> {
    if g.n() > limit {
        return Err(ClassicError::TooManyVertices {
            game,
            n: g.n(),
            limit,
        });
    }
    Ok(g.adjacency_masks().expect("within mask width"))
}

struct ColoringGame {
    adj: Vec<u64>,
    full: u64,
    colors: usize,
    memo: FxHashMap<Vec<u64>, bool>,
}

impl ColoringGame {
    /// Alice wins from the position given by its color classes. Colors are
    /// interchangeable, so classes are kept sorted and empty ones dropped.
    fn alice_wins(&mut self, classes: &mut Vec<u64>) -> bool {
        let colored = classes.iter().fold(0, |acc, c| acc | c);
        if colored == self.full {
            return true;
        }
        let uncolored = self.full & !colored;
        let full_palette = classes.len() == self.colors;
        if full_palette
            && iter_bits(uncolored).any(|v| classes.iter().all(|&c| c & self.adj[v] != 0))
        {
            return false;
        }
        if let Some(&won) = self.memo.get(classes.as_slice()) {
            return won;
        }
        let alice = colored.count_ones() % 2 == 0;
        let mut result = !alice;
        'moves: for v in iter_bits(uncolored) {
            let bit = 1u64 << v;
            let open = !full_palette;
            for i in 0..classes.len() + usize::from(open) {
                let mut next = classes.clone();
                if i == classes.len() {
                    next.push(bit);
                } else if next[i] & self.adj[v] == 0 {
                    next[i] |= bit;
                } else {
                    continue;
                }
                next.sort_unstable();
                if self.alice_wins(&mut next) == alice {
                    result = alice;
                    break 'moves;
                }
            }
        }
        self.memo.insert(classes.clone(), result);
        result
    }
}

/// Whether Alice wins the coloring game on `g` with `m` colors.
pub fn alice_wins_coloring_game(g: &Graph, m: usize) -> Result<bool, ClassicError> {
    let adj = check("the coloring game", g, CHROMATIC_GAME_LIMIT)?;
    if m == 0 {
        return if g.n() == 0 {
            Ok(true)
        } else {
            Err(ClassicError::NoColors)
        };
    }
    let full = if g.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - g.n())
    };
    let mut game = ColoringGame {
        adj,
        full,
        colors: m,
        memo: FxHashMap::default(),
    };
    Ok(game.alice_wins(&mut Vec::new()))
}

/// The least `m` with which Alice wins, searched upward from `χ(g)`.
pub fn game_chromatic_number(g: &Graph) -> Result<usize, ClassicError> {
    check("the coloring game", g, CHROMATIC_GAME_LIMIT)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let chi = g
        .chromatic_number()
        .expect("n <= 12 is within the chromatic limit");
    let mut m = chi;
    while !alice_wins_coloring_game(g, m)? {
        m += 1;
    }
    Ok(m)
}

/// `1 +` the optimal score of the marking game.
pub fn game_coloring_number(g: &Graph) -> Result<usize, ClassicError> {
    let adj = check("the marking game", g, COLORING_NUMBER_LIMIT)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let full = u64::MAX >> (64 - n);
    // max(s, minimax(x)) = minimax(max(s, x)), so the score reached so far
    // need not be part of the state: value(marked) is the best achievable
    // maximum over the remaining marks only.
    let mut value = vec![0u8; 1 << n];
    for marked in (0..full).rev() {
        let alice = marked.count_ones() % 2 == 0;
        let options = iter_bits(full & !marked).map(|v| {
            let back = (adj[v] & marked).count_ones() as u8;
            back.max(value[(marked | 1 << v) as usize])
        });
        value[marked as usize] =
            if alice { options.min() } else { options.max() }.expect("unmarked vertex");
    }
    Ok(1 + usize::from(value[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::graph::parse_corpus;

    fn spec(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap().graph
    }

    #[test]
    fn triangle() {
        let k3 = spec("complete:3");
        assert!(alice_wins_coloring_game(&k3, 3).unwrap());
        assert!(!alice_wins_coloring_game(&k3, 2).unwrap());
    }

    #[test]
    fn g4_family() {
        let g = spec("g4:2");
        assert!(alice_wins_coloring_game(&g, 4).unwrap());
        assert!(!alice_wins_coloring_game(&g, 3).unwrap());
        assert_eq!(game_chromatic_number(&g).unwrap(), 4);
        assert_eq!(game_chromatic_number(&spec("g4:3")).unwrap(), 5);
    }

    /// Values from an independent plain minimax.
    #[test]
    fn derived_values() {
        for (name, chi_g, col_g) in [
            ("path:4", 3, 3),
            ("complete:4", 4, 4),
            ("g4:2", 4, 4),
            ("g4:3", 5, 5),
            ("cycle:5", 3, 3),
            ("path:5", 3, 3),
        ] {
            let g = spec(name);
            assert_eq!(game_chromatic_number(&g).unwrap(), chi_g, "{name}");
            assert_eq!(game_coloring_number(&g).unwrap(), col_g, "{name}");
        }
        assert_eq!(game_coloring_number(&spec("star-square:2")).unwrap(), 4);
        assert_eq!(game_coloring_number(&spec("star-square:3")).unwrap(), 5);
    }

    #[test]
    fn cliques() {
        for n in 1..=8 {
            let k = spec(&format!("complete:{n}"));
            assert_eq!(game_coloring_number(&k).unwrap(), n);
            assert_eq!(game_chromatic_number(&k).unwrap(), n);
        }
    }

    #[test]
    fn trees_up_to_seven_vertices() {
        let trees = parse_corpus(include_str!("../corpus/trees_n7.g6")).unwrap();
        assert_eq!(trees.len(), 25);
        for t in &trees {
            let chi_g = game_chromatic_number(&t.graph).unwrap();
            let col_g = game_coloring_number(&t.graph).unwrap();
            assert!(
                chi_g <= col_g && col_g <= 4,
                "{}: {chi_g} {col_g}",
                t.graph6
            );
        }
    }

    #[test]
    fn monotone_in_colors_and_ordered() {
        for seed in 0..40 {
            let g = Graph::random(8, 0.4, seed);
            let chi_g = game_chromatic_number(&g).unwrap();
            for m in chi_g..=g.max_degree() + 1 {
                assert!(alice_wins_coloring_game(&g, m).unwrap());
            }
            assert!(g.chromatic_number().unwrap() <= chi_g);
            assert!(chi_g <= game_coloring_number(&g).unwrap());
        }
    }

    #[test]
    fn limits() {
        let big = Graph::new(13).unwrap();
        assert!(matches!(
            game_chromatic_number(&big),
            Err(ClassicError::TooManyVertices { .. })
        ));
        assert!(game_coloring_number(&Graph::new(17).unwrap()).is_err());
        assert!(game_coloring_number(&Graph::new(16).unwrap()).is_ok());
    }
}

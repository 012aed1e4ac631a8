//! What-if values: the game total after every legal move, at the start of
//! a game and after a few moves.
//!
//!     cargo run --example evaluate

use icgame::families::FamilySpec;
use icgame::game::{apply_move, initial_state, Move, Variant};
use icgame::solver::{best_move, evaluate_moves, SolveLimits};

fn main() {
    let limits = SolveLimits::default();
    let g = "path:5"
        .parse::<FamilySpec>()
        .unwrap()
        .generate()
        .unwrap()
        .graph;
    let mut s = initial_state(&g, Variant::A);
    for opening in [Move::Vertex(2), Move::Vertex(0)] {
        let values = evaluate_moves(&g, &s, limits).unwrap();
        let shown: Vec<String> = values
            .iter()
            .map(|m| format!("{}→{}", m.mv, m.value))
            .collect();
        let best = best_move(&g, &s, limits).unwrap();
        println!(
            "{} to move, round {}: {}  best {:?} (total {})",
            s.mover,
            s.round,
            shown.join("  "),
            best.best_move,
            best.total
        );
        s = apply_move(&g, &s, opening).unwrap();
    }

    // a late position of a graph far too large to solve from the start
    let g3 = FamilySpec::G3(2).generate().unwrap().graph;
    let mut s = initial_state(&g3, Variant::A);
    println!(
        "g3:2 from the start: {}",
        evaluate_moves(&g3, &s, limits).unwrap_err()
    );
    s = apply_move(&g3, &s, Move::Vertex(0)).unwrap();
    while s.uncolored.len() > 20 {
        let v = s.legal_moves().vertices.first().unwrap();
        s = apply_move(&g3, &s, Move::Vertex(v)).unwrap();
    }
    let e = best_move(&g3, &s, limits).unwrap();
    println!(
        "g3:2 with {} vertices left in round {}: total {} colors, {:?} is optimal for {}",
        s.uncolored.len(),
        s.round,
        e.total,
        e.best_move.unwrap(),
        s.mover
    );
}

//! Optimal self-play with a printed transcript, then a game where Bob
//! plays greedily and Alice optimally.
//!
//!     cargo run --example play [spec] [variant]

use icgame::families::FamilySpec;
use icgame::game::{Move, Variant};
use icgame::solver::{optimal_strategy, play_out, SolveLimits};

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "g2:3".into());
    let variant: Variant = std::env::args()
        .nth(2)
        .map_or(Variant::BA, |v| v.parse().unwrap());
    let g = spec
        .parse::<FamilySpec>()
        .unwrap()
        .generate()
        .unwrap()
        .graph;
    let limits = SolveLimits::default();

    let game = play_out(
        &g,
        variant,
        optimal_strategy(&g, limits),
        optimal_strategy(&g, limits),
    )
    .unwrap();
    println!("{spec} {variant}, both optimal: {} colors", game.rounds);
    print!("{}", game.transcript.to_json_lines());

    // Bob takes the lowest legal vertex without looking ahead
    let naive = |s: &icgame::game::GameState| {
        Ok(Move::Vertex(
            s.legal_moves().vertices.first().expect("a legal vertex"),
        ))
    };
    let game = play_out(&g, variant, optimal_strategy(&g, limits), naive).unwrap();
    println!("{spec} {variant}, Bob naive: {} colors", game.rounds);
    let colors: Vec<String> = game
        .final_state
        .coloring()
        .iter()
        .enumerate()
        .map(|(v, c)| format!("{v}:{}", c.unwrap()))
        .collect();
    println!("coloring {}", colors.join(" "));
}

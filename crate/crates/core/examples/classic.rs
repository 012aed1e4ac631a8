//! The classic coloring game and marking game next to the independence
//! coloring game.
//!
//!     cargo run --release --example classic

use icgame::classic::{game_chromatic_number, game_coloring_number};
use icgame::families::FamilySpec;
use icgame::game::Variant;
use icgame::solver::{solve, SolveLimits};

fn main() {
    println!(
        "{:<16} {:>3} {:>6} {:>6} {:>5} {:>5}",
        "graph", "χ", "χ_g", "col_g", "A", "B"
    );
    for s in [
        "path:4",
        "cycle:5",
        "g4:1",
        "g4:2",
        "g4:3",
        "nary:2:2",
        "star-square:2",
        "star-square:3",
    ] {
        let g = s.parse::<FamilySpec>().unwrap().generate().unwrap().graph;
        let show = |r: Result<usize, icgame::classic::ClassicError>| {
            r.map_or("-".to_string(), |x| x.to_string())
        };
        println!(
            "{s:<16} {:>3} {:>6} {:>6} {:>5} {:>5}",
            g.chromatic_number().unwrap(),
            show(game_chromatic_number(&g)),
            show(game_coloring_number(&g)),
            solve(&g, Variant::A, SolveLimits::default()).unwrap(),
            solve(&g, Variant::B, SolveLimits::default()).unwrap(),
        );
    }
}

//! Exact values of all five variants, with search statistics.
//!
//!     cargo run --release --example solve [spec-or-graph6 ...]

use std::time::Instant;

use icgame::families::FamilySpec;
use icgame::game::Variant;
use icgame::graph::Graph;
use icgame::solver::{solve_with_stats, SolveLimits};

fn graph(arg: &str) -> Result<Graph, String> {
    match arg.parse::<FamilySpec>() {
        Ok(spec) => spec.generate().map(|f| f.graph).map_err(|e| e.to_string()),
        Err(_) => Graph::from_graph6(arg).map_err(|e| e.to_string()),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        [
            "path:7",
            "cycle:8",
            "g2:4",
            "g4:4",
            "cubic",
            "nary:2:3",
            "star-square:3",
        ]
        .map(String::from)
        .to_vec()
    } else {
        args
    };
    let limits = SolveLimits::default();
    println!(
        "{:<16} {:>3} {:>3} {:>3} {:>3} {:>3}  {:>9} {:>8}",
        "graph", "A", "AB", "B", "BA", "As", "nodes", "ms"
    );
    for arg in inputs {
        let g = match graph(&arg) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{arg}: {e}");
                continue;
            }
        };
        let start = Instant::now();
        let mut nodes = 0;
        let mut cells = Vec::new();
        for v in Variant::ALL {
            match solve_with_stats(&g, v, limits) {
                Ok((value, stats)) => {
                    nodes += stats.nodes_expanded;
                    cells.push(format!("{value:>3}"));
                }
                Err(e) => {
                    eprintln!("{arg} {v}: {e}");
                    cells.push("  -".into());
                }
            }
        }
        let ms = start.elapsed().as_secs_f64() * 1e3;
        println!("{arg:<16} {}  {nodes:>9} {ms:>8.2}", cells.join(" "));
    }
}

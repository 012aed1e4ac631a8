//! Reading and writing graph6, and a few structural queries.
//!
//!     cargo run --example graph6 [graph6 ...]

use icgame::graph::Graph;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec!["Bw".to_string(), "Ch".into(), "DQw".into()]
    } else {
        args
    };
    for text in inputs {
        let g = match Graph::from_graph6(&text) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let chi = g.chromatic_number().map_or("?".into(), |c| c.to_string());
        let omega = g.clique_number().map_or("?".into(), |c| c.to_string());
        println!(
            "{text}: n={} m={} Δ={} χ={chi} ω={omega} connected={} bipartite={} round-trip={}",
            g.n(),
            g.edge_count(),
            g.max_degree(),
            g.is_connected(),
            g.bipartition().is_some(),
            g.to_graph6()
        );
        let edges: Vec<String> = g.edges().map(|(a, b)| format!("{a}-{b}")).collect();
        println!("  edges {}", edges.join(" "));
    }
}

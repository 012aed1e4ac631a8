//! Builds every named family at a small size, prints its graph6 and the
//! result of its structural self-check.
//!
//!     cargo run --example families [spec ...]

use icgame::families::{self_check, FamilySpec};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs = if args.is_empty() {
        [
            "path:6",
            "cycle:6",
            "complete:4",
            "star:3",
            "g1:3",
            "g2:3",
            "g3:1",
            "g4:2",
            "cubic",
            "nary:2:3",
            "tree-gk:3",
            "star-square:2",
            "split:4:3:5:1",
        ]
        .map(String::from)
        .to_vec()
    } else {
        args
    };
    for s in specs {
        let spec: FamilySpec = match s.parse() {
            Ok(spec) => spec,
            Err(e) => {
                eprintln!("{s}: {e}");
                continue;
            }
        };
        match spec.generate() {
            Ok(fam) => {
                let report = self_check(&spec, &fam.graph);
                let status = if report.passed() { "ok" } else { "FAILED" };
                println!(
                    "{:<16} n={:<4} {} checks {status}  {}",
                    spec.to_string(),
                    fam.graph.n(),
                    report.checks,
                    fam.graph.to_graph6()
                );
                for f in &report.failures {
                    println!("    {f}");
                }
            }
            Err(e) => println!("{:<16} {e}", spec.to_string()),
        }
    }
    // G3 grows as C(4k, 2k): its size is known without building it
    for k in 1..=4 {
        println!("g3:{k} has {} vertices", FamilySpec::G3(k).vertex_count());
    }
}

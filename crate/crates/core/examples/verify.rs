//! Runs every check against the bundled corpus of connected graphs on at
//! most seven vertices and prints one line per check.
//!
//!     cargo run --release --example verify [check,check,...]

use std::time::Instant;

use icgame::corpus;
use icgame::verify::{parse_check_list, run_checks, VerifyOptions};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let ids = parse_check_list(&which).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    let start = Instant::now();
    let reports = run_checks(&ids, &corpus::connected_n7(), &VerifyOptions::default());
    for r in &reports {
        println!("{r}");
    }
    println!("{} checks in {:.2?}", reports.len(), start.elapsed());
    if reports.iter().any(|r| !r.ok()) {
        std::process::exit(1);
    }
}

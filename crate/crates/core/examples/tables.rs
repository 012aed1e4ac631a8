//! Path and cycle values in the four main variants beside their closed
//! forms. The one mismatch, `C_8` with Bob opening, is a genuine value of 2.
//!
//!     cargo run --example tables

use icgame::game::Variant;
use icgame::solver::SolveLimits;
use icgame::verify::value_tables;

fn main() {
    let tags: Vec<&str> = Variant::MAIN.iter().map(|v| v.tag()).collect();
    println!("{:<10} solved ({})   closed form", "graph", tags.join(" "));
    for row in value_tables(12, 12, SolveLimits::default()) {
        let solved: Vec<String> = row
            .values
            .iter()
            .map(|v| v.as_ref().map_or("-".into(), |x| x.to_string()))
            .collect();
        let stated: Vec<String> = row.stated.iter().map(|x| x.to_string()).collect();
        let mark = if row.matches() { "" } else { "  differs" };
        println!(
            "{:<10} {:<18} {}{mark}",
            row.name(),
            solved.join(" "),
            stated.join(" ")
        );
    }
}

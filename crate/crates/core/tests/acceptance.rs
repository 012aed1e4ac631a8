//! The acceptance criteria, one line each. Run with
//! `cargo test -p icgame --test acceptance -- --nocapture` to see them.
//!
//! The cycle-table criterion states `χ^B(C_8) = χ^BA(C_8) = 3`, which is not
//! true (see `cycle_closed_form`). It is evaluated as written and prints
//! FAIL; the test asserts that it is the only failing criterion and that the
//! plain minimax confirms the disagreeing values.

use std::time::{Duration, Instant};

use icgame::classic::game_chromatic_number;
use icgame::corpus;
use icgame::families::FamilySpec;
use icgame::game::Variant;
use icgame::graph::Graph;
use icgame::solver::{oracle_solve, solve, SolveLimits};
use icgame::verify::{
    check_bounds, check_characterizations, check_classic, check_cubic, check_family_lemmas,
    check_oracle, check_skip_dominance, check_split, check_trees, value_tables, CheckReport,
    CorpusRun,
};

struct Outcome {
    name: &'static str,
    ok: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
}

fn criterion(name: &'static str, budget: Duration, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = f();
    let elapsed = start.elapsed();
    Outcome {
        name,
        ok: ok && elapsed <= budget,
        detail: if elapsed > budget {
            format!("{detail}; over budget {budget:?}")
        } else {
            detail
        },
        elapsed,
        budget,
    }
}

fn from_reports(reports: &[CheckReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.ok() && r.is_consistent());
    let detail = reports
        .iter()
        .map(|r| {
            let mut s = format!(
                "{}: {}/{} passed, {} skipped",
                r.check_id, r.passed, r.attempted, r.skipped
            );
            for w in &r.failures {
                s += &format!("; {} {}", w.instance, w.detail);
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" | ");
    (ok, detail)
}

fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .unwrap()
        .generate()
        .unwrap()
        .graph
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn acceptance() {
    let limits = SolveLimits::default();
    let mut out = Vec::new();

    out.push(criterion("path tables", secs(1), || {
        let rows = value_tables(10, 0, limits);
        let bad: Vec<String> = rows
            .iter()
            .filter(|r| !r.matches())
            .map(|r| r.name())
            .collect();
        (
            rows.len() == 10 && bad.is_empty(),
            format!("P1..P10, mismatches {bad:?}"),
        )
    }));

    out.push(criterion("cycle tables", secs(1), || {
        let rows: Vec<_> = value_tables(0, 10, limits);
        let mut bad = Vec::new();
        for r in &rows {
            for ((v, got), want) in Variant::MAIN.iter().zip(&r.values).zip(r.stated) {
                if got.as_ref() != Ok(&want) {
                    bad.push(format!("{} {v}: solved {got:?}, stated {want}", r.name()));
                }
            }
        }
        (
            rows.len() == 8 && bad.is_empty(),
            format!("C3..C10, mismatches {bad:?}"),
        )
    }));

    out.push(criterion("cliques", secs(1), || {
        let mut bad = Vec::new();
        for n in 1..=7 {
            let g = family(&format!("complete:{n}"));
            for v in Variant::ALL {
                if solve(&g, v, limits) != Ok(n as u32) {
                    bad.push(format!("K{n} {v}"));
                }
            }
        }
        (
            bad.is_empty(),
            format!("K1..K7 x 5 variants, mismatches {bad:?}"),
        )
    }));

    let entries = corpus::connected_n7();
    let start = Instant::now();
    let run = CorpusRun::solve(&entries, limits);
    let corpus_time = start.elapsed();

    out.push(criterion(
        "oracle equivalence",
        secs(600) - corpus_time,
        || {
            let r = check_oracle(&run);
            let (ok, detail) = from_reports(std::slice::from_ref(&r));
            (
                ok && r.attempted == 996 && r.skipped == 0,
                format!("{detail} (corpus solved in {corpus_time:?})"),
            )
        },
    ));
    out.push(criterion("value bounds sweep", secs(60), || {
        let r = check_bounds(&run);
        let (ok, detail) = from_reports(std::slice::from_ref(&r));
        (ok && r.skipped == 0, detail)
    }));
    out.push(criterion("value-2 characterizations", secs(60), || {
        let r = check_characterizations(&run);
        let (ok, detail) = from_reports(std::slice::from_ref(&r));
        // only the single vertex lies outside "connected with an edge"
        (ok && r.skipped == 1 && r.skips[0].instance == "@", detail)
    }));

    out.push(criterion("cubic family", secs(600), || {
        let g = family("cubic");
        let values: Vec<_> = Variant::ALL.iter().map(|&v| solve(&g, v, limits)).collect();
        let (ok, detail) = from_reports(&[check_cubic(limits)]);
        (
            ok && g.n() == 16 && values.iter().all(|v| *v == Ok(4)),
            format!("n={}, values {values:?}; {detail}", g.n()),
        )
    }));

    out.push(criterion("split graphs", secs(300), || {
        let r = check_split(0..50, limits);
        let (ok, detail) = from_reports(std::slice::from_ref(&r));
        (ok && r.passed == 53, detail)
    }));

    out.push(criterion("family lemmas", secs(900), || {
        let r = check_family_lemmas(limits);
        let (ok, detail) = from_reports(std::slice::from_ref(&r));
        let skips_are_g3 = r
            .skips
            .iter()
            .all(|s| s.instance.starts_with("g3:") && !s.instance.starts_with("g3:1"));
        (ok && skips_are_g3, detail)
    }));

    out.push(criterion("classic comparisons", secs(900), || {
        let (ok, detail) = from_reports(&[check_classic(limits)]);
        let g4: Vec<_> = (1..=3)
            .map(|k| game_chromatic_number(&family(&format!("g4:{k}"))))
            .collect();
        let direct = g4.iter().zip(3..).all(|(x, want)| *x == Ok(want));
        (ok && direct, format!("χ_g(G4(1..3)) = {g4:?}; {detail}"))
    }));

    out.push(criterion("trees", secs(600), || {
        let trees = check_trees(limits, 200);
        let skip = check_skip_dominance(&run);
        let t23 = solve(&family("nary:2:3"), Variant::AliceSkip, limits);
        let (ok, detail) = from_reports(&[trees, skip]);
        (
            ok && matches!(t23, Ok(x) if x >= 3),
            format!("T(2,3) AliceSkip {t23:?}; {detail}"),
        )
    }));

    for o in &out {
        println!(
            "{} {:<28} {:>9.1?} (budget {:?})  {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.name,
            o.elapsed,
            o.budget,
            o.detail
        );
    }

    let failing: Vec<&str> = out.iter().filter(|o| !o.ok).map(|o| o.name).collect();
    assert_eq!(failing, ["cycle tables"], "unexpected failures");
    // the disagreement is real: the plain minimax gives 2 as well
    let c8 = family("cycle:8");
    for v in [Variant::B, Variant::BA] {
        assert_eq!(oracle_solve(&c8, v), Ok(2));
        assert_eq!(solve(&c8, v, limits), Ok(2));
    }
}

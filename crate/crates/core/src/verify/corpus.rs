//! Checks that run over a corpus of graphs. Every graph is solved once in
//! all five variants (in parallel) and the checks read from that run.

use rayon::prelude::*;

use crate::game::Variant;
use crate::graph::{CorpusEntry, Graph};
use crate::solver::{oracle_solve, solve_all_variants, SolveError, SolveLimits, ORACLE_LIMIT};

use super::predicates::{predicate_chi2_first_player, predicate_chi2_second_player};
use super::report::CheckReport;

/// Solver output for one corpus graph.
#[derive(Debug, Clone)]
pub struct SolvedGraph {
    pub graph6: String,
    pub graph: Graph,
    /// In the order of [`Variant::ALL`].
    pub values: Result<[u32; 5], SolveError>,
    /// The plain minimax for graphs within the oracle limit.
    pub oracle: Option<[u32; 5]>,
}

/// All graphs of a corpus, solved, sorted by graph6.
#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub graphs: Vec<SolvedGraph>,
}

fn solve_one(graph6: String, graph: Graph, limits: SolveLimits) -> SolvedGraph {
    let values = solve_all_variants(&graph, limits);
    let oracle = (graph.n() <= ORACLE_LIMIT)
        .then(|| Variant::ALL.map(|v| oracle_solve(&graph, v).expect("within the oracle limit")));
    SolvedGraph {
        graph6,
        graph,
        values,
        oracle,
    }
}

impl CorpusRun {
    /// Solves every graph on the current rayon pool.
    pub fn solve(entries: &[CorpusEntry], limits: SolveLimits) -> Self {
        Self::solve_graphs(
            entries
                .iter()
                .map(|e| (e.graph6.clone(), e.graph.clone()))
                .collect(),
            limits,
        )
    }

    pub fn solve_graphs(graphs: Vec<(String, Graph)>, limits: SolveLimits) -> Self {
        let mut graphs: Vec<SolvedGraph> = graphs
            .into_par_iter()
            .map(|(g6, g)| solve_one(g6, g, limits))
            .collect();
        graphs.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        CorpusRun { graphs }
    }

    /// Applies `f` to each solved graph, skipping unsolved ones.
    fn each(
        &self,
        id: &str,
        mut f: impl FnMut(&mut CheckReport, &SolvedGraph, [u32; 5]),
    ) -> CheckReport {
        let mut report = CheckReport::new(id);
        for sg in &self.graphs {
            match &sg.values {
                Ok(values) => f(&mut report, sg, *values),
                Err(e) => report.skip(&sg.graph6, e.to_string()),
            }
        }
        report
    }
}

fn fmt_values(values: [u32; 5]) -> String {
    Variant::ALL
        .iter()
        .zip(values)
        .map(|(v, x)| format!("{v}={x}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The search agrees with the plain minimax in all five variants.
pub fn check_oracle(run: &CorpusRun) -> CheckReport {
    run.each("oracle", |r, sg, values| match sg.oracle {
        Some(oracle) => r.expect(oracle == values, &sg.graph6, || {
            format!(
                "search {} vs oracle {}",
                fmt_values(values),
                fmt_values(oracle)
            )
        }),
        None => r.skip(&sg.graph6, format!("more than {ORACLE_LIMIT} vertices")),
    })
}

/// The two value-2 characterizations on connected graphs with an edge.
pub fn check_characterizations(run: &CorpusRun) -> CheckReport {
    run.each("characterizations", |r, sg, [a, ab, b, ba, _]| {
        let (first, second) = match (
            predicate_chi2_first_player(&sg.graph),
            predicate_chi2_second_player(&sg.graph),
        ) {
            (Ok(f), Ok(s)) => (f, s),
            (Err(e), _) | (_, Err(e)) => return r.skip(&sg.graph6, format!("precondition: {e}")),
        };
        let ok = first == (a == 2) && first == (ab == 2) && second == (b == 2) && second == (ba == 2);
        r.expect(ok, &sg.graph6, || {
            format!("first-player predicate {first}, second-player predicate {second}, A={a} AB={ab} B={b} BA={ba}")
        })
    })
}

/// `χ ≤ value ≤ Δ + 1` in the four main variants, and value 1 exactly on
/// edgeless graphs in all five.
pub fn check_bounds(run: &CorpusRun) -> CheckReport {
    run.each("bounds", |r, sg, values| {
        let g = &sg.graph;
        let chi = match g.chromatic_number() {
            Ok(chi) => chi as u32,
            Err(e) => return r.skip(&sg.graph6, e.to_string()),
        };
        let delta = g.max_degree() as u32;
        let edgeless = g.edge_count() == 0;
        let ok = values[..4].iter().all(|&x| chi <= x && x <= delta + 1)
            && values.iter().all(|&x| (x == 1) == edgeless || g.n() == 0);
        r.expect(ok, &sg.graph6, || {
            format!("χ={chi} Δ={delta} {}", fmt_values(values))
        })
    })
}

/// AliceSkip never exceeds AB, BA or B.
pub fn check_skip_dominance(run: &CorpusRun) -> CheckReport {
    run.each("skip-dominance", |r, sg, values @ [_, ab, b, ba, skip]| {
        r.expect(skip <= ab.min(ba).min(b), &sg.graph6, || fmt_values(values))
    })
}

/// An induced `P_7` forces at least three rounds in every main variant.
pub fn check_p7(run: &CorpusRun) -> CheckReport {
    run.each("p7", |r, sg, values| {
        let has_p7 = sg.graph.has_induced_path(7);
        r.expect(
            !has_p7 || values[..4].iter().all(|&x| x >= 3),
            &sg.graph6,
            || format!("induced P7 but {}", fmt_values(values)),
        )
    })
}

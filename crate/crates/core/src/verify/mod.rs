//! Checks of the solver against closed forms, structural characterizations
//! and family lemmas. Each check produces a [`CheckReport`] listing every
//! instance as passed, failed (with a witness) or skipped (with a reason).

mod corpus;
mod instances;
mod predicates;
mod report;

pub use corpus::{
    check_bounds, check_characterizations, check_oracle, check_p7, check_skip_dominance, CorpusRun,
    SolvedGraph,
};
pub use instances::{
    check_classic, check_cliques, check_component_lemma, check_cubic, check_family_lemmas,
    check_split, check_tables, check_trees, cycle_closed_form, path_closed_form, split_case,
    value_tables, FirstRoundBound, SplitCase, TableRow, CUBIC_FIRST_ROUND,
};
pub use predicates::{predicate_chi2_first_player, predicate_chi2_second_player, PredicateError};
pub use report::{CheckReport, Skip, Witness};

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{CorpusEntry, Graph};
use crate::solver::SolveLimits;

/// A named check, as accepted by `icg verify --check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Oracle,
    Characterizations,
    Bounds,
    SkipDominance,
    P7,
    Tables,
    Cliques,
    Split,
    Cubic,
    Lemmas,
    Classic,
    Trees,
    ComponentLemma,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::Oracle,
        CheckId::Characterizations,
        CheckId::Bounds,
        CheckId::SkipDominance,
        CheckId::P7,
        CheckId::Tables,
        CheckId::Cliques,
        CheckId::Split,
        CheckId::Cubic,
        CheckId::Lemmas,
        CheckId::Classic,
        CheckId::Trees,
        CheckId::ComponentLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Oracle => "oracle",
            CheckId::Characterizations => "characterizations",
            CheckId::Bounds => "bounds",
            CheckId::SkipDominance => "skip-dominance",
            CheckId::P7 => "p7",
            CheckId::Tables => "tables",
            CheckId::Cliques => "cliques",
            CheckId::Split => "split",
            CheckId::Cubic => "cubic",
            CheckId::Lemmas => "lemmas",
            CheckId::Classic => "classic",
            CheckId::Trees => "trees",
            CheckId::ComponentLemma => "component-lemma",
        }
    }

    /// Whether the check needs every corpus graph solved in all variants.
    pub fn needs_solved_corpus(self) -> bool {
        matches!(
            self,
            CheckId::Oracle
                | CheckId::Characterizations
                | CheckId::Bounds
                | CheckId::SkipDominance
                | CheckId::P7
        )
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check {0:?}")]
pub struct UnknownCheck(pub String);

impl FromStr for CheckId {
    type Err = UnknownCheck;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

/// Parses a comma-separated list; `all` expands to every check.
pub fn parse_check_list(s: &str) -> Result<Vec<CheckId>, UnknownCheck> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend(CheckId::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub limits: SolveLimits,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Seeds for random split graphs.
    pub split_seeds: Range<u64>,
    pub random_trees: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            limits: SolveLimits::default(),
            threads: None,
            split_seeds: 0..50,
            random_trees: 200,
        }
    }
}

fn run_one(
    id: CheckId,
    run: Option<&CorpusRun>,
    graphs: &[(String, Graph)],
    opts: &VerifyOptions,
) -> CheckReport {
    let limits = opts.limits;
    match id {
        CheckId::Oracle => check_oracle(run.expect("corpus solved")),
        CheckId::Characterizations => check_characterizations(run.expect("corpus solved")),
        CheckId::Bounds => check_bounds(run.expect("corpus solved")),
        CheckId::SkipDominance => check_skip_dominance(run.expect("corpus solved")),
        CheckId::P7 => check_p7(run.expect("corpus solved")),
        CheckId::Tables => check_tables(limits),
        CheckId::Cliques => check_cliques(limits),
        CheckId::Split => check_split(opts.split_seeds.clone(), limits),
        CheckId::Cubic => check_cubic(limits),
        CheckId::Lemmas => check_family_lemmas(limits),
        CheckId::Classic => check_classic(limits),
        CheckId::Trees => check_trees(limits, opts.random_trees),
        // the trees of the corpus
        CheckId::ComponentLemma => {
            let trees: Vec<_> = graphs
                .iter()
                .filter(|(_, g)| g.edge_count() + 1 == g.n())
                .cloned()
                .collect();
            check_component_lemma(&trees, limits)
        }
    }
}

/// Runs `ids` in order against `corpus`. The corpus is solved once, and
/// only if some requested check needs it.
pub fn run_checks(
    ids: &[CheckId],
    corpus: &[CorpusEntry],
    opts: &VerifyOptions,
) -> Vec<CheckReport> {
    let work = || {
        let graphs: Vec<(String, Graph)> = corpus
            .iter()
            .map(|e| (e.graph6.clone(), e.graph.clone()))
            .collect();
        let run = ids
            .iter()
            .any(|c| c.needs_solved_corpus())
            .then(|| CorpusRun::solve_graphs(graphs.clone(), opts.limits));
        ids.iter()
            .map(|&id| run_one(id, run.as_ref(), &graphs, opts))
            .collect()
    };
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
        }
        assert_eq!(parse_check_list("all").unwrap().len(), 13);
        assert_eq!(
            parse_check_list("p7, oracle,p7").unwrap(),
            [CheckId::Oracle, CheckId::P7]
        );
        assert!(parse_check_list("nope").is_err());
    }

    #[test]
    fn runs_on_trees() {
        let opts = VerifyOptions {
            threads: Some(2),
            split_seeds: 0..3,
            random_trees: 10,
            ..VerifyOptions::default()
        };
        let ids = parse_check_list("oracle,bounds,component-lemma,trees,split").unwrap();
        let reports = run_checks(&ids, &crate::corpus::trees_n7(), &opts);
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert!(r.ok() && r.is_consistent(), "{r}");
        }
        assert_eq!(reports[0].attempted, 25);
    }
}

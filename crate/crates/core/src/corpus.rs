//! Bundled graph6 corpora.

use crate::graph::{parse_corpus, CorpusEntry};

/// All 996 connected graphs on at most 7 vertices.
pub const CONNECTED_N7: &str = include_str!("../corpus/connected_n7.g6");

/// All 25 trees on at most 7 vertices.
pub const TREES_N7: &str = include_str!("../corpus/trees_n7.g6");

pub fn connected_n7() -> Vec<CorpusEntry> {
    parse_corpus(CONNECTED_N7).expect("bundled corpus parses")
}

pub fn trees_n7() -> Vec<CorpusEntry> {
    parse_corpus(TREES_N7).expect("bundled corpus parses")
}

#[cfg(test)]
mod tests {
    #[test]
    fn sizes() {
        assert_eq!(super::connected_n7().len(), 996);
        let trees = super::trees_n7();
        assert_eq!(trees.len(), 25);
        assert!(trees
            .iter()
            .all(|t| t.graph.is_connected() && t.graph.edge_count() + 1 == t.graph.n()));
    }
}

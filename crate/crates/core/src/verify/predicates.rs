//! Structural conditions equivalent to the value-2 cases of the game.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Edgeless,
}

fn precondition(g: &Graph) -> Result<(), PredicateError> {
    if g.edge_count() == 0 {
        return Err(PredicateError::Edgeless);
    }
    if !g.is_connected() {
        return Err(PredicateError::Disconnected);
    }
    Ok(())
}

/// Bipartite, and some vertex of one part is adjacent to the whole other
/// part. Equivalent to value 2 when Alice opens the game.
pub fn predicate_chi2_first_player(g: &Graph) -> Result<bool, PredicateError> {
    precondition(g)?;
    let Some((x1, x2)) = g.bipartition() else {
        return Ok(false);
    };
    let dominates =
        |part: &VertexSet, other: &VertexSet| part.iter().any(|x| g.degree(x) == other.len());
    Ok(dominates(&x1, &x2) || dominates(&x2, &x1))
}

/// Bipartite, and for every vertex `x` of either part there is `y` in the
/// same part with `N(x) ∪ N(y)` equal to the other part. Equivalent to
/// value 2 when Bob opens the game.
pub fn predicate_chi2_second_player(g: &Graph) -> Result<bool, PredicateError> {
    precondition(g)?;
    let Some((x1, x2)) = g.bipartition() else {
        return Ok(false);
    };
    let covered = |part: &VertexSet, other: &VertexSet| {
        part.iter().all(|x| {
            let missing = other.difference(g.neighbors(x));
            part.iter().any(|y| missing.is_subset(g.neighbors(y)))
        })
    };
    Ok(covered(&x1, &x2) && covered(&x2, &x1))
}

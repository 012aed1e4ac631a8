//! Undirected simple graphs stored as per-vertex bitset rows.

mod graph6;
mod structure;
mod vertex_set;

pub use graph6::{parse_corpus, CorpusEntry};
pub use vertex_set::{Iter as VertexIter, VertexSet};

use thiserror::Error;

/// Largest vertex count a dense [`Graph`] accepts unless a caller asks for
/// a different capacity.
pub const DEFAULT_CAPACITY: usize = 8192;

/// Vertex-count limit for [`Graph::clique_number`].
pub const CLIQUE_LIMIT: usize = 64;

/// Vertex-count limit for [`Graph::chromatic_number`].
pub const CHROMATIC_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices, capacity is {capacity}")]
    CapacityExceeded { n: usize, capacity: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{operation} supports at most {limit} vertices, graph has {n}")]
    LimitExceeded {
        operation: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("graph6: {0}")]
    Graph6(String),
}

/// An undirected simple graph on vertices `0..n`.
///
/// Row `i` of the adjacency holds `N(i)`. Rows are kept symmetric and
/// loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices, checked against [`DEFAULT_CAPACITY`].
    pub fn new(n: usize) -> Result<Self, GraphError> {
        Self::with_capacity(n, DEFAULT_CAPACITY)
    }

    pub fn with_capacity(n: usize, capacity: usize) -> Result<Self, GraphError> {
        if n > capacity {
            return Err(GraphError::CapacityExceeded { n, capacity });
        }
        Ok(Graph {
            adj: vec![VertexSet::empty(n); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Adjacency rows as 64-bit masks. `None` when `n > 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        self.adj.iter().map(VertexSet::to_mask).collect()
    }

    /// Checks symmetry, irreflexivity and that every row stays inside the
    /// vertex range. Constructors maintain these; tests call this directly.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.n();
        for (i, row) in self.adj.iter().enumerate() {
            if row.universe() != n {
                return Err(format!("row {i} has universe {} != {n}", row.universe()));
            }
            if row.contains(i) {
                return Err(format!("self-loop at {i}"));
            }
            if let Some(j) = row.iter().find(|&j| !self.adj[j].contains(i)) {
                return Err(format!("asymmetric edge {i}-{j}"));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

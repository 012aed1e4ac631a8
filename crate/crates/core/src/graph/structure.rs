use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError, VertexSet, CHROMATIC_LIMIT, CLIQUE_LIMIT};

impl Graph {
    /// Δ(G); 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Largest degree inside the subgraph induced by `within`.
    pub fn max_degree_within(&self, within: &VertexSet) -> usize {
        within
            .iter()
            .map(|v| self.neighbors(v).intersection_len(within))
            .max()
            .unwrap_or(0)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut frontier = comp.clone();
            left.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n());
                for u in &frontier {
                    next.union_with(self.neighbors(u));
                }
                next.intersect_with(&left);
                left.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A 2-coloring `(X1, X2)` if the graph is bipartite. In every component
    /// the smallest vertex lands in `X1`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let x1 = VertexSet::from_iter_in(n, (0..n).filter(|&v| side[v] == Some(false)));
        let x2 = x1.complement();
        Some((x1, x2))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).is_disjoint(set))
    }

    /// ω(G) by branch and bound over candidate sets.
    pub fn clique_number(&self) -> Result<usize, GraphError> {
        let adj = self.small_masks("clique_number", CLIQUE_LIMIT)?;
        let mut best = 0;
        expand_clique(&adj, full_mask(self.n()), 0, &mut best);
        Ok(best)
    }

    /// χ(G) by increasing k until a k-coloring exists.
    pub fn chromatic_number(&self) -> Result<usize, GraphError> {
        let adj = self.small_masks("chromatic_number", CHROMATIC_LIMIT)?;
        let n = self.n();
        if n == 0 {
            return Ok(0);
        }
        let mut k = self.clique_number()?;
        loop {
            let mut classes = Vec::with_capacity(k);
            if colorable(&adj, full_mask(n), &mut classes, k) {
                return Ok(k);
            }
            k += 1;
        }
    }

    /// Number of colors used by first-fit in vertex order; an upper bound on χ.
    pub fn greedy_color_count(&self) -> usize {
        let mut color = vec![usize::MAX; self.n()];
        let mut used = 0;
        for v in 0..self.n() {
            let taken: Vec<usize> = self.neighbors(v).iter().map(|u| color[u]).collect();
            let c = (0..).find(|c| !taken.contains(c)).unwrap();
            color[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    /// Whether some `k` vertices induce a path `P_k`.
    pub fn has_induced_path(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k > self.n() {
            return false;
        }
        let mut path = Vec::with_capacity(k);
        (0..self.n()).any(|s| {
            path.clear();
            path.push(s);
            self.extend_induced_path(&mut path, &VertexSet::empty(self.n()), k)
        })
    }

    /// `blocked` holds the closed neighborhoods of every path vertex except
    /// the last one.
    fn extend_induced_path(&self, path: &mut Vec<usize>, blocked: &VertexSet, k: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == k {
            // each path is accepted from its smaller endpoint only
            return k == 1 || path[0] < last;
        }
        let mut candidates = self.neighbors(last).difference(blocked);
        for &p in path.iter() {
            candidates.remove(p);
        }
        if candidates.is_empty() {
            return false;
        }
        let mut next_blocked = blocked.union(self.neighbors(last));
        next_blocked.insert(last);
        for w in &candidates {
            path.push(w);
            if self.extend_induced_path(path, &next_blocked, k) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|` in increasing
    /// vertex order. Returns the graph and the old id of each new vertex.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::with_capacity(old.len(), usize::MAX).unwrap();
        for (i, &v) in old.iter().enumerate() {
            for w in self.neighbors(v).intersection(set).iter() {
                if new_id[w] > i {
                    g.add_edge(i, new_id[w]).unwrap();
                }
            }
        }
        (g, old)
    }

    /// `self □ other`; vertex `(u, v)` gets id `u * other.n() + v`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        let m = other.n();
        let mut g = Graph::new(self.n() * m)?;
        for u in 0..self.n() {
            for (a, b) in other.edges() {
                g.add_edge(u * m + a, u * m + b)?;
            }
        }
        for (a, b) in self.edges() {
            for v in 0..m {
                g.add_edge(a * m + v, b * m + v)?;
            }
        }
        Ok(g)
    }

    /// G(n, p) with a ChaCha8 stream seeded from `seed`; pairs are drawn in
    /// `(i, j)`, `i < j`, lexicographic order.
    pub fn random(n: usize, p: f64, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::new(n).expect("random graph within capacity");
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p.clamp(0.0, 1.0)) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    fn small_masks(&self, operation: &'static str, limit: usize) -> Result<Vec<u64>, GraphError> {
        if self.n() > limit {
            return Err(GraphError::LimitExceeded {
                operation,
                n: self.n(),
                limit,
            });
        }
        Ok(self.adjacency_masks().expect("limit is at most 64"))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn expand_clique(adj: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        expand_clique(adj, cand & adj[v], size + 1, best);
        cand &= !(1u64 << v);
    }
}

/// Backtracking k-coloring. Classes are opened in order, one at a time, so
/// each partition is visited under a single labeling.
fn colorable(adj: &[u64], uncolored: u64, classes: &mut Vec<u64>, k: usize) -> bool {
    if uncolored == 0 {
        return true;
    }
    // most saturated vertex first
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0u32);
    let mut rest = uncolored;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let sat = classes.iter().filter(|&&c| c & adj[v] != 0).count();
        let key = (sat, (adj[v] & uncolored).count_ones());
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let v = pick;
    let bit = 1u64 << v;
    if pick_key.0 == k && classes.len() == k {
        return false;
    }
    for c in 0..classes.len() {
        if classes[c] & adj[v] == 0 {
            classes[c] |= bit;
            if colorable(adj, uncolored & !bit, classes, k) {
                return true;
            }
            classes[c] &= !bit;
        }
    }
    if classes.len() < k {
        classes.push(bit);
        if colorable(adj, uncolored & !bit, classes, k) {
            return true;
        }
        classes.pop();
    }
    false
}

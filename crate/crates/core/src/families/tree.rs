use crate::graph::{Graph, GraphError, DEFAULT_CAPACITY};

/// The perfect `arity`-ary tree of depth `depth`, described implicitly.
///
/// Vertices are numbered in level order: the root is 0, then level 1 left
/// to right, and so on. A vertex's label is the sequence of child indices
/// (each in `1..=arity`) on the way down from the root, so the root has the
/// empty label `()` and the children of `(l)` are `(l1) .. (l arity)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaryTree {
    arity: usize,
    depth: usize,
}

impl NaryTree {
    pub fn new(arity: usize, depth: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        NaryTree { arity, depth }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Number of vertices on `level`, saturating on overflow.
    pub fn level_size(&self, level: usize) -> usize {
        self.arity.saturating_pow(level as u32)
    }

    /// Id of the first vertex on `level`.
    pub fn level_offset(&self, level: usize) -> usize {
        (0..level).fold(0usize, |acc, l| acc.saturating_add(self.level_size(l)))
    }

    pub fn vertex_count(&self) -> usize {
        self.level_offset(self.depth + 1)
    }

    pub fn leaf_count(&self) -> usize {
        self.level_size(self.depth)
    }

    pub fn level_of(&self, id: usize) -> usize {
        let mut level = 0;
        while self.level_offset(level + 1) <= id {
            level += 1;
        }
        level
    }

    pub fn parent(&self, id: usize) -> Option<usize> {
        if id == 0 {
            return None;
        }
        let level = self.level_of(id);
        let pos = id - self.level_offset(level);
        Some(self.level_offset(level - 1) + pos / self.arity)
    }

    /// Children ids; empty for leaves.
    pub fn children(&self, id: usize) -> std::ops::Range<usize> {
        let level = self.level_of(id);
        if level == self.depth {
            return 0..0;
        }
        let pos = id - self.level_offset(level);
        let first = self.level_offset(level + 1) + pos * self.arity;
        first..first + self.arity
    }

    /// Label digits of `id`, each in `1..=arity`.
    pub fn label(&self, id: usize) -> Vec<usize> {
        let level = self.level_of(id);
        let mut pos = id - self.level_offset(level);
        let mut digits = vec![0; level];
        for slot in digits.iter_mut().rev() {
            *slot = pos % self.arity + 1;
            pos /= self.arity;
        }
        digits
    }

    pub fn id_of(&self, label: &[usize]) -> Option<usize> {
        if label.len() > self.depth || label.iter().any(|&d| d == 0 || d > self.arity) {
            return None;
        }
        let pos = label.iter().fold(0, |acc, &d| acc * self.arity + (d - 1));
        Some(self.level_offset(label.len()) + pos)
    }

    /// Label rendered the way the construction writes it: `()`, `(1)`,
    /// `(12)`. Digits are dot-separated when the arity exceeds 9.
    pub fn label_string(&self, id: usize) -> String {
        let sep = if self.arity > 9 { "." } else { "" };
        let digits: Vec<String> = self.label(id).iter().map(usize::to_string).collect();
        format!("({})", digits.join(sep))
    }

    /// Walks every vertex checking arity, level sizes and child ranges, and
    /// checks parent/label consistency on the first 10 000 ids plus a stride
    /// sample. Uses O(1) memory, so it also covers trees too large to
    /// materialize.
    pub fn verify_structure(&self) -> Result<(), String> {
        let n = self.vertex_count();
        let expected: usize = (0..=self.depth).map(|j| self.level_size(j)).sum();
        if n != expected {
            return Err(format!("vertex count {n} != {expected}"));
        }
        let mut leaves = 0usize;
        let mut level = 0usize;
        let mut next_level_at = 1usize;
        for id in 0..n {
            if id == next_level_at {
                level += 1;
                next_level_at = self.level_offset(level + 1);
            }
            let kids = if level == self.depth {
                leaves += 1;
                0..0
            } else {
                let pos = id - self.level_offset(level);
                let first = next_level_at + pos * self.arity;
                first..first + self.arity
            };
            if level < self.depth && kids.len() != self.arity {
                return Err(format!("vertex {id} has {} children", kids.len()));
            }
            if kids.start < kids.end && (kids.start <= id || kids.end > n) {
                return Err(format!("children of {id} out of range"));
            }
            // parent via the public arithmetic must invert the child range
            if id > 0 && (id % 997 == 0 || id < 10_000) {
                let p = self.parent(id).unwrap();
                if !self.children(p).contains(&id) {
                    return Err(format!("parent({id}) = {p} does not list it as a child"));
                }
                let (lp, mut lc) = (self.label(p), self.label(id));
                let last = lc.pop();
                if lc != lp || last.is_none() {
                    return Err(format!("label of {id} does not extend its parent's"));
                }
            }
        }
        if leaves != self.leaf_count() || level != self.depth {
            return Err(format!(
                "{leaves} leaves at depth {level}, expected {} at depth {}",
                self.leaf_count(),
                self.depth
            ));
        }
        Ok(())
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        self.to_graph_with_capacity(DEFAULT_CAPACITY)
    }

    pub fn to_graph_with_capacity(&self, capacity: usize) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        let mut g = Graph::with_capacity(n, capacity)?;
        for id in 1..n {
            g.add_edge(self.parent(id).unwrap(), id)?;
        }
        Ok(g)
    }
}

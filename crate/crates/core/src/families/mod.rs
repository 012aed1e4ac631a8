//! Generators for the graph families used throughout the crate, each with a
//! structural self-check.
//!
//! Every generator documents its labeling so that named vertices of a
//! construction map to fixed ids.

mod tree;

pub use tree::NaryTree;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, DEFAULT_CAPACITY};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter(msg.into())
}

/// A graph family member, named by its construction parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n}`, center 0.
    Star(usize),
    /// `K_{k,k}` minus the perfect matching `a_i b_i`.
    G1(usize),
    /// `G1(k)` plus a universal vertex.
    G2(usize),
    /// The bipartite `X ∪ Y ∪ Z` construction with `|Y| = 4k`.
    G3(usize),
    /// `G1(k)` plus two non-adjacent vertices joined to all of it.
    G4(usize),
    /// Three chained diamonds spliced between `v1` and `v14` of `h`.
    CubicGadget {
        h: Graph,
        v1: usize,
        v14: usize,
    },
    NaryTree {
        arity: usize,
        depth: usize,
    },
    /// `K_1`, `P_2`, then `T(3·2^(k−3) − 1, 2k − 3)` for `k ≥ 3`.
    TreeGk(usize),
    /// `K_{1,n} □ K_{1,n}`.
    StarSquare(usize),
    /// Clique on `0..clique`, independent set after it, `cross_edges`
    /// clique-to-independent edges drawn from a seeded shuffle.
    SplitGraph {
        clique: usize,
        indep: usize,
        cross_edges: usize,
        seed: u64,
    },
}

/// A generated graph with one display label per vertex.
#[derive(Debug, Clone)]
pub struct Family {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl Family {
    /// Tab-separated `vertexId<TAB>label` lines.
    pub fn label_lines(&self) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{i}\t{l}\n"))
            .collect()
    }
}

impl FamilySpec {
    /// The diamond `K_4 − e` on `0..4` with the edge `0–3` missing, and its
    /// two degree-2 vertices.
    pub fn cubic_diamond() -> Self {
        let h = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        FamilySpec::CubicGadget { h, v1: 0, v14: 3 }
    }

    /// Arity and depth of `TreeGk(k)` for `k ≥ 3`.
    pub fn tree_gk_shape(k: usize) -> Option<NaryTree> {
        if k < 3 || k > 40 {
            return None;
        }
        Some(NaryTree::new(3 * (1usize << (k - 3)) - 1, 2 * k - 3))
    }

    /// The vertex count the spec would produce, without building anything.
    /// Saturates at `usize::MAX`.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::G1(k) => 2 * k,
            FamilySpec::G2(k) => 2 * k + 1,
            FamilySpec::G4(k) => 2 * k + 2,
            FamilySpec::G3(k) => binomial(4 * k, 2 * k)
                .and_then(|s| s.checked_mul(2 * k))
                .and_then(|z| z.checked_add(1 + 4 * k))
                .unwrap_or(usize::MAX),
            FamilySpec::CubicGadget { h, .. } => h.n() + 12,
            FamilySpec::NaryTree { arity, depth } => {
                NaryTree::new((*arity).max(1), *depth).vertex_count()
            }
            FamilySpec::TreeGk(1) => 1,
            FamilySpec::TreeGk(2) => 2,
            FamilySpec::TreeGk(k) => {
                Self::tree_gk_shape(*k).map_or(usize::MAX, |t| t.vertex_count())
            }
            FamilySpec::StarSquare(n) => (n + 1) * (n + 1),
            FamilySpec::SplitGraph { clique, indep, .. } => clique + indep,
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        match self {
            FamilySpec::Path(0) | FamilySpec::Complete(0) | FamilySpec::Star(0) => {
                Err(invalid("size must be positive"))
            }
            FamilySpec::Cycle(n) if *n < 3 => Err(invalid("a cycle needs at least 3 vertices")),
            FamilySpec::G1(0) | FamilySpec::G2(0) | FamilySpec::G3(0) | FamilySpec::G4(0) => {
                Err(invalid("k must be positive"))
            }
            FamilySpec::TreeGk(0) => Err(invalid("k must be positive")),
            FamilySpec::NaryTree { arity: 0, .. } => Err(invalid("arity must be positive")),
            FamilySpec::StarSquare(0) => Err(invalid("n must be positive")),
            FamilySpec::SplitGraph { clique, indep, .. } if clique + indep == 0 => {
                Err(invalid("split graph needs at least one vertex"))
            }
            FamilySpec::CubicGadget { h, v1, v14 } => check_cubic_host(h, *v1, *v14),
            _ => Ok(()),
        }
    }

    /// Builds the graph, within [`DEFAULT_CAPACITY`].
    pub fn generate(&self) -> Result<Family, FamilyError> {
        self.generate_with_capacity(DEFAULT_CAPACITY)
    }

    pub fn generate_with_capacity(&self, capacity: usize) -> Result<Family, FamilyError> {
        self.validate()?;
        let n = self.vertex_count();
        if n > capacity {
            return Err(GraphError::CapacityExceeded { n, capacity }.into());
        }
        let mut g = Graph::with_capacity(n, capacity)?;
        let mut labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        match self {
            FamilySpec::Path(n) => {
                for i in 1..*n {
                    g.add_edge(i - 1, i)?;
                }
            }
            FamilySpec::Cycle(n) => {
                for i in 0..*n {
                    g.add_edge(i, (i + 1) % n)?;
                }
            }
            FamilySpec::Complete(n) => {
                for i in 0..*n {
                    for j in i + 1..*n {
                        g.add_edge(i, j)?;
                    }
                }
            }
            FamilySpec::Star(n) => {
                labels[0] = "center".into();
                for i in 1..=*n {
                    g.add_edge(0, i)?;
                }
            }
            FamilySpec::G1(k) | FamilySpec::G2(k) | FamilySpec::G4(k) => {
                let k = *k;
                for i in 0..k {
                    labels[i] = format!("a{}", i + 1);
                    labels[k + i] = format!("b{}", i + 1);
                    for j in 0..k {
                        if i != j {
                            g.add_edge(i, k + j)?;
                        }
                    }
                }
                let extra: &[&str] = match self {
                    FamilySpec::G2(_) => &["u"],
                    FamilySpec::G4(_) => &["u", "v"],
                    _ => &[],
                };
                for (e, name) in extra.iter().enumerate() {
                    let id = 2 * k + e;
                    labels[id] = (*name).into();
                    for w in 0..2 * k {
                        g.add_edge(id, w)?;
                    }
                }
            }
            FamilySpec::G3(k) => build_g3(*k, &mut g, &mut labels)?,
            FamilySpec::CubicGadget { h, v1, v14 } => {
                build_cubic(h, *v1, *v14, &mut g, &mut labels)?
            }
            FamilySpec::NaryTree { arity, depth } => {
                let t = NaryTree::new(*arity, *depth);
                g = t.to_graph_with_capacity(capacity)?;
                labels = (0..n).map(|id| t.label_string(id)).collect();
            }
            FamilySpec::TreeGk(k) => match k {
                1 => labels = vec!["()".into()],
                2 => {
                    g.add_edge(0, 1)?;
                    labels = vec!["()".into(), "(1)".into()];
                }
                _ => {
                    let t = Self::tree_gk_shape(*k).expect("k >= 3");
                    g = t.to_graph_with_capacity(capacity)?;
                    labels = (0..n).map(|id| t.label_string(id)).collect();
                }
            },
            FamilySpec::StarSquare(m) => {
                let star = FamilySpec::Star(*m).generate()?.graph;
                g = star.cartesian_product(&star)?;
                let s = m + 1;
                labels = (0..s * s)
                    .map(|id| format!("({},{})", id / s, id % s))
                    .collect();
            }
            FamilySpec::SplitGraph {
                clique,
                indep,
                cross_edges,
                seed,
            } => {
                let (c, i) = (*clique, *indep);
                for a in 0..c {
                    labels[a] = format!("C{a}");
                    for b in a + 1..c {
                        g.add_edge(a, b)?;
                    }
                }
                for b in c..c + i {
                    labels[b] = format!("I{}", b - c);
                }
                let mut pairs: Vec<(usize, usize)> = (0..c)
                    .flat_map(|a| (c..c + i).map(move |b| (a, b)))
                    .collect();
                pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                for &(a, b) in pairs.iter().take(*cross_edges) {
                    g.add_edge(a, b)?;
                }
            }
        }
        Ok(Family {
            spec: self.clone(),
            graph: g,
            labels,
        })
    }

    /// `(C, I)` for split graphs, as generated.
    pub fn split_partition(&self) -> Option<(VertexSet, VertexSet)> {
        match self {
            FamilySpec::SplitGraph { clique, indep, .. } => {
                let n = clique + indep;
                let c = VertexSet::from_iter_in(n, 0..*clique);
                Some((c.clone(), c.complement()))
            }
            _ => None,
        }
    }

    /// Builds a spec from a family name and named parameters, as used by
    /// query strings: `path?n=6`, `g3?k=1`, `nary?n=2&d=3`,
    /// `split?clique=4&indep=3&cross=5&seed=1`, `cubic` (diamond host) or
    /// `cubic?graph6=...&v1=..&v14=..`.
    pub fn from_name_and_params(
        name: &str,
        params: &BTreeMap<String, String>,
    ) -> Result<Self, FamilyError> {
        let get = |key: &str| -> Result<usize, FamilyError> {
            params
                .get(key)
                .ok_or_else(|| invalid(format!("{name}: missing parameter `{key}`")))?
                .parse()
                .map_err(|_| {
                    invalid(format!(
                        "{name}: parameter `{key}` is not a non-negative integer"
                    ))
                })
        };
        Ok(match name {
            "path" => FamilySpec::Path(get("n")?),
            "cycle" => FamilySpec::Cycle(get("n")?),
            "complete" => FamilySpec::Complete(get("n")?),
            "star" => FamilySpec::Star(get("n")?),
            "g1" => FamilySpec::G1(get("k")?),
            "g2" => FamilySpec::G2(get("k")?),
            "g3" => FamilySpec::G3(get("k")?),
            "g4" => FamilySpec::G4(get("k")?),
            "nary" => FamilySpec::NaryTree {
                arity: get("n")?,
                depth: get("d")?,
            },
            "tree-gk" => FamilySpec::TreeGk(get("k")?),
            "star-square" => FamilySpec::StarSquare(get("n")?),
            "split" => FamilySpec::SplitGraph {
                clique: get("clique")?,
                indep: get("indep")?,
                cross_edges: get("cross")?,
                seed: get("seed")? as u64,
            },
            "cubic" => match params.get("graph6") {
                None => FamilySpec::cubic_diamond(),
                Some(g6) => FamilySpec::CubicGadget {
                    h: Graph::from_graph6(g6)?,
                    v1: get("v1")?,
                    v14: get("v14")?,
                },
            },
            other => return Err(invalid(format!("unknown family `{other}`"))),
        })
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

fn check_cubic_host(h: &Graph, v1: usize, v14: usize) -> Result<(), FamilyError> {
    if v1 >= h.n() || v14 >= h.n() {
        return Err(invalid("v1/v14 out of range"));
    }
    if v1 == v14 {
        return Err(invalid("v1 and v14 must differ"));
    }
    if h.has_edge(v1, v14) {
        return Err(invalid("v1 and v14 must be non-adjacent"));
    }
    for v in 0..h.n() {
        let want = if v == v1 || v == v14 { 2 } else { 3 };
        if h.degree(v) != want {
            return Err(invalid(format!(
                "host vertex {v} has degree {}, expected {want}",
                h.degree(v)
            )));
        }
    }
    Ok(())
}

/// Host vertices keep their ids; `v2..v13` become `h.n() .. h.n() + 12`.
fn build_cubic(
    h: &Graph,
    v1: usize,
    v14: usize,
    g: &mut Graph,
    labels: &mut [String],
) -> Result<(), FamilyError> {
    let base = h.n();
    for (a, b) in h.edges() {
        g.add_edge(a, b)?;
    }
    for (v, label) in labels.iter_mut().enumerate().take(base) {
        *label = format!("h{v}");
    }
    let id = |i: usize| match i {
        1 => v1,
        14 => v14,
        _ => base + i - 2,
    };
    for i in 1..=14 {
        labels[id(i)] = format!("v{i}");
    }
    for start in [2, 6, 10] {
        let (a, b, c, d) = (id(start), id(start + 1), id(start + 2), id(start + 3));
        for (x, y) in [(a, b), (a, c), (b, c), (b, d), (c, d)] {
            g.add_edge(x, y)?;
        }
    }
    for (x, y) in [(1, 2), (5, 6), (9, 10), (13, 14)] {
        g.add_edge(id(x), id(y))?;
    }
    Ok(())
}

/// `x = 0`, `Y = 1..=4k`, then the blocks `Z_1, Z_2, ...` of `2k` vertices
/// each; block `i` is joined to the `i`-th `2k`-subset of `Y` in colex order.
fn build_g3(k: usize, g: &mut Graph, labels: &mut [String]) -> Result<(), FamilyError> {
    let ny = 4 * k;
    if ny > 63 {
        return Err(invalid("k too large"));
    }
    labels[0] = "x".into();
    for y in 1..=ny {
        labels[y] = format!("y{y}");
        g.add_edge(0, y)?;
    }
    let mut next = 1 + ny;
    for (block, subset) in colex_subsets(ny, 2 * k).enumerate() {
        for j in 0..2 * k {
            labels[next] = format!("z{}_{}", block + 1, j + 1);
            for y in 0..ny {
                if subset >> y & 1 == 1 {
                    g.add_edge(1 + y, next)?;
                }
            }
            next += 1;
        }
    }
    Ok(())
}

/// All `size`-subsets of `0..n` as bitmasks in colexicographic order, which
/// is increasing numeric order of the masks.
pub fn colex_subsets(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut current = if size > n { None } else { Some(first) };
    std::iter::from_fn(move || {
        let out = current?;
        current = if out == 0 {
            None
        } else {
            // Gosper's hack: next larger integer with the same popcount
            let c = out & out.wrapping_neg();
            let r = out + c;
            let next = (((r ^ out) >> 2) / c) | r;
            (next < limit).then_some(next)
        };
        Some(out)
    })
}

/// A uniformly random labeled tree on `n` vertices (Prüfer decoding).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut g = Graph::with_capacity(n, usize::MAX).expect("unbounded capacity");
    if n < 2 {
        return g;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &c in &code {
        let leaf = leaves.pop_first().expect("a leaf remains");
        g.add_edge(leaf, c).expect("valid ids");
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    g.add_edge(last[0], last[1]).expect("valid ids");
    g
}

/// Outcome of [`self_check`]: an empty failure list means every structural
/// property held.
#[derive(Debug, Clone, Default)]
pub struct FamilyReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl FamilyReport {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn regular(g: &Graph, d: usize) -> bool {
    (0..g.n()).all(|v| g.degree(v) == d)
}

fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() == g.n() - 1 && g.is_connected()
}

fn check_tree_shape(r: &mut FamilyReport, g: &Graph, t: NaryTree) {
    let (n, d) = (t.arity(), t.depth());
    r.check(g.n() == t.vertex_count(), || {
        format!("{} vertices, expected {}", g.n(), t.vertex_count())
    });
    r.check(is_tree(g), || "not a tree".into());
    let depth = g.distances_from(0);
    r.check(d == 0 || g.degree(0) == n, || {
        format!("root degree {}, expected {n}", g.degree(0))
    });
    let leaves: Vec<usize> = (1..g.n()).filter(|&v| g.degree(v) == 1).collect();
    r.check(
        d == 0 || leaves.iter().all(|&v| depth[v] == Some(d)),
        || format!("a leaf is not at depth {d}"),
    );
    r.check(d == 0 || leaves.len() == t.leaf_count(), || {
        format!("{} leaves, expected {}", leaves.len(), t.leaf_count())
    });
    r.check(
        (1..g.n()).all(|v| g.degree(v) == 1 || g.degree(v) == n + 1),
        || format!("an interior vertex without {n} children"),
    );
    r.check(
        (0..g.n()).all(|v| depth[v] == Some(t.label(v).len())),
        || "label length differs from depth".into(),
    );
}

/// Verifies the structural promises of `spec` on `g`.
pub fn self_check(spec: &FamilySpec, g: &Graph) -> FamilyReport {
    let mut r = FamilyReport::default();
    r.check(g.validate().is_ok(), || {
        "adjacency not symmetric/irreflexive".into()
    });
    r.check(g.n() == spec.vertex_count(), || {
        format!("{} vertices, expected {}", g.n(), spec.vertex_count())
    });
    if !r.passed() {
        return r;
    }
    match spec {
        FamilySpec::Path(n) => {
            r.check(is_tree(g) && g.max_degree() <= 2, || "not a path".into());
            r.check(g.has_induced_path(*n), || "no spanning induced path".into());
        }
        FamilySpec::Cycle(_) => r.check(regular(g, 2) && g.is_connected(), || "not a cycle".into()),
        FamilySpec::Complete(n) => r.check(regular(g, n - 1), || "not complete".into()),
        FamilySpec::Star(n) => r.check(g.degree(0) == *n && is_tree(g), || {
            "not a star centered at 0".into()
        }),
        FamilySpec::G1(k) | FamilySpec::G2(k) | FamilySpec::G4(k) => {
            let k = *k;
            let a = VertexSet::from_iter_in(g.n(), 0..k);
            let b = VertexSet::from_iter_in(g.n(), k..2 * k);
            let core = a.union(&b);
            r.check(g.is_independent(&a) && g.is_independent(&b), || {
                "A or B not independent".into()
            });
            r.check(
                core.iter()
                    .all(|v| g.neighbors(v).intersection_len(&core) == k - 1),
                || format!("a K'-vertex without degree {} inside K'", k - 1),
            );
            r.check((0..k).all(|i| !g.has_edge(i, k + i)), || {
                "matching edge a_i b_i present".into()
            });
            let extra: Vec<usize> = (2 * k..g.n()).collect();
            for &u in &extra {
                r.check(core.is_subset(g.neighbors(u)), || {
                    format!("vertex {u} not joined to all of K'")
                });
            }
            match spec {
                FamilySpec::G1(_) => {
                    r.check(g.edge_count() == k * (k - 1), || "edge count".into());
                    r.check(g.bipartition().is_some(), || "not bipartite".into());
                }
                FamilySpec::G2(_) => {
                    r.check(g.degree(2 * k) == g.n() - 1, || "u is not universal".into())
                }
                _ => {
                    r.check(!g.has_edge(2 * k, 2 * k + 1), || "u and v adjacent".into());
                    r.check(extra.iter().all(|&u| g.degree(u) == 2 * k), || {
                        "u or v without degree 2k".into()
                    });
                }
            }
        }
        FamilySpec::G3(k) => {
            let k = *k;
            let ny = 4 * k;
            let y = VertexSet::from_iter_in(g.n(), 1..=ny);
            let z = VertexSet::from_iter_in(g.n(), ny + 1..g.n());
            r.check(g.neighbors(0) == &y, || {
                "x is not adjacent to exactly Y".into()
            });
            r.check(g.is_independent(&y) && g.is_independent(&z), || {
                "Y or Z not independent".into()
            });
            r.check(
                z.iter()
                    .all(|v| g.degree(v) == 2 * k && g.neighbors(v).is_subset(&y)),
                || format!("a Z-vertex without exactly 2k = {} neighbours in Y", 2 * k),
            );
            let mut seen = std::collections::HashSet::new();
            let mut blocks_ok = true;
            for block in z.iter().collect::<Vec<_>>().chunks(2 * k) {
                let nb = g.neighbors(block[0]);
                blocks_ok &= block.iter().all(|&v| g.neighbors(v) == nb);
                blocks_ok &= seen.insert(nb.clone());
            }
            r.check(blocks_ok, || {
                "blocks not uniform or two blocks share a neighbourhood".into()
            });
            r.check(Some(seen.len()) == binomial(ny, 2 * k), || {
                "not every 2k-subset of Y has a joined block".into()
            });
        }
        FamilySpec::CubicGadget { h, v1, v14 } => {
            r.check(regular(g, 3), || "not cubic".into());
            let base = h.n();
            let id = |i: usize| match i {
                1 => *v1,
                14 => *v14,
                _ => base + i - 2,
            };
            for start in [2, 6, 10] {
                let quad = VertexSet::from_iter_in(g.n(), (start..start + 4).map(id));
                let (sub, _) = g.induced_subgraph(&quad);
                let diamond = sub.edge_count() == 5 && !g.has_edge(id(start), id(start + 3));
                r.check(diamond, || {
                    format!("v{start}..v{} do not induce a diamond", start + 3)
                });
            }
            let host_connected = h
                .components()
                .iter()
                .all(|c| c.contains(*v1) || c.contains(*v14));
            r.check(!host_connected || g.is_connected(), || {
                "not connected".into()
            });
        }
        FamilySpec::NaryTree { arity, depth } => {
            check_tree_shape(&mut r, g, NaryTree::new(*arity, *depth))
        }
        FamilySpec::TreeGk(k) => match FamilySpec::tree_gk_shape(*k) {
            Some(t) => check_tree_shape(&mut r, g, t),
            None => r.check(is_tree(g), || "not a tree".into()),
        },
        FamilySpec::StarSquare(m) => {
            let m = *m;
            r.check(g.edge_count() == 2 * (m + 1) * m, || "edge count".into());
            r.check(g.degree(0) == 2 * m, || "corner (0,0) degree".into());
            r.check(g.bipartition().is_some() && g.is_connected(), || {
                "not connected bipartite".into()
            });
        }
        FamilySpec::SplitGraph { clique, .. } => {
            let (c, i) = spec.split_partition().unwrap();
            r.check(
                c.iter()
                    .all(|v| g.neighbors(v).intersection_len(&c) == clique - 1),
                || "C is not a clique".into(),
            );
            r.check(g.is_independent(&i), || "I is not independent".into());
        }
    }
    r
}

/// Structure check for `TreeGk(k)` that does not need the dense graph; the
/// only route for `k = 5`, whose tree has over 21 million vertices.
pub fn check_tree_gk_implicit(k: usize) -> Result<NaryTree, String> {
    let t =
        FamilySpec::tree_gk_shape(k).ok_or_else(|| format!("TreeGk({k}) has no n-ary shape"))?;
    let n = 3 * (1usize << (k - 3)) - 1;
    let d = 2 * k - 3;
    if t.arity() != n || t.depth() != d {
        return Err("shape parameters".into());
    }
    let formula: usize = (0..=d).map(|j| n.pow(j as u32)).sum();
    if t.vertex_count() != formula {
        return Err(format!(
            "{} vertices, formula gives {formula}",
            t.vertex_count()
        ));
    }
    if k >= 4 {
        // the next tree down has arity n' with n = 2n' + 1 and depth d - 2
        let prev = FamilySpec::tree_gk_shape(k - 1).unwrap();
        if n != 2 * prev.arity() + 1 || d != prev.depth() + 2 {
            return Err("recurrence n = 2n'+1, d = d'+2 violated".into());
        }
    }
    t.verify_structure()?;
    Ok(t)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::G1(k) => write!(f, "g1:{k}"),
            FamilySpec::G2(k) => write!(f, "g2:{k}"),
            FamilySpec::G3(k) => write!(f, "g3:{k}"),
            FamilySpec::G4(k) => write!(f, "g4:{k}"),
            FamilySpec::CubicGadget { h, v1, v14 } => {
                write!(f, "cubic:{}:{v1}:{v14}", h.to_graph6())
            }
            FamilySpec::NaryTree { arity, depth } => write!(f, "nary:{arity}:{depth}"),
            FamilySpec::TreeGk(k) => write!(f, "tree-gk:{k}"),
            FamilySpec::StarSquare(n) => write!(f, "star-square:{n}"),
            FamilySpec::SplitGraph {
                clique,
                indep,
                cross_edges,
                seed,
            } => write!(f, "split:{clique}:{indep}:{cross_edges}:{seed}"),
        }
    }
}

/// Parses `name:arg:arg...`, e.g. `path:6`, `g3:1`, `nary:2:3`, `cubic`,
/// `cubic:<graph6>:<v1>:<v14>`, `split:4:3:5:1`.
impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let keys: &[&str] = match name {
            "path" | "cycle" | "complete" | "star" | "star-square" => &["n"],
            "g1" | "g2" | "g3" | "g4" | "tree-gk" => &["k"],
            "nary" => &["n", "d"],
            "split" => &["clique", "indep", "cross", "seed"],
            "cubic" if args.is_empty() => &[],
            "cubic" => &["graph6", "v1", "v14"],
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        if args.len() != keys.len() {
            return Err(invalid(format!(
                "`{name}` takes {} argument(s): {}",
                keys.len(),
                keys.join(":")
            )));
        }
        let params = keys
            .iter()
            .zip(args)
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        FamilySpec::from_name_and_params(name, &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(spec: &FamilySpec) -> Graph {
        let fam = spec.generate().unwrap();
        let report = self_check(spec, &fam.graph);
        assert!(report.passed(), "{spec}: {:?}", report.failures);
        assert_eq!(fam.labels.len(), fam.graph.n());
        fam.graph
    }

    #[test]
    fn g1_arithmetic() {
        let g = gen(&FamilySpec::G1(3));
        assert_eq!(g.n(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert_eq!(g.edge_count(), 6);
        let (x1, x2) = g.bipartition().unwrap();
        assert_eq!(x1, VertexSet::from_iter_in(6, 0..3));
        assert_eq!(x2, VertexSet::from_iter_in(6, 3..6));
    }

    #[test]
    fn g2_has_universal_vertex() {
        let g = gen(&FamilySpec::G2(5));
        assert_eq!(g.degree(10), 10);
    }

    #[test]
    fn g4_extra_vertices() {
        let g = gen(&FamilySpec::G4(2));
        let outside: Vec<usize> = (4..6).collect();
        assert!(outside.iter().all(|&u| g.degree(u) == 4));
        assert!(!g.has_edge(4, 5));
    }

    #[test]
    fn g3_small_and_medium() {
        let g = gen(&FamilySpec::G3(1));
        assert_eq!(g.n(), 17);
        assert_eq!(g.degree(0), 4);
        assert!((5..17).all(|v| g.degree(v) == 2));
        let g2 = gen(&FamilySpec::G3(2));
        assert_eq!(g2.n(), 1 + 8 + 70 * 4);
    }

    #[test]
    fn g3_blocks_follow_colex_order() {
        let g = gen(&FamilySpec::G3(1));
        // colex 2-subsets of {y1..y4}: 12, 13, 23, 14, 24, 34
        let expected = [[1, 2], [1, 3], [2, 3], [1, 4], [2, 4], [3, 4]];
        for (block, ys) in expected.iter().enumerate() {
            let z = 5 + 2 * block;
            assert_eq!(g.neighbors(z).iter().collect::<Vec<_>>(), ys.to_vec());
        }
    }

    #[test]
    fn g3_capacity() {
        assert_eq!(FamilySpec::G3(3).vertex_count(), 5557);
        assert!(FamilySpec::G3(3).generate().is_ok());
        assert!(matches!(
            FamilySpec::G3(4).generate(),
            Err(FamilyError::Graph(GraphError::CapacityExceeded {
                n: 102_977,
                ..
            }))
        ));
    }

    #[test]
    fn colex_enumeration_counts() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let subsets: Vec<u64> = colex_subsets(n, k).collect();
                assert_eq!(subsets.len(), binomial(n, k).unwrap(), "n={n} k={k}");
                assert!(subsets.windows(2).all(|w| w[0] < w[1]));
                assert!(subsets.iter().all(|s| s.count_ones() as usize == k));
            }
        }
    }

    #[test]
    fn cubic_diamond_gadget() {
        let g = gen(&FamilySpec::cubic_diamond());
        assert_eq!(g.n(), 16);
        assert!(regular(&g, 3));
        assert!(g.is_connected());
    }

    #[test]
    fn cubic_gadget_rejects_bad_hosts() {
        let k4 = FamilySpec::Complete(4).generate().unwrap().graph;
        let bad = FamilySpec::CubicGadget {
            h: k4,
            v1: 0,
            v14: 1,
        };
        assert!(matches!(
            bad.generate(),
            Err(FamilyError::InvalidParameter(_))
        ));
        let FamilySpec::CubicGadget { h, .. } = FamilySpec::cubic_diamond() else {
            unreachable!()
        };
        let same = FamilySpec::CubicGadget {
            h: h.clone(),
            v1: 0,
            v14: 0,
        };
        assert!(same.generate().is_err());
        let adjacent_deg3 = FamilySpec::CubicGadget { h, v1: 0, v14: 1 };
        assert!(adjacent_deg3.generate().is_err());
    }

    #[test]
    fn trees() {
        let t3 = gen(&FamilySpec::TreeGk(3));
        assert_eq!(t3.n(), 15);
        assert_eq!(gen(&FamilySpec::TreeGk(1)).n(), 1);
        assert_eq!(gen(&FamilySpec::TreeGk(2)).edge_count(), 1);
        assert_eq!(gen(&FamilySpec::TreeGk(4)).n(), 3906);
        assert!(FamilySpec::TreeGk(5).generate().is_err());
        let fam = FamilySpec::NaryTree { arity: 3, depth: 2 }
            .generate()
            .unwrap();
        assert_eq!(fam.labels[4], "(11)");
        assert!(fam.label_lines().starts_with("0\t()\n1\t(1)\n"));
    }

    #[test]
    fn tree_gk_vertex_counts() {
        for (k, n, d) in [(3usize, 2usize, 3u32), (4, 5, 5), (5, 11, 7)] {
            let expected: usize = (0..=d).map(|j| n.pow(j)).sum();
            assert_eq!(FamilySpec::TreeGk(k).vertex_count(), expected);
        }
    }

    #[test]
    fn star_square_and_split() {
        let g = gen(&FamilySpec::StarSquare(3));
        assert_eq!(g.n(), 16);
        let spec = FamilySpec::SplitGraph {
            clique: 4,
            indep: 3,
            cross_edges: 5,
            seed: 7,
        };
        let g = gen(&spec);
        assert_eq!(g.edge_count(), 6 + 5);
        assert_eq!(gen(&spec), g);
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "path:6",
            "cycle:5",
            "g1:3",
            "g3:1",
            "nary:2:3",
            "tree-gk:3",
            "star-square:2",
            "split:4:3:5:1",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let cubic: FamilySpec = "cubic".parse().unwrap();
        assert_eq!(cubic, FamilySpec::cubic_diamond());
        assert_eq!(cubic.to_string().parse::<FamilySpec>().unwrap(), cubic);
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().unwrap().generate().is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        for n in 0..30 {
            for seed in 0..5 {
                let t = random_tree(n, seed);
                assert_eq!(t.n(), n);
                assert!(n == 0 || is_tree(&t), "n={n} seed={seed}");
            }
        }
        assert_eq!(random_tree(12, 9), random_tree(12, 9));
    }

    #[test]
    fn self_check_catches_a_wrong_graph() {
        let wrong = FamilySpec::Path(5).generate().unwrap().graph;
        assert!(!self_check(&FamilySpec::Cycle(5), &wrong).passed());
    }
}

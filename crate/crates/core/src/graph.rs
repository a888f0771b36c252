//! Undirected simple graphs, trees, and the constructions the counting
//! formulas operate on.
//!
//! Vertices are always the indices `0..n`. Products use the layer-major
//! convention: in `G × H` the vertex `(i, j)` gets index `i * |H| + j`, so
//! the product is laid out as `|G|` consecutive copies of `H`. The
//! orientation and determinant code relies on this: the skew adjacency
//! matrix of a layered orientation is then a block matrix with one
//! `|H| × |H|` block per pair of layers.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result, TreeDefect};

/// Default vertex limit for exhaustive cycle enumeration.
pub const DEFAULT_CYCLE_LIMIT: usize = 24;

/// Hard ceiling for the bitmask-based search routines.
pub(crate) const BITMASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // normalized u < v, sorted
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges
    /// and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge {{{},{}}}",
                    e.0, e.1
                )));
            }
        }
        Ok(Self::from_normalized(n, set.into_iter().collect()))
    }

    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// The induced subgraph on the vertices not in `removed`, relabelled
    /// in increasing order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Graph {
        let gone: BTreeSet<usize> = removed.iter().copied().collect();
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in relabel.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| !gone.contains(u) && !gone.contains(v))
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect();
        Self::from_normalized(next, edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Neighbourhoods as bitmasks; only valid for at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= BITMASK_LIMIT);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }
}

/// A graph known to be a tree, with a BFS parent array rooted at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl Tree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Vertices in BFS order from the root; every vertex appears after
    /// its parent.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// Children of `v` with respect to the root.
    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.adj[v]
            .iter()
            .copied()
            .filter(move |&w| self.parent[w] == Some(v))
    }
}

impl AsRef<Graph> for Tree {
    fn as_ref(&self) -> &Graph {
        &self.graph
    }
}

/// A simple cycle `c_0 c_1 … c_{k-1} c_0` of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleSeq(Vec<usize>);

impl CycleSeq {
    /// Checks that `vertices` is a cycle of `g`: at least three distinct
    /// vertices with every consecutive pair (and the wrap-around) adjacent.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::InvalidCycle(format!(
                "a cycle needs at least 3 vertices, got {k}"
            )));
        }
        let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
        if distinct.len() != k {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("{u}-{v} is not an edge")));
            }
        }
        Ok(CycleSeq(vertices))
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        CycleSeq(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive vertex pairs `(c_i, c_{i+1})`, including the closing one.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    /// Rotation and reflection normal form: smallest vertex first, then
    /// the smaller of its two cycle neighbours.
    pub fn canonical(&self) -> CycleSeq {
        let k = self.0.len();
        let start = (0..k).min_by_key(|&i| self.0[i]).unwrap_or(0);
        let fwd: Vec<usize> = (0..k).map(|i| self.0[(start + i) % k]).collect();
        if k > 2 && fwd[1] > fwd[k - 1] {
            let mut rev = vec![fwd[0]];
            rev.extend(fwd[1..].iter().rev());
            CycleSeq(rev)
        } else {
            CycleSeq(fwd)
        }
    }
}

pub fn path_graph(m: usize) -> Result<Tree> {
    if m == 0 {
        return Err(Error::InvalidSize(
            "a path needs at least one vertex".into(),
        ));
    }
    let g = Graph::from_normalized(m, (1..m).map(|i| (i - 1, i)).collect());
    validate_tree(g)
}

pub fn cycle_graph(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidSize(format!(
            "a cycle needs at least 3 vertices, got {m}"
        )));
    }
    Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
}

pub fn star_graph(leaves: usize) -> Result<Tree> {
    validate_tree(Graph::from_normalized(
        leaves + 1,
        (1..=leaves).map(|v| (0, v)).collect(),
    ))
}

/// `G × H` with layer-major numbering `(i, j) ↦ i·|H| + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n, h.n);
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for i in 0..ng {
        for &(a, b) in &h.edges {
            edges.push((i * nh + a, i * nh + b));
        }
    }
    for &(a, b) in &g.edges {
        for j in 0..nh {
            edges.push((a * nh + j, b * nh + j));
        }
    }
    edges.sort_unstable();
    Graph::from_normalized(ng * nh, edges)
}

/// The `m × n` grid `P_m × P_n`.
pub fn grid_graph(m: usize, n: usize) -> Result<Graph> {
    Ok(cartesian_product(
        path_graph(m)?.graph(),
        path_graph(n)?.graph(),
    ))
}

pub fn validate_tree(g: Graph) -> Result<Tree> {
    let n = g.n;
    if n == 0 {
        return Err(Error::NotATree(TreeDefect::Empty));
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in &g.adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            } else if parent[u] != Some(w) {
                return Err(Error::NotATree(TreeDefect::Cycle(find_cycle(&g))));
            }
        }
    }
    if order.len() != n {
        // an unreached component may still hold a cycle
        let cycle = find_cycle(&g);
        if !cycle.is_empty() {
            return Err(Error::NotATree(TreeDefect::Cycle(cycle)));
        }
        return Err(Error::NotATree(TreeDefect::Disconnected));
    }
    Ok(Tree {
        graph: g,
        root: 0,
        parent,
        order,
    })
}

/// Some cycle of `g`, or an empty vector if `g` is a forest.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n;
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &g.adj[u] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    stack.push(w);
                } else if w != parent[u] && depth[w] <= depth[u] {
                    // non-tree edge u-w closes a cycle through the DFS/BFS forest
                    let (mut a, mut b) = (u, w);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while depth[a] > depth[b] {
                        a = parent[a];
                        left.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b];
                        right.push(b);
                    }
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        left.push(a);
                        right.push(b);
                    }
                    right.pop();
                    left.extend(right.into_iter().rev());
                    if left.len() >= 3 {
                        return CycleSeq(left).canonical().0;
                    }
                }
            }
        }
    }
    Vec::new()
}

/// Uniformly random labelled tree on `n` vertices, decoded from a Prüfer
/// sequence drawn from ChaCha8 seeded with `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree> {
    if n == 0 {
        return Err(Error::InvalidSize(
            "a tree needs at least one vertex".into(),
        ));
    }
    if n <= 2 {
        return path_graph(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    validate_tree(prufer_decode(n, &code))
}

pub fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves
            .pop_first()
            .expect("Prüfer decoding always has a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable();
    Graph::from_normalized(n, edges)
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// grown leaf by leaf and deduplicated by canonical encoding.
pub fn nonisomorphic_trees(n: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::InvalidSize(
            "a tree needs at least one vertex".into(),
        ));
    }
    let mut current: BTreeMap<String, Graph> = BTreeMap::new();
    current.insert(String::from("()"), Graph::empty(1));
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for g in current.values() {
            for v in 0..size - 1 {
                let mut edges = g.edges.clone();
                edges.push((v, size - 1));
                edges.sort_unstable();
                let grown = Graph::from_normalized(size, edges);
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        current = next;
    }
    current.into_values().map(validate_tree).collect()
}

/// Isomorphism invariant of a tree: the least rooted AHU encoding over
/// all choices of root.
fn tree_code(g: &Graph) -> String {
    fn encode(g: &Graph, v: usize, from: usize) -> String {
        let mut parts: Vec<String> = g.adj[v]
            .iter()
            .filter(|&&w| w != from)
            .map(|&w| encode(g, w, v))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    (0..g.n)
        .map(|r| encode(g, r, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// Every simple cycle of `g` exactly once, in canonical form.
pub fn enumerate_cycles(g: &Graph, max_vertices: usize) -> Result<Vec<CycleSeq>> {
    let mut out = Vec::new();
    for_each_cycle(g, max_vertices, |c| out.push(CycleSeq(c.to_vec())))?;
    Ok(out)
}

pub(crate) fn check_cycle_guard(g: &Graph, max_vertices: usize) -> Result<()> {
    let limit = max_vertices.min(BITMASK_LIMIT);
    if g.n > limit {
        return Err(Error::SizeLimit {
            operation: "cycle enumeration (use the brute-force route only)",
            vertices: g.n,
            limit,
        });
    }
    Ok(())
}

/// Calls `f` on every simple cycle, each reported once with its smallest
/// vertex first and its second vertex smaller than its last.
pub fn for_each_cycle(g: &Graph, max_vertices: usize, mut f: impl FnMut(&[usize])) -> Result<()> {
    check_cycle_guard(g, max_vertices)?;
    for (start, second) in cycle_branches(g) {
        cycles_in_branch(g, start, second, &mut f);
    }
    Ok(())
}

/// Independent DFS subtrees of the cycle search: each cycle belongs to
/// exactly one `(start, second)` branch.
pub(crate) fn cycle_branches(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.n)
        .flat_map(|s| {
            g.adj[s]
                .iter()
                .filter(move |&&t| t > s)
                .map(move |&t| (s, t))
        })
        .collect()
}

pub(crate) fn cycles_in_branch(
    g: &Graph,
    start: usize,
    second: usize,
    f: &mut impl FnMut(&[usize]),
) {
    fn dfs(
        g: &Graph,
        start: usize,
        second: usize,
        path: &mut Vec<usize>,
        visited: u64,
        f: &mut impl FnMut(&[usize]),
    ) {
        let u = *path.last().expect("path is never empty");
        for &w in &g.adj[u] {
            if w == start {
                if path.len() >= 3 && u > second {
                    f(path);
                }
            } else if w > start && visited & (1u64 << w) == 0 {
                path.push(w);
                dfs(g, start, second, path, visited | (1u64 << w), f);
                path.pop();
            }
        }
    }
    let mut path = vec![start, second];
    dfs(
        g,
        start,
        second,
        &mut path,
        (1u64 << start) | (1u64 << second),
        f,
    );
}

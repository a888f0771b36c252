//! Orientations of product graphs and the nice-cycle test for
//! Pfaffian-ness.
//!
//! The constructions all stack copies of a base orientation:
//!
//! * [`orient_double`] turns `Dᵉ` on `G` into an orientation of `P2 × G`
//!   with `Dᵉ` on the left copy, its converse on the right copy, and every
//!   rung directed left to right.
//! * [`orient_layered`] does the same for `P_m × T` with `m` tree layers
//!   alternating between `Tᵉ` and its converse, rungs pointing from layer
//!   `i` to layer `i + 1`.
//! * [`orient_c4_tree`] applies the doubling twice, giving `C4 × T` as
//!   `P2 × P2 × T`.
//!
//! [`check_pfaffian`] enumerates every cycle and confirms that each nice
//! cycle of even length is oddly oriented.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::brute::has_pm_masked;
use crate::counting::has_perfect_matching;
use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, check_cycle_guard, cycle_branches, cycles_in_branch, path_graph,
    validate_tree, CycleSeq, Graph,
};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// One direction for every edge of a base graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    base: Graph,
    // forward[i]: edges()[i] = (u, v) with u < v is directed u → v
    forward: Vec<bool>,
}

impl OrientedGraph {
    /// Builds an orientation from a list of arcs `(tail, head)`. Every
    /// edge of `base` must appear exactly once, in one direction.
    pub fn new(base: Graph, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut forward = vec![None; base.edge_count()];
        for (tail, head) in arcs {
            let idx = base.edge_index(tail, head).ok_or_else(|| {
                Error::InvalidGraph(format!("arc {tail} -> {head} is not an edge"))
            })?;
            if forward[idx].replace(tail < head).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{tail},{head}}} oriented twice"
                )));
            }
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                f.ok_or_else(|| {
                    let (u, v) = base.edges()[i];
                    Error::InvalidGraph(format!("edge {{{u},{v}}} has no orientation"))
                })
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(OrientedGraph { base, forward })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn arc_count(&self) -> usize {
        self.forward.len()
    }

    /// Arcs as `(tail, head)`, in the order of the base edge list.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) })
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.base
            .edge_index(tail, head)
            .is_some_and(|i| self.forward[i] == (tail < head))
    }

    /// The same digraph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<OrientedGraph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || !perm
                .iter()
                .all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidSize(format!(
                "relabelling must be a permutation of 0..{n}"
            )));
        }
        let arcs: Vec<(usize, usize)> = self.arcs().map(|(a, b)| (perm[a], perm[b])).collect();
        let base = Graph::new(n, arcs.iter().copied())?;
        OrientedGraph::new(base, arcs)
    }
}

/// Every edge `{u, v}` with `u < v` directed `u → v`.
pub fn orient_lexicographic(g: &Graph) -> OrientedGraph {
    OrientedGraph {
        base: g.clone(),
        forward: vec![true; g.edge_count()],
    }
}

/// Independent fair coin per edge from ChaCha8 seeded with `seed`.
pub fn orient_random(g: &Graph, seed: u64) -> OrientedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    OrientedGraph {
        base: g.clone(),
        forward: (0..g.edge_count()).map(|_| rng.gen_bool(0.5)).collect(),
    }
}

pub fn converse(d: &OrientedGraph) -> OrientedGraph {
    OrientedGraph {
        base: d.base.clone(),
        forward: d.forward.iter().map(|f| !f).collect(),
    }
}

/// `(P2 × G)ᵉ`: `d` on vertices `0..n`, its converse on `n..2n`, and the
/// rungs `v → n + v`.
pub fn orient_double(d: &OrientedGraph) -> OrientedGraph {
    stack_layers(d, 2)
}

/// `(P_m × T)ᵉ`: `m` copies of the tree, odd-numbered layers (counting
/// from one) carrying `d` and even-numbered ones its converse, with every
/// rung directed from layer `i` to layer `i + 1`.
pub fn orient_layered(d: &OrientedGraph, m: usize) -> Result<OrientedGraph> {
    if m == 0 {
        return Err(Error::InvalidSize("need at least one layer".into()));
    }
    validate_tree(d.base.clone())?;
    Ok(stack_layers(d, m))
}

/// `(C4 × T)ᵉ = (P2 × (P2 × T)ᵉ)ᵉ`. In layer-major numbering the four
/// tree layers carry `Tᵉ`, converse, converse, `Tᵉ`; around the 4-cycle
/// (layers 0, 1, 3, 2) they alternate.
pub fn orient_c4_tree(d: &OrientedGraph) -> Result<OrientedGraph> {
    validate_tree(d.base.clone())?;
    Ok(orient_double(&orient_double(d)))
}

fn stack_layers(d: &OrientedGraph, m: usize) -> OrientedGraph {
    let n = d.vertex_count();
    let layers = path_graph(m).expect("m >= 1").into_graph();
    let base = cartesian_product(&layers, &d.base);
    let mut arcs = Vec::with_capacity(base.edge_count());
    for layer in 0..m {
        let off = layer * n;
        for (a, b) in d.arcs() {
            if layer % 2 == 0 {
                arcs.push((off + a, off + b));
            } else {
                arcs.push((off + b, off + a));
            }
        }
        if layer + 1 < m {
            arcs.extend((0..n).map(|v| (off + v, off + n + v)));
        }
    }
    OrientedGraph::new(base, arcs).expect("layer arcs cover the product exactly")
}

/// `A(Dᵉ)`: `+1` at `(i, j)` for an arc `i → j`, `−1` at `(j, i)`.
pub fn skew_adjacency<T: Scalar>(d: &OrientedGraph) -> Matrix<T> {
    let mut m = Matrix::zeros(d.vertex_count());
    for (tail, head) in d.arcs() {
        m[(tail, head)] = T::one();
        m[(head, tail)] = -T::one();
    }
    m
}

/// A set of pairwise disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    partner: Vec<Option<usize>>,
}

impl Matching {
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = host.vertex_count();
        let mut partner = vec![None; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if !host.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("{u}-{v} is not an edge")));
            }
            if partner[u].is_some() || partner[v].is_some() {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} shares an endpoint with another matching edge"
                )));
            }
            partner[u] = Some(v);
            partner[v] = Some(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Matching {
            vertex_count: n,
            edges: list,
            partner,
        })
    }

    /// The rungs `{v, n + v}` of `P2 × G` for `|G| = n`.
    pub fn rungs(double: &Graph, n: usize) -> Result<Self> {
        Self::new(double, (0..n).map(|v| (v, n + v)))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.partner.iter().all(Option::is_some)
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.partner.get(u).copied().flatten() == Some(v)
    }

    /// Number of cycle edges that belong to the matching.
    pub fn edges_on(&self, c: &CycleSeq) -> usize {
        c.steps().filter(|&(u, v)| self.contains(u, v)).count()
    }

    /// Whether the cycle alternates between matching and non-matching edges.
    pub fn is_alternating(&self, c: &CycleSeq) -> bool {
        c.len().is_multiple_of(2) && 2 * self.edges_on(c) == c.len() && {
            let inside: Vec<bool> = c.steps().map(|(u, v)| self.contains(u, v)).collect();
            inside.windows(2).all(|w| w[0] != w[1])
        }
    }

    pub fn host_vertex_count(&self) -> usize {
        self.vertex_count
    }
}

/// Whether `g − C` has a perfect matching.
pub fn is_nice_cycle(g: &Graph, c: &CycleSeq) -> Result<bool> {
    let c = CycleSeq::new(g, c.vertices().to_vec())?;
    has_perfect_matching(&g.remove_vertices(c.vertices()))
}

/// Whether an even cycle has an odd number of arcs pointing along its
/// traversal direction. For even cycles both directions give the same
/// parity.
pub fn is_oddly_oriented(d: &OrientedGraph, c: &CycleSeq) -> Result<bool> {
    let c = CycleSeq::new(&d.base, c.vertices().to_vec())?;
    if c.len() % 2 == 1 {
        return Err(Error::OddCycle(c.len()));
    }
    Ok(forward_arcs(d, c.vertices()) % 2 == 1)
}

fn forward_arcs(d: &OrientedGraph, cycle: &[usize]) -> usize {
    let k = cycle.len();
    (0..k)
        .filter(|&i| d.has_arc(cycle[i], cycle[(i + 1) % k]))
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PfaffianReport {
    /// Simple cycles examined, of any length.
    pub cycles: usize,
    pub nice_even_cycles: usize,
    /// Nice even cycles that are not oddly oriented, in canonical form and
    /// sorted.
    pub violations: Vec<CycleSeq>,
}

impl PfaffianReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustive check that every nice cycle of even length is oddly
/// oriented in `d`.
pub fn check_pfaffian(d: &OrientedGraph, max_vertices: usize) -> Result<PfaffianReport> {
    let g = &d.base;
    check_cycle_guard(g, max_vertices)?;
    let adj = g.adjacency_masks();
    let all = if g.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.vertex_count()) - 1
    };
    let partial: Vec<PfaffianReport> = cycle_branches(g)
        .into_par_iter()
        .map(|(s, t)| {
            let mut rep = PfaffianReport {
                cycles: 0,
                nice_even_cycles: 0,
                violations: Vec::new(),
            };
            cycles_in_branch(g, s, t, &mut |cycle: &[usize]| {
                rep.cycles += 1;
                if cycle.len() % 2 == 1 {
                    return;
                }
                let on_cycle = cycle.iter().fold(0u64, |m, &v| m | (1u64 << v));
                if !has_pm_masked(&adj, all & !on_cycle) {
                    return;
                }
                rep.nice_even_cycles += 1;
                if forward_arcs(d, cycle).is_multiple_of(2) {
                    rep.violations.push(CycleSeq::new_unchecked(cycle.to_vec()));
                }
            });
            rep
        })
        .collect();
    let mut report = PfaffianReport {
        cycles: 0,
        nice_even_cycles: 0,
        violations: Vec::new(),
    };
    for p in partial {
        report.cycles += p.cycles;
        report.nice_even_cycles += p.nice_even_cycles;
        report.violations.extend(p.violations);
    }
    report.violations.sort();
    Ok(report)
}

//! k-line graphs, connected components and the k-ly connected components functor.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{set_literal, Hypergraph, SimpleGraph, VertexId, VertexSet};
use crate::partition::PartitionedSet;
use crate::unionfind::UnionFind;

/// Minimum overlap `k ≥ 1` for two edges to be adjacent, or `∞` (never adjacent).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OverlapThreshold {
    Finite(usize),
    Infinite,
}

impl OverlapThreshold {
    pub fn finite(k: usize) -> Result<Self> {
        if k == 0 {
            Err(Error::InvalidParameter("overlap threshold must be at least 1".into()))
        } else {
            Ok(Self::Finite(k))
        }
    }

    /// Whether two edge sets with this many shared vertices are adjacent.
    pub fn admits(self, overlap: usize) -> bool {
        match self {
            Self::Finite(k) => overlap >= k,
            Self::Infinite => false,
        }
    }
}

impl fmt::Display for OverlapThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(k) => write!(f, "{k}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for OverlapThreshold {
    type Err = Error;

    /// Accepts a positive integer, `inf` or `∞`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Self::Infinite),
            t => t
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad overlap threshold {s:?}")))
                .and_then(Self::finite),
        }
    }
}

/// Simple graph on the distinct edge sets of an origin hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraph {
    pub k: OverlapThreshold,
    /// Distinct edge sets in sorted order.
    pub nodes: Vec<VertexSet>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub adjacent: Vec<(usize, usize)>,
}

impl LineGraph {
    /// Node indices grouped by component, each group sorted, groups ordered by
    /// their smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.nodes.len());
        for &(i, j) in &self.adjacent {
            uf.union(i, j);
        }
        uf.groups()
    }

    /// As a simple graph whose vertices are named by set literals like `{a,b,c}`.
    pub fn to_simple_graph(&self) -> SimpleGraph {
        let names: Vec<VertexId> = self.nodes.iter().map(|s| VertexId::new(set_literal(s))).collect();
        let mut g = Hypergraph::edgeless(names.iter().cloned());
        for (n, &(i, j)) in self.adjacent.iter().enumerate() {
            g.add_edge(format!("l{}", n + 1), [names[i].clone(), names[j].clone()])
                .expect("line graph edges join known nodes");
        }
        SimpleGraph::try_from(g).expect("line graph is simple")
    }
}

/// Pairs of sets (by index) sharing at least `k` elements.
fn overlapping_pairs(sets: &[VertexSet], k: OverlapThreshold) -> Vec<(usize, usize)> {
    let OverlapThreshold::Finite(k) = k else {
        return Vec::new();
    };
    let mut incident: BTreeMap<&VertexId, Vec<usize>> = BTreeMap::new();
    for (i, s) in sets.iter().enumerate() {
        for v in s {
            incident.entry(v).or_default().push(i);
        }
    }
    let mut pairs = Vec::new();
    let mut count = alloc::vec![0usize; sets.len()];
    for (i, s) in sets.iter().enumerate() {
        let mut touched = Vec::new();
        for v in s {
            for &j in &incident[v] {
                if j > i {
                    if count[j] == 0 {
                        touched.push(j);
                    }
                    count[j] += 1;
                }
            }
        }
        touched.sort_unstable();
        for j in touched {
            if count[j] >= k {
                pairs.push((i, j));
            }
            count[j] = 0;
        }
    }
    pairs
}

/// `Λ_k(G)`: one node per distinct edge set, adjacent when they share at least `k` vertices.
pub fn k_line_graph(g: &Hypergraph, k: OverlapThreshold) -> LineGraph {
    line_graph_of_sets(g.edge_sets(), k)
}

pub(crate) fn line_graph_of_sets(sets: BTreeSet<VertexSet>, k: OverlapThreshold) -> LineGraph {
    let nodes: Vec<VertexSet> = sets.into_iter().collect();
    let adjacent = overlapping_pairs(&nodes, k);
    LineGraph { k, nodes, adjacent }
}

/// Components of a simple graph; isolated vertices are singleton parts.
pub fn connected_components(g: &SimpleGraph) -> PartitionedSet {
    let h = g.as_hypergraph();
    let names: Vec<&VertexId> = h.vertices().iter().collect();
    let mut uf = UnionFind::new(names.len());
    for e in h.edges().values() {
        let mut it = e.iter().map(|v| names.binary_search(&v).expect("edge inside vertex set"));
        if let (Some(a), Some(b)) = (it.next(), it.next()) {
            uf.union(a, b);
        }
    }
    let parts = uf
        .groups()
        .into_iter()
        .map(|grp| grp.into_iter().map(|i| names[i].clone()).collect())
        .collect();
    PartitionedSet::from_trusted(h.vertices().clone(), parts)
}

/// `Π_k(G)`: unions of the components of `Λ_k(G)`; vertices in no edge are in no part.
pub fn pi_k(g: &Hypergraph, k: OverlapThreshold) -> PartitionedSet {
    pi_k_of_sets(g.vertices(), g.edge_sets(), k)
}

/// [`pi_k`] for a hypergraph given by its vertices and distinct edge sets.
pub(crate) fn pi_k_of_sets(vertices: &VertexSet, sets: BTreeSet<VertexSet>, k: OverlapThreshold) -> PartitionedSet {
    let lg = line_graph_of_sets(sets, k);
    let parts = lg
        .components()
        .into_iter()
        .map(|grp| grp.into_iter().flat_map(|i| lg.nodes[i].iter().cloned()).collect())
        .collect();
    PartitionedSet::from_trusted(vertices.clone(), parts)
}

/// Whether `Π_k(G)` has the whole vertex set as a part.
pub fn is_k_connected(g: &Hypergraph, k: OverlapThreshold) -> bool {
    pi_k(g, k).has_full_part()
}

/// The distinct edge sets as parts; agrees with `Π_∞`.
pub fn pi_infinity_parts(g: &Hypergraph) -> PartitionedSet {
    PartitionedSet::from_trusted(g.vertices().clone(), g.edge_sets())
}

//! Clustering schemes as values.
//!
//! A scheme sends a hypergraph to a partitioned set on its vertices. The
//! variants are the representable schemes `Π_k ∘ Φ_ℜ`, the label-sharing
//! scheme over a three-edge motif `D`, classic connected components, and three
//! small schemes that separate excisiveness from functoriality.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::builders::{build_named, chain, corner_glue, describe_graph, NamedGraph};
use crate::error::{Error, Result};
use crate::graph::{iso_check, Hypergraph, GraphMorphism, SimpleGraph, VertexSet, ISO_BOUND};
use crate::line::{connected_components, is_k_connected, pi_k_of_sets, OverlapThreshold};
use crate::motif::{enumerate_embeddings, phi, phi_edge_sets, MotifSet};
use crate::partition::PartitionedSet;
use crate::unionfind::UnionFind;

/// The three small schemes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ToyScheme {
    /// One part everywhere, except `K_2`, which gets two singleton parts.
    AlwaysOnePartExceptK2,
    /// One part if some edge has more than two vertices; otherwise per
    /// component, with `K_2` itself split in two.
    ComponentRule,
    /// As [`ToyScheme::AlwaysOnePartExceptK2`], but `K_2 ⊔ K_2` gets one part per copy.
    NoProps,
}

impl ToyScheme {
    pub const ALL: [ToyScheme; 3] = [Self::AlwaysOnePartExceptK2, Self::ComponentRule, Self::NoProps];

    pub fn id(self) -> &'static str {
        match self {
            Self::AlwaysOnePartExceptK2 => "always_one_part_except_K2",
            Self::ComponentRule => "component_rule",
            Self::NoProps => "noprops",
        }
    }
}

impl fmt::Display for ToyScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ToyScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown toy scheme {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeSpec {
    /// `Π_{ℜ,k} = Π_k ∘ Φ_ℜ`.
    Representable { motifs: MotifSet, k: OverlapThreshold },
    /// Components of the label-sharing graph over copies of `motif`.
    Sigma { motif: Hypergraph },
    /// Connected components of a simple graph, isolated vertices in no part.
    Classic,
    Toy(ToyScheme),
}

impl SchemeSpec {
    pub fn representable(motifs: MotifSet, k: OverlapThreshold) -> Self {
        Self::Representable { motifs, k }
    }

    /// Fails unless `motif` passes [`validate_sigma_motif`].
    pub fn sigma(motif: Hypergraph) -> Result<Self> {
        validate_sigma_motif(&motif).map_err(|v| {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            Error::InvalidParameter(format!("invalid sigma motif: {}", msgs.join("; ")))
        })?;
        Ok(Self::Sigma { motif })
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Representable { motifs, k } => {
                f.write_str("representable({")?;
                for (i, m) in motifs.motifs().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    match m {
                        crate::motif::Motif::Graph(g) => f.write_str(&describe_graph(g))?,
                        crate::motif::Motif::EdgeFamily => f.write_str("E*")?,
                        crate::motif::Motif::TailFamily => f.write_str("R*")?,
                    }
                }
                write!(f, "}},{k})")
            }
            Self::Sigma { motif } => write!(f, "sigma({})", describe_graph(motif)),
            Self::Classic => f.write_str("classic"),
            Self::Toy(t) => write!(f, "toy:{t}"),
        }
    }
}

/// Clusters `g`; the underlying set of the result is always `V(g)`.
pub fn cluster(s: &SchemeSpec, g: &Hypergraph) -> Result<PartitionedSet> {
    match s {
        SchemeSpec::Representable { motifs, k } => Ok(pi_k_of_sets(g.vertices(), phi_edge_sets(motifs, g)?, *k)),
        SchemeSpec::Sigma { motif } => Ok(sigma_cluster(motif, g)?),
        SchemeSpec::Classic => classic_components(g),
        SchemeSpec::Toy(t) => toy_cluster(*t, g),
    }
}

/// Components of a simple graph with the singleton parts of isolated vertices dropped.
pub fn classic_components(g: &Hypergraph) -> Result<PartitionedSet> {
    let sg = SimpleGraph::try_from(g).map_err(|_| Error::NotSimple("classic requires simple graph".into()))?;
    let comps = connected_components(&sg);
    let parts = comps
        .parts()
        .iter()
        .filter(|p| p.len() > 1)
        .cloned()
        .collect();
    Ok(PartitionedSet::from_trusted(g.vertices().clone(), parts))
}

/// One embedding of the motif with the images of the motif's edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledCopy {
    pub embedding: GraphMorphism,
    pub labels: BTreeSet<VertexSet>,
}

/// Every embedding of `d` into `g`, labelled by its edge images.
pub fn labeled_copies(d: &Hypergraph, g: &Hypergraph) -> Result<Vec<LabeledCopy>> {
    Ok(enumerate_embeddings(d, g)?
        .into_iter()
        .map(|m| {
            let labels = d.edges().values().map(|e| m.image(e)).collect();
            LabeledCopy { embedding: m, labels }
        })
        .collect())
}

/// Graph on the distinct copy images of the motif; two images are adjacent
/// when their merged label sets share a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaGraph {
    /// Distinct images, sorted.
    pub nodes: Vec<VertexSet>,
    /// Union of the labels of all copies with that image.
    pub labels: Vec<BTreeSet<VertexSet>>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub adjacent: Vec<(usize, usize)>,
}

impl SigmaGraph {
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.nodes.len());
        for &(i, j) in &self.adjacent {
            uf.union(i, j);
        }
        uf.groups()
    }
}

/// The label-sharing graph. Fails unless `d` passes [`validate_sigma_motif`].
pub fn sigma_graph(d: &Hypergraph, g: &Hypergraph) -> Result<SigmaGraph> {
    SchemeSpec::sigma(d.clone())?;
    sigma_graph_unchecked(d, g)
}

fn sigma_graph_unchecked(d: &Hypergraph, g: &Hypergraph) -> Result<SigmaGraph> {
    let mut by_image: BTreeMap<VertexSet, BTreeSet<VertexSet>> = BTreeMap::new();
    for c in labeled_copies(d, g)? {
        let image = c.embedding.image(d.vertices());
        by_image.entry(image).or_default().extend(c.labels);
    }
    let (nodes, labels): (Vec<_>, Vec<_>) = by_image.into_iter().unzip();
    let mut adjacent = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if !labels[i].is_disjoint(&labels[j]) {
                adjacent.push((i, j));
            }
        }
    }
    Ok(SigmaGraph { nodes, labels, adjacent })
}

fn sigma_cluster(d: &Hypergraph, g: &Hypergraph) -> Result<PartitionedSet> {
    let sg = sigma_graph_unchecked(d, g)?;
    let parts = sg
        .components()
        .into_iter()
        .map(|grp| grp.into_iter().flat_map(|i| sg.nodes[i].iter().cloned()).collect())
        .collect();
    Ok(PartitionedSet::from_trusted(g.vertices().clone(), parts))
}

/// A failed condition on a candidate motif for the label-sharing scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaMotifViolation {
    EdgeCount(usize),
    ChainUnavailable(String),
    ChainVertexCount { expected: usize, found: usize },
    ChainNotOnePart,
    CornerGlueUnavailable(String),
    CornerMaximalParts(usize),
    CornerNotThreeConnected,
    Clustering(String),
}

impl fmt::Display for SigmaMotifViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EdgeCount(n) => write!(f, "needs exactly 3 edges, found {n}"),
            Self::ChainUnavailable(e) => write!(f, "cannot glue two copies along an edge: {e}"),
            Self::ChainVertexCount { expected, found } => {
                write!(f, "two copies glued along an edge have {found} vertices, expected {expected}")
            }
            Self::ChainNotOnePart => f.write_str("two copies glued along an edge are not one all-vertex part"),
            Self::CornerGlueUnavailable(e) => write!(f, "cannot glue two copies on their corners: {e}"),
            Self::CornerMaximalParts(n) => {
                write!(f, "corner-glued copies give {n} maximal parts, expected 2")
            }
            Self::CornerNotThreeConnected => f.write_str("corner-glued copies are not 3-ly connected under the motif functor"),
            Self::Clustering(e) => write!(f, "clustering failed: {e}"),
        }
    }
}

/// Checks that `d` has the shape the label-sharing construction relies on:
/// three edges; two copies glued along a full edge have `2|V| − 3` vertices
/// and form a single all-vertex part; two copies glued on their private
/// vertices give exactly two maximal parts while their motif-functor image is
/// 3-ly connected.
pub fn validate_sigma_motif(d: &Hypergraph) -> core::result::Result<(), Vec<SigmaMotifViolation>> {
    let mut errs = Vec::new();
    if d.edge_count() != 3 || d.edge_sets().len() != 3 {
        errs.push(SigmaMotifViolation::EdgeCount(d.edge_count()));
        return Err(errs);
    }
    let clustering = |e: Error| SigmaMotifViolation::Clustering(e.to_string());
    match chain(d, 1) {
        Err(e) => errs.push(SigmaMotifViolation::ChainUnavailable(e.to_string())),
        Ok(f1) => {
            let expected = (2 * d.vertex_count()).saturating_sub(3);
            if f1.vertex_count() != expected {
                errs.push(SigmaMotifViolation::ChainVertexCount {
                    expected,
                    found: f1.vertex_count(),
                });
            }
            match sigma_cluster(d, &f1) {
                Err(e) => errs.push(clustering(e)),
                Ok(p) => {
                    if p.parts().len() != 1 || !p.has_full_part() {
                        errs.push(SigmaMotifViolation::ChainNotOnePart);
                    }
                }
            }
        }
    }
    match corner_glue(d) {
        Err(e) => errs.push(SigmaMotifViolation::CornerGlueUnavailable(e.to_string())),
        Ok(cg) => {
            match sigma_cluster(d, &cg) {
                Err(e) => errs.push(clustering(e)),
                Ok(p) => {
                    let n = p.maximal_parts().len();
                    if n != 2 {
                        errs.push(SigmaMotifViolation::CornerMaximalParts(n));
                    }
                }
            }
            let motifs = MotifSet::of_graphs([d.clone()]);
            match motifs.and_then(|m| phi(&m, &cg)) {
                Err(e) => errs.push(clustering(e)),
                Ok(f) => {
                    if !is_k_connected(&f, OverlapThreshold::Finite(3)) {
                        errs.push(SigmaMotifViolation::CornerNotThreeConnected);
                    }
                }
            }
        }
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

fn is_iso_to(g: &Hypergraph, h: &Hypergraph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && matches!(iso_check(g, h, ISO_BOUND), Ok(Some(_)))
}

fn k2() -> Hypergraph {
    build_named(&NamedGraph::Complete(2)).expect("K_2")
}

fn two_k2() -> Hypergraph {
    build_named(&NamedGraph::DisjointUnion(
        alloc::boxed::Box::new(NamedGraph::Complete(2)),
        alloc::boxed::Box::new(NamedGraph::Complete(2)),
    ))
    .expect("K_2 + K_2")
}

fn singletons(g: &Hypergraph) -> BTreeSet<VertexSet> {
    g.vertices().iter().map(|v| [v.clone()].into_iter().collect()).collect()
}

/// The small schemes, implemented literally. On graphs whose edges all have at
/// most two vertices but which are not simple, the component rule takes
/// components through the 2-vertex edges.
pub fn toy_cluster(t: ToyScheme, g: &Hypergraph) -> Result<PartitionedSet> {
    let whole = || [g.vertices().clone()].into_iter().collect::<BTreeSet<_>>();
    let parts = match t {
        ToyScheme::AlwaysOnePartExceptK2 => {
            if is_iso_to(g, &k2()) {
                singletons(g)
            } else {
                whole()
            }
        }
        ToyScheme::NoProps => {
            if is_iso_to(g, &k2()) {
                singletons(g)
            } else if is_iso_to(g, &two_k2()) {
                g.edge_sets()
            } else {
                whole()
            }
        }
        ToyScheme::ComponentRule => {
            if g.max_edge_size() > 2 {
                whole()
            } else if is_iso_to(g, &k2()) {
                singletons(g)
            } else {
                components_through_pairs(g)
            }
        }
    };
    Ok(PartitionedSet::from_trusted(g.vertices().clone(), parts))
}

fn components_through_pairs(g: &Hypergraph) -> BTreeSet<VertexSet> {
    let names: Vec<_> = g.vertices().iter().collect();
    let mut uf = UnionFind::new(names.len());
    for e in g.edges().values() {
        if e.len() == 2 {
            let mut it = e.iter().map(|v| names.binary_search(&v).expect("edge inside vertex set"));
            let (a, b) = (it.next().expect("2-edge"), it.next().expect("2-edge"));
            uf.union(a, b);
        }
    }
    uf.groups()
        .into_iter()
        .map(|grp| grp.into_iter().map(|i| names[i].clone()).collect())
        .collect()
}

//! Hypergraphs, simple graphs and their injective morphisms.
//!
//! A [`Hypergraph`] keeps a set of vertices and a map from stable edge ids to
//! vertex subsets, so parallel edges (equal vertex sets under different ids)
//! are representable. Graph equality is by ids; isomorphism is the separate
//! [`iso_check`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Default vertex bound for [`independence_number`].
pub const INDEPENDENCE_BOUND: usize = 20;
/// Default vertex bound for [`iso_check`].
pub const ISO_BOUND: usize = 8;

macro_rules! name_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Arc<str>);

        impl $name {
            pub fn new(name: impl AsRef<str>) -> Self {
                Self(Arc::from(name.as_ref()))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }

            /// Non-empty, printable, no whitespace.
            pub fn is_token(&self) -> bool {
                !self.0.is_empty() && self.0.chars().all(|c| !c.is_control() && !c.is_whitespace())
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self::new(s)
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(Arc::from(s))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(&*self.0, f)
            }
        }
    };
}

name_type!(
    /// Vertex name. Ordered lexicographically by its string.
    VertexId
);
name_type!(
    /// Edge name, distinct from the edge's vertex set.
    EdgeId
);

pub type VertexSet = BTreeSet<VertexId>;

/// Builds a vertex set from string names.
pub fn vset<I, S>(names: I) -> VertexSet
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    names.into_iter().map(VertexId::new).collect()
}

/// Renders a vertex set as `{a,b,c}`.
pub fn set_literal(set: &VertexSet) -> String {
    let mut s = String::from("{");
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(v.as_str());
    }
    s.push('}');
    s
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, VertexSet>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Hypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on `vertices` with no edges.
    pub fn edgeless<I, V>(vertices: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        Self {
            vertices: vertices.into_iter().map(Into::into).collect(),
            edges: BTreeMap::new(),
        }
    }

    /// Assembles a graph without checking it; see [`Hypergraph::validate`].
    pub fn from_parts(vertices: BTreeSet<VertexId>, edges: BTreeMap<EdgeId, VertexSet>) -> Self {
        Self { vertices, edges }
    }

    /// Graph from string names with edges numbered `e1, e2, ...`.
    pub fn build(vertices: &[&str], edges: &[&[&str]]) -> Result<Self> {
        let mut g = Self::edgeless(vertices.iter().copied());
        for (i, e) in edges.iter().enumerate() {
            g.add_edge(format!("e{}", i + 1), e.iter().copied())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: impl Into<VertexId>) -> bool {
        self.vertices.insert(v.into())
    }

    /// Adds an edge, rejecting empty edges, unknown vertices and reused ids.
    pub fn add_edge<I, V>(&mut self, id: impl Into<EdgeId>, vertices: I) -> Result<()>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let id = id.into();
        let set: VertexSet = vertices.into_iter().map(Into::into).collect();
        if set.is_empty() {
            return Err(Error::EmptyEdge(id.to_string()));
        }
        if let Some(v) = set.iter().find(|v| !self.vertices.contains(*v)) {
            return Err(Error::UnknownVertex(v.clone()));
        }
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id.to_string()));
        }
        self.edges.insert(id, set);
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeMap<EdgeId, VertexSet> {
        &self.edges
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&VertexSet> {
        self.edges.get(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    /// Distinct edge vertex sets.
    pub fn edge_sets(&self) -> BTreeSet<VertexSet> {
        self.edges.values().cloned().collect()
    }

    pub fn has_edge_set(&self, set: &VertexSet) -> bool {
        self.edges.values().any(|e| e == set)
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Every edge has two vertices and no two edges share a pair.
    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|e| e.len() == 2) && self.edge_sets().len() == self.edges.len()
    }

    /// Checks the hypergraph invariants; violations name the offending item.
    pub fn validate(&self) -> core::result::Result<(), Vec<HypergraphViolation>> {
        let mut out = Vec::new();
        for v in &self.vertices {
            if !v.is_token() {
                out.push(HypergraphViolation::BadVertexName(v.clone()));
            }
        }
        for (id, set) in &self.edges {
            if !id.is_token() {
                out.push(HypergraphViolation::BadEdgeName(id.clone()));
            }
            if set.is_empty() {
                out.push(HypergraphViolation::EmptyEdge(id.clone()));
            }
            for v in set {
                if !self.vertices.contains(v) {
                    out.push(HypergraphViolation::UnknownVertex {
                        edge: id.clone(),
                        vertex: v.clone(),
                    });
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypergraphViolation {
    BadVertexName(VertexId),
    BadEdgeName(EdgeId),
    EmptyEdge(EdgeId),
    UnknownVertex { edge: EdgeId, vertex: VertexId },
}

impl fmt::Display for HypergraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BadVertexName(v) => write!(f, "vertex name {v:?} is not a printable token"),
            Self::BadEdgeName(e) => write!(f, "edge id {e:?} is not a printable token"),
            Self::EmptyEdge(e) => write!(f, "edge {e} is empty"),
            Self::UnknownVertex { edge, vertex } => {
                write!(f, "edge {edge} references unknown vertex {vertex}")
            }
        }
    }
}

/// Validates `h`; free-function form of [`Hypergraph::validate`].
pub fn validate_hypergraph(h: &Hypergraph) -> core::result::Result<(), Vec<HypergraphViolation>> {
    h.validate()
}

/// A hypergraph whose edges are distinct vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph(Hypergraph);

impl SimpleGraph {
    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    /// Sorted neighbour lists in vertex order.
    pub fn adjacency(&self) -> BTreeMap<VertexId, VertexSet> {
        let mut adj: BTreeMap<VertexId, VertexSet> =
            self.0.vertices.iter().map(|v| (v.clone(), VertexSet::new())).collect();
        for e in self.0.edges.values() {
            let mut it = e.iter();
            if let (Some(a), Some(b)) = (it.next(), it.next()) {
                adj.get_mut(a).map(|s| s.insert(b.clone()));
                adj.get_mut(b).map(|s| s.insert(a.clone()));
            }
        }
        adj
    }
}

impl TryFrom<Hypergraph> for SimpleGraph {
    type Error = Error;

    fn try_from(g: Hypergraph) -> Result<Self> {
        if let Err(v) = g.validate() {
            return Err(Error::Domain(v[0].to_string()));
        }
        let mut seen = BTreeSet::new();
        for (id, e) in &g.edges {
            if e.len() != 2 {
                return Err(Error::NotSimple(format!("edge {id} has {} vertices", e.len())));
            }
            if !seen.insert(e) {
                return Err(Error::NotSimple(format!("edge {id} is parallel to another edge")));
            }
        }
        Ok(Self(g))
    }
}

impl TryFrom<&Hypergraph> for SimpleGraph {
    type Error = Error;

    fn try_from(g: &Hypergraph) -> Result<Self> {
        Self::try_from(g.clone())
    }
}

impl AsRef<Hypergraph> for SimpleGraph {
    fn as_ref(&self) -> &Hypergraph {
        &self.0
    }
}

/// An injective vertex map under which every source edge lands on a target edge.
#[derive(Clone, PartialEq, Eq)]
pub struct GraphMorphism {
    pub source: Arc<Hypergraph>,
    pub target: Arc<Hypergraph>,
    pub map: BTreeMap<VertexId, VertexId>,
}

impl fmt::Debug for GraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphMorphism").field("map", &self.map).finish_non_exhaustive()
    }
}

impl GraphMorphism {
    pub fn new(
        source: Arc<Hypergraph>,
        target: Arc<Hypergraph>,
        map: BTreeMap<VertexId, VertexId>,
    ) -> Self {
        Self { source, target, map }
    }

    pub fn identity(g: Arc<Hypergraph>) -> Self {
        let map = g.vertices.iter().map(|v| (v.clone(), v.clone())).collect();
        Self {
            source: g.clone(),
            target: g,
            map,
        }
    }

    pub fn apply(&self, v: &VertexId) -> Option<&VertexId> {
        self.map.get(v)
    }

    /// `f_*`: image of a vertex subset; vertices outside the domain are dropped.
    pub fn image(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.map.get(v).cloned()).collect()
    }

    pub fn validate(&self) -> core::result::Result<(), Vec<MorphismViolation>> {
        let mut out = Vec::new();
        for v in self.source.vertices() {
            match self.map.get(v) {
                None => out.push(MorphismViolation::NotTotal(v.clone())),
                Some(w) if !self.target.contains_vertex(w) => {
                    out.push(MorphismViolation::OutsideTarget(v.clone(), w.clone()))
                }
                Some(_) => {}
            }
        }
        for v in self.map.keys() {
            if !self.source.contains_vertex(v) {
                out.push(MorphismViolation::OutsideSource(v.clone()));
            }
        }
        let mut preimage: BTreeMap<&VertexId, &VertexId> = BTreeMap::new();
        for (v, w) in &self.map {
            if let Some(first) = preimage.insert(w, v) {
                out.push(MorphismViolation::NotInjective(first.clone(), v.clone(), w.clone()));
            }
        }
        let target_sets = self.target.edge_sets();
        for (id, e) in self.source.edges() {
            let img = self.image(e);
            if img.len() != e.len() || !target_sets.contains(&img) {
                out.push(MorphismViolation::EdgeNotPreserved(id.clone()));
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismViolation {
    NotTotal(VertexId),
    OutsideSource(VertexId),
    OutsideTarget(VertexId, VertexId),
    NotInjective(VertexId, VertexId, VertexId),
    EdgeNotPreserved(EdgeId),
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotTotal(v) => write!(f, "not total: {v} has no image"),
            Self::OutsideSource(v) => write!(f, "{v} is mapped but is not a source vertex"),
            Self::OutsideTarget(v, w) => write!(f, "{v} maps to {w}, which is not a target vertex"),
            Self::NotInjective(a, b, w) => write!(f, "not injective: {a} and {b} both map to {w}"),
            Self::EdgeNotPreserved(e) => {
                write!(f, "image of edge {e} is not the vertex set of a target edge")
            }
        }
    }
}

pub fn validate_graph_morphism(f: &GraphMorphism) -> core::result::Result<(), Vec<MorphismViolation>> {
    f.validate()
}

/// `g ∘ f`. The target of `f` must equal the source of `g`.
pub fn compose_morphisms(f: &GraphMorphism, g: &GraphMorphism) -> Result<GraphMorphism> {
    if !Arc::ptr_eq(&f.target, &g.source) && *f.target != *g.source {
        return Err(Error::CompositionMismatch);
    }
    let mut map = BTreeMap::new();
    for (v, w) in &f.map {
        let u = g.map.get(w).ok_or_else(|| Error::UnknownVertex(w.clone()))?;
        map.insert(v.clone(), u.clone());
    }
    Ok(GraphMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        map,
    })
}

/// `G|_p` (edges entirely inside `p`, original ids kept) with its inclusion into `G`.
pub fn restrict(g: &Arc<Hypergraph>, p: &VertexSet) -> Result<(Arc<Hypergraph>, GraphMorphism)> {
    let sub = Arc::new(restrict_graph(g, p)?);
    let map = p.iter().map(|v| (v.clone(), v.clone())).collect();
    Ok((sub.clone(), GraphMorphism::new(sub, g.clone(), map)))
}

/// The graph part of [`restrict`].
pub fn restrict_graph(g: &Hypergraph, p: &VertexSet) -> Result<Hypergraph> {
    if let Some(v) = p.iter().find(|v| !g.contains_vertex(v)) {
        return Err(Error::NotASubset(v.clone()));
    }
    let edges = g
        .edges
        .iter()
        .filter(|(_, e)| e.is_subset(p))
        .map(|(id, e)| (id.clone(), e.clone()))
        .collect();
    Ok(Hypergraph {
        vertices: p.clone(),
        edges,
    })
}

/// Degeneracy and a witnessing elimination order (repeatedly remove a vertex of
/// minimum remaining degree, smallest name first on ties).
pub fn degeneracy(g: &SimpleGraph) -> (usize, Vec<VertexId>) {
    let ix = Indexed::of(g.as_hypergraph());
    let adj = ix.adjacency();
    let n = ix.names.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut queue: BTreeSet<(usize, u32)> = (0..n as u32).map(|v| (deg[v as usize], v)).collect();
    let mut removed = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v as usize] = true;
        order.push(ix.names[v as usize].clone());
        for &w in &adj[v as usize] {
            if !removed[w as usize] {
                queue.remove(&(deg[w as usize], w));
                deg[w as usize] -= 1;
                queue.insert((deg[w as usize], w));
            }
        }
    }
    (d, order)
}

/// Size of a maximum independent set, by branch and bound.
pub fn independence_number(g: &SimpleGraph, bound: usize) -> Result<usize> {
    let n = g.as_hypergraph().vertex_count();
    if n > bound || n > 64 {
        return Err(Error::TooLarge {
            what: "graph",
            size: n,
            bound: bound.min(64),
        });
    }
    let ix = Indexed::of(g.as_hypergraph());
    let nbr: Vec<u64> = ix
        .adjacency()
        .iter()
        .map(|ws| ws.iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    mis(&nbr, all, 0, &mut best);
    Ok(best)
}

fn mis(nbr: &[u64], remaining: u64, taken: usize, best: &mut usize) {
    if taken + remaining.count_ones() as usize <= *best {
        return;
    }
    if remaining == 0 {
        *best = taken;
        return;
    }
    // Branch on the vertex with most remaining neighbours; isolated ones are free.
    let mut pick = None;
    let mut pick_deg = 0;
    let mut bits = remaining;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (nbr[v] & remaining).count_ones();
        if pick.is_none() || d > pick_deg {
            pick = Some(v);
            pick_deg = d;
        }
    }
    let v = pick.unwrap_or(0);
    if pick_deg == 0 {
        *best = (*best).max(taken + remaining.count_ones() as usize);
        return;
    }
    mis(nbr, remaining & !(1 << v) & !nbr[v], taken + 1, best);
    mis(nbr, remaining & !(1 << v), taken, best);
}

/// Breadth-first distance; `Ok(None)` when `v` is unreachable from `u`.
pub fn graph_distance(g: &SimpleGraph, u: &VertexId, v: &VertexId) -> Result<Option<usize>> {
    let ix = Indexed::of(g.as_hypergraph());
    let s = ix.index_of(u).ok_or_else(|| Error::UnknownVertex(u.clone()))?;
    let t = ix.index_of(v).ok_or_else(|| Error::UnknownVertex(v.clone()))?;
    Ok(ix.bfs(s)[t as usize])
}

/// Isomorphism test by pruned search over bijections. Returns a witness
/// bijection `V(g) → V(h)` when the graphs are isomorphic.
pub fn iso_check(g: &Hypergraph, h: &Hypergraph, bound: usize) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    let n = g.vertex_count().max(h.vertex_count());
    if n > bound {
        return Err(Error::TooLarge {
            what: "graph",
            size: n,
            bound,
        });
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let gi = Indexed::of(g);
    let hi = Indexed::of(h);
    let gp = gi.profiles();
    let hp = hi.profiles();
    let mut gs: Vec<&Vec<usize>> = gp.iter().collect();
    let mut hs: Vec<&Vec<usize>> = hp.iter().collect();
    gs.sort();
    hs.sort();
    if gs != hs {
        return Ok(None);
    }
    let gcount = gi.edge_multiset();
    let hcount = hi.edge_multiset();
    let mut sizes_g: Vec<usize> = gcount.values().copied().collect();
    let mut sizes_h: Vec<usize> = hcount.values().copied().collect();
    sizes_g.sort_unstable();
    sizes_h.sort_unstable();
    if sizes_g != sizes_h {
        return Ok(None);
    }

    // Most constrained vertices first: rare profiles, then high degree.
    let n = gi.names.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let rarity = gp.iter().filter(|p| **p == gp[v]).count();
        (rarity, core::cmp::Reverse(gp[v].len()), v)
    });
    let mut pos = alloc::vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Edge sets that become fully assigned at each step.
    let mut closing: Vec<Vec<(&Vec<u32>, usize)>> = alloc::vec![Vec::new(); n];
    for (set, &c) in &gcount {
        if let Some(last) = set.iter().map(|&v| pos[v as usize]).max() {
            closing[last].push((set, c));
        }
    }
    let mut assign = alloc::vec![u32::MAX; n];
    let mut used = alloc::vec![false; n];
    let ctx = IsoCtx {
        order: &order,
        gp: &gp,
        hp: &hp,
        closing: &closing,
        hcount: &hcount,
    };
    if ctx.search(0, &mut assign, &mut used) {
        let map = (0..n)
            .map(|v| (gi.names[v].clone(), hi.names[assign[v] as usize].clone()))
            .collect();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

struct IsoCtx<'a> {
    order: &'a [usize],
    gp: &'a [Vec<usize>],
    hp: &'a [Vec<usize>],
    closing: &'a [Vec<(&'a Vec<u32>, usize)>],
    hcount: &'a BTreeMap<Vec<u32>, usize>,
}

impl IsoCtx<'_> {
    fn search(&self, depth: usize, assign: &mut [u32], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..used.len() {
            if used[w] || self.hp[w] != self.gp[v] {
                continue;
            }
            assign[v] = w as u32;
            let ok = self.closing[depth].iter().all(|(set, c)| {
                let mut img: Vec<u32> = set.iter().map(|&x| assign[x as usize]).collect();
                img.sort_unstable();
                self.hcount.get(&img) == Some(c)
            });
            if ok {
                used[w] = true;
                if self.search(depth + 1, assign, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        assign[v] = u32::MAX;
        false
    }
}

/// Index-based view of a hypergraph: vertices are `0..n` in name order.
#[derive(Clone, Debug)]
pub(crate) struct Indexed {
    pub(crate) names: Vec<VertexId>,
    /// Every edge (parallel edges repeated), vertex indices sorted.
    pub(crate) edges: Vec<Vec<u32>>,
}

impl Indexed {
    pub(crate) fn of(g: &Hypergraph) -> Self {
        let names: Vec<VertexId> = g.vertices.iter().cloned().collect();
        let edges = g
            .edges
            .values()
            .map(|e| {
                e.iter()
                    .filter_map(|v| names.binary_search(v).ok().map(|i| i as u32))
                    .collect()
            })
            .collect();
        Self { names, edges }
    }

    pub(crate) fn len(&self) -> usize {
        self.names.len()
    }

    pub(crate) fn index_of(&self, v: &VertexId) -> Option<u32> {
        self.names.binary_search(v).ok().map(|i| i as u32)
    }

    pub(crate) fn set_of(&self, ix: &[u32]) -> VertexSet {
        ix.iter().map(|&i| self.names[i as usize].clone()).collect()
    }

    pub(crate) fn distinct_edge_sets(&self) -> Vec<Vec<u32>> {
        let mut sets = self.edges.clone();
        sets.sort();
        sets.dedup();
        sets
    }

    fn edge_multiset(&self) -> BTreeMap<Vec<u32>, usize> {
        let mut m = BTreeMap::new();
        for e in &self.edges {
            *m.entry(e.clone()).or_insert(0) += 1;
        }
        m
    }

    /// Per vertex: sorted sizes of incident edges (with multiplicity).
    fn profiles(&self) -> Vec<Vec<usize>> {
        let mut p = alloc::vec![Vec::new(); self.len()];
        for e in &self.edges {
            for &v in e {
                p[v as usize].push(e.len());
            }
        }
        for x in &mut p {
            x.sort_unstable();
        }
        p
    }

    /// Neighbour lists through 2-vertex edges.
    pub(crate) fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = alloc::vec![Vec::new(); self.len()];
        for e in &self.edges {
            if let [a, b] = e[..] {
                adj[a as usize].push(b);
                adj[b as usize].push(a);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    pub(crate) fn bfs(&self, s: u32) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = alloc::vec![None; self.len()];
        let mut queue = alloc::collections::VecDeque::new();
        dist[s as usize] = Some(0);
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x as usize].unwrap_or(0);
            for &y in &adj[x as usize] {
                if dist[y as usize].is_none() {
                    dist[y as usize] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_named, gallery, NamedGraph};

    fn simple(g: Hypergraph) -> SimpleGraph {
        SimpleGraph::try_from(g).unwrap()
    }

    #[test]
    fn validation_examples() {
        let loop_edge = Hypergraph::build(&["v1"], &[&["v1"]]).unwrap();
        assert!(validate_hypergraph(&loop_edge).is_ok());

        let mut edges = BTreeMap::new();
        edges.insert(EdgeId::new("e1"), vset(["v1", "v2"]));
        let bad = Hypergraph::from_parts(vset(["v1"]), edges);
        let errs = validate_hypergraph(&bad).unwrap_err();
        assert_eq!(errs.len(), 1);
        assert!(errs[0].to_string().contains("references unknown vertex v2"));

        let parallel = Hypergraph::build(&["v1", "v2"], &[&["v1", "v2"], &["v1", "v2"]]).unwrap();
        assert!(validate_hypergraph(&parallel).is_ok());
        assert!(!parallel.is_simple());
    }

    #[test]
    fn empty_edges_and_unknown_vertices_rejected_on_insert() {
        let mut g = Hypergraph::edgeless(["a"]);
        assert!(matches!(g.add_edge("e", Vec::<&str>::new()), Err(Error::EmptyEdge(_))));
        assert!(matches!(g.add_edge("e", ["b"]), Err(Error::UnknownVertex(_))));
        g.add_edge("e", ["a"]).unwrap();
        assert!(matches!(g.add_edge("e", ["a"]), Err(Error::DuplicateEdge(_))));
    }

    #[test]
    fn morphism_validation() {
        let g = Arc::new(gallery::scandalous_g());
        let p = vset(["v3", "v4", "v5", "v6", "v7"]);
        let (_, inc) = restrict(&g, &p).unwrap();
        assert!(inc.validate().is_ok());

        let h = Arc::new(gallery::scandalous_h());
        let id = GraphMorphism::new(g.clone(), h.clone(), GraphMorphism::identity(g.clone()).map);
        assert!(validate_graph_morphism(&id).is_ok());
        // The reverse identity misses the red and orange edges.
        let back = GraphMorphism::new(h.clone(), g.clone(), id.map.clone());
        assert!(back.validate().is_err());

        let e2 = Arc::new(Hypergraph::edgeless(["a", "b"]));
        let k1 = Arc::new(Hypergraph::edgeless(["x"]));
        let mut m = BTreeMap::new();
        m.insert(VertexId::new("a"), VertexId::new("x"));
        m.insert(VertexId::new("b"), VertexId::new("x"));
        let collapse = GraphMorphism::new(e2, k1, m);
        let errs = collapse.validate().unwrap_err();
        assert!(errs.iter().any(|e| e.to_string().contains("not injective")));
    }

    #[test]
    fn composition() {
        let g = Arc::new(gallery::scandalous_g());
        let p = vset(["v1", "v2", "v3", "v4", "v5"]);
        let q = vset(["v1", "v2", "v3"]);
        let (gp, inc_p) = restrict(&g, &p).unwrap();
        let (_, inc_q) = restrict(&gp, &q).unwrap();
        let both = compose_morphisms(&inc_q, &inc_p).unwrap();
        assert!(both.validate().is_ok());
        let (_, direct) = restrict(&g, &q).unwrap();
        assert_eq!(both.map, direct.map);
        assert_eq!(*both.target, *g);

        let id = GraphMorphism::identity(g.clone());
        let h = Arc::new(gallery::scandalous_h());
        let g_to_h = GraphMorphism::new(g.clone(), h, id.map.clone());
        assert_eq!(compose_morphisms(&id, &g_to_h).unwrap(), g_to_h);

        assert_eq!(compose_morphisms(&g_to_h, &inc_p), Err(Error::CompositionMismatch));
    }

    #[test]
    fn restriction_examples() {
        let e3 = Arc::new(build_named(&NamedGraph::Edge(3)).unwrap());
        let (r, _) = restrict(&e3, &vset(["1", "2"])).unwrap();
        assert_eq!(r.vertex_count(), 2);
        assert_eq!(r.edge_count(), 0);

        let g = Arc::new(gallery::scandalous_g());
        let (r, _) = restrict(&g, &vset(["v3", "v4", "v5", "v6", "v7"])).unwrap();
        let expected: BTreeSet<VertexSet> = [
            vset(["v3", "v4", "v5"]),
            vset(["v3", "v4", "v6"]),
            vset(["v3", "v4", "v7"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(r.edge_sets(), expected);

        let (whole, inc) = restrict(&g, g.vertices()).unwrap();
        assert_eq!(*whole, *g);
        assert_eq!(inc.map, GraphMorphism::identity(g.clone()).map);

        assert_eq!(
            restrict(&g, &vset(["zz"])).unwrap_err(),
            Error::NotASubset(VertexId::new("zz"))
        );
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&simple(build_named(&NamedGraph::Complete(4)).unwrap())).0, 3);
        assert_eq!(degeneracy(&simple(build_named(&NamedGraph::Cycle(5)).unwrap())).0, 2);
        assert_eq!(degeneracy(&simple(build_named(&NamedGraph::Path(6)).unwrap())).0, 1);
        let star = Hypergraph::build(&["c", "1", "2", "3"], &[&["c", "1"], &["c", "2"], &["c", "3"]]).unwrap();
        assert_eq!(degeneracy(&simple(star)).0, 1);
    }

    #[test]
    fn independence_examples() {
        let ind = |g: Hypergraph| independence_number(&simple(g), INDEPENDENCE_BOUND).unwrap();
        assert_eq!(ind(build_named(&NamedGraph::Complete(3)).unwrap()), 1);
        assert_eq!(ind(build_named(&NamedGraph::Cycle(5)).unwrap()), 2);
        assert_eq!(ind(build_named(&NamedGraph::TriangleWithTail(1)).unwrap()), 2);
        let big = simple(build_named(&NamedGraph::Path(21)).unwrap());
        assert!(matches!(independence_number(&big, INDEPENDENCE_BOUND), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn distance_examples() {
        let r2 = simple(build_named(&NamedGraph::TriangleWithTail(2)).unwrap());
        let d = |a: &str, b: &str| graph_distance(&r2, &VertexId::new(a), &VertexId::new(b)).unwrap();
        assert_eq!(d("1", "2"), Some(1));
        assert_eq!(d("5", "3"), Some(2));
        let two = simple(Hypergraph::build(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]).unwrap());
        assert_eq!(graph_distance(&two, &VertexId::new("a"), &VertexId::new("d")).unwrap(), None);
    }

    #[test]
    fn iso_examples() {
        let g = gallery::hull_h6();
        let w = iso_check(&g, &g, ISO_BOUND).unwrap().unwrap();
        assert!(w.iter().all(|(a, b)| a == b) || w.len() == 6);

        let e3 = build_named(&NamedGraph::Edge(3)).unwrap();
        let k3 = build_named(&NamedGraph::Complete(3)).unwrap();
        assert_eq!(iso_check(&e3, &k3, ISO_BOUND).unwrap(), None);

        let p3 = build_named(&NamedGraph::Path(3)).unwrap();
        let p3b = Hypergraph::build(&["x", "y", "z"], &[&["x", "z"], &["y", "z"]]).unwrap();
        let w = iso_check(&p3, &p3b, ISO_BOUND).unwrap().unwrap();
        assert_eq!(w[&VertexId::new("2")], VertexId::new("z"));

        let big = build_named(&NamedGraph::Path(9)).unwrap();
        assert!(iso_check(&big, &big, ISO_BOUND).is_err());
    }

    #[test]
    fn iso_respects_parallel_edge_multiplicity() {
        let a = Hypergraph::build(&["1", "2", "3"], &[&["1", "2"], &["1", "2"], &["2", "3"]]).unwrap();
        let b = Hypergraph::build(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["2", "3"]]).unwrap();
        let c = Hypergraph::build(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]).unwrap();
        assert!(iso_check(&a, &b, ISO_BOUND).unwrap().is_some());
        assert!(iso_check(&a, &c, ISO_BOUND).unwrap().is_none());
    }
}

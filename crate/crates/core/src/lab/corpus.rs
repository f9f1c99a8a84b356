//! Exhaustive corpora of small hypergraphs with morphisms between them.
//!
//! Members are distinct up to isomorphism. Generated members carry canonical
//! vertex names `1..n`; members added from explicit graphs keep their names.
//! Isomorphism classes are keyed by a canonical form: the smallest sorted list
//! of edge bitmasks over all vertex orderings compatible with a colour
//! refinement of the vertices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{GraphMorphism, Hypergraph, Indexed, VertexId, VertexSet};
use crate::motif::{embedding_assignments, Budget};

/// Largest vertex count a corpus member may have.
pub const MAX_MEMBER_VERTICES: usize = 12;

/// Refuse generation when more labeled graphs than this would be scanned.
pub const GENERATION_GUARD: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorpusBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_edge_size: usize,
    /// Members up to this size get every injective morphism between them.
    pub morphism_max_vertices: usize,
    pub simple_max_vertices: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        Self {
            max_vertices: 5,
            max_edges: 4,
            max_edge_size: 4,
            morphism_max_vertices: 4,
            simple_max_vertices: 6,
        }
    }
}

impl CorpusBounds {
    /// Stable textual form, used in reports and cache keys.
    pub fn describe(&self) -> String {
        format!(
            "n{}-m{}-s{}-hom{}-simple{}",
            self.max_vertices, self.max_edges, self.max_edge_size, self.morphism_max_vertices, self.simple_max_vertices
        )
    }
}

/// A morphism between corpus members, by index. `map[i]` is the target index
/// of source vertex `i` (vertices indexed in name order).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorpusMorphism {
    pub source: usize,
    pub target: usize,
    pub map: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    /// What the corpus was built from, recorded in reports.
    pub description: String,
    graphs: Vec<Arc<Hypergraph>>,
    names: Vec<Vec<VertexId>>,
    /// Per member: member vertex index → canonical position.
    to_canon: Vec<Vec<u32>>,
    index: BTreeMap<CanonKey, usize>,
    morphisms: Vec<CorpusMorphism>,
}

type CanonKey = (usize, Vec<u32>);

impl Corpus {
    fn empty(description: String) -> Self {
        Self {
            description,
            graphs: Vec::new(),
            names: Vec::new(),
            to_canon: Vec::new(),
            index: BTreeMap::new(),
            morphisms: Vec::new(),
        }
    }

    pub fn graphs(&self) -> &[Arc<Hypergraph>] {
        &self.graphs
    }

    pub fn graph(&self, i: usize) -> &Arc<Hypergraph> {
        &self.graphs[i]
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn morphisms(&self) -> &[CorpusMorphism] {
        &self.morphisms
    }

    /// Name-level vertex map of a corpus morphism.
    pub fn vertex_map(&self, m: &CorpusMorphism) -> BTreeMap<VertexId, VertexId> {
        let (s, t) = (&self.names[m.source], &self.names[m.target]);
        m.map.iter().enumerate().map(|(i, &x)| (s[i].clone(), t[x as usize].clone())).collect()
    }

    pub fn graph_morphism(&self, m: &CorpusMorphism) -> GraphMorphism {
        GraphMorphism::new(self.graphs[m.source].clone(), self.graphs[m.target].clone(), self.vertex_map(m))
    }

    /// Image of a vertex set of the source member under `m`.
    pub fn image(&self, m: &CorpusMorphism, set: &VertexSet) -> VertexSet {
        let (s, t) = (&self.names[m.source], &self.names[m.target]);
        set.iter()
            .map(|v| {
                let i = s.binary_search(v).expect("vertex of the source member");
                t[m.map[i] as usize].clone()
            })
            .collect()
    }

    /// Index of the member isomorphic to `g`, if any.
    pub fn find(&self, g: &Hypergraph) -> Option<usize> {
        if g.vertex_count() > MAX_MEMBER_VERTICES {
            return None;
        }
        let (n, masks) = masks_of(g);
        self.index.get(&canonical(n, &masks).key).copied()
    }

    /// Adds `g` unless an isomorphic member exists; returns the member index.
    fn insert(&mut self, g: Hypergraph) -> Result<usize> {
        check_size(&g)?;
        let (n, masks) = masks_of(&g);
        let c = canonical(n, &masks);
        if let Some(&i) = self.index.get(&c.key) {
            return Ok(i);
        }
        let i = self.graphs.len();
        self.names.push(g.vertices().iter().cloned().collect());
        self.graphs.push(Arc::new(g));
        self.to_canon.push(c.perm);
        self.index.insert(c.key, i);
        Ok(i)
    }

    /// Adds the inclusion of every restriction of member `gi` (the restriction
    /// itself is added as a member when `add_missing`).
    fn add_inclusions(&mut self, gi: usize, add_missing: bool, out: &mut BTreeSet<CorpusMorphism>) -> Result<()> {
        let g = self.graphs[gi].clone();
        let (n, masks) = masks_of(&g);
        for p in 0u32..(1u32 << n) {
            let positions: Vec<u32> = (0..n as u32).filter(|&i| p >> i & 1 == 1).collect();
            let sub_masks: Vec<u32> = masks
                .iter()
                .filter(|&&e| e & !p == 0)
                .map(|&e| compress(e, &positions))
                .collect();
            let c = canonical(positions.len(), &sub_masks);
            let member = match self.index.get(&c.key) {
                Some(&m) => m,
                None if add_missing => {
                    let vs: VertexSet = positions.iter().map(|&i| self.names[gi][i as usize].clone()).collect();
                    self.insert(crate::graph::restrict_graph(&g, &vs)?)?
                }
                None => continue,
            };
            // member vertex → canonical position → restricted position → vertex of g.
            let mut from_canon = alloc::vec![0u32; positions.len()];
            for (i, &cpos) in c.perm.iter().enumerate() {
                from_canon[cpos as usize] = i as u32;
            }
            let map = self.to_canon[member]
                .iter()
                .map(|&cpos| positions[from_canon[cpos as usize] as usize])
                .collect();
            out.insert(CorpusMorphism {
                source: member,
                target: gi,
                map,
            });
        }
        Ok(())
    }

    fn add_exhaustive(&self, max_vertices: usize, out: &mut BTreeSet<CorpusMorphism>) -> Result<()> {
        let small: Vec<usize> = (0..self.len()).filter(|&i| self.graphs[i].vertex_count() <= max_vertices).collect();
        for &a in &small {
            for &b in &small {
                if self.graphs[a].vertex_count() > self.graphs[b].vertex_count() {
                    continue;
                }
                for map in embedding_assignments(&self.graphs[a], &self.graphs[b], Budget::default())? {
                    out.insert(CorpusMorphism { source: a, target: b, map });
                }
            }
        }
        Ok(())
    }

    fn finish_morphisms(&mut self, morphism_max_vertices: usize, add_missing: bool) -> Result<()> {
        let mut set = BTreeSet::new();
        let mut i = 0;
        // New members appended by `add_inclusions` are processed in turn.
        while i < self.len() {
            self.add_inclusions(i, add_missing, &mut set)?;
            let n = self.graphs[i].vertex_count() as u32;
            set.insert(CorpusMorphism {
                source: i,
                target: i,
                map: (0..n).collect(),
            });
            i += 1;
        }
        self.add_exhaustive(morphism_max_vertices, &mut set)?;
        self.morphisms = set.into_iter().collect();
        Ok(())
    }

    /// Corpus of the given graphs closed under restriction: every restriction
    /// is a member (up to isomorphism), with its inclusion and identities, plus
    /// all injective morphisms among members with at most
    /// `morphism_max_vertices` vertices.
    pub fn from_graphs(graphs: impl IntoIterator<Item = Hypergraph>, morphism_max_vertices: usize) -> Result<Self> {
        let mut c = Self::empty(format!("closure under restriction, hom{morphism_max_vertices}"));
        for g in graphs {
            c.insert(g)?;
        }
        c.finish_morphisms(morphism_max_vertices, true)?;
        Ok(c)
    }

    /// Rebuilds a corpus from a stored member list, keeping member order.
    /// Members must be pairwise non-isomorphic and closed under restriction,
    /// as written out from [`generate_corpus`].
    pub fn restore(
        description: String,
        graphs: impl IntoIterator<Item = Hypergraph>,
        morphism_max_vertices: usize,
    ) -> Result<Self> {
        let mut c = Self::empty(description);
        for g in graphs {
            let before = c.len();
            if c.insert(g)? != before {
                return Err(Error::Domain("stored corpus has two isomorphic members".into()));
            }
        }
        c.finish_morphisms(morphism_max_vertices, false)?;
        Ok(c)
    }

    /// Adds `graphs` and their restrictions to this corpus and recomputes morphisms.
    pub fn extended(&self, graphs: impl IntoIterator<Item = Hypergraph>, morphism_max_vertices: usize) -> Result<Self> {
        let mut c = self.clone();
        for g in graphs {
            c.insert(g)?;
        }
        c.description = format!("{} + extra graphs", self.description);
        c.finish_morphisms(morphism_max_vertices, true)?;
        Ok(c)
    }
}

fn check_size(g: &Hypergraph) -> Result<()> {
    if g.vertex_count() > MAX_MEMBER_VERTICES {
        return Err(Error::TooLarge {
            what: "corpus member",
            size: g.vertex_count(),
            bound: MAX_MEMBER_VERTICES,
        });
    }
    Ok(())
}

/// Vertex count and edge bitmasks (parallel edges repeated) in name order.
fn masks_of(g: &Hypergraph) -> (usize, Vec<u32>) {
    let ix = Indexed::of(g);
    let masks = ix.edges.iter().map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
    (ix.len(), masks)
}

/// Renumbers the bits of `mask` (a subset of `positions`) to `0..positions.len()`.
fn compress(mask: u32, positions: &[u32]) -> u32 {
    positions
        .iter()
        .enumerate()
        .filter(|(_, &p)| mask >> p & 1 == 1)
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn permute(mask: u32, perm: &[u32]) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros();
        out |= 1 << perm[b as usize];
        m &= m - 1;
    }
    out
}

pub(crate) struct Canon {
    pub key: CanonKey,
    /// Vertex index → canonical position.
    pub perm: Vec<u32>,
}

/// Vertex colours from iterated refinement by incident edges.
type Signature = (usize, Vec<(u32, Vec<usize>)>);

fn colours(n: usize, masks: &[u32]) -> Vec<usize> {
    let mut colour = alloc::vec![0usize; n];
    loop {
        let sigs: Vec<Signature> = (0..n)
            .map(|v| {
                let mut inc: Vec<(u32, Vec<usize>)> = masks
                    .iter()
                    .filter(|&&e| e >> v & 1 == 1)
                    .map(|&e| {
                        let mut cs: Vec<usize> =
                            (0..n).filter(|&w| w != v && e >> w & 1 == 1).map(|w| colour[w]).collect();
                        cs.sort_unstable();
                        (e.count_ones(), cs)
                    })
                    .collect();
                inc.sort();
                (colour[v], inc)
            })
            .collect();
        let mut distinct: Vec<&Signature> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature present"))
            .collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if distinct.len() == before {
            return colour;
        }
    }
}

pub(crate) fn canonical(n: usize, masks: &[u32]) -> Canon {
    let colour = colours(n, masks);
    // Canonical positions are assigned block by block in colour order.
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| (colour[v], v));
    let block_of_pos: Vec<usize> = by_colour.iter().map(|&v| colour[v]).collect();

    struct Walk<'a> {
        colour: &'a [usize],
        block_of_pos: &'a [usize],
        masks: &'a [u32],
        perm: Vec<u32>,
        used: Vec<bool>,
        scratch: Vec<u32>,
        best: Option<(Vec<u32>, Vec<u32>)>,
    }
    impl Walk<'_> {
        fn rec(&mut self, pos: usize) {
            let n = self.colour.len();
            if pos == n {
                self.scratch.clear();
                let perm = &self.perm;
                self.scratch.extend(self.masks.iter().map(|&e| permute(e, perm)));
                self.scratch.sort_unstable();
                if self.best.as_ref().is_none_or(|(b, _)| self.scratch < *b) {
                    self.best = Some((self.scratch.clone(), self.perm.clone()));
                }
                return;
            }
            for v in 0..n {
                if !self.used[v] && self.colour[v] == self.block_of_pos[pos] {
                    self.used[v] = true;
                    self.perm[v] = pos as u32;
                    self.rec(pos + 1);
                    self.used[v] = false;
                }
            }
        }
    }
    let mut walk = Walk {
        colour: &colour,
        block_of_pos: &block_of_pos,
        masks,
        perm: alloc::vec![u32::MAX; n],
        used: alloc::vec![false; n],
        scratch: Vec::with_capacity(masks.len()),
        best: None,
    };
    walk.rec(0);
    let best = walk.best;
    let (sorted, perm) = best.expect("at least one ordering");
    // The colour sequence is part of the key only implicitly: it is
    // determined by the canonical masks, so (n, masks) suffices.
    Canon { key: (n, sorted), perm }
}

/// Labeled graphs scanned for the given vertex count.
fn labeled_count(n: usize, max_edges: usize, max_edge_size: usize) -> u64 {
    let subsets: u64 = (1..=max_edge_size.min(n)).map(|s| binom(n as u64, s as u64)).sum();
    (0..=max_edges).map(|k| binom(subsets, k as u64)).fold(0u64, u64::saturating_add)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Estimated number of labeled graphs scanned by [`generate_corpus`].
pub fn estimate_scan(bounds: &CorpusBounds) -> u64 {
    (0..=bounds.max_vertices)
        .map(|n| labeled_count(n, bounds.max_edges, bounds.max_edge_size))
        .fold(0, u64::saturating_add)
}

/// Graph on `1..n` from canonical edge masks.
fn from_masks(n: usize, masks: &[u32]) -> Hypergraph {
    let name = |i: u32| VertexId::new((i + 1).to_string());
    let mut g = Hypergraph::edgeless((0..n as u32).map(name));
    for (j, &m) in masks.iter().enumerate() {
        let vs: Vec<VertexId> = (0..n as u32).filter(|&i| m >> i & 1 == 1).map(name).collect();
        g.add_edge(format!("e{}", j + 1), vs).expect("mask inside vertex range");
    }
    g
}

/// Calls `visit` with every set of at most `max_edges` distinct masks from
/// `candidates`, as increasing index combinations.
fn for_each_edge_set(candidates: &[u32], max_edges: usize, visit: &mut impl FnMut(&[u32])) {
    fn rec(start: usize, candidates: &[u32], max_edges: usize, cur: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        visit(cur);
        if cur.len() == max_edges {
            return;
        }
        for i in start..candidates.len() {
            cur.push(candidates[i]);
            rec(i + 1, candidates, max_edges, cur, visit);
            cur.pop();
        }
    }
    rec(0, candidates, max_edges, &mut Vec::new(), visit);
}

fn enumerate_classes(
    max_vertices: usize,
    max_edges: usize,
    edge_sizes: impl Fn(u32) -> bool,
    description: String,
) -> Result<Corpus> {
    let mut c = Corpus::empty(description);
    for n in 0..=max_vertices {
        let candidates: Vec<u32> = (1u32..(1u32 << n)).filter(|m| edge_sizes(m.count_ones())).collect();
        let mut keys: BTreeSet<Vec<u32>> = BTreeSet::new();
        for_each_edge_set(&candidates, max_edges, &mut |masks| {
            keys.insert(canonical(n, masks).key.1);
        });
        for masks in keys {
            let i = c.graphs.len();
            c.names.push((0..n).map(|v| VertexId::new((v + 1).to_string())).collect());
            c.graphs.push(Arc::new(from_masks(n, &masks)));
            c.to_canon.push((0..n as u32).collect());
            c.index.insert((n, masks), i);
        }
    }
    Ok(c)
}

/// All hypergraphs within `bounds` (no parallel edges) up to isomorphism,
/// ordered by vertex count then canonical form, with their restriction
/// inclusions, identities and the exhaustive small morphisms.
pub fn generate_corpus(bounds: &CorpusBounds) -> Result<Corpus> {
    if bounds.max_vertices > MAX_MEMBER_VERTICES {
        return Err(Error::TooLarge {
            what: "corpus vertex bound",
            size: bounds.max_vertices,
            bound: MAX_MEMBER_VERTICES,
        });
    }
    let estimate = estimate_scan(bounds);
    if estimate > GENERATION_GUARD {
        return Err(Error::TooLarge {
            what: "estimated corpus scan",
            size: estimate as usize,
            bound: GENERATION_GUARD as usize,
        });
    }
    let max_size = bounds.max_edge_size as u32;
    let mut c = enumerate_classes(
        bounds.max_vertices,
        bounds.max_edges,
        |s| s <= max_size,
        format!("hypergraphs {}", bounds.describe()),
    )?;
    c.finish_morphisms(bounds.morphism_max_vertices, false)?;
    Ok(c)
}

/// All simple graphs with at most `bounds.simple_max_vertices` vertices up to
/// isomorphism, with inclusions, identities and exhaustive small morphisms.
pub fn generate_simple_corpus(bounds: &CorpusBounds) -> Result<Corpus> {
    let n = bounds.simple_max_vertices;
    if n > 7 {
        return Err(Error::TooLarge {
            what: "simple corpus vertex bound",
            size: n,
            bound: 7,
        });
    }
    let mut c = enumerate_classes(n, n * (n.saturating_sub(1)) / 2, |s| s == 2, format!("simple graphs n{n}"))?;
    c.finish_morphisms(bounds.morphism_max_vertices, false)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_named, gallery, NamedGraph};
    use crate::graph::{iso_check, validate_graph_morphism, ISO_BOUND};

    fn tiny() -> CorpusBounds {
        CorpusBounds {
            max_vertices: 2,
            max_edges: 1,
            max_edge_size: 2,
            morphism_max_vertices: 2,
            simple_max_vertices: 2,
        }
    }

    #[test]
    fn tiny_bounds_give_six_classes() {
        let c = generate_corpus(&tiny()).unwrap();
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn every_member_has_identity_and_morphisms_validate() {
        let b = CorpusBounds {
            max_vertices: 3,
            max_edges: 3,
            max_edge_size: 3,
            morphism_max_vertices: 3,
            simple_max_vertices: 3,
        };
        let c = generate_corpus(&b).unwrap();
        for i in 0..c.len() {
            let n = c.graph(i).vertex_count() as u32;
            let id = CorpusMorphism {
                source: i,
                target: i,
                map: (0..n).collect(),
            };
            assert!(c.morphisms().contains(&id));
        }
        for m in c.morphisms() {
            assert!(validate_graph_morphism(&c.graph_morphism(m)).is_ok(), "{m:?}");
        }
    }

    #[test]
    fn members_are_pairwise_non_isomorphic() {
        let b = CorpusBounds {
            max_vertices: 4,
            max_edges: 3,
            max_edge_size: 3,
            ..CorpusBounds::default()
        };
        let c = generate_corpus(&b).unwrap();
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                assert!(iso_check(c.graph(i), c.graph(j), ISO_BOUND).unwrap().is_none());
            }
        }
    }

    #[test]
    fn simple_graph_counts() {
        // Non-isomorphic simple graphs on exactly n vertices: 1, 1, 2, 4, 11.
        let b = CorpusBounds {
            simple_max_vertices: 4,
            morphism_max_vertices: 0,
            ..CorpusBounds::default()
        };
        let c = generate_simple_corpus(&b).unwrap();
        let per_n: Vec<usize> = (0..=4).map(|n| c.graphs().iter().filter(|g| g.vertex_count() == n).count()).collect();
        assert_eq!(per_n, [1, 1, 2, 4, 11]);
    }

    #[test]
    fn explicit_graphs_keep_names_and_close_under_restriction() {
        let g = gallery::hull_g4();
        let c = Corpus::from_graphs([g.clone()], 2).unwrap();
        assert_eq!(**c.graph(0), g);
        // Every subset of the four vertices restricts to some member.
        for m in c.morphisms() {
            assert!(validate_graph_morphism(&c.graph_morphism(m)).is_ok());
        }
        let p3 = build_named(&NamedGraph::Path(3)).unwrap();
        assert!(c.find(&p3).is_none());
        let e3 = build_named(&NamedGraph::Edge(3)).unwrap();
        assert!(c.find(&e3).is_some());
        let incl_into_g = c.morphisms().iter().filter(|m| m.target == 0).count();
        assert!(incl_into_g >= 16);
    }

    #[test]
    fn guard_refuses_large_scans() {
        let b = CorpusBounds {
            max_vertices: 7,
            max_edges: 6,
            max_edge_size: 7,
            ..CorpusBounds::default()
        };
        assert!(matches!(generate_corpus(&b), Err(Error::TooLarge { .. })));
    }
}

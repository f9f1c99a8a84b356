//! Embedding enumeration, the motif functor `Φ_ℜ`, and counting bounds.
//!
//! An embedding of a motif `R` into `G` is an injective vertex map under which
//! every edge of `R` lands on the vertex set of some edge of `G`. `Φ_ℜ(G)` has
//! the vertices of `G` and one edge per embedding of a motif of `ℜ`, whose
//! vertex set is the image of the motif's vertices.
//!
//! Enumeration is a backtracking search over the motif vertices in a
//! connectivity-greedy order: each new vertex shares as many edges as possible
//! with the already placed ones, its candidates are drawn from the target
//! edges through one placed neighbour, and every motif edge is checked as soon
//! as all its vertices are placed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::builders::{build_named, NamedGraph};
use crate::error::{Error, Result};
use crate::graph::{validate_hypergraph, GraphMorphism, Hypergraph, Indexed, SimpleGraph, VertexSet};

/// Node budget for one enumeration call when none is given.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Largest edge count accepted by [`acyclic_orientation_profile`].
pub const ORIENTATION_EDGE_BOUND: usize = 20;

/// One member of a representing set. The two families are infinite; against a
/// given target they are cut down to the members that can embed at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Motif {
    Graph(Hypergraph),
    /// `{E_n : n ≥ 1}`, truncated to `n ≤` the largest edge of the target.
    EdgeFamily,
    /// `{R_i : i ≥ 0}`, truncated to `3 + i ≤ |V|` of the target.
    TailFamily,
}

/// A representing set `ℜ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MotifSet {
    motifs: Vec<Motif>,
}

impl MotifSet {
    /// Fails when a motif graph is invalid or has no vertices.
    pub fn new(motifs: impl IntoIterator<Item = Motif>) -> Result<Self> {
        let motifs: Vec<Motif> = motifs.into_iter().collect();
        for (i, m) in motifs.iter().enumerate() {
            if let Motif::Graph(g) = m {
                check_motif(g).map_err(|e| Error::InvalidParameter(format!("motif {i}: {e}")))?;
            }
        }
        Ok(Self { motifs })
    }

    pub fn of_graphs(graphs: impl IntoIterator<Item = Hypergraph>) -> Result<Self> {
        Self::new(graphs.into_iter().map(Motif::Graph))
    }

    pub fn motifs(&self) -> &[Motif] {
        &self.motifs
    }

    pub fn is_empty(&self) -> bool {
        self.motifs.is_empty()
    }

    /// `ℜ ∪ {g}`.
    pub fn with(&self, g: Hypergraph) -> Result<Self> {
        check_motif(&g)?;
        let mut motifs = self.motifs.clone();
        motifs.push(Motif::Graph(g));
        Ok(Self { motifs })
    }

    /// The finite list of motifs that matter for `target`, families expanded
    /// in increasing size after the explicit motif that precedes them.
    pub fn materialize(&self, target: &Hypergraph) -> Vec<Hypergraph> {
        let mut out = Vec::new();
        for m in &self.motifs {
            match m {
                Motif::Graph(g) => out.push(g.clone()),
                Motif::EdgeFamily => {
                    for n in 1..=target.max_edge_size() {
                        out.push(build_named(&NamedGraph::Edge(n)).expect("n >= 1"));
                    }
                }
                Motif::TailFamily => {
                    for i in 0..=target.vertex_count().saturating_sub(3) {
                        if 3 + i <= target.vertex_count() {
                            out.push(build_named(&NamedGraph::TriangleWithTail(i)).expect("valid"));
                        }
                    }
                }
            }
        }
        out
    }
}

fn check_motif(g: &Hypergraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("motif has no vertices".into()));
    }
    validate_hypergraph(g).map_err(|v| Error::InvalidParameter(format!("{}", v[0])))
}

/// One edge of `Φ_ℜ(G)` with the embedding that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingEdge {
    /// Index into the materialized motif list.
    pub motif: usize,
    pub morphism: GraphMorphism,
    pub image: VertexSet,
}

/// Limits for an enumeration call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Precomputed search plan for one motif against one target.
struct Matcher {
    rn: usize,
    /// Motif vertices in placement order.
    order: Vec<usize>,
    /// For position `i`: motif edges (sorted motif vertex indices) whose last placed vertex is `order[i]`.
    closing: Vec<Vec<Vec<u32>>>,
    /// For position `i`: placed motif vertices sharing an edge with `order[i]`, with that edge's size.
    anchors: Vec<Vec<(usize, usize)>>,
    /// Per motif vertex: (edge size, number of distinct incident edge sets of that size).
    demand: Vec<Vec<(usize, usize)>>,
    gn: usize,
    /// Per target vertex and edge size: sorted co-members through edges of that size.
    reach: Vec<BTreeMap<usize, Vec<u32>>>,
    /// Per target vertex and edge size: number of distinct incident edge sets.
    supply: Vec<BTreeMap<usize, usize>>,
    target_sets: BTreeSet<Vec<u32>>,
    /// Neighbours through 2-edges, for the fast membership path.
    pair_adj: Vec<Vec<u32>>,
}

impl Matcher {
    fn new(motif: &Hypergraph, target: &Hypergraph) -> Self {
        let r = Indexed::of(motif);
        let g = Indexed::of(target);
        let rn = r.len();
        let gn = g.len();
        let r_sets = r.distinct_edge_sets();
        let g_sets = g.distinct_edge_sets();

        let mut demand = alloc::vec![BTreeMap::<usize, usize>::new(); rn];
        for e in &r_sets {
            for &v in e {
                *demand[v as usize].entry(e.len()).or_default() += 1;
            }
        }
        let demand = demand.into_iter().map(|m| m.into_iter().collect()).collect();

        let mut reach = alloc::vec![BTreeMap::<usize, Vec<u32>>::new(); gn];
        let mut supply = alloc::vec![BTreeMap::<usize, usize>::new(); gn];
        for e in &g_sets {
            for &v in e {
                *supply[v as usize].entry(e.len()).or_default() += 1;
                let list = reach[v as usize].entry(e.len()).or_default();
                list.extend(e.iter().copied().filter(|&w| w != v));
            }
        }
        for m in &mut reach {
            for list in m.values_mut() {
                list.sort_unstable();
                list.dedup();
            }
        }

        // Greedy placement order: most edges into the placed set, then most
        // incident edges, then smallest index.
        let mut placed = alloc::vec![false; rn];
        let mut order = Vec::with_capacity(rn);
        let degree: Vec<usize> = (0..rn as u32).map(|v| r_sets.iter().filter(|e| e.contains(&v)).count()).collect();
        for _ in 0..rn {
            let best = (0..rn)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = r_sets
                        .iter()
                        .filter(|e| e.contains(&(v as u32)) && e.iter().any(|&w| placed[w as usize]))
                        .count();
                    (links, degree[v], core::cmp::Reverse(v))
                })
                .expect("an unplaced vertex remains");
            placed[best] = true;
            order.push(best);
        }
        let mut position = alloc::vec![0; rn];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut closing = alloc::vec![Vec::new(); rn];
        let mut anchors = alloc::vec![Vec::new(); rn];
        for e in &r_sets {
            let last = e.iter().map(|&v| position[v as usize]).max().expect("edges are non-empty");
            closing[last].push(e.clone());
            for &u in e {
                for &w in e {
                    if position[w as usize] < position[u as usize] {
                        anchors[position[u as usize]].push((w as usize, e.len()));
                    }
                }
            }
        }
        for a in &mut anchors {
            a.sort_unstable();
            a.dedup();
        }

        Self {
            rn,
            order,
            closing,
            anchors,
            demand,
            gn,
            reach,
            supply,
            target_sets: g_sets.into_iter().collect(),
            pair_adj: g.adjacency(),
        }
    }

    fn feasible(&self, u: usize, x: usize) -> bool {
        self.demand[u]
            .iter()
            .all(|&(size, need)| self.supply[x].get(&size).copied().unwrap_or(0) >= need)
    }

    fn edge_present(&self, e: &[u32], assign: &[u32], buf: &mut Vec<u32>) -> bool {
        if let [a, b] = *e {
            let (x, y) = (assign[a as usize], assign[b as usize]);
            return self.pair_adj[x as usize].binary_search(&y).is_ok();
        }
        buf.clear();
        buf.extend(e.iter().map(|&v| assign[v as usize]));
        buf.sort_unstable();
        self.target_sets.contains(buf)
    }

    /// Calls `visit` with the assignment (indexed by motif vertex) of every
    /// embedding, in no particular order.
    fn run(&self, budget: Budget, mut visit: impl FnMut(&[u32])) -> Result<usize> {
        if self.rn > self.gn {
            return Ok(0);
        }
        let mut st = Search {
            assign: alloc::vec![u32::MAX; self.rn],
            used: alloc::vec![false; self.gn],
            nodes: 0,
            found: 0,
            buf: Vec::new(),
        };
        self.extend(0, &mut st, budget, &mut visit)?;
        Ok(st.found)
    }

    fn extend(&self, pos: usize, st: &mut Search, budget: Budget, visit: &mut impl FnMut(&[u32])) -> Result<()> {
        if pos == self.rn {
            st.found += 1;
            visit(&st.assign);
            return Ok(());
        }
        let u = self.order[pos];
        let pool: Option<&[u32]> = self.anchors[pos]
            .iter()
            .map(|&(w, size)| {
                self.reach[st.assign[w] as usize]
                    .get(&size)
                    .map_or(&[][..], Vec::as_slice)
            })
            .min_by_key(|l| l.len());
        let all: Vec<u32>;
        let candidates = match pool {
            Some(p) => p,
            None => {
                all = (0..self.gn as u32).collect();
                &all
            }
        };
        for &x in candidates {
            if st.used[x as usize] || !self.feasible(u, x as usize) {
                continue;
            }
            st.nodes += 1;
            if st.nodes > budget.max_nodes {
                return Err(Error::BudgetExceeded { found: st.found });
            }
            st.assign[u] = x;
            let mut buf = core::mem::take(&mut st.buf);
            let ok = self.closing[pos].iter().all(|e| self.edge_present(e, &st.assign, &mut buf));
            st.buf = buf;
            if ok {
                st.used[x as usize] = true;
                self.extend(pos + 1, st, budget, visit)?;
                st.used[x as usize] = false;
            }
            st.assign[u] = u32::MAX;
        }
        Ok(())
    }
}

struct Search {
    assign: Vec<u32>,
    used: Vec<bool>,
    nodes: u64,
    found: usize,
    buf: Vec<u32>,
}

/// Assignments (indexed by motif vertex, target vertices by index) of all
/// embeddings, sorted.
pub(crate) fn embedding_assignments(r: &Hypergraph, g: &Hypergraph, budget: Budget) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    Matcher::new(r, g).run(budget, |a| out.push(a.to_vec()))?;
    out.sort_unstable();
    Ok(out)
}

/// All embeddings of `r` into `g`, sorted by their vertex maps.
pub fn enumerate_embeddings(r: &Hypergraph, g: &Hypergraph) -> Result<Vec<GraphMorphism>> {
    enumerate_embeddings_with(r, g, Budget::default())
}

pub fn enumerate_embeddings_with(r: &Hypergraph, g: &Hypergraph, budget: Budget) -> Result<Vec<GraphMorphism>> {
    let source = Arc::new(r.clone());
    let target = Arc::new(g.clone());
    let rx = Indexed::of(r);
    let gx = Indexed::of(g);
    Ok(embedding_assignments(r, g, budget)?
        .into_iter()
        .map(|a| {
            let map = a
                .iter()
                .enumerate()
                .map(|(i, &x)| (rx.names[i].clone(), gx.names[x as usize].clone()))
                .collect();
            GraphMorphism::new(source.clone(), target.clone(), map)
        })
        .collect())
}

/// Number of embeddings, without materializing them.
pub fn count_embeddings(r: &Hypergraph, g: &Hypergraph, budget: Budget) -> Result<usize> {
    Matcher::new(r, g).run(budget, |_| {})
}

/// Distinct images of `V(r)` under embeddings into `g`.
fn image_sets(r: &Hypergraph, g: &Hypergraph, budget: Budget, gx: &Indexed, out: &mut BTreeSet<VertexSet>) -> Result<()> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    Matcher::new(r, g).run(budget, |a| {
        let mut s = a.to_vec();
        s.sort_unstable();
        seen.insert(s);
    })?;
    out.extend(seen.iter().map(|s| gx.set_of(s)));
    Ok(())
}

/// `Φ_ℜ(G)` with the embedding behind every edge, ordered by motif then map.
pub fn phi_with_provenance(motifs: &MotifSet, g: &Hypergraph) -> Result<Vec<EmbeddingEdge>> {
    let mut out = Vec::new();
    for (i, r) in motifs.materialize(g).into_iter().enumerate() {
        for m in enumerate_embeddings(&r, g)? {
            let image = m.image(r.vertices());
            out.push(EmbeddingEdge {
                motif: i,
                morphism: m,
                image,
            });
        }
    }
    Ok(out)
}

/// Edge id `m{motif}[a>x,b>y]` listing the vertex map in source order.
pub fn embedding_edge_id(e: &EmbeddingEdge) -> String {
    let mut s = format!("m{}[", e.motif);
    for (i, (a, x)) in e.morphism.map.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{a}>{x}");
    }
    s.push(']');
    s
}

/// `Φ_ℜ(G)`: vertices of `G`, one edge per embedding.
pub fn phi(motifs: &MotifSet, g: &Hypergraph) -> Result<Hypergraph> {
    let mut out = Hypergraph::edgeless(g.vertices().iter().cloned());
    for e in phi_with_provenance(motifs, g)? {
        out.add_edge(embedding_edge_id(&e), e.image)?;
    }
    Ok(out)
}

/// The distinct edge sets of `Φ_ℜ(G)`.
pub fn phi_edge_sets(motifs: &MotifSet, g: &Hypergraph) -> Result<BTreeSet<VertexSet>> {
    let gx = Indexed::of(g);
    let mut out = BTreeSet::new();
    for r in motifs.materialize(g) {
        image_sets(&r, g, Budget::default(), &gx, &mut out)?;
    }
    Ok(out)
}

/// Some edge contains every vertex.
pub fn is_spanned(g: &Hypergraph) -> bool {
    g.edges().values().any(|e| e == g.vertices())
}

/// Number of acyclic orientations of `h`, keyed by their number of sinks.
pub fn acyclic_orientation_profile(h: &SimpleGraph) -> Result<BTreeMap<usize, u64>> {
    let hx = Indexed::of(h.as_hypergraph());
    let m = hx.edges.len();
    if m > ORIENTATION_EDGE_BOUND {
        return Err(Error::TooLarge {
            what: "edge set",
            size: m,
            bound: ORIENTATION_EDGE_BOUND,
        });
    }
    let n = hx.len();
    let mut profile = BTreeMap::new();
    for mask in 0u32..(1u32 << m) {
        let mut out_deg = alloc::vec![0usize; n];
        let mut in_deg = alloc::vec![0usize; n];
        let mut succ = alloc::vec![Vec::new(); n];
        for (i, e) in hx.edges.iter().enumerate() {
            let (a, b) = (e[0] as usize, e[1] as usize);
            let (from, to) = if mask >> i & 1 == 0 { (a, b) } else { (b, a) };
            out_deg[from] += 1;
            in_deg[to] += 1;
            succ[from].push(to);
        }
        // Kahn's algorithm: acyclic iff every vertex gets removed.
        let mut stack: Vec<usize> = (0..n).filter(|&v| in_deg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &w in &succ[v] {
                in_deg[w] -= 1;
                if in_deg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if removed == n {
            let sinks = out_deg.iter().filter(|&&d| d == 0).count();
            *profile.entry(sinks).or_insert(0) += 1;
        }
    }
    Ok(profile)
}

/// `Σ_t Acyc_t(H) · d^(|V(H)| − t) · n^t`, an upper bound on the number of
/// embeddings of `H` into any `n`-vertex graph of degeneracy at most `d`.
/// Saturates at `u128::MAX`.
pub fn embedding_count_bound(h: &SimpleGraph, d: usize, n: usize) -> Result<u128> {
    let size = h.as_hypergraph().vertex_count();
    let mut total: u128 = 0;
    for (&t, &count) in &acyclic_orientation_profile(h)? {
        let term = (count as u128)
            .checked_mul(pow(d as u128, size - t))
            .and_then(|x| x.checked_mul(pow(n as u128, t)))
            .unwrap_or(u128::MAX);
        total = total.saturating_add(term);
    }
    Ok(total)
}

fn pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{corner_glue, d_default, gallery, NamedGraph};
    use crate::graph::{validate_graph_morphism, vset, VertexId};
    use alloc::vec;

    fn named(spec: NamedGraph) -> Hypergraph {
        build_named(&spec).unwrap()
    }

    fn motifs(gs: &[Hypergraph]) -> MotifSet {
        MotifSet::of_graphs(gs.iter().cloned()).unwrap()
    }

    /// All injective maps, filtered by the edge condition.
    fn naive(r: &Hypergraph, g: &Hypergraph) -> Vec<BTreeMap<VertexId, VertexId>> {
        let rv: Vec<VertexId> = r.vertices().iter().cloned().collect();
        let gv: Vec<VertexId> = g.vertices().iter().cloned().collect();
        let sets = g.edge_sets();
        let mut out = Vec::new();
        let mut pick: Vec<usize> = Vec::new();
        fn rec(
            pick: &mut Vec<usize>,
            rv: &[VertexId],
            gv: &[VertexId],
            r: &Hypergraph,
            sets: &BTreeSet<VertexSet>,
            out: &mut Vec<BTreeMap<VertexId, VertexId>>,
        ) {
            if pick.len() == rv.len() {
                let map: BTreeMap<VertexId, VertexId> =
                    rv.iter().cloned().zip(pick.iter().map(|&i| gv[i].clone())).collect();
                if r.edges().values().all(|e| sets.contains(&e.iter().map(|v| map[v].clone()).collect())) {
                    out.push(map);
                }
                return;
            }
            for i in 0..gv.len() {
                if !pick.contains(&i) {
                    pick.push(i);
                    rec(pick, rv, gv, r, sets, out);
                    pick.pop();
                }
            }
        }
        rec(&mut pick, &rv, &gv, r, &sets, &mut out);
        out.sort();
        out
    }

    #[test]
    fn embedding_examples() {
        let e3 = named(NamedGraph::Edge(3));
        let k2 = named(NamedGraph::Complete(2));
        let p3 = named(NamedGraph::Path(3));
        assert_eq!(enumerate_embeddings(&e3, &e3).unwrap().len(), 6);
        assert_eq!(enumerate_embeddings(&k2, &p3).unwrap().len(), 4);
        let k3 = named(NamedGraph::Complete(3));
        assert!(enumerate_embeddings(&k3, &named(NamedGraph::Cycle(4))).unwrap().is_empty());
        for m in enumerate_embeddings(&k2, &p3).unwrap() {
            assert!(validate_graph_morphism(&m).is_ok());
        }
    }

    #[test]
    fn agrees_with_naive_search() {
        let cases = [
            (named(NamedGraph::Complete(3)), d_default()),
            (named(NamedGraph::Path(3)), named(NamedGraph::Complete(4))),
            (gallery::hull_g4(), gallery::hull_h6()),
            (named(NamedGraph::Edge(3)), gallery::overlapping_parts()),
            (d_default(), corner_glue(&d_default()).unwrap()),
            (Hypergraph::edgeless(["x", "y"]), named(NamedGraph::Path(3))),
        ];
        for (r, g) in cases {
            let got: Vec<_> = enumerate_embeddings(&r, &g).unwrap().into_iter().map(|m| m.map).collect();
            assert_eq!(got, naive(&r, &g));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let k2 = named(NamedGraph::Complete(2));
        let k5 = named(NamedGraph::Complete(5));
        let err = enumerate_embeddings_with(&k2, &k5, Budget { max_nodes: 5 }).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert_eq!(count_embeddings(&k2, &k5, Budget::default()).unwrap(), 20);
    }

    #[test]
    fn phi_examples() {
        let k2 = named(NamedGraph::Complete(2));
        let p3 = named(NamedGraph::Path(3));
        let f = phi(&motifs(core::slice::from_ref(&k2)), &p3).unwrap();
        assert_eq!(f.edge_count(), 4);
        assert_eq!(f.vertices(), p3.vertices());
        assert_eq!(f.edge_sets(), [vset(["1", "2"]), vset(["2", "3"])].into_iter().collect());
        assert_eq!(
            phi_edge_sets(&motifs(&[k2]), &p3).unwrap(),
            [vset(["1", "2"]), vset(["2", "3"])].into_iter().collect()
        );

        let empty = phi(&MotifSet::default(), &p3).unwrap();
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(empty.vertex_count(), 3);

        let cg = corner_glue(&d_default()).unwrap();
        let f = phi(&motifs(&[named(NamedGraph::Edge(3))]), &cg).unwrap();
        assert_eq!(f.edge_count(), 36);
        assert_eq!(f.edge_sets().len(), 6);
    }

    #[test]
    fn phi_edge_ids_are_stable() {
        let k2 = named(NamedGraph::Complete(2));
        let f = phi(&motifs(&[k2]), &named(NamedGraph::Path(3))).unwrap();
        let ids: Vec<&str> = f.edges().keys().map(|e| e.as_str()).collect();
        assert_eq!(ids, vec!["m0[1>1,2>2]", "m0[1>2,2>1]", "m0[1>2,2>3]", "m0[1>3,2>2]"]);
    }

    #[test]
    fn hull_example_edge_sets() {
        let h6 = gallery::hull_h6();
        let e3 = named(NamedGraph::Edge(3));
        let base = phi_edge_sets(&motifs(core::slice::from_ref(&e3)), &h6).unwrap();
        let more = phi_edge_sets(&motifs(&[e3, gallery::hull_g4()]), &h6).unwrap();
        let new: BTreeSet<_> = more.difference(&base).cloned().collect();
        assert_eq!(
            new,
            [vset(["v1", "v2", "v3", "v4"]), vset(["v3", "v4", "v5", "v6"])].into_iter().collect()
        );
    }

    #[test]
    fn tail_tip_uncovered() {
        let r = |i| named(NamedGraph::TriangleWithTail(i));
        let sets = phi_edge_sets(&motifs(&[r(0), r(1)]), &r(2)).unwrap();
        let covered: VertexSet = sets.iter().flatten().cloned().collect();
        assert!(!covered.contains(&VertexId::new("5")));
        assert_eq!(sets, [vset(["1", "2", "3"]), vset(["1", "2", "3", "4"])].into_iter().collect());
    }

    #[test]
    fn families_truncate() {
        let set = MotifSet::new([Motif::EdgeFamily]).unwrap();
        let g = gallery::scandalous_g();
        assert_eq!(set.materialize(&g).len(), 3);
        assert_eq!(phi_edge_sets(&set, &g).unwrap(), g.edge_sets());
        let tails = MotifSet::new([Motif::TailFamily]).unwrap();
        assert_eq!(tails.materialize(&named(NamedGraph::Path(5))).len(), 3);
        assert!(tails.materialize(&named(NamedGraph::Path(2))).is_empty());
    }

    #[test]
    fn spanned_examples() {
        let e3 = named(NamedGraph::Edge(3));
        assert!(is_spanned(&e3));
        assert!(!is_spanned(&named(NamedGraph::Path(3))));
        assert!(is_spanned(&phi(&motifs(core::slice::from_ref(&e3)), &e3).unwrap()));
    }

    #[test]
    fn orientation_profiles() {
        let simple = |g| SimpleGraph::try_from(g).unwrap();
        let k2 = simple(named(NamedGraph::Complete(2)));
        let p3 = simple(named(NamedGraph::Path(3)));
        let k3 = simple(named(NamedGraph::Complete(3)));
        assert_eq!(acyclic_orientation_profile(&k2).unwrap(), [(1, 2)].into_iter().collect());
        assert_eq!(acyclic_orientation_profile(&p3).unwrap(), [(1, 3), (2, 1)].into_iter().collect());
        assert_eq!(acyclic_orientation_profile(&k3).unwrap(), [(1, 6)].into_iter().collect());
        assert_eq!(embedding_count_bound(&k2, 1, 10).unwrap(), 20);
        assert_eq!(embedding_count_bound(&k3, 2, 10).unwrap(), 240);
        assert_eq!(embedding_count_bound(&p3, 1, 10).unwrap(), 130);
        let k7 = simple(named(NamedGraph::Complete(7)));
        assert!(matches!(acyclic_orientation_profile(&k7), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn motif_validation() {
        assert!(MotifSet::of_graphs([Hypergraph::new()]).is_err());
    }
}

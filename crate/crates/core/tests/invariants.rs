use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use hyperclust_core::builders::{build_named, d_default, NamedGraph};
use hyperclust_core::graph::{
    compose_morphisms, degeneracy, independence_number, restrict, restrict_graph, GraphMorphism, Hypergraph,
    SimpleGraph, VertexId, VertexSet,
};
use hyperclust_core::line::{k_line_graph, pi_infinity_parts, pi_k, OverlapThreshold};
use hyperclust_core::motif::{enumerate_embeddings, is_spanned, phi, phi_edge_sets, MotifSet};
use hyperclust_core::partition::{
    identity_morphism, is_non_overlapping, is_refinement, remove_spurious, validate_partition_morphism,
    PartitionedSet,
};
use hyperclust_core::scheme::{classic_components, cluster, SchemeSpec, ToyScheme};
use proptest::prelude::*;

const THRESHOLDS: [OverlapThreshold; 4] = [
    OverlapThreshold::Finite(1),
    OverlapThreshold::Finite(2),
    OverlapThreshold::Finite(3),
    OverlapThreshold::Infinite,
];

fn name(i: usize) -> VertexId {
    VertexId::from(format!("v{i}"))
}

fn graph_from(n: usize, masks: &[u32]) -> Hypergraph {
    let mut g = Hypergraph::edgeless((0..n).map(name));
    for (j, m) in masks.iter().enumerate() {
        let vs: Vec<VertexId> = (0..n).filter(|i| m >> i & 1 == 1).map(name).collect();
        if !vs.is_empty() {
            g.add_edge(format!("e{j}"), vs).unwrap();
        }
    }
    g
}

/// Hypergraphs on up to `max_n` vertices; parallel edges can occur.
fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(1u32..(1 << n), 0..=max_m).prop_map(move |masks| graph_from(n, &masks))
    })
}

fn simple_graph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<u32> = (0..n).flat_map(|a| (a + 1..n).map(move |b| 1 << a | 1 << b)).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let masks: Vec<u32> = pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(m, _)| *m).collect();
            graph_from(n, &masks)
        })
    })
}

/// A graph `G`, a larger host `H` built from a relabeled copy of `G` plus
/// extra vertices and edges, and the embedding `G -> H`.
fn morphism_case() -> impl Strategy<Value = GraphMorphism> {
    (hypergraph(4, 4), 0usize..3, proptest::collection::vec(1u32..(1 << 7), 0..3), any::<u64>()).prop_map(
        |(g, extra, host_masks, shuffle)| {
            let n = g.vertex_count();
            let total = n + extra;
            let mut slots: Vec<usize> = (0..total).collect();
            // Deterministic shuffle driven by the generated word.
            let mut s = shuffle;
            for i in (1..total).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                slots.swap(i, (s >> 33) as usize % (i + 1));
            }
            let map: BTreeMap<VertexId, VertexId> =
                g.vertices().iter().enumerate().map(|(i, v)| (v.clone(), name(100 + slots[i]))).collect();
            let mut h = Hypergraph::edgeless((0..total).map(|i| name(100 + i)));
            for (id, e) in g.edges() {
                h.add_edge(format!("c{id}"), e.iter().map(|v| map[v].clone())).unwrap();
            }
            for (j, m) in host_masks.iter().enumerate() {
                let vs: Vec<VertexId> = (0..total).filter(|i| m >> i & 1 == 1).map(|i| name(100 + i)).collect();
                if !vs.is_empty() {
                    h.add_edge(format!("x{j}"), vs).unwrap();
                }
            }
            GraphMorphism::new(Arc::new(g), Arc::new(h), map)
        },
    )
}

fn subsets(vs: &VertexSet) -> Vec<VertexSet> {
    let v: Vec<&VertexId> = vs.iter().collect();
    (0u32..1 << v.len())
        .map(|m| (0..v.len()).filter(|i| m >> i & 1 == 1).map(|i| v[i].clone()).collect())
        .collect()
}

fn naive_independence(g: &SimpleGraph) -> usize {
    let h = g.as_hypergraph();
    subsets(h.vertices())
        .into_iter()
        .filter(|s| h.edges().values().all(|e| !e.is_subset(s)))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Every injective map from `r` into `g` carrying edges onto edges.
fn naive_embeddings(r: &Hypergraph, g: &Hypergraph) -> BTreeSet<BTreeMap<VertexId, VertexId>> {
    fn rec(
        rv: &[VertexId],
        gv: &[VertexId],
        cur: &mut BTreeMap<VertexId, VertexId>,
        out: &mut Vec<BTreeMap<VertexId, VertexId>>,
    ) {
        if cur.len() == rv.len() {
            out.push(cur.clone());
            return;
        }
        let v = &rv[cur.len()];
        for w in gv {
            if !cur.values().any(|x| x == w) {
                cur.insert(v.clone(), w.clone());
                rec(rv, gv, cur, out);
                cur.remove(v);
            }
        }
    }
    let rv: Vec<VertexId> = r.vertices().iter().cloned().collect();
    let gv: Vec<VertexId> = g.vertices().iter().cloned().collect();
    let mut all = Vec::new();
    rec(&rv, &gv, &mut BTreeMap::new(), &mut all);
    let targets = g.edge_sets();
    all.into_iter()
        .filter(|f| r.edges().values().all(|e| targets.contains(&e.iter().map(|v| f[v].clone()).collect())))
        .collect()
}

fn partitioned() -> impl Strategy<Value = PartitionedSet<u8>> {
    proptest::collection::vec(proptest::collection::btree_set(0u8..6, 0..4), 0..5)
        .prop_map(|parts| PartitionedSet::new((0u8..6).collect(), parts).unwrap())
}

fn non_overlapping() -> impl Strategy<Value = PartitionedSet<u8>> {
    proptest::collection::vec(0u8..4, 6).prop_map(|labels| {
        let mut parts: BTreeMap<u8, BTreeSet<u8>> = BTreeMap::new();
        for (v, l) in labels.into_iter().enumerate() {
            if l < 3 {
                parts.entry(l).or_default().insert(v as u8);
            }
        }
        PartitionedSet::new((0u8..6).collect(), parts.into_values()).unwrap()
    })
}

fn schemes() -> Vec<SchemeSpec> {
    let k2 = build_named(&NamedGraph::Complete(2)).unwrap();
    let e3 = build_named(&NamedGraph::Edge(3)).unwrap();
    let mut out = vec![
        SchemeSpec::representable(MotifSet::of_graphs([k2]).unwrap(), OverlapThreshold::Finite(1)),
        SchemeSpec::representable(MotifSet::of_graphs([e3]).unwrap(), OverlapThreshold::Finite(2)),
        SchemeSpec::sigma(d_default()).unwrap(),
    ];
    out.extend(ToyScheme::ALL.iter().map(|t| SchemeSpec::Toy(*t)));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generated_graphs_validate(g in hypergraph(6, 6)) {
        prop_assert!(g.validate().is_ok());
    }

    #[test]
    fn restriction_inclusion_composes_with_morphisms(f in morphism_case(), pick in any::<u8>()) {
        let p: VertexSet = f.source.vertices().iter().enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1).map(|(_, v)| v.clone()).collect();
        let (_, inc) = restrict(&f.source, &p).unwrap();
        prop_assert!(inc.validate().is_ok());
        let composed = compose_morphisms(&inc, &f).unwrap();
        prop_assert!(composed.validate().is_ok());
    }

    #[test]
    fn composition_is_associative_with_identity_units(f in morphism_case(), pick in any::<u8>()) {
        let p: VertexSet = f.source.vertices().iter().enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1).map(|(_, v)| v.clone()).collect();
        let (_, inc) = restrict(&f.source, &p).unwrap();
        let id_h = GraphMorphism::identity(f.target.clone());
        let left = compose_morphisms(&compose_morphisms(&inc, &f).unwrap(), &id_h).unwrap();
        let right = compose_morphisms(&inc, &compose_morphisms(&f, &id_h).unwrap()).unwrap();
        prop_assert_eq!(&left.map, &right.map);
        let id_g = GraphMorphism::identity(f.source.clone());
        prop_assert_eq!(&compose_morphisms(&id_g, &f).unwrap().map, &f.map);
    }

    #[test]
    fn degeneracy_bounded_by_max_degree(g in simple_graph(8)) {
        let s = SimpleGraph::try_from(g).unwrap();
        let (d, order) = degeneracy(&s);
        let adj = s.adjacency();
        let max_deg = adj.values().map(|n| n.len()).max().unwrap_or(0);
        prop_assert!(d <= max_deg);
        // Removing vertices in the returned order never meets a degree above d.
        let mut removed = BTreeSet::new();
        for v in &order {
            let deg = adj[v].iter().filter(|w| !removed.contains(*w)).count();
            prop_assert!(deg <= d);
            removed.insert(v.clone());
        }
    }

    #[test]
    fn independence_matches_subset_enumeration(g in simple_graph(9)) {
        let s = SimpleGraph::try_from(g).unwrap();
        prop_assert_eq!(independence_number(&s, 20).unwrap(), naive_independence(&s));
    }

    #[test]
    fn remove_spurious_is_idempotent(p in partitioned()) {
        let r = remove_spurious(&p);
        prop_assert_eq!(&remove_spurious(&r), &r);
        for a in r.parts() {
            for b in r.parts() {
                prop_assert!(a == b || !a.is_subset(b));
            }
        }
        prop_assert!(validate_partition_morphism(&identity_morphism(&p, &p)).unwrap().is_ok());
        prop_assert!(validate_partition_morphism(&identity_morphism(&p, &r)).unwrap().is_ok());
        prop_assert!(validate_partition_morphism(&identity_morphism(&r, &p)).unwrap().is_ok());
    }

    #[test]
    fn refinement_is_reflexive_and_transitive(a in partitioned(), b in partitioned(), c in partitioned()) {
        prop_assert!(is_refinement(&a, &a).unwrap().is_ok());
        if is_refinement(&a, &b).unwrap().is_ok() && is_refinement(&b, &c).unwrap().is_ok() {
            prop_assert!(is_refinement(&a, &c).unwrap().is_ok());
        }
    }

    #[test]
    fn mutual_refinement_of_partitions_is_equality(a in non_overlapping(), b in non_overlapping()) {
        if is_refinement(&a, &b).unwrap().is_ok() && is_refinement(&b, &a).unwrap().is_ok() {
            prop_assert_eq!(a.parts(), b.parts());
        }
    }

    #[test]
    fn phi_is_functorial(f in morphism_case()) {
        for r in [NamedGraph::Complete(2), NamedGraph::Edge(3), NamedGraph::Path(3)] {
            let set = MotifSet::of_graphs([build_named(&r).unwrap()]).unwrap();
            let target = phi_edge_sets(&set, &f.target).unwrap();
            for s in phi_edge_sets(&set, &f.source).unwrap() {
                prop_assert!(target.contains(&f.image(&s)));
            }
        }
    }

    #[test]
    fn phi_commutes_with_restriction(g in hypergraph(5, 5), pick in any::<u8>()) {
        let p: VertexSet = g.vertices().iter().enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1).map(|(_, v)| v.clone()).collect();
        let sub = restrict_graph(&g, &p).unwrap();
        for r in [NamedGraph::Complete(2), NamedGraph::Edge(3), NamedGraph::Edge(2)] {
            let set = MotifSet::of_graphs([build_named(&r).unwrap()]).unwrap();
            let lhs = phi_edge_sets(&set, &sub).unwrap();
            let rhs: BTreeSet<VertexSet> =
                phi_edge_sets(&set, &g).unwrap().into_iter().filter(|s| s.is_subset(&p)).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn embeddings_match_naive_oracle(g in hypergraph(5, 5)) {
        for r in [NamedGraph::Complete(2), NamedGraph::Path(3), NamedGraph::Edge(3), NamedGraph::Complete(3)] {
            let r = build_named(&r).unwrap();
            let fast: BTreeSet<_> = enumerate_embeddings(&r, &g).unwrap().into_iter().map(|m| m.map).collect();
            prop_assert_eq!(fast, naive_embeddings(&r, &g));
        }
    }

    #[test]
    fn line_graph_is_functorial(f in morphism_case()) {
        for k in THRESHOLDS {
            let src = k_line_graph(&f.source, k);
            let dst = k_line_graph(&f.target, k);
            let index: BTreeMap<&VertexSet, usize> = dst.nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
            let adj: BTreeSet<(usize, usize)> = dst.adjacent.iter().copied().collect();
            for &(a, b) in &src.adjacent {
                let (x, y) = (index[&f.image(&src.nodes[a])], index[&f.image(&src.nodes[b])]);
                prop_assert!(adj.contains(&(x.min(y), x.max(y))));
            }
            let pf = validate_partition_morphism(&hyperclust_core::partition::PartitionMorphism {
                source: pi_k(&f.source, k),
                target: pi_k(&f.target, k),
                map: f.map.clone(),
            }).unwrap();
            prop_assert!(pf.is_ok(), "k = {}", k);
        }
    }

    #[test]
    fn pi_one_is_a_partition(g in hypergraph(6, 6)) {
        prop_assert!(is_non_overlapping(&pi_k(&g, OverlapThreshold::Finite(1))));
    }

    #[test]
    fn pi_one_on_simple_graphs_is_classic(g in simple_graph(7)) {
        let (a, b) = (pi_k(&g, OverlapThreshold::Finite(1)), classic_components(&g).unwrap());
        prop_assert_eq!(a.parts(), b.parts());
    }

    #[test]
    fn pi_k_is_excisive(g in hypergraph(6, 6)) {
        for k in THRESHOLDS {
            for p in pi_k(&g, k).parts() {
                let sub = restrict_graph(&g, p).unwrap();
                prop_assert!(pi_k(&sub, k).has_part(p));
            }
        }
    }

    #[test]
    fn pi_infinity_is_edge_sets(g in hypergraph(6, 6)) {
        prop_assert_eq!(pi_k(&g, OverlapThreshold::Infinite), pi_infinity_parts(&g));
    }

    #[test]
    fn schemes_keep_the_vertex_set(g in hypergraph(6, 5)) {
        for s in schemes() {
            let c = cluster(&s, &g).unwrap();
            prop_assert_eq!(c.underlying(), g.vertices());
        }
    }

    #[test]
    fn builders_are_deterministic(n in 1usize..7) {
        for spec in [NamedGraph::Complete(n), NamedGraph::Cycle(n.max(3)), NamedGraph::Path(n), NamedGraph::TriangleWithTail(n)] {
            prop_assert_eq!(build_named(&spec).unwrap(), build_named(&spec).unwrap());
        }
    }
}

#[test]
fn motifs_span_themselves() {
    let mut motifs: Vec<Hypergraph> = (1..6).map(|n| build_named(&NamedGraph::Complete(n)).unwrap()).collect();
    motifs.extend((1..6).map(|n| build_named(&NamedGraph::Edge(n)).unwrap()));
    motifs.extend((0..3).map(|n| build_named(&NamedGraph::TriangleWithTail(n)).unwrap()));
    motifs.push(d_default());
    motifs.push(Hypergraph::build(&["a", "b", "c"], &[&["a", "b"], &["a", "b", "c"]]).unwrap());
    for r in motifs {
        let set = MotifSet::of_graphs([r.clone()]).unwrap();
        assert!(is_spanned(&phi(&set, &r).unwrap()), "{r:?}");
    }
}

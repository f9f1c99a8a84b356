//! Corpus-level checks of scheme properties.
//!
//! A pass is bounded evidence: it says the property holds on every member (or
//! morphism) of the corpus named in the report, nothing more.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::{restrict_graph, Hypergraph, VertexId, VertexSet};
use crate::lab::corpus::Corpus;
use crate::line::{is_k_connected, OverlapThreshold};
use crate::motif::{is_spanned, phi, phi_edge_sets, MotifSet};
use crate::partition::{check_parts_map, is_refinement, PartitionedSet, RefinementViolation};
use crate::scheme::{cluster, SchemeSpec};

/// Counterexamples kept per report; the statistics count all of them.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Excisive,
    Functorial,
    Refines,
    Equal,
    Hull,
    ConnectedHull,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Self::Excisive => "excisive",
            Self::Functorial => "functorial",
            Self::Refines => "refines",
            Self::Equal => "equal",
            Self::Hull => "hull",
            Self::ConnectedHull => "connected-hull",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Self::Excisive,
            Self::Functorial,
            Self::Refines,
            Self::Equal,
            Self::Hull,
            Self::ConnectedHull,
        ]
        .into_iter()
        .find(|p| p.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stat {
    Int(u64),
    Bool(bool),
}

/// One failing (or, under `evidence`, noteworthy) instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub property: Property,
    /// Corpus member index, or `usize::MAX` for a graph outside the corpus.
    pub graph_index: usize,
    pub graph: Arc<Hypergraph>,
    pub target: Option<Arc<Hypergraph>>,
    pub map: Option<BTreeMap<VertexId, VertexId>>,
    pub part: Option<VertexSet>,
    pub detail: String,
    /// Sort key for deterministic merging.
    pub order: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub property: Property,
    pub schemes: Vec<String>,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    /// Instances that do not decide the verdict but are worth showing, such as
    /// the graph on which two schemes differ in a hull check.
    pub evidence: Vec<Counterexample>,
    pub statistics: BTreeMap<String, Stat>,
    pub bounds: String,
}

impl CheckReport {
    fn new(property: Property, schemes: Vec<String>, corpus: &Corpus) -> Self {
        Self {
            property,
            schemes,
            verdict: Verdict::Pass,
            counterexamples: Vec::new(),
            evidence: Vec::new(),
            statistics: BTreeMap::new(),
            bounds: corpus.description.clone(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn count(&mut self, key: &str, by: u64) {
        match self.statistics.entry(key.to_string()).or_insert(Stat::Int(0)) {
            Stat::Int(n) => *n += by,
            Stat::Bool(_) => {}
        }
    }

    fn flag(&mut self, key: &str, value: bool) {
        self.statistics.insert(key.to_string(), Stat::Bool(value));
    }

    fn fail(&mut self, cx: Counterexample) {
        self.verdict = Verdict::Fail;
        self.count("failures", 1);
        self.counterexamples.push(cx);
    }

    fn finish(mut self) -> Self {
        self.counterexamples.sort_by_key(|c| c.order);
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self.evidence.sort_by_key(|c| c.order);
        self.evidence.truncate(MAX_COUNTEREXAMPLES);
        self
    }

    /// Combines shard reports of one check. Integer statistics add up,
    /// counterexamples are merged in corpus order.
    pub fn merge(parts: Vec<CheckReport>) -> Option<CheckReport> {
        let mut it = parts.into_iter();
        let mut acc = it.next()?;
        for r in it {
            if r.verdict == Verdict::Fail {
                acc.verdict = Verdict::Fail;
            }
            acc.counterexamples.extend(r.counterexamples);
            acc.evidence.extend(r.evidence);
            for (k, v) in r.statistics {
                match (acc.statistics.get_mut(&k), v) {
                    (Some(Stat::Int(a)), Stat::Int(b)) => *a += b,
                    (Some(Stat::Bool(a)), Stat::Bool(b)) => *a = *a && b,
                    (None, v) => {
                        acc.statistics.insert(k, v);
                    }
                    _ => {}
                }
            }
        }
        Some(acc.finish())
    }
}

/// Which members (or morphisms) a call evaluates: those whose index is
/// `index` modulo `count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const ALL: Shard = Shard { index: 0, count: 1 };

    fn owns(self, i: usize) -> bool {
        i % self.count.max(1) == self.index
    }
}

fn cx(property: Property, corpus: &Corpus, gi: usize, detail: String) -> Counterexample {
    Counterexample {
        property,
        graph_index: gi,
        graph: corpus.graph(gi).clone(),
        target: None,
        map: None,
        part: None,
        detail,
        order: (gi, 0),
    }
}

/// Whether `p` is a part of the clustering of `g|_p`.
fn excises(s: &SchemeSpec, g: &Hypergraph, p: &VertexSet) -> Result<bool> {
    Ok(cluster(s, &restrict_graph(g, p)?)?.has_part(p))
}

pub fn check_excisive(s: &SchemeSpec, c: &Corpus) -> Result<CheckReport> {
    check_excisive_shard(s, c, Shard::ALL).map(CheckReport::finish)
}

pub fn check_excisive_shard(s: &SchemeSpec, c: &Corpus, shard: Shard) -> Result<CheckReport> {
    let mut r = CheckReport::new(Property::Excisive, alloc::vec![s.to_string()], c);
    for (gi, g) in c.graphs().iter().enumerate() {
        if !shard.owns(gi) {
            continue;
        }
        r.count("graphs", 1);
        for (pi, p) in cluster(s, g)?.parts().iter().enumerate() {
            r.count("parts", 1);
            if !excises(s, g, p)? {
                let mut e = cx(
                    Property::Excisive,
                    c,
                    gi,
                    format!("part {} is not a part of the clustering of its restriction", crate::graph::set_literal(p)),
                );
                e.part = Some(p.clone());
                e.order = (gi, pi);
                r.fail(e);
            }
        }
    }
    Ok(r)
}

/// Per-member clusterings, computed only for the members a shard touches.
struct Clusterings<'a> {
    s: &'a SchemeSpec,
    corpus: &'a Corpus,
    cache: BTreeMap<usize, PartitionedSet>,
}

impl<'a> Clusterings<'a> {
    fn new(s: &'a SchemeSpec, corpus: &'a Corpus) -> Self {
        Self {
            s,
            corpus,
            cache: BTreeMap::new(),
        }
    }

    fn get(&mut self, i: usize) -> Result<&PartitionedSet> {
        if !self.cache.contains_key(&i) {
            let p = cluster(self.s, self.corpus.graph(i))?;
            self.cache.insert(i, p);
        }
        Ok(&self.cache[&i])
    }
}

pub fn check_functorial(s: &SchemeSpec, c: &Corpus) -> Result<CheckReport> {
    check_functorial_shard(s, c, Shard::ALL).map(CheckReport::finish)
}

pub fn check_functorial_shard(s: &SchemeSpec, c: &Corpus, shard: Shard) -> Result<CheckReport> {
    let mut r = CheckReport::new(Property::Functorial, alloc::vec![s.to_string()], c);
    let mut cl = Clusterings::new(s, c);
    for (mi, m) in c.morphisms().iter().enumerate() {
        if !shard.owns(mi) {
            continue;
        }
        r.count("morphisms", 1);
        let src = cl.get(m.source)?.clone();
        let tgt = cl.get(m.target)?;
        let map = c.vertex_map(m);
        if let Err(uncovered) = check_parts_map(&src, tgt, |v| map.get(v).cloned())? {
            let u = &uncovered[0];
            let mut e = cx(
                Property::Functorial,
                c,
                m.source,
                format!(
                    "image {} of part {} lies in no part of the target clustering",
                    crate::graph::set_literal(&u.image),
                    crate::graph::set_literal(&u.part)
                ),
            );
            e.target = Some(c.graph(m.target).clone());
            e.map = Some(map);
            e.part = Some(u.part.clone());
            e.order = (m.source, mi);
            r.fail(e);
        }
    }
    Ok(r)
}

pub fn check_refines(s1: &SchemeSpec, s2: &SchemeSpec, c: &Corpus) -> Result<CheckReport> {
    check_refines_shard(s1, s2, c, Shard::ALL).map(CheckReport::finish)
}

pub fn check_refines_shard(s1: &SchemeSpec, s2: &SchemeSpec, c: &Corpus, shard: Shard) -> Result<CheckReport> {
    let mut r = CheckReport::new(Property::Refines, alloc::vec![s1.to_string(), s2.to_string()], c);
    for (gi, g) in c.graphs().iter().enumerate() {
        if !shard.owns(gi) {
            continue;
        }
        r.count("graphs", 1);
        if let Err(v) = is_refinement(&cluster(s1, g)?, &cluster(s2, g)?)? {
            let (part, detail) = match v {
                RefinementViolation::NotContained(p) => {
                    let d = format!("part {} of the first clustering lies in no part of the second", crate::graph::set_literal(&p));
                    (p, d)
                }
                RefinementViolation::Missing(p) => {
                    let d = format!("part {} of the second clustering is missing from the first", crate::graph::set_literal(&p));
                    (p, d)
                }
            };
            let mut e = cx(Property::Refines, c, gi, detail);
            e.part = Some(part);
            r.fail(e);
        }
    }
    Ok(r)
}

pub fn check_scheme_equal(s1: &SchemeSpec, s2: &SchemeSpec, c: &Corpus) -> Result<CheckReport> {
    check_scheme_equal_shard(s1, s2, c, Shard::ALL).map(CheckReport::finish)
}

pub fn check_scheme_equal_shard(s1: &SchemeSpec, s2: &SchemeSpec, c: &Corpus, shard: Shard) -> Result<CheckReport> {
    let mut r = CheckReport::new(Property::Equal, alloc::vec![s1.to_string(), s2.to_string()], c);
    for (gi, g) in c.graphs().iter().enumerate() {
        if !shard.owns(gi) {
            continue;
        }
        r.count("graphs", 1);
        if let Some(e) = differs(s1, s2, c, gi, g)? {
            r.fail(e);
        }
    }
    Ok(r)
}

fn differs(s1: &SchemeSpec, s2: &SchemeSpec, c: &Corpus, gi: usize, g: &Hypergraph) -> Result<Option<Counterexample>> {
    let (a, b) = (cluster(s1, g)?, cluster(s2, g)?);
    if a.parts() == b.parts() {
        return Ok(None);
    }
    let only = a.parts().symmetric_difference(b.parts()).next().cloned();
    let mut e = cx(Property::Equal, c, gi, "the two clusterings have different parts".into());
    if let Some(p) = &only {
        e.detail = format!(
            "part {} appears in only one of the two clusterings",
            crate::graph::set_literal(p)
        );
    }
    e.part = only;
    Ok(Some(e))
}

/// `Φ_ℜ(G)` is spanned exactly when adding `G` to `ℜ` changes no edge set of
/// `Φ` on the corpus (and on `G` itself).
pub fn hull_check(r: &MotifSet, g: &Hypergraph, c: &Corpus) -> Result<CheckReport> {
    let extended = r.with(g.clone())?;
    let mut report = CheckReport::new(
        Property::Hull,
        alloc::vec![
            SchemeSpec::representable(r.clone(), OverlapThreshold::Infinite).to_string(),
            SchemeSpec::representable(extended.clone(), OverlapThreshold::Infinite).to_string(),
        ],
        c,
    );
    let spanned = is_spanned(&phi(r, g)?);
    let mut differing = Vec::new();
    for (gi, h) in c.graphs().iter().enumerate() {
        if phi_edge_sets(r, h)? != phi_edge_sets(&extended, h)? {
            differing.push(gi);
        }
    }
    let differs_on_g = phi_edge_sets(r, g)? != phi_edge_sets(&extended, g)?;
    let equal_everywhere = differing.is_empty() && !differs_on_g;
    report.flag("spanned", spanned);
    report.flag("edge_sets_equal", equal_everywhere);
    report.flag("differs_on_added_graph", differs_on_g);
    report.count("graphs", c.len() as u64 + 1);
    report.count("differing_graphs", differing.len() as u64);
    for &gi in &differing {
        let mut e = cx(Property::Hull, c, gi, "adding the graph to the motif set changes the edge sets".into());
        e.target = Some(Arc::new(g.clone()));
        report.evidence.push(e);
    }
    if spanned != equal_everywhere {
        let detail = if spanned {
            "spanned, yet adding the graph changes the motif functor"
        } else {
            "not spanned, yet adding the graph changes nothing"
        };
        report.fail(Counterexample {
            property: Property::Hull,
            graph_index: usize::MAX,
            graph: Arc::new(g.clone()),
            target: None,
            map: None,
            part: None,
            detail: detail.into(),
            order: (usize::MAX, 0),
        });
    }
    Ok(report.finish())
}

/// If `Π_{ℜ,k}` and `Π_{ℜ∪{G},k}` agree on the corpus then `Φ_ℜ(G)` is k-ly
/// connected; for `k = 1` also the converse. For `k > 1` the converse is only
/// reported (`reverse_holds`), not asserted.
pub fn connected_hull_check(r: &MotifSet, g: &Hypergraph, k: OverlapThreshold, c: &Corpus) -> Result<CheckReport> {
    let extended = r.with(g.clone())?;
    let s1 = SchemeSpec::representable(r.clone(), k);
    let s2 = SchemeSpec::representable(extended, k);
    let mut report = CheckReport::new(Property::ConnectedHull, alloc::vec![s1.to_string(), s2.to_string()], c);
    let connected = is_k_connected(&phi(r, g)?, k);
    let mut differing = Vec::new();
    for (gi, h) in c.graphs().iter().enumerate() {
        if let Some(e) = differs(&s1, &s2, c, gi, h)? {
            differing.push(e);
        }
    }
    let equal = differing.is_empty();
    let forward = !equal || connected;
    let reverse = !connected || equal;
    report.flag("k_connected", connected);
    report.flag("schemes_equal", equal);
    report.flag("forward_holds", forward);
    report.flag("reverse_holds", reverse);
    report.flag("reverse_asserted", k == OverlapThreshold::Finite(1));
    report.count("graphs", c.len() as u64);
    report.count("differing_graphs", differing.len() as u64);
    report.evidence.extend(differing.iter().cloned());
    let outside = |detail: &str| Counterexample {
        property: Property::ConnectedHull,
        graph_index: usize::MAX,
        graph: Arc::new(g.clone()),
        target: None,
        map: None,
        part: None,
        detail: detail.into(),
        order: (usize::MAX, 0),
    };
    if !forward {
        report.fail(outside("schemes agree on the corpus, yet the motif image of the graph is not k-ly connected"));
    }
    if k == OverlapThreshold::Finite(1) && !reverse {
        report.fail(outside("motif image of the graph is 1-ly connected, yet the schemes differ"));
        report.counterexamples.extend(differing);
    }
    Ok(report.finish())
}

/// Re-runs the single instance behind a counterexample and reports whether
/// the failure reproduces. `schemes` are those the report was produced with.
pub fn replay(cx: &Counterexample, schemes: &[SchemeSpec]) -> Result<bool> {
    let g = &cx.graph;
    Ok(match cx.property {
        Property::Excisive => match (&cx.part, schemes.first()) {
            (Some(p), Some(s)) => !excises(s, g, p)?,
            _ => false,
        },
        Property::Functorial => match (&cx.target, &cx.map, &cx.part, schemes.first()) {
            (Some(t), Some(map), Some(p), Some(s)) => {
                let src = cluster(s, g)?;
                let tgt = cluster(s, t)?;
                src.has_part(p) && {
                    let image: VertexSet = p.iter().filter_map(|v| map.get(v).cloned()).collect();
                    !tgt.parts().iter().any(|q| image.is_subset(q))
                }
            }
            _ => false,
        },
        Property::Refines => match schemes {
            [s1, s2, ..] => is_refinement(&cluster(s1, g)?, &cluster(s2, g)?)?.is_err(),
            _ => false,
        },
        Property::Equal => match schemes {
            [s1, s2, ..] => cluster(s1, g)?.parts() != cluster(s2, g)?.parts(),
            _ => false,
        },
        Property::Hull | Property::ConnectedHull => false,
    })
}

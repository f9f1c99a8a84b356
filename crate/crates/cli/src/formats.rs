//! JSON shapes for graphs, clusterings, schemes, reports and witnesses.
//!
//! Every collection is written in sorted order so that identical inputs give
//! byte-identical files.

use std::collections::{BTreeMap, BTreeSet};

use hyperclust_core::graph::{Hypergraph, VertexId, VertexSet};
use hyperclust_core::lab::search::{EqualPartsTranscript, SearchOutcome};
use hyperclust_core::lab::{CheckReport, Counterexample, FiniteRepWitness, Stat, Verdict};
use hyperclust_core::motif::{embedding_edge_id, EmbeddingEdge, Motif};
use hyperclust_core::scheme::SchemeSpec;
use hyperclust_core::{OverlapThreshold, PartitionedSet};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub id: String,
    pub vertices: Vec<String>,
    /// Set on motif functor output only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceJson {
    pub motif: usize,
    pub map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusteringJson {
    pub underlying: Vec<String>,
    pub parts: Vec<Vec<String>>,
}

/// A motif: a builtin name (`K3`, `E*`, ...) or an inline graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MotifJson {
    Name(String),
    Graph(GraphJson),
}

/// `k` as a number or the string `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ThresholdJson {
    Finite(usize),
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SchemeJson {
    Representable { motifs: Vec<MotifJson>, k: ThresholdJson },
    Sigma { motif: MotifJson },
    Classic,
    Toy { id: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleJson {
    /// Corpus member index; absent for a graph outside the corpus.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_index: Option<usize>,
    pub graph: GraphJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part: Option<Vec<String>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReportJson {
    pub property: String,
    pub schemes: Vec<String>,
    pub verdict: String,
    pub bounds: String,
    pub statistics: BTreeMap<String, serde_json::Value>,
    pub counterexamples: Vec<CounterexampleJson>,
    pub evidence: Vec<CounterexampleJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub r: usize,
    pub witness: GraphJson,
    pub connected_under_set: bool,
    pub connected_under_itself: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SearchJson {
    Found {
        strategy: String,
        graph: GraphJson,
        components: Vec<Vec<Vec<String>>>,
        whole_is_part: bool,
    },
    Exhausted {
        bounds: String,
        exhaustive_up_to: usize,
    },
}

fn names(set: &VertexSet) -> Vec<String> {
    set.iter().map(|v| v.to_string()).collect()
}

fn map_json(map: &BTreeMap<VertexId, VertexId>) -> BTreeMap<String, String> {
    map.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

pub fn graph_to_json(g: &Hypergraph) -> GraphJson {
    GraphJson {
        vertices: names(g.vertices()),
        edges: g
            .edges()
            .iter()
            .map(|(id, vs)| EdgeJson {
                id: id.to_string(),
                vertices: names(vs),
                provenance: None,
            })
            .collect(),
    }
}

/// Builds and validates a graph; errors name the offending vertex or edge.
pub fn graph_from_json(j: &GraphJson) -> CliResult<Hypergraph> {
    let mut seen = BTreeSet::new();
    for v in &j.vertices {
        if !seen.insert(v.as_str()) {
            return Err(CliError::Input(format!("vertex {v:?} is listed twice")));
        }
    }
    let mut g = Hypergraph::edgeless(j.vertices.iter().map(|v| VertexId::from(v.as_str())));
    for e in &j.edges {
        if let Some(v) = e.vertices.iter().find(|v| !seen.contains(v.as_str())) {
            return Err(CliError::Input(format!("edge {:?} uses unknown vertex {v:?}", e.id)));
        }
        g.add_edge(e.id.as_str(), e.vertices.iter().map(|v| VertexId::from(v.as_str())))
            .map_err(|err| CliError::Input(format!("edge {:?}: {err}", e.id)))?;
    }
    Ok(g)
}

/// `Φ` output: the graph JSON with a provenance entry per edge.
pub fn phi_to_json(vertices: &VertexSet, edges: &[EmbeddingEdge]) -> GraphJson {
    let mut out: Vec<EdgeJson> = edges
        .iter()
        .map(|e| EdgeJson {
            id: embedding_edge_id(e),
            vertices: names(&e.image),
            provenance: Some(ProvenanceJson {
                motif: e.motif,
                map: map_json(&e.morphism.map),
            }),
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    GraphJson {
        vertices: names(vertices),
        edges: out,
    }
}

pub fn clustering_to_json(p: &PartitionedSet) -> ClusteringJson {
    ClusteringJson {
        underlying: names(p.underlying()),
        parts: p.parts().iter().map(names).collect(),
    }
}

pub fn clustering_from_json(j: &ClusteringJson) -> CliResult<PartitionedSet> {
    let set = |vs: &[String]| -> VertexSet { vs.iter().map(|v| VertexId::from(v.as_str())).collect() };
    PartitionedSet::new(set(&j.underlying), j.parts.iter().map(|p| set(p))).map_err(|e| CliError::Input(e.to_string()))
}

pub fn threshold_json(k: OverlapThreshold) -> ThresholdJson {
    match k {
        OverlapThreshold::Finite(k) => ThresholdJson::Finite(k),
        OverlapThreshold::Infinite => ThresholdJson::Named("inf".into()),
    }
}

pub fn threshold_from_json(k: &ThresholdJson) -> CliResult<OverlapThreshold> {
    match k {
        ThresholdJson::Finite(k) => OverlapThreshold::finite(*k).map_err(|e| CliError::Usage(e.to_string())),
        ThresholdJson::Named(s) => s.parse().map_err(|e: hyperclust_core::Error| CliError::Usage(e.to_string())),
    }
}

fn motif_json(m: &Motif) -> MotifJson {
    match m {
        Motif::Graph(g) => MotifJson::Graph(graph_to_json(g)),
        Motif::EdgeFamily => MotifJson::Name("E*".into()),
        Motif::TailFamily => MotifJson::Name("R*".into()),
    }
}

pub fn scheme_to_json(s: &SchemeSpec) -> SchemeJson {
    match s {
        SchemeSpec::Representable { motifs, k } => SchemeJson::Representable {
            motifs: motifs.motifs().iter().map(motif_json).collect(),
            k: threshold_json(*k),
        },
        SchemeSpec::Sigma { motif } => SchemeJson::Sigma {
            motif: MotifJson::Graph(graph_to_json(motif)),
        },
        SchemeSpec::Classic => SchemeJson::Classic,
        SchemeSpec::Toy(t) => SchemeJson::Toy { id: t.id().into() },
    }
}

fn counterexample_json(c: &Counterexample) -> CounterexampleJson {
    CounterexampleJson {
        graph_index: (c.graph_index != usize::MAX).then_some(c.graph_index),
        graph: graph_to_json(&c.graph),
        target: c.target.as_deref().map(graph_to_json),
        map: c.map.as_ref().map(map_json),
        part: c.part.as_ref().map(names),
        detail: c.detail.clone(),
    }
}

pub fn report_to_json(r: &CheckReport) -> CheckReportJson {
    CheckReportJson {
        property: r.property.name().into(),
        schemes: r.schemes.clone(),
        verdict: match r.verdict {
            Verdict::Pass => "pass".into(),
            Verdict::Fail => "fail".into(),
        },
        bounds: r.bounds.clone(),
        statistics: r
            .statistics
            .iter()
            .map(|(k, v)| {
                let v = match v {
                    Stat::Int(n) => serde_json::Value::from(*n),
                    Stat::Bool(b) => serde_json::Value::from(*b),
                };
                (k.clone(), v)
            })
            .collect(),
        counterexamples: r.counterexamples.iter().map(counterexample_json).collect(),
        evidence: r.evidence.iter().map(counterexample_json).collect(),
    }
}

pub fn witness_to_json(w: &FiniteRepWitness) -> WitnessJson {
    WitnessJson {
        r: w.r,
        witness: graph_to_json(&w.witness),
        connected_under_set: w.connected_under_set,
        connected_under_itself: w.connected_under_itself,
        holds: w.holds(),
    }
}

fn transcript_components(t: &EqualPartsTranscript) -> Vec<Vec<Vec<String>>> {
    t.components.iter().map(|c| c.iter().map(names).collect()).collect()
}

pub fn search_to_json(o: &SearchOutcome) -> SearchJson {
    match o {
        SearchOutcome::Found {
            graph,
            transcript,
            strategy,
        } => SearchJson::Found {
            strategy: (*strategy).into(),
            graph: graph_to_json(graph),
            components: transcript_components(transcript),
            whole_is_part: transcript.whole_is_part,
        },
        SearchOutcome::Exhausted {
            bounds,
            exhaustive_up_to,
        } => SearchJson::Exhausted {
            bounds: bounds.describe(),
            exhaustive_up_to: *exhaustive_up_to,
        },
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperclust_core::builders::{d_default, gallery};
    use hyperclust_core::line::pi_k;

    #[test]
    fn graph_round_trip() {
        let g = gallery::scandalous_g();
        let j = graph_to_json(&g);
        let text = to_pretty(&j);
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(graph_from_json(&back).unwrap(), g);
    }

    #[test]
    fn unknown_vertex_is_named() {
        let j: GraphJson =
            serde_json::from_str(r#"{"vertices":["a"],"edges":[{"id":"e1","vertices":["a","zz"]}]}"#).unwrap();
        let err = graph_from_json(&j).unwrap_err().to_string();
        assert!(err.contains("e1") && err.contains("zz"), "{err}");
    }

    #[test]
    fn clustering_is_sorted() {
        let p = pi_k(&gallery::scandalous_g(), OverlapThreshold::Finite(2));
        let j = clustering_to_json(&p);
        let mut sorted = j.parts.clone();
        sorted.sort();
        assert_eq!(j.parts, sorted);
        assert_eq!(clustering_from_json(&j).unwrap(), p);
    }

    #[test]
    fn scheme_shapes() {
        let j: SchemeJson = serde_json::from_str(r#"{"kind":"representable","motifs":["K2","E*"],"k":2}"#).unwrap();
        assert!(matches!(j, SchemeJson::Representable { ref motifs, k: ThresholdJson::Finite(2) } if motifs.len() == 2));
        let j: SchemeJson = serde_json::from_str(r#"{"kind":"toy","id":"noprops"}"#).unwrap();
        assert_eq!(j, SchemeJson::Toy { id: "noprops".into() });
        let s = SchemeSpec::sigma(d_default()).unwrap();
        let text = to_pretty(&scheme_to_json(&s));
        assert_eq!(serde_json::from_str::<SchemeJson>(&text).unwrap(), scheme_to_json(&s));
    }
}

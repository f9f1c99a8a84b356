//! Witness that graphs "connected, with a triangle near every vertex" need an
//! infinite representing set: for a finite set of such motifs, a triangle with
//! a long enough tail is not 1-ly connected under their motif functor.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::builders::{build_named, describe_graph, NamedGraph};
use crate::error::{Error, Result};
use crate::graph::{Hypergraph, Indexed};
use crate::line::{is_k_connected, OverlapThreshold};
use crate::motif::{phi, MotifSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRepWitness {
    /// Largest distance from any motif vertex to its nearest triangle vertex.
    pub r: usize,
    /// The triangle with a tail of `r + 1` vertices.
    pub witness: Hypergraph,
    /// `Φ` of the motif set sends the witness to a 1-ly connected graph.
    pub connected_under_set: bool,
    /// `Φ_{witness}` sends the witness to a 1-ly connected graph.
    pub connected_under_itself: bool,
}

impl FiniteRepWitness {
    /// The expected outcome: not connected under the set, connected under itself.
    pub fn holds(&self) -> bool {
        !self.connected_under_set && self.connected_under_itself
    }
}

/// Vertices lying on a triangle of a simple graph.
fn triangle_vertices(ix: &Indexed) -> BTreeSet<u32> {
    let adj = ix.adjacency();
    let mut out = BTreeSet::new();
    for a in 0..ix.len() {
        for &b in &adj[a] {
            for &c in &adj[b as usize] {
                if c != a as u32 && adj[a].binary_search(&c).is_ok() {
                    out.extend([a as u32, b, c]);
                }
            }
        }
    }
    out
}

/// `r = max over motifs, max over vertices, of the distance to the nearest
/// triangle vertex`. Every motif must be a simple graph in which each vertex
/// reaches a triangle.
pub fn triangle_radius(gset: &[Hypergraph]) -> Result<usize> {
    let mut r = 0;
    for g in gset {
        if !g.is_simple() {
            return Err(Error::Domain(format!("motif {} is not a simple graph", describe_graph(g))));
        }
        let ix = Indexed::of(g);
        let tri = triangle_vertices(&ix);
        if tri.is_empty() {
            return Err(Error::Domain(format!("motif {} has no triangle", describe_graph(g))));
        }
        let dists: Vec<Vec<Option<usize>>> = tri.iter().map(|&t| ix.bfs(t)).collect();
        for v in 0..ix.len() {
            let d = dists
                .iter()
                .filter_map(|d| d[v])
                .min()
                .ok_or_else(|| Error::Domain(format!("motif {} has a vertex that reaches no triangle", describe_graph(g))))?;
            r = r.max(d);
        }
    }
    Ok(r)
}

pub fn finite_rep_witness(gset: &[Hypergraph]) -> Result<FiniteRepWitness> {
    if gset.is_empty() {
        return Err(Error::Domain("empty motif set has no triangle".into()));
    }
    let r = triangle_radius(gset)?;
    let witness = build_named(&NamedGraph::TriangleWithTail(r + 1))?;
    let one = OverlapThreshold::Finite(1);
    let set = MotifSet::of_graphs(gset.iter().cloned())?;
    let connected_under_set = is_k_connected(&phi(&set, &witness)?, one);
    let own = MotifSet::of_graphs([witness.clone()])?;
    let connected_under_itself = is_k_connected(&phi(&own, &witness)?, one);
    Ok(FiniteRepWitness {
        r,
        witness,
        connected_under_set,
        connected_under_itself,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn tails(m: usize) -> Vec<Hypergraph> {
        (0..=m).map(|i| build_named(&NamedGraph::TriangleWithTail(i)).unwrap()).collect()
    }

    #[test]
    fn radius_matches_tail_length() {
        for m in 0..=3 {
            let w = finite_rep_witness(&tails(m)).unwrap();
            assert_eq!(w.r, m);
            assert_eq!(w.witness, build_named(&NamedGraph::TriangleWithTail(m + 1)).unwrap());
            assert!(w.holds());
        }
    }

    #[test]
    fn triangle_free_member_is_rejected() {
        let p3 = build_named(&NamedGraph::Path(3)).unwrap();
        let err = finite_rep_witness(&[p3]).unwrap_err();
        assert!(err.to_string().contains("P3"));
    }
}

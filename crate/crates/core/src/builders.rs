//! Canonical named graphs.
//!
//! Vertex names are fixed so that outputs are byte-stable:
//!
//! | builder | vertices | edges |
//! |---|---|---|
//! | `E_n` | `1..n` | `e1 = {1..n}` |
//! | `K_n` | `1..n` | `e{i}-{j}` for `i < j` |
//! | `C_n` | `1..n` | `e{i}-{i+1}`, closing edge `e1-{n}` |
//! | `P_n` | `1..n` | `e{i}-{i+1}` |
//! | `R_i` | triangle `1,2,3`, tail `4..3+i` hanging off `3` | as `K_3` plus path |
//! | `D` | `1..6` | `e1={1,2,3}`, `e2={1,4,5}`, `e3={2,4,6}` |
//!
//! `F_i(D)` and `corner_glue(D)` number their vertices `1, 2, ...` in order of
//! first appearance (copy by copy, each copy in the motif's vertex order) and
//! their edges `e1, e2, ...`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// `E_n`: `n` vertices and one edge containing all of them.
    Edge(usize),
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `R_i`: a triangle with a tail of `i` vertices.
    TriangleWithTail(usize),
    /// The shipped 3-edge motif `D`.
    DDefault,
    /// `F_i(D)`: `i + 1` copies of the motif, consecutive copies glued along a full edge.
    Chain { motif: Box<Hypergraph>, links: usize },
    /// Two copies of the motif identified on their private vertices.
    CornerGlue(Box<Hypergraph>),
    DisjointUnion(Box<NamedGraph>, Box<NamedGraph>),
}

pub fn build_named(spec: &NamedGraph) -> Result<Hypergraph> {
    match spec {
        NamedGraph::Edge(n) => {
            positive(*n, "E_n")?;
            let mut g = numbered(*n);
            g.add_edge("e1", (1..=*n).map(num))?;
            Ok(g)
        }
        NamedGraph::Complete(n) => {
            positive(*n, "K_n")?;
            let mut g = numbered(*n);
            for i in 1..=*n {
                for j in i + 1..=*n {
                    pair(&mut g, i, j)?;
                }
            }
            Ok(g)
        }
        NamedGraph::Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidParameter(format!("C_n needs n >= 3, got {n}")));
            }
            let mut g = path(*n)?;
            pair(&mut g, 1, *n)?;
            Ok(g)
        }
        NamedGraph::Path(n) => {
            positive(*n, "P_n")?;
            path(*n)
        }
        NamedGraph::TriangleWithTail(i) => {
            let mut g = numbered(3 + i);
            pair(&mut g, 1, 2)?;
            pair(&mut g, 1, 3)?;
            pair(&mut g, 2, 3)?;
            for t in 3..3 + i {
                pair(&mut g, t, t + 1)?;
            }
            Ok(g)
        }
        NamedGraph::DDefault => Ok(d_default()),
        NamedGraph::Chain { motif, links } => chain(motif, *links),
        NamedGraph::CornerGlue(motif) => corner_glue(motif),
        NamedGraph::DisjointUnion(a, b) => Ok(disjoint_union(&build_named(a)?, &build_named(b)?)),
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} needs n >= 1")))
    } else {
        Ok(())
    }
}

fn num(i: usize) -> VertexId {
    VertexId::new(i.to_string())
}

fn numbered(n: usize) -> Hypergraph {
    Hypergraph::edgeless((1..=n).map(num))
}

fn pair(g: &mut Hypergraph, i: usize, j: usize) -> Result<()> {
    g.add_edge(format!("e{i}-{j}"), [num(i), num(j)])
}

fn path(n: usize) -> Result<Hypergraph> {
    let mut g = numbered(n);
    for i in 1..n {
        pair(&mut g, i, i + 1)?;
    }
    Ok(g)
}

/// Linear 3-uniform triangle on `1..6`; private vertices `3, 5, 6`.
pub fn d_default() -> Hypergraph {
    let mut g = numbered(6);
    for (id, e) in [("e1", [1, 2, 3]), ("e2", [1, 4, 5]), ("e3", [2, 4, 6])] {
        g.add_edge(id, e.map(num)).expect("D is well formed");
    }
    g
}

/// Assembles copies of `motif` under per-copy renamings, numbering the fresh
/// vertices in order of appearance and dropping edge sets already present.
struct Gluer {
    graph: Hypergraph,
    next_vertex: usize,
    next_edge: usize,
}

impl Gluer {
    fn new() -> Self {
        Self {
            graph: Hypergraph::new(),
            next_vertex: 1,
            next_edge: 1,
        }
    }

    /// Adds a copy; `fixed` pins some motif vertices to existing vertices.
    fn add_copy(
        &mut self,
        motif: &Hypergraph,
        fixed: &BTreeMap<VertexId, VertexId>,
    ) -> Result<BTreeMap<VertexId, VertexId>> {
        let mut rename = BTreeMap::new();
        for v in motif.vertices() {
            let w = match fixed.get(v) {
                Some(w) => w.clone(),
                None => {
                    let w = num(self.next_vertex);
                    self.next_vertex += 1;
                    self.graph.add_vertex(w.clone());
                    w
                }
            };
            rename.insert(v.clone(), w);
        }
        let existing = self.graph.edge_sets();
        for e in motif.edges().values() {
            let img: VertexSet = e.iter().map(|v| rename[v].clone()).collect();
            if !existing.contains(&img) {
                self.graph.add_edge(format!("e{}", self.next_edge), img)?;
                self.next_edge += 1;
            }
        }
        Ok(rename)
    }
}

/// Glue edges of a chain: the motif's first edge (in id order) of each new copy
/// is identified with the last edge of the previous copy, vertices matched in
/// sorted order.
pub fn chain(motif: &Hypergraph, links: usize) -> Result<Hypergraph> {
    let (first, last) = match (motif.edges().values().next(), motif.edges().values().last()) {
        (Some(f), Some(l)) if motif.edge_count() >= 2 && f.len() == l.len() => (f, l),
        _ => {
            return Err(Error::InvalidParameter(
                "chain needs a motif whose first and last edges have equal size".into(),
            ))
        }
    };
    let mut gluer = Gluer::new();
    let mut prev = gluer.add_copy(motif, &BTreeMap::new())?;
    for _ in 0..links {
        let fixed = first
            .iter()
            .zip(last.iter())
            .map(|(fv, lv)| (fv.clone(), prev[lv].clone()))
            .collect();
        prev = gluer.add_copy(motif, &fixed)?;
    }
    Ok(gluer.graph)
}

/// Vertices lying in exactly one distinct edge set.
pub fn private_vertices(motif: &Hypergraph) -> VertexSet {
    let sets = motif.edge_sets();
    motif
        .vertices()
        .iter()
        .filter(|v| sets.iter().filter(|e| e.contains(*v)).count() == 1)
        .cloned()
        .collect()
}

pub fn corner_glue(motif: &Hypergraph) -> Result<Hypergraph> {
    let corners = private_vertices(motif);
    if corners.is_empty() {
        return Err(Error::InvalidParameter("corner glue needs private vertices".into()));
    }
    let mut gluer = Gluer::new();
    let first = gluer.add_copy(motif, &BTreeMap::new())?;
    let fixed = corners.iter().map(|v| (v.clone(), first[v].clone())).collect();
    gluer.add_copy(motif, &fixed)?;
    Ok(gluer.graph)
}

/// Disjoint union; vertices and edges of the operands are prefixed `a` and `b`.
pub fn disjoint_union(a: &Hypergraph, b: &Hypergraph) -> Hypergraph {
    let mut g = Hypergraph::new();
    for (prefix, part) in [("a", a), ("b", b)] {
        for v in part.vertices() {
            g.add_vertex(format!("{prefix}{v}"));
        }
        for (id, e) in part.edges() {
            g.add_edge(format!("{prefix}{id}"), e.iter().map(|v| format!("{prefix}{v}")))
                .expect("operands are valid");
        }
    }
    g
}

/// Graphs that appear as worked examples: the two graphs of the overlapping
/// components morphism example, the representation hull counterexample, and
/// the overlapping-parts illustration.
pub mod gallery {
    use super::*;

    fn v(i: usize) -> String {
        format!("v{i}")
    }

    /// Eight vertices; blue edges `{v1,v2,vi}` for `i = 3..8`, green edges `{v3,v4,vj}` for `j = 5,6,7`.
    pub fn scandalous_g() -> Hypergraph {
        let mut g = Hypergraph::edgeless((1..=8).map(v));
        for i in 3..=8 {
            g.add_edge(format!("b{i}"), [v(1), v(2), v(i)]).expect("valid");
        }
        for j in 5..=7 {
            g.add_edge(format!("g{j}"), [v(3), v(4), v(j)]).expect("valid");
        }
        g
    }

    /// [`scandalous_g`] plus the red edge `{v1..v4}` and the orange edge `{v5..v8}`.
    pub fn scandalous_h() -> Hypergraph {
        let mut h = scandalous_g();
        h.add_edge("red", (1..=4).map(v)).expect("valid");
        h.add_edge("orange", (5..=8).map(v)).expect("valid");
        h
    }

    /// Two triples sharing a pair: `{1,2,3}, {2,3,4}`.
    pub fn hull_g4() -> Hypergraph {
        Hypergraph::build(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "3", "4"]]).expect("valid")
    }

    /// Six vertices: blue `{v1,v2,v3}, {v1,v2,v4}` and green `{v3,v5,v6}, {v4,v5,v6}`.
    ///
    /// Each colour class is the only copy of [`hull_g4`] on its four vertices,
    /// and blue and green edges meet in at most one vertex.
    pub fn hull_h6() -> Hypergraph {
        Hypergraph::build(
            &["v1", "v2", "v3", "v4", "v5", "v6"],
            &[
                &["v1", "v2", "v3"],
                &["v1", "v2", "v4"],
                &["v3", "v5", "v6"],
                &["v4", "v5", "v6"],
            ],
        )
        .expect("valid")
    }

    /// Three edges through `v1, v2` and a red edge on their third vertices.
    pub fn overlapping_parts() -> Hypergraph {
        Hypergraph::build(
            &["a", "b", "c", "v1", "v2"],
            &[&["v1", "v2", "a"], &["v1", "v2", "b"], &["v1", "v2", "c"], &["a", "b", "c"]],
        )
        .expect("valid")
    }
}

/// Parses a builtin graph name. Underscores are ignored, so `E_3` and `E3`
/// are the same. Recognised: `K<n>`, `E<n>`, `C<n>`, `P<n>`, `R<i>`, `D`,
/// `F<i>` (chain over `D`), `corner`, `G4`, `H6`, `scandalousG`,
/// `scandalousH`, `overlapping`.
pub fn parse_builtin(name: &str) -> Result<Hypergraph> {
    let key: String = name.chars().filter(|c| *c != '_').collect();
    let numeric = |rest: &str| -> Result<usize> {
        rest.parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("unknown builtin graph {name:?}")))
    };
    match key.as_str() {
        "D" => return Ok(d_default()),
        "corner" | "cornerglue" => return corner_glue(&d_default()),
        "G4" => return Ok(gallery::hull_g4()),
        "H6" => return Ok(gallery::hull_h6()),
        "scandalousG" => return Ok(gallery::scandalous_g()),
        "scandalousH" => return Ok(gallery::scandalous_h()),
        "overlapping" => return Ok(gallery::overlapping_parts()),
        _ => {}
    }
    let (head, rest) = key.split_at(key.chars().next().map_or(0, char::len_utf8));
    let n = numeric(rest)?;
    let spec = match head {
        "K" => NamedGraph::Complete(n),
        "E" => NamedGraph::Edge(n),
        "C" => NamedGraph::Cycle(n),
        "P" => NamedGraph::Path(n),
        "R" => NamedGraph::TriangleWithTail(n),
        "F" => NamedGraph::Chain {
            motif: Box::new(d_default()),
            links: n,
        },
        _ => return Err(Error::InvalidParameter(format!("unknown builtin graph {name:?}"))),
    };
    build_named(&spec)
}

/// Short name of `g` when it equals (not merely is isomorphic to) a builtin
/// small graph, else `graph[n=..,m=..]`.
pub fn describe_graph(g: &Hypergraph) -> String {
    let n = g.vertex_count();
    let mut names: Vec<String> = alloc::vec!["D".into(), "G4".into(), "H6".into()];
    for i in 1..=n.max(1) {
        for head in ["K", "E", "C", "P"] {
            names.push(format!("{head}{i}"));
        }
        names.push(format!("R{}", i.saturating_sub(3)));
    }
    names
        .into_iter()
        .find(|name| parse_builtin(name).is_ok_and(|b| b == *g))
        .unwrap_or_else(|| format!("graph[n={n},m={}]", g.edge_count()))
}

/// Random graph where vertex `i` attaches to `min(i, d)` distinct earlier
/// vertices chosen uniformly; degeneracy is at most `d`.
pub fn random_degenerate<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Hypergraph {
    let mut g = numbered(n);
    let mut next = 1;
    for i in 1..n {
        for j in sample(rng, i, d.min(i)).into_iter() {
            let (a, b) = (j + 1, i + 1);
            g.add_edge(format!("e{next}"), [num(a), num(b)]).expect("valid");
            next += 1;
        }
    }
    g
}

/// `rows × cols` grid; vertex `(r, c)` is named `r * cols + c + 1`.
pub fn grid(rows: usize, cols: usize) -> Hypergraph {
    let mut g = numbered(rows * cols);
    let id = |r: usize, c: usize| r * cols + c + 1;
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                pair(&mut g, id(r, c), id(r, c + 1)).expect("valid");
            }
            if r + 1 < rows {
                pair(&mut g, id(r, c), id(r + 1, c)).expect("valid");
            }
        }
    }
    g
}

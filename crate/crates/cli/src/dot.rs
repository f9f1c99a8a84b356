//! Graphviz export of k-line graphs, one fill colour per component.

use std::fmt::Write;

use hyperclust_core::graph::set_literal;
use hyperclust_core::line::LineGraph;

const PALETTE: [&str; 10] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn line_graph_dot(lg: &LineGraph) -> String {
    let mut colour = vec![0; lg.nodes.len()];
    for (c, group) in lg.components().iter().enumerate() {
        for &i in group {
            colour[i] = c;
        }
    }
    let mut out = String::new();
    writeln!(out, "graph line_graph {{").unwrap();
    writeln!(out, "  label={};", quote(&format!("k = {}", lg.k))).unwrap();
    writeln!(out, "  node [shape=box, style=filled];").unwrap();
    for (i, set) in lg.nodes.iter().enumerate() {
        writeln!(
            out,
            "  n{i} [label={}, fillcolor={}, comment=\"component {}\"];",
            quote(&set_literal(set)),
            quote(PALETTE[colour[i] % PALETTE.len()]),
            colour[i] + 1
        )
        .unwrap();
    }
    for &(a, b) in &lg.adjacent {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

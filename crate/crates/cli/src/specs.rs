//! Text forms of graphs, motifs and schemes accepted on the command line.
//!
//! Graph arguments are a JSON file path, `-` for stdin, or a builtin name.
//! Motif lists are `{K2,E3}`, `K2,E3` or a JSON array. Schemes are
//! `classic`, `toy:<id>`, `sigma[:<motif>]`, `representable:<motifs>,k=<k>`
//! or an inline JSON scheme object.

use std::io::Read;
use std::path::Path;

use hyperclust_core::builders::{d_default, parse_builtin};
use hyperclust_core::graph::Hypergraph;
use hyperclust_core::motif::{Motif, MotifSet};
use hyperclust_core::scheme::{SchemeSpec, ToyScheme};
use hyperclust_core::OverlapThreshold;

use crate::error::{CliError, CliResult};
use crate::formats::{graph_from_json, threshold_from_json, GraphJson, MotifJson, SchemeJson};

pub fn read_text(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::io("<stdin>", e))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn parse_graph_json(text: &str, origin: &str) -> CliResult<Hypergraph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|source| CliError::Json {
        path: origin.into(),
        source,
    })?;
    graph_from_json(&j)
}

/// A graph from a file, stdin or a builtin name; an existing file wins.
pub fn load_graph(arg: &str) -> CliResult<Hypergraph> {
    if arg == "-" || Path::new(arg).is_file() {
        return parse_graph_json(&read_text(arg)?, arg);
    }
    parse_builtin(arg).map_err(|_| CliError::Usage(format!("{arg:?} is neither a readable file nor a builtin graph")))
}

pub fn motif_from_json(m: &MotifJson) -> CliResult<Motif> {
    match m {
        MotifJson::Graph(g) => Ok(Motif::Graph(graph_from_json(g)?)),
        MotifJson::Name(name) => parse_motif(name),
    }
}

pub fn parse_motif(s: &str) -> CliResult<Motif> {
    let s = s.trim();
    match s.trim_matches('_') {
        "E*" | "E_*" => return Ok(Motif::EdgeFamily),
        "R*" | "R_*" => return Ok(Motif::TailFamily),
        _ => {}
    }
    if s.starts_with('{') && s.contains('"') {
        return Ok(Motif::Graph(parse_graph_json(s, "<inline motif>")?));
    }
    Ok(Motif::Graph(
        parse_builtin(s).map_err(|_| CliError::Usage(format!("unknown motif {s:?}")))?,
    ))
}

/// `{K2,E3}`, `K2,E3`, `[ "K2", {...} ]`; `{}` is the empty set.
pub fn parse_motif_list(s: &str) -> CliResult<MotifSet> {
    let s = s.trim();
    let motifs = if s.starts_with('[') {
        let items: Vec<MotifJson> = serde_json::from_str(s).map_err(|source| CliError::Json {
            path: "<inline motif list>".into(),
            source,
        })?;
        items.iter().map(motif_from_json).collect::<CliResult<Vec<_>>>()?
    } else {
        let inner = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s);
        inner
            .split([',', '+'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(parse_motif)
            .collect::<CliResult<Vec<_>>>()?
    };
    MotifSet::new(motifs).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_threshold(s: &str) -> CliResult<OverlapThreshold> {
    s.trim().parse().map_err(|e: hyperclust_core::Error| CliError::Usage(e.to_string()))
}

fn sigma_motif(m: &Motif) -> CliResult<Hypergraph> {
    match m {
        Motif::Graph(g) => Ok(g.clone()),
        _ => Err(CliError::Usage("the sigma scheme needs a single motif graph".into())),
    }
}

pub fn scheme_from_json(j: &SchemeJson) -> CliResult<SchemeSpec> {
    Ok(match j {
        SchemeJson::Representable { motifs, k } => {
            let set = MotifSet::new(motifs.iter().map(motif_from_json).collect::<CliResult<Vec<_>>>()?)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            SchemeSpec::representable(set, threshold_from_json(k)?)
        }
        SchemeJson::Sigma { motif } => {
            SchemeSpec::sigma(sigma_motif(&motif_from_json(motif)?)?).map_err(|e| CliError::Usage(e.to_string()))?
        }
        SchemeJson::Classic => SchemeSpec::Classic,
        SchemeJson::Toy { id } => SchemeSpec::Toy(id.parse().map_err(|e: hyperclust_core::Error| CliError::Usage(e.to_string()))?),
    })
}

pub fn parse_scheme(s: &str) -> CliResult<SchemeSpec> {
    let s = s.trim();
    if s.starts_with('{') && s.contains("\"kind\"") {
        let j: SchemeJson = serde_json::from_str(s).map_err(|source| CliError::Json {
            path: "<inline scheme>".into(),
            source,
        })?;
        return scheme_from_json(&j);
    }
    let (head, rest) = s.split_once(':').unwrap_or((s, ""));
    match head {
        "classic" if rest.is_empty() => Ok(SchemeSpec::Classic),
        "toy" => Ok(SchemeSpec::Toy(
            rest.parse::<ToyScheme>().map_err(|e| CliError::Usage(e.to_string()))?,
        )),
        "sigma" => {
            let motif = if rest.is_empty() { d_default() } else { sigma_motif(&parse_motif(rest)?)? };
            SchemeSpec::sigma(motif).map_err(|e| CliError::Usage(e.to_string()))
        }
        "representable" => {
            let (motifs, k) = rest
                .rsplit_once(",k=")
                .ok_or_else(|| CliError::Usage(format!("representable scheme {s:?} needs a trailing ,k=<k>")))?;
            Ok(SchemeSpec::representable(parse_motif_list(motifs)?, parse_threshold(k)?))
        }
        _ => Err(CliError::Usage(format!("unknown scheme {s:?}"))),
    }
}

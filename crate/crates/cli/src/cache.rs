//! Corpora, optionally cached as JSON lines (one graph per line) under
//! `$HYPERCLUST_CACHE_DIR`. The file name carries the bounds, so different
//! bounds never share a file; morphisms are recomputed on load.

use std::io::Write;
use std::path::{Path, PathBuf};

use hyperclust_core::lab::{generate_corpus, generate_simple_corpus, Corpus, CorpusBounds};

use crate::error::{CliError, CliResult};
use crate::formats::{graph_to_json, GraphJson};
use crate::specs::parse_graph_json;

pub const CACHE_ENV: &str = "HYPERCLUST_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    Hypergraphs,
    Simple,
}

impl CorpusKind {
    fn tag(self) -> &'static str {
        match self {
            Self::Hypergraphs => "hypergraphs",
            Self::Simple => "simple",
        }
    }
}

pub fn cache_file(dir: &Path, kind: CorpusKind, bounds: &CorpusBounds) -> PathBuf {
    dir.join(format!("corpus-{}-{}.jsonl", kind.tag(), bounds.describe()))
}

fn generate(kind: CorpusKind, bounds: &CorpusBounds) -> CliResult<Corpus> {
    Ok(match kind {
        CorpusKind::Hypergraphs => generate_corpus(bounds)?,
        CorpusKind::Simple => generate_simple_corpus(bounds)?,
    })
}

fn read_cached(path: &Path, description: String, bounds: &CorpusBounds) -> CliResult<Corpus> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let origin = path.display().to_string();
    let graphs = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph_json(l, &origin))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Corpus::restore(description, graphs, bounds.morphism_max_vertices)?)
}

fn write_cached(path: &Path, c: &Corpus) -> CliResult<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    // Write to a temporary name first so a concurrent reader never sees half a file.
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut out = std::fs::File::create(&tmp).map_err(|e| CliError::io(&tmp, e))?;
    for g in c.graphs() {
        let line: String = serde_json::to_string::<GraphJson>(&graph_to_json(g)).expect("serializable");
        writeln!(out, "{line}").map_err(|e| CliError::io(&tmp, e))?;
    }
    drop(out);
    std::fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

/// The corpus for `bounds`, read from the cache directory when possible.
/// A damaged cache file is regenerated rather than trusted.
pub fn load_corpus(kind: CorpusKind, bounds: &CorpusBounds, cache_dir: Option<&Path>) -> CliResult<Corpus> {
    let Some(dir) = cache_dir else {
        return generate(kind, bounds);
    };
    let path = cache_file(dir, kind, bounds);
    if path.is_file() {
        let fresh_description = match kind {
            CorpusKind::Hypergraphs => format!("hypergraphs {}", bounds.describe()),
            CorpusKind::Simple => format!("simple graphs n{}", bounds.simple_max_vertices),
        };
        if let Ok(c) = read_cached(&path, fresh_description, bounds) {
            return Ok(c);
        }
    }
    let c = generate(kind, bounds)?;
    write_cached(&path, &c)?;
    Ok(c)
}

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

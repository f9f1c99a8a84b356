//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 a property check failed, 2 usage, input or IO error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperclust_core::builders::gallery;
use hyperclust_core::graph::{Hypergraph, SimpleGraph};
use hyperclust_core::lab::checks::{
    check_excisive_shard, check_functorial_shard, check_refines_shard, check_scheme_equal_shard,
};
use hyperclust_core::lab::{
    connected_hull_check, finite_rep_witness, hull_check, search_equal_parts_example, CheckReport, Corpus,
    CorpusBounds, Property, SearchBounds, Shard,
};
use hyperclust_core::line::k_line_graph;
use hyperclust_core::motif::{phi_with_provenance, Motif, MotifSet};
use hyperclust_core::partition::remove_spurious;
use hyperclust_core::scheme::{cluster, SchemeSpec};
use hyperclust_core::OverlapThreshold;

use crate::bench::{run_bench, to_csv, Family};
use crate::cache::{cache_dir_from_env, load_corpus, CorpusKind};
use crate::dot::line_graph_dot;
use crate::error::{CliError, CliResult};
use crate::formats::{
    clustering_to_json, graph_to_json, phi_to_json, report_to_json, search_to_json, to_pretty, witness_to_json,
};
use crate::specs::{load_graph, parse_motif_list, parse_scheme, parse_threshold};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hyperclust", version, about = "Overlapping clustering of hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cluster a graph with a scheme.
    Cluster(ClusterArgs),
    /// Apply the motif functor and print the result with provenance.
    Phi(PhiArgs),
    /// Build the k-line graph of a graph (optionally of its motif image).
    Linegraph(LinegraphArgs),
    /// Check a scheme property on an exhaustive corpus.
    Check(CheckArgs),
    /// Show that a finite set of triangle-with-tail motifs misses a longer tail.
    Witness(WitnessArgs),
    /// Search for a graph with two different 2-line components covering all vertices.
    Search(SearchArgs),
    /// Embedding-count scaling over a generated family.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct SchemeArgs {
    /// classic | toy:<id> | sigma[:<motif>] | representable:<motifs>,k=<k> | JSON
    #[arg(long)]
    pub scheme: Option<String>,
    /// Shorthand for a representable scheme together with --k.
    #[arg(long, conflicts_with = "scheme")]
    pub motifs: Option<String>,
    #[arg(long, requires = "motifs")]
    pub k: Option<String>,
}

impl SchemeArgs {
    fn resolve(&self) -> CliResult<SchemeSpec> {
        match (&self.scheme, &self.motifs) {
            (Some(s), _) => parse_scheme(s),
            (None, Some(m)) => {
                let k = self.k.as_deref().map(parse_threshold).transpose()?.unwrap_or(OverlapThreshold::Finite(1));
                Ok(SchemeSpec::representable(parse_motif_list(m)?, k))
            }
            (None, None) => Err(CliError::Usage("give --scheme or --motifs".into())),
        }
    }
}

#[derive(Args, Debug)]
pub struct ClusterArgs {
    /// Graph JSON file, `-` for stdin, or a builtin name.
    pub graph: String,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Remove parts strictly contained in another part.
    #[arg(long)]
    pub drop_spurious: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PhiArgs {
    pub graph: String,
    #[arg(long)]
    pub motifs: String,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Args, Debug)]
pub struct LinegraphArgs {
    pub graph: String,
    #[arg(long, default_value = "1")]
    pub k: String,
    /// Take the line graph of the motif image instead of the graph itself.
    #[arg(long)]
    pub motifs: Option<String>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    pub format: GraphFormat,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorpusChoice {
    Hypergraphs,
    Simple,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    #[arg(long, value_enum, default_value_t = CorpusChoice::Hypergraphs)]
    pub corpus: CorpusChoice,
    #[arg(long, default_value_t = 5)]
    pub max_vertices: usize,
    #[arg(long, default_value_t = 4)]
    pub max_edges: usize,
    #[arg(long, default_value_t = 4)]
    pub max_edge_size: usize,
    /// Members up to this size get every injective morphism between them.
    #[arg(long, default_value_t = 4)]
    pub morphism_max_vertices: usize,
    #[arg(long, default_value_t = 6)]
    pub simple_max_vertices: usize,
    /// Add this graph and its restrictions to the corpus (repeatable).
    #[arg(long)]
    pub extra: Vec<String>,
    /// Add the builtin example graphs to the corpus.
    #[arg(long)]
    pub gallery: bool,
    /// Ignore $HYPERCLUST_CACHE_DIR.
    #[arg(long)]
    pub no_cache: bool,
}

impl CorpusArgs {
    fn bounds(&self) -> CorpusBounds {
        CorpusBounds {
            max_vertices: self.max_vertices,
            max_edges: self.max_edges,
            max_edge_size: self.max_edge_size,
            morphism_max_vertices: self.morphism_max_vertices,
            simple_max_vertices: self.simple_max_vertices,
        }
    }

    fn build(&self, mut extra: Vec<Hypergraph>, gallery_too: bool) -> CliResult<Corpus> {
        let kind = match self.corpus {
            CorpusChoice::Hypergraphs => CorpusKind::Hypergraphs,
            CorpusChoice::Simple => CorpusKind::Simple,
        };
        let cache = if self.no_cache { None } else { cache_dir_from_env() };
        let c = load_corpus(kind, &self.bounds(), cache.as_deref())?;
        for e in &self.extra {
            extra.push(load_graph(e)?);
        }
        if self.gallery || gallery_too {
            extra.extend(gallery_graphs());
        }
        if extra.is_empty() {
            return Ok(c);
        }
        Ok(c.extended(extra, self.morphism_max_vertices)?)
    }
}

fn gallery_graphs() -> Vec<Hypergraph> {
    vec![
        gallery::scandalous_g(),
        gallery::scandalous_h(),
        gallery::hull_g4(),
        gallery::hull_h6(),
        gallery::overlapping_parts(),
    ]
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// excisive | functorial | refines | equal | hull | connected-hull
    pub property: String,
    /// Scheme(s) under test; refines and equal take two.
    #[arg(long)]
    pub scheme: Vec<String>,
    /// Motif set for the hull checks.
    #[arg(long)]
    pub motifs: Option<String>,
    /// Graph adjoined to the motif set in the hull checks.
    #[arg(long)]
    pub graph: Option<String>,
    /// Overlap threshold; `hull` with --k runs the connected hull check.
    #[arg(long)]
    pub k: Option<String>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Worker threads for the corpus scan.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    /// Simple motifs, each with a triangle.
    #[arg(long, default_value = "{R0}")]
    pub motifs: String,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 9)]
    pub max_vertices: usize,
    #[arg(long, default_value_t = 14)]
    pub max_edges: usize,
    #[arg(long, default_value_t = 3)]
    pub max_edge_size: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// random[:<degeneracy>] | grid | paths
    #[arg(long, default_value = "random:2")]
    pub family: String,
    /// Simple motif graphs; `{}` counts nothing.
    #[arg(long)]
    pub motif: String,
    #[arg(long, value_delimiter = ',', default_value = "100,200,400,800,1600")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Leave out the wall-time column so output is reproducible.
    #[arg(long)]
    pub no_timing: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn run_cluster(a: &ClusterArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let g = load_graph(&a.graph)?;
    let s = a.scheme.resolve()?;
    let mut p = cluster(&s, &g)?;
    if a.drop_spurious {
        p = remove_spurious(&p);
    }
    emit(&a.out, &to_pretty(&clustering_to_json(&p)), stdout)?;
    Ok(EXIT_OK)
}

fn run_phi(a: &PhiArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let g = load_graph(&a.graph)?;
    let edges = phi_with_provenance(&parse_motif_list(&a.motifs)?, &g)?;
    emit(&a.out, &to_pretty(&phi_to_json(g.vertices(), &edges)), stdout)?;
    Ok(EXIT_OK)
}

fn run_linegraph(a: &LinegraphArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let mut g = load_graph(&a.graph)?;
    if let Some(m) = &a.motifs {
        g = hyperclust_core::motif::phi(&parse_motif_list(m)?, &g)?;
    }
    let lg = k_line_graph(&g, parse_threshold(&a.k)?);
    let text = match a.format {
        GraphFormat::Json => to_pretty(&graph_to_json(lg.to_simple_graph().as_hypergraph())),
        GraphFormat::Dot => line_graph_dot(&lg),
    };
    emit(&a.out, &text, stdout)?;
    Ok(EXIT_OK)
}

/// Runs a sharded check on `jobs` threads and merges the shard reports.
pub fn run_sharded<F>(jobs: usize, f: F) -> CliResult<CheckReport>
where
    F: Fn(Shard) -> hyperclust_core::Result<CheckReport> + Sync,
{
    let jobs = jobs.max(1);
    let reports: Vec<hyperclust_core::Result<CheckReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|index| {
                let f = &f;
                scope.spawn(move || f(Shard { index, count: jobs }))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check worker panicked")).collect()
    });
    let reports = reports.into_iter().collect::<hyperclust_core::Result<Vec<_>>>()?;
    Ok(CheckReport::merge(reports).expect("at least one shard"))
}

fn schemes_exactly(a: &CheckArgs, n: usize) -> CliResult<Vec<SchemeSpec>> {
    if a.scheme.len() != n {
        return Err(CliError::Usage(format!(
            "check {} takes {n} --scheme argument(s), got {}",
            a.property,
            a.scheme.len()
        )));
    }
    a.scheme.iter().map(|s| parse_scheme(s)).collect()
}

fn run_check(a: &CheckArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let property = Property::parse(&a.property)
        .ok_or_else(|| CliError::Usage(format!("unknown property {:?}", a.property)))?;
    let report = match property {
        Property::Excisive | Property::Functorial => {
            let s = schemes_exactly(a, 1)?.remove(0);
            let c = a.corpus.build(Vec::new(), false)?;
            if property == Property::Excisive {
                run_sharded(a.jobs, |sh| check_excisive_shard(&s, &c, sh))?
            } else {
                run_sharded(a.jobs, |sh| check_functorial_shard(&s, &c, sh))?
            }
        }
        Property::Refines | Property::Equal => {
            let s = schemes_exactly(a, 2)?;
            let c = a.corpus.build(Vec::new(), false)?;
            if property == Property::Refines {
                run_sharded(a.jobs, |sh| check_refines_shard(&s[0], &s[1], &c, sh))?
            } else {
                run_sharded(a.jobs, |sh| check_scheme_equal_shard(&s[0], &s[1], &c, sh))?
            }
        }
        Property::Hull | Property::ConnectedHull => {
            let motifs = a.motifs.as_deref().ok_or_else(|| CliError::Usage("hull checks need --motifs".into()))?;
            let motifs: MotifSet = parse_motif_list(motifs)?;
            let g = load_graph(a.graph.as_deref().ok_or_else(|| CliError::Usage("hull checks need --graph".into()))?)?;
            let c = a.corpus.build(vec![g.clone()], true)?;
            match (property, &a.k) {
                (Property::Hull, None) => hull_check(&motifs, &g, &c)?,
                (_, Some(k)) => connected_hull_check(&motifs, &g, parse_threshold(k)?, &c)?,
                (_, None) => return Err(CliError::Usage("connected-hull needs --k".into())),
            }
        }
    };
    let flags: Vec<String> = report
        .statistics
        .iter()
        .filter_map(|(k, v)| match v {
            hyperclust_core::lab::Stat::Bool(b) => Some(format!("{k}={b}")),
            hyperclust_core::lab::Stat::Int(_) => None,
        })
        .collect();
    let verdict = if report.passed() { "pass" } else { "fail" };
    let _ = writeln!(
        stderr,
        "{}: {verdict} on {} ({} counterexamples){}{}",
        property.name(),
        report.bounds,
        report.counterexamples.len(),
        if flags.is_empty() { "" } else { "; " },
        flags.join(" ")
    );
    emit(&a.out, &to_pretty(&report_to_json(&report)), stdout)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn simple_motifs(list: &str) -> CliResult<Vec<Hypergraph>> {
    parse_motif_list(list)?
        .motifs()
        .iter()
        .map(|m| match m {
            Motif::Graph(g) => Ok(g.clone()),
            _ => Err(CliError::Usage("motif families are not allowed here".into())),
        })
        .collect()
}

fn run_witness(a: &WitnessArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let w = finite_rep_witness(&simple_motifs(&a.motifs)?)?;
    emit(&a.out, &to_pretty(&witness_to_json(&w)), stdout)?;
    Ok(if w.holds() { EXIT_OK } else { EXIT_FAIL })
}

fn run_search(a: &SearchArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let bounds = SearchBounds {
        max_vertices: a.max_vertices,
        max_edges: a.max_edges,
        max_edge_size: a.max_edge_size,
        random_trials: a.trials,
    };
    let outcome = search_equal_parts_example(&bounds, a.seed)?;
    emit(&a.out, &to_pretty(&search_to_json(&outcome)), stdout)?;
    Ok(EXIT_OK)
}

fn run_bench_cmd(a: &BenchArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let family: Family = a.family.parse()?;
    let motifs = simple_motifs(&a.motif)?
        .into_iter()
        .map(|g| SimpleGraph::try_from(g).map_err(CliError::from))
        .collect::<CliResult<Vec<_>>>()?;
    let r = run_bench(family, &motifs, &a.sizes, a.reps, a.seed)?;
    emit(&a.out, &to_csv(&r, !a.no_timing), stdout)?;
    Ok(EXIT_OK)
}

pub fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Cluster(a) => run_cluster(a, stdout),
        Command::Phi(a) => run_phi(a, stdout),
        Command::Linegraph(a) => run_linegraph(a, stdout),
        Command::Check(a) => run_check(a, stdout, stderr),
        Command::Witness(a) => run_witness(a, stdout),
        Command::Search(a) => run_search(a, stdout),
        Command::Bench(a) => run_bench_cmd(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli, stdout, stderr),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            }
        }
    }
}

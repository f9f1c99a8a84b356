//! Embedding-count scaling runs over generated graph families.

use std::fmt::Write;
use std::str::FromStr;
use std::time::Instant;

use hyperclust_core::builders::{build_named, grid, random_degenerate, NamedGraph};
use hyperclust_core::graph::{independence_number, Hypergraph, SimpleGraph, INDEPENDENCE_BOUND};
use hyperclust_core::motif::{count_embeddings, Budget};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Random graphs of degeneracy at most `d`.
    Random { degeneracy: usize },
    /// Square-ish grids with about `n` vertices.
    Grid,
    Paths,
}

impl FromStr for Family {
    type Err = CliError;

    /// `random:<d>`, `random` (d = 2), `grid`, `paths`.
    fn from_str(s: &str) -> CliResult<Self> {
        match s.split_once(':') {
            Some(("random", d)) => d
                .parse()
                .map(|degeneracy| Family::Random { degeneracy })
                .map_err(|_| CliError::Usage(format!("bad degeneracy in family {s:?}"))),
            None if s == "random" => Ok(Family::Random { degeneracy: 2 }),
            None if s == "grid" => Ok(Family::Grid),
            None if s == "paths" => Ok(Family::Paths),
            _ => Err(CliError::Usage(format!("unknown family {s:?}"))),
        }
    }
}

impl Family {
    pub fn generate(self, n: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
        match self {
            Family::Random { degeneracy } => random_degenerate(n, degeneracy, rng),
            Family::Grid => {
                let rows = (n as f64).sqrt().floor().max(1.0) as usize;
                grid(rows, n.div_ceil(rows))
            }
            Family::Paths => build_named(&NamedGraph::Path(n)).expect("path"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub rep: usize,
    pub count: usize,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchResult {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of ln(mean count) against ln(n); 0 when fewer than
    /// two sizes have a positive count.
    pub slope: f64,
    /// Largest independence number over the motifs.
    pub alpha: usize,
}

/// Fits `ln y = a + slope · ln x` over points with positive `y`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if pts.len() < 2 {
        return 0.0;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// Counts embeddings of every motif into `repetitions` graphs per size. The
/// graph for `(n, rep)` depends only on `seed`, `n` and `rep`.
pub fn run_bench(family: Family, motifs: &[SimpleGraph], sizes: &[usize], repetitions: usize, seed: u64) -> CliResult<BenchResult> {
    let mut alpha = 0;
    for m in motifs {
        alpha = alpha.max(independence_number(m, INDEPENDENCE_BOUND)?);
    }
    let mut rows = Vec::new();
    let mut points = Vec::new();
    for &n in sizes {
        let mut total = 0usize;
        for rep in 0..repetitions.max(1) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32) ^ rep as u64);
            let g = family.generate(n, &mut rng);
            let start = Instant::now();
            let mut count = 0;
            for m in motifs {
                count += count_embeddings(m.as_hypergraph(), &g, Budget::default())?;
            }
            rows.push(BenchRow {
                n,
                rep,
                count,
                millis: start.elapsed().as_secs_f64() * 1e3,
            });
            total += count;
        }
        points.push((n as f64, total as f64 / repetitions.max(1) as f64));
    }
    Ok(BenchResult {
        rows,
        slope: log_log_slope(&points),
        alpha,
    })
}

/// CSV with a `# slope=` trailer. With `timing` off the time column is
/// omitted, which makes the output byte-identical across runs.
pub fn to_csv(r: &BenchResult, timing: bool) -> String {
    let mut out = String::from(if timing { "n,rep,count,millis\n" } else { "n,rep,count\n" });
    for row in &r.rows {
        if timing {
            writeln!(out, "{},{},{},{:.3}", row.n, row.rep, row.count, row.millis).unwrap();
        } else {
            writeln!(out, "{},{},{}", row.n, row.rep, row.count).unwrap();
        }
    }
    writeln!(out, "# slope={:.4} alpha={}", r.slope, r.alpha).unwrap();
    out
}

//! Benchmark protocol: best-of-R runs per (instance, heuristic), CSV output
//! and per-class summaries (average best VS, number of best solutions).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::optimal_vs_with_limit;
use crate::graph::{Graph, Layout};
use crate::heuristics::{best_of_runs, Heuristic};
use crate::instances::InstanceSpec;
use crate::random::derive_seed;

pub const DEFAULT_RUNS: usize = 30;

/// Result of running one heuristic on one instance. Serialises to one CSV row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeuristicRun {
    pub instance_id: String,
    pub class: String,
    pub n: usize,
    pub m: usize,
    pub heuristic: String,
    pub seed: u64,
    pub runs: usize,
    pub best_vs: usize,
    pub mean_vs: f64,
    pub time_ms: f64,
    #[serde(skip)]
    pub layout: Layout,
}

/// Runs `heuristic` `runs` times on `g` and records the best layout.
pub fn run_heuristic(
    g: &Graph,
    instance_id: &str,
    class: &str,
    heuristic: Heuristic,
    runs: usize,
    seed: u64,
) -> Result<HeuristicRun> {
    let start = Instant::now();
    let best = best_of_runs(g, heuristic, runs, seed)?;
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(HeuristicRun {
        instance_id: instance_id.to_string(),
        class: class.to_string(),
        n: g.n(),
        m: g.m(),
        heuristic: heuristic.id().to_string(),
        seed,
        runs,
        best_vs: best.vs,
        mean_vs: best.mean_vs(),
        time_ms,
        layout: best.layout,
    })
}

/// Outcome of a single `solve` invocation.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub run: HeuristicRun,
    /// Optimal vertex separation, when requested.
    pub exact_vs: Option<usize>,
}

impl SolveOutcome {
    pub fn gap(&self) -> Option<usize> {
        self.exact_vs.map(|opt| self.run.best_vs - opt)
    }
}

impl fmt::Display for SolveOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.run;
        writeln!(f, "instance:  {} (n={}, m={})", r.instance_id, r.n, r.m)?;
        writeln!(
            f,
            "heuristic: {} (runs={}, seed={})",
            r.heuristic, r.runs, r.seed
        )?;
        writeln!(f, "best vs:   {}", r.best_vs)?;
        writeln!(f, "mean vs:   {:.3}", r.mean_vs)?;
        writeln!(f, "time ms:   {:.3}", r.time_ms)?;
        if let (Some(opt), Some(gap)) = (self.exact_vs, self.gap()) {
            writeln!(f, "exact vs:  {opt}")?;
            writeln!(f, "gap:       {gap}")?;
        }
        let order: Vec<String> = r.layout.order().iter().map(ToString::to_string).collect();
        write!(f, "layout:    {}", order.join(" "))
    }
}

/// Best of `runs` seeded runs on one instance, optionally compared with the
/// exact optimum (only for graphs of at most `exact_limit` vertices).
pub fn solve(
    spec: &InstanceSpec,
    heuristic: Heuristic,
    runs: usize,
    seed: u64,
    exact: bool,
    exact_limit: usize,
) -> Result<SolveOutcome> {
    let g = spec.resolve()?;
    if exact && g.n() > exact_limit {
        return Err(Error::InstanceTooLarge {
            n: g.n(),
            limit: exact_limit,
        });
    }
    let run = run_heuristic(&g, &spec.id(), spec.family(), heuristic, runs, seed)?;
    let exact_vs = if exact {
        Some(optimal_vs_with_limit(&g, exact_limit)?.1)
    } else {
        None
    };
    Ok(SolveOutcome { run, exact_vs })
}

/// One manifest line: an instance and the class it is reported under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub class: String,
    pub spec: InstanceSpec,
}

/// Parses a manifest: one `<class> <family-or-file> <params...>` per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 2 {
            return Err(Error::parse(
                idx + 1,
                "expected `<class> <family-or-file> <params...>`",
            ));
        }
        let spec = InstanceSpec::from_tokens(&tokens[1..])
            .map_err(|e| Error::parse(idx + 1, e.to_string()))?;
        entries.push(ManifestEntry {
            class: tokens[0].to_string(),
            spec,
        });
    }
    Ok(entries)
}

/// Runs every heuristic on every manifest instance.
///
/// Instance `i` is run with seed `derive_seed(master_seed, i)` for all
/// heuristics. Instances are processed in parallel; rows come back in
/// manifest order, heuristics in the order given. The first failing
/// instance (in manifest order) aborts the whole benchmark.
pub fn run_bench(
    manifest: &[ManifestEntry],
    heuristics: &[Heuristic],
    runs: usize,
    master_seed: u64,
) -> Result<Vec<HeuristicRun>> {
    if heuristics.is_empty() {
        return Err(Error::InvalidParameter("no heuristics given".into()));
    }
    if runs == 0 {
        return Err(Error::InvalidParameter("runs must be at least 1".into()));
    }
    let per_instance: Vec<Result<Vec<HeuristicRun>>> = manifest
        .par_iter()
        .enumerate()
        .map(|(i, entry)| {
            let seed = derive_seed(master_seed, i as u64);
            let id = entry.spec.id();
            let wrap = |e: Error| Error::Instance {
                instance: id.clone(),
                source: Box::new(e),
            };
            let g = entry.spec.resolve().map_err(wrap)?;
            heuristics
                .iter()
                .map(|&h| run_heuristic(&g, &id, &entry.class, h, runs, seed).map_err(wrap))
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for result in per_instance {
        rows.extend(result?);
    }
    Ok(rows)
}

/// Writes runs as CSV with a header row.
pub fn write_csv<W: Write>(runs: &[HeuristicRun], writer: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    for run in runs {
        csv.serialize(run)?;
    }
    csv.flush()?;
    Ok(())
}

/// Per-heuristic line of a [`BenchReport`].
#[derive(Clone, Debug, PartialEq)]
pub struct HeuristicSummary {
    pub heuristic: String,
    /// Mean best VS per class (`None` when the heuristic has no run there).
    pub average_by_class: Vec<Option<f64>>,
    /// Mean best VS over all instances the heuristic ran on.
    pub average: f64,
    /// Instances per class on which this heuristic matched the best VS.
    pub best_by_class: Vec<usize>,
    pub best_total: usize,
}

/// Aggregate of a benchmark: average VS table and best-solution counts.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    /// Class names with their instance counts, in first-seen order.
    pub classes: Vec<(String, usize)>,
    pub rows: Vec<HeuristicSummary>,
}

/// Aggregates runs into a [`BenchReport`]. On each instance every heuristic
/// whose best VS equals the minimum over compared heuristics is credited.
pub fn summarize(runs: &[HeuristicRun]) -> Result<BenchReport> {
    let mut seen = HashSet::new();
    for r in runs {
        if !seen.insert((r.instance_id.as_str(), r.heuristic.as_str())) {
            return Err(Error::DuplicateRun {
                instance: r.instance_id.clone(),
                heuristic: r.heuristic.clone(),
            });
        }
    }

    let mut classes: Vec<String> = Vec::new();
    let mut heuristics: Vec<String> = Vec::new();
    let mut instances: Vec<(&str, &str)> = Vec::new();
    let mut instance_best: HashMap<&str, usize> = HashMap::new();
    for r in runs {
        if !classes.contains(&r.class) {
            classes.push(r.class.clone());
        }
        if !heuristics.contains(&r.heuristic) {
            heuristics.push(r.heuristic.clone());
        }
        let best = instance_best.entry(&r.instance_id).or_insert_with(|| {
            instances.push((&r.instance_id, &r.class));
            usize::MAX
        });
        *best = (*best).min(r.best_vs);
    }

    let class_index = |c: &str| classes.iter().position(|x| x == c).expect("class recorded");
    let mut class_sizes = vec![0usize; classes.len()];
    for (_, class) in &instances {
        class_sizes[class_index(class)] += 1;
    }

    let rows = heuristics
        .iter()
        .map(|h| {
            let mine: Vec<&HeuristicRun> = runs.iter().filter(|r| &r.heuristic == h).collect();
            let mut sums = vec![(0usize, 0usize); classes.len()];
            let mut best_by_class = vec![0usize; classes.len()];
            for r in &mine {
                let c = class_index(&r.class);
                sums[c].0 += r.best_vs;
                sums[c].1 += 1;
                if r.best_vs == instance_best[r.instance_id.as_str()] {
                    best_by_class[c] += 1;
                }
            }
            let total: usize = mine.iter().map(|r| r.best_vs).sum();
            HeuristicSummary {
                heuristic: h.clone(),
                average_by_class: sums
                    .iter()
                    .map(|&(s, k)| (k > 0).then(|| s as f64 / k as f64))
                    .collect(),
                average: total as f64 / mine.len() as f64,
                best_total: best_by_class.iter().sum(),
                best_by_class,
            }
        })
        .collect();

    Ok(BenchReport {
        classes: classes.into_iter().zip(class_sizes).collect(),
        rows,
    })
}

impl BenchReport {
    pub fn row(&self, heuristic: &str) -> Option<&HeuristicSummary> {
        self.rows.iter().find(|r| r.heuristic == heuristic)
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let headers: Vec<String> = self
            .classes
            .iter()
            .map(|(c, k)| format!("{c}({k})"))
            .collect();
        let width = headers.iter().map(String::len).max().unwrap_or(0).max(9);

        writeln!(f, "Average vertex separation")?;
        write!(f, "{:<10}", "heuristic")?;
        for h in &headers {
            write!(f, " {h:>width$}")?;
        }
        writeln!(f, " {:>width$}", "Average")?;
        for row in &self.rows {
            write!(f, "{:<10}", row.heuristic)?;
            for avg in &row.average_by_class {
                match avg {
                    Some(a) => write!(f, " {a:>width$.2}")?,
                    None => write!(f, " {:>width$}", "-")?,
                }
            }
            writeln!(f, " {:>width$.2}", row.average)?;
        }

        writeln!(f)?;
        writeln!(f, "Number of best solutions")?;
        write!(f, "{:<10}", "heuristic")?;
        for h in &headers {
            write!(f, " {h:>width$}")?;
        }
        writeln!(f, " {:>width$}", "Sum")?;
        for row in &self.rows {
            write!(f, "{:<10}", row.heuristic)?;
            for count in &row.best_by_class {
                write!(f, " {count:>width$}")?;
            }
            writeln!(f, " {:>width$}", row.best_total)?;
        }
        Ok(())
    }
}

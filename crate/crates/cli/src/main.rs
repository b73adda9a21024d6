use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use vsep_core::bench::{self, DEFAULT_RUNS};
use vsep_core::exact::DEFAULT_EXACT_LIMIT;
use vsep_core::instances::{write_edge_list, InstanceSpec};
use vsep_core::Heuristic;

#[derive(Parser)]
#[command(
    name = "vsep",
    version,
    about = "Vertex separation construction heuristics and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one heuristic on one instance and print the best layout.
    Solve {
        /// Instance, e.g. `grid:3:3`, `tree:12:7`, `path:100` or a file path.
        #[arg(long)]
        instance: String,
        /// One of h1, h2, h3, random.
        #[arg(long, default_value = "h1")]
        heuristic: String,
        #[arg(long, default_value_t = DEFAULT_RUNS)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also compute the optimum with the exact solver.
        #[arg(long)]
        exact: bool,
        /// Largest vertex count accepted by `--exact`.
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        exact_limit: usize,
    },
    /// Run heuristics over a manifest of instances, write CSV and print a summary.
    Bench {
        /// One instance per line: `<class> <family-or-file> <params...>`.
        #[arg(long)]
        manifest: PathBuf,
        /// Comma-separated heuristic ids.
        #[arg(long, value_delimiter = ',', default_value = "h1,h2,h3,random")]
        heuristics: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_RUNS)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate an instance and write it as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        /// Vertex count (leaf count for `star`).
        #[arg(long)]
        n: Option<usize>,
        /// Seed for random trees.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Grid,
    Tree,
    Path,
    Cycle,
    Complete,
    Star,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Solve {
            instance,
            heuristic,
            runs,
            seed,
            exact,
            exact_limit,
        } => {
            let spec: InstanceSpec = instance.parse()?;
            let heuristic: Heuristic = heuristic.parse()?;
            let outcome = bench::solve(&spec, heuristic, runs, seed, exact, exact_limit)
                .with_context(|| format!("solving {spec}"))?;
            println!("{outcome}");
        }
        Command::Bench {
            manifest,
            heuristics,
            runs,
            seed,
            out,
        } => {
            let heuristics = heuristics
                .iter()
                .filter(|h| !h.trim().is_empty())
                .map(|h| h.parse::<Heuristic>())
                .collect::<Result<Vec<_>, _>>()?;
            if heuristics.is_empty() {
                bail!("--heuristics needs at least one of h1, h2, h3, random");
            }
            let text = std::fs::read_to_string(&manifest)
                .with_context(|| format!("reading manifest {}", manifest.display()))?;
            let entries = bench::parse_manifest(&text)
                .with_context(|| format!("in manifest {}", manifest.display()))?;
            let rows = bench::run_bench(&entries, &heuristics, runs, seed)?;
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            bench::write_csv(&rows, BufWriter::new(file))?;
            print!("{}", bench::summarize(&rows)?);
        }
        Command::Gen {
            family,
            rows,
            cols,
            n,
            seed,
            out,
        } => {
            let need = |value: Option<usize>, flag: &str| {
                value.with_context(|| format!("this family needs --{flag}"))
            };
            let spec = match family {
                Family::Grid => InstanceSpec::Grid {
                    rows: need(rows, "rows")?,
                    cols: need(cols, "cols")?,
                },
                Family::Tree => InstanceSpec::RandomTree {
                    n: need(n, "n")?,
                    seed,
                },
                Family::Path => InstanceSpec::Path(need(n, "n")?),
                Family::Cycle => InstanceSpec::Cycle(need(n, "n")?),
                Family::Complete => InstanceSpec::Complete(need(n, "n")?),
                Family::Star => InstanceSpec::Star(need(n, "n")?),
            };
            let g = spec.resolve()?;
            std::fs::write(&out, write_edge_list(&g))
                .with_context(|| format!("writing {}", out.display()))?;
            println!(
                "wrote {spec} (n={}, m={}) to {}",
                g.n(),
                g.m(),
                out.display()
            );
        }
    }
    Ok(())
}

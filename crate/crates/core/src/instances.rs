//! Instance generators and file parsers.
//!
//! Two text formats are read:
//!
//! * edge lists: an `n m` header followed by lines `u v` with 1-based
//!   endpoints; lines starting with `#` and blank lines are skipped. The
//!   declared `m` is not checked against the number of edge lines;
//! * MatrixMarket coordinate files (`symmetric` or `general`), read as the
//!   off-diagonal nonzero pattern of a square matrix.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::random::RandomSource;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `rows x cols` lattice with 4-neighbour adjacency. The point in row `r`,
/// column `c` (both 0-based) is vertex `r * cols + c + 1`.
pub fn gen_grid(rows: usize, cols: usize) -> Result<Graph> {
    require(rows >= 1 && cols >= 1, || {
        format!("grid dimensions must be positive, got {rows}x{cols}")
    })?;
    let id = |r: usize, c: usize| r * cols + c + 1;
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges)
}

pub fn gen_path(n: usize) -> Result<Graph> {
    require(n >= 1, || "path needs n >= 1".into())?;
    Graph::new(n, (1..n).map(|v| (v, v + 1)))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Graph::new(n, (1..=n).map(|v| (v, v % n + 1)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    require(n >= 1, || "complete graph needs n >= 1".into())?;
    Graph::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
}

/// Star with centre `1` and leaves `2..=k+1`.
pub fn gen_star(k: usize) -> Result<Graph> {
    require(k >= 1, || "star needs at least one leaf".into())?;
    Graph::new(k + 1, (2..=k + 1).map(|v| (1, v)))
}

/// Uniformly random labelled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn gen_random_tree(n: usize, rng: &mut RandomSource) -> Result<Graph> {
    require(n >= 1, || "tree needs n >= 1".into())?;
    if n <= 2 {
        return Graph::new(n, (1..n).map(|v| (v, v + 1)));
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.below(n) + 1).collect();
    Graph::new(n, prufer_edges(n, &code))
}

/// Edges of the tree encoded by a Prüfer sequence over `1..=n`.
fn prufer_edges(n: usize, code: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut pending = vec![1usize; n + 1];
    for &v in code {
        pending[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (1..=n).filter(|&v| pending[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, v));
        pending[v] -= 1;
        if pending[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    edges
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{token}`")))
}

/// Parses the edge-list format. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(header_line, "header must be `n m`"));
    }
    let n = parse_usize(fields[0], header_line, "vertex count")?;
    let m = parse_usize(fields[1], header_line, "edge count")?;
    if n == 0 {
        return Err(Error::parse(header_line, "vertex count must be positive"));
    }

    // The declared edge count only sizes the buffer: files listing an edge
    // in both orientations, or more than once, are accepted.
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(
                line,
                format!("expected `u v`, found `{content}`"),
            ));
        }
        let u = parse_usize(fields[0], line, "vertex")?;
        let v = parse_usize(fields[1], line, "vertex")?;
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

/// Serialises `g` as an edge list, edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a MatrixMarket coordinate file into the graph of its off-diagonal
/// nonzero pattern. Diagonal entries are dropped, `(i, j)` and `(j, i)` are
/// merged and values are ignored.
pub fn parse_matrix_market(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

    let (_, banner) = lines
        .next()
        .ok_or_else(|| Error::UnsupportedFormat("empty file".into()))?;
    let tokens: Vec<String> = banner
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" || tokens[1] != "matrix" {
        return Err(Error::UnsupportedFormat(format!("bad banner `{banner}`")));
    }
    if tokens[2] != "coordinate" {
        return Err(Error::UnsupportedFormat(format!(
            "`{}` storage is not supported",
            tokens[2]
        )));
    }
    let values_per_entry = match tokens[3].as_str() {
        "pattern" => 0,
        "real" | "integer" => 1,
        "complex" => 2,
        other => return Err(Error::UnsupportedFormat(format!("field `{other}`"))),
    };
    if tokens[4] != "symmetric" && tokens[4] != "general" {
        return Err(Error::UnsupportedFormat(format!(
            "symmetry `{}`",
            tokens[4]
        )));
    }

    let mut lines = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));
    let (size_line, size) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing size line"))?;
    let fields: Vec<&str> = size.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::parse(
            size_line,
            "size line must be `rows cols entries`",
        ));
    }
    let rows = parse_usize(fields[0], size_line, "row count")?;
    let cols = parse_usize(fields[1], size_line, "column count")?;
    let nnz = parse_usize(fields[2], size_line, "entry count")?;
    if rows != cols {
        return Err(Error::UnsupportedFormat(format!(
            "matrix is {rows}x{cols}, not square"
        )));
    }
    if rows == 0 {
        return Err(Error::parse(size_line, "matrix has no rows"));
    }

    let mut edges = Vec::with_capacity(nnz);
    let mut seen = 0;
    let mut last_line = size_line;
    for (line, content) in lines {
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 + values_per_entry {
            return Err(Error::parse(
                line,
                format!(
                    "expected {} fields, found {}",
                    2 + values_per_entry,
                    fields.len()
                ),
            ));
        }
        if seen == nnz {
            return Err(Error::parse(
                line,
                format!("more than the declared {nnz} entries"),
            ));
        }
        let i = parse_usize(fields[0], line, "row index")?;
        let j = parse_usize(fields[1], line, "column index")?;
        for value in &fields[2..] {
            value
                .parse::<f64>()
                .map_err(|_| Error::parse(line, format!("bad value `{value}`")))?;
        }
        seen += 1;
        for index in [i, j] {
            if index == 0 || index > rows {
                return Err(Error::InvalidVertex {
                    vertex: index,
                    n: rows,
                });
            }
        }
        if i != j {
            edges.push((i, j));
        }
    }
    if seen != nnz {
        return Err(Error::parse(
            last_line,
            format!("declared {nnz} entries but found {seen}"),
        ));
    }
    Graph::new(rows, edges)
}

/// Reads a graph file, choosing the parser by extension: `.mtx` is
/// MatrixMarket, anything else an edge list.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    let is_mtx = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("mtx"));
    if is_mtx {
        parse_matrix_market(&text)
    } else {
        parse_edge_list(&text)
    }
}

/// A reproducible description of one benchmark instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    Grid { rows: usize, cols: usize },
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    RandomTree { n: usize, seed: u64 },
    File(PathBuf),
}

impl InstanceSpec {
    /// Parses `<family> <params...>` tokens, e.g. `["grid", "3", "4"]`,
    /// `["tree", "12", "7"]` or `["file", "bcspwr01.mtx"]`. A single token
    /// that is not a family name is taken as a file path.
    pub fn from_tokens(tokens: &[&str]) -> Result<Self> {
        let bad = |msg: String| Error::InvalidParameter(msg);
        let Some((&family, params)) = tokens.split_first() else {
            return Err(bad("empty instance description".into()));
        };
        let num = |i: usize| -> Result<usize> {
            let token = params
                .get(i)
                .ok_or_else(|| bad(format!("`{family}` is missing parameter {}", i + 1)))?;
            token
                .parse()
                .map_err(|_| bad(format!("`{token}` is not a non-negative integer")))
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() > k {
                Err(bad(format!(
                    "`{family}` takes {k} parameter(s), got {}",
                    params.len()
                )))
            } else {
                Ok(())
            }
        };
        let spec = match family.to_ascii_lowercase().as_str() {
            "grid" => {
                arity(2)?;
                InstanceSpec::Grid {
                    rows: num(0)?,
                    cols: num(1)?,
                }
            }
            "path" => {
                arity(1)?;
                InstanceSpec::Path(num(0)?)
            }
            "cycle" => {
                arity(1)?;
                InstanceSpec::Cycle(num(0)?)
            }
            "complete" => {
                arity(1)?;
                InstanceSpec::Complete(num(0)?)
            }
            "star" => {
                arity(1)?;
                InstanceSpec::Star(num(0)?)
            }
            "tree" | "random-tree" => {
                arity(2)?;
                let seed = match params.get(1) {
                    Some(s) => s.parse().map_err(|_| bad(format!("`{s}` is not a seed")))?,
                    None => 0,
                };
                InstanceSpec::RandomTree { n: num(0)?, seed }
            }
            "file" => {
                arity(1)?;
                let path = params
                    .first()
                    .ok_or_else(|| bad("`file` needs a path".into()))?;
                InstanceSpec::File(PathBuf::from(path))
            }
            _ if params.is_empty() => InstanceSpec::File(PathBuf::from(family)),
            _ => return Err(bad(format!("unknown instance family `{family}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            InstanceSpec::Grid { rows, cols } => require(rows >= 1 && cols >= 1, || {
                "grid dimensions must be positive".into()
            }),
            InstanceSpec::Path(n)
            | InstanceSpec::Complete(n)
            | InstanceSpec::RandomTree { n, .. } => {
                require(n >= 1, || "vertex count must be positive".into())
            }
            InstanceSpec::Cycle(n) => require(n >= 3, || "cycle needs n >= 3".into()),
            InstanceSpec::Star(k) => require(k >= 1, || "star needs k >= 1".into()),
            InstanceSpec::File(_) => Ok(()),
        }
    }

    /// Builds (or reads) the graph.
    pub fn resolve(&self) -> Result<Graph> {
        match self {
            InstanceSpec::Grid { rows, cols } => gen_grid(*rows, *cols),
            InstanceSpec::Path(n) => gen_path(*n),
            InstanceSpec::Cycle(n) => gen_cycle(*n),
            InstanceSpec::Complete(n) => gen_complete(*n),
            InstanceSpec::Star(k) => gen_star(*k),
            InstanceSpec::RandomTree { n, seed } => {
                gen_random_tree(*n, &mut RandomSource::new(*seed))
            }
            InstanceSpec::File(path) => read_graph_file(path),
        }
    }

    /// Family name, e.g. `grid` or `file`.
    pub fn family(&self) -> &'static str {
        match self {
            InstanceSpec::Grid { .. } => "grid",
            InstanceSpec::Path(_) => "path",
            InstanceSpec::Cycle(_) => "cycle",
            InstanceSpec::Complete(_) => "complete",
            InstanceSpec::Star(_) => "star",
            InstanceSpec::RandomTree { .. } => "tree",
            InstanceSpec::File(_) => "file",
        }
    }

    /// Short identifier used in reports, e.g. `grid-3x4` or `tree-12-s7`.
    pub fn id(&self) -> String {
        match self {
            InstanceSpec::Grid { rows, cols } => format!("grid-{rows}x{cols}"),
            InstanceSpec::Path(n) => format!("path-{n}"),
            InstanceSpec::Cycle(n) => format!("cycle-{n}"),
            InstanceSpec::Complete(n) => format!("complete-{n}"),
            InstanceSpec::Star(k) => format!("star-{k}"),
            InstanceSpec::RandomTree { n, seed } => format!("tree-{n}-s{seed}"),
            InstanceSpec::File(path) => path.display().to_string(),
        }
    }
}

impl FromStr for InstanceSpec {
    type Err = Error;

    /// Tokens separated by whitespace or `:`, e.g. `grid:3:4` or `tree 12 7`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ':')
            .filter(|t| !t.is_empty())
            .collect();
        InstanceSpec::from_tokens(&tokens)
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

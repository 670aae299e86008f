//! Text formats for groups and graphs.
//!
//! Group file:
//! ```text
//! degree: 4
//! (1 2 3 4)
//! (1 3)
//! ```
//! Graph file, 1-based edges:
//! ```text
//! vertices: 3
//! 1 2
//! 2 3
//! ```
//! Blank lines and text after `#` are ignored in both.

use std::fmt::Write as _;
use std::path::Path;

use dng_core::graph::Graph;
use dng_core::perm::parse_cycles;
use dng_core::Permutation;

use crate::error::{DngError, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header(line: Option<(usize, &str)>, key: &str) -> Result<usize> {
    let (no, line) = line.ok_or_else(|| DngError::Input(format!("missing \"{key}: n\" header")))?;
    let value = line
        .strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .ok_or_else(|| DngError::Input(format!("line {no}: expected \"{key}: n\", got {line:?}")))?;
    value
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| DngError::Input(format!("line {no}: {key} must be a positive integer")))
}

/// Splits `"(1 2 3),(1 2)"` at commas outside parentheses.
pub fn split_generators(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

/// Comma-separated cycle strings on `degree` points.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    let parts = split_generators(text);
    if parts.is_empty() {
        return Err(DngError::Input(String::from("no generators given")));
    }
    parts
        .iter()
        .enumerate()
        .map(|(i, p)| parse_cycles(p, degree).map_err(|e| DngError::Input(format!("generator {} {p:?}: {e}", i + 1))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let mut lines = content_lines(text);
    let degree = header(lines.next(), "degree")?;
    let mut generators = Vec::new();
    for (no, line) in lines {
        let p = parse_cycles(line, degree).map_err(|e| DngError::Input(format!("line {no}: {e}")))?;
        generators.push(p);
    }
    if generators.is_empty() {
        return Err(DngError::Core(dng_core::Error::EmptyGenerators));
    }
    Ok(GroupFile { degree, generators })
}

pub fn write_group_file(degree: usize, generators: &[Permutation]) -> String {
    let mut s = format!("degree: {degree}\n");
    for g in generators {
        let _ = writeln!(s, "{}", g.to_cycle_string());
    }
    s
}

pub fn parse_graph_file(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let n = header(lines.next(), "vertices")?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let ends: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().ok().filter(|&v| v >= 1))
            .collect::<Option<_>>()
            .ok_or_else(|| DngError::Input(format!("line {no}: vertices are positive integers")))?;
        let [u, v] = ends[..] else {
            return Err(DngError::Input(format!("line {no}: expected \"u v\", got {line:?}")));
        };
        edges.push((u - 1, v - 1));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_graph_file(g: &Graph) -> String {
    let mut s = format!("vertices: {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    s
}

/// `cycle:7`, `path:5`, `complete:4`, `empty:3`.
pub fn parse_family(spec: &str) -> Result<Graph> {
    let bad = || DngError::Input(format!("family {spec:?}: expected NAME:N with NAME in cycle, path, complete, empty"));
    let (name, n) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let g = match name.trim() {
        "cycle" => Graph::cycle(n),
        "path" => Graph::path(n),
        "complete" => Graph::complete(n),
        "empty" => Graph::empty(n),
        _ => return Err(bad()),
    };
    Ok(g?)
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| DngError::Io { path: path.to_path_buf(), source })
}

/// Generators from a file path when one exists, otherwise inline text.
/// Inline text needs `degree`; a file's header must agree with it.
pub fn load_generators(arg: &str, degree: Option<usize>) -> Result<GroupFile> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('(') && path.is_file() {
        let file = parse_group_file(&read_text(path)?)?;
        if let Some(d) = degree.filter(|&d| d != file.degree) {
            return Err(DngError::Input(format!("--degree {d} disagrees with {} header degree {}", path.display(), file.degree)));
        }
        return Ok(file);
    }
    if !arg.trim_start().starts_with('(') {
        return Err(DngError::Input(format!("{arg:?} is neither a file nor cycle notation")));
    }
    let degree = degree.ok_or_else(|| DngError::Input(String::from("inline generators need --degree")))?;
    if degree == 0 {
        return Err(DngError::Core(dng_core::Error::InvalidDegree));
    }
    Ok(GroupFile { degree, generators: parse_generators(arg, degree)? })
}

//! Text graph format: a header line `n d m`, then `m` lines `u v` with
//! `0 ≤ u < v < n`. Lines starting with `#` are comments; blank lines are
//! ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::RegularGraph;
use crate::error::{Error, Result};

pub fn write_graph(g: &RegularGraph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_text(g)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn to_text(g: &RegularGraph) -> String {
    let mut out = format!("{} {} {}\n", g.n(), g.d(), g.edges().len());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<RegularGraph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph(&text, path)
}

/// Parses graph text; `origin` only labels error messages.
pub fn parse_graph(text: &str, origin: impl AsRef<Path>) -> Result<RegularGraph> {
    let fail = |line: usize, message: String| Error::Parse {
        path: origin.as_ref().to_path_buf(),
        line,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| fail(1, "missing header `n d m`".into()))?;
    let fields = parse_ints(header).map_err(|m| fail(header_line, m))?;
    let [n, d, m] = fields[..] else {
        return Err(fail(header_line, format!("header needs 3 integers, found {}", fields.len())));
    };
    if n == 0 || d == 0 || d >= n || (n * d) % 2 != 0 {
        return Err(fail(header_line, format!("invalid header n={n} d={d}")));
    }
    if 2 * m != n * d {
        return Err(fail(header_line, format!("m={m} but a {d}-regular graph on {n} vertices has {}", n * d / 2)));
    }

    let mut degree = vec![0usize; n];
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for (line, body) in lines {
        let f = parse_ints(body).map_err(|msg| fail(line, msg))?;
        let [u, v] = f[..] else {
            return Err(fail(line, format!("edge line needs 2 integers, found {}", f.len())));
        };
        if u == v {
            return Err(fail(line, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(fail(line, format!("edge `{u} {v}` must be written with u < v")));
        }
        if v >= n {
            return Err(fail(line, format!("vertex {v} out of range for n={n}")));
        }
        if !seen.insert((u, v)) {
            return Err(fail(line, format!("duplicate edge `{u} {v}`")));
        }
        for w in [u, v] {
            degree[w] += 1;
            if degree[w] > d {
                return Err(fail(line, format!("vertex {w} exceeds degree {d}")));
            }
        }
        count += 1;
    }
    if count != m {
        return Err(fail(header_line, format!("header declares {m} edges, found {count}")));
    }
    if let Some(v) = degree.iter().position(|&k| k != d) {
        return Err(fail(header_line, format!("vertex {v} has degree {} but header claims d={d}", degree[v])));
    }
    RegularGraph::new(n, d, seen)
}

fn parse_ints(line: &str) -> std::result::Result<Vec<usize>, String> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer")))
        .collect()
}

//! Graph text format and named generators.
//!
//! Text format: first line `n m`, then `m` lines `u v` with `u < v`, 0-indexed.

use std::fmt::Write as _;

use super::{Edge, Graph};
use crate::error::{Error, Result};

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph text".into()))?;
    let mut fields = header.split_whitespace();
    let n = parse_field(fields.next(), "vertex count")?;
    let m = parse_field(fields.next(), "edge count")?;
    if fields.next().is_some() {
        return Err(Error::Parse(format!("unexpected header `{header}`")));
    }
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for line in lines {
        let mut fields = line.split_whitespace();
        let u = parse_field(fields.next(), "endpoint")?;
        let v = parse_field(fields.next(), "endpoint")?;
        if fields.next().is_some() {
            return Err(Error::Parse(format!("unexpected edge line `{line}`")));
        }
        if u >= v || v >= n {
            return Err(Error::Parse(format!("edge `{line}` needs u < v < {n}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse(format!("duplicate edge `{line}`")));
        }
        g.add_edge(Edge { u, v })?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_field(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what}")))
}

impl Graph {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for e in self.edges() {
            let _ = writeln!(out, "{} {}", e.u, e.v);
        }
        out
    }
}

/// `K<n>`, `C<n>`, `P<n>` (path on n vertices), `Kpartite:<s1>,<s2>,...`, `petersen`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim();
    if name.eq_ignore_ascii_case("petersen") {
        return Ok(petersen());
    }
    if let Some(sizes) = name.strip_prefix("Kpartite:") {
        let sizes = sizes
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad part sizes in `{name}`")))?;
        return Ok(complete_multipartite(&sizes));
    }
    let bad = || Error::Parse(format!("unknown graph name `{name}`"));
    let (kind, count) = name.split_at(1.min(name.len()));
    let n: usize = count.parse().map_err(|_| bad())?;
    match kind {
        "K" => Ok(Graph::complete(n)),
        "C" if n >= 3 => Ok(cycle(n)),
        "P" if n >= 1 => Ok(path(n)),
        _ => Err(bad()),
    }
}

pub(crate) fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    g.add_edge_unchecked(0, n - 1);
    g
}

pub(crate) fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge_unchecked(v - 1, v);
    }
    g
}

/// Parts are consecutive vertex blocks of the given sizes.
pub(crate) fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g
}

fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge_unchecked(i, (i + 1) % 5);
        g.add_edge_unchecked(i, i + 5);
        g.add_edge_unchecked(5 + i, 5 + (i + 2) % 5);
    }
    g
}

//! Simple undirected graphs on labeled vertices with bitset adjacency.

mod bits;
mod coloring;
mod family;
mod io;
mod search;
mod turan;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use bits::{Ones, VertexSet};
pub use coloring::{chromatic_number, is_k_colorable};
pub use family::GraphFamily;
pub use io::{named_graph, parse_graph_text};
pub use search::{contains_induced, contains_subgraph, contains_subgraph_through, Witness};
pub(crate) use turan::raw_bounds;
pub use turan::{theorem_bounds, turan_graph, turan_number, BoundVariant, TheoremBounds};

/// An edge `{u, v}` of `K_n`, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order; fails on loops.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidEdge { u: a, v: b, n: 0 });
        }
        Ok(Self { u: a.min(b), v: a.max(b) })
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.u < self.v && self.v < n {
            Ok(())
        } else {
            Err(Error::InvalidEdge { u: self.u, v: self.v, n })
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[inline]
pub fn edge_count_of_complete(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `e` in the lexicographic order of the edges of `K_n`.
pub fn edge_index(e: Edge, n: usize) -> Result<usize> {
    e.check(n)?;
    Ok(edge_index_unchecked(e.u, e.v, n))
}

#[inline]
pub(crate) fn edge_index_unchecked(u: usize, v: usize, n: usize) -> usize {
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_of(id: usize, n: usize) -> Result<Edge> {
    if id >= edge_count_of_complete(n) {
        return Err(Error::InvalidEdgeId { id, n });
    }
    let mut u = 0;
    let mut start = 0;
    loop {
        let row = n - u - 1;
        if id < start + row {
            return Ok(Edge { u, v: u + 1 + id - start });
        }
        start += row;
        u += 1;
    }
}

/// All edges of `K_n` indexed by [`edge_index`].
pub fn edge_table(n: usize) -> Vec<Edge> {
    let mut out = Vec::with_capacity(edge_count_of_complete(n));
    for u in 0..n {
        for v in u + 1..n {
            out.push(Edge { u, v });
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            g.add_edge(Edge::new(a, b).map_err(|_| Error::InvalidEdge { u: a, v: b, n })?)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, e: Edge) -> Result<()> {
        e.check(self.n)?;
        self.add_edge_unchecked(e.u, e.v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<()> {
        e.check(self.n)?;
        self.adj[e.u].remove(e.v);
        self.adj[e.v].remove(e.u);
        Ok(())
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| Edge { u, v })
        })
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            let mut row = self.adj[u].complement();
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in increasing order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut g = Self::empty(self.n);
        for e in self.edges() {
            g.add_edge_unchecked(perm[e.u], perm[e.v]);
        }
        g
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    /// Number of edges with one endpoint in `s` and the other in `t`.
    pub fn edges_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize> {
        self.check_set(s)?;
        self.check_set(t)?;
        if !s.is_disjoint(t) {
            return Err(Error::OverlappingSets);
        }
        Ok(self.edges_between_unchecked(s, t))
    }

    #[inline]
    pub(crate) fn edges_between_unchecked(&self, s: &VertexSet, t: &VertexSet) -> usize {
        s.iter().map(|u| self.adj[u].intersection_len(t)).sum()
    }

    /// Edges with both endpoints in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|u| self.adj[u].intersection_len(s)).sum::<usize>() / 2
    }

    /// `e(A, B) / (|A| |B|)`.
    pub fn density<T: Scalar>(&self, a: &VertexSet, b: &VertexSet) -> Result<T> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let e = self.edges_between(a, b)?;
        Ok(T::from_ratio(e as i64, (a.len() * b.len()) as i64))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

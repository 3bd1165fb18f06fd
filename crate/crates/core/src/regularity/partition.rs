use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Partition of a ground set into parts whose sizes differ by at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equipartition {
    ground: VertexSet,
    parts: Vec<VertexSet>,
}

impl Equipartition {
    pub fn new(ground: VertexSet, parts: Vec<VertexSet>) -> Result<Self> {
        let universe = ground.universe();
        let mut union = VertexSet::new(universe);
        for (i, part) in parts.iter().enumerate() {
            if part.universe() != universe {
                return Err(Error::MalformedPartition(format!("part {i} has a different universe")));
            }
            if !part.is_disjoint(&union) {
                return Err(Error::MalformedPartition(format!("part {i} overlaps an earlier part")));
            }
            union.union_with(part);
        }
        if union != ground {
            return Err(Error::MalformedPartition("parts do not cover the ground set exactly".into()));
        }
        let sizes = parts.iter().map(VertexSet::len);
        let (lo, hi) = sizes.fold((usize::MAX, 0), |(lo, hi), s| (lo.min(s), hi.max(s)));
        if !parts.is_empty() && hi - lo > 1 {
            return Err(Error::MalformedPartition(format!("part sizes range over {lo}..={hi}")));
        }
        Ok(Self { ground, parts })
    }

    /// Parts of `{0..n-1}` with vertex `v` in part `v mod parts`.
    pub fn round_robin(n: usize, parts: usize) -> Result<Self> {
        if parts == 0 {
            return Err(Error::MalformedPartition("zero parts".into()));
        }
        let mut sets = vec![VertexSet::new(n); parts];
        for v in 0..n {
            sets[v % parts].insert(v);
        }
        Self::new(VertexSet::full(n), sets)
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

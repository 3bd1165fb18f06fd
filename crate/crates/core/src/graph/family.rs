use super::{chromatic_number, Graph};
use crate::error::{Error, Result};

/// A nonempty family of forbidden graphs with its minimum chromatic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFamily {
    members: Vec<Graph>,
    chromatic: Vec<usize>,
    k: usize,
    designated: usize,
    label: String,
}

impl GraphFamily {
    pub fn new(members: Vec<Graph>, label: impl Into<String>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidParameter("empty graph family".into()));
        }
        let chromatic: Vec<usize> = members.iter().map(chromatic_number).collect();
        let k = *chromatic.iter().min().expect("nonempty");
        let designated = chromatic.iter().position(|&c| c == k).expect("minimum is attained");
        Ok(Self {
            members,
            chromatic,
            k,
            designated,
            label: label.into(),
        })
    }

    pub fn single(g: Graph, label: impl Into<String>) -> Self {
        Self::new(vec![g], label).expect("one member")
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn chromatic_numbers(&self) -> &[usize] {
        &self.chromatic
    }

    /// Minimum chromatic number over the members.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The first member attaining `k`.
    pub fn designated(&self) -> &Graph {
        &self.members[self.designated]
    }

    /// Order of the designated member.
    pub fn f(&self) -> usize {
        self.designated().order()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Every member is a complete graph.
    pub fn all_complete(&self) -> bool {
        self.members
            .iter()
            .all(|g| g.edge_count() == g.order() * g.order().saturating_sub(1) / 2)
    }
}

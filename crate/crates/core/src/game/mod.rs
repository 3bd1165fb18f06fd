//! Unbiased edge games on `K_n`: rules, state, property detection and match play.
//!
//! The player whose graph is tested (Avoider, or Maker under Maker-Breaker
//! naming) always occupies the [`Role::Avoider`] seat.

mod fenwick;
mod play;
mod property;
mod transcript;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_count_of_complete, edge_index, edge_table, Edge, Graph, VertexSet};
use fenwick::Fenwick;

pub use play::{play_full_board, play_match};
pub use property::{IncrementalDetector, PropertyDetector};
pub use transcript::{MoveRecord, Outcome, Transcript, TranscriptHeader};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// Owner of the tested graph.
    Avoider,
    Enforcer,
}

impl Role {
    pub fn other(self) -> Self {
        match self {
            Role::Avoider => Role::Enforcer,
            Role::Enforcer => Role::Avoider,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    #[default]
    AvoiderEnforcer,
    MakerBreaker,
}

impl Convention {
    pub fn role_name(self, role: Role) -> &'static str {
        match (self, role) {
            (Convention::AvoiderEnforcer, Role::Avoider) => "avoider",
            (Convention::AvoiderEnforcer, Role::Enforcer) => "enforcer",
            (Convention::MakerBreaker, Role::Avoider) => "maker",
            (Convention::MakerBreaker, Role::Enforcer) => "breaker",
        }
    }

    pub fn parse_role(self, name: &str) -> Option<Role> {
        [Role::Avoider, Role::Enforcer]
            .into_iter()
            .find(|&r| self.role_name(r) == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::AvoiderEnforcer => "avoider-enforcer",
            Convention::MakerBreaker => "maker-breaker",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct GameRules {
    pub n: usize,
    pub convention: Convention,
    pub first_mover: Role,
    /// Evaluated on the Avoider seat's graph after each of its moves.
    pub property: PropertyDetector,
}

impl GameRules {
    pub fn new(n: usize, property: PropertyDetector) -> Self {
        Self {
            n,
            convention: Convention::AvoiderEnforcer,
            first_mover: Role::Avoider,
            property,
        }
    }

    pub fn with_first_mover(mut self, role: Role) -> Self {
        self.first_mover = role;
        self
    }

    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    pub fn edge_count(&self) -> usize {
        edge_count_of_complete(self.n)
    }

    /// `ceil(C(n,2) / 2)`: the most moves the Avoider seat can make.
    pub fn max_avoider_moves(&self) -> usize {
        let m = self.edge_count();
        match self.first_mover {
            Role::Avoider => m.div_ceil(2),
            Role::Enforcer => m / 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Unclaimed,
    Avoider,
    Enforcer,
}

impl From<Role> for Claim {
    fn from(role: Role) -> Self {
        match role {
            Role::Avoider => Claim::Avoider,
            Role::Enforcer => Claim::Enforcer,
        }
    }
}

/// Board position: claim per edge id, move history and both players' graphs.
#[derive(Clone, Debug)]
pub struct GameState {
    rules: GameRules,
    edges: Arc<[Edge]>,
    claims: Vec<Claim>,
    history: Vec<(Role, Edge)>,
    avoider: Graph,
    enforcer: Graph,
    free: Graph,
    free_ids: Fenwick,
    moves: [usize; 2],
}

impl GameState {
    pub fn new(rules: GameRules) -> Result<Self> {
        let n = rules.n;
        if n < 2 {
            return Err(Error::BoardTooSmall(n));
        }
        let m = rules.edge_count();
        Ok(Self {
            edges: edge_table(n).into(),
            claims: vec![Claim::Unclaimed; m],
            history: Vec::new(),
            avoider: Graph::empty(n),
            enforcer: Graph::empty(n),
            free: Graph::complete(n),
            free_ids: Fenwick::all_set(m),
            moves: [0, 0],
            rules,
        })
    }

    pub fn rules(&self) -> &GameRules {
        &self.rules
    }

    pub fn n(&self) -> usize {
        self.rules.n
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn claim(&self, e: Edge) -> Result<Claim> {
        Ok(self.claims[edge_index(e, self.n())?])
    }

    pub fn history(&self) -> &[(Role, Edge)] {
        &self.history
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn moves_by(&self, role: Role) -> usize {
        self.moves[role as usize]
    }

    /// Completed rounds: moves made by the second mover.
    pub fn round(&self) -> usize {
        self.moves_by(self.rules.first_mover.other())
    }

    pub fn unclaimed_count(&self) -> usize {
        self.free_ids.total()
    }

    /// Whose turn it is, or `None` once the board is exhausted.
    pub fn to_move(&self) -> Option<Role> {
        if self.unclaimed_count() == 0 {
            return None;
        }
        let first = self.rules.first_mover;
        if self.moves_by(first) == self.moves_by(first.other()) {
            Some(first)
        } else {
            Some(first.other())
        }
    }

    pub fn avoider_graph(&self) -> &Graph {
        &self.avoider
    }

    pub fn enforcer_graph(&self) -> &Graph {
        &self.enforcer
    }

    pub fn graph_of(&self, role: Role) -> &Graph {
        match role {
            Role::Avoider => &self.avoider,
            Role::Enforcer => &self.enforcer,
        }
    }

    /// Unclaimed neighbours of `v`.
    pub fn free_row(&self, v: usize) -> &VertexSet {
        self.free.neighbors(v)
    }

    pub fn is_free(&self, u: usize, v: usize) -> bool {
        self.free.has_edge(u, v)
    }

    /// The `k`-th unclaimed edge in edge-index order.
    pub fn kth_unclaimed(&self, k: usize) -> Option<Edge> {
        self.free_ids.select(k).map(|id| self.edges[id])
    }

    pub fn unclaimed(&self) -> impl Iterator<Item = Edge> + '_ {
        self.claims
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == Claim::Unclaimed)
            .map(|(id, _)| self.edges[id])
    }

    pub fn apply_move(&mut self, role: Role, e: Edge) -> Result<()> {
        let id = edge_index(e, self.n())?;
        let expected = self.to_move().ok_or(Error::BoardExhausted)?;
        if expected != role {
            return Err(Error::OutOfTurn {
                expected: self.rules.convention.role_name(expected),
                found: self.rules.convention.role_name(role),
            });
        }
        if self.claims[id] != Claim::Unclaimed {
            return Err(Error::AlreadyClaimed(e));
        }
        self.claims[id] = role.into();
        self.history.push((role, e));
        self.free.remove_edge(e)?;
        self.free_ids.clear(id);
        self.moves[role as usize] += 1;
        match role {
            Role::Avoider => self.avoider.add_edge_unchecked(e.u, e.v),
            Role::Enforcer => self.enforcer.add_edge_unchecked(e.u, e.v),
        }
        Ok(())
    }

    /// Copy of this state with one more move applied.
    pub fn with_move(&self, role: Role, e: Edge) -> Result<Self> {
        let mut next = self.clone();
        next.apply_move(role, e)?;
        Ok(next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(n: usize) -> GameRules {
        GameRules::new(n, PropertyDetector::HasEdge)
    }

    #[test]
    fn fresh_boards() {
        let s = GameState::new(rules(4)).unwrap();
        assert_eq!(s.unclaimed_count(), 6);
        assert_eq!(s.round(), 0);
        assert_eq!(s.to_move(), Some(Role::Avoider));
        assert_eq!(GameState::new(rules(2)).unwrap().unclaimed_count(), 1);
        assert!(matches!(GameState::new(rules(1)), Err(Error::BoardTooSmall(1))));
        assert_eq!(s.avoider_graph().edge_count(), 0);
    }

    #[test]
    fn move_validation() {
        let mut s = GameState::new(rules(4)).unwrap();
        let e01 = Edge::new(0, 1).unwrap();
        assert!(matches!(s.apply_move(Role::Enforcer, e01), Err(Error::OutOfTurn { .. })));
        s.apply_move(Role::Avoider, e01).unwrap();
        assert_eq!(s.claims()[0], Claim::Avoider);
        assert_eq!(s.apply_move(Role::Enforcer, e01), Err(Error::AlreadyClaimed(e01)));
        assert!(s.apply_move(Role::Enforcer, Edge { u: 2, v: 4 }).is_err());
        s.apply_move(Role::Enforcer, Edge::new(0, 2).unwrap()).unwrap();
        assert_eq!(s.round(), 1);
        s.apply_move(Role::Avoider, Edge::new(1, 2).unwrap()).unwrap();
        assert_eq!(s.round(), 1);
        let path = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(s.avoider_graph(), &path);
        assert_eq!(s.avoider_graph().edge_count() + s.enforcer_graph().edge_count(), s.history().len());
        assert_eq!(s.kth_unclaimed(0), Some(Edge::new(0, 3).unwrap()));
    }

    #[test]
    fn enforcer_first_rounds() {
        let mut s = GameState::new(rules(3).with_first_mover(Role::Enforcer)).unwrap();
        assert_eq!(s.to_move(), Some(Role::Enforcer));
        s.apply_move(Role::Enforcer, Edge::new(0, 1).unwrap()).unwrap();
        assert_eq!(s.round(), 0);
        s.apply_move(Role::Avoider, Edge::new(0, 2).unwrap()).unwrap();
        assert_eq!(s.round(), 1);
        s.apply_move(Role::Enforcer, Edge::new(1, 2).unwrap()).unwrap();
        assert_eq!(s.to_move(), None);
        assert_eq!(s.apply_move(Role::Avoider, Edge::new(1, 2).unwrap()), Err(Error::BoardExhausted));
    }
}

//! Exact hitting-round values on tiny boards by memoized minimax.
//!
//! The value of a position is the round in which the Avoider seat's graph first
//! acquires the property under optimal play, or `Never`. Under the
//! Avoider-Enforcer convention the Avoider seat maximizes it; under
//! Maker-Breaker the same seat (Maker) minimizes it.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Claim, Convention, GameRules, GameState, PropertyDetector, Role};
use crate::graph::{edge_index, edge_table, Edge, Graph};

/// Largest board the solver accepts.
pub const MAX_SOLVER_N: usize = 7;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

const NEVER: u32 = u32::MAX;
const UNCLAIMED: u64 = 0;
const HOLDER: u64 = 1;
const OTHER: u64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "t", rename_all = "lowercase")]
pub enum SolveValue {
    Exact(u32),
    Never,
    Unknown,
}

impl fmt::Display for SolveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveValue::Exact(t) => write!(f, "{t}"),
            SolveValue::Never => f.write_str("never"),
            SolveValue::Unknown => f.write_str("unknown"),
        }
    }
}

impl SolveValue {
    fn from_raw(v: u32) -> Self {
        if v == NEVER {
            SolveValue::Never
        } else {
            SolveValue::Exact(v)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: SolveValue,
    /// Positions expanded, memo hits excluded.
    pub nodes: u64,
    /// An optimal first move for the first mover, lowest index among ties.
    pub best_move: Option<Edge>,
}

struct OutOfBudget;

/// Search context for one board size and property.
struct Solver<'a> {
    n: usize,
    m: usize,
    property: &'a PropertyDetector,
    holder_maximizes: bool,
    first_mover: Role,
    edges: Vec<Edge>,
    /// Per vertex permutation, the image of every edge id.
    perms: Vec<Vec<u8>>,
    memo: HashMap<u64, u32>,
    holds_cache: HashMap<u32, bool>,
    nodes: u64,
    budget: u64,
}

impl<'a> Solver<'a> {
    fn new(rules: &'a GameRules, budget: u64, symmetry: bool) -> Result<Self> {
        let n = rules.n;
        if n < 2 {
            return Err(Error::BoardTooSmall(n));
        }
        if n > MAX_SOLVER_N {
            return Err(Error::SolverTooLarge { n, limit: MAX_SOLVER_N });
        }
        let edges = edge_table(n);
        let perms = if symmetry {
            permutations(n)
                .into_iter()
                .map(|p| {
                    edges
                        .iter()
                        .map(|e| edge_index(Edge::new(p[e.u], p[e.v]).expect("distinct"), n).expect("in range") as u8)
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        Ok(Self {
            n,
            m: edges.len(),
            property: &rules.property,
            holder_maximizes: rules.convention == Convention::AvoiderEnforcer,
            first_mover: rules.first_mover,
            edges,
            perms,
            memo: HashMap::new(),
            holds_cache: HashMap::new(),
            nodes: 0,
            budget,
        })
    }

    fn key(&self, code: u64) -> u64 {
        let mut best = code;
        for map in &self.perms {
            let mut image = 0u64;
            let mut rest = code;
            while rest != 0 {
                let bit = rest.trailing_zeros() as usize;
                let id = bit / 2;
                image |= ((code >> (2 * id)) & 3) << (2 * map[id] as usize);
                rest &= !(3u64 << (2 * id));
            }
            best = best.min(image);
        }
        best
    }

    fn holds(&mut self, mask: u32) -> bool {
        if let Some(&h) = self.holds_cache.get(&mask) {
            return h;
        }
        let mut g = Graph::empty(self.n);
        for id in (0..self.m).filter(|id| mask >> id & 1 == 1) {
            g.add_edge_unchecked(self.edges[id].u, self.edges[id].v);
        }
        let h = self.property.holds(&g);
        self.holds_cache.insert(mask, h);
        h
    }

    fn to_move(&self, holder_moves: u32, other_moves: u32) -> Role {
        let first = self.first_mover;
        let (f, s) = match first {
            Role::Avoider => (holder_moves, other_moves),
            Role::Enforcer => (other_moves, holder_moves),
        };
        if f == s {
            first
        } else {
            first.other()
        }
    }

    /// Value of a position in which the property does not yet hold.
    fn value(&mut self, code: u64, holder: u32, other: u32) -> std::result::Result<u32, OutOfBudget> {
        let (hm, om) = (holder.count_ones(), other.count_ones());
        if (hm + om) as usize == self.m {
            return Ok(NEVER);
        }
        let key = self.key(code);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let role = self.to_move(hm, om);
        let v = self.best_child(code, holder, other, role)?.0;
        self.memo.insert(key, v);
        Ok(v)
    }

    /// Best value for `role` to move and the lowest-index move attaining it.
    fn best_child(&mut self, code: u64, holder: u32, other: u32, role: Role) -> std::result::Result<(u32, usize), OutOfBudget> {
        let maximizing = (role == Role::Avoider) == self.holder_maximizes;
        let earliest = holder.count_ones() + 1;
        let (target, mut best) = if maximizing { (NEVER, 0) } else { (earliest, NEVER) };
        let mut best_id = usize::MAX;
        for id in 0..self.m {
            if (code >> (2 * id)) & 3 != UNCLAIMED {
                continue;
            }
            let v = if role == Role::Avoider {
                let next = holder | 1 << id;
                if self.holds(next) {
                    earliest
                } else {
                    self.value(code | HOLDER << (2 * id), next, other)?
                }
            } else {
                self.value(code | OTHER << (2 * id), holder, other | 1 << id)?
            };
            let better = best_id == usize::MAX || if maximizing { v > best } else { v < best };
            if better {
                best = v;
                best_id = id;
                if v == target {
                    break;
                }
            }
        }
        Ok((best, best_id))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    heap_permute(k - 1, p, out);
    for i in 0..k - 1 {
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
        heap_permute(k - 1, p, out);
    }
}

fn encode(state: &GameState) -> (u64, u32, u32) {
    let mut code = 0;
    let (mut holder, mut other) = (0u32, 0u32);
    for (id, c) in state.claims().iter().enumerate() {
        match c {
            Claim::Unclaimed => {}
            Claim::Avoider => {
                code |= HOLDER << (2 * id);
                holder |= 1 << id;
            }
            Claim::Enforcer => {
                code |= OTHER << (2 * id);
                other |= 1 << id;
            }
        }
    }
    (code, holder, other)
}

/// Game value from the empty board. A budget overrun yields [`SolveValue::Unknown`].
pub fn solve_tau(rules: &GameRules, budget: u64, symmetry: bool) -> Result<SolveResult> {
    let mut solver = Solver::new(rules, budget, symmetry)?;
    let first = rules.first_mover;
    match solver.best_child(0, 0, 0, first) {
        Ok((v, id)) => Ok(SolveResult {
            value: SolveValue::from_raw(v),
            nodes: solver.nodes,
            best_move: solver.edges.get(id).copied(),
        }),
        Err(OutOfBudget) => Ok(SolveResult {
            value: SolveValue::Unknown,
            nodes: solver.nodes,
            best_move: None,
        }),
    }
}

/// A move for `role` achieving the position's value, lowest edge index on ties.
///
/// The property must not already hold on the Avoider seat's graph.
pub fn best_move(state: &GameState, role: Role, budget: u64) -> Result<(Edge, SolveValue)> {
    let expected = state.to_move().ok_or(Error::BoardExhausted)?;
    if expected != role {
        let conv = state.rules().convention;
        return Err(Error::OutOfTurn {
            expected: conv.role_name(expected),
            found: conv.role_name(role),
        });
    }
    let mut solver = Solver::new(state.rules(), budget, true)?;
    let (code, holder, other) = encode(state);
    let (v, id) = solver
        .best_child(code, holder, other, role)
        .map_err(|_| Error::BudgetExhausted(budget))?;
    Ok((solver.edges[id], SolveValue::from_raw(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, turan_number, GraphFamily};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k3() -> PropertyDetector {
        PropertyDetector::Subgraph(GraphFamily::single(named_graph("K3").unwrap(), "K3"))
    }

    /// Plain minimax over `GameState` without memo, symmetry or cutoffs.
    fn oracle(state: &GameState, maximize_holder: bool) -> u32 {
        let Some(role) = state.to_move() else { return NEVER };
        let maximizing = (role == Role::Avoider) == maximize_holder;
        let values = state.unclaimed().collect::<Vec<_>>().into_iter().map(|e| {
            let next = state.with_move(role, e).unwrap();
            if role == Role::Avoider && state.rules().property.holds(next.avoider_graph()) {
                next.moves_by(Role::Avoider) as u32
            } else {
                oracle(&next, maximize_holder)
            }
        });
        if maximizing {
            values.max().unwrap()
        } else {
            values.min().unwrap()
        }
    }

    fn oracle_value(rules: &GameRules) -> SolveValue {
        let s = GameState::new(rules.clone()).unwrap();
        SolveValue::from_raw(oracle(&s, rules.convention == Convention::AvoiderEnforcer))
    }

    #[test]
    fn trivial_values() {
        for n in 2..=6 {
            let r = solve_tau(&GameRules::new(n, PropertyDetector::HasEdge), DEFAULT_NODE_BUDGET, true).unwrap();
            assert_eq!(r.value, SolveValue::Exact(1));
            assert_eq!(r.best_move, Some(Edge::new(0, 1).unwrap()));
        }
        let r = solve_tau(&GameRules::new(3, k3()), DEFAULT_NODE_BUDGET, true).unwrap();
        assert_eq!(r.value, SolveValue::Never);
    }

    #[test]
    fn errors_and_budget() {
        assert!(matches!(
            solve_tau(&GameRules::new(8, k3()), 10, true),
            Err(Error::SolverTooLarge { n: 8, limit: 7 })
        ));
        let r = solve_tau(&GameRules::new(6, k3()), 5, true).unwrap();
        assert_eq!(r.value, SolveValue::Unknown);
        assert!(r.nodes <= 6);
    }

    #[test]
    fn matches_oracle_small_boards() {
        let props = [PropertyDetector::HasEdge, k3(), PropertyDetector::NotKColorable(2)];
        for n in 3..=4 {
            for p in &props {
                for first in [Role::Avoider, Role::Enforcer] {
                    for conv in [Convention::AvoiderEnforcer, Convention::MakerBreaker] {
                        let rules = GameRules::new(n, p.clone()).with_first_mover(first).with_convention(conv);
                        let expected = oracle_value(&rules);
                        for symmetry in [false, true] {
                            let got = solve_tau(&rules, DEFAULT_NODE_BUDGET, symmetry).unwrap().value;
                            assert_eq!(got, expected, "n={n} {p} {first:?} {conv} sym={symmetry}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn permutations_are_complete() {
        let mut ps = permutations(4);
        assert_eq!(ps.len(), 24);
        ps.sort();
        ps.dedup();
        assert_eq!(ps.len(), 24);
    }

    #[test]
    fn canonical_keys_are_permutation_invariant() {
        let rules = GameRules::new(7, k3());
        let solver = Solver::new(&rules, 1, true).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(2..=7);
            let rules = GameRules::new(n, PropertyDetector::HasEdge);
            let local = Solver::new(&rules, 1, true).unwrap();
            let m = local.m;
            let code: u64 = (0..m).map(|id| rng.gen_range(0..3u64) << (2 * id)).sum();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let mut image = 0u64;
            for (id, e) in local.edges.iter().enumerate() {
                let to = edge_index(Edge::new(perm[e.u], perm[e.v]).unwrap(), n).unwrap();
                image |= ((code >> (2 * id)) & 3) << (2 * to);
            }
            assert_eq!(local.key(code), local.key(image));
            assert!(local.key(code) <= code);
        }
        assert_eq!(solver.perms.len(), 5040);
    }

    #[test]
    fn best_move_examples() {
        // one unclaimed edge
        let mut s = GameState::new(GameRules::new(3, k3())).unwrap();
        for (role, (u, v)) in [(Role::Avoider, (0, 1)), (Role::Enforcer, (0, 2))] {
            s.apply_move(role, Edge::new(u, v).unwrap()).unwrap();
        }
        assert_eq!(best_move(&s, Role::Avoider, 1000).unwrap().0, Edge::new(1, 2).unwrap());
        // Avoider holds (0,1),(0,2) on n=4; (1,2) closes a triangle, (3, x) edges do not
        let mut s = GameState::new(GameRules::new(4, k3())).unwrap();
        for (role, (u, v)) in [
            (Role::Avoider, (0, 1)),
            (Role::Enforcer, (0, 3)),
            (Role::Avoider, (0, 2)),
            (Role::Enforcer, (1, 3)),
        ] {
            s.apply_move(role, Edge::new(u, v).unwrap()).unwrap();
        }
        assert_eq!(best_move(&s, Role::Avoider, 1000).unwrap().0, Edge::new(2, 3).unwrap());
        assert!(best_move(&s, Role::Enforcer, 1000).is_err());
    }

    #[test]
    fn best_move_on_fresh_board_matches_oracle() {
        let rules = GameRules::new(4, k3());
        let s = GameState::new(rules.clone()).unwrap();
        let (mv, v) = best_move(&s, Role::Avoider, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(v, oracle_value(&rules));
        let after = s.with_move(Role::Avoider, mv).unwrap();
        let continued = oracle(&after, true);
        assert_eq!(SolveValue::from_raw(continued), v);
    }

    /// Both seats follow `best_move`; the hit lands exactly at the solved round.
    #[test]
    fn self_play_realizes_the_value() {
        for n in 3..=5 {
            for p in [PropertyDetector::HasEdge, k3(), PropertyDetector::NotKColorable(2)] {
                let rules = GameRules::new(n, p.clone());
                let solved = solve_tau(&rules, DEFAULT_NODE_BUDGET, true).unwrap().value;
                let mut s = GameState::new(rules).unwrap();
                let mut hit = SolveValue::Never;
                while let Some(role) = s.to_move() {
                    let (mv, _) = best_move(&s, role, DEFAULT_NODE_BUDGET).unwrap();
                    s.apply_move(role, mv).unwrap();
                    if role == Role::Avoider && p.holds(s.avoider_graph()) {
                        hit = SolveValue::Exact(s.moves_by(Role::Avoider) as u32);
                        break;
                    }
                }
                assert_eq!(hit, solved, "n={n} {p}");
            }
        }
    }

    #[test]
    fn triangle_values_respect_the_turan_lower_bound() {
        for n in 3..=6u64 {
            let r = solve_tau(&GameRules::new(n as usize, k3()), DEFAULT_NODE_BUDGET, true).unwrap();
            let lower = turan_number(n, 2).unwrap() / 2;
            match r.value {
                SolveValue::Exact(t) => assert!(t as u64 > lower, "n={n}: {t} <= {lower}"),
                SolveValue::Never => {}
                SolveValue::Unknown => panic!("budget"),
            }
        }
    }
}

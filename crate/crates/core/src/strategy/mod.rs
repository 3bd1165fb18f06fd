//! Move-selection policies.

mod monitor;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::{GameState, Role};
use crate::graph::Edge;
use crate::Rational;

pub use monitor::{jumble_monitor, MonitorReport, DEFAULT_MONITOR_PAIRS};

/// A player. Called only when the state has at least one unclaimed edge and it is `role`'s turn.
pub trait Strategy: Send {
    fn next_move(&mut self, state: &GameState, role: Role) -> Option<Edge>;

    /// Descriptor in the `turan:<parts>` / `jumbleg:<eps>` / `random:<seed>` / `first` language.
    fn descriptor(&self) -> String;

    /// Whether the last returned move came from a fallback phase.
    fn last_move_was_fallback(&self) -> bool {
        false
    }
}

/// Lowest-indexed unclaimed edge.
#[derive(Clone, Copy, Debug, Default)]
pub struct FirstAvailable;

impl Strategy for FirstAvailable {
    fn next_move(&mut self, state: &GameState, _role: Role) -> Option<Edge> {
        state.kth_unclaimed(0)
    }

    fn descriptor(&self) -> String {
        "first".into()
    }
}

/// Uniform choice among unclaimed edges from a seeded stream.
#[derive(Clone, Debug)]
pub struct RandomStrategy {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomStrategy {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Strategy for RandomStrategy {
    fn next_move(&mut self, state: &GameState, _role: Role) -> Option<Edge> {
        let count = state.unclaimed_count();
        if count == 0 {
            return None;
        }
        state.kth_unclaimed(self.rng.gen_range(0..count))
    }

    fn descriptor(&self) -> String {
        format!("random:{}", self.seed)
    }
}

/// Splits the vertices round-robin into `parts` clusters and claims cross-cluster
/// edges in index order; once none are left, falls back to the lowest unclaimed edge.
#[derive(Clone, Debug)]
pub struct AvoiderTuran {
    parts: usize,
    fallback: bool,
}

impl AvoiderTuran {
    pub fn new(parts: usize) -> Result<Self> {
        if parts == 0 {
            return Err(Error::InvalidK { k: 0, min: 1 });
        }
        Ok(Self { parts, fallback: false })
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    fn cross_edge(&self, state: &GameState) -> Option<Edge> {
        let p = self.parts;
        (0..state.n()).find_map(|u| {
            state
                .free_row(u)
                .iter()
                .find(|&v| v > u && v % p != u % p)
                .map(|v| Edge { u, v })
        })
    }
}

impl Strategy for AvoiderTuran {
    fn next_move(&mut self, state: &GameState, _role: Role) -> Option<Edge> {
        match self.cross_edge(state) {
            Some(e) => {
                self.fallback = false;
                Some(e)
            }
            None => {
                self.fallback = true;
                state.kth_unclaimed(0)
            }
        }
    }

    fn descriptor(&self) -> String {
        format!("turan:{}", self.parts)
    }

    fn last_move_was_fallback(&self) -> bool {
        self.fallback
    }
}

/// Discrepancy-greedy heuristic: claims the unclaimed edge maximizing
/// `b(u) + b(v)` with `b = d_Avoider - d_Enforcer`, lowest index on ties.
///
/// `eps` only labels the strategy and the monitor it is evaluated with; the rule
/// itself does not depend on it.
#[derive(Clone, Debug)]
pub struct EnforcerJumbleG {
    eps: Rational,
    label: String,
}

impl EnforcerJumbleG {
    pub fn new(eps: Rational, label: impl Into<String>) -> Result<Self> {
        if eps <= Rational::from_integer(0) || eps >= Rational::new(1, 2) {
            return Err(Error::InvalidParameter(format!("jumbleg eps must lie in (0, 1/2), got {eps}")));
        }
        Ok(Self { eps, label: label.into() })
    }

    pub fn eps(&self) -> Rational {
        self.eps
    }
}

impl Strategy for EnforcerJumbleG {
    fn next_move(&mut self, state: &GameState, _role: Role) -> Option<Edge> {
        let n = state.n();
        let a = state.avoider_graph();
        let e = state.enforcer_graph();
        let b: Vec<i64> = (0..n).map(|v| a.degree(v) as i64 - e.degree(v) as i64).collect();
        let mut best: Option<(i64, Edge)> = None;
        for u in 0..n {
            for v in state.free_row(u).iter().filter(|&v| v > u) {
                let key = b[u] + b[v];
                if best.is_none_or(|(k, _)| key > k) {
                    best = Some((key, Edge { u, v }));
                }
            }
        }
        best.map(|(_, e)| e)
    }

    fn descriptor(&self) -> String {
        format!("jumbleg:{}", self.label)
    }
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::game::GameState;
use crate::regularity::{jumbleg_margin, random_disjoint_pair};
use crate::Scalar;

pub const DEFAULT_MONITOR_PAIRS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MonitorReport {
    pub pairs: usize,
    pub violations: usize,
}

impl MonitorReport {
    pub fn fraction(&self) -> f64 {
        if self.pairs == 0 {
            0.0
        } else {
            self.violations as f64 / self.pairs as f64
        }
    }
}

/// Samples disjoint `(S, T)` and counts violations of
/// `e_Avoider(S,T) - e_Enforcer(S,T) <= 2 eps |S||T| + 1`.
///
/// `|S|` and `|T|` are drawn independently and uniformly from
/// `[max(ceil(eps n), 1), floor(n / 2)]`.
pub fn jumble_monitor<T: Scalar>(state: &GameState, eps: &T, pairs: usize, seed: u64) -> MonitorReport {
    let n = state.n();
    let hi = n / 2;
    let scaled = eps.clone() * T::from_count(n as u64);
    let lo = ((-(-scaled).floor_int()).max(1) as usize).min(hi.max(1));
    if hi == 0 {
        return MonitorReport { pairs: 0, violations: 0 };
    }
    let pool: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = state.avoider_graph();
    let e = state.enforcer_graph();
    let mut violations = 0;
    for _ in 0..pairs {
        let s_size = rng.gen_range(lo..=hi);
        let t_size = rng.gen_range(lo..=hi);
        let (s, t) = random_disjoint_pair(&mut rng, &pool, n, s_size, t_size);
        let e_b = a.edges_between(&s, &t).expect("same universe") as u64;
        let e_m = e.edges_between(&s, &t).expect("same universe") as u64;
        if !jumbleg_margin(e_b, e_m, s_size as u64, t_size as u64, eps).ok {
            violations += 1;
        }
    }
    MonitorReport { pairs, violations }
}

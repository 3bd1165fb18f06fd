//! Unbiased pairs and the two conditions of an ε-regular (pseudo-random) graph.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{RegularityReport, SearchMode, WorstFraction};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Scalar;

/// Largest order accepted by [`check_p2`] in exact mode.
pub const DEFAULT_P2_EXACT_LIMIT: usize = 16;

/// Whether `|e(S,T)/(|S||T|) - 1/2| <= eps`, together with that deviation.
pub fn is_unbiased<T: Scalar>(g: &Graph, s: &VertexSet, t: &VertexSet, eps: &T) -> Result<(bool, T)> {
    if s.is_empty() || t.is_empty() {
        return Err(Error::EmptySet);
    }
    let e = g.edges_between(s, t)?;
    let dev = half_deviation::<T>(e, s.len() * t.len());
    Ok((dev <= *eps, dev))
}

fn half_deviation<T: Scalar>(edges: usize, cells: usize) -> T {
    let (num, den) = half_deviation_parts(edges, cells);
    T::from_ratio(num as i64, den as i64)
}

/// `|e/c - 1/2|` as the integer fraction `|2e - c| / 2c`.
#[inline]
fn half_deviation_parts(edges: usize, cells: usize) -> (u128, u128) {
    ((2 * edges).abs_diff(cells) as u128, 2 * cells as u128)
}

/// Minimum-degree condition `delta(G) >= (1/2 - eps) n`; also returns `delta(G)`.
pub fn check_p1<T: Scalar>(g: &Graph, eps: &T) -> (bool, usize) {
    let min_degree = g.min_degree();
    let need = (T::from_ratio(1, 2) - eps.clone()) * T::from_count(g.order() as u64);
    (T::from_count(min_degree as u64) >= need, min_degree)
}

/// Every disjoint pair with `|S|, |T| > eps n` is `eps`-unbiased.
pub fn check_p2<T: Scalar>(g: &Graph, eps: &T, mode: SearchMode) -> Result<RegularityReport<T>> {
    check_p2_limited(g, eps, mode, DEFAULT_P2_EXACT_LIMIT)
}

pub fn check_p2_limited<T: Scalar>(
    g: &Graph,
    eps: &T,
    mode: SearchMode,
    exact_limit: usize,
) -> Result<RegularityReport<T>> {
    let n = g.order();
    let min_size = eps.min_size_above(n);
    let (worst, samples) = match mode {
        SearchMode::Exact => {
            if n > exact_limit || n > 30 {
                return Err(Error::ExactLimitExceeded {
                    size: n,
                    limit: exact_limit.min(30),
                });
            }
            p2_exact(g, min_size)
        }
        SearchMode::Sampled { trials, seed } => {
            if trials == 0 {
                return Err(Error::NoTrials);
            }
            p2_sampled(g, min_size, trials, seed)
        }
    };
    let deviation: T = worst.value();
    let passed = samples == 0 || deviation <= *eps;
    Ok(RegularityReport {
        passed,
        deviation,
        witness: if passed { None } else { worst.into_witness() },
        mode: mode.into(),
        samples,
    })
}

/// For each `S`, the extreme values of `e(S, T)` over `|T| = t` come from the
/// `t` vertices of largest and smallest degree into `S`.
fn p2_exact(g: &Graph, min_size: usize) -> (WorstFraction, u64) {
    let n = g.order();
    let mut worst = WorstFraction::new();
    let mut samples = 0u64;
    if min_size == 0 || 2 * min_size > n {
        return (worst, 0);
    }
    let row_masks: Vec<u64> = (0..n).map(|v| g.neighbors(v).words()[0]).collect();
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(n);
    for mask in 0u64..(1u64 << n) {
        let s_len = mask.count_ones() as usize;
        if s_len < min_size || n - s_len < min_size {
            continue;
        }
        order.clear();
        for (v, row) in row_masks.iter().enumerate() {
            if mask >> v & 1 == 0 {
                order.push(((row & mask).count_ones() as usize, v));
            }
        }
        order.sort_unstable_by(|a, b| b.cmp(a));
        let rest = order.len();
        let mut top = 0;
        let mut bottom = 0;
        for t in 1..=rest {
            top += order[t - 1].0;
            bottom += order[rest - t].0;
            if t < min_size {
                continue;
            }
            samples += binomial(rest as u64, t as u64);
            let cells = s_len * t;
            for (edges, from_top) in [(top, true), (bottom, false)] {
                let (num, den) = half_deviation_parts(edges, cells);
                worst.offer(num, den, || {
                    let s = VertexSet::from_mask(n, mask);
                    let picks = if from_top { &order[..t] } else { &order[rest - t..] };
                    let tset = VertexSet::from_iter(n, picks.iter().map(|&(_, v)| v)).expect("in range");
                    (s, tset)
                });
            }
        }
    }
    (worst, samples)
}

fn p2_sampled(g: &Graph, min_size: usize, trials: u64, seed: u64) -> (WorstFraction, u64) {
    let n = g.order();
    let mut worst = WorstFraction::new();
    if min_size == 0 || 2 * min_size > n {
        return (worst, 0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<usize> = (0..n).collect();
    for _ in 0..trials {
        let (s, t) = random_disjoint_pair(&mut rng, &pool, n, min_size, min_size);
        let e = g.edges_between_unchecked(&s, &t);
        let (num, den) = half_deviation_parts(e, min_size * min_size);
        worst.offer(num, den, || (s.clone(), t.clone()));
    }
    (worst, trials)
}

/// Two disjoint uniformly random subsets of `pool` with the given sizes.
pub(crate) fn random_disjoint_pair(
    rng: &mut ChaCha8Rng,
    pool: &[usize],
    universe: usize,
    a: usize,
    b: usize,
) -> (VertexSet, VertexSet) {
    let picks = index::sample(rng, pool.len(), a + b);
    let mut s = VertexSet::new(universe);
    let mut t = VertexSet::new(universe);
    for (i, p) in picks.iter().enumerate() {
        if i < a {
            s.insert(pool[p]);
        } else {
            t.insert(pool[p]);
        }
    }
    (s, t)
}

/// Uniformly random subset of `pool` of the given size.
pub(crate) fn random_subset(rng: &mut ChaCha8Rng, pool: &[usize], universe: usize, size: usize) -> VertexSet {
    random_disjoint_pair(rng, pool, universe, size, 0).0
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Margin `e_B - e_M` against the bound `2 eps |S||T| + 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JumbleMargin<T> {
    pub margin: i64,
    pub bound: T,
    pub ok: bool,
}

pub fn jumbleg_margin<T: Scalar>(e_b: u64, e_m: u64, s_size: u64, t_size: u64, eps: &T) -> JumbleMargin<T> {
    let margin = e_b as i64 - e_m as i64;
    let bound = T::from_ratio(2, 1) * eps.clone() * T::from_count(s_size * t_size) + T::one();
    let ok = T::from_ratio(margin, 1) <= bound;
    JumbleMargin { margin, bound, ok }
}

//! α-regular pairs and the slicing bound.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::unbiased::{binomial, random_subset};
use super::{ModeKind, RegularityReport, SearchMode, WorstFraction};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Scalar;

/// Largest `|A| + |B|` accepted by [`is_regular_pair`] in exact mode.
pub const DEFAULT_PAIR_EXACT_LIMIT: usize = 24;

/// Whether `|d(A,B) - d(X,Y)| < alpha` for all `X ⊆ A`, `Y ⊆ B` with
/// `|X| > alpha |A|` and `|Y| > alpha |B|`.
pub fn is_regular_pair<T: Scalar>(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    alpha: &T,
    mode: SearchMode,
) -> Result<RegularityReport<T>> {
    is_regular_pair_limited(g, a, b, alpha, mode, DEFAULT_PAIR_EXACT_LIMIT)
}

pub fn is_regular_pair_limited<T: Scalar>(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    alpha: &T,
    mode: SearchMode,
    exact_limit: usize,
) -> Result<RegularityReport<T>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let e_ab = g.edges_between(a, b)?;
    let pair = PairCounts {
        g,
        e_ab,
        cells_ab: a.len() * b.len(),
    };
    let x_min = alpha.min_size_above(a.len());
    let y_min = alpha.min_size_above(b.len());
    let (worst, samples) = match mode {
        SearchMode::Exact => {
            let size = a.len() + b.len();
            // the smaller side is enumerated, so cap it for the u64 masks
            if size > exact_limit || a.len().min(b.len()) > 30 {
                return Err(Error::ExactLimitExceeded { size, limit: exact_limit });
            }
            if a.len() <= b.len() {
                pair.exact(a, b, x_min, y_min, false)
            } else {
                pair.exact(b, a, y_min, x_min, true)
            }
        }
        SearchMode::Sampled { trials, seed } => {
            if trials == 0 {
                return Err(Error::NoTrials);
            }
            pair.sampled(a, b, x_min, y_min, trials, seed)
        }
    };
    let deviation: T = worst.value();
    let passed = samples == 0 || deviation < *alpha;
    Ok(RegularityReport {
        passed,
        deviation,
        witness: if passed { None } else { worst.into_witness() },
        mode: ModeKind::from(mode),
        samples,
    })
}

struct PairCounts<'a> {
    g: &'a Graph,
    e_ab: usize,
    cells_ab: usize,
}

impl PairCounts<'_> {
    /// `|e_ab / cells_ab - e / cells|` as an integer fraction.
    #[inline]
    fn deviation(&self, e: usize, cells: usize) -> (u128, u128) {
        let lhs = self.e_ab as u128 * cells as u128;
        let rhs = e as u128 * self.cells_ab as u128;
        (lhs.abs_diff(rhs), self.cells_ab as u128 * cells as u128)
    }

    /// Enumerates subsets of `small`; for each, the extreme sub-pair counts over
    /// `|Y| = y` come from the `y` vertices of `large` with most and fewest
    /// neighbours in the subset.
    fn exact(
        &self,
        small: &VertexSet,
        large: &VertexSet,
        small_min: usize,
        large_min: usize,
        swapped: bool,
    ) -> (WorstFraction, u64) {
        let n = self.g.order();
        let mut worst = WorstFraction::new();
        let mut samples = 0u64;
        if small_min > small.len() || large_min > large.len() {
            return (worst, 0);
        }
        let small_v = small.to_vec();
        let large_v = large.to_vec();
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(large_v.len());
        for mask in 0u64..(1u64 << small_v.len()) {
            let x_len = mask.count_ones() as usize;
            if x_len < small_min.max(1) {
                continue;
            }
            let mut x = VertexSet::new(n);
            for (i, &v) in small_v.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x.insert(v);
                }
            }
            order.clear();
            order.extend(large_v.iter().map(|&w| (self.g.neighbors(w).intersection_len(&x), w)));
            order.sort_unstable_by(|p, q| q.cmp(p));
            let rest = order.len();
            let (mut top, mut bottom) = (0, 0);
            for y in 1..=rest {
                top += order[y - 1].0;
                bottom += order[rest - y].0;
                if y < large_min.max(1) {
                    continue;
                }
                samples += binomial(rest as u64, y as u64);
                for (edges, from_top) in [(top, true), (bottom, false)] {
                    let (num, den) = self.deviation(edges, x_len * y);
                    worst.offer(num, den, || {
                        let picks = if from_top { &order[..y] } else { &order[rest - y..] };
                        let yset = VertexSet::from_iter(n, picks.iter().map(|&(_, w)| w)).expect("in range");
                        if swapped {
                            (yset, x.clone())
                        } else {
                            (x.clone(), yset)
                        }
                    });
                }
            }
        }
        (worst, samples)
    }

    fn sampled(
        &self,
        a: &VertexSet,
        b: &VertexSet,
        x_min: usize,
        y_min: usize,
        trials: u64,
        seed: u64,
    ) -> (WorstFraction, u64) {
        let n = self.g.order();
        let mut worst = WorstFraction::new();
        if x_min > a.len() || y_min > b.len() {
            return (worst, 0);
        }
        let (x_min, y_min) = (x_min.max(1), y_min.max(1));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a_v = a.to_vec();
        let b_v = b.to_vec();
        for _ in 0..trials {
            let x = random_subset(&mut rng, &a_v, n, x_min);
            let y = random_subset(&mut rng, &b_v, n, y_min);
            let e = self.g.edges_between_unchecked(&x, &y);
            let (num, den) = self.deviation(e, x_min * y_min);
            worst.offer(num, den, || (x.clone(), y.clone()));
        }
        (worst, trials)
    }
}

/// `max{2 alpha, (L0/Li) alpha, (L0/Lj) alpha}`.
pub fn slicing_alpha<T: Scalar>(alpha: &T, l0: usize, li: usize, lj: usize) -> Result<T> {
    if l0 == 0 || li == 0 || lj == 0 {
        return Err(Error::InvalidParameter("slice sizes must be positive".into()));
    }
    for slice in [li, lj] {
        if slice > l0 {
            return Err(Error::SliceTooLarge { slice, source_size: l0 });
        }
    }
    let two = T::from_ratio(2, 1) * alpha.clone();
    let wide_i = T::from_ratio(l0 as i64, li as i64) * alpha.clone();
    let wide_j = T::from_ratio(l0 as i64, lj as i64) * alpha.clone();
    let mut best = two;
    for c in [wide_i, wide_j] {
        if c > best {
            best = c;
        }
    }
    Ok(best)
}

/// Result of drawing random slices from a verified α-regular pair.
#[derive(Clone, Debug, PartialEq)]
pub struct SlicingCheck<T> {
    pub alpha_prime: T,
    /// Density of the source pair.
    pub density: T,
    pub slices: u64,
    pub violations: u64,
    /// First slice that was not `alpha'`-regular or whose density left `(d - alpha, d + alpha)`.
    pub first_violation: Option<(VertexSet, VertexSet)>,
}

/// Draws `trials` slices of sizes `li`, `lj` from the α-regular pair `(A, B)`
/// with `|A| = |B| = L0` and checks each against the slicing conclusion exactly.
///
/// Slices must satisfy `alpha L0 < li, lj <= L0`; smaller slices are not
/// constrained by the source pair's regularity.
#[allow(clippy::too_many_arguments)]
pub fn verify_slicing<T: Scalar>(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    alpha: &T,
    li: usize,
    lj: usize,
    trials: u64,
    seed: u64,
) -> Result<SlicingCheck<T>> {
    let l0 = a.len();
    if b.len() != l0 {
        return Err(Error::InvalidParameter(format!(
            "source parts must have equal sizes, got {} and {}",
            l0,
            b.len()
        )));
    }
    let alpha_prime = slicing_alpha(alpha, l0, li, lj)?;
    let min_slice = alpha.min_size_above(l0);
    for slice in [li, lj] {
        if slice < min_slice {
            return Err(Error::SliceTooSmall { slice, source_size: l0 });
        }
    }
    let source = is_regular_pair(g, a, b, alpha, SearchMode::Exact)?;
    if !source.passed {
        return Err(Error::InvalidParameter("source pair is not alpha-regular".into()));
    }
    let density: T = g.density(a, b)?;
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a_v, b_v) = (a.to_vec(), b.to_vec());
    let mut violations = 0;
    let mut first_violation = None;
    for _ in 0..trials {
        let x = random_subset(&mut rng, &a_v, n, li);
        let y = random_subset(&mut rng, &b_v, n, lj);
        let report = is_regular_pair(g, &x, &y, &alpha_prime, SearchMode::Exact)?;
        let d: T = g.density(&x, &y)?;
        let near = (d.clone() - density.clone()).abs() < *alpha;
        if !(report.passed && near) {
            violations += 1;
            first_violation.get_or_insert((x, y));
        }
    }
    Ok(SlicingCheck {
        alpha_prime,
        density,
        slices: trials,
        violations,
        first_violation,
    })
}

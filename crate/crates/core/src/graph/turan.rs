//! Turán numbers, Turán graphs and the hitting-time bound formulas built on them.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::Rational;

/// `t(n, k)`: the maximum number of edges of an `n`-vertex graph without `K_{k+1}`.
///
/// Evaluated from the closed form
/// `((k-1)/k) n^2/2 - (k/2)(ceil(n/k) - n/k)(n/k - floor(n/k))`.
pub fn turan_number(n: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidK { k: 0, min: 1 });
    }
    let nn = Rational::from_integer(n as i128);
    let kk = Rational::from_integer(k as i128);
    let ratio = nn / kk;
    let main = (kk - 1) / kk * nn * nn / 2;
    let correction = kk / 2 * (ratio.ceil() - ratio) * (ratio - ratio.floor());
    let t = main - correction;
    debug_assert!(t.is_integer());
    Ok(t.to_integer() as u64)
}

/// Complete `k`-partite graph with vertex `i` in part `i mod k`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidK { k: 0, min: 1 });
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if u % k != v % k {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    Ok(g)
}

/// Which game the bound pair refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundVariant {
    /// Subgraph / induced-subgraph containment of a family with minimum chromatic number `k`.
    Family,
    /// Avoider's graph is not `k`-colourable.
    Nc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBounds {
    /// Exact floor of half the relevant Turán number.
    pub lower: u64,
    /// Leading `n^2` term of the upper bound, without the `o(n^2)` slack.
    pub upper_main: Rational,
}

/// Lower bound and leading upper-bound term for `tau_E`.
///
/// Family variant (needs `k >= 3`): `floor(t(n, k-1) / 2)` and `(k-2)/(k-1) n^2/4`.
/// NC variant (needs `k >= 1`): `floor(t(n, k) / 2)` and `(k-1)/k n^2/4`.
pub fn theorem_bounds(n: u64, k: u64, variant: BoundVariant) -> Result<TheoremBounds> {
    let k_eff = match variant {
        BoundVariant::Family => {
            if k < 3 {
                return Err(Error::InvalidK { k: k as usize, min: 3 });
            }
            k - 1
        }
        BoundVariant::Nc => {
            if k < 1 {
                return Err(Error::InvalidK { k: 0, min: 1 });
            }
            k
        }
    };
    Ok(raw_bounds(n, k_eff))
}

/// Bounds in terms of the Turán index directly (`k - 1` for families, `k` for NC).
pub(crate) fn raw_bounds(n: u64, turan_k: u64) -> TheoremBounds {
    let lower = turan_number(n, turan_k).expect("turan_k >= 1") / 2;
    let nn = Rational::from_integer(n as i128);
    let kk = Rational::from_integer(turan_k as i128);
    let upper_main = (kk - 1) / kk * nn * nn / 4;
    TheoremBounds { lower, upper_main }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{contains_subgraph, is_k_colorable};

    /// Largest edge count over all triangle-free graphs on `n` vertices.
    fn brute_triangle_free_max(n: usize) -> usize {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let g = Graph::from_edges(
                n,
                edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
            )
            .unwrap();
            if g.edge_count() > best && contains_subgraph(&g, &Graph::complete(3)).is_none() {
                best = g.edge_count();
            }
        }
        best
    }

    /// Maximum of the complete k-partite edge count over all part-size vectors.
    fn best_partition(n: usize, k: usize) -> usize {
        fn rec(left: usize, parts: usize, acc: &mut Vec<usize>, best: &mut usize) {
            if parts == 1 {
                acc.push(left);
                let total: usize = acc.iter().sum();
                let inside: usize = acc.iter().map(|s| s * s).sum();
                *best = (*best).max((total * total - inside) / 2);
                acc.pop();
                return;
            }
            for s in 0..=left {
                acc.push(s);
                rec(left - s, parts - 1, acc, best);
                acc.pop();
            }
        }
        let mut best = 0;
        rec(n, k, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn closed_form_examples() {
        for n in 0..20 {
            assert_eq!(turan_number(n, 1).unwrap(), 0);
        }
        assert_eq!(brute_triangle_free_max(5), 6);
        assert_eq!(turan_number(5, 2).unwrap(), 6);
        assert_eq!(best_partition(6, 3), 12);
        assert_eq!(turan_number(6, 3).unwrap(), 12);
        assert_eq!(turan_number(4, 2).unwrap(), 4);
        assert_eq!(turan_number(6, 2).unwrap(), 9);
        assert_eq!(turan_number(10, 2).unwrap(), 25);
        assert_eq!(turan_number(40, 2).unwrap(), 400);
        assert!(turan_number(5, 0).is_err());
    }

    #[test]
    fn closed_form_matches_partition_maximum() {
        for n in 0..=14 {
            for k in 1..=5 {
                assert_eq!(turan_number(n as u64, k as u64).unwrap() as usize, best_partition(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sandwich_at_n_100() {
        let t = Rational::from_integer(turan_number(100, 3).unwrap() as i128);
        let main = Rational::new(2, 3) * Rational::from_integer(10_000) / 2;
        assert!(t <= main);
        assert!(t >= main - Rational::new(3, 8));
    }

    #[test]
    fn turan_graph_properties() {
        assert_eq!(turan_graph(4, 2).unwrap().edge_count(), 4);
        assert_eq!(turan_graph(5, 2).unwrap().edge_count(), 6);
        assert_eq!(turan_graph(6, 3).unwrap().edge_count(), 12);
        assert!(turan_graph(3, 0).is_err());
        for n in 0..=30 {
            for k in 1..=6 {
                let g = turan_graph(n, k).unwrap();
                assert_eq!(g.edge_count() as u64, turan_number(n as u64, k as u64).unwrap());
                assert!(contains_subgraph(&g, &Graph::complete(k + 1)).is_none());
                if k <= 5 {
                    assert!(is_k_colorable(&g, k).is_some());
                }
            }
        }
    }

    #[test]
    fn bound_examples() {
        let b = theorem_bounds(100, 3, BoundVariant::Family).unwrap();
        assert_eq!(b.lower, 1250);
        assert_eq!(b.upper_main, Rational::from_integer(1250));
        assert_eq!(theorem_bounds(4, 3, BoundVariant::Family).unwrap().lower, 2);
        assert_eq!(theorem_bounds(40, 3, BoundVariant::Family).unwrap().lower, 200);
        let nc1 = theorem_bounds(50, 1, BoundVariant::Nc).unwrap();
        assert_eq!(nc1.lower, 0);
        assert_eq!(nc1.upper_main, Rational::from_integer(0));
        let nc2 = theorem_bounds(100, 2, BoundVariant::Nc).unwrap();
        assert_eq!((nc2.lower, nc2.upper_main), (1250, Rational::from_integer(1250)));
        assert!(theorem_bounds(10, 2, BoundVariant::Family).is_err());
        assert!(theorem_bounds(10, 0, BoundVariant::Nc).is_err());
    }
}

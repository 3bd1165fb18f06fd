//! Lower bound on the cross-cluster edges kept by a regularity partition.

use serde::Serialize;

use super::Equipartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Scalar;

/// Hypotheses and both sides of `e(U) >= e(U~) >= e(G) l^2 L^2 / n^2 - 3 E l^2 L^2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityLemmaCheck<T> {
    /// Number of clusters `l`.
    pub clusters: usize,
    /// Common size `L` of the inner sets.
    pub inner_size: usize,
    /// Pairs `i < j` with `|d(V_i,V_j) - d(U_i,U_j)| >= E`.
    pub deviant_pairs: usize,
    /// Deviant pairs number at most `E * C(l, 2)`.
    pub deviant_ok: bool,
    /// `l >= 1/E`.
    pub cluster_count_ok: bool,
    /// `l / n <= E / 2`.
    pub order_ok: bool,
    pub hypotheses_ok: bool,
    /// `e(U)`: edges induced on the union of the inner sets.
    pub inner_edges: usize,
    /// `e(U~)`: edges of `U` between different inner sets.
    pub lhs: usize,
    pub rhs: T,
    pub conclusion_ok: bool,
}

pub fn check_density_lemma<T: Scalar>(
    g: &Graph,
    outer: &Equipartition,
    inner: &[VertexSet],
    e: &T,
) -> Result<DensityLemmaCheck<T>> {
    let n = g.order();
    if *outer.ground() != VertexSet::full(n) {
        return Err(Error::MalformedPartition("outer partition must cover V(G)".into()));
    }
    let l = outer.len();
    if inner.len() != l {
        return Err(Error::PartCount {
            expected: l,
            found: inner.len(),
        });
    }
    let inner_size = inner.first().map_or(0, VertexSet::len);
    for (i, (u, v)) in inner.iter().zip(outer.parts()).enumerate() {
        if u.universe() != n || !u.is_subset(v) {
            return Err(Error::MalformedPartition(format!("U_{i} is not contained in V_{i}")));
        }
        if u.len() != inner_size || inner_size == 0 {
            return Err(Error::MalformedPartition("inner sets must share one positive size".into()));
        }
    }

    let mut deviant_pairs = 0;
    let mut lhs = 0;
    for i in 0..l {
        for j in i + 1..l {
            let dv: T = g.density(&outer.parts()[i], &outer.parts()[j])?;
            let cross = g.edges_between(&inner[i], &inner[j])?;
            lhs += cross;
            let du = T::from_ratio(cross as i64, (inner_size * inner_size) as i64);
            if (dv - du).abs() >= *e {
                deviant_pairs += 1;
            }
        }
    }
    let pairs = (l * l.saturating_sub(1) / 2) as u64;
    let deviant_ok = T::from_count(deviant_pairs as u64) <= e.clone() * T::from_count(pairs);
    let cluster_count_ok = e.clone() * T::from_count(l as u64) >= T::one();
    let order_ok = T::from_ratio(l as i64, n.max(1) as i64) <= e.clone() / T::from_ratio(2, 1);

    let mut union = VertexSet::new(n);
    for u in inner {
        union.union_with(u);
    }
    let inner_edges = g.edges_within(&union);
    let scale = (l * l * inner_size * inner_size) as i64;
    let rhs = T::from_ratio(g.edge_count() as i64 * scale, (n * n).max(1) as i64)
        - T::from_ratio(3, 1) * e.clone() * T::from_ratio(scale, 1);
    let conclusion_ok = inner_edges >= lhs && T::from_count(lhs as u64) >= rhs;

    Ok(DensityLemmaCheck {
        clusters: l,
        inner_size,
        deviant_pairs,
        deviant_ok,
        cluster_count_ok,
        order_ok,
        hypotheses_ok: deviant_ok && cluster_count_ok && order_ok,
        inner_edges,
        lhs,
        rhs,
        conclusion_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn empty_graph_has_negative_rhs() {
        let outer = Equipartition::round_robin(16, 4).unwrap();
        let inner: Vec<VertexSet> = outer.parts().to_vec();
        let c = check_density_lemma(&Graph::empty(16), &outer, &inner, &q(1, 2)).unwrap();
        assert_eq!(c.lhs, 0);
        assert_eq!(c.rhs, -q(3, 2) * q(256, 1));
        assert!(c.conclusion_ok);
        assert!(c.hypotheses_ok);
    }

    #[test]
    fn complete_graph_with_full_inner_sets() {
        // l = 4 divides n = 32; U_i = V_i
        let n = 32;
        let outer = Equipartition::round_robin(n, 4).unwrap();
        let inner: Vec<VertexSet> = outer.parts().to_vec();
        let e = q(1, 4);
        let c = check_density_lemma(&Graph::complete(n), &outer, &inner, &e).unwrap();
        let cross = 6 * 8 * 8;
        assert_eq!(c.lhs, cross);
        assert_eq!(c.inner_edges, n * (n - 1) / 2);
        // e(G) l^2 L^2 / n^2 = 496, minus 3 * 1/4 * 1024
        assert_eq!(c.rhs, q(496, 1) - q(768, 1));
        assert_eq!(c.deviant_pairs, 0);
        assert!(c.hypotheses_ok && c.conclusion_ok);
    }

    #[test]
    fn hypothesis_flags_fire_independently() {
        let n = 12;
        let outer = Equipartition::round_robin(n, 3).unwrap();
        let inner: Vec<VertexSet> = outer.parts().to_vec();
        // 3 * (1/10) < 1 and 3/12 > 1/20
        let c = check_density_lemma(&Graph::complete(n), &outer, &inner, &q(1, 10)).unwrap();
        assert!(!c.cluster_count_ok && !c.order_ok && c.deviant_ok);
        assert!(!c.hypotheses_ok);
    }

    #[test]
    fn malformed_inputs() {
        let outer = Equipartition::round_robin(8, 2).unwrap();
        let bad = vec![VertexSet::from_iter(8, [0, 1]).unwrap(), VertexSet::from_iter(8, [3, 5]).unwrap()];
        assert!(check_density_lemma(&Graph::empty(8), &outer, &bad, &q(1, 2)).is_err());
        let uneven = vec![VertexSet::from_iter(8, [0, 2]).unwrap(), VertexSet::from_iter(8, [1]).unwrap()];
        assert!(check_density_lemma(&Graph::empty(8), &outer, &uneven, &q(1, 2)).is_err());
        assert!(check_density_lemma(&Graph::empty(8), &outer, &bad[..1], &q(1, 2)).is_err());
    }
}

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Searches for a transversal `u_i ∈ parts[i]` spanning an induced copy of
/// `pattern` with `u_i` playing pattern vertex `i`.
pub fn find_induced_embedding(g: &Graph, pattern: &Graph, parts: &[VertexSet]) -> Result<Option<Vec<usize>>> {
    let f = pattern.order();
    if parts.len() != f {
        return Err(Error::PartCount {
            expected: f,
            found: parts.len(),
        });
    }
    let mut seen = VertexSet::new(g.order());
    for part in parts {
        if part.universe() != g.order() {
            return Err(Error::UniverseMismatch {
                expected: g.order(),
                found: part.universe(),
            });
        }
        if part.is_empty() {
            return Err(Error::EmptySet);
        }
        if !part.is_disjoint(&seen) {
            return Err(Error::OverlappingSets);
        }
        seen.union_with(part);
    }
    let mut chosen = Vec::with_capacity(f);
    Ok(extend(g, pattern, parts, &mut chosen).then_some(chosen))
}

fn extend(g: &Graph, pattern: &Graph, parts: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
    let i = chosen.len();
    if i == parts.len() {
        return true;
    }
    let mut candidates = parts[i].clone();
    for (j, &u) in chosen.iter().enumerate() {
        if pattern.has_edge(i, j) {
            candidates.intersect_with(g.neighbors(u));
        } else {
            candidates.difference_with(g.neighbors(u));
        }
    }
    for u in candidates.iter() {
        chosen.push(u);
        if extend(g, pattern, parts, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, items.iter().copied()).unwrap()
    }

    #[test]
    fn examples() {
        let g = Graph::from_edges(4, [(1, 2)]).unwrap();
        let parts = [set(4, &[0, 1]), set(4, &[2, 3])];
        assert_eq!(find_induced_embedding(&g, &named_graph("K2").unwrap(), &parts).unwrap(), Some(vec![1, 2]));

        let kb = named_graph("Kpartite:2,2").unwrap();
        assert_eq!(find_induced_embedding(&kb, &Graph::empty(2), &parts).unwrap(), None);

        let k3p = named_graph("Kpartite:2,2,2").unwrap();
        let parts3 = [set(6, &[0, 1]), set(6, &[2, 3]), set(6, &[4, 5])];
        let t = find_induced_embedding(&k3p, &named_graph("K3").unwrap(), &parts3).unwrap().unwrap();
        assert_eq!(t, vec![0, 2, 4]);

        assert!(matches!(
            find_induced_embedding(&g, &named_graph("K3").unwrap(), &parts),
            Err(Error::PartCount { .. })
        ));
        assert!(find_induced_embedding(&g, &Graph::empty(2), &[set(4, &[0]), set(4, &[0, 1])]).is_err());
    }

    #[test]
    fn c4_across_four_parts_matches_product_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let c4 = named_graph("C4").unwrap();
        for _ in 0..50 {
            let n = 12;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            let parts: Vec<VertexSet> = (0..4).map(|i| set(n, &[3 * i, 3 * i + 1, 3 * i + 2])).collect();
            let mut oracle = false;
            for a in 0..3 {
                for b in 3..6 {
                    for c in 6..9 {
                        for d in 9..12 {
                            let t = [a, b, c, d];
                            if (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(t[i], t[j]) == c4.has_edge(i, j))) {
                                oracle = true;
                            }
                        }
                    }
                }
            }
            let got = find_induced_embedding(&g, &c4, &parts).unwrap();
            assert_eq!(got.is_some(), oracle);
            if let Some(t) = got {
                assert!((0..4).all(|i| parts[i].contains(t[i])));
                assert!((0..4).all(|i| (i + 1..4).all(|j| g.has_edge(t[i], t[j]) == c4.has_edge(i, j))));
            }
        }
    }
}

//! Backtracking search for copies of a small pattern graph.

use super::{Graph, VertexSet};

/// Injective map from pattern vertices to host vertices: `witness[i]` hosts pattern vertex `i`.
pub type Witness = Vec<usize>;

/// Finds a copy of `pattern` as a (not necessarily induced) subgraph of `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Witness> {
    Matcher::new(host, pattern, false).run(&[])
}

/// Finds a copy of `pattern` as an induced subgraph of `host`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Witness> {
    Matcher::new(host, pattern, true).run(&[])
}

/// Finds a copy of `pattern` in `host` that uses the host edge `{a, b}`.
///
/// When `host` minus that edge has no copy, this decides whether `host` has one.
pub fn contains_subgraph_through(host: &Graph, pattern: &Graph, a: usize, b: usize) -> Option<Witness> {
    if !host.has_edge(a, b) {
        return None;
    }
    let matcher = Matcher::new(host, pattern, false);
    for e in pattern.edges() {
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            if let Some(w) = matcher.run(&[(x, a), (y, b)]) {
                return Some(w);
            }
        }
    }
    None
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    induced: bool,
    /// Host vertices whose degree admits each pattern vertex.
    degree_ok: Vec<VertexSet>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, induced: bool) -> Self {
        let n = host.order();
        let degree_ok = (0..pattern.order())
            .map(|x| {
                let need = pattern.degree(x);
                let mut set = VertexSet::new(n);
                for v in 0..n {
                    if host.degree(v) >= need {
                        set.insert(v);
                    }
                }
                set
            })
            .collect();
        Self {
            host,
            pattern,
            induced,
            degree_ok,
        }
    }

    fn run(&self, fixed: &[(usize, usize)]) -> Option<Witness> {
        let f = self.pattern.order();
        if f > self.host.order() {
            return None;
        }
        if f == 0 {
            return Some(Vec::new());
        }
        let mut map = vec![usize::MAX; f];
        let mut used = VertexSet::new(self.host.order());
        for &(x, v) in fixed {
            if !self.domain(x, &map, &used).contains(v) {
                return None;
            }
            map[x] = v;
            used.insert(v);
        }
        let order = self.placement_order(&map);
        if self.extend(&order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    /// Unplaced pattern vertices, most-constrained first.
    fn placement_order(&self, map: &[usize]) -> Vec<usize> {
        let f = self.pattern.order();
        let mut placed: Vec<bool> = map.iter().map(|&v| v != usize::MAX).collect();
        let remaining = placed.iter().filter(|&&p| !p).count();
        let mut order = Vec::with_capacity(remaining);
        for _ in 0..remaining {
            let next = (0..f)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let linked = self.pattern.neighbors(x).iter().filter(|&y| placed[y]).count();
                    (linked, self.pattern.degree(x), std::cmp::Reverse(x))
                })
                .expect("unplaced vertex exists");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    fn domain(&self, x: usize, map: &[usize], used: &VertexSet) -> VertexSet {
        let mut dom = self.degree_ok[x].clone();
        dom.difference_with(used);
        for (y, &hy) in map.iter().enumerate() {
            if hy == usize::MAX || y == x {
                continue;
            }
            if self.pattern.has_edge(x, y) {
                dom.intersect_with(self.host.neighbors(hy));
            } else if self.induced {
                dom.difference_with(self.host.neighbors(hy));
            }
        }
        dom
    }

    fn extend(&self, order: &[usize], depth: usize, map: &mut [usize], used: &mut VertexSet) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        let dom = self.domain(x, map, used);
        for v in dom.iter() {
            map[x] = v;
            used.insert(v);
            let viable = order[depth + 1..]
                .iter()
                .all(|&y| !self.domain(y, map, used).is_empty());
            if viable && self.extend(order, depth + 1, map, used) {
                return true;
            }
            used.remove(v);
            map[x] = usize::MAX;
        }
        false
    }
}

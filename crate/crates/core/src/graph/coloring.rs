//! Exact proper colouring by branch and bound (DSATUR vertex order).

use super::Graph;

/// Returns a proper colouring with colours `1..=k` when one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some((1..=n).collect());
    }
    let mut colour = vec![0usize; n];
    let mut state = Search {
        g,
        k,
        colour: &mut colour,
        forbidden: vec![0u64; n],
        counts: vec![vec![0u32; k + 1]; n],
    };
    // the saturation masks hold at most 63 colours; beyond that use plain vertex order
    let found = if k > 63 {
        state.plain(0, 0)
    } else {
        state.dsatur(0, 0)
    };
    if found {
        Some(colour)
    } else {
        None
    }
}

/// Smallest `k` with a proper `k`-colouring.
pub fn chromatic_number(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&k| is_k_colorable(g, k).is_some())
        .unwrap_or(g.order())
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    colour: &'a mut [usize],
    /// bit c set when some neighbour has colour c
    forbidden: Vec<u64>,
    /// per vertex, number of neighbours holding each colour
    counts: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for w in self.g.neighbors(v).iter() {
            self.counts[w][c] += 1;
            self.forbidden[w] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = 0;
        for w in self.g.neighbors(v).iter() {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.forbidden[w] &= !(1 << c);
            }
        }
    }

    fn dsatur(&mut self, coloured: usize, used: usize) -> bool {
        let n = self.g.order();
        if coloured == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| self.colour[v] == 0)
            .max_by_key(|&v| {
                (
                    self.forbidden[v].count_ones(),
                    self.g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("uncoloured vertex exists");
        // colours above `used + 1` are interchangeable with `used + 1`
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            if self.forbidden[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            if self.dsatur(coloured + 1, used.max(c)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }

    fn plain(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.order() {
            return true;
        }
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            if self.g.neighbors(v).iter().any(|w| self.colour[w] == c) {
                continue;
            }
            self.colour[v] = c;
            if self.plain(v + 1, used.max(c)) {
                return true;
            }
            self.colour[v] = 0;
        }
        false
    }
}

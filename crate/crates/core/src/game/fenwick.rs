/// Binary indexed tree over 0/1 flags with order-statistic lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Fenwick {
    tree: Vec<u32>,
    total: usize,
}

impl Fenwick {
    pub(crate) fn all_set(len: usize) -> Self {
        let mut tree = vec![0u32; len + 1];
        for i in 1..=len {
            tree[i] += 1;
            let parent = i + (i & i.wrapping_neg());
            if parent <= len {
                tree[parent] += tree[i];
            }
        }
        Self { tree, total: len }
    }

    pub(crate) fn total(&self) -> usize {
        self.total
    }

    /// Clears position `index`, which must currently be set.
    pub(crate) fn clear(&mut self, index: usize) {
        let mut i = index + 1;
        while i < self.tree.len() {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
        self.total -= 1;
    }

    /// Position of the `k`-th set flag (0-based).
    pub(crate) fn select(&self, k: usize) -> Option<usize> {
        if k >= self.total {
            return None;
        }
        let mut remaining = k as u32 + 1;
        let mut pos = 0;
        let mut step = (self.tree.len() - 1).next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next < self.tree.len() && self.tree[next] < remaining {
                pos = next;
                remaining -= self.tree[next];
            }
            step >>= 1;
        }
        Some(pos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn select_tracks_cleared_positions() {
        let mut f = Fenwick::all_set(10);
        assert_eq!(f.select(0), Some(0));
        assert_eq!(f.select(9), Some(9));
        assert_eq!(f.select(10), None);
        f.clear(0);
        f.clear(4);
        f.clear(9);
        let live: Vec<usize> = (0..f.total()).map(|k| f.select(k).unwrap()).collect();
        assert_eq!(live, vec![1, 2, 3, 5, 6, 7, 8]);
        let mut one = Fenwick::all_set(1);
        one.clear(0);
        assert_eq!(one.select(0), None);
    }
}

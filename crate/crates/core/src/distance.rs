use std::collections::VecDeque;

use crate::graph::Graph;

/// All-pairs hop distances. Pairs in different components hold
/// [`DistanceMatrix::UNREACHABLE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.data[a * self.n + b]
    }

    /// `None` when `a` and `b` lie in different components.
    pub fn distance(&self, a: usize, b: usize) -> Option<u32> {
        let d = self.get(a, b);
        (d != Self::UNREACHABLE).then_some(d)
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.data[a * self.n..(a + 1) * self.n]
    }

    pub fn is_fully_reachable(&self) -> bool {
        !self.data.contains(&Self::UNREACHABLE)
    }
}

/// One BFS per source vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut data = vec![DistanceMatrix::UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut data[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let next = row[v] + 1;
            for &w in g.neighbors(v) {
                if row[w] == DistanceMatrix::UNREACHABLE {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn path_and_disconnected() {
        let p3 = Graph::generate(Family::Path(3)).unwrap();
        let d = all_pairs_distances(&p3);
        assert_eq!(d.get(0, 2), 2);
        assert!(d.is_fully_reachable());

        let k2bar = Graph::empty(2);
        let d = all_pairs_distances(&k2bar);
        assert_eq!(d.get(0, 1), DistanceMatrix::UNREACHABLE);
        assert_eq!(d.distance(0, 1), None);
        assert_eq!(d.distance(1, 1), Some(0));
    }

    #[test]
    fn cycle_distances() {
        let c6 = Graph::generate(Family::Cycle(6)).unwrap();
        let d = all_pairs_distances(&c6);
        assert_eq!(d.row(0), &[0, 1, 2, 3, 2, 1]);
    }
}

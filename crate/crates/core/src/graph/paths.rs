use std::collections::VecDeque;

use super::Graph;

/// Reusable scratch space for repeated deterministic shortest-path queries.
///
/// Each query runs a BFS from the target that stops as soon as the source is
/// discovered; at that point every vertex strictly closer to the target than
/// the source carries its exact distance, which is all the walk needs.
#[derive(Debug, Clone)]
pub struct PathFinder {
    dist: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: VecDeque<usize>,
}

impl PathFinder {
    pub fn new(n: usize) -> Self {
        PathFinder {
            dist: vec![0; n],
            stamp: vec![0; n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    fn known(&self, v: usize) -> Option<usize> {
        (self.stamp[v] == self.epoch).then_some(self.dist[v])
    }

    /// An isometric `from`-`to` path. At every step the walk moves to the
    /// lowest-id neighbour that is one step closer to `to`.
    pub fn shortest_path(&mut self, g: &Graph, from: usize, to: usize) -> Vec<usize> {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        self.queue.clear();
        self.stamp[to] = self.epoch;
        self.dist[to] = 0;
        self.queue.push_back(to);
        'bfs: while let Some(x) = self.queue.pop_front() {
            if x == from {
                break;
            }
            for &y in g.neighbors(x) {
                if self.stamp[y] != self.epoch {
                    self.stamp[y] = self.epoch;
                    self.dist[y] = self.dist[x] + 1;
                    if y == from {
                        break 'bfs;
                    }
                    self.queue.push_back(y);
                }
            }
        }

        let mut path = vec![from];
        let mut cur = from;
        let mut d = self.known(from).expect("graph is connected");
        while d > 0 {
            cur = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| self.known(w) == Some(d - 1))
                .expect("a closer neighbour exists on every shortest path");
            path.push(cur);
            d -= 1;
        }
        path
    }
}

/// One isometric `u`-`v` path, following the lowest-id distance-decreasing
/// neighbour at each step.
pub fn shortest_path(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    PathFinder::new(g.n()).shortest_path(g, u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_lowest_id_rule() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(shortest_path(&g, 0, 2), vec![0, 1, 2]);
        assert_eq!(shortest_path(&g, 2, 0), vec![2, 1, 0]);
        assert_eq!(shortest_path(&g, 3, 3), vec![3]);
    }

    #[test]
    fn tree_path_is_unique_path() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(shortest_path(&g, 2, 5), vec![2, 1, 3, 4, 5]);
    }

    #[test]
    fn finder_reuse_matches_fresh() {
        let g = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)],
        )
        .unwrap();
        let mut pf = PathFinder::new(g.n());
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(pf.shortest_path(&g, u, v), shortest_path(&g, u, v));
            }
        }
    }
}

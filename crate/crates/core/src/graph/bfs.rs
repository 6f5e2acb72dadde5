use std::collections::VecDeque;

use super::{Edge, Graph, UNREACHABLE};

/// Breadth-first layering of a graph around a root.
///
/// Every edge is either horizontal (equal endpoint distances) or belongs to
/// exactly one up-set `B(u)`, where `u` is its endpoint farther from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedBfsIndex {
    root: usize,
    dist: Vec<usize>,
    layers: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    horizontal: Vec<Edge>,
    up: Vec<Vec<usize>>,
}

/// Runs a BFS from `root`. Panics if `root` is not a vertex of `g`.
pub fn bfs_index(g: &Graph, root: usize) -> RootedBfsIndex {
    assert!(root < g.n(), "root {root} out of range");
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::with_capacity(n);
    dist[root] = 0;
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        let d = dist[x];
        if layers.len() == d {
            layers.push(Vec::new());
        }
        layers[d].push(x);
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = d + 1;
                queue.push_back(y);
            }
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }

    // Neighbour lists are sorted, so each up-list is sorted too and its head
    // is the lowest-id closer neighbour.
    let up: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&v| dist[v] + 1 == dist[u])
                .collect()
        })
        .collect();
    let parent = up.iter().map(|list| list.first().copied()).collect();
    let horizontal = g
        .edges()
        .iter()
        .copied()
        .filter(|e| dist[e.u] == dist[e.v])
        .collect();

    RootedBfsIndex {
        root,
        dist,
        layers,
        parent,
        horizontal,
        up,
    }
}

impl RootedBfsIndex {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn dist(&self, v: usize) -> usize {
        self.dist[v]
    }

    pub fn distances(&self) -> &[usize] {
        &self.dist
    }

    /// `layers()[d]` is the ascending list of vertices at distance `d`.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// BFS tree parent: the lowest-id neighbour one step closer to the root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Horizontal edges, ascending.
    pub fn horizontal_edges(&self) -> &[Edge] {
        &self.horizontal
    }

    pub fn is_horizontal(&self, e: Edge) -> bool {
        self.dist[e.u] == self.dist[e.v]
    }

    /// Endpoints `v` of the edges in `B(u)`, ascending.
    pub fn up_neighbors(&self, u: usize) -> &[usize] {
        &self.up[u]
    }

    /// The edge set `B(u)`.
    pub fn up_edges(&self, u: usize) -> impl Iterator<Item = Edge> + '_ {
        self.up[u].iter().map(move |&v| Edge::new(u, v))
    }

    /// |B(u)|.
    pub fn up_degree(&self, u: usize) -> usize {
        self.up[u].len()
    }
}

//! Simple undirected connected graphs with stable vertex ids.
//!
//! Adjacency lists are kept sorted by vertex id. Every deterministic tie-break
//! in the crate ("lowest-id neighbour") relies on that ordering.

mod base;
mod bfs;
mod paths;
mod structure;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use base::{base_decomposition, BaseDecomposition, PendantTree};
pub use bfs::{bfs_index, RootedBfsIndex};
pub use paths::{shortest_path, PathFinder};
pub use structure::{articulation, structure_profile, Articulation, StructureProfile};

/// Marker for "no path" in distance vectors.
pub const UNREACHABLE: usize = usize::MAX;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            assert_eq!(self.v, x, "vertex {x} is not an endpoint of {self}");
            self.u
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A validated simple, connected, undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges, out-of-range ids
    /// and disconnected input.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { u: w[0].u, v: w[0].v });
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let g = Graph { adj, edges: list };
        let components = g.component_count();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(g)
    }

    /// Parses the edge-list text format: optional `#` comment lines, a header
    /// line `n m`, then `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut data = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = data.next().ok_or(Error::MalformedLine {
            line: 0,
            reason: "missing header line `n m`".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line, content) in data {
            if edges.len() == m {
                return Err(Error::MalformedLine {
                    line,
                    reason: format!("more than the declared {m} edges"),
                });
            }
            let [u, v] = parse_pair(line, content)?;
            edges.push((u, v));
        }
        if edges.len() < m {
            return Err(Error::MalformedLine {
                line: text.lines().count(),
                reason: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }

    /// Serializes to the edge-list format accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted ascending.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Index of `e` in [`Graph::edges`], if present.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Degree-1 vertices, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// m - n + 1.
    pub fn cyclomatic_number(&self) -> usize {
        self.m() + 1 - self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n()
    }

    /// Single-source BFS distances; unreachable vertices get [`UNREACHABLE`].
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        self.distances_avoiding(src, None)
    }

    /// BFS distances in `G - e` (or `G` when `removed` is `None`).
    pub fn distances_avoiding(&self, src: usize, removed: Option<Edge>) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] != UNREACHABLE || removed == Some(Edge::new(x, y)) {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        dist
    }

    /// All-pairs distance matrix, `n` BFS runs.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|s| self.distances_from(s)).collect()
    }

    /// Number of connected components of `G - removed` holding at least one
    /// vertex of `set` (occurrences of `removed` itself are ignored).
    pub fn components_hit_without(&self, removed: usize, set: &[usize]) -> usize {
        let mut label = vec![usize::MAX; self.n()];
        label[removed] = removed;
        let mut stack = Vec::new();
        let mut hit = 0;
        for &s in set {
            if label[s] != usize::MAX {
                continue;
            }
            hit += 1;
            label[s] = s;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = s;
                        stack.push(y);
                    }
                }
            }
        }
        hit
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// True when consecutive vertices are adjacent, no vertex repeats and the
    /// length equals the distance between the endpoints.
    pub fn is_isometric_path(&self, path: &[usize]) -> bool {
        if path.is_empty() || path.iter().any(|&v| v >= self.n()) {
            return false;
        }
        if path.windows(2).any(|w| !self.has_edge(w[0], w[1])) {
            return false;
        }
        let mut sorted = path.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let dist = self.distances_from(path[0]);
        dist[*path.last().unwrap()] == path.len() - 1
    }
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::MalformedLine {
            line,
            reason: format!("expected two integers, got `{content}`"),
        });
    }
    let mut out = [0usize; 2];
    for (slot, tok) in out.iter_mut().zip(&tokens) {
        *slot = tok.parse().map_err(|_| Error::MalformedLine {
            line,
            reason: format!("`{tok}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

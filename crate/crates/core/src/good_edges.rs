//! Good edge sets with respect to a root, and the spanning tree they leave.
//!
//! A set F is good w.r.t. `r` when it holds every horizontal edge and all but
//! one edge of each up-set `B(u)`, `u != r`. The kept edge here is always the
//! BFS parent edge, so `G - F` is the BFS tree of [`RootedBfsIndex`] and every
//! root path in it is a shortest path of G.

use std::fmt;

use serde::Serialize;

use crate::graph::{bfs_index, Edge, Graph, RootedBfsIndex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodEdgeSet {
    bfs: RootedBfsIndex,
    edges: Vec<Edge>,
    horizontal: Vec<Edge>,
    vertical: Vec<Edge>,
}

/// Computes the good edge set of `g` w.r.t. `root` in O(n + m).
///
/// When `root` lies in the base graph, the result is also a good set of the
/// base graph: pendant vertices have a single up-edge and no horizontal edges.
pub fn good_edge_set(g: &Graph, root: usize) -> GoodEdgeSet {
    let bfs = bfs_index(g, root);
    let horizontal = bfs.horizontal_edges().to_vec();
    let mut vertical = Vec::new();
    for u in 0..g.n() {
        let ups = bfs.up_neighbors(u);
        if ups.len() > 1 {
            vertical.extend(ups[1..].iter().map(|&v| Edge::new(u, v)));
        }
    }
    vertical.sort_unstable();
    let mut edges: Vec<Edge> = horizontal.iter().chain(&vertical).copied().collect();
    edges.sort_unstable();
    GoodEdgeSet {
        bfs,
        edges,
        horizontal,
        vertical,
    }
}

impl GoodEdgeSet {
    pub fn root(&self) -> usize {
        self.bfs.root()
    }

    pub fn bfs(&self) -> &RootedBfsIndex {
        &self.bfs
    }

    /// F, ascending.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn horizontal(&self) -> &[Edge] {
        &self.horizontal
    }

    pub fn vertical(&self) -> &[Edge] {
        &self.vertical
    }

    pub fn tree_parent(&self, v: usize) -> Option<usize> {
        self.bfs.parent(v)
    }

    /// Both endpoints of every edge of F, ascending and deduplicated.
    pub fn endpoints(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.edges.iter().flat_map(|e| [e.u, e.v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The path from `v` to the root in `T_F`, starting at `v`.
    pub fn root_path(&self, v: usize) -> Vec<usize> {
        let mut path = Vec::with_capacity(self.bfs.dist(v) + 1);
        path.push(v);
        let mut cur = v;
        while let Some(p) = self.bfs.parent(cur) {
            path.push(p);
            cur = p;
        }
        path
    }

    /// Spanning-tree edges `G - F`, ascending.
    pub fn tree_edges(&self, g: &Graph) -> Vec<Edge> {
        let mut t: Vec<Edge> = (0..g.n())
            .filter_map(|v| self.bfs.parent(v).map(|p| Edge::new(v, p)))
            .collect();
        t.sort_unstable();
        t
    }
}

/// Why a candidate edge set fails to be good.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum GoodnessViolation {
    NotAnEdge { edge: Edge },
    MissingHorizontal { edge: Edge },
    /// `|B(u) ∩ F|` differs from `|B(u)| - 1`.
    UpSetCount {
        vertex: usize,
        in_f: usize,
        up_degree: usize,
    },
}

impl fmt::Display for GoodnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodnessViolation::NotAnEdge { edge } => write!(f, "{edge} is not an edge"),
            GoodnessViolation::MissingHorizontal { edge } => {
                write!(f, "horizontal edge {edge} missing from F")
            }
            GoodnessViolation::UpSetCount {
                vertex,
                in_f,
                up_degree,
            } => write!(
                f,
                "vertex {vertex}: {in_f} of its {up_degree} up-edges in F, expected {}",
                up_degree - 1
            ),
        }
    }
}

/// Checks the definition of a good set directly. Returns the first violated
/// clause: non-edges, then horizontal edges, then up-set counts by vertex id.
pub fn is_good(g: &Graph, root: usize, f: &[Edge]) -> Result<(), GoodnessViolation> {
    let bfs = bfs_index(g, root);
    let mut set: Vec<Edge> = f.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&edge) = set.iter().find(|&&e| !g.has_edge(e.u, e.v)) {
        return Err(GoodnessViolation::NotAnEdge { edge });
    }
    let contains = |e: Edge| set.binary_search(&e).is_ok();
    if let Some(&edge) = bfs.horizontal_edges().iter().find(|&&e| !contains(e)) {
        return Err(GoodnessViolation::MissingHorizontal { edge });
    }
    for u in (0..g.n()).filter(|&u| u != root) {
        let up_degree = bfs.up_degree(u);
        let in_f = bfs.up_edges(u).filter(|&e| contains(e)).count();
        if in_f + 1 != up_degree {
            return Err(GoodnessViolation::UpSetCount {
                vertex: u,
                in_f,
                up_degree,
            });
        }
    }
    Ok(())
}

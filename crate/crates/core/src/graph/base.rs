use std::collections::{BTreeMap, VecDeque};

use super::{Edge, Graph};

/// A tree hanging off one base vertex once the base edges are removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantTree {
    pub attachment: usize,
    /// Pendant vertices, ascending; the attachment is not included.
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// The base graph (2-core) of a graph together with its pendant trees.
///
/// Ids are never remapped: every field refers to vertices of the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseDecomposition {
    pub base_vertices: Vec<usize>,
    pub base_edges: Vec<Edge>,
    pub pendant_trees: BTreeMap<usize, PendantTree>,
    pub is_tree_input: bool,
    in_base: Vec<bool>,
    attachment: Vec<Option<usize>>,
    toward_base: Vec<Option<usize>>,
}

impl BaseDecomposition {
    pub fn in_base(&self, v: usize) -> bool {
        self.in_base[v]
    }

    /// The base vertex whose pendant tree contains `v` (`v` itself for base
    /// vertices). `None` for tree inputs.
    pub fn attachment(&self, v: usize) -> Option<usize> {
        self.attachment[v]
    }

    /// Next vertex on the unique path from a pendant vertex to its attachment.
    pub fn toward_base(&self, v: usize) -> Option<usize> {
        self.toward_base[v]
    }

    /// Path from `v` up to its attachment, both ends included.
    pub fn path_to_attachment(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(next) = self.toward_base[cur] {
            path.push(next);
            cur = next;
        }
        path
    }

    /// Edges of G not in the base graph.
    pub fn pendant_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.pendant_trees.values().flat_map(|t| t.edges.iter().copied())
    }
}

/// Peels degree-1 vertices until none remain.
pub fn base_decomposition(g: &Graph) -> BaseDecomposition {
    let n = g.n();
    if g.is_tree() {
        return BaseDecomposition {
            base_vertices: Vec::new(),
            base_edges: Vec::new(),
            pendant_trees: BTreeMap::new(),
            is_tree_input: true,
            in_base: vec![false; n],
            attachment: vec![None; n],
            toward_base: vec![None; n],
        };
    }

    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut in_base = vec![true; n];
    let mut toward_base = vec![None; n];
    let mut peel_order = Vec::new();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        in_base[v] = false;
        peel_order.push(v);
        // A graph with a cycle never peels down to nothing, so exactly one
        // neighbour is still present.
        let w = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| in_base[w])
            .expect("peeled vertex keeps one neighbour");
        toward_base[v] = Some(w);
        deg[w] -= 1;
        if deg[w] == 1 {
            queue.push_back(w);
        }
    }

    let mut attachment: Vec<Option<usize>> = (0..n).map(|v| in_base[v].then_some(v)).collect();
    for &v in peel_order.iter().rev() {
        attachment[v] = attachment[toward_base[v].unwrap()];
    }

    let mut pendant_trees: BTreeMap<usize, PendantTree> = BTreeMap::new();
    for &v in &peel_order {
        let a = attachment[v].unwrap();
        let tree = pendant_trees.entry(a).or_insert_with(|| PendantTree {
            attachment: a,
            vertices: Vec::new(),
            edges: Vec::new(),
        });
        tree.vertices.push(v);
        tree.edges.push(Edge::new(v, toward_base[v].unwrap()));
    }
    for tree in pendant_trees.values_mut() {
        tree.vertices.sort_unstable();
        tree.edges.sort_unstable();
    }

    BaseDecomposition {
        base_vertices: (0..n).filter(|&v| in_base[v]).collect(),
        base_edges: g
            .edges()
            .iter()
            .copied()
            .filter(|e| in_base[e.u] && in_base[e.v])
            .collect(),
        pendant_trees,
        is_tree_input: false,
        in_base,
        attachment,
        toward_base,
    }
}

use std::collections::BTreeMap;

use serde::Serialize;

use super::Graph;

/// Structural statistics used by every bound in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    /// Cyclomatic number m - n + 1.
    pub cyclomatic: usize,
    pub leaf_count: usize,
    pub leaves: Vec<usize>,
    pub min_degree: usize,
    /// legs(v) for every vertex of degree >= 3 that has at least one leg.
    pub legs: BTreeMap<usize, usize>,
    /// Branch-resolving number: sum of legs(v) - 1 over vertices with legs(v) > 1.
    pub branch_resolving: usize,
    /// max(branch_resolving, 1).
    pub lambda: usize,
    /// One leaf per counted leg; the longest leg of each branch vertex is
    /// omitted (lowest leaf id on ties).
    pub branch_resolving_choice: Vec<usize>,
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<usize>,
    pub has_cut_vertex: bool,
}

#[derive(Debug, Clone, Copy)]
struct Leg {
    leaf: usize,
    len: usize,
}

pub fn structure_profile(g: &Graph) -> StructureProfile {
    let leaves = g.leaves();
    let mut legs_at: BTreeMap<usize, Vec<Leg>> = BTreeMap::new();
    for &leaf in &leaves {
        let mut prev = leaf;
        let mut cur = g.neighbors(leaf)[0];
        let mut len = 1;
        while g.degree(cur) == 2 {
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        // Degree 1 here means the whole graph is a path.
        if g.degree(cur) >= 3 {
            legs_at.entry(cur).or_default().push(Leg { leaf, len });
        }
    }

    let mut branch_resolving = 0;
    let mut choice = Vec::new();
    for legs in legs_at.values() {
        if legs.len() < 2 {
            continue;
        }
        branch_resolving += legs.len() - 1;
        let omitted = legs
            .iter()
            .max_by(|a, b| a.len.cmp(&b.len).then(b.leaf.cmp(&a.leaf)))
            .map(|l| l.leaf);
        choice.extend(legs.iter().map(|l| l.leaf).filter(|&l| Some(l) != omitted));
    }
    choice.sort_unstable();
    let cut_vertices: Vec<usize> = articulation(g).cut_vertices().collect();

    StructureProfile {
        cyclomatic: g.cyclomatic_number(),
        leaf_count: leaves.len(),
        min_degree: g.min_degree(),
        legs: legs_at.iter().map(|(&v, l)| (v, l.len())).collect(),
        branch_resolving,
        lambda: branch_resolving.max(1),
        branch_resolving_choice: choice,
        has_cut_vertex: !cut_vertices.is_empty(),
        cut_vertices,
        leaves,
    }
}

/// Cut vertices and cycle membership from one DFS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Articulation {
    pub cut_vertex: Vec<bool>,
    /// True when the vertex is incident to a non-bridge edge.
    pub on_cycle: Vec<bool>,
}

impl Articulation {
    pub fn cut_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.cut_vertex
            .iter()
            .enumerate()
            .filter_map(|(v, &c)| c.then_some(v))
    }
}

/// Iterative Tarjan lowpoint computation (no recursion, so deep paths are fine).
pub fn articulation(g: &Graph) -> Articulation {
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut disc = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![NONE; n];
    let mut cut_vertex = vec![false; n];
    let mut on_cycle = vec![false; n];
    let mut timer = 0;

    for start in 0..n {
        if disc[start] != NONE {
            continue;
        }
        let mut root_children = 0;
        // (vertex, next neighbour index)
        let mut stack = vec![(start, 0usize)];
        disc[start] = timer;
        low[start] = timer;
        timer += 1;
        while let Some(&mut (x, ref mut i)) = stack.last_mut() {
            if let Some(&y) = g.neighbors(x).get(*i) {
                *i += 1;
                if disc[y] == NONE {
                    parent[y] = x;
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    if x == start {
                        root_children += 1;
                    }
                    stack.push((y, 0));
                } else if y != parent[x] {
                    low[x] = low[x].min(disc[y]);
                    // Back edge: both endpoints lie on a cycle.
                    if disc[y] < disc[x] {
                        on_cycle[x] = true;
                        on_cycle[y] = true;
                    }
                }
            } else {
                stack.pop();
                let p = parent[x];
                if p != NONE {
                    low[p] = low[p].min(low[x]);
                    if p != start && low[x] >= disc[p] {
                        cut_vertex[p] = true;
                    }
                    if low[x] <= disc[p] {
                        // Tree edge p-x is not a bridge.
                        on_cycle[p] = true;
                        on_cycle[x] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            cut_vertex[start] = true;
        }
    }
    Articulation {
        cut_vertex,
        on_cycle,
    }
}

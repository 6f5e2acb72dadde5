//! Isometric path edge-covers and isometric path partitions.
//!
//! Every path built from the good edge set is a root path of `T_F` (or a
//! suffix of one), hence isometric. Leaf pairs are joined by one shortest path
//! each; pendant segments of such paths are unique, so any choice agrees with
//! the composite leaf-to-attachment-to-attachment-to-leaf path.

use crate::error::{Error, Result};
use crate::good_edges::{good_edge_set, GoodEdgeSet};
use crate::graph::{base_decomposition, structure_profile, BaseDecomposition, Graph};
use crate::metric_dim::check_root;
use crate::solution::{path_bound, PathMode, PathSystem};

/// A pairing of `L' = leaves ∪ {r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafPairing {
    /// `L'`, ascending.
    pub members: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
}

impl LeafPairing {
    /// Sorts `members`, pairs them consecutively and, for an odd count, pairs
    /// the last member with the first.
    pub fn consecutive(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut pairs: Vec<(usize, usize)> = members.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        if members.len() % 2 == 1 && members.len() > 1 {
            pairs.push((members[members.len() - 1], members[0]));
        }
        LeafPairing { members, pairs }
    }
}

/// Builds an isometric path edge-cover.
pub fn ipec_construct(g: &Graph, root: Option<usize>) -> Result<PathSystem> {
    let profile = structure_profile(g);
    let claimed_bound = path_bound(PathMode::EdgeCover, g, &profile);
    let mut paths = Vec::new();
    if g.n() == 1 {
        return Ok(PathSystem {
            mode: PathMode::EdgeCover,
            paths,
            claimed_bound,
        });
    }
    let base = base_decomposition(g);
    let r = match root {
        Some(r) => {
            check_root(g, r)?;
            let valid = if g.is_tree() {
                g.degree(r) == 1
            } else {
                base.in_base(r)
            };
            if !valid {
                return Err(Error::InvalidRoot {
                    root: r,
                    reason: if g.is_tree() {
                        "not a leaf".into()
                    } else {
                        "not a base-graph vertex".into()
                    },
                });
            }
            r
        }
        None if g.is_tree() => profile.leaves[0],
        None => base.base_vertices[0],
    };

    if !g.is_tree() {
        let ges = good_edge_set(g, r);
        for e in ges.horizontal() {
            paths.push(vec![e.u, e.v]);
            paths.push(ges.root_path(e.u));
            paths.push(ges.root_path(e.v));
        }
        for v in 0..g.n() {
            let ups = ges.bfs().up_neighbors(v);
            if ups.len() >= 2 {
                for &u in ups {
                    let mut p = vec![v];
                    p.extend(ges.root_path(u));
                    paths.push(p);
                }
            }
        }
    }
    if profile.leaf_count > 0 {
        let mut members = profile.leaves.clone();
        members.push(r);
        let (_, pair_paths) = leaf_pairing_repair(g, &base, r, LeafPairing::consecutive(members))?;
        paths.extend(pair_paths);
    }
    Ok(PathSystem {
        mode: PathMode::EdgeCover,
        paths,
        claimed_bound,
    })
}

/// Swaps pairs until every pendant edge (every edge for a tree) lies on the
/// shortest path of some pair.
///
/// Edges are oriented toward the base graph, or toward `root` for trees. For
/// an uncovered edge with lower side D, the pairs `{a,b}` inside D and
/// `{r,d}` outside D become `{a,r}` and `{b,d}`; no covered pendant edge is
/// lost, so at most one round per pendant edge is needed.
pub fn leaf_pairing_repair(
    g: &Graph,
    base: &BaseDecomposition,
    root: usize,
    pairing: LeafPairing,
) -> Result<(LeafPairing, Vec<Vec<usize>>)> {
    let n = g.n();
    let ges = good_edge_set(g, root);
    let router = Router::new(g, &ges);
    // hang[x]: next vertex from x toward the base (toward the root for trees).
    let (hang, order): (Vec<Option<usize>>, Vec<usize>) = if base.is_tree_input {
        let bfs = ges.bfs();
        let order = bfs.layers().iter().flatten().copied().collect();
        ((0..n).map(|v| bfs.parent(v)).collect(), order)
    } else {
        let order = (0..n).filter(|&v| base.toward_base(v).is_some()).collect();
        ((0..n).map(|v| base.toward_base(v)).collect(), order)
    };

    let mut some_leaf_below = vec![usize::MAX; n];
    for v in (0..n).filter(|&v| g.degree(v) == 1) {
        let mut cur = v;
        while some_leaf_below[cur] == usize::MAX {
            some_leaf_below[cur] = v;
            match hang[cur] {
                Some(p) => cur = p,
                None => break,
            }
        }
    }

    let mut pairs = pairing.pairs;
    let mut paths: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| router.path(g, a, b)).collect();
    let mut cover = vec![0usize; n];
    for p in &paths {
        apply(&hang, p, &mut cover, true);
    }
    let mut pairs_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        pairs_of[a].push(i);
        if b != a {
            pairs_of[b].push(i);
        }
    }

    for &x in &order {
        if hang[x].is_none() || cover[x] > 0 {
            continue;
        }
        let inside = some_leaf_below[x];
        let far = *pairs_of[inside]
            .first()
            .ok_or_else(|| invariant(format!("leaf {inside} is unpaired")))?;
        let near = *pairs_of[root]
            .iter()
            .find(|&&i| i != far)
            .ok_or_else(|| invariant(format!("no pair to swap for edge {x}-{:?}", hang[x])))?;
        let (a, b) = pairs[far];
        let d = if pairs[near].0 == root { pairs[near].1 } else { pairs[near].0 };
        let replaced = [paths[far].clone(), paths[near].clone()];

        for i in [far, near] {
            apply(&hang, &paths[i], &mut cover, false);
            let (p, q) = pairs[i];
            pairs_of[p].retain(|&j| j != i);
            pairs_of[q].retain(|&j| j != i);
        }
        pairs[far] = (a, root);
        pairs[near] = (b, d);
        for i in [far, near] {
            let (p, q) = pairs[i];
            paths[i] = router.path(g, p, q);
            apply(&hang, &paths[i], &mut cover, true);
            pairs_of[p].push(i);
            if q != p {
                pairs_of[q].push(i);
            }
        }
        if cover[x] == 0 {
            return Err(invariant(format!("swap left edge {x}-{:?} uncovered", hang[x])));
        }
        // Only edges of the replaced paths can have lost their cover.
        for p in &replaced {
            for w in p.windows(2) {
                let child = if hang[w[0]] == Some(w[1]) { w[0] } else { w[1] };
                if hang[child].is_some() && cover[child] == 0 {
                    return Err(invariant(format!("swap uncovered pendant edge at {child}")));
                }
            }
        }
    }

    Ok((
        LeafPairing {
            members: pairing.members,
            pairs,
        },
        paths,
    ))
}

/// Shortest paths in a graph that is a tree `T_F` plus the edges of F.
///
/// A shortest path either avoids F, and is then the tree path, or passes
/// through an endpoint of an F edge. Distances from those endpoints are
/// precomputed, so each query costs O(|F| + path length * degree).
struct Router<'a> {
    ges: &'a GoodEdgeSet,
    hubs: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl<'a> Router<'a> {
    fn new(g: &Graph, ges: &'a GoodEdgeSet) -> Self {
        let hubs = ges.endpoints();
        let rows = hubs
            .iter()
            .map(|&h| g.distances_from(h).into_iter().map(|d| d as u32).collect())
            .collect();
        Router { ges, hubs, rows }
    }

    fn path(&self, g: &Graph, a: usize, b: usize) -> Vec<usize> {
        let bfs = self.ges.bfs();
        let (mut x, mut y) = (a, b);
        let (mut up_a, mut up_b) = (vec![a], vec![b]);
        while x != y {
            if bfs.dist(x) >= bfs.dist(y) {
                x = bfs.parent(x).expect("non-root vertex has a parent");
                up_a.push(x);
            } else {
                y = bfs.parent(y).expect("non-root vertex has a parent");
                up_b.push(y);
            }
        }
        let tree_len = up_a.len() + up_b.len() - 2;
        let best = (0..self.hubs.len())
            .map(|i| (self.rows[i][a] as usize + self.rows[i][b] as usize, i))
            .min()
            .filter(|&(len, _)| len < tree_len);
        match best {
            None => {
                up_b.pop();
                up_a.extend(up_b.into_iter().rev());
                up_a
            }
            Some((_, i)) => {
                let mut first = self.descend(g, i, a);
                let mut second = self.descend(g, i, b);
                second.pop();
                first.extend(second.into_iter().rev());
                first
            }
        }
    }

    /// Walk from `v` to hub `i`, always to the lowest-id closer neighbour.
    fn descend(&self, g: &Graph, i: usize, v: usize) -> Vec<usize> {
        let row = &self.rows[i];
        let mut path = vec![v];
        let mut cur = v;
        while row[cur] > 0 {
            cur = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| row[w] + 1 == row[cur])
                .expect("a closer neighbour exists");
            path.push(cur);
        }
        path
    }
}

/// Adjusts per-edge cover counts; an oriented edge is keyed by its lower end.
fn apply(hang: &[Option<usize>], path: &[usize], cover: &mut [usize], add: bool) {
    for w in path.windows(2) {
        let child = if hang[w[0]] == Some(w[1]) {
            w[0]
        } else if hang[w[1]] == Some(w[0]) {
            w[1]
        } else {
            continue;
        };
        if add {
            cover[child] += 1;
        } else {
            cover[child] -= 1;
        }
    }
}

fn invariant(msg: String) -> Error {
    Error::InternalInvariantViolation(msg)
}

/// Builds an isometric path partition from suffixes of `T_F` root paths.
///
/// The root is the lowest leaf when one exists, otherwise vertex 0.
pub fn ipp_construct(g: &Graph, root: Option<usize>) -> Result<PathSystem> {
    let profile = structure_profile(g);
    let claimed_bound = path_bound(PathMode::VertexPartition, g, &profile);
    let r = match root {
        Some(r) => {
            check_root(g, r)?;
            r
        }
        None => profile.leaves.first().copied().unwrap_or(0),
    };
    let ges = good_edge_set(g, r);
    let bfs = ges.bfs();

    let mut candidates = Vec::new();
    for e in ges.horizontal() {
        candidates.push(e.u);
        candidates.push(e.v);
    }
    for v in 0..g.n() {
        let ups = bfs.up_neighbors(v);
        if ups.len() >= 2 {
            candidates.push(v);
            candidates.extend_from_slice(&ups[1..]);
        }
    }
    candidates.extend(profile.leaves.iter().copied().filter(|&l| l != r));
    candidates.push(r);

    let mut covered = vec![false; g.n()];
    let mut paths = Vec::new();
    for w in candidates {
        if let Some(p) = uncovered_suffix(&ges, w, &mut covered) {
            paths.push(p);
        }
    }
    validate_partition(g, &ges, &paths)?;
    Ok(PathSystem {
        mode: PathMode::VertexPartition,
        paths,
        claimed_bound,
    })
}

/// The maximal uncovered part of the root path of `w`, starting at `w`.
/// Marks it covered; `None` when `w` is already covered.
fn uncovered_suffix(ges: &GoodEdgeSet, w: usize, covered: &mut [bool]) -> Option<Vec<usize>> {
    if covered[w] {
        return None;
    }
    let mut path = vec![w];
    covered[w] = true;
    let mut cur = w;
    while let Some(p) = ges.tree_parent(cur) {
        if covered[p] {
            break;
        }
        covered[p] = true;
        path.push(p);
        cur = p;
    }
    // The covered set stays closed under taking tree parents.
    debug_assert!(ges
        .tree_parent(cur)
        .map_or(true, |p| covered[p] && ancestors_covered(ges, p, covered)));
    Some(path)
}

fn ancestors_covered(ges: &GoodEdgeSet, mut v: usize, covered: &[bool]) -> bool {
    while let Some(p) = ges.tree_parent(v) {
        if !covered[p] {
            return false;
        }
        v = p;
    }
    true
}

fn validate_partition(g: &Graph, ges: &GoodEdgeSet, paths: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for p in paths {
        for (i, &v) in p.iter().enumerate() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(invariant(format!("vertex {v} lies on two paths")));
            }
            if i + 1 < p.len() && ges.tree_parent(v) != Some(p[i + 1]) {
                return Err(invariant(format!("path {p:?} leaves the tree")));
            }
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(invariant(format!("vertex {v} is not covered"))),
        None => Ok(()),
    }
}

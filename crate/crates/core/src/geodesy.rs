//! Geodetic, monitoring edge-geodetic and distance-edge-monitoring sets.

use crate::error::{Error, Result};
use crate::good_edges::good_edge_set;
use crate::graph::{articulation, base_decomposition, structure_profile, Graph};
use crate::metric_dim::{check_root, finish_with_root};
use crate::solution::{set_bound, Method, Problem, SolutionSet};

/// Leaves plus both endpoints of every edge of F. The root is added only when
/// the graph has no cut vertex, or when the cut-vertex root does not separate
/// the other elements.
pub fn geodetic_construct(g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    let profile = structure_profile(g);
    let bound = set_bound(Problem::Geodetic, g, &profile);
    if g.n() <= 2 {
        return Ok(plain(Problem::Geodetic, (0..g.n()).collect(), bound, None));
    }
    let r = match root {
        Some(r) => {
            check_root(g, r)?;
            r
        }
        None => profile.cut_vertices.first().copied().unwrap_or(0),
    };
    let mut set = profile.leaves.clone();
    set.extend(good_edge_set(g, r).endpoints());
    set.push(r);
    set.sort_unstable();
    set.dedup();
    Ok(finish_with_root(
        g,
        &profile,
        Problem::Geodetic,
        r,
        set,
        bound,
        2 * profile.cyclomatic + profile.leaf_count + 1,
    ))
}

/// Trees: the leaves. Otherwise the root lies on a cycle, and S holds the
/// root, the leaves, the endpoints of F and every endpoint of each up-set
/// with two or more edges.
pub fn meg_construct(g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    let profile = structure_profile(g);
    let bound = set_bound(Problem::Meg, g, &profile);
    if g.n() == 1 {
        return Ok(plain(Problem::Meg, Vec::new(), 0, None));
    }
    if g.is_tree() {
        return Ok(plain(Problem::Meg, profile.leaves.clone(), bound, None));
    }
    let art = articulation(g);
    let r = match root {
        Some(r) => {
            check_root(g, r)?;
            if !art.on_cycle[r] {
                return Err(Error::InvalidRoot {
                    root: r,
                    reason: "not on a cycle".into(),
                });
            }
            r
        }
        None => art
            .cut_vertices()
            .find(|&v| art.on_cycle[v])
            .or_else(|| art.on_cycle.iter().position(|&c| c))
            .expect("a graph with a cycle has a cycle vertex"),
    };
    let ges = good_edge_set(g, r);
    let mut set = profile.leaves.clone();
    set.extend(ges.endpoints());
    for u in 0..g.n() {
        let ups = ges.bfs().up_neighbors(u);
        if ups.len() >= 2 {
            set.push(u);
            set.extend_from_slice(ups);
        }
    }
    set.push(r);
    set.sort_unstable();
    set.dedup();
    let c = profile.cyclomatic;
    Ok(finish_with_root(
        g,
        &profile,
        Problem::Meg,
        r,
        set,
        3 * c + profile.leaf_count,
        3 * c + profile.leaf_count + 1,
    ))
}

/// The root plus one endpoint per edge of F: the far one for vertical edges,
/// the lower id for horizontal edges. The root is a base-graph vertex, so the
/// set also serves the whole graph.
pub fn dem_construct(g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    let profile = structure_profile(g);
    let bound = set_bound(Problem::Dem, g, &profile);
    if g.n() == 1 {
        return Ok(plain(Problem::Dem, Vec::new(), 0, None));
    }
    if g.is_tree() {
        return Ok(plain(Problem::Dem, vec![0], bound, None));
    }
    let base = base_decomposition(g);
    let r = match root {
        Some(r) => {
            check_root(g, r)?;
            if !base.in_base(r) {
                return Err(Error::InvalidRoot {
                    root: r,
                    reason: "not a base-graph vertex".into(),
                });
            }
            r
        }
        None => base.base_vertices[0],
    };
    let ges = good_edge_set(g, r);
    let bfs = ges.bfs();
    let mut set = vec![r];
    for e in ges.edges() {
        let pick = match bfs.dist(e.u).cmp(&bfs.dist(e.v)) {
            std::cmp::Ordering::Less => e.v,
            std::cmp::Ordering::Greater => e.u,
            std::cmp::Ordering::Equal => e.u,
        };
        set.push(pick);
    }
    set.sort_unstable();
    set.dedup();
    Ok(plain(Problem::Dem, set, bound, Some(r)))
}

fn plain(problem: Problem, vertices: Vec<usize>, bound: usize, root: Option<usize>) -> SolutionSet {
    SolutionSet {
        problem,
        method: Method::Construct,
        vertices,
        claimed_bound: bound,
        root_used: root,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cycles_get_three_geodetic_vertices() {
        let s = geodetic_construct(&cycle(5), None).unwrap();
        assert_eq!(s.vertices, vec![0, 2, 3]);
        assert_eq!(s.claimed_bound, 3);
        assert!(geodetic_construct(&cycle(6), None).unwrap().size() <= 3);
    }

    #[test]
    fn geodetic_tiny_graphs() {
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!(geodetic_construct(&k1, None).unwrap().vertices, vec![0]);
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let s = geodetic_construct(&k2, None).unwrap();
        assert_eq!((s.vertices.clone(), s.claimed_bound), (vec![0, 1], 2));
    }

    #[test]
    fn path_geodetic_is_endpoints() {
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(geodetic_construct(&p, None).unwrap().vertices, vec![0, 3]);
    }

    #[test]
    fn meg_tree_is_leaves() {
        let t = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(meg_construct(&t, None).unwrap().vertices, vec![1, 2, 4]);
    }

    #[test]
    fn meg_root_must_be_on_cycle() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(matches!(
            meg_construct(&g, Some(3)),
            Err(Error::InvalidRoot { root: 3, .. })
        ));
        assert_eq!(meg_construct(&g, None).unwrap().root_used, Some(2));
    }

    #[test]
    fn dem_on_c4_and_trees() {
        let s = dem_construct(&cycle(4), None).unwrap();
        assert_eq!(s.vertices, vec![0, 2]);
        assert_eq!(s.claimed_bound, 2);
        let t = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(dem_construct(&t, None).unwrap().vertices, vec![0]);
    }
}

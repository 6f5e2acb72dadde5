use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, UNREACHABLE};
use crate::solution::{PathMode, PathSystem, Problem};

/// A vertex or an edge, as distinguished by the resolving variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(usize),
    Edge(Edge),
}

/// A failure certificate. Each variant can be re-checked from its fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// No member of S separates `x` and `y`.
    Unresolved { x: Element, y: Element },
    /// `d(s, x) - d(s, y)` is the same for every `s` in S.
    NotDoublyResolved { x: usize, y: usize },
    UncoveredVertex { vertex: usize },
    UnmonitoredEdge { edge: Edge },
    NonIsometricPath { index: usize, path: Vec<usize> },
    UncoveredEdge { edge: Edge },
    OverlappingPaths { vertex: usize },
    MissingVertex { vertex: usize },
    /// The problem requires at least one member.
    EmptySet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    fn from_witness(witness: Option<Witness>) -> Self {
        VerificationReport {
            valid: witness.is_none(),
            witness,
        }
    }
}

/// Checks the defining property of `problem` for `set` exhaustively.
pub fn verify_set(problem: Problem, g: &Graph, set: &[usize]) -> Result<VerificationReport> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let rows: Vec<Vec<usize>> = s.iter().map(|&x| g.distances_from(x)).collect();
    let witness = match problem {
        Problem::Dim => first_collision(vertex_elements(g), &rows),
        // A lone edge is vacuously resolved by the empty set; edge resolving
        // sets are taken nonempty whenever there is an edge.
        Problem::Edim if s.is_empty() && g.m() > 0 => Some(Witness::EmptySet),
        Problem::Edim => first_collision(edge_elements(g), &rows),
        Problem::Mdim => first_collision(vertex_elements(g).chain(edge_elements(g)), &rows),
        Problem::Doubly => doubly_witness(g, &rows),
        Problem::Geodetic => geodetic_witness(g, &s, &rows),
        Problem::Meg => meg_witness(g, &s, &rows),
        Problem::Dem => dem_witness(g, &s, &rows),
    };
    Ok(VerificationReport::from_witness(witness))
}

fn vertex_elements(g: &Graph) -> impl Iterator<Item = Element> {
    (0..g.n()).map(Element::Vertex)
}

fn edge_elements(g: &Graph) -> impl Iterator<Item = Element> + '_ {
    g.edges().iter().map(|&e| Element::Edge(e))
}

fn element_distance(row: &[usize], el: Element) -> usize {
    match el {
        Element::Vertex(v) => row[v],
        Element::Edge(e) => row[e.u].min(row[e.v]),
    }
}

/// Two elements with equal distance vectors to S, if any.
fn first_collision(elements: impl Iterator<Item = Element>, rows: &[Vec<usize>]) -> Option<Witness> {
    let mut seen: HashMap<Vec<usize>, Element> = HashMap::new();
    for el in elements {
        let key: Vec<usize> = rows.iter().map(|r| element_distance(r, el)).collect();
        if let Some(&prev) = seen.get(&key) {
            return Some(Witness::Unresolved { x: prev, y: el });
        }
        seen.insert(key, el);
    }
    None
}

/// `x` and `y` are doubly resolved iff `(d(s,x) - d(s0,x))_s` differ.
fn doubly_witness(g: &Graph, rows: &[Vec<usize>]) -> Option<Witness> {
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for v in 0..g.n() {
        let key: Vec<i64> = match rows.first() {
            Some(r0) => rows.iter().map(|r| r[v] as i64 - r0[v] as i64).collect(),
            None => Vec::new(),
        };
        if let Some(&u) = seen.get(&key) {
            return Some(Witness::NotDoublyResolved { x: u, y: v });
        }
        seen.insert(key, v);
    }
    None
}

fn geodetic_witness(g: &Graph, s: &[usize], rows: &[Vec<usize>]) -> Option<Witness> {
    (0..g.n())
        .find(|&v| {
            !(0..s.len()).any(|i| {
                (i..s.len()).any(|j| rows[i][v] + rows[j][v] == rows[i][s[j]])
            })
        })
        .map(|vertex| Witness::UncoveredVertex { vertex })
}

fn meg_witness(g: &Graph, s: &[usize], rows: &[Vec<usize>]) -> Option<Witness> {
    let in_s = membership(g, s);
    g.edges()
        .iter()
        .copied()
        .find(|&e| {
            if in_s[e.u] && in_s[e.v] {
                return false;
            }
            !s.iter().enumerate().any(|(i, &x)| {
                // e can only lie on an x-geodesic when x sees it vertically.
                if rows[i][e.u] == rows[i][e.v] {
                    return false;
                }
                let avoid = g.distances_avoiding(x, Some(e));
                s.iter().any(|&y| avoid[y] > rows[i][y])
            })
        })
        .map(|edge| Witness::UnmonitoredEdge { edge })
}

fn dem_witness(g: &Graph, s: &[usize], rows: &[Vec<usize>]) -> Option<Witness> {
    g.edges()
        .iter()
        .copied()
        .find(|&e| {
            !s.iter().enumerate().any(|(i, &x)| {
                if rows[i][e.u] == rows[i][e.v] {
                    return false;
                }
                let avoid = g.distances_avoiding(x, Some(e));
                (0..g.n()).any(|y| avoid[y] > rows[i][y])
            })
        })
        .map(|edge| Witness::UnmonitoredEdge { edge })
}

fn membership(g: &Graph, s: &[usize]) -> Vec<bool> {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    in_s
}

/// True iff every shortest `x`-`y` path uses `e`: deleting `e` increases the
/// distance (disconnection counts as infinite).
pub fn edge_on_all_shortest_paths(g: &Graph, e: Edge, x: usize, y: usize) -> bool {
    let d = g.distances_from(x)[y];
    let d_minus = g.distances_avoiding(x, Some(e))[y];
    d != UNREACHABLE && d_minus > d
}

/// Checks isometry of every path, then edge coverage or vertex partition.
pub fn verify_path_system(g: &Graph, ps: &PathSystem) -> VerificationReport {
    VerificationReport::from_witness(path_witness(g, ps))
}

fn path_witness(g: &Graph, ps: &PathSystem) -> Option<Witness> {
    if let Some((index, path)) = ps
        .paths
        .iter()
        .enumerate()
        .find(|(_, p)| !g.is_isometric_path(p))
    {
        return Some(Witness::NonIsometricPath {
            index,
            path: path.clone(),
        });
    }
    match ps.mode {
        PathMode::EdgeCover => {
            let mut covered = vec![false; g.m()];
            for p in &ps.paths {
                for w in p.windows(2) {
                    let idx = g.edge_index(Edge::new(w[0], w[1])).expect("consecutive vertices are adjacent");
                    covered[idx] = true;
                }
            }
            covered
                .iter()
                .position(|&c| !c)
                .map(|i| Witness::UncoveredEdge { edge: g.edges()[i] })
        }
        PathMode::VertexPartition => {
            let mut seen = vec![false; g.n()];
            for &v in ps.paths.iter().flatten() {
                if std::mem::replace(&mut seen[v], true) {
                    return Some(Witness::OverlappingPaths { vertex: v });
                }
            }
            seen.iter()
                .position(|&s| !s)
                .map(|vertex| Witness::MissingVertex { vertex })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn geodetic_adjacent_pair_on_c5() {
        let r = verify_set(Problem::Geodetic, &cycle(5), &[0, 1]).unwrap();
        assert!(!r.valid);
        assert_eq!(r.witness, Some(Witness::UncoveredVertex { vertex: 2 }));
    }

    #[test]
    fn full_set_is_valid() {
        let g = cycle(5);
        let all: Vec<usize> = (0..5).collect();
        for p in [Problem::Dim, Problem::Edim, Problem::Mdim, Problem::Geodetic, Problem::Doubly] {
            assert!(verify_set(p, &g, &all).unwrap().valid, "{p}");
        }
    }

    #[test]
    fn dem_singleton_on_c4_fails() {
        let r = verify_set(Problem::Dem, &cycle(4), &[0]).unwrap();
        assert!(!r.valid);
        assert_eq!(
            r.witness,
            Some(Witness::UnmonitoredEdge {
                edge: Edge::new(1, 2)
            })
        );
    }

    #[test]
    fn out_of_range_member() {
        assert_eq!(
            verify_set(Problem::Dim, &cycle(4), &[7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn deletion_test_examples() {
        let t = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(edge_on_all_shortest_paths(&t, Edge::new(0, 1), 0, 1));
        assert!(!edge_on_all_shortest_paths(&cycle(4), Edge::new(0, 1), 0, 2));
    }

    #[test]
    fn path_system_witnesses() {
        let g = cycle(5);
        let chord = PathSystem {
            mode: PathMode::EdgeCover,
            paths: vec![vec![0, 1, 2, 3]],
            claimed_bound: 3,
        };
        assert_eq!(
            verify_path_system(&g, &chord).witness,
            Some(Witness::NonIsometricPath {
                index: 0,
                path: vec![0, 1, 2, 3]
            })
        );
        let overlap = PathSystem {
            mode: PathMode::VertexPartition,
            paths: vec![vec![0, 1], vec![1, 2], vec![3, 4]],
            claimed_bound: 3,
        };
        assert_eq!(
            verify_path_system(&g, &overlap).witness,
            Some(Witness::OverlappingPaths { vertex: 1 })
        );
    }
}

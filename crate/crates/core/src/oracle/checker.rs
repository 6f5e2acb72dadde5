//! Precomputed bitset tests for graphs on at most 64 vertices.
//!
//! Built independently of the verifiers in `verify`: resolving variants and
//! geodetic sets are expanded pair by pair from the full distance matrix, and
//! the monitoring variants from one deletion BFS per (edge, source).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solution::Problem;

pub const MAX_CHECKER_N: usize = 64;

#[derive(Debug, Clone)]
enum Test {
    /// Each mask must meet S.
    Hit(Vec<u64>),
    /// For each pair, no single group may contain all of S.
    Doubly(Vec<Vec<u64>>),
    /// `table[k][a]`: partners b such that a and b certify item k. Each item
    /// needs some a in S whose partner mask meets S.
    Pairs(Vec<Vec<u64>>),
}

/// Answers "is S valid for this problem" in a few word operations per item.
#[derive(Debug, Clone)]
pub struct SetChecker {
    n: usize,
    test: Test,
}

impl SetChecker {
    pub fn new(problem: Problem, g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > MAX_CHECKER_N {
            return Err(Error::LimitExceeded(format!(
                "bitset checker supports at most {MAX_CHECKER_N} vertices, got {n}"
            )));
        }
        let d = g.distance_matrix();
        let test = match problem {
            Problem::Dim => Test::Hit(resolving_masks(&vertex_profiles(&d))),
            Problem::Edim => {
                let mut masks = resolving_masks(&edge_profiles(g, &d));
                if g.m() > 0 {
                    masks.push(mask_where(n, |_| true));
                }
                Test::Hit(masks)
            }
            Problem::Mdim => {
                let mut all = vertex_profiles(&d);
                all.extend(edge_profiles(g, &d));
                Test::Hit(resolving_masks(&all))
            }
            Problem::Doubly => Test::Doubly(doubly_groups(&d)),
            Problem::Geodetic => Test::Pairs(
                (0..n)
                    .map(|v| {
                        (0..n)
                            .map(|a| mask_where(n, |b| d[a][v] + d[v][b] == d[a][b]))
                            .collect()
                    })
                    .collect(),
            ),
            Problem::Meg => Test::Pairs(
                g.edges()
                    .iter()
                    .map(|&e| {
                        (0..n)
                            .map(|x| {
                                let avoid = g.distances_avoiding(x, Some(e));
                                mask_where(n, |y| avoid[y] > d[x][y])
                            })
                            .collect()
                    })
                    .collect(),
            ),
            Problem::Dem => Test::Hit(
                g.edges()
                    .iter()
                    .map(|&e| {
                        mask_where(n, |x| {
                            let avoid = g.distances_avoiding(x, Some(e));
                            (0..n).any(|y| avoid[y] > d[x][y])
                        })
                    })
                    .collect(),
            ),
        };
        Ok(SetChecker { n, test })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_valid(&self, s: u64) -> bool {
        match &self.test {
            Test::Hit(masks) => masks.iter().all(|&m| m & s != 0),
            Test::Doubly(pairs) => pairs.iter().all(|groups| groups.iter().all(|&gm| s & !gm != 0)),
            Test::Pairs(table) => table.iter().all(|row| {
                let mut rest = s;
                while rest != 0 {
                    let a = rest.trailing_zeros() as usize;
                    if row[a] & s != 0 {
                        return true;
                    }
                    rest &= rest - 1;
                }
                false
            }),
        }
    }

    pub fn is_valid_set(&self, s: &[usize]) -> bool {
        self.is_valid(to_mask(s))
    }
}

pub fn to_mask(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub fn from_mask(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn mask_where(n: usize, pred: impl Fn(usize) -> bool) -> u64 {
    (0..n).filter(|&v| pred(v)).fold(0, |m, v| m | (1u64 << v))
}

/// Distance profile of every vertex: `profile[s]`.
fn vertex_profiles(d: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..d.len()).map(|v| (0..d.len()).map(|s| d[s][v]).collect()).collect()
}

fn edge_profiles(g: &Graph, d: &[Vec<usize>]) -> Vec<Vec<usize>> {
    g.edges()
        .iter()
        .map(|e| (0..g.n()).map(|s| d[s][e.u].min(d[s][e.v])).collect())
        .collect()
}

/// One mask per unordered pair: the sources separating the two profiles.
fn resolving_masks(profiles: &[Vec<usize>]) -> Vec<u64> {
    let mut out = Vec::new();
    for i in 0..profiles.len() {
        for j in i + 1..profiles.len() {
            out.push(
                (0..profiles[i].len())
                    .filter(|&s| profiles[i][s] != profiles[j][s])
                    .fold(0, |m, s| m | (1u64 << s)),
            );
        }
    }
    out
}

/// Per vertex pair, the sources grouped by the value of `d(s,x) - d(s,y)`.
fn doubly_groups(d: &[Vec<usize>]) -> Vec<Vec<u64>> {
    let n = d.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut groups: Vec<(i64, u64)> = Vec::new();
            for s in 0..n {
                let diff = d[s][x] as i64 - d[s][y] as i64;
                match groups.iter_mut().find(|(k, _)| *k == diff) {
                    Some((_, m)) => *m |= 1 << s,
                    None => groups.push((diff, 1 << s)),
                }
            }
            out.push(groups.into_iter().map(|(_, m)| m).collect());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn masks_round_trip() {
        assert_eq!(from_mask(to_mask(&[0, 3, 63])), vec![0, 3, 63]);
    }

    #[test]
    fn c6_small_cases() {
        let g = cycle(6);
        let dim = SetChecker::new(Problem::Dim, &g).unwrap();
        assert!(dim.is_valid_set(&[0, 1]));
        assert!(!dim.is_valid_set(&[0, 3]));
        let geo = SetChecker::new(Problem::Geodetic, &g).unwrap();
        assert!(geo.is_valid_set(&[0, 3]));
        assert!(!geo.is_valid_set(&[0, 2]));
    }

    #[test]
    fn dem_on_c4() {
        let c = SetChecker::new(Problem::Dem, &cycle(4)).unwrap();
        assert!(!c.is_valid_set(&[0]));
        // Deleting 2-3 changes no distance from 0 or from 1.
        assert!(!c.is_valid_set(&[0, 1]));
        assert!(c.is_valid_set(&[0, 2]));
    }

    #[test]
    fn too_large() {
        let p = Graph::from_edges(65, (0..64).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(SetChecker::new(Problem::Dim, &p), Err(Error::LimitExceeded(_))));
    }
}

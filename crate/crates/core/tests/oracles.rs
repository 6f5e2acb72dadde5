//! Verifier cross-checks against naive definition checkers built here from
//! the distance matrix and shortest-path counts.

use cyclocover_core::bench::trial_seed;
use cyclocover_core::instances::{random_cyclomatic, random_min_degree2};
use cyclocover_core::oracle::checker::SetChecker;
use cyclocover_core::oracle::{all_geodesics, edge_on_all_shortest_paths, verify_set};
use cyclocover_core::{construct, Edge, Graph, Problem};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn sample_graph(i: u64, max_n: usize, max_c: usize) -> Graph {
    let seed = trial_seed(99, i);
    let n = 2 + (seed % (max_n as u64 - 1)) as usize;
    let room = n * (n - 1) / 2 - (n - 1);
    let c = ((seed >> 32) as usize % (max_c + 1)).min(room);
    if i % 2 == 1 && c >= 1 && n >= 3 {
        random_min_degree2(n, c, seed).unwrap()
    } else {
        random_cyclomatic(n, c, seed).unwrap()
    }
}

/// Shortest-path counts from `src`.
fn sigma(g: &Graph, dist: &[usize], src: usize) -> Vec<u128> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut s = vec![0u128; g.n()];
    s[src] = 1;
    for &v in &order {
        for &w in g.neighbors(v) {
            if dist[w] == dist[v] + 1 {
                s[w] += s[v];
            }
        }
    }
    s
}

struct Counts {
    d: Vec<Vec<usize>>,
    s: Vec<Vec<u128>>,
}

impl Counts {
    fn new(g: &Graph) -> Self {
        let d = g.distance_matrix();
        let s = (0..g.n()).map(|v| sigma(g, &d[v], v)).collect();
        Counts { d, s }
    }

    /// Number of shortest x-y paths through `e`.
    fn through(&self, e: Edge, x: usize, y: usize) -> u128 {
        let mut total = 0;
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            if self.d[x][a] + 1 + self.d[b][y] == self.d[x][y] {
                total += self.s[x][a] * self.s[y][b];
            }
        }
        total
    }

    fn on_all(&self, e: Edge, x: usize, y: usize) -> bool {
        x != y && self.through(e, x, y) == self.s[x][y]
    }
}

fn naive_valid(problem: Problem, g: &Graph, set: &[usize], k: &Counts) -> bool {
    let d = &k.d;
    let n = g.n();
    let edge_dist = |s: usize, e: Edge| d[s][e.u].min(d[s][e.v]);
    let vertex_key = |x: usize| set.iter().map(|&s| d[s][x]).collect::<Vec<_>>();
    let edge_key = |e: Edge| set.iter().map(|&s| edge_dist(s, e)).collect::<Vec<_>>();
    let distinct = |keys: Vec<Vec<usize>>| {
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len() == keys.len()
    };
    match problem {
        Problem::Dim => distinct((0..n).map(vertex_key).collect()),
        Problem::Edim => !(set.is_empty() && g.m() > 0) && distinct(g.edges().iter().map(|&e| edge_key(e)).collect()),
        Problem::Mdim => {
            let mut keys: Vec<Vec<usize>> = (0..n).map(vertex_key).collect();
            keys.extend(g.edges().iter().map(|&e| edge_key(e)));
            distinct(keys)
        }
        Problem::Doubly => (0..n).all(|x| {
            (x + 1..n).all(|y| {
                set.iter().any(|&a| {
                    set.iter().any(|&b| {
                        d[x][a] as i64 - d[x][b] as i64 != d[y][a] as i64 - d[y][b] as i64
                    })
                })
            })
        }),
        Problem::Geodetic => (0..n).all(|v| {
            set.iter().any(|&a| set.iter().any(|&b| d[a][v] + d[v][b] == d[a][b]))
        }),
        Problem::Meg => g
            .edges()
            .iter()
            .all(|&e| set.iter().any(|&a| set.iter().any(|&b| k.on_all(e, a, b)))),
        Problem::Dem => g
            .edges()
            .iter()
            .all(|&e| set.iter().any(|&s| (0..n).any(|x| k.on_all(e, s, x)))),
    }
}

#[test]
fn deletion_test_matches_path_counts() {
    for i in 0..100 {
        let g = sample_graph(i, 12, 5);
        let k = Counts::new(&g);
        for &e in g.edges() {
            for x in 0..g.n() {
                for y in 0..g.n() {
                    assert_eq!(
                        edge_on_all_shortest_paths(&g, e, x, y),
                        k.on_all(e, x, y),
                        "graph {i}, edge {e}, pair ({x}, {y})"
                    );
                }
            }
        }
    }
}

#[test]
fn verifiers_agree_on_random_subsets() {
    let mut rng = StdRng::seed_from_u64(5);
    let mut outcomes = [0usize; 2];
    for i in 0..150 {
        let g = sample_graph(1000 + i, 11, 4);
        let k = Counts::new(&g);
        for problem in Problem::ALL {
            let checker = SetChecker::new(problem, &g).unwrap();
            for _ in 0..25 {
                let density = rng.random_range(0.1..0.9);
                let set: Vec<usize> = (0..g.n()).filter(|_| rng.random_bool(density)).collect();
                let expected = naive_valid(problem, &g, &set, &k);
                outcomes[usize::from(expected)] += 1;
                assert_eq!(verify_set(problem, &g, &set).unwrap().valid, expected, "{problem} {set:?} on {i}");
                assert_eq!(checker.is_valid_set(&set), expected, "{problem} checker {set:?} on {i}");
            }
        }
    }
    assert!(outcomes[0] > 1000 && outcomes[1] > 1000, "{outcomes:?}");
}

#[test]
fn constructions_pass_naive_checkers() {
    for i in 0..150 {
        let g = sample_graph(2000 + i, 16, 5);
        let k = Counts::new(&g);
        for problem in Problem::ALL {
            if problem == Problem::Doubly && g.min_degree() < 2 {
                continue;
            }
            let s = construct(problem, &g, None).unwrap();
            assert!(naive_valid(problem, &g, &s.vertices, &k), "{problem} on graph {i}");
        }
    }
}

#[test]
fn geodesic_listing_matches_path_counts() {
    for i in 0..40 {
        let g = sample_graph(3000 + i, 10, 4);
        let k = Counts::new(&g);
        let geodesics = all_geodesics(&g).unwrap();
        for a in 0..g.n() {
            for b in a..g.n() {
                let listed = geodesics
                    .iter()
                    .filter(|p| p.first() == Some(&a) && p.last() == Some(&b))
                    .count() as u128;
                assert_eq!(listed, k.s[a][b], "graph {i}, pair ({a}, {b})");
            }
        }
        assert!(geodesics.iter().all(|p| g.is_isometric_path(p)));
    }
}

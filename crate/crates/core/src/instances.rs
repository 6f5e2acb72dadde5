//! Deterministic graph families and seeded random graphs with a prescribed
//! cyclomatic number.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `[k, len_1..len_k, l, plen_1..plen_l]`: k odd cycles and l paths on a
    /// shared hub 0.
    Bouquet,
    /// `[k]`: K_{2,k} plus the edge between the two degree-k vertices.
    K2kPlusEdge,
    /// `[a, b, c]`: internal-vertex counts of three paths between two hubs.
    Theta,
    /// `[n]`
    Cycle,
    /// `[n]`
    Path,
    /// `[t]`: P_t with a P_3 hung by its center from every internal vertex.
    Spider,
    /// `[n, c]`: uniform labelled tree plus c random extra edges.
    Random,
    /// `[n, c]`: random ear decomposition, minimum degree at least 2.
    Ears,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Bouquet,
        Family::K2kPlusEdge,
        Family::Theta,
        Family::Cycle,
        Family::Path,
        Family::Spider,
        Family::Random,
        Family::Ears,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Bouquet => "bouquet",
            Family::K2kPlusEdge => "k2k_plus_edge",
            Family::Theta => "theta",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Spider => "spider",
            Family::Random => "random",
            Family::Ears => "ears",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub parameters: Vec<usize>,
    pub seed: Option<u64>,
}

pub fn gen_family(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.parameters;
    let want = |k: usize| -> Result<()> {
        if p.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "{} takes {k} parameters, got {}",
                spec.family,
                p.len()
            )))
        }
    };
    let seed = spec.seed.unwrap_or(0);
    match spec.family {
        Family::Bouquet => {
            let k = *p.first().ok_or_else(|| Error::InvalidSpec("bouquet needs k".into()))?;
            let l_pos = 1 + k;
            let l = *p
                .get(l_pos)
                .ok_or_else(|| Error::InvalidSpec("bouquet needs k lengths then l".into()))?;
            if p.len() != l_pos + 1 + l {
                return Err(Error::InvalidSpec(format!(
                    "bouquet expects {} parameters, got {}",
                    l_pos + 1 + l,
                    p.len()
                )));
            }
            bouquet(&p[1..l_pos], &p[l_pos + 1..])
        }
        Family::K2kPlusEdge => {
            want(1)?;
            k2k_plus_edge(p[0])
        }
        Family::Theta => {
            want(3)?;
            theta(p[0], p[1], p[2])
        }
        Family::Cycle => {
            want(1)?;
            cycle(p[0])
        }
        Family::Path => {
            want(1)?;
            path(p[0])
        }
        Family::Spider => {
            want(1)?;
            spider(p[0])
        }
        Family::Random => {
            want(2)?;
            random_cyclomatic(p[0], p[1], seed)
        }
        Family::Ears => {
            want(2)?;
            random_min_degree2(p[0], p[1], seed)
        }
    }
}

/// Odd cycles and paths glued at hub 0. Cycle `i` adds `len - 1` vertices and
/// path `j` adds `plen` vertices, in that order.
pub fn bouquet(cycle_lengths: &[usize], path_lengths: &[usize]) -> Result<Graph> {
    if let Some(&bad) = cycle_lengths.iter().find(|&&len| len < 3 || len % 2 == 0) {
        return Err(Error::EvenCycleLength(bad));
    }
    if path_lengths.contains(&0) {
        return Err(Error::InvalidSpec("bouquet path lengths must be >= 1".into()));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in cycle_lengths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 0));
    }
    for &len in path_lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

/// Hubs 0 and 1, joined to each other and to every vertex of `2..k+2`.
pub fn k2k_plus_edge(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidSpec("k2k_plus_edge needs k >= 2".into()));
    }
    let mut edges = vec![(0, 1)];
    for v in 2..k + 2 {
        edges.push((0, v));
        edges.push((1, v));
    }
    Graph::from_edges(k + 2, edges)
}

/// Hubs 0 and 1 joined by paths with `a`, `b` and `c` internal vertices.
pub fn theta(a: usize, b: usize, c: usize) -> Result<Graph> {
    if [a, b, c].iter().filter(|&&x| x == 0).count() > 1 {
        return Err(Error::InvalidSpec("theta allows at most one direct edge".into()));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::from_edges(next, edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSpec("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSpec("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Spine `0..t`; internal spine vertex `i` gets a center `t + 3(i-1)` with
/// leaves at the next two ids.
pub fn spider(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::InvalidSpec("spider needs t >= 2".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
    let mut next = t;
    for i in 1..t - 1 {
        edges.extend([(i, next), (next, next + 1), (next, next + 2)]);
        next += 3;
    }
    Graph::from_edges(next, edges)
}

/// A uniform random labelled tree (decoded from a random Prüfer sequence)
/// plus `c` distinct random non-edges.
pub fn random_cyclomatic(n: usize, c: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let available = n * (n - 1) / 2 - (n - 1);
    if c > available {
        return Err(Error::TooManyEdges {
            n,
            requested: c,
            available,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree(n, &mut rng);
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    if c <= available / 2 {
        while present.len() < n - 1 + c {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            let e = (a.min(b), a.max(b));
            if a != b && present.insert(e) {
                edges.push(e);
            }
        }
    } else {
        let mut pool: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|e| !present.contains(e))
            .collect();
        pool.shuffle(&mut rng);
        edges.extend(pool.into_iter().take(c));
    }
    Graph::from_edges(n, edges)
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(n, &code)
}

/// Linear-time Prüfer decoding.
fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in code {
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}

/// A random graph of minimum degree at least 2 built from a cycle and `c - 1`
/// ears, relabelled by a random permutation. Closed ears (both ends on one
/// vertex) create cut vertices.
pub fn random_min_degree2(n: usize, c: usize, seed: u64) -> Result<Graph> {
    if c == 0 || n < 3 {
        return Err(Error::InvalidSpec("ears needs n >= 3 and c >= 1".into()));
    }
    let available = n * (n - 1) / 2 - (n - 1);
    if c > available {
        return Err(Error::TooManyEdges {
            n,
            requested: c,
            available,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        if let Some(edges) = try_ears(n, c, &mut rng) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            return Graph::from_edges(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b])));
        }
    }
    Err(Error::InvalidSpec(format!(
        "could not build an ear decomposition with n = {n}, c = {c}"
    )))
}

fn try_ears(n: usize, c: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut share = vec![0usize; c];
    share[0] = 3;
    for _ in 3..n {
        share[rng.random_range(0..c)] += 1;
    }
    let mut edges: Vec<(usize, usize)> = (0..share[0]).map(|i| (i, (i + 1) % share[0])).collect();
    let mut present: HashSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let mut next = share[0];
    for &k in &share[1..] {
        let (u, v) = match k {
            0 => {
                let free: Vec<(usize, usize)> = (0..next)
                    .flat_map(|a| (a + 1..next).map(move |b| (a, b)))
                    .filter(|e| !present.contains(e))
                    .collect();
                *free.get(rng.random_range(0..free.len().max(1)))?
            }
            1 => {
                let u = rng.random_range(0..next);
                let v = (u + 1 + rng.random_range(0..next - 1)) % next;
                (u, v)
            }
            _ => {
                let u = rng.random_range(0..next);
                let v = if rng.random_bool(0.3) { u } else { rng.random_range(0..next) };
                (u, v)
            }
        };
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev, next));
            present.insert((prev.min(next), prev.max(next)));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
        present.insert((prev.min(v), prev.max(v)));
    }
    Some(edges)
}

//! Exact minimum isometric path edge-covers and partitions for small graphs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::solution::{PathMode, PathSystem};

pub const MAX_PATH_BRUTE_N: usize = 24;
pub const MAX_GEODESICS: usize = 500_000;
pub const NODE_BUDGET: u64 = 50_000_000;

/// Minimum path system by enumerating every geodesic and running an exact
/// cover search. The returned `claimed_bound` is the optimum found.
pub fn brute_force_min_path_system(mode: PathMode, g: &Graph) -> Result<PathSystem> {
    let n = g.n();
    if n > MAX_PATH_BRUTE_N || g.m() > 128 {
        return Err(Error::LimitExceeded(format!(
            "path brute force supports n <= {MAX_PATH_BRUTE_N} and m <= 128, got n = {n}, m = {}",
            g.m()
        )));
    }
    let geodesics = all_geodesics(g)?;
    let paths = match mode {
        PathMode::EdgeCover => min_edge_cover(g, &geodesics)?,
        PathMode::VertexPartition => min_partition(g, &geodesics)?,
    };
    Ok(PathSystem {
        mode,
        claimed_bound: paths.len(),
        paths,
    })
}

/// Every isometric path with first vertex <= last vertex, single vertices
/// included.
pub fn all_geodesics(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let d = g.distance_matrix();
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in a..g.n() {
            let mut stack = vec![vec![a]];
            while let Some(path) = stack.pop() {
                let cur = *path.last().unwrap();
                if cur == b {
                    out.push(path);
                    if out.len() > MAX_GEODESICS {
                        return Err(Error::LimitExceeded(format!(
                            "more than {MAX_GEODESICS} geodesics"
                        )));
                    }
                    continue;
                }
                for &w in g.neighbors(cur).iter().rev() {
                    if d[w][b] + 1 == d[cur][b] {
                        let mut next = path.clone();
                        next.push(w);
                        stack.push(next);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn edge_mask(g: &Graph, path: &[usize]) -> u128 {
    path.windows(2).fold(0, |m, w| {
        m | 1u128 << g.edge_index(Edge::new(w[0], w[1])).expect("geodesic steps are edges")
    })
}

struct Search<'a, M> {
    items: &'a [(M, usize)],
    /// `by_element[x]`: indices of items holding element x.
    by_element: Vec<Vec<usize>>,
    best: Option<Vec<usize>>,
    nodes: u64,
}

fn min_edge_cover(g: &Graph, geodesics: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    if g.m() == 0 {
        return Ok(Vec::new());
    }
    // Keep one path per edge set, then drop sets strictly inside another.
    let mut seen = HashSet::new();
    let mut masks: Vec<(u128, usize)> = Vec::new();
    for (i, p) in geodesics.iter().enumerate() {
        let m = edge_mask(g, p);
        if m != 0 && seen.insert(m) {
            masks.push((m, i));
        }
    }
    masks.sort_by_key(|&(m, _)| std::cmp::Reverse(m.count_ones()));
    let mut maximal: Vec<(u128, usize)> = Vec::new();
    for &(m, i) in &masks {
        if !maximal.iter().any(|&(big, _)| big & m == m) {
            maximal.push((m, i));
        }
    }
    let full: u128 = if g.m() == 128 { u128::MAX } else { (1u128 << g.m()) - 1 };
    let widest = maximal[0].0.count_ones() as usize;
    let mut search = Search {
        by_element: (0..g.m())
            .map(|e| (0..maximal.len()).filter(|&k| maximal[k].0 >> e & 1 == 1).collect())
            .collect(),
        items: &maximal,
        best: None,
        nodes: 0,
    };
    for depth in 0..=g.m() {
        let mut chosen = Vec::new();
        if cover_dfs(&mut search, full, 0, depth, widest, &mut chosen)? {
            break;
        }
    }
    let best = search.best.expect("single edges are geodesics");
    Ok(best.into_iter().map(|k| geodesics[maximal[k].1].clone()).collect())
}

fn cover_dfs(
    s: &mut Search<'_, u128>,
    full: u128,
    covered: u128,
    budget: usize,
    widest: usize,
    chosen: &mut Vec<usize>,
) -> Result<bool> {
    s.nodes += 1;
    if s.nodes > NODE_BUDGET {
        return Err(Error::LimitExceeded("path cover search budget exhausted".into()));
    }
    let missing = full & !covered;
    if missing == 0 {
        s.best = Some(chosen.clone());
        return Ok(true);
    }
    if budget == 0 || (missing.count_ones() as usize).div_ceil(widest) > budget {
        return Ok(false);
    }
    let e = missing.trailing_zeros() as usize;
    for idx in 0..s.by_element[e].len() {
        let k = s.by_element[e][idx];
        chosen.push(k);
        let found = cover_dfs(s, full, covered | s.items[k].0, budget - 1, widest, chosen)?;
        chosen.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn min_partition(g: &Graph, geodesics: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut seen = HashSet::new();
    let mut masks: Vec<(u128, usize)> = Vec::new();
    for (i, p) in geodesics.iter().enumerate() {
        let m = p.iter().fold(0u128, |m, &v| m | 1 << v);
        if seen.insert(m) {
            masks.push((m, i));
        }
    }
    let n = g.n();
    let full: u128 = (1u128 << n) - 1;
    let widest = masks.iter().map(|(m, _)| m.count_ones() as usize).max().unwrap_or(1);
    let mut search = Search {
        by_element: (0..n)
            .map(|v| {
                let mut ks: Vec<usize> = (0..masks.len()).filter(|&k| masks[k].0 >> v & 1 == 1).collect();
                ks.sort_by_key(|&k| std::cmp::Reverse(masks[k].0.count_ones()));
                ks
            })
            .collect(),
        items: &masks,
        best: None,
        nodes: 0,
    };
    for depth in 1..=n {
        let mut chosen = Vec::new();
        if partition_dfs(&mut search, full, 0, depth, widest, &mut chosen)? {
            break;
        }
    }
    let best = search.best.expect("single vertices partition V");
    Ok(best.into_iter().map(|k| geodesics[masks[k].1].clone()).collect())
}

fn partition_dfs(
    s: &mut Search<'_, u128>,
    full: u128,
    covered: u128,
    budget: usize,
    widest: usize,
    chosen: &mut Vec<usize>,
) -> Result<bool> {
    s.nodes += 1;
    if s.nodes > NODE_BUDGET {
        return Err(Error::LimitExceeded("path partition search budget exhausted".into()));
    }
    let missing = full & !covered;
    if missing == 0 {
        s.best = Some(chosen.clone());
        return Ok(true);
    }
    if budget == 0 || (missing.count_ones() as usize).div_ceil(widest) > budget {
        return Ok(false);
    }
    let v = missing.trailing_zeros() as usize;
    for idx in 0..s.by_element[v].len() {
        let k = s.by_element[v][idx];
        let m = s.items[k].0;
        if m & covered != 0 {
            continue;
        }
        chosen.push(k);
        let found = partition_dfs(s, full, covered | m, budget - 1, widest, chosen)?;
        chosen.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

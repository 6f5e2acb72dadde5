use crate::error::{Error, Result};
use crate::graph::{structure_profile, Graph};
use crate::oracle::checker::{from_mask, to_mask, SetChecker};
use crate::solution::{set_bound, Method, Problem, SolutionSet};

/// Largest graph accepted by [`brute_force_min_set`].
pub const MAX_BRUTE_N: usize = 20;

/// Upper limit on subsets examined by [`xp_solve`].
pub const XP_SUBSET_BUDGET: u128 = 200_000_000;

/// Lexicographically smallest minimum valid set, by exhaustive enumeration
/// in order of size. `limit` caps the size searched (default: n).
///
/// The returned `claimed_bound` is the size found, which is exact.
pub fn brute_force_min_set(problem: Problem, g: &Graph, limit: Option<usize>) -> Result<SolutionSet> {
    let n = g.n();
    if n > MAX_BRUTE_N {
        return Err(Error::LimitExceeded(format!(
            "brute force supports at most {MAX_BRUTE_N} vertices, got {n}"
        )));
    }
    let checker = SetChecker::new(problem, g)?;
    let all: Vec<usize> = (0..n).collect();
    let cap = limit.unwrap_or(n).min(n);
    for k in 0..=cap {
        if let Some(m) = first_valid_combination(&checker, &all, k, 0) {
            let vertices = from_mask(m);
            return Ok(exact(problem, Method::Brute, vertices));
        }
    }
    Err(Error::LimitExceeded(format!(
        "no valid {problem} set of size at most {cap}"
    )))
}

/// Exact minimum by forcing the vertices every optimal solution must contain
/// and enumerating the remaining vertices up to the proven bound.
///
/// Forced: the leaves for geodetic, meg and mdim; the branch-resolving choice
/// for dim and edim; nothing for dem. The extension size is capped at the
/// set bound minus the forced count, so the construction itself always lies
/// in the search space. For dim and edim the forced choice is a heuristic
/// and the answer can exceed the true minimum.
pub fn xp_solve(problem: Problem, g: &Graph) -> Result<SolutionSet> {
    if problem == Problem::Doubly {
        return Err(Error::Unsupported("xp solver does not handle doubly".into()));
    }
    let checker = SetChecker::new(problem, g)?;
    let profile = structure_profile(g);
    let forced: Vec<usize> = match problem {
        Problem::Geodetic | Problem::Meg | Problem::Mdim => profile.leaves.clone(),
        Problem::Dim | Problem::Edim => profile.branch_resolving_choice.clone(),
        Problem::Dem | Problem::Doubly => Vec::new(),
    };
    let forced_mask = to_mask(&forced);
    let free: Vec<usize> = (0..g.n()).filter(|v| forced_mask >> v & 1 == 0).collect();
    let cap = set_bound(problem, g, &profile)
        .saturating_sub(forced.len())
        .min(free.len());
    let work: u128 = (0..=cap).map(|k| binomial(free.len(), k)).sum();
    if work > XP_SUBSET_BUDGET {
        return Err(Error::LimitExceeded(format!(
            "xp search would examine {work} subsets"
        )));
    }
    for k in 0..=cap {
        if let Some(m) = first_valid_combination(&checker, &free, k, forced_mask) {
            return Ok(exact(problem, Method::Xp, from_mask(m)));
        }
    }
    Err(Error::InternalInvariantViolation(format!(
        "xp found no {problem} set within the proven bound"
    )))
}

fn exact(problem: Problem, method: Method, vertices: Vec<usize>) -> SolutionSet {
    SolutionSet {
        problem,
        method,
        claimed_bound: vertices.len(),
        vertices,
        root_used: None,
    }
}

/// First k-subset of `pool` (lexicographic in pool order) whose union with
/// `base` passes `checker`.
fn first_valid_combination(checker: &SetChecker, pool: &[usize], k: usize, base: u64) -> Option<u64> {
    let p = pool.len();
    if k > p {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let m = idx.iter().fold(base, |m, &i| m | (1u64 << pool[i]));
        if checker.is_valid(m) {
            return Some(m);
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + p - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

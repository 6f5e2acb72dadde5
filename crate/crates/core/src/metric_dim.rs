//! Resolving, edge-resolving, mixed-resolving and doubly-resolving sets
//! built from a good edge set.
//!
//! All four share one skeleton. For minimum degree >= 2 the set is the root
//! plus both endpoints of every edge of F. For minimum degree 1 the same set is
//! built on the base graph and unioned with a leaf set R (a branch-resolving
//! choice, or all leaves for the mixed variant). Trees are handled by the
//! classical leaf rules. Whenever the root is a cut vertex and the remaining
//! elements meet at least two components of `G - r`, the root is dropped.

use crate::error::{Error, Result};
use crate::good_edges::good_edge_set;
use crate::graph::{base_decomposition, structure_profile, Graph, StructureProfile};
use crate::solution::{set_bound, Method, Problem, SolutionSet};

/// `{r} ∪ endpoints(F)` for a graph of minimum degree at least 2.
pub fn doubly_resolving_construct(g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    let profile = structure_profile(g);
    if profile.min_degree < 2 {
        return Err(Error::MinDegreeTooSmall(profile.min_degree));
    }
    min_degree_two(g, &profile, Problem::Doubly, root)
}

pub fn resolving_construct(g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    resolving_family(g, Problem::Dim, root)
}

pub fn edge_resolving_construct(g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    resolving_family(g, Problem::Edim, root)
}

pub fn mixed_resolving_construct(g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    resolving_family(g, Problem::Mdim, root)
}

fn resolving_family(g: &Graph, problem: Problem, root: Option<usize>) -> Result<SolutionSet> {
    let profile = structure_profile(g);
    if g.n() == 1 {
        return Ok(SolutionSet {
            problem,
            method: Method::Construct,
            vertices: Vec::new(),
            claimed_bound: 0,
            root_used: None,
        });
    }
    if g.is_tree() {
        let vertices = match problem {
            Problem::Mdim => profile.leaves.clone(),
            _ if profile.legs.is_empty() => vec![profile.leaves[0]],
            _ => profile.branch_resolving_choice.clone(),
        };
        return Ok(SolutionSet {
            problem,
            method: Method::Construct,
            vertices,
            claimed_bound: set_bound(problem, g, &profile),
            root_used: None,
        });
    }
    if profile.min_degree >= 2 {
        return min_degree_two(g, &profile, problem, root);
    }

    let leaf_set = match problem {
        Problem::Mdim => profile.leaves.clone(),
        _ if profile.branch_resolving >= 1 => profile.branch_resolving_choice.clone(),
        _ => vec![profile.leaves[0]],
    };
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
        // The attachment of a pendant tree holding an element of R: a cut
        // vertex whose pendant side already contains a solution element.
        None => base
            .pendant_trees
            .values()
            .find(|t| t.vertices.iter().any(|v| leaf_set.binary_search(v).is_ok()))
            .map(|t| t.attachment)
            .expect("every leaf lies in a pendant tree"),
    };
    let ges = good_edge_set(g, r);
    let mut set = leaf_set;
    set.extend(ges.endpoints());
    set.sort_unstable();
    set.dedup();
    let bound = set_bound(problem, g, &profile);
    Ok(finish_with_root(g, &profile, problem, r, set, bound, bound + 1))
}

fn min_degree_two(
    g: &Graph,
    profile: &StructureProfile,
    problem: Problem,
    root: Option<usize>,
) -> Result<SolutionSet> {
    let r = match root {
        Some(r) => {
            check_root(g, r)?;
            r
        }
        None => profile.cut_vertices.first().copied().unwrap_or(0),
    };
    let mut set = good_edge_set(g, r).endpoints();
    set.push(r);
    set.sort_unstable();
    set.dedup();
    let bound = 2 * profile.cyclomatic;
    Ok(finish_with_root(g, profile, problem, r, set, bound, bound + 1))
}

/// Drops `r` from `set` when it is a cut vertex and the other elements meet
/// two or more components of `G - r`; otherwise keeps it. The claimed bound is
/// `dropped_bound` or `kept_bound` accordingly.
pub(crate) fn finish_with_root(
    g: &Graph,
    profile: &StructureProfile,
    problem: Problem,
    r: usize,
    mut set: Vec<usize>,
    dropped_bound: usize,
    kept_bound: usize,
) -> SolutionSet {
    let rest: Vec<usize> = set.iter().copied().filter(|&v| v != r).collect();
    let droppable = profile.cut_vertices.binary_search(&r).is_ok()
        && g.components_hit_without(r, &rest) >= 2;
    let claimed_bound = if droppable {
        set = rest;
        dropped_bound
    } else {
        set = {
            let mut s = rest;
            s.push(r);
            s.sort_unstable();
            s
        };
        kept_bound
    };
    SolutionSet {
        problem,
        method: Method::Construct,
        vertices: set,
        claimed_bound,
        root_used: Some(r),
    }
}

pub(crate) fn check_root(g: &Graph, r: usize) -> Result<()> {
    if r >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: r,
            n: g.n(),
        });
    }
    Ok(())
}

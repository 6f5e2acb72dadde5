//! Covering constructions on connected graphs driven by good edge sets, with
//! verifiers and exact solvers for small instances.
//!
//! Every construction takes a connected simple [`Graph`] and returns a
//! [`SolutionSet`] or [`PathSystem`] whose size is at most its claimed bound,
//! a function of the cyclomatic number `c = m - n + 1` and the leaf count.
//!
//! ```
//! use cyclocover_core::{construct, oracle, Graph, Problem};
//!
//! let c5 = Graph::parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
//! let s = construct(Problem::Geodetic, &c5, None).unwrap();
//! assert!(s.size() <= s.claimed_bound);
//! assert!(oracle::verify_set(Problem::Geodetic, &c5, &s.vertices).unwrap().valid);
//! ```

pub mod bench;
pub mod error;
pub mod geodesy;
pub mod good_edges;
pub mod graph;
pub mod instances;
pub mod metric_dim;
pub mod oracle;
pub mod path_cover;
pub mod solution;

pub use error::{Error, Result};
pub use good_edges::{good_edge_set, is_good, GoodEdgeSet, GoodnessViolation};
pub use graph::{structure_profile, Edge, Graph, StructureProfile};
pub use solution::{path_bound, set_bound, Method, PathMode, PathSystem, Problem, SolutionSet};

/// Runs the construction for `problem`. `root` overrides the default root
/// choice where the construction uses one.
pub fn construct(problem: Problem, g: &Graph, root: Option<usize>) -> Result<SolutionSet> {
    match problem {
        Problem::Dim => metric_dim::resolving_construct(g, root),
        Problem::Edim => metric_dim::edge_resolving_construct(g, root),
        Problem::Mdim => metric_dim::mixed_resolving_construct(g, root),
        Problem::Doubly => metric_dim::doubly_resolving_construct(g, root),
        Problem::Geodetic => geodesy::geodetic_construct(g, root),
        Problem::Meg => geodesy::meg_construct(g, root),
        Problem::Dem => geodesy::dem_construct(g, root),
    }
}

pub fn construct_paths(mode: PathMode, g: &Graph, root: Option<usize>) -> Result<PathSystem> {
    match mode {
        PathMode::EdgeCover => path_cover::ipec_construct(g, root),
        PathMode::VertexPartition => path_cover::ipp_construct(g, root),
    }
}

/// Dispatches on `method`. `limit` caps the brute-force search size.
pub fn solve_set(
    problem: Problem,
    method: Method,
    g: &Graph,
    root: Option<usize>,
    limit: Option<usize>,
) -> Result<SolutionSet> {
    match method {
        Method::Construct => construct(problem, g, root),
        Method::Xp => oracle::xp_solve(problem, g),
        Method::Brute => oracle::brute_force_min_set(problem, g, limit),
    }
}

/// Path analogue of [`solve_set`]; there is no XP solver for paths.
pub fn solve_paths(mode: PathMode, method: Method, g: &Graph, root: Option<usize>) -> Result<PathSystem> {
    match method {
        Method::Construct => construct_paths(mode, g, root),
        Method::Brute => oracle::brute_force_min_path_system(mode, g),
        Method::Xp => Err(Error::Unsupported(format!("xp solver does not handle {}", mode.tag()))),
    }
}

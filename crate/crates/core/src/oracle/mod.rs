//! Verifiers for every solution concept and exact solvers for small graphs.

mod brute;
pub mod checker;
mod paths;
mod verify;

pub use brute::{brute_force_min_set, xp_solve, MAX_BRUTE_N, XP_SUBSET_BUDGET};
pub use checker::SetChecker;
pub use paths::{all_geodesics, brute_force_min_path_system, MAX_PATH_BRUTE_N};
pub use verify::{
    edge_on_all_shortest_paths, verify_path_system, verify_set, Element, VerificationReport, Witness,
};

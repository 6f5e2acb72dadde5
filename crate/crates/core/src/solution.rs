//! Problem tags, solution records and the size bounds each construction
//! certifies.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, StructureProfile};

/// Vertex-subset problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Dim,
    Edim,
    Mdim,
    Doubly,
    Geodetic,
    Meg,
    Dem,
}

impl Problem {
    pub const ALL: [Problem; 7] = [
        Problem::Dim,
        Problem::Edim,
        Problem::Mdim,
        Problem::Doubly,
        Problem::Geodetic,
        Problem::Meg,
        Problem::Dem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Problem::Dim => "dim",
            Problem::Edim => "edim",
            Problem::Mdim => "mdim",
            Problem::Doubly => "doubly",
            Problem::Geodetic => "geodetic",
            Problem::Meg => "meg",
            Problem::Dem => "dem",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Problem::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownProblemTag(s.to_string()))
    }
}

/// Isometric path problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathMode {
    EdgeCover,
    VertexPartition,
}

impl PathMode {
    /// Short problem tag used on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            PathMode::EdgeCover => "ipec",
            PathMode::VertexPartition => "ipp",
        }
    }
}

impl FromStr for PathMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ipec" | "edge_cover" => Ok(PathMode::EdgeCover),
            "ipp" | "vertex_partition" => Ok(PathMode::VertexPartition),
            _ => Err(Error::UnknownProblemTag(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Construct,
    Xp,
    Brute,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "construct" => Ok(Method::Construct),
            "xp" => Ok(Method::Xp),
            "brute" => Ok(Method::Brute),
            _ => Err(Error::UnknownProblemTag(s.to_string())),
        }
    }
}

/// A vertex set answering one of the set problems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SolutionRecord", try_from = "SolutionRecord")]
pub struct SolutionSet {
    pub problem: Problem,
    pub method: Method,
    /// Ascending, no duplicates.
    pub vertices: Vec<usize>,
    pub claimed_bound: usize,
    pub root_used: Option<usize>,
}

impl SolutionSet {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Serialize, Deserialize)]
struct SolutionRecord {
    problem: Problem,
    method: Method,
    size: usize,
    vertices: Vec<usize>,
    bound: usize,
    root: Option<usize>,
}

impl From<SolutionSet> for SolutionRecord {
    fn from(s: SolutionSet) -> Self {
        SolutionRecord {
            problem: s.problem,
            method: s.method,
            size: s.vertices.len(),
            vertices: s.vertices,
            bound: s.claimed_bound,
            root: s.root_used,
        }
    }
}

impl TryFrom<SolutionRecord> for SolutionSet {
    type Error = String;

    fn try_from(r: SolutionRecord) -> Result<Self, String> {
        if r.size != r.vertices.len() {
            return Err(format!(
                "size {} does not match {} listed vertices",
                r.size,
                r.vertices.len()
            ));
        }
        let mut vertices = r.vertices;
        vertices.sort_unstable();
        vertices.dedup();
        Ok(SolutionSet {
            problem: r.problem,
            method: r.method,
            vertices,
            claimed_bound: r.bound,
            root_used: r.root,
        })
    }
}

/// An ordered collection of vertex sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PathRecord", try_from = "PathRecord")]
pub struct PathSystem {
    pub mode: PathMode,
    pub paths: Vec<Vec<usize>>,
    pub claimed_bound: usize,
}

impl PathSystem {
    pub fn count(&self) -> usize {
        self.paths.len()
    }
}

#[derive(Serialize, Deserialize)]
struct PathRecord {
    mode: PathMode,
    count: usize,
    bound: usize,
    paths: Vec<Vec<usize>>,
}

impl From<PathSystem> for PathRecord {
    fn from(p: PathSystem) -> Self {
        PathRecord {
            mode: p.mode,
            count: p.paths.len(),
            bound: p.claimed_bound,
            paths: p.paths,
        }
    }
}

impl TryFrom<PathRecord> for PathSystem {
    type Error = String;

    fn try_from(r: PathRecord) -> Result<Self, String> {
        if r.count != r.paths.len() {
            return Err(format!(
                "count {} does not match {} listed paths",
                r.count,
                r.paths.len()
            ));
        }
        Ok(PathSystem {
            mode: r.mode,
            paths: r.paths,
            claimed_bound: r.bound,
        })
    }
}

/// The proven upper bound for `problem` on a graph with this profile.
///
/// `doubly` is only defined for minimum degree at least 2. One- and
/// two-vertex graphs get the trivially attainable values.
pub fn set_bound(problem: Problem, g: &Graph, p: &StructureProfile) -> usize {
    let c = p.cyclomatic;
    let leaves = p.leaf_count;
    let cut = p.has_cut_vertex;
    let two_c_plus = |cut: bool| 2 * c + usize::from(!cut);
    if g.n() == 1 {
        return usize::from(problem == Problem::Geodetic);
    }
    match problem {
        Problem::Dim | Problem::Edim if p.min_degree == 1 => p.lambda + 2 * c,
        Problem::Mdim if p.min_degree == 1 => leaves + 2 * c,
        Problem::Dim | Problem::Edim | Problem::Mdim | Problem::Doubly => two_c_plus(cut),
        Problem::Geodetic if g.n() == 2 => 2,
        Problem::Geodetic if cut => 2 * c + leaves,
        Problem::Geodetic => 2 * c + 1,
        Problem::Meg if g.is_tree() => leaves,
        Problem::Meg => 3 * c + leaves + usize::from(!cut),
        Problem::Dem => c + 1,
    }
}

pub fn path_bound(mode: PathMode, g: &Graph, p: &StructureProfile) -> usize {
    let c = p.cyclomatic;
    match mode {
        PathMode::EdgeCover => 3 * c + (p.leaf_count + 2) / 2,
        PathMode::VertexPartition if g.n() == 1 => 1,
        PathMode::VertexPartition => 2 * c + p.leaf_count,
    }
}

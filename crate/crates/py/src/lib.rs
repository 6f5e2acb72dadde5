//! Python module `cyclocover`: graphs, constructions, exact solvers and
//! verifiers.

use std::str::FromStr;

use cyclocover_core as core;
use cyclocover_core::instances::{Family, FamilySpec};
use cyclocover_core::{Method, PathMode, Problem};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(cyclocover, CycloError, PyException, "Invalid input or failed construction.");
create_exception!(cyclocover, LimitExceededError, CycloError, "An exact solver hit its size limit.");

fn to_py(e: core::Error) -> PyErr {
    match e {
        core::Error::LimitExceeded(_) => LimitExceededError::new_err(e.to_string()),
        _ => CycloError::new_err(e.to_string()),
    }
}

/// A connected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen, module = "cyclocover")]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = core::Graph::from_edges(n, edges).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    /// Parses the `n m` header plus one `u v` line per edge.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = core::Graph::parse(text).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn cyclomatic(&self) -> usize {
        self.inner.cyclomatic_number()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().iter().map(|e| (e.u, e.v)).collect()
    }

    fn leaves(&self) -> Vec<usize> {
        self.inner.leaves()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// A vertex set for one of the set problems.
#[pyclass(name = "Solution", frozen, module = "cyclocover")]
struct PySolution {
    inner: core::SolutionSet,
}

#[pymethods]
impl PySolution {
    #[getter]
    fn problem(&self) -> &'static str {
        self.inner.problem.as_str()
    }

    #[getter]
    fn vertices(&self) -> Vec<usize> {
        self.inner.vertices.clone()
    }

    #[getter]
    fn bound(&self) -> usize {
        self.inner.claimed_bound
    }

    #[getter]
    fn root(&self) -> Option<usize> {
        self.inner.root_used
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    /// The same JSON record the command line emits.
    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable solution")
    }

    fn __repr__(&self) -> String {
        format!("Solution({}, {:?})", self.inner.problem, self.inner.vertices)
    }
}

/// A list of isometric paths.
#[pyclass(name = "PathSolution", frozen, module = "cyclocover")]
struct PyPathSolution {
    inner: core::PathSystem,
}

#[pymethods]
impl PyPathSolution {
    #[getter]
    fn problem(&self) -> &'static str {
        self.inner.mode.tag()
    }

    #[getter]
    fn paths(&self) -> Vec<Vec<usize>> {
        self.inner.paths.clone()
    }

    #[getter]
    fn bound(&self) -> usize {
        self.inner.claimed_bound
    }

    fn __len__(&self) -> usize {
        self.inner.count()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable path system")
    }

    fn __repr__(&self) -> String {
        format!("PathSolution({}, {} paths)", self.inner.mode.tag(), self.inner.count())
    }
}

fn path_mode(tag: &str) -> Option<PathMode> {
    matches!(tag, "ipec" | "ipp").then(|| PathMode::from_str(tag).expect("known tag"))
}

/// Solves `problem` (`dim`, ..., `dem`, `ipec`, `ipp`) with `method`
/// (`construct`, `xp` or `brute`).
#[pyfunction]
#[pyo3(signature = (problem, graph, method = "construct", root = None, limit = None))]
fn solve(
    py: Python<'_>,
    problem: &str,
    graph: &PyGraph,
    method: &str,
    root: Option<usize>,
    limit: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let method = Method::from_str(method).map_err(to_py)?;
    let g = &graph.inner;
    if let Some(mode) = path_mode(problem) {
        let inner = py.detach(|| core::solve_paths(mode, method, g, root)).map_err(to_py)?;
        return Ok(Py::new(py, PyPathSolution { inner })?.into_any());
    }
    let p = Problem::from_str(problem).map_err(to_py)?;
    let inner = py.detach(|| core::solve_set(p, method, g, root, limit)).map_err(to_py)?;
    Ok(Py::new(py, PySolution { inner })?.into_any())
}

/// Checks a vertex set; returns `(valid, witness_json)`.
#[pyfunction]
fn verify(problem: &str, graph: &PyGraph, vertices: Vec<usize>) -> PyResult<(bool, Option<String>)> {
    let p = Problem::from_str(problem).map_err(to_py)?;
    let report = core::oracle::verify_set(p, &graph.inner, &vertices).map_err(to_py)?;
    let witness = report
        .witness
        .map(|w| serde_json::to_string(&w).expect("serializable witness"));
    Ok((report.valid, witness))
}

/// Checks a path system for `ipec` or `ipp`; returns `(valid, witness_json)`.
#[pyfunction]
fn verify_paths(problem: &str, graph: &PyGraph, paths: Vec<Vec<usize>>) -> PyResult<(bool, Option<String>)> {
    let mode = path_mode(problem).ok_or_else(|| CycloError::new_err(format!("unknown path problem `{problem}`")))?;
    let ps = core::PathSystem {
        mode,
        claimed_bound: paths.len(),
        paths,
    };
    let report = core::oracle::verify_path_system(&graph.inner, &ps);
    let witness = report
        .witness
        .map(|w| serde_json::to_string(&w).expect("serializable witness"));
    Ok((report.valid, witness))
}

/// A good edge set for `root` as a list of `(u, v)` pairs.
#[pyfunction]
#[pyo3(signature = (graph, root = 0))]
fn good_edge_set(graph: &PyGraph, root: usize) -> PyResult<Vec<(usize, usize)>> {
    if root >= graph.inner.n() {
        return Err(to_py(core::Error::VertexOutOfRange {
            vertex: root,
            n: graph.inner.n(),
        }));
    }
    let ges = core::good_edge_set(&graph.inner, root);
    Ok(ges.edges().iter().map(|e| (e.u, e.v)).collect())
}

/// Structural parameters as a dict.
#[pyfunction]
fn structure_profile<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let p = core::structure_profile(&graph.inner);
    let d = PyDict::new(py);
    d.set_item("cyclomatic", p.cyclomatic)?;
    d.set_item("leaf_count", p.leaf_count)?;
    d.set_item("min_degree", p.min_degree)?;
    d.set_item("branch_resolving", p.branch_resolving)?;
    d.set_item("lambda", p.lambda)?;
    d.set_item("has_cut_vertex", p.has_cut_vertex)?;
    d.set_item("cut_vertices", p.cut_vertices)?;
    Ok(d)
}

/// Builds a graph from a named family, e.g. `generate("cycle", [5])`.
#[pyfunction]
#[pyo3(signature = (family, params, seed = None))]
fn generate(family: &str, params: Vec<usize>, seed: Option<u64>) -> PyResult<PyGraph> {
    let spec = FamilySpec {
        family: Family::from_str(family).map_err(to_py)?,
        parameters: params,
        seed,
    };
    let inner = core::instances::gen_family(&spec).map_err(to_py)?;
    Ok(PyGraph { inner })
}

#[pymodule]
fn cyclocover(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PySolution>()?;
    m.add_class::<PyPathSolution>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paths, m)?)?;
    m.add_function(wrap_pyfunction!(good_edge_set, m)?)?;
    m.add_function(wrap_pyfunction!(structure_profile, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add("CycloError", m.py().get_type::<CycloError>())?;
    m.add("LimitExceededError", m.py().get_type::<LimitExceededError>())?;
    Ok(())
}

//! Python bindings: graphs, slide graphs, theta seeds and the bounded seed search.

use islide_core::formats;
use islide_core::graph::{make_named_graph, set_of, set_to_vec, NamedGraph};
use islide_core::independence::minimum_maximal_independent_sets;
use islide_core::search::{self, SearchError};
use islide_core::seeds::{self, Dispatch, SeedError, SeedResult};
use islide_core::{iso, planar, reconfig, CapExceeded, ReconfigError, RotationSystem, ThetaSpec};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(
    islide,
    CapExceededError,
    PyRuntimeError,
    "Enumeration passed its set-count cap."
);
create_exception!(
    islide,
    NotRealizableError,
    PyValueError,
    "The theta graph is one of the seven exceptions."
);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn reconfig_err(e: ReconfigError) -> PyErr {
    match e {
        ReconfigError::Cap(c) => CapExceededError::new_err(c.to_string()),
        other => value_err(other),
    }
}

fn cap_err(e: CapExceeded) -> PyErr {
    CapExceededError::new_err(e.to_string())
}

fn seed_err(e: SeedError) -> PyErr {
    match e {
        SeedError::Cap(c) => cap_err(c),
        other => value_err(other),
    }
}

fn search_err(e: SearchError) -> PyErr {
    value_err(e)
}

fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn spec(j: usize, k: usize, l: usize) -> PyResult<ThetaSpec> {
    ThetaSpec::sorted(j, k, l).map_err(value_err)
}

/// Simple undirected graph on at most 64 vertices.
#[pyclass(name = "Graph", module = "islide", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(islide_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        islide_core::Graph::from_edges(n, &edges)
            .map(PyGraph)
            .map_err(value_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        formats::from_graph6(text).map(PyGraph).map_err(value_err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        formats::from_edge_list(text)
            .map(PyGraph)
            .map_err(value_err)
    }

    /// Named family member: path, cycle, complete, star, wheel, fan (with `k`), or
    /// diamond, kappa, house, paw, obstruction_t.
    #[staticmethod]
    #[pyo3(signature = (name, k = None))]
    fn named(name: &str, k: Option<usize>) -> PyResult<Self> {
        let need = || k.ok_or_else(|| value_err(format!("{name} needs k")));
        let kind = match name {
            "path" => NamedGraph::Path(need()?),
            "cycle" => NamedGraph::Cycle(need()?),
            "complete" => NamedGraph::Complete(need()?),
            "star" => NamedGraph::Star(need()?),
            "wheel" => NamedGraph::Wheel(need()?),
            "fan" => NamedGraph::Fan(need()?),
            "diamond" => NamedGraph::Diamond,
            "kappa" => NamedGraph::Kappa,
            "house" => NamedGraph::House,
            "paw" => NamedGraph::Paw,
            "obstruction_t" => NamedGraph::ObstructionT,
            other => return Err(value_err(format!("unknown graph {other:?}"))),
        };
        make_named_graph(kind).map(PyGraph).map_err(value_err)
    }

    #[staticmethod]
    fn theta(j: usize, k: usize, l: usize) -> PyResult<Self> {
        islide_core::theta(spec(j, k, l)?)
            .map(PyGraph)
            .map_err(value_err)
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.order() && v < self.0.order() && self.0.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.order() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(set_to_vec(self.0.neighbors(v)))
    }

    fn degree_sequence(&self) -> Vec<usize> {
        self.0.degree_sequence()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn line_graph(&self) -> PyResult<Self> {
        islide_core::line_graph(&self.0)
            .map(PyGraph)
            .map_err(value_err)
    }

    fn disjoint_union(&self, other: &PyGraph) -> PyResult<Self> {
        self.0
            .disjoint_union(&other.0)
            .map(PyGraph)
            .map_err(value_err)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        iso::is_isomorphic(&self.0, &other.0)
    }

    /// `(canonical graph, labelling)` with `labelling[v]` the new index of `v`.
    fn canonical_form(&self) -> (Self, Vec<usize>) {
        let c = iso::canonical_form(&self.0);
        (PyGraph(c.graph), c.labeling)
    }

    fn contains_induced(&self, h: &PyGraph) -> bool {
        islide_core::contains_induced(&self.0, &h.0)
    }

    fn to_graph6(&self) -> PyResult<String> {
        formats::to_graph6(&self.0).map_err(value_err)
    }

    fn to_edge_list(&self) -> String {
        formats::to_edge_list(&self.0)
    }

    #[pyo3(signature = (name = "G"))]
    fn to_dot(&self, name: &str) -> String {
        formats::to_dot(&self.0, name, None)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.0.order(), self.0.edge_count())
    }
}

/// An i-graph or α-graph with its underlying sets and slide labels.
#[pyclass(name = "SlideGraph", module = "islide", frozen)]
struct PySlideGraph(reconfig::SlideGraph);

#[pymethods]
impl PySlideGraph {
    fn order(&self) -> usize {
        self.0.order()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    /// Node `x` as a sorted vertex list.
    fn nodes(&self) -> Vec<Vec<usize>> {
        self.0.nodes.iter().map(|&s| set_to_vec(s)).collect()
    }

    /// Edges `(a, b, from, to)`: node `b` is node `a` with `from` swapped for `to`.
    fn edges(&self) -> Vec<(usize, usize, usize, usize)> {
        self.0
            .edges
            .iter()
            .map(|e| (e.a, e.b, e.from, e.to))
            .collect()
    }

    fn neighbors(&self, x: usize) -> PyResult<Vec<usize>> {
        if x >= self.0.order() {
            return Err(value_err(format!("node {x} out of range")));
        }
        Ok(self.0.neighbors(x).to_vec())
    }

    fn index_of(&self, set: Vec<usize>) -> Option<usize> {
        if set.iter().any(|&v| v >= 64) {
            return None;
        }
        self.0.index_of(set_of(&set))
    }

    /// The reconfiguration graph itself; `None` past 64 nodes.
    fn skeleton(&self) -> Option<PyGraph> {
        self.0.skeleton.clone().map(PyGraph)
    }

    fn degree_sequence(&self) -> Vec<usize> {
        self.0.degree_sequence()
    }

    fn invariant_violations(&self) -> Vec<String> {
        self.0.invariant_violations()
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    #[pyo3(signature = (name = "I"))]
    fn to_dot(&self, name: &str) -> String {
        self.0.to_dot(name)
    }

    fn __repr__(&self) -> String {
        format!(
            "SlideGraph(nodes={}, edges={})",
            self.0.order(),
            self.0.edges.len()
        )
    }
}

#[pyfunction]
fn i_graph(g: &PyGraph) -> PyResult<PySlideGraph> {
    reconfig::i_graph(&g.0)
        .map(PySlideGraph)
        .map_err(reconfig_err)
}

#[pyfunction]
fn alpha_graph(g: &PyGraph) -> PyResult<PySlideGraph> {
    reconfig::alpha_graph(&g.0)
        .map(PySlideGraph)
        .map_err(reconfig_err)
}

/// `{i, alpha, i_sets, alpha_sets, total_mis_count}` as plain Python data.
#[pyfunction]
fn independence_report<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let r = islide_core::independence_report(&g.0).map_err(cap_err)?;
    to_py(py, &r)
}

#[pyfunction]
fn maximal_independent_sets(g: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    let sets = islide_core::maximal_independent_sets(&g.0).map_err(cap_err)?;
    Ok(sets.into_iter().map(set_to_vec).collect())
}

#[pyfunction]
fn i_sets(g: &PyGraph) -> Vec<Vec<usize>> {
    minimum_maximal_independent_sets(&g.0)
        .1
        .into_iter()
        .map(set_to_vec)
        .collect()
}

/// Seed for θ(j,k,l): `(gbar, trace)` where the seed itself is `gbar.complement()`.
#[pyfunction]
#[pyo3(signature = (j, k, l, general = false))]
fn theta_seed<'py>(
    py: Python<'py>,
    j: usize,
    k: usize,
    l: usize,
    general: bool,
) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    let dispatch = if general {
        Dispatch::General
    } else {
        Dispatch::MostSpecific
    };
    match seeds::seed_for(spec(j, k, l)?, dispatch) {
        SeedResult::Realizable { gbar, trace } => Ok((PyGraph(gbar), to_py(py, &trace)?)),
        SeedResult::NotRealizable(e) => Err(NotRealizableError::new_err(e.to_string())),
        SeedResult::InvalidSpec(msg) => Err(value_err(msg)),
    }
}

#[pyfunction]
#[pyo3(signature = (j, k, l, general = false))]
fn verify_theta_seed<'py>(
    py: Python<'py>,
    j: usize,
    k: usize,
    l: usize,
    general: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let dispatch = if general {
        Dispatch::General
    } else {
        Dispatch::MostSpecific
    };
    match seeds::verify_theta_seed_with(spec(j, k, l)?, dispatch) {
        Ok(v) => to_py(py, &v),
        Err(SeedResult::NotRealizable(e)) => Err(NotRealizableError::new_err(e.to_string())),
        Err(other) => Err(value_err(format!("{other:?}"))),
    }
}

#[pyfunction]
fn seed_from_line_graph(h: &PyGraph) -> PyResult<PyGraph> {
    seeds::seed_from_line_graph(&h.0)
        .map(PyGraph)
        .map_err(seed_err)
}

#[pyfunction]
fn line_graph_root(h: &PyGraph) -> PyResult<PyGraph> {
    seeds::line_graph_root(&h.0).map(PyGraph).map_err(seed_err)
}

/// Adds an apex over `triangle` in `gbar`, removing that triangle as an i-set of the seed.
#[pyfunction]
fn apply_deletion(gbar: &PyGraph, triangle: Vec<usize>) -> PyResult<PyGraph> {
    if triangle.iter().any(|&v| v >= gbar.0.order()) {
        return Err(value_err("triangle vertex out of range"));
    }
    seeds::apply_deletion(&gbar.0, set_of(&triangle))
        .map(PyGraph)
        .map_err(seed_err)
}

/// Dual of a plane graph given as rotation text (`v: a-b c-d ...` per line).
#[pyfunction]
fn planar_dual(g: &PyGraph, rotation: &str) -> PyResult<PyGraph> {
    let rot = RotationSystem::parse(&g.0, rotation).map_err(value_err)?;
    planar::planar_dual(&g.0, &rot)
        .map(|(d, _)| PyGraph(d))
        .map_err(value_err)
}

/// Complement of the dual of a cubic bipartite plane graph.
#[pyfunction]
fn planar_seed(g: &PyGraph, rotation: &str) -> PyResult<PyGraph> {
    let rot = RotationSystem::parse(&g.0, rotation).map_err(value_err)?;
    seeds::planar_seed(&g.0, &rot)
        .map(|p| PyGraph(p.h))
        .map_err(seed_err)
}

/// Bounded scan for graphs whose i-graph is `target`; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (target, max_n, connected_only = false, all_witnesses = false))]
fn find_seed<'py>(
    py: Python<'py>,
    target: &PyGraph,
    max_n: usize,
    connected_only: bool,
    all_witnesses: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let mut opts = search::SearchOptions::new(max_n);
    opts.connected_only = connected_only;
    opts.all_witnesses = all_witnesses;
    opts.stop_at_first = !all_witnesses;
    let t = target.0.clone();
    let report = py
        .detach(move || search::scan(std::slice::from_ref(&t), opts))
        .map_err(search_err)?;
    to_py(py, &report[0].to_json())
}

#[pyfunction]
fn confirm_non_realizable<'py>(
    py: Python<'py>,
    target: &PyGraph,
    max_n: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let t = target.0.clone();
    let report = py
        .detach(move || search::confirm_non_realizable(&t, max_n))
        .map_err(search_err)?;
    to_py(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (max_total, search_max_n = 0))]
fn verify_table<'py>(
    py: Python<'py>,
    max_total: usize,
    search_max_n: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let report = py
        .detach(move || search::verify_table(max_total, search_max_n, false))
        .map_err(search_err)?;
    to_py(py, &report)
}

#[pymodule]
fn islide(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PySlideGraph>()?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add(
        "NotRealizableError",
        m.py().get_type::<NotRealizableError>(),
    )?;
    m.add_function(wrap_pyfunction!(i_graph, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_graph, m)?)?;
    m.add_function(wrap_pyfunction!(independence_report, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_independent_sets, m)?)?;
    m.add_function(wrap_pyfunction!(i_sets, m)?)?;
    m.add_function(wrap_pyfunction!(theta_seed, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theta_seed, m)?)?;
    m.add_function(wrap_pyfunction!(seed_from_line_graph, m)?)?;
    m.add_function(wrap_pyfunction!(line_graph_root, m)?)?;
    m.add_function(wrap_pyfunction!(apply_deletion, m)?)?;
    m.add_function(wrap_pyfunction!(planar_dual, m)?)?;
    m.add_function(wrap_pyfunction!(planar_seed, m)?)?;
    m.add_function(wrap_pyfunction!(find_seed, m)?)?;
    m.add_function(wrap_pyfunction!(confirm_non_realizable, m)?)?;
    m.add_function(wrap_pyfunction!(verify_table, m)?)?;
    Ok(())
}

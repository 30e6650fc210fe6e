//! Python bindings: `import locchrom`.
//!
//! Colorings cross the boundary as plain lists of 1-based colors; the number
//! of colors is the largest entry. Structured results come back as dicts
//! with the same keys as the library's JSON forms.

use locchrom_core::constructions::{
    corona_bounds as core_corona_bounds, empty_corona_coloring as core_empty_corona,
    fixture_theorem2 as core_fixture_theorem2, optimal_corona_upper_coloring,
    star_corona_coloring as core_star_corona, ConstructionResult,
};
use locchrom_core::{
    self as core, ChiL, Coloring, Error, SearchOutcome, VertexLabel, DEFAULT_BUDGET,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

pyo3::create_exception!(locchrom, IndeterminateError, PyRuntimeError);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Indeterminate(_) => IndeterminateError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn coloring(colors: Vec<usize>) -> PyResult<Coloring> {
    let k = colors.iter().copied().max().unwrap_or(0);
    Coloring::new(k, colors).map_err(py_err)
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "locchrom", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: core::Graph,
}

impl From<core::Graph> for PyGraph {
    fn from(inner: core::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(core::Graph::new(n, &edges).map_err(py_err)?.into())
    }

    /// `Graph.generate("path", 5)`, `Graph.generate("double_star", 2, 3)`, ...
    #[staticmethod]
    #[pyo3(signature = (family, *params))]
    fn generate(family: &str, params: Vec<usize>) -> PyResult<Self> {
        let f = core::Family::from_parts(family, &params).map_err(py_err)?;
        Ok(core::Graph::generate(f).map_err(py_err)?.into())
    }

    /// Parses the `n` / `e u v` edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(core::parse_graph(text).map_err(py_err)?.into())
    }

    fn serialize(&self) -> String {
        core::serialize_graph(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.connected_components()
    }

    fn disjoint_union(&self, other: &PyGraph) -> PyGraph {
        self.inner.disjoint_union(&other.inner).into()
    }

    fn join_with_k1(&self) -> PyGraph {
        self.inner.join_with_k1().into()
    }

    /// Hop distances; `None` for unreachable pairs.
    fn distances(&self) -> Vec<Vec<Option<u32>>> {
        let d = core::all_pairs_distances(&self.inner);
        let n = self.inner.order();
        (0..n)
            .map(|a| (0..n).map(|b| d.distance(a, b)).collect())
            .collect()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __str__(&self) -> String {
        self.serialize()
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.inner.order(), self.inner.edges())
    }
}

/// `G ⊙ H` and the provenance of each product vertex: `[u]` for a center,
/// `[u, t, v]` for vertex `v` of component `t` in the copy attached to `u`.
#[pyfunction]
fn corona(g: &PyGraph, h: &PyGraph) -> PyResult<(PyGraph, Vec<Vec<usize>>)> {
    let (product, map) = core::corona(&g.inner, &h.inner).map_err(py_err)?;
    let labels = map
        .labels()
        .iter()
        .map(|l| match *l {
            VertexLabel::Center(u) => vec![u],
            VertexLabel::Satellite { g, t, h } => vec![g, t, h],
        })
        .collect();
    Ok((product.into(), labels))
}

fn chi_l_dict<'py>(py: Python<'py>, r: &ChiL) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match r {
        ChiL::Resolved { value, certificate } => {
            d.set_item("status", "resolved")?;
            d.set_item("value", value)?;
            d.set_item("certificate", certificate.colors().to_vec())?;
        }
        ChiL::Indeterminate { lower, upper } => {
            d.set_item("status", "indeterminate")?;
            d.set_item("lower", lower)?;
            d.set_item("upper", upper)?;
        }
    }
    Ok(d)
}

/// Exact locating-chromatic number with a certificate coloring.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn chi_l<'py>(py: Python<'py>, g: &PyGraph, budget: u64) -> PyResult<Bound<'py, PyDict>> {
    let r = py
        .detach(|| core::chi_l(&g.inner, budget))
        .map_err(py_err)?;
    chi_l_dict(py, &r)
}

/// A locating coloring with exactly `k` colors, `None` if none exists.
/// Raises `IndeterminateError` when the budget runs out.
#[pyfunction]
#[pyo3(signature = (g, k, budget = DEFAULT_BUDGET))]
fn find_locating_coloring(
    py: Python<'_>,
    g: &PyGraph,
    k: usize,
    budget: u64,
) -> PyResult<Option<Vec<usize>>> {
    let out = py
        .detach(|| core::find_locating_coloring(&g.inner, k, budget))
        .map_err(py_err)?;
    match out {
        SearchOutcome::Found { coloring, .. } => Ok(Some(coloring.colors().to_vec())),
        SearchOutcome::Infeasible { .. } => Ok(None),
        SearchOutcome::BudgetExhausted { nodes } => Err(IndeterminateError::new_err(format!(
            "budget exhausted after {nodes} nodes"
        ))),
    }
}

/// Exhaustive oracle for graphs with at most 8 vertices.
#[pyfunction]
fn brute_force_chi_l(g: &PyGraph) -> PyResult<usize> {
    core::brute_force_chi_l(&g.inner).map_err(py_err)
}

/// `{"proper": bool, "locating": bool, "witness": dict | None}`.
#[pyfunction]
fn verify<'py>(py: Python<'py>, g: &PyGraph, colors: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
    let report = core::verify(&g.inner, &coloring(colors)?).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("proper", report.verdict.proper)?;
    d.set_item("locating", report.verdict.locating)?;
    let witness = match &report.witness {
        None => None,
        Some(w) => {
            let wd = PyDict::new(py);
            match w {
                core::Witness::MonochromaticEdge { u, v, color } => {
                    wd.set_item("kind", "monochromatic-edge")?;
                    wd.set_item("u", u)?;
                    wd.set_item("v", v)?;
                    wd.set_item("color", color)?;
                }
                core::Witness::CodeCollision { u, v, code } => {
                    wd.set_item("kind", "code-collision")?;
                    wd.set_item("u", u)?;
                    wd.set_item("v", v)?;
                    wd.set_item("code", code.clone())?;
                }
            }
            Some(wd)
        }
    };
    d.set_item("witness", witness)?;
    Ok(d)
}

/// Per-vertex distances to each color class.
#[pyfunction]
fn color_codes(g: &PyGraph, colors: Vec<usize>) -> PyResult<Vec<Vec<u32>>> {
    let m = core::color_codes(&g.inner, &coloring(colors)?).map_err(py_err)?;
    Ok(m.rows().to_vec())
}

#[pyfunction]
fn twin_classes(g: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    core::twin_classes(&g.inner).map_err(py_err)
}

/// `(value, rule)` for the structural lower bound.
#[pyfunction]
fn lower_bound(g: &PyGraph) -> PyResult<(usize, &'static str)> {
    let lb = core::locating_lower_bound(&g.inner).map_err(py_err)?;
    Ok((lb.value, lb.tag.as_str()))
}

/// `{"lower", "upper", "indeterminate", "tags": [(side, rule, value)]}`.
#[pyfunction]
#[pyo3(signature = (g, h, budget = DEFAULT_BUDGET))]
fn corona_bounds<'py>(
    py: Python<'py>,
    g: &PyGraph,
    h: &PyGraph,
    budget: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = py
        .detach(|| core_corona_bounds(&g.inner, &h.inner, budget))
        .map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("lower", r.lower)?;
    d.set_item("upper", r.upper)?;
    d.set_item("indeterminate", r.indeterminate)?;
    let tags: Vec<(&str, &str, usize)> = r
        .tags
        .iter()
        .map(|t| {
            let side = match t.side {
                core::BoundSide::Lower => "lower",
                core::BoundSide::Upper => "upper",
            };
            (side, t.rule.as_str(), t.value)
        })
        .collect();
    d.set_item("tags", tags)?;
    Ok(d)
}

fn result_dict<'py>(py: Python<'py>, r: &ConstructionResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("source", &r.source)?;
    d.set_item("k", r.k)?;
    d.set_item("colors", r.colors.clone())?;
    d.set_item("verified", r.verified)?;
    Ok(d)
}

/// Locating coloring of `G ⊙ H` with as many colors as the upper bound.
#[pyfunction]
#[pyo3(signature = (g, h, budget = DEFAULT_BUDGET))]
fn corona_upper_coloring<'py>(
    py: Python<'py>,
    g: &PyGraph,
    h: &PyGraph,
    budget: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = py
        .detach(|| optimal_corona_upper_coloring(&g.inner, &h.inner, budget))
        .map_err(py_err)?;
    result_dict(py, &r)
}

/// `G ⊙ K̄_k` and its `(k + 1)`-coloring.
#[pyfunction]
fn empty_corona_coloring<'py>(
    py: Python<'py>,
    g: &PyGraph,
    k: usize,
) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    let (product, r) = core_empty_corona(&g.inner, k).map_err(py_err)?;
    Ok((product.into(), result_dict(py, &r)?))
}

/// `Sₙ ⊙ K₁` and its `⌈√n⌉ + 1`-coloring.
#[pyfunction]
fn star_corona_coloring<'py>(py: Python<'py>, n: usize) -> PyResult<(PyGraph, Bound<'py, PyDict>)> {
    let (product, r) = core_star_corona(n).map_err(py_err)?;
    Ok((product.into(), result_dict(py, &r)?))
}

/// The 5-colored `P₃ ⊙ (P₂ ∪ C₄)` with its named code table.
#[pyfunction]
fn fixture_theorem2(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let fx = core_fixture_theorem2().map_err(py_err)?;
    let d = result_dict(py, &fx.result)?;
    d.set_item("graph", PyGraph::from(fx.graph))?;
    d.set_item("names", fx.names)?;
    d.set_item("codes", fx.codes)?;
    Ok(d)
}

#[pymodule]
fn locchrom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add(
        "IndeterminateError",
        m.py().get_type::<IndeterminateError>(),
    )?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    m.add_function(wrap_pyfunction!(corona, m)?)?;
    m.add_function(wrap_pyfunction!(chi_l, m)?)?;
    m.add_function(wrap_pyfunction!(find_locating_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_chi_l, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(color_codes, m)?)?;
    m.add_function(wrap_pyfunction!(twin_classes, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(corona_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(corona_upper_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(empty_corona_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(star_corona_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_theorem2, m)?)?;
    Ok(())
}

//! Python bindings. Rationals cross the boundary as strings (`"0.25"`,
//! `"1/3"`); ints are accepted on input too.

use ordcone::exactnum::{parse_rational, to_decimal_string, RatMatrix, RatVector};
use ordcone::graph_io::{graph_to_json, parse_graph};
use ordcone::pathsolve::{efficient_paths_merged, CategoryGraph, EfficientPath, SearchMode, DEFAULT_PATH_CAP};
use ordcone::{Error, MergedWeights};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::PathCapExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational_from(obj: &Bound<'_, PyAny>) -> PyResult<ordcone::Rational> {
    let text = match obj.extract::<i64>() {
        Ok(n) => n.to_string(),
        Err(_) => obj.extract::<String>()?,
    };
    parse_rational(&text).map_err(py_err)
}

fn vector_from(items: &[Bound<'_, PyAny>]) -> PyResult<RatVector> {
    items.iter().map(rational_from).collect()
}

fn strings(v: &RatVector) -> Vec<String> {
    v.iter().map(to_decimal_string).collect()
}

fn rows(m: &RatMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(strings).collect()
}

fn parse_mode(mode: &str) -> PyResult<SearchMode> {
    match mode {
        "all_paths" => Ok(SearchMode::AllPaths),
        "one_per_vector" => Ok(SearchMode::OnePerVector),
        _ => Err(PyValueError::new_err(format!("unknown mode {mode:?}"))),
    }
}

/// Marginal weights `omega`, `gamma` of a weighted ordinal cone.
#[pyclass(module = "pyordcone", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Weights {
    inner: ordcone::Weights,
}

#[pymethods]
impl Weights {
    #[new]
    fn new(omega: Vec<Bound<'_, PyAny>>, gamma: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let k = omega.len() + 1;
        let inner = ordcone::classify_weights(k, vector_from(&omega)?, vector_from(&gamma)?).map_err(py_err)?;
        Ok(Weights { inner })
    }

    #[staticmethod]
    fn standard_ordinal(k: usize) -> Self {
        Weights { inner: ordcone::Weights::standard_ordinal(k) }
    }

    #[staticmethod]
    fn pareto(k: usize) -> Self {
        Weights { inner: ordcone::Weights::pareto(k) }
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn omega(&self) -> Vec<String> {
        strings(self.inner.omega())
    }

    #[getter]
    fn gamma(&self) -> Vec<String> {
        strings(self.inner.gamma())
    }

    fn is_pointed(&self) -> bool {
        self.inner.is_pointed()
    }

    /// 1-based indices with `omega_i * gamma_i = 1`.
    fn degenerate_indices(&self) -> Vec<usize> {
        self.inner.degenerate_indices()
    }

    /// Spanning rays as `(label, vector, extreme)`.
    fn spanning_rays(&self) -> Vec<(String, Vec<String>, bool)> {
        let v = ordcone::spanning_rays(&self.inner);
        (0..v.num_rays())
            .map(|j| {
                let (g, i) = v.label(j);
                (format!("{g}{i}"), strings(&v.rays().column(j)), v.extreme_mask()[j])
            })
            .collect()
    }

    fn facet_matrix(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(rows(ordcone::facet_matrix(&self.inner).map_err(py_err)?.matrix()))
    }

    fn facet_count(&self) -> PyResult<usize> {
        ordcone::facet_count(&self.inner).map_err(py_err)
    }

    fn special_case(&self) -> Option<&'static str> {
        ordcone::detect_special(&self.inner).map(|k| k.name())
    }

    /// Collapses degenerate categories; returns a dict with `weights`,
    /// `groups` and `lift`.
    fn merge<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let m = ordcone::merge_degenerate(&self.inner).map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("weights", Weights { inner: m.weights.clone() })?;
        d.set_item("groups", m.groups.clone())?;
        d.set_item("lift", rows(&m.lift))?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Weights(omega={:?}, gamma={:?})", self.omega(), self.gamma())
    }
}

/// Weak or strict cone dominance of `y1` over `y2`.
#[pyfunction]
#[pyo3(signature = (weights, y1, y2, strict = true))]
fn dominates(weights: &Weights, y1: Vec<Bound<'_, PyAny>>, y2: Vec<Bound<'_, PyAny>>, strict: bool) -> PyResult<bool> {
    let a = ordcone::facet_matrix(&weights.inner).map_err(py_err)?;
    let (y1, y2) = (vector_from(&y1)?, vector_from(&y2)?);
    let r = if strict { ordcone::dominates(&a, &y1, &y2) } else { ordcone::weakly_dominates(&a, &y1, &y2) };
    r.map_err(py_err)
}

/// Indices of the non-dominated points.
#[pyfunction]
fn filter_nondominated(weights: &Weights, points: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<usize>> {
    let a = ordcone::facet_matrix(&weights.inner).map_err(py_err)?;
    let pts = points.iter().map(|p| vector_from(p)).collect::<PyResult<Vec<_>>>()?;
    let set = ordcone::PointSet::new(pts).map_err(py_err)?;
    Ok(ordcone::filter_nondominated(&a, &set).map_err(py_err)?.ids().to_vec())
}

/// Graph whose edges carry a category and a length.
#[pyclass(module = "pyordcone", frozen)]
struct Graph {
    inner: CategoryGraph,
}

#[pymethods]
impl Graph {
    /// `edges` holds `(from, to, category, length)` tuples.
    #[new]
    fn new(k: usize, edges: Vec<(String, String, usize, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let parsed = edges
            .iter()
            .map(|(a, b, c, len)| Ok((a.as_str(), b.as_str(), *c, rational_from(len)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Graph { inner: CategoryGraph::from_edge_list(k, &parsed).map_err(py_err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Graph { inner: parse_graph(text).map_err(py_err)? })
    }

    fn to_json(&self) -> String {
        graph_to_json(&self.inner)
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn nodes(&self) -> Vec<String> {
        self.inner.nodes().iter().map(|n| n.id.clone()).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.edges().len()
    }
}

fn path_dict<'py>(py: Python<'py>, g: &CategoryGraph, p: &EfficientPath) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("nodes", p.nodes.iter().map(|&n| g.nodes()[n].id.clone()).collect::<Vec<_>>())?;
    d.set_item("edges", p.edges.clone())?;
    d.set_item("counts", strings(&p.counts))?;
    d.set_item("transformed", strings(&p.transformed))?;
    Ok(d)
}

/// Efficient `source`-`target` paths. Degenerate weights are merged first
/// when `merge` is true and rejected otherwise.
#[pyfunction]
#[pyo3(signature = (graph, source, target, weights, mode = "all_paths", cap = DEFAULT_PATH_CAP, merge = false))]
fn efficient_paths<'py>(
    py: Python<'py>,
    graph: &Graph,
    source: &str,
    target: &str,
    weights: &Weights,
    mode: &str,
    cap: usize,
    merge: bool,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let mode = parse_mode(mode)?;
    let g = &graph.inner;
    let w = &weights.inner;
    let paths = if merge && !w.is_pointed() {
        let m: MergedWeights = ordcone::merge_degenerate(w).map_err(py_err)?;
        py.detach(|| efficient_paths_merged(g, source, target, &m, mode, cap))
    } else {
        py.detach(|| ordcone::efficient_paths(g, source, target, w, mode, cap))
    }
    .map_err(py_err)?;
    paths.iter().map(|p| path_dict(py, g, p)).collect()
}

#[pymodule]
fn pyordcone(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Weights>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(dominates, m)?)?;
    m.add_function(wrap_pyfunction!(filter_nondominated, m)?)?;
    m.add_function(wrap_pyfunction!(efficient_paths, m)?)?;
    Ok(())
}

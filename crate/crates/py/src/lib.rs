//! Python bindings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};
use serde_json::Value;
use threeev_core::constructions;
use threeev_core::feasibility::{self, Candidate, Filters, TableRow};
use threeev_core::graph::{are_isomorphic, canonical_form, Graph};
use threeev_core::nonexistence;
use threeev_core::spectral::certification_report;
use threeev_core::star::{self, StarProblem};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(a) => {
            let l = PyList::empty(py);
            for x in a {
                l.append(to_py(py, x)?)?;
            }
            l.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn json_of<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Simple undirected graph.
#[pyclass(name = "Graph", module = "threeev", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: Graph,
}

impl From<Graph> for PyGraph {
    fn from(inner: Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edges(n, &edges).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        Graph::from_graph6(s.trim()).map(Into::into).map_err(err)
    }

    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.inner.n() && y < self.inner.n() && self.inner.has_edge(x, y)
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn switch(&self, w: Vec<usize>) -> PyResult<Self> {
        self.inner.switch(&w).map(Into::into).map_err(err)
    }

    fn cone(&self) -> Self {
        constructions::cone_over(&self.inner).into()
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        self.inner.induced(&vertices).map(Into::into).map_err(err)
    }

    fn canonical_form(&self) -> String {
        String::from_utf8(canonical_form(&self.inner)).expect("graph6 is ascii")
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        are_isomorphic(&self.inner, &other.inner)
    }

    /// Certification report; `three_eigenvalues` is False (with a reason) on failure.
    fn certify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let v = match certification_report(&self.inner) {
            Ok(mut r) => {
                r["three_eigenvalues"] = Value::Bool(true);
                r
            }
            Err(e) => serde_json::json!({ "three_eigenvalues": false, "reason": e.to_string() }),
        };
        to_py(py, &v)
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.inner.to_graph6())
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }
}

/// A feasible parameter set.
#[pyclass(name = "Candidate", module = "threeev", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCandidate {
    inner: Candidate,
}

#[pymethods]
impl PyCandidate {
    #[getter]
    fn n(&self) -> i64 {
        self.inner.n
    }
    #[getter]
    fn valency_array(&self) -> (i64, i64, i64, i64) {
        let c = &self.inner;
        (c.n1, c.n2, c.k1, c.k2)
    }
    #[getter]
    fn spectrum(&self) -> ((i64, i64), (i64, i64), (i64, i64)) {
        let c = &self.inner;
        ((c.theta0, 1), (c.theta1, c.m1), (c.theta2, c.m2))
    }
    #[getter]
    fn quotient(&self) -> [[i64; 2]; 2] {
        self.inner.q
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &json_of(&self.inner))
    }

    fn predicted_complement_spectrum(&self) -> PyResult<Vec<(String, usize)>> {
        let p = self.inner.predicted_complement_spectrum().map_err(err)?;
        Ok(p.iter().map(|e| (e.value.to_string(), e.at_least)).collect())
    }

    fn predicted_switch_spectrum(&self) -> PyResult<Vec<(String, usize)>> {
        let p = self.inner.predicted_switch_spectrum().map_err(err)?;
        Ok(p.iter().map(|e| (e.value.to_string(), e.at_least)).collect())
    }

    /// Local refutation transcript, if one applies.
    fn refute<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        nonexistence::refute(&self.inner).map(|r| to_py(py, &json_of(&r))).transpose()
    }

    fn __repr__(&self) -> String {
        format!("<Candidate {}>", self.inner)
    }
}

fn wrap(cs: Vec<Candidate>) -> Vec<PyCandidate> {
    cs.into_iter().map(|inner| PyCandidate { inner }).collect()
}

#[pyfunction]
#[pyo3(signature = (max_n, filters = true))]
fn feasible(py: Python<'_>, max_n: i64, filters: bool) -> PyResult<Vec<PyCandidate>> {
    let f = if filters { Filters::default() } else { Filters::none() };
    py.detach(|| feasibility::enumerate(max_n, f)).map(wrap).map_err(err)
}

/// Tab-separated feasibility table with the existence column.
#[pyfunction]
fn table(py: Python<'_>, max_n: i64) -> PyResult<String> {
    py.detach(|| {
        let cs = feasibility::enumerate(max_n, Filters::default()).map_err(err)?;
        let rows: Vec<TableRow> = nonexistence::annotate_existence(&cs)
            .into_iter()
            .map(|a| TableRow::from_candidate(&a.candidate, a.existence, a.comment))
            .collect();
        Ok(feasibility::format_table(&rows))
    })
}

#[pyfunction]
fn family_comp(t: i64) -> PyResult<PyCandidate> {
    feasibility::family_comp(t).map(|inner| PyCandidate { inner }).map_err(|e| err(format!("{e:?}")))
}

#[pyfunction]
fn family_switch(s: i64, t: i64) -> PyResult<PyCandidate> {
    feasibility::family_switch(s, t).map(|inner| PyCandidate { inner }).map_err(|e| err(format!("{e:?}")))
}

#[pyfunction]
fn cauchy_schwarz<'py>(py: Python<'py>, n: i64, k: i64, theta: i64, m: i64) -> PyResult<Bound<'py, PyAny>> {
    let c = nonexistence::cauchy_schwarz_filter(n, k, theta, m).map_err(err)?;
    to_py(py, &json_of(&c))
}

/// Named graphs: petersen, shrikhande, van-dam-fano, rook (q), triangular (q), total-graph (q).
#[pyfunction]
#[pyo3(signature = (name, q = None))]
fn construct(name: &str, q: Option<u64>) -> PyResult<PyGraph> {
    let need = || q.ok_or_else(|| err(format!("{name} needs q")));
    let g = match name {
        "petersen" => constructions::petersen(),
        "shrikhande" => constructions::shrikhande(),
        "van-dam-fano" => constructions::van_dam_fano(),
        "rook" => constructions::rook_graph(need()? as usize),
        "triangular" => constructions::triangular_graph(need()? as usize),
        "total-graph" => {
            let q = need()?;
            let d = constructions::affine_geometry_design(q).map_err(err)?;
            constructions::total_graph(&d, q as usize).map_err(err)?
        }
        other => return Err(err(format!("unknown graph {other:?}"))),
    };
    Ok(g.into())
}

/// Non-isomorphic certified graphs with star complement `complement` for θ at multiplicity m.
#[pyfunction]
#[pyo3(signature = (complement, theta, m, counts = Vec::new(), limit = None))]
fn star_search(
    py: Python<'_>,
    complement: &PyGraph,
    theta: i64,
    m: usize,
    counts: Vec<(Vec<usize>, usize)>,
    limit: Option<usize>,
) -> PyResult<Vec<PyGraph>> {
    let c = complement.inner.clone();
    py.detach(|| {
        let p = StarProblem::new(c, theta, m).and_then(|p| p.with_counts(&counts)).map_err(err)?;
        let out = star::search(&p, limit).map_err(err)?;
        Ok(out.assembled().into_iter().map(Into::into).collect())
    })
}

/// One of the shipped searches: "star30", "star30-smoke" or "star36".
#[pyfunction]
fn bundled_star_search(py: Python<'_>, name: &str) -> PyResult<Vec<PyGraph>> {
    let p = match name {
        "star30" => star::problem_30(),
        "star30-smoke" => star::problem_30_smoke(),
        "star36" => star::problem_36(),
        other => return Err(err(format!("unknown problem {other:?}"))),
    };
    py.detach(|| {
        let r = p.run(None, None).map_err(err)?;
        Ok(r.outcome.assembled().into_iter().map(Into::into).collect())
    })
}

#[pymodule]
fn threeev(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCandidate>()?;
    m.add_function(wrap_pyfunction!(feasible, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(family_comp, m)?)?;
    m.add_function(wrap_pyfunction!(family_switch, m)?)?;
    m.add_function(wrap_pyfunction!(cauchy_schwarz, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(star_search, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_star_search, m)?)?;
    Ok(())
}

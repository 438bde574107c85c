//! Python bindings: graphs, complexes, homology, formulas and verification.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use polyjoin_core::complex::{forest_complex_with_budget, polyhedral_join, PairFamily, SimplicialComplex};
use polyjoin_core::formula;
use polyjoin_core::graph::{lex_product, DegreeBound, Graph};
use polyjoin_core::homology::{reduced_betti, BettiVector};
use polyjoin_core::verify::{self, SweepConfig, VerificationCase};
use polyjoin_core::Error;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Io(_) | Error::Overflow(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Accepts an int or the string "inf".
fn bound(d: &Bound<'_, PyAny>) -> PyResult<DegreeBound> {
    if let Ok(k) = d.extract::<u32>() {
        return Ok(DegreeBound::Finite(k));
    }
    let s: String = d.extract()?;
    s.parse().map_err(py_err)
}

fn ranks(b: &BettiVector) -> BTreeMap<i32, u64> {
    b.ranks().clone()
}

#[pyclass(name = "Graph", module = "polyjoin", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Parse an expression such as `"lex(P4,K2)"` or `"K2,3"`.
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: expr.parse().map_err(py_err)? })
    }

    #[staticmethod]
    fn from_edges(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: Graph::from_edges(order, &edges).map_err(py_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    /// Lexicographic product `self ∘ other`.
    fn lex(&self, other: &PyGraph) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: lex_product(&self.inner, &other.inner).map_err(py_err)? })
    }

    /// `F_d(G)`; `d` is an int or `"inf"`.
    #[pyo3(signature = (d, budget=None))]
    fn forest_complex(&self, d: &Bound<'_, PyAny>, budget: Option<usize>) -> PyResult<PyComplex> {
        let k = forest_complex_with_budget(&self.inner, bound(d)?, budget).map_err(py_err)?;
        Ok(PyComplex { inner: k })
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, edges={})", self.inner.order(), self.inner.edge_count())
    }
}

#[pyclass(name = "Complex", module = "polyjoin", frozen)]
struct PyComplex {
    inner: SimplicialComplex,
}

#[pymethods]
impl PyComplex {
    /// Complex on `vertex_count` vertices generated by `faces`.
    #[new]
    fn new(vertex_count: usize, faces: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyComplex { inner: SimplicialComplex::from_maximal_faces(vertex_count, &faces).map_err(py_err)? })
    }

    #[staticmethod]
    fn simplex(n: usize) -> PyResult<Self> {
        Ok(PyComplex { inner: SimplicialComplex::simplex(n).map_err(py_err)? })
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyComplex { inner: SimplicialComplex::from_text(text).map_err(py_err)? })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn dimension(&self) -> Option<i32> {
        self.inner.dimension()
    }

    /// Face counts starting with the empty face.
    fn f_vector(&self) -> Vec<usize> {
        self.inner.f_vector()
    }

    fn maximal_faces(&self) -> Vec<Vec<usize>> {
        self.inner.maximal_faces().iter().map(|&f| polyjoin_core::complex::face_vertices(f)).collect()
    }

    fn skeleton(&self, d: i32) -> PyResult<PyComplex> {
        Ok(PyComplex { inner: self.inner.skeleton(d).map_err(py_err)? })
    }

    fn join(&self, other: &PyComplex) -> PyResult<PyComplex> {
        Ok(PyComplex { inner: self.inner.join(&other.inner).map_err(py_err)? })
    }

    fn euler_characteristic(&self) -> PyResult<i64> {
        self.inner.euler_characteristic().map_err(py_err)
    }

    /// Reduced Betti numbers `{degree: rank}` (nonzero only).
    fn reduced_betti(&self) -> PyResult<BTreeMap<i32, u64>> {
        Ok(ranks(&reduced_betti(&self.inner).map_err(py_err)?))
    }

    /// Torsion coefficients `{degree: [d_1, ...]}`.
    fn torsion(&self) -> PyResult<BTreeMap<i32, Vec<BigInt>>> {
        Ok(reduced_betti(&self.inner).map_err(py_err)?.torsion().clone())
    }

    fn __eq__(&self, other: &PyComplex) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Complex(vertex_count={}, f_vector={:?})", self.inner.vertex_count(), self.inner.f_vector())
    }
}

/// Polyhedral join of `(x, {∅})` over `k`, one copy of `x` per vertex of `k`.
#[pyfunction]
fn polyhedral_join_uniform(k: &PyComplex, x: &PyComplex) -> PyResult<PyComplex> {
    let family = PairFamily::uniform_empty(&x.inner, k.inner.vertex_count()).map_err(py_err)?;
    Ok(PyComplex { inner: polyhedral_join(&k.inner, &family).map_err(py_err)? })
}

#[pyfunction]
fn f_closed(d: u32, r: u32, n: u32) -> PyResult<i128> {
    formula::f_closed(d, r, n).map_err(py_err)
}

#[pyfunction]
fn f_recur(d: u32, r: u32, n: u32) -> PyResult<i128> {
    formula::f_recur(d, r, n).map_err(py_err)
}

type PolyDict = BTreeMap<(u32, u32), BigInt>;

/// `(a_r, b_r, c_r)` as `{(i, j): coefficient}` dictionaries.
#[pyfunction]
fn abc_polynomials(r: u32) -> (PolyDict, PolyDict, PolyDict) {
    let dict = |p: &formula::BivariatePoly| p.terms().map(|(&k, c)| (k, c.clone())).collect();
    let (a, b, c) = formula::abc_polynomials(r);
    (dict(&a), dict(&b), dict(&c))
}

/// Run one case given as JSON (e.g. `{"theorem": "k2-join", "g": "P5", "d": 1}`);
/// returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (case_json, budget=None))]
fn verify_case(py: Python<'_>, case_json: &str, budget: Option<usize>) -> PyResult<String> {
    let case: VerificationCase =
        serde_json::from_str(case_json).map_err(|e| PyValueError::new_err(format!("bad case: {e}")))?;
    let report = py.detach(|| verify::run_case(&case, budget)).map_err(py_err)?;
    serde_json::to_string(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Run a sweep configuration (JSON text); returns `(exit_code, reports_json)`.
#[pyfunction]
fn run_sweep(py: Python<'_>, config_json: &str) -> PyResult<(i32, String)> {
    let config = SweepConfig::parse(config_json, false).map_err(py_err)?;
    let outcome = py.detach(|| verify::run_sweep(&config)).map_err(py_err)?;
    let json = verify::reports_to_json(&outcome.reports).map_err(py_err)?;
    Ok((outcome.exit_code(), json))
}

#[pymodule]
fn polyjoin(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(polyhedral_join_uniform, m)?)?;
    m.add_function(wrap_pyfunction!(f_closed, m)?)?;
    m.add_function(wrap_pyfunction!(f_recur, m)?)?;
    m.add_function(wrap_pyfunction!(abc_polynomials, m)?)?;
    m.add_function(wrap_pyfunction!(verify_case, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    Ok(())
}

//! Python bindings for mtzv.
//!
//! Exact values cross the boundary as `fractions.Fraction`; combinations as
//! dicts from argument tuples to `Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use mtzv_core::render::{render, OutputFormat};
use mtzv_core::{self as core, ConvergenceQuery, MzvCombination, Rational};

fn to_py_err(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((q.to_fraction_string(),))
}

fn combination_to_dict<'py>(py: Python<'py>, c: &MzvCombination) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (key, coeff) in c {
        out.set_item(PyTuple::new(py, key.args())?, fraction(py, coeff)?)?;
    }
    Ok(out)
}

/// Accepts ints, `fractions.Fraction` and strings like `"3/2"`.
fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_str()?.parse().map_err(to_py_err)
}

/// Arguments `(s_1, ..., s_r; s)` of a Mordell-Tornheim zeta value.
#[pyclass(name = "MTIndex", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyMtIndex(core::MtIndex);

#[pymethods]
impl PyMtIndex {
    #[new]
    fn new(args: Vec<u32>, last: u32) -> PyResult<Self> {
        core::MtIndex::new(args, last)
            .map(PyMtIndex)
            .map_err(to_py_err)
    }

    /// Parses a `T(s1,...,sr;s)` literal.
    #[staticmethod]
    fn parse(literal: &str) -> PyResult<Self> {
        core::syntax::parse_mt(literal)
            .map(PyMtIndex)
            .map_err(to_py_err)
    }

    #[getter]
    fn args(&self) -> Vec<u32> {
        self.0.args().to_vec()
    }

    #[getter]
    fn last(&self) -> u32 {
        self.0.last()
    }

    #[getter]
    fn weight(&self) -> u32 {
        self.0.weight()
    }

    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

/// Arguments of a multiple zeta value, largest summation variable first.
#[pyclass(name = "MZVIndex", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyMzvIndex(core::MzvIndex);

#[pymethods]
impl PyMzvIndex {
    #[new]
    fn new(args: Vec<u32>) -> PyResult<Self> {
        core::MzvIndex::new(args).map(PyMzvIndex).map_err(to_py_err)
    }

    #[staticmethod]
    fn parse(literal: &str) -> PyResult<Self> {
        core::syntax::parse_mzv(literal)
            .map(PyMzvIndex)
            .map_err(to_py_err)
    }

    #[getter]
    fn args(&self) -> Vec<u32> {
        self.0.args().to_vec()
    }

    #[getter]
    fn weight(&self) -> u32 {
        self.0.weight()
    }

    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    #[getter]
    fn admissible(&self) -> bool {
        self.0.is_admissible()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

#[derive(FromPyObject)]
enum MtArg {
    Index(PyMtIndex),
    Literal(String),
}

impl MtArg {
    fn resolve(self) -> PyResult<core::MtIndex> {
        match self {
            MtArg::Index(t) => Ok(t.0),
            MtArg::Literal(s) => core::syntax::parse_mt(&s).map_err(to_py_err),
        }
    }
}

#[derive(FromPyObject)]
enum MzvArg {
    Index(PyMzvIndex),
    Literal(String),
}

impl MzvArg {
    fn resolve(self) -> PyResult<core::MzvIndex> {
        match self {
            MzvArg::Index(z) => Ok(z.0),
            MzvArg::Literal(s) => core::syntax::parse_mzv(&s).map_err(to_py_err),
        }
    }
}

/// Reduces an MT value to `{zeta_args: Fraction}`.
#[pyfunction]
fn reduce<'py>(py: Python<'py>, t: MtArg) -> PyResult<Bound<'py, PyDict>> {
    combination_to_dict(py, &core::reduce(&t.resolve()?))
}

/// Reduces and renders as `"plain"`, `"latex"` or `"json"`.
#[pyfunction]
#[pyo3(signature = (t, format = "plain"))]
fn reduce_rendered(t: MtArg, format: &str) -> PyResult<String> {
    let t = t.resolve()?;
    let format: OutputFormat = format.parse().map_err(PyValueError::new_err)?;
    Ok(render(&t.to_string(), &core::reduce(&t), format))
}

#[pyfunction]
fn closed_form_ones<'py>(py: Python<'py>, r: usize, s: u32) -> PyResult<Bound<'py, PyDict>> {
    combination_to_dict(py, &core::closed_form_ones(r, s).map_err(to_py_err)?)
}

#[pyfunction]
fn product_to_mzv<'py>(py: Python<'py>, s: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    combination_to_dict(py, &core::product_to_mzv(&s).map_err(to_py_err)?)
}

#[pyfunction]
fn multinomial(s_pivot: u32, a: Vec<u32>) -> PyResult<String> {
    // as a decimal string; callers wrap it in int()
    core::multinomial_m(s_pivot, &a)
        .map(|m| m.to_string())
        .map_err(to_py_err)
}

#[pyfunction]
fn lemma_identity_holds(x: Vec<Bound<'_, PyAny>>, s: Vec<u32>) -> PyResult<bool> {
    let x = x.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
    core::lemma_identity_holds(&x, &s).map_err(to_py_err)
}

#[pyfunction]
fn truncated_mt<'py>(py: Python<'py>, t: MtArg, n: u64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &core::truncated_mt(&t.resolve()?, n))
}

#[pyfunction]
fn truncated_mzv<'py>(py: Python<'py>, z: MzvArg, n: u64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &core::truncated_mzv(&z.resolve()?, n))
}

type CheckRow<'py> = (u64, Bound<'py, PyAny>, Bound<'py, PyAny>);

/// Returns `(verdict, [(N, lhs, rhs), ...])`.
#[pyfunction]
fn verify<'py>(
    py: Python<'py>,
    t: MtArg,
    cutoffs: Vec<u64>,
) -> PyResult<(bool, Vec<CheckRow<'py>>)> {
    let report = core::verify_reduction(&t.resolve()?, &cutoffs).map_err(to_py_err)?;
    let checks = report
        .checks
        .iter()
        .map(|c| Ok((c.cutoff, fraction(py, &c.lhs)?, fraction(py, &c.rhs)?)))
        .collect::<PyResult<Vec<_>>>()?;
    Ok((report.verdict, checks))
}

/// Returns `(value, error_bound, cutoff)`.
#[pyfunction]
#[pyo3(signature = (z, eps = 1e-8))]
fn eval_mzv(z: MzvArg, eps: f64) -> PyResult<(f64, f64, u64)> {
    let est = core::eval_mzv_float(&z.resolve()?, eps).map_err(to_py_err)?;
    Ok((est.value, est.error_bound, est.cutoff))
}

#[pyfunction]
#[pyo3(signature = (t, eps = 1e-8))]
fn eval_mt(t: MtArg, eps: f64) -> PyResult<(f64, f64, u64)> {
    let est = core::eval_mt_float(&t.resolve()?, eps).map_err(to_py_err)?;
    Ok((est.value, est.error_bound, est.cutoff))
}

/// First failing `k`, or `None` when absolute convergence is certified.
/// Pass `sigma` for a Mordell-Tornheim query.
#[pyfunction]
#[pyo3(signature = (sigmas, sigma = None))]
fn convergence_failure(
    sigmas: Vec<Bound<'_, PyAny>>,
    sigma: Option<Bound<'_, PyAny>>,
) -> PyResult<Option<usize>> {
    let query = ConvergenceQuery {
        sigmas: sigmas.iter().map(to_rational).collect::<PyResult<_>>()?,
        sigma_last: sigma.as_ref().map(to_rational).transpose()?,
    };
    Ok(query.first_failing_k())
}

#[pyfunction]
fn opposite_parity(weight: u32, depth: usize) -> bool {
    core::opposite_parity(weight, depth)
}

#[pymodule]
fn mtzv(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMtIndex>()?;
    m.add_class::<PyMzvIndex>()?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_rendered, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_ones, m)?)?;
    m.add_function(wrap_pyfunction!(product_to_mzv, m)?)?;
    m.add_function(wrap_pyfunction!(multinomial, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_identity_holds, m)?)?;
    m.add_function(wrap_pyfunction!(truncated_mt, m)?)?;
    m.add_function(wrap_pyfunction!(truncated_mzv, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(eval_mzv, m)?)?;
    m.add_function(wrap_pyfunction!(eval_mt, m)?)?;
    m.add_function(wrap_pyfunction!(convergence_failure, m)?)?;
    m.add_function(wrap_pyfunction!(opposite_parity, m)?)?;
    Ok(())
}

//! Python bindings. Rows are lists of signed integers; the first row need not
//! be the identity, instances are always renumbered.

use std::collections::HashMap;

use common_intervals::oracle::oracle as brute_force;
use common_intervals::profile::{compute_inf as inf, compute_sup as sup, QuerySet};
use common_intervals::{run, validate, IntervalClass, IntervalReport, ProblemInstance};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_class(name: &str) -> PyResult<IntervalClass> {
    name.parse().map_err(value_error)
}

/// A validated, renumbered set of signed permutations.
#[pyclass(name = "Instance", frozen)]
struct PyInstance {
    inner: ProblemInstance,
}

#[pymethods]
impl PyInstance {
    /// `cls` only matters for its preconditions: the conserved classes need
    /// every row to start with +1 and end with +n.
    #[new]
    #[pyo3(signature = (rows, cls = "common"))]
    fn new(rows: Vec<Vec<i64>>, cls: &str) -> PyResult<Self> {
        let inner = validate(&rows, parse_class(cls)?).map_err(value_error)?;
        Ok(PyInstance { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    /// Renumbered rows; the first is `[1, 2, ..., n]`.
    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.perms().iter().map(|p| p.to_signed()).collect()
    }

    fn supports(&self, cls: &str) -> PyResult<bool> {
        Ok(self.inner.supports(parse_class(cls)?))
    }

    #[pyo3(signature = (cls = "common"))]
    fn search(&self, cls: &str) -> PyResult<PyReport> {
        let report = run(&self.inner, parse_class(cls)?).map_err(value_error)?;
        Ok(PyReport { inner: report })
    }

    /// Brute-force answer, for n up to 64.
    #[pyo3(signature = (cls = "common"))]
    fn oracle(&self, cls: &str) -> PyResult<Vec<(usize, usize)>> {
        let found = brute_force(&self.inner.denormalized(), parse_class(cls)?).map_err(value_error)?;
        Ok(found.intervals.iter().map(|iv| (iv.t, iv.x)).collect())
    }

    fn __repr__(&self) -> String {
        format!("Instance(n={}, k={})", self.inner.n(), self.inner.k())
    }
}

#[pyclass(name = "Report", frozen)]
struct PyReport {
    inner: IntervalReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn cls(&self) -> &'static str {
        self.inner.class.name()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    /// `(t, x)` pairs in emission order.
    #[getter]
    fn intervals(&self) -> Vec<(usize, usize)> {
        self.inner.intervals.iter().map(|iv| (iv.t, iv.x)).collect()
    }

    #[getter]
    fn count(&self) -> usize {
        self.inner.count()
    }

    #[getter]
    fn op_counters(&self) -> HashMap<&'static str, u64> {
        let c = self.inner.op_counters;
        HashMap::from([("push_l", c.push_l), ("push_r", c.push_r), ("pop_l", c.pop_l), ("pop_r", c.pop_r)])
    }

    fn __len__(&self) -> usize {
        self.inner.count()
    }

    fn __repr__(&self) -> String {
        format!("Report(cls={:?}, count={})", self.inner.class.name(), self.inner.count())
    }
}

/// Intervals of one class as `(t, x)` pairs, in positions of the first row.
#[pyfunction]
#[pyo3(signature = (rows, cls = "common"))]
fn find_intervals(rows: Vec<Vec<i64>>, cls: &str) -> PyResult<Vec<(usize, usize)>> {
    let class = parse_class(cls)?;
    let inst = validate(&rows, class).map_err(value_error)?;
    let report = run(&inst, class).map_err(value_error)?;
    Ok(report.intervals.iter().map(|iv| (iv.t, iv.x)).collect())
}

/// Minimum of `p[q1..=q2]` for each 1-based query; `q1 = 0` reads a sentinel `n + 1`.
#[pyfunction]
fn compute_inf(p: Vec<usize>, q: Vec<(usize, usize)>) -> PyResult<Vec<usize>> {
    inf(&p, &QuerySet::new(q)).map_err(value_error)
}

/// Maximum of `p[q1..=q2]` for each 1-based query; `q1 = 0` reads a sentinel `0`.
#[pyfunction]
fn compute_sup(p: Vec<usize>, q: Vec<(usize, usize)>) -> PyResult<Vec<usize>> {
    sup(&p, &QuerySet::new(q)).map_err(value_error)
}

#[pyfunction]
fn classes() -> Vec<&'static str> {
    IntervalClass::ALL.iter().map(|c| c.name()).collect()
}

#[pymodule]
fn common_intervals_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(find_intervals, m)?)?;
    m.add_function(wrap_pyfunction!(compute_inf, m)?)?;
    m.add_function(wrap_pyfunction!(compute_sup, m)?)?;
    m.add_function(wrap_pyfunction!(classes, m)?)?;
    Ok(())
}

//! Python bindings: `import pyivtrnn`.

use ivtrnn::cli::{self, DisplayOptions, Format, ProblemFile, ReproduceTable, WeightOverrides};
use ivtrnn::reference::Regime;
use ivtrnn::{Heights, Ivtrnn, NeutrosophicOps, Trapezoid, Trnn, WeightMode, WeightVector};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn trapezoid(v: [f64; 4]) -> PyResult<Trapezoid> {
    Trapezoid::new(v[0], v[1], v[2], v[3]).map_err(err)
}

#[pyclass(name = "Trnn", module = "pyivtrnn", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyTrnn(Trnn);

#[pymethods]
impl PyTrnn {
    #[new]
    #[pyo3(signature = (truth, indeterminacy, falsity, heights = (1.0, 0.0, 0.0)))]
    fn new(truth: [f64; 4], indeterminacy: [f64; 4], falsity: [f64; 4], heights: (f64, f64, f64)) -> PyResult<Self> {
        let h = Heights::new(heights.0, heights.1, heights.2).map_err(err)?;
        Trnn::with_heights(trapezoid(truth)?, trapezoid(indeterminacy)?, trapezoid(falsity)?, h).map(Self).map_err(err)
    }

    #[getter]
    fn truth(&self) -> [f64; 4] {
        self.0.truth().components()
    }

    #[getter]
    fn indeterminacy(&self) -> [f64; 4] {
        self.0.indeterminacy().components()
    }

    #[getter]
    fn falsity(&self) -> [f64; 4] {
        self.0.falsity().components()
    }

    #[getter]
    fn heights(&self) -> (f64, f64, f64) {
        let h = self.0.heights();
        (h.truth, h.indeterminacy, h.falsity)
    }

    fn membership(&self, x: f64) -> (f64, f64, f64) {
        let [t, i, f] = ivtrnn::Channel::ALL.map(|ch| self.0.membership(x, ch));
        (t, i, f)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(self.0.oplus(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(self.0.otimes(&other.0))
    }

    fn scale(&self, l: f64) -> PyResult<Self> {
        self.0.scale(l).map(Self).map_err(err)
    }

    fn __pow__(&self, l: f64, _modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        self.0.pow(l).map(Self).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Trnn{}", self.0)
    }
}

#[pyclass(name = "Ivtrnn", module = "pyivtrnn", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyIvtrnn(Ivtrnn);

#[pymethods]
impl PyIvtrnn {
    #[new]
    #[pyo3(signature = (lower, upper = None))]
    fn new(lower: &PyTrnn, upper: Option<&PyTrnn>) -> Self {
        Self(Ivtrnn::new(lower.0, upper.unwrap_or(lower).0))
    }

    #[staticmethod]
    fn largest() -> Self {
        Self(Ivtrnn::largest())
    }

    #[staticmethod]
    fn smallest() -> Self {
        Self(Ivtrnn::smallest())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let lit: cli::IvtrnnLiteral = serde_json::from_str(text).map_err(err)?;
        lit.validate().map(Self).map_err(err)
    }

    #[allow(clippy::wrong_self_convention)]
    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("number serializes")
    }

    #[getter]
    fn lower(&self) -> PyTrnn {
        PyTrnn(self.0.lower)
    }

    #[getter]
    fn upper(&self) -> PyTrnn {
        PyTrnn(self.0.upper)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(self.0.oplus(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(self.0.otimes(&other.0))
    }

    fn scale(&self, l: f64) -> PyResult<Self> {
        self.0.scale(l).map(Self).map_err(err)
    }

    fn __pow__(&self, l: f64, _modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        self.0.pow(l).map(Self).map_err(err)
    }

    fn score(&self) -> f64 {
        ivtrnn::score(&self.0)
    }

    fn accuracy(&self) -> f64 {
        ivtrnn::accuracy(&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Ivtrnn{}", self.0)
    }
}

fn parse_regime(name: &str) -> PyResult<Regime> {
    match name {
        "stated" => Ok(Regime::Stated),
        "uniform025" => Ok(Regime::Uniform025),
        other => Err(err(format!("unknown regime {other:?}"))),
    }
}

fn weight_vector(weights: Vec<f64>, relaxed: bool) -> PyResult<WeightVector> {
    WeightVector::new(weights, if relaxed { WeightMode::Relaxed } else { WeightMode::Strict }).map_err(err)
}

fn unwrap_all(numbers: Vec<PyRef<'_, PyIvtrnn>>) -> Vec<Ivtrnn> {
    numbers.iter().map(|n| n.0).collect()
}

#[pyfunction]
fn score(n: &PyIvtrnn) -> f64 {
    ivtrnn::score(&n.0)
}

#[pyfunction]
fn accuracy(n: &PyIvtrnn) -> f64 {
    ivtrnn::accuracy(&n.0)
}

/// -1, 0 or 1 by score, then accuracy.
#[pyfunction]
fn compare(x: &PyIvtrnn, y: &PyIvtrnn) -> i32 {
    ivtrnn::compare(&x.0, &y.0) as i32
}

#[pyfunction]
#[pyo3(signature = (numbers, weights, relaxed = false))]
fn ivtrnwaa(numbers: Vec<PyRef<'_, PyIvtrnn>>, weights: Vec<f64>, relaxed: bool) -> PyResult<PyIvtrnn> {
    let w = weight_vector(weights, relaxed)?;
    ivtrnn::ivtrnwaa(&unwrap_all(numbers), &w).map(PyIvtrnn).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (numbers, weights, relaxed = false))]
fn ivtrnwaa_pairwise(numbers: Vec<PyRef<'_, PyIvtrnn>>, weights: Vec<f64>, relaxed: bool) -> PyResult<PyIvtrnn> {
    let w = weight_vector(weights, relaxed)?;
    ivtrnn::ivtrnwaa_pairwise_oracle(&unwrap_all(numbers), &w).map(PyIvtrnn).map_err(err)
}

/// Ranks a problem file given as JSON text; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (problem_json, weights = None, allow_unnormalized_weights = false))]
fn rank(problem_json: &str, weights: Option<Vec<f64>>, allow_unnormalized_weights: bool) -> PyResult<String> {
    let overrides = WeightOverrides { weights, allow_unnormalized: allow_unnormalized_weights };
    let display = DisplayOptions { format: Format::Json, precision: None };
    cli::cmd_rank(problem_json, &overrides, display).map(|o| o.stdout).map_err(err)
}

/// Recomputes table 4 or 5 of the bundled example; returns JSON.
#[pyfunction]
#[pyo3(signature = (table, regime = "uniform025"))]
fn reproduce(table: u8, regime: &str) -> PyResult<String> {
    let table = ReproduceTable::from_number(table).ok_or_else(|| err(format!("no table {table}")))?;
    let regime = parse_regime(regime)?;
    let display = DisplayOptions { format: Format::Json, precision: None };
    cli::cmd_reproduce(table, regime, display).map(|o| o.stdout).map_err(err)
}

/// The bundled example as problem-file JSON.
#[pyfunction]
#[pyo3(signature = (regime = "uniform025"))]
fn reference_problem(regime: &str) -> PyResult<String> {
    Ok(ProblemFile::reference(parse_regime(regime)?).to_json())
}

#[pymodule]
fn pyivtrnn(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTrnn>()?;
    m.add_class::<PyIvtrnn>()?;
    m.add_function(wrap_pyfunction!(score, m)?)?;
    m.add_function(wrap_pyfunction!(accuracy, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(ivtrnwaa, m)?)?;
    m.add_function(wrap_pyfunction!(ivtrnwaa_pairwise, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add_function(wrap_pyfunction!(reference_problem, m)?)?;
    Ok(())
}

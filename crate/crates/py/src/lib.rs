//! Python bindings: `import schull`.

use pyo3::exceptions::{PyIndexError, PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

use stochastic_hull::complexity::{self, HyperplaneStat};
use stochastic_hull::diameter::{self, Graph};
use stochastic_hull::oracle::oracle_expectation;
use stochastic_hull::width::{self, FprasConfig};
use stochastic_hull::{Error, Point, StochasticDataset, Statistic};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::UnsupportedDimension { .. } | Error::TooLarge { .. } => PyNotImplementedError::new_err(e.to_string()),
        Error::InvalidIndex { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

type StatTuple = (Vec<usize>, f64, f64, Vec<f64>);

fn points(rows: Vec<Vec<f64>>) -> PyResult<Vec<Point>> {
    rows.into_iter().map(|r| Point::new(r).map_err(py_err)).collect()
}

/// Points with independent existence probabilities.
#[pyclass(name = "Dataset", frozen, module = "schull")]
pub struct PyDataset {
    inner: StochasticDataset,
}

#[pymethods]
impl PyDataset {
    #[new]
    fn new(points: Vec<Vec<f64>>, probs: Vec<f64>) -> PyResult<Self> {
        StochasticDataset::from_rows(points, probs).map(|inner| PyDataset { inner }).map_err(py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        StochasticDataset::from_json(text).map(|inner| PyDataset { inner }).map_err(py_err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn points(&self) -> Vec<Vec<f64>> {
        self.inner.points().iter().map(|p| p.coords().to_vec()).collect()
    }

    #[getter]
    fn probs(&self) -> Vec<f64> {
        self.inner.probs().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Dataset(n={}, dim={})", self.inner.len(), self.inner.dim())
    }

    /// Witness-sequence estimate; never above the true expected diameter.
    fn expected_diameter(&self) -> f64 {
        diameter::expected_diameter_witness(&self.inner)
    }

    fn expected_diameter_two_approx(&self) -> f64 {
        diameter::expected_diameter_two_approx(&self.inner)
    }

    fn expected_width(&self) -> PyResult<f64> {
        width::expected_width_witness(&self.inner).map_err(py_err)
    }

    #[pyo3(signature = (epsilon, seed = 0, gamma = None))]
    fn expected_width_fpras(&self, py: Python<'_>, epsilon: f64, seed: u64, gamma: Option<f64>) -> PyResult<f64> {
        let mut cfg = FprasConfig::new(epsilon, seed);
        cfg.gamma_override = gamma;
        py.detach(|| width::expected_width_fpras(&self.inner, &cfg)).map_err(py_err)
    }

    fn expected_complexity(&self) -> PyResult<f64> {
        complexity::expected_complexity(&self.inner).map_err(py_err)
    }

    /// `(lambda1, lambda2)`: expected numbers of facets and ridges.
    fn lambda_terms(&self) -> PyResult<(f64, f64)> {
        complexity::lambda_terms(&self.inner).map(|r| (r.lambda1, r.lambda2)).map_err(py_err)
    }

    fn face_prob(&self, simplex: Vec<usize>) -> PyResult<f64> {
        complexity::face_prob(&self.inner, &simplex).map_err(py_err)
    }

    fn membership_prob(&self, q: Vec<f64>) -> PyResult<f64> {
        match q.len() {
            1 => complexity::membership_prob_1d(&self.inner, q[0]),
            _ => Point::new(q).and_then(|q| complexity::membership_prob_2d(&self.inner, &q)),
        }
        .map_err(py_err)
    }

    /// One `(on_plane, p_pos, p_neg, normal)` tuple per hyperplane spanned
    /// by `dim` points.
    fn hyperplane_stats(&self) -> PyResult<Vec<StatTuple>> {
        let stats = complexity::s_statistics_collect(&self.inner).map_err(py_err)?;
        Ok(stats.into_iter().map(|HyperplaneStat { on_plane, p_pos, p_neg, normal }| (on_plane, p_pos, p_neg, normal)).collect())
    }

    /// Exact expectation by enumerating all realizations.
    fn oracle(&self, statistic: &str) -> PyResult<f64> {
        let stat: Statistic = statistic.parse().map_err(py_err)?;
        oracle_expectation(&self.inner, stat).map_err(py_err)
    }
}

/// Witness sequence `(v, u, w, y, z)` as point indices, and its `Λ`.
#[pyfunction]
fn witness_sequence(points: Vec<Vec<f64>>) -> PyResult<([usize; 5], f64)> {
    let s = diameter::witness_sequence(&self::points(points)?).map_err(py_err)?;
    Ok((s.indices, s.lambda))
}

#[pyfunction]
fn witness_simplex(points: Vec<Vec<f64>>) -> PyResult<Vec<usize>> {
    width::witness_simplex(&self::points(points)?).map(|s| s.vertex_list).map_err(py_err)
}

#[pyfunction]
fn simplex_width(vertices: Vec<Vec<f64>>) -> PyResult<f64> {
    width::simplex_width(&points(vertices)?).map_err(py_err)
}

/// Hard instance for a graph on `n` vertices with 0-based `edges`.
/// Returns `(dataset, alpha, beta)`.
#[pyfunction]
fn hardness_instance(n: usize, edges: Vec<(usize, usize)>) -> PyResult<(PyDataset, f64, f64)> {
    let graph = Graph::new(n, edges).map_err(py_err)?;
    let inst = diameter::hardness_instance(&graph).map_err(py_err)?;
    Ok((PyDataset { inner: inst.dataset }, inst.alpha, inst.beta))
}

#[pymodule]
fn schull(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDataset>()?;
    m.add_function(wrap_pyfunction!(witness_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(witness_simplex, m)?)?;
    m.add_function(wrap_pyfunction!(simplex_width, m)?)?;
    m.add_function(wrap_pyfunction!(hardness_instance, m)?)?;
    m.add("WITNESS_FACTOR", diameter::WITNESS_FACTOR)?;
    Ok(())
}

//! Python bindings for the holocurv library.

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

use ::holocurv::cli::{self, Cache, CliError};
use ::holocurv::exactq::fmt_q;
use ::holocurv::lorentz::TypeParams;
use ::holocurv::repkit::{catalog, OrthRep, RepJson};

fn py_err(e: CliError) -> PyErr {
    match e {
        CliError::Precondition(m) => PyArithmeticError::new_err(m),
        CliError::Usage(m) | CliError::Invalid(m) => PyValueError::new_err(m),
    }
}

fn to_py(py: Python<'_>, json: String) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (json,))?.unbind())
}

fn cache_for(dir: Option<String>) -> Cache {
    dir.map(Cache::at).unwrap_or_else(Cache::disabled)
}

/// An orthogonal representation h ⊂ so(E) given by exact generators.
#[pyclass(name = "Rep", frozen, module = "holocurv")]
struct PyRep {
    inner: OrthRep,
}

#[pymethods]
impl PyRep {
    /// Catalog entry by name or alias.
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let inner = catalog::build(name).map_err(|e| py_err(e.into()))?;
        Ok(PyRep { inner })
    }

    /// `catalog:NAME`, `file:PATH`, a JSON file path or a catalog name.
    #[staticmethod]
    fn resolve(reference: &str) -> PyResult<Self> {
        Ok(PyRep {
            inner: cli::resolve_rep(reference).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let j: RepJson = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let inner = OrthRep::from_json(&j).map_err(|e| py_err(e.into()))?;
        Ok(PyRep { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("rep serializes")
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Generators as nested lists of rational strings.
    fn generators(&self) -> Vec<Vec<Vec<String>>> {
        self.inner
            .generators()
            .iter()
            .map(|g| (0..g.rows()).map(|i| g.row(i).iter().map(fmt_q).collect()).collect())
            .collect()
    }

    #[pyo3(signature = (basis=false, cache_dir=None))]
    fn pspace(&self, py: Python<'_>, basis: bool, cache_dir: Option<String>) -> PyResult<Py<PyAny>> {
        let r = cli::space_report(&self.inner, false, basis, &cache_for(cache_dir));
        to_py(py, r.to_json())
    }

    #[pyo3(signature = (basis=false, cache_dir=None))]
    fn rspace(&self, py: Python<'_>, basis: bool, cache_dir: Option<String>) -> PyResult<Py<PyAny>> {
        let r = cli::space_report(&self.inner, true, basis, &cache_for(cache_dir));
        to_py(py, r.to_json())
    }

    fn __repr__(&self) -> String {
        format!(
            "Rep({:?}, n={}, dim={})",
            self.inner.name(),
            self.inner.n(),
            self.inner.dim()
        )
    }
}

/// Catalog names in table order.
#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::entries().iter().map(|e| e.name).collect()
}

/// Weak-Berger table rows for catalog entries with n ≤ n_max.
#[pyfunction]
#[pyo3(signature = (n_max=9, cache_dir=None))]
fn table<'py>(py: Python<'py>, n_max: usize, cache_dir: Option<String>) -> PyResult<Bound<'py, PyList>> {
    let rows = cli::table_rows(n_max, &cache_for(cache_dir)).map_err(py_err)?;
    let items = rows
        .iter()
        .map(|r| to_py(py, serde_json::to_string(r).expect("row serializes")))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Report for a type 1–4 algebra in so(1, n+1) built from h.
#[pyfunction]
#[pyo3(signature = (ty, h, phi=None, psi=None, e0_dim=0, verify_thm3=false, berger=false, cache_dir=None))]
#[allow(clippy::too_many_arguments)]
fn lorentz(
    py: Python<'_>,
    ty: u8,
    h: &PyRep,
    phi: Option<&str>,
    psi: Option<&str>,
    e0_dim: usize,
    verify_thm3: bool,
    berger: bool,
    cache_dir: Option<String>,
) -> PyResult<Py<PyAny>> {
    let params = TypeParams {
        phi: phi.map(cli::parse_vector).transpose().map_err(py_err)?,
        psi: psi.map(cli::parse_matrix).transpose().map_err(py_err)?,
        e0_dim,
    };
    let r = cli::lorentz_report(&h.inner, ty, params, verify_thm3, berger, &cache_for(cache_dir)).map_err(py_err)?;
    to_py(py, r.to_json())
}

/// Closedness of the torus subgroup spanned by `basis` over ℚ[x]/(min_poly).
#[pyfunction]
#[pyo3(signature = (basis, min_poly="x", dim=None))]
fn torus_closed(py: Python<'_>, basis: &str, min_poly: &str, dim: Option<usize>) -> PyResult<Py<PyAny>> {
    let r = cli::torus_report(min_poly, basis, dim).map_err(py_err)?;
    to_py(py, serde_json::to_string(&r).expect("report serializes"))
}

#[pymodule]
fn holocurv(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRep>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(lorentz, m)?)?;
    m.add_function(wrap_pyfunction!(torus_closed, m)?)?;
    Ok(())
}

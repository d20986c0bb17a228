//! Python bindings. Rationals cross the boundary as strings such as
//! `"-3/2"` (inputs may also be ints or `fractions.Fraction`), series as
//! lists of coefficient strings, partitions as lists of ints.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use wronski::combinat::{pieri_successors, syt_count_hook, Partition};
use wronski::odecore::UniversalContext;
use wronski::schurring::{self, GrassmannRing};
use wronski::wronskian::{derivative_expansion, generalized_wronskian_to, giambelli_certificate, universal_tuple, wronskian_span};
use wronski::{DividedSeries, Error, Polynomial, Rational, Substitution, SymbolTable};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for wronski::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn rationals(values: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    values.iter().map(|v| v.str()?.to_cow()?.parse::<Rational>().py()).collect()
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).py()
}

fn series_strings(s: &DividedSeries<Polynomial>) -> Vec<String> {
    s.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Exact expansion in the Schur basis.
#[pyclass(name = "SchurExpansion", module = "pywronski", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PySchurExpansion(schurring::SchurExpansion);

#[pymethods]
impl PySchurExpansion {
    /// `[(partition, coefficient), ...]` in reverse lexicographic order.
    fn terms(&self) -> Vec<(Vec<u32>, String)> {
        self.0.terms().map(|(l, c)| (l.parts().to_vec(), c.to_string())).collect()
    }

    fn coefficient(&self, parts: Vec<u32>) -> PyResult<String> {
        Ok(self.0.coefficient(&partition(parts)?).to_string())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("expansions serialize")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PySchurExpansion).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SchurExpansion({})", self.0)
    }
}

/// The universal equation of order `rank + 1`, truncated at `order`.
#[pyclass(name = "UniversalContext", module = "pywronski", frozen)]
pub struct PyContext(UniversalContext);

impl PyContext {
    fn spec(&self, values: &[Bound<'_, PyAny>]) -> PyResult<Substitution<Polynomial>> {
        let q = SymbolTable::empty();
        let images = rationals(values)?.into_iter().map(|v| Polynomial::constant(&q, v)).collect();
        self.0.specialization(images).py()
    }
}

#[pymethods]
impl PyContext {
    #[new]
    fn new(rank: usize, order: usize) -> PyResult<Self> {
        UniversalContext::new(rank, order).map(PyContext).py()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn h(&self, j: i64) -> String {
        self.0.h(j).to_string()
    }

    fn h_sequence(&self, order: usize) -> Vec<String> {
        self.0.h_sequence(order).values().iter().map(|p| p.to_string()).collect()
    }

    /// `u_0..u_r` in the e's, or specialized to rational `spec` values.
    #[pyo3(signature = (order, spec = None))]
    fn solutions(&self, order: usize, spec: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<Vec<String>>> {
        let sols = match spec {
            None => self.0.universal_solutions(order).py()?,
            Some(values) => self.0.specialize_system(&self.spec(&values)?, order).py()?,
        };
        Ok(sols.iter().map(series_strings).collect())
    }

    /// `(lambdas, series)` for rational initial values `D^i y(0) = inits[i]`.
    #[pyo3(signature = (inits, order, spec = None))]
    fn cauchy_solve(
        &self,
        inits: Vec<Bound<'_, PyAny>>,
        order: usize,
        spec: Option<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<(Vec<String>, Vec<String>)> {
        let data = self.0.rational_initial_conditions(&rationals(&inits)?).py()?;
        let mut sol = self.0.cauchy_solve(&data, order).py()?;
        if let Some(values) = spec {
            let s = self.spec(&values)?;
            sol.lambdas = sol.lambdas.iter().map(|l| l.substitute(&s)).collect::<wronski::Result<_>>().py()?;
            sol.series = sol.series.substitute(&s).py()?;
        }
        Ok((sol.lambdas.iter().map(|l| l.to_string()).collect(), series_strings(&sol.series)))
    }

    /// Solution of `U(D) y = f` with rational `f` coefficients.
    #[pyo3(signature = (rhs, inits, order, spec = None))]
    fn solve_nonhomogeneous(
        &self,
        rhs: Vec<Bound<'_, PyAny>>,
        inits: Vec<Bound<'_, PyAny>>,
        order: usize,
        spec: Option<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<Vec<String>> {
        let f = rationals(&rhs)?.into_iter().map(|c| Polynomial::constant(self.0.symbols(), c)).collect();
        let f = DividedSeries::new(f).py()?;
        let data = self.0.rational_initial_conditions(&rationals(&inits)?).py()?;
        let mut y = self.0.solve_nonhomogeneous(&f, &data, order).py()?;
        if let Some(values) = spec {
            y = y.substitute(&self.spec(&values)?).py()?;
        }
        Ok(series_strings(&y))
    }

    /// `W_lambda(u)` to `order`.
    #[pyo3(signature = (parts, order, spec = None))]
    fn wronskian(&self, parts: Vec<u32>, order: usize, spec: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<String>> {
        let lambda = partition(parts)?;
        let need = order + wronskian_span(&lambda, self.0.rank());
        let ctx = UniversalContext::new(self.0.rank(), need.max(self.0.rank() + 1)).py()?;
        let u = universal_tuple(&ctx, need).py()?;
        let mut w = generalized_wronskian_to(&u, &lambda, order).py()?;
        if let Some(values) = spec {
            w = w.substitute(&PyContext(ctx).spec(&values)?).py()?;
        }
        Ok(series_strings(&w))
    }

    /// `(Delta_lambda(h), verified)` for `W_lambda(u) = Delta_lambda(h) W_0(u)`.
    fn giambelli(&self, parts: Vec<u32>, order: usize) -> PyResult<(String, bool)> {
        let cert = giambelli_certificate(&self.0, &partition(parts)?, order).py()?;
        Ok((cert.ratio.to_string(), cert.verified))
    }

    /// Schur expansion of `D^k W_0 / W_0`.
    fn derivative_expansion(&self, k: usize, order: usize) -> PyResult<PySchurExpansion> {
        let d = derivative_expansion(&self.0, k, order).py()?;
        if !d.verified {
            return Err(PyRuntimeError::new_err(format!("expansion of D^{k} W0 failed to verify")));
        }
        Ok(PySchurExpansion(d.expansion.0))
    }

    fn __repr__(&self) -> String {
        format!("UniversalContext(rank={}, order={})", self.0.rank(), self.0.order())
    }
}

/// Cohomology of `G(rank, P^dim)` in the Schubert basis.
#[pyclass(name = "Grassmannian", module = "pywronski", frozen)]
pub struct PyGrassmannian(GrassmannRing);

#[pymethods]
impl PyGrassmannian {
    #[new]
    fn new(rank: usize, dim: usize) -> PyResult<Self> {
        GrassmannRing::new(rank, dim).map(PyGrassmannian).py()
    }

    #[getter]
    fn dimension(&self) -> u32 {
        self.0.dimension()
    }

    fn basis(&self) -> Vec<Vec<u32>> {
        self.0.basis().iter().map(|l| l.parts().to_vec()).collect()
    }

    fn dual(&self, parts: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(self.0.dual(&partition(parts)?).py()?.parts().to_vec())
    }

    fn product(&self, left: Vec<u32>, right: Vec<u32>) -> PyResult<PySchurExpansion> {
        let a = schurring::SchurExpansion::single(partition(left)?);
        let b = schurring::SchurExpansion::single(partition(right)?);
        self.0.product(&a, &b).map(PySchurExpansion).py()
    }

    fn degree(&self) -> PyResult<BigInt> {
        self.0.degree().py()
    }

    fn __repr__(&self) -> String {
        format!("Grassmannian(rank={}, dim={})", self.0.rank(), self.0.rank() + self.0.cols() as usize)
    }
}

#[pyfunction]
fn syt_count(parts: Vec<u32>) -> PyResult<BigUint> {
    Ok(syt_count_hook(&partition(parts)?).py()?.count)
}

#[pyfunction]
#[pyo3(signature = (parts, k, rank, dim = None))]
fn pieri(parts: Vec<u32>, k: u32, rank: usize, dim: Option<usize>) -> PyResult<Vec<Vec<u32>>> {
    let bound = dim.map(|d| GrassmannRing::new(rank, d).map(|g| g.cols())).transpose().py()?;
    let succ = pieri_successors(&partition(parts)?, k, rank, bound).py()?;
    Ok(succ.iter().map(|l| l.parts().to_vec()).collect())
}

/// Schur expansion of a polynomial written in `h1, h2, ...`.
#[pyfunction]
fn schur_expand(poly: &str, rank: usize, max_h: usize) -> PyResult<PySchurExpansion> {
    let p = Polynomial::parse(poly, &schurring::h_symbols(max_h)).py()?;
    schurring::schur_expand(&p, rank).map(PySchurExpansion).py()
}

#[pymodule]
fn pywronski(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyContext>()?;
    m.add_class::<PySchurExpansion>()?;
    m.add_class::<PyGrassmannian>()?;
    m.add_function(wrap_pyfunction!(syt_count, m)?)?;
    m.add_function(wrap_pyfunction!(pieri, m)?)?;
    m.add_function(wrap_pyfunction!(schur_expand, m)?)?;
    Ok(())
}

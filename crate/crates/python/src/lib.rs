//! Python bindings. The extension module is importable as `matchfield`.

use matchfield::cellular::{edge_label, graph_g, is_cointerval};
use matchfield::groebner::{attainable_initial_supports, verify_initial_ideal};
use matchfield::matching_field::{generators, matching_ideal, sort_generators, weight_rows};
use matchfield::resolution::{betti_from_certificate, betti_oracle, linear_quotients_certificate};
use matchfield::toric::{self, flatness_check, kernel_slice, plucker_quadric};
use matchfield::{Error, Monomial};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A composition of `n` into consecutive column blocks.
#[pyclass(name = "BlockStructure", module = "matchfield", frozen)]
struct PyBlockStructure {
    inner: matchfield::BlockStructure,
}

#[pymethods]
impl PyBlockStructure {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Ok(Self { inner: matchfield::BlockStructure::new(parts).map_err(py_err)? })
    }

    #[staticmethod]
    fn diagonal(n: usize) -> PyResult<Self> {
        Ok(Self { inner: matchfield::BlockStructure::diagonal(n).map_err(py_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    /// Generators `(x, y, z)` in lexicographic order of their column sets.
    fn generators(&self) -> PyResult<Vec<(usize, usize, usize)>> {
        Ok(generators(&self.inner).map_err(py_err)?.iter().map(|t| t.as_tuple()).collect())
    }

    /// Generators `(x, y, z)` in block order.
    fn sorted_generators(&self) -> PyResult<Vec<(usize, usize, usize)>> {
        Ok(sort_generators(&self.inner).map_err(py_err)?.iter().map(|t| t.as_tuple()).collect())
    }

    #[pyo3(signature = (w0 = 1))]
    fn weight_rows(&self, w0: u64) -> PyResult<(Vec<u64>, Vec<u64>, Vec<u64>)> {
        let [x, y, z] = weight_rows(&self.inner, w0).map_err(py_err)?.as_matrix();
        Ok((x, y, z))
    }

    /// Gröbner degeneration check, returned as a dict of flags and counts.
    #[pyo3(signature = (w0 = 1))]
    fn verify<'py>(&self, py: Python<'py>, w0: u64) -> PyResult<Bound<'py, PyDict>> {
        let r = verify_initial_ideal(&self.inner, w0).map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("per_minor_initial_ok", r.per_minor_initial_ok)?;
        d.set_item("s_pairs_total", r.s_pairs_total)?;
        d.set_item("s_pairs_reduced_to_zero", r.s_pairs_reduced_to_zero)?;
        d.set_item("leading_terms_match", r.leading_terms_match)?;
        d.set_item("passed", r.passed())?;
        Ok(d)
    }

    /// Betti numbers from the linear-quotient certificate in block order.
    fn betti(&self) -> PyResult<Vec<u64>> {
        let n = self.inner.n();
        let order: Vec<Monomial> =
            sort_generators(&self.inner).map_err(py_err)?.iter().map(|t| t.monomial(n)).collect();
        let cert = linear_quotients_certificate(&order);
        Ok(betti_from_certificate(&cert).map_err(py_err)?.values().to_vec())
    }

    /// Betti numbers from the lcm-lattice homology oracle.
    fn betti_oracle(&self) -> PyResult<Vec<u64>> {
        let ideal = matching_ideal(&self.inner).map_err(py_err)?;
        Ok(betti_oracle(&ideal).map_err(py_err)?.values().to_vec())
    }

    /// Edges of the relabelled hypergraph, as label strings like `"357"`.
    fn graph_g_edges(&self) -> PyResult<Vec<String>> {
        Ok(graph_g(&self.inner).map_err(py_err)?.edges().iter().map(|e| edge_label(e)).collect())
    }

    fn is_cointerval(&self) -> PyResult<bool> {
        Ok(is_cointerval(&graph_g(&self.inner).map_err(py_err)?).is_ok())
    }

    fn __repr__(&self) -> String {
        format!("BlockStructure({})", self.inner)
    }
}

/// A monomial Plücker map `p_I ↦ m_I`.
#[pyclass(name = "PluckerMap", module = "matchfield", frozen)]
struct PyPluckerMap {
    inner: toric::PluckerMap,
}

#[pymethods]
impl PyPluckerMap {
    #[staticmethod]
    fn from_blocks(a: &PyBlockStructure) -> PyResult<Self> {
        Ok(Self { inner: toric::PluckerMap::from_matching_field(&a.inner).map_err(py_err)? })
    }

    #[staticmethod]
    fn diagonal(k: usize, n: usize) -> PyResult<Self> {
        Ok(Self { inner: toric::PluckerMap::diagonal(k, n).map_err(py_err)? })
    }

    #[getter]
    fn sources(&self) -> Vec<Vec<usize>> {
        self.inner.sources().to_vec()
    }

    /// Degree-`d` kernel slice: dimension, image count and spanning binomials.
    fn kernel_slice<'py>(&self, py: Python<'py>, d: usize) -> PyResult<Bound<'py, PyDict>> {
        let s = kernel_slice(&self.inner, d).map_err(py_err)?;
        let binomials: Vec<String> = s
            .binomials
            .iter()
            .map(|(u, v)| format!("{} - {}", self.inner.display_monomial(u), self.inner.display_monomial(v)))
            .collect();
        let out = PyDict::new(py);
        out.set_item("degree", s.degree)?;
        out.set_item("monomials", s.monomials)?;
        out.set_item("images", s.images)?;
        out.set_item("dimension", s.dimension)?;
        out.set_item("new_minimal_generators", s.new_minimal_generators)?;
        out.set_item("binomials", binomials)?;
        Ok(out)
    }

    /// True when image counts match the Grassmannian Hilbert function up to `dmax`.
    fn is_flat(&self, k: usize, n: usize, dmax: usize) -> PyResult<bool> {
        Ok(flatness_check(&self.inner, k, n, dmax).map_err(py_err)?.is_flat())
    }
}

/// Dimension of the degree-`d` piece of the Plücker algebra of `Gr(k, n)`.
#[pyfunction]
fn hilbert_dim_rect(k: usize, n: usize, d: usize) -> PyResult<BigUint> {
    if k == 0 || k > n {
        return Err(PyValueError::new_err("need 1 <= k <= n"));
    }
    Ok(toric::hilbert_dim_rect(k, n, d))
}

/// Number of attainable initial supports of the Gr(2, n) Plücker quadric on columns 1..4.
#[pyfunction]
fn plucker_quadric_supports(n: usize) -> PyResult<usize> {
    let q = plucker_quadric(n, [1, 2, 3, 4]).map_err(py_err)?;
    Ok(attainable_initial_supports(&q).map_err(py_err)?.len())
}

/// All compositions of `n`, as lists of block sizes.
#[pyfunction]
fn compositions(n: usize) -> Vec<Vec<usize>> {
    matchfield::matching_field::compositions(n).iter().map(|a| a.parts().to_vec()).collect()
}

#[pymodule]
#[pyo3(name = "matchfield")]
fn matchfield_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBlockStructure>()?;
    m.add_class::<PyPluckerMap>()?;
    m.add_function(wrap_pyfunction!(hilbert_dim_rect, m)?)?;
    m.add_function(wrap_pyfunction!(plucker_quadric_supports, m)?)?;
    m.add_function(wrap_pyfunction!(compositions, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ybq::cohomology::{
    classify_cochain, coboundary_basis, cocycle_matrix, cohomology_basis, read_cocycle_with_default,
    reduced_cohomology_basis, write_cocycle, Cochain2,
};
use ybq::invariant::{yb_invariant_suite, LaurentMultiset};
use ybq::linalg::kernel_basis;
use ybq::search::enumerate_biquandles_with_limit;

fn py_err(e: ybq::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(s: &str) -> PyResult<ybq::FieldSpec> {
    s.parse().map_err(py_err)
}

fn convention(s: &str) -> PyResult<ybq::BlockConvention> {
    s.parse().map_err(py_err)
}

/// A finite biquandle given by its four operation tables.
#[pyclass(name = "Biquandle", frozen, skip_from_py_object, module = "ybq")]
#[derive(Clone)]
struct PyBiquandle(ybq::Biquandle);

#[pymethods]
impl PyBiquandle {
    /// Parses the `2n x 2n` block matrix text format.
    #[new]
    #[pyo3(signature = (text, convention = "definition"))]
    fn new(text: &str, convention: &str) -> PyResult<Self> {
        let b = ybq::read_biquandle(text, self::convention(convention)?).map_err(py_err)?;
        Ok(Self(b))
    }

    #[staticmethod]
    fn alexander(n: usize, s: i64, t: i64) -> PyResult<Self> {
        ybq::alexander_biquandle(n, s, t).map(Self).map_err(py_err)
    }

    #[staticmethod]
    fn trivial() -> Self {
        Self(ybq::Biquandle::trivial())
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn is_valid(&self) -> bool {
        self.0.is_valid()
    }

    /// Axiom failures, empty when the tables form a biquandle.
    fn validate(&self) -> Vec<String> {
        self.0.validate().failures.iter().map(ToString::to_string).collect()
    }

    /// `(a^b, a_b, a^b̄, a_b̄)` as 1-based values.
    fn ops(&self, a: usize, b: usize) -> PyResult<(usize, usize, usize, usize)> {
        let n = self.0.order();
        if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
            return Err(PyValueError::new_err(format!("elements must lie in 1..={n}")));
        }
        Ok((self.0.up(a, b), self.0.down(a, b), self.0.up_bar(a, b), self.0.down_bar(a, b)))
    }

    #[pyo3(signature = (convention = "definition"))]
    fn to_text(&self, convention: &str) -> PyResult<String> {
        Ok(ybq::write_biquandle(&self.0, self::convention(convention)?))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Biquandle(order={})", self.0.order())
    }
}

/// A signed Gauss code with `O`/`U` roles, sign suffix and `0` component separators.
#[pyclass(name = "GaussCode", frozen, skip_from_py_object, module = "ybq")]
#[derive(Clone)]
struct PyGaussCode(ybq::GaussCode);

#[pymethods]
impl PyGaussCode {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        ybq::parse_gauss_code(text).map(Self).map_err(py_err)
    }

    #[getter]
    fn n_crossings(&self) -> usize {
        self.0.n_crossings()
    }

    #[getter]
    fn n_semiarcs(&self) -> usize {
        self.0.n_semiarcs()
    }

    #[getter]
    fn n_components(&self) -> usize {
        self.0.components().len()
    }

    fn presentation(&self) -> String {
        ybq::knot_presentation(&self.0).to_string()
    }

    fn reduced_presentation(&self) -> String {
        ybq::reduce_presentation(&ybq::knot_presentation(&self.0)).presentation.to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GaussCode({:?})", self.0.to_string())
    }
}

/// A 2-cochain `φ: X × X → F`, printed in characteristic-function notation.
#[pyclass(name = "Cochain", frozen, skip_from_py_object, module = "ybq")]
#[derive(Clone)]
struct PyCochain(Cochain2);

#[pymethods]
impl PyCochain {
    /// Row-major coefficients `φ(1,1), φ(1,2), …` as ints or `"p/q"` strings.
    #[new]
    #[pyo3(signature = (order, coeffs, field = "Q"))]
    fn new(order: usize, coeffs: Vec<Bound<'_, PyAny>>, field: &str) -> PyResult<Self> {
        let f = self::field(field)?;
        let values = coeffs
            .iter()
            .map(|c| f.parse_scalar(&c.str()?.to_cow()?).map_err(py_err))
            .collect::<PyResult<Vec<_>>>()?;
        Cochain2::from_coeffs(f, order, values).map(Self).map_err(py_err)
    }

    /// Parses the `x y value` file format.
    #[staticmethod]
    #[pyo3(signature = (text, order, field = "Q"))]
    fn parse(text: &str, order: usize, field: &str) -> PyResult<Self> {
        read_cocycle_with_default(text, order, self::field(field)?).map(Self).map_err(py_err)
    }

    #[staticmethod]
    #[pyo3(signature = (order, field = "Q"))]
    fn zero(order: usize, field: &str) -> PyResult<Self> {
        Ok(Self(Cochain2::zero(self::field(field)?, order)))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field().to_string()
    }

    fn coeffs(&self) -> Vec<String> {
        self.0.coeffs().iter().map(ToString::to_string).collect()
    }

    fn value(&self, x: usize, y: usize) -> PyResult<String> {
        let n = self.0.order();
        if !(1..=n).contains(&x) || !(1..=n).contains(&y) {
            return Err(PyValueError::new_err(format!("elements must lie in 1..={n}")));
        }
        Ok(self.0.value(x, y).to_string())
    }

    fn to_text(&self) -> String {
        write_cocycle(&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Cochain({:?})", self.0.to_string())
    }
}

/// Φ_YB as a multiset of exponents.
#[pyclass(name = "Invariant", frozen, module = "ybq")]
struct PyInvariant(LaurentMultiset);

#[pymethods]
impl PyInvariant {
    /// `(exponent, multiplicity)` pairs, exponents as strings.
    fn terms(&self) -> Vec<(String, usize)> {
        self.0.terms().map(|(e, m)| (e.to_string(), m)).collect()
    }

    #[getter]
    fn total(&self) -> usize {
        self.0.total()
    }

    fn porcelain(&self) -> String {
        self.0.to_porcelain()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Invariant({:?})", self.0.to_string())
    }
}

#[pyfunction]
fn colorings(code: &PyGaussCode, biquandle: &PyBiquandle) -> PyResult<Vec<Vec<usize>>> {
    let all = ybq::enumerate_colorings(&code.0, &biquandle.0).map_err(py_err)?;
    Ok(all.into_iter().map(|c| c.0).collect())
}

#[pyfunction]
fn counting_invariant(code: &PyGaussCode, biquandle: &PyBiquandle) -> PyResult<usize> {
    ybq::counting_invariant(&code.0, &biquandle.0).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (n, limit = ybq::search::DEFAULT_ORDER_LIMIT))]
fn enumerate_biquandles(py: Python<'_>, n: usize, limit: usize) -> PyResult<Vec<PyBiquandle>> {
    let all = py.detach(|| enumerate_biquandles_with_limit(n, limit)).map_err(py_err)?;
    Ok(all.into_iter().map(PyBiquandle).collect())
}

/// `(dim Z², dim B², dim H²)`.
#[pyfunction]
#[pyo3(signature = (biquandle, field = "Q"))]
fn cohomology_dimensions(biquandle: &PyBiquandle, field: &str) -> PyResult<(usize, usize, usize)> {
    let f = self::field(field)?;
    let z = kernel_basis(&f, &cocycle_matrix(&biquandle.0, f)).len();
    let b = coboundary_basis(&biquandle.0, f).len();
    Ok((z, b, z - b))
}

/// Representatives of a basis of H², or of its RI-reduced part.
#[pyfunction]
#[pyo3(signature = (biquandle, field = "Q", reduced = true))]
fn cohomology(biquandle: &PyBiquandle, field: &str, reduced: bool) -> PyResult<Vec<PyCochain>> {
    let f = self::field(field)?;
    let basis = if reduced {
        reduced_cohomology_basis(&biquandle.0, f)
    } else {
        cohomology_basis(&biquandle.0, f)
    };
    Ok(basis.into_iter().map(PyCochain).collect())
}

/// `(class, ri_reduced)`, class one of NOT_COCYCLE, COBOUNDARY, NONTRIVIAL_COCYCLE.
#[pyfunction]
fn classify(biquandle: &PyBiquandle, phi: &PyCochain) -> PyResult<(String, bool)> {
    let c = classify_cochain(&biquandle.0, &phi.0).map_err(py_err)?;
    Ok((c.class.to_string(), c.ri_reduced))
}

#[pyfunction]
fn yb_invariant(code: &PyGaussCode, biquandle: &PyBiquandle, phi: &PyCochain) -> PyResult<PyInvariant> {
    ybq::invariant::yb_invariant(&code.0, &biquandle.0, &phi.0).map(PyInvariant).map_err(py_err)
}

/// One `(cocycle, invariant)` pair per reduced cohomology basis vector.
#[pyfunction]
#[pyo3(signature = (code, biquandle, field = "Q"))]
fn suite(code: &PyGaussCode, biquandle: &PyBiquandle, field: &str) -> PyResult<Vec<(PyCochain, PyInvariant)>> {
    let all = yb_invariant_suite(&code.0, &biquandle.0, self::field(field)?).map_err(py_err)?;
    Ok(all.into_iter().map(|(c, v)| (PyCochain(c), PyInvariant(v))).collect())
}

#[pymodule]
#[pyo3(name = "ybq")]
fn ybq_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBiquandle>()?;
    m.add_class::<PyGaussCode>()?;
    m.add_class::<PyCochain>()?;
    m.add_class::<PyInvariant>()?;
    m.add_function(wrap_pyfunction!(colorings, m)?)?;
    m.add_function(wrap_pyfunction!(counting_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_biquandles, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology_dimensions, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(yb_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    Ok(())
}

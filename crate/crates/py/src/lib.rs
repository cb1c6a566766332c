//! Python bindings for the `klcat` core library.

use std::sync::Arc;

use num_bigint::BigInt;
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use klcat::algebra::{self, BasedAlgebra, FDModule};
use klcat::coxeter::{CoxeterSystem, GroupElement, ReducedWord, DEFAULT_ORDER_CAP};
use klcat::delorme;
use klcat::group::ElementTable;
use klcat::hc::KlvDataset;
use klcat::kl::{self, KlTable};
use klcat::poly::{IntPoly, LaurentPoly};
use klcat::verify::{run_suite, Suite};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coeffs(p: &IntPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn laurent(p: &LaurentPoly) -> (i64, Vec<BigInt>) {
    (p.min_deg(), p.coeffs().to_vec())
}

fn to_python<T: serde::Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).map_err(value_err)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn word(w: Vec<usize>) -> ReducedWord {
    ReducedWord(w)
}

/// A finite Weyl group given by a type string such as `"A3"` or `"A1xB2"`.
#[pyclass(module = "klcat", frozen)]
struct WeylGroup {
    sys: CoxeterSystem,
    cap: u128,
}

impl WeylGroup {
    fn element(&self, w: Vec<usize>) -> PyResult<GroupElement> {
        self.sys.from_word(&word(w)).map_err(value_err)
    }
}

#[pymethods]
impl WeylGroup {
    #[new]
    #[pyo3(signature = (type_name, max_order = DEFAULT_ORDER_CAP))]
    fn new(type_name: &str, max_order: u128) -> PyResult<Self> {
        let sys = CoxeterSystem::from_type_str(type_name).map_err(value_err)?;
        sys.check_order(max_order).map_err(value_err)?;
        Ok(WeylGroup { sys, cap: max_order })
    }

    #[getter]
    fn type_name(&self) -> String {
        self.sys.coxeter_type().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.sys.rank()
    }

    #[getter]
    fn order(&self) -> u128 {
        self.sys.order()
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        self.sys.cartan().to_vec()
    }

    /// Reduced words of all elements, ordered by length and then ShortLex.
    fn elements(&self) -> PyResult<Vec<Vec<usize>>> {
        let t = ElementTable::full(&self.sys, self.cap).map_err(value_err)?;
        Ok(t.words().iter().map(|w| w.0.clone()).collect())
    }

    fn longest(&self) -> Vec<usize> {
        self.sys.reduced_word(&self.sys.longest_element()).0
    }

    fn length(&self, w: Vec<usize>) -> PyResult<usize> {
        Ok(self.element(w)?.length())
    }

    fn reduce(&self, w: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.sys.reduced_word(&self.element(w)?).0)
    }

    fn bruhat_leq(&self, x: Vec<usize>, y: Vec<usize>) -> PyResult<bool> {
        self.sys.bruhat_leq(&self.element(x)?, &self.element(y)?).map_err(value_err)
    }

    fn kl_polynomial(&self, x: Vec<usize>, y: Vec<usize>) -> PyResult<Vec<BigInt>> {
        let p = kl::kl_polynomial(&self.sys, &self.element(x)?, &self.element(y)?).map_err(value_err)?;
        Ok(coeffs(&p))
    }

    fn r_polynomial(&self, x: Vec<usize>, y: Vec<usize>) -> PyResult<Vec<BigInt>> {
        let p = kl::r_polynomial(&self.sys, &self.element(x)?, &self.element(y)?).map_err(value_err)?;
        Ok(coeffs(&p))
    }

    fn kl_table(&self) -> PyResult<KLTable> {
        let t = ElementTable::full(&self.sys, self.cap).map_err(value_err)?;
        let kl = KlTable::build(Arc::new(t)).map_err(value_err)?;
        Ok(KLTable { kl })
    }

    fn __repr__(&self) -> String {
        format!("WeylGroup('{}')", self.sys.coxeter_type())
    }
}

/// All KL polynomials of a full Weyl group, indexed by position in `labels()`.
#[pyclass(module = "klcat", frozen)]
struct KLTable {
    kl: KlTable,
}

impl KLTable {
    fn index(&self, i: usize) -> PyResult<usize> {
        if i < self.kl.elements().len() {
            Ok(i)
        } else {
            Err(PyIndexError::new_err(format!("element index {i} out of range")))
        }
    }
}

#[pymethods]
impl KLTable {
    fn __len__(&self) -> usize {
        self.kl.elements().len()
    }

    fn labels(&self) -> Vec<Vec<usize>> {
        self.kl.elements().words().iter().map(|w| w.0.clone()).collect()
    }

    fn index_of(&self, w: Vec<usize>) -> PyResult<usize> {
        self.kl
            .elements()
            .index_of_word(&word(w))
            .map_err(value_err)?
            .ok_or_else(|| PyValueError::new_err("word is not in the table"))
    }

    fn p(&self, x: usize, y: usize) -> PyResult<Vec<BigInt>> {
        Ok(coeffs(self.kl.p(self.index(x)?, self.index(y)?)))
    }

    fn mu(&self, x: usize, y: usize) -> PyResult<BigInt> {
        Ok(self.kl.mu(self.index(x)?, self.index(y)?))
    }

    fn delorme(&self, x: usize, y: usize) -> PyResult<Vec<BigInt>> {
        let a = delorme::delorme_poly(&self.kl, self.index(x)?, self.index(y)?).map_err(value_err)?;
        Ok(coeffs(&a))
    }

    fn delorme_table(&self) -> PyResult<Vec<Vec<Vec<BigInt>>>> {
        let t = delorme::delorme_table(&self.kl).map_err(value_err)?;
        Ok(t.iter().map(|r| r.iter().map(coeffs).collect()).collect())
    }

    fn ext_ll_table(&self) -> PyResult<Vec<Vec<Vec<BigInt>>>> {
        let t = delorme::ext_ll_table(&self.kl).map_err(value_err)?;
        Ok(t.iter().map(|r| r.iter().map(coeffs).collect()).collect())
    }

    #[pyo3(signature = (inverse = false))]
    fn characters_matrix(&self, inverse: bool) -> PyResult<Vec<Vec<BigInt>>> {
        let m = delorme::characters_matrix(&self.kl);
        let m = if inverse {
            m.unitriangular_inverse()
                .ok_or_else(|| PyValueError::new_err("characters matrix is not unitriangular"))?
        } else {
            m
        };
        Ok(m.entries().to_vec())
    }

    /// Runs the named verification suites (all of them by default) and
    /// returns their reports as dictionaries.
    #[pyo3(signature = (suites = None))]
    fn verify(&self, py: Python<'_>, suites: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
        let suites: Vec<Suite> = match suites {
            Some(names) => names.iter().map(|s| s.parse()).collect::<Result<_, _>>().map_err(value_err)?,
            None => Suite::ALL.to_vec(),
        };
        let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, &self.kl)).collect();
        to_python(py, &reports)
    }
}

/// A finite-dimensional quotient of a path algebra by homogeneous relations.
#[pyclass(module = "klcat", frozen)]
struct Algebra {
    alg: BasedAlgebra,
}

#[pymethods]
impl Algebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Algebra {
            alg: BasedAlgebra::from_json(text).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn sl2() -> PyResult<Self> {
        Ok(Algebra {
            alg: BasedAlgebra::build(algebra::AlgebraPresentation::sl2()).map_err(value_err)?,
        })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.alg.dimension()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.alg.presentation().vertices().to_vec()
    }

    fn degree_dims(&self) -> Vec<usize> {
        self.alg.degree_dims()
    }

    fn basis(&self) -> Vec<String> {
        (0..self.alg.dimension()).map(|k| self.alg.path_name(k)).collect()
    }

    #[pyo3(signature = (i, max_resolution = algebra::DEFAULT_RESOLUTION_CAP))]
    fn projective_dimension(&self, i: usize, max_resolution: usize) -> PyResult<usize> {
        algebra::projective_dimension(&self.alg, i, max_resolution).map_err(value_err)
    }

    /// Graded dimensions of Ext^k(L_i, L_j) as a polynomial in t.
    #[pyo3(signature = (i, j, max_resolution = algebra::DEFAULT_RESOLUTION_CAP))]
    fn ext_simple(&self, i: usize, j: usize, max_resolution: usize) -> PyResult<Vec<BigInt>> {
        self.alg.check_vertex(j).map_err(value_err)?;
        let m = FDModule::simple(&self.alg, i).map_err(value_err)?;
        let p = algebra::ext_series(&self.alg, &m, j, max_resolution).map_err(value_err)?;
        Ok(coeffs(&p))
    }

    #[pyo3(signature = (which = None, max_resolution = algebra::DEFAULT_RESOLUTION_CAP))]
    fn check_conjectures(&self, py: Python<'_>, which: Option<Vec<u8>>, max_resolution: usize) -> PyResult<Py<PyAny>> {
        let report = algebra::check_conjectures(&self.alg, &which.unwrap_or_default(), max_resolution);
        to_python(py, &report)
    }
}

/// Evaluates the split-rank twisted sums on a KLV dataset given as JSON.
///
/// Returns `(labels, entries, warnings)` where each entry is
/// `(min_degree, coefficients)`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn hc_eval(text: &str) -> PyResult<(Vec<String>, Vec<Vec<(i64, Vec<BigInt>)>>, Vec<String>)> {
    let ds = KlvDataset::from_json(text).map_err(value_err)?;
    let t = ds.conjecture_5_prime();
    let entries = t.entries.iter().map(|r| r.iter().map(laurent).collect()).collect();
    Ok((t.labels, entries, t.warnings))
}

#[pyfunction]
fn kl_polynomial(type_name: &str, x: Vec<usize>, y: Vec<usize>) -> PyResult<Vec<BigInt>> {
    WeylGroup::new(type_name, DEFAULT_ORDER_CAP)?.kl_polynomial(x, y)
}

#[pymodule(name = "klcat")]
pub fn klcat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<WeylGroup>()?;
    m.add_class::<KLTable>()?;
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(kl_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(hc_eval, m)?)?;
    Ok(())
}

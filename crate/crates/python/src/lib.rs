//! Python bindings: `import shi_heaviside`.
//!
//! Antichains are passed as lists of root indices and identified by their
//! canonical index; ring elements are plain integer lists.

use std::sync::Arc;

use pyo3::exceptions::{PyIndexError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use shi_core::regions::{classify_point, witness_point};
use shi_core::{
    Antichain, AntichainPoset as CorePoset, Basis, Error, HeavisideRing as CoreRing,
    PresentedRing as CoreU, RationalPoint, RingElement, RootSystem as CoreRoots, UElement,
};

fn err(e: Error) -> PyErr {
    match e {
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        Error::RootIndex { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn roots_of(name: &str) -> PyResult<Arc<CoreRoots>> {
    CoreRoots::from_name(name).map(Arc::new).map_err(err)
}

fn basis(name: &str) -> PyResult<Basis> {
    match name {
        "delta" => Ok(Basis::Delta),
        "h" => Ok(Basis::H),
        _ => Err(PyValueError::new_err(format!("basis must be 'delta' or 'h', not {name:?}"))),
    }
}

fn check(index: usize, len: usize, what: &str) -> PyResult<()> {
    if index < len {
        Ok(())
    } else {
        Err(PyIndexError::new_err(format!("{what} {index} out of range (0..{len})")))
    }
}

#[pyclass(frozen, module = "shi_heaviside")]
struct RootSystem {
    inner: Arc<CoreRoots>,
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(RootSystem { inner: roots_of(name)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.dynkin().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn coxeter_number(&self) -> usize {
        self.inner.coxeter_number()
    }

    #[getter]
    fn exponents(&self) -> Vec<usize> {
        self.inner.exponents().to_vec()
    }

    #[getter]
    fn highest_root(&self) -> usize {
        self.inner.highest_root_index()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    /// Simple-root coordinates of every positive root, in canonical order.
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().iter().map(|r| r.coeffs.clone()).collect()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.positive_roots().iter().map(|r| r.label()).collect()
    }

    fn leq(&self, a: usize, b: usize) -> PyResult<bool> {
        self.inner.root_leq(a, b).map_err(err)
    }

    fn catalan(&self) -> PyResult<u128> {
        shi_core::catalan::catalan_number(&self.inner).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.inner.num_positive_roots()
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.dynkin())
    }
}

#[pyclass(frozen, module = "shi_heaviside")]
struct AntichainPoset {
    inner: Arc<CorePoset>,
}

impl AntichainPoset {
    fn index(&self, p: usize) -> PyResult<usize> {
        check(p, self.inner.len(), "antichain")?;
        Ok(p)
    }
}

#[pymethods]
impl AntichainPoset {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(AntichainPoset { inner: Arc::new(CorePoset::enumerate(roots_of(name)?)) })
    }

    fn root_system(&self) -> RootSystem {
        RootSystem { inner: self.inner.root_system_arc().clone() }
    }

    fn antichains(&self) -> Vec<Vec<usize>> {
        self.inner.antichains().iter().map(|p| p.roots().to_vec()).collect()
    }

    fn antichain(&self, p: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.antichain(self.index(p)?).roots().to_vec())
    }

    fn ideal(&self, p: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.ideal(self.index(p)?).roots().to_vec())
    }

    /// Canonical index of the antichain with these roots.
    fn index_of(&self, roots: Vec<usize>) -> PyResult<usize> {
        self.inner.find(&roots).map_err(err)
    }

    fn leq(&self, p: usize, q: usize) -> PyResult<bool> {
        Ok(self.inner.leq(self.index(p)?, self.index(q)?))
    }

    fn zeta_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.zeta_matrix()
    }

    fn mobius_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.mobius_matrix()
    }

    fn covering_relations(&self) -> Vec<(usize, usize)> {
        self.inner.covering_relations()
    }

    fn q_catalan(&self) -> Vec<u64> {
        shi_core::catalan::q_catalan(&self.inner).coeffs().to_vec()
    }

    fn graded_distribution(&self) -> Vec<u64> {
        shi_core::catalan::graded_distribution(&self.inner)
    }

    /// `(point, slack)` with exact coordinates as `"n/d"` strings.
    #[pyo3(signature = (p, allow_large = false))]
    fn witness(&self, p: usize, allow_large: bool) -> PyResult<(Vec<String>, String)> {
        let a = self.inner.antichain(self.index(p)?);
        let w = witness_point(self.inner.root_system(), a, allow_large).map_err(err)?;
        Ok((w.point.to_strings(), shi_core::regions::format_rational(&w.slack)))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("AntichainPoset('{}', {} antichains)", self.inner.root_system().dynkin(), self.inner.len())
    }
}

/// Integer-valued functions on the antichains, with pointwise product.
#[pyclass(frozen, module = "shi_heaviside")]
struct HeavisideRing {
    inner: CoreRing,
}

impl HeavisideRing {
    fn element(&self, coords: Vec<i64>, basis_name: &str) -> PyResult<RingElement> {
        Ok(RingElement { basis: basis(basis_name)?, coords })
    }
}

#[pymethods]
impl HeavisideRing {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        let ap = Arc::new(CorePoset::enumerate(roots_of(name)?));
        Ok(HeavisideRing { inner: CoreRing::new(ap) })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn poset(&self) -> AntichainPoset {
        AntichainPoset { inner: self.inner.poset_arc().clone() }
    }

    /// δ-coordinates of the Heaviside function of a root.
    fn h_root(&self, root: usize) -> PyResult<Vec<i64>> {
        self.inner.h_root(root).map(|x| x.coords).map_err(err)
    }

    /// δ-coordinates of `h_p`, the indicator of the antichains above `p`.
    fn h_antichain(&self, p: usize) -> PyResult<Vec<i64>> {
        self.inner.h_antichain(p).map(|x| x.coords).map_err(err)
    }

    #[pyo3(signature = (x, y, basis = "delta"))]
    fn multiply(&self, x: Vec<i64>, y: Vec<i64>, basis: &str) -> PyResult<Vec<i64>> {
        let (x, y) = (self.element(x, basis)?, self.element(y, basis)?);
        self.inner.multiply(&x, &y).map(|z| z.coords).map_err(err)
    }

    fn to_h_basis(&self, x: Vec<i64>) -> PyResult<Vec<i64>> {
        let x = self.element(x, "delta")?;
        self.inner.to_h_basis(&x).map(|z| z.coords).map_err(err)
    }

    fn to_delta_basis(&self, x: Vec<i64>) -> PyResult<Vec<i64>> {
        let x = self.element(x, "h")?;
        self.inner.to_delta_basis(&x).map(|z| z.coords).map_err(err)
    }

    /// Ranks of `F_0 ⊆ … ⊆ F_n`.
    fn filtration(&self) -> Vec<usize> {
        self.inner.filtration().ranks
    }

    fn __repr__(&self) -> String {
        format!("HeavisideRing('{}', dim {})", self.inner.poset().root_system().dynkin(), self.inner.dim())
    }
}

/// The ring generated by one `u_α` per positive root, in the monomial basis.
#[pyclass(frozen, module = "shi_heaviside")]
struct PresentedRing {
    inner: CoreU,
}

#[pymethods]
impl PresentedRing {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        let ap = Arc::new(CorePoset::enumerate(roots_of(name)?));
        Ok(PresentedRing { inner: CoreU::new(ap) })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// Index of the monomial `u_p · u_q`.
    fn product(&self, p: usize, q: usize) -> PyResult<usize> {
        check(p, self.inner.rank(), "antichain")?;
        check(q, self.inner.rank(), "antichain")?;
        Ok(self.inner.product_index(p, q))
    }

    fn multiplication_table(&self) -> Vec<Vec<usize>> {
        self.inner.multiplication_table().clone()
    }

    /// Coordinates of the product of generators `u_α` over `roots`.
    fn word(&self, roots: Vec<usize>) -> PyResult<Vec<i64>> {
        self.inner.word(&roots).map(|u| u.coords).map_err(err)
    }

    fn multiply(&self, x: Vec<i64>, y: Vec<i64>) -> PyResult<Vec<i64>> {
        let (x, y) = (UElement { coords: x }, UElement { coords: y });
        self.inner.multiply(&x, &y).map(|u| u.coords).map_err(err)
    }

    /// δ-coordinates of the image in the Heaviside ring.
    fn rho(&self, x: Vec<i64>) -> PyResult<Vec<i64>> {
        self.inner.rho(&UElement { coords: x }).map(|z| z.coords).map_err(err)
    }
}

#[pyfunction]
fn catalan_number(name: &str) -> PyResult<u128> {
    shi_core::catalan::catalan_number(&*roots_of(name)?).map_err(err)
}

/// Antichain (as root indices) whose region contains the point. Coordinates
/// are exact rationals given as strings such as `"1/4"`.
#[pyfunction]
fn classify(name: &str, point: Vec<String>) -> PyResult<Vec<usize>> {
    let rs = roots_of(name)?;
    let x: RationalPoint = point.join(",").parse().map_err(err)?;
    classify_point(&rs, &x).map(|p| p.roots().to_vec()).map_err(err)
}

/// Exact interior point of the region of the antichain with these roots.
#[pyfunction]
#[pyo3(signature = (name, roots, allow_large = false))]
fn witness(name: &str, roots: Vec<usize>, allow_large: bool) -> PyResult<Vec<String>> {
    let rs = roots_of(name)?;
    let p = Antichain::new(&rs, roots).map_err(err)?;
    witness_point(&rs, &p, allow_large).map(|w| w.point.to_strings()).map_err(err)
}

/// `(passed, text report)` of the invariant suite.
#[pyfunction]
fn verify(name: &str) -> PyResult<(bool, String)> {
    let dynkin = name.parse().map_err(err)?;
    let report = shi_core::verify::run(dynkin).map_err(err)?;
    Ok((report.passed(), report.to_text()))
}

#[pymodule]
fn shi_heaviside(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_class::<AntichainPoset>()?;
    m.add_class::<HeavisideRing>()?;
    m.add_class::<PresentedRing>()?;
    m.add_function(wrap_pyfunction!(catalan_number, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

//! Python bindings: permutations, groups, subgroups, the census and the
//! verification harness.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use mintrans_core::census::{self, minimal_transitive_subgroups};
use mintrans_core::cli::report::{CensusRecord, VerifySummaryRecord};
use mintrans_core::structure::{
    core_of_subgroup, fitting_subgroup, frattini_subgroup, group_predicates, sylow_subgroup,
};
use mintrans_core::theory::{classify_degree_pq, is_minimally_transitive, is_mt_stabilizer};
use mintrans_core::verify::{verify_theorems, VerifyBounds};
use mintrans_core::{catalog, Error, GroupRef, Limits};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(mintrans, MintransError, PyException);
create_exception!(mintrans, BoundError, MintransError);
create_exception!(mintrans, InapplicableError, MintransError);

fn to_py(e: Error) -> PyErr {
    if e.is_bound() {
        BoundError::new_err(e.to_string())
    } else if e.is_inapplicable() {
        InapplicableError::new_err(e.to_string())
    } else {
        MintransError::new_err(e.to_string())
    }
}

/// Converts a serializable value to plain Python objects through JSON.
fn to_object<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Permutation", module = "mintrans", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPermutation {
    inner: mintrans_core::Permutation,
}

#[pymethods]
impl PyPermutation {
    /// Parses 1-based cycle notation such as "(1 2 3)(4 5)".
    #[new]
    fn new(cycles: &str, degree: usize) -> PyResult<Self> {
        let inner = mintrans_core::Permutation::parse(cycles, degree).map_err(to_py)?;
        Ok(PyPermutation { inner })
    }

    /// Builds a permutation from its 0-based image list.
    #[staticmethod]
    fn from_images(images: Vec<usize>) -> PyResult<Self> {
        let inner = mintrans_core::Permutation::from_images(images).map_err(to_py)?;
        Ok(PyPermutation { inner })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn images(&self) -> Vec<usize> {
        self.inner.images()
    }

    fn apply(&self, point: usize) -> PyResult<usize> {
        if point >= self.inner.degree() {
            return Err(PyValueError::new_err("point out of range"));
        }
        Ok(self.inner.apply(point))
    }

    /// `self` then `other`.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        let inner = self.inner.compose(&other.inner).map_err(to_py)?;
        Ok(PyPermutation { inner })
    }

    fn inverse(&self) -> Self {
        PyPermutation {
            inner: self.inner.inverse(),
        }
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn __mul__(&self, other: &PyPermutation) -> PyResult<Self> {
        self.compose(other)
    }

    fn __eq__(&self, other: &PyPermutation) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}', {})", self.inner, self.inner.degree())
    }
}

fn parse_all(gens: &[String], degree: usize) -> PyResult<Vec<mintrans_core::Permutation>> {
    gens.iter()
        .map(|g| mintrans_core::Permutation::parse(g, degree).map_err(to_py))
        .collect()
}

fn wrap_perms(perms: Vec<mintrans_core::Permutation>) -> Vec<PyPermutation> {
    perms.into_iter().map(|inner| PyPermutation { inner }).collect()
}

#[pyclass(name = "PermGroup", module = "mintrans", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPermGroup {
    inner: GroupRef,
}

#[pymethods]
impl PyPermGroup {
    /// A group of the given degree generated by cycle-notation strings.
    #[new]
    #[pyo3(signature = (degree, generators, max_order=None))]
    fn new(degree: usize, generators: Vec<String>, max_order: Option<usize>) -> PyResult<Self> {
        let mut limits = Limits::from_env();
        if let Some(cap) = max_order {
            limits.order_cap = cap;
        }
        let gens = parse_all(&generators, degree)?;
        let g = mintrans_core::PermGroup::with_limits(degree, gens, limits).map_err(to_py)?;
        Ok(PyPermGroup { inner: Arc::new(g) })
    }

    /// A named group from the built-in catalog, e.g. "S4" or "C5^2:C3".
    #[staticmethod]
    fn from_catalog(name: &str) -> PyResult<Self> {
        catalog::find(name)
            .map(|e| PyPermGroup { inner: e.group })
            .ok_or_else(|| PyValueError::new_err(format!("no catalog group named {name}")))
    }

    #[staticmethod]
    fn catalog_names() -> Vec<String> {
        catalog::catalog().into_iter().map(|e| e.name).collect()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn generators(&self) -> Vec<PyPermutation> {
        wrap_perms(self.inner.generators().to_vec())
    }

    fn elements(&self) -> Vec<PyPermutation> {
        wrap_perms(self.inner.elements().to_vec())
    }

    fn __contains__(&self, p: &PyPermutation) -> bool {
        self.inner.contains(&p.inner)
    }

    fn is_transitive(&self) -> bool {
        self.inner.is_transitive()
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        self.inner.orbits().blocks
    }

    fn is_minimally_transitive(&self) -> PyResult<bool> {
        Ok(is_minimally_transitive(&self.inner).map_err(to_py)?.holds)
    }

    /// Abelian, nilpotent, solvable, simple flags and the prime set, as a dict.
    fn predicates<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_object(py, &group_predicates(&self.inner).map_err(to_py)?)
    }

    fn subgroup(&self, generators: Vec<String>) -> PyResult<PySubgroup> {
        let gens = parse_all(&generators, self.inner.degree())?;
        if gens.iter().any(|p| !self.inner.contains(p)) {
            return Err(MintransError::new_err("generator is not in the group"));
        }
        let inner = mintrans_core::SubgroupHandle::generated(&self.inner, &gens).map_err(to_py)?;
        Ok(PySubgroup { inner })
    }

    fn subgroups(&self) -> PyResult<Vec<PySubgroup>> {
        let all = mintrans_core::structure::all_subgroups(&self.inner).map_err(to_py)?;
        Ok(all.into_iter().map(|inner| PySubgroup { inner }).collect())
    }

    fn minimal_transitive_subgroups(&self) -> PyResult<Vec<PySubgroup>> {
        let found = minimal_transitive_subgroups(&self.inner).map_err(to_py)?;
        Ok(found.into_iter().map(|inner| PySubgroup { inner }).collect())
    }

    fn fitting(&self) -> PyResult<PySubgroup> {
        Ok(PySubgroup {
            inner: fitting_subgroup(&self.inner).map_err(to_py)?,
        })
    }

    fn frattini(&self) -> PyResult<PySubgroup> {
        Ok(PySubgroup {
            inner: frattini_subgroup(&self.inner).map_err(to_py)?,
        })
    }

    fn sylow(&self, p: usize) -> PyResult<PySubgroup> {
        Ok(PySubgroup {
            inner: sylow_subgroup(&self.inner, p).map_err(to_py)?,
        })
    }

    /// Classification of a minimally transitive group of degree p·q, as a dict.
    fn classify_pq<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_object(py, &classify_degree_pq(&self.inner).map_err(to_py)?)
    }

    fn is_equivalent(&self, other: &PyPermGroup) -> bool {
        mintrans_core::relabel::are_equivalent(&self.inner, &other.inner)
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.inner.generators().iter().map(|g| format!("'{g}'")).collect();
        format!("PermGroup({}, [{}])", self.inner.degree(), gens.join(", "))
    }
}

#[pyclass(name = "Subgroup", module = "mintrans", frozen, skip_from_py_object)]
struct PySubgroup {
    inner: mintrans_core::SubgroupHandle,
}

#[pymethods]
impl PySubgroup {
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn index(&self) -> usize {
        self.inner.index()
    }

    fn generators(&self) -> Vec<PyPermutation> {
        wrap_perms(self.inner.generators())
    }

    fn elements(&self) -> Vec<PyPermutation> {
        wrap_perms(self.inner.elements())
    }

    fn is_normal(&self) -> bool {
        self.inner.is_normal()
    }

    fn __contains__(&self, p: &PyPermutation) -> bool {
        self.inner.contains(&p.inner)
    }

    fn core(&self) -> PyResult<PySubgroup> {
        let inner = core_of_subgroup(self.inner.parent(), &self.inner).map_err(to_py)?;
        Ok(PySubgroup { inner })
    }

    /// Whether the action of the parent group on the cosets of this subgroup
    /// is minimally transitive.
    fn is_mt_stabilizer(&self) -> PyResult<bool> {
        Ok(is_mt_stabilizer(self.inner.parent(), &self.inner).map_err(to_py)?.holds)
    }

    /// The image of the parent group acting on the cosets of this subgroup.
    fn coset_image(&self) -> PyResult<PyPermGroup> {
        let image = catalog::coset_image(self.inner.parent(), &self.inner).map_err(to_py)?;
        Ok(PyPermGroup { inner: Arc::new(image) })
    }

    fn as_group(&self) -> PyPermGroup {
        PyPermGroup {
            inner: Arc::new(self.inner.as_group()),
        }
    }

    fn __repr__(&self) -> String {
        format!("Subgroup(order={}, index={})", self.inner.order(), self.inner.index())
    }
}

/// Minimally transitive groups of the given degree, one dict per class.
#[pyfunction]
fn mt_census<'py>(py: Python<'py>, degree: usize) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let entries = py.detach(|| census::mt_census(degree)).map_err(to_py)?;
    entries.iter().map(|e| to_object(py, &CensusRecord::from(e))).collect()
}

/// Runs every theorem suite on the catalog; returns (summary, suites).
#[pyfunction]
#[pyo3(signature = (max_order=200, max_degree=None))]
fn verify<'py>(
    py: Python<'py>,
    max_order: usize,
    max_degree: Option<usize>,
) -> PyResult<(Bound<'py, PyAny>, Vec<Bound<'py, PyAny>>)> {
    let bounds = VerifyBounds {
        max_order,
        max_degree,
        ..VerifyBounds::default()
    };
    let report = py.detach(|| verify_theorems(&catalog::catalog(), bounds));
    let summary = to_object(py, &VerifySummaryRecord::from(&report))?;
    let suites = report
        .suites
        .iter()
        .map(|s| to_object(py, s))
        .collect::<PyResult<Vec<_>>>()?;
    Ok((summary, suites))
}

/// Runs the command-line interface in-process; returns (exit code, stdout, stderr).
#[pyfunction]
fn run_cli(py: Python<'_>, args: Vec<String>) -> (i32, String, String) {
    py.detach(|| mintrans_core::cli::run_captured(std::iter::once("mintrans".to_string()).chain(args)))
}

#[pymodule]
fn mintrans(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPermGroup>()?;
    m.add_class::<PySubgroup>()?;
    m.add_function(wrap_pyfunction!(mt_census, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("MintransError", py.get_type::<MintransError>())?;
    m.add("BoundError", py.get_type::<BoundError>())?;
    m.add("InapplicableError", py.get_type::<InapplicableError>())?;
    Ok(())
}

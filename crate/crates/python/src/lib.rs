//! Python bindings: `import ratroot`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ratroot_core::arith::rat::rat_to_fraction;
use ratroot_core::arith::{is_square, squarefree_part, substitute, SquareTest};
use ratroot_core::decision::{
    decide_set, decide_single_root, subset_criterion, ScanParams, MAX_SUBSET_FAMILY,
};
use ratroot_core::lattice::reduced_generators;
use ratroot_core::report::{MinPolyReport, WitnessReport};
use ratroot_core::{
    build_branch_table, conjecture_scan, cyclic_cover_genus, greedy_rationalize,
    hyperelliptic_genus, minpoly_multiquadratic, multiquadratic_genus, parse_expr,
    superelliptic_genus_paper, verify_witness, CoverSpec, RatFunc, Status,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A rational function of `x` over the rationals.
#[pyclass(name = "RatFunc", module = "ratroot", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRatFunc {
    inner: RatFunc,
}

impl PyRatFunc {
    fn wrap(inner: RatFunc) -> Self {
        PyRatFunc { inner }
    }
}

/// Accepts a `RatFunc` or an expression string.
fn radicand(obj: &Bound<'_, PyAny>) -> PyResult<RatFunc> {
    if let Ok(f) = obj.extract::<PyRef<'_, PyRatFunc>>() {
        return Ok(f.inner.clone());
    }
    let text: String = obj.extract()?;
    parse_expr(&text).map_err(value_error)
}

fn to_radicands(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<RatFunc>> {
    objs.iter().map(radicand).collect()
}

#[pymethods]
impl PyRatFunc {
    #[new]
    fn new(expr: &Bound<'_, PyAny>) -> PyResult<Self> {
        radicand(expr).map(Self::wrap)
    }

    #[getter]
    fn numerator(&self) -> String {
        self.inner.num().to_expr_string("x")
    }

    #[getter]
    fn denominator(&self) -> String {
        self.inner.den().to_expr_string("x")
    }

    fn is_constant(&self) -> bool {
        self.inner.is_constant()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Monic squarefree representative of the square class.
    fn squarefree_part(&self) -> PyResult<Self> {
        squarefree_part(&self.inner)
            .map(|p| Self::wrap(RatFunc::from_poly(p)))
            .map_err(value_error)
    }

    /// `None` if not a square over the complex numbers, else `(root, defect)`
    /// with `self = defect * root**2` and `defect` a fraction string, `None`
    /// when 1.
    fn sqrt(&self) -> Option<(Self, Option<String>)> {
        match is_square(&self.inner) {
            SquareTest::SquareOverQ(r) => Some((Self::wrap(r), None)),
            SquareTest::SquareOverC { defect, root } => {
                Some((Self::wrap(root), Some(rat_to_fraction(&defect))))
            }
            SquareTest::NotSquare => None,
        }
    }

    /// Composition `self(s)`.
    fn substitute(&self, s: &Bound<'_, PyAny>) -> PyResult<Self> {
        substitute(&self.inner, &radicand(s)?)
            .map(Self::wrap)
            .map_err(value_error)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self::wrap(&self.inner + &radicand(other)?))
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self::wrap(&self.inner - &radicand(other)?))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self::wrap(&self.inner * &radicand(other)?))
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.inner
            .checked_div(&radicand(other)?)
            .map(Self::wrap)
            .map_err(value_error)
    }

    fn __neg__(&self) -> Self {
        Self::wrap(-&self.inner)
    }

    fn __pow__(&self, n: u32, _modulo: Option<Py<PyAny>>) -> Self {
        Self::wrap(self.inner.pow(n))
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_expr_string("x")
    }

    fn __repr__(&self) -> String {
        format!("RatFunc('{}')", self.inner.to_expr_string("x"))
    }
}

/// An explicit substitution `x -> phi(t)` with `f_i(phi) = d_i * h_i**2`.
#[pyclass(
    name = "Witness",
    module = "ratroot",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyWitness {
    phi: String,
    roots: Vec<String>,
    defects: Vec<Option<String>>,
    accepted: bool,
    exact: bool,
}

impl From<WitnessReport> for PyWitness {
    fn from(w: WitnessReport) -> Self {
        PyWitness {
            phi: w.phi,
            roots: w.roots,
            defects: w.defects,
            accepted: w.accepted,
            exact: w.exact,
        }
    }
}

#[pymethods]
impl PyWitness {
    fn __repr__(&self) -> String {
        format!(
            "Witness(phi='{}', exact={})",
            self.phi,
            if self.exact { "True" } else { "False" }
        )
    }
}

#[pyclass(
    name = "Verdict",
    module = "ratroot",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyVerdict {
    status: String,
    genus: Option<u64>,
    rank: Option<usize>,
    branch_count: Option<usize>,
    failing_subset: Option<Vec<usize>>,
    witness: Option<PyWitness>,
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Rationalizable => "rationalizable",
        Status::NotRationalizable => "not_rationalizable",
        Status::Unknown => "unknown",
    }
}

#[pymethods]
impl PyVerdict {
    #[getter]
    fn rationalizable(&self) -> bool {
        self.status == "rationalizable"
    }

    fn __bool__(&self) -> bool {
        self.rationalizable()
    }

    fn __repr__(&self) -> String {
        let g = self.genus.map_or("None".to_string(), |g| g.to_string());
        format!("Verdict(status='{}', genus={g})", self.status)
    }
}

/// Parses an expression in `x`.
#[pyfunction]
fn parse(expr: &str) -> PyResult<PyRatFunc> {
    parse_expr(expr).map(PyRatFunc::wrap).map_err(value_error)
}

/// Rationalizability of a family of square roots, by the genus of the
/// compositum curve. A verified witness is attached when one is found.
#[pyfunction]
fn decide(radicands: Vec<Bound<'_, PyAny>>) -> PyResult<PyVerdict> {
    let fs = to_radicands(&radicands)?;
    let v = decide_set(&fs).map_err(value_error)?;
    let failing = if v.status == Status::NotRationalizable && fs.len() <= MAX_SUBSET_FAMILY {
        subset_criterion(&fs).map_err(value_error)?.failing_subset
    } else {
        None
    };
    let witness = v
        .witness
        .as_ref()
        .map(|w| WitnessReport::new(w, &verify_witness(&fs, w)).into());
    Ok(PyVerdict {
        status: status_name(v.status).into(),
        genus: v.genus,
        rank: v.rank,
        branch_count: v.branch_count,
        failing_subset: failing,
        witness,
    })
}

/// Rationalizability of `f ** (1/e)`.
#[pyfunction]
fn decide_root(f: &Bound<'_, PyAny>, e: u32) -> PyResult<PyVerdict> {
    let v = decide_single_root(&radicand(f)?, e).map_err(value_error)?;
    Ok(PyVerdict {
        status: status_name(v.status).into(),
        genus: v.genus,
        rank: None,
        branch_count: None,
        failing_subset: None,
        witness: None,
    })
}

/// Genus of the curve defined by adjoining every square root.
#[pyfunction]
fn genus(radicands: Vec<Bound<'_, PyAny>>) -> PyResult<u64> {
    multiquadratic_genus(&to_radicands(&radicands)?).map_err(value_error)
}

#[pyfunction(name = "hyperelliptic_genus")]
fn py_hyperelliptic_genus(f: &Bound<'_, PyAny>) -> PyResult<u64> {
    hyperelliptic_genus(&radicand(f)?).map_err(value_error)
}

/// Genus of `z**e = f`.
#[pyfunction(name = "cyclic_cover_genus")]
fn py_cyclic_cover_genus(f: &Bound<'_, PyAny>, e: u32) -> PyResult<u64> {
    let spec = CoverSpec::new(radicand(f)?, e).map_err(value_error)?;
    cyclic_cover_genus(&spec).map_err(value_error)
}

/// `(e-1)(s-2)/2` for `z**e = x**l_0 * prod (x - a_i)**l_i`, as a
/// `fractions.Fraction`.
#[pyfunction]
fn closed_form_genus<'py>(
    py: Python<'py>,
    exponents: Vec<u32>,
    e: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let g = superelliptic_genus_paper(&exponents, e).map_err(value_error)?;
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((rat_to_fraction(&g),))
}

/// `(passes, first_failing_subset)`.
#[pyfunction(name = "subset_criterion")]
fn py_subset_criterion(radicands: Vec<Bound<'_, PyAny>>) -> PyResult<(bool, Option<Vec<usize>>)> {
    let s = subset_criterion(&to_radicands(&radicands)?).map_err(value_error)?;
    Ok((s.pass, s.failing_subset))
}

/// Minimal polynomial of the sum of the square roots, as a dict with keys
/// `poly`, `degree`, `generators` and `scale`.
#[pyfunction]
#[pyo3(signature = (radicands, reduce = false))]
fn minpoly<'py>(
    py: Python<'py>,
    radicands: Vec<Bound<'py, PyAny>>,
    reduce: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let mut fs = to_radicands(&radicands)?;
    if reduce {
        let t = build_branch_table(&fs).map_err(value_error)?;
        fs = reduced_generators(&t)
            .into_iter()
            .map(|g| RatFunc::from_poly(g.primitive_integer().1))
            .collect();
        if fs.is_empty() {
            return Err(value_error("every radicand is a square"));
        }
    }
    let m = MinPolyReport::new(&minpoly_multiquadratic(&fs).map_err(value_error)?);
    let d = PyDict::new(py);
    d.set_item("poly", m.poly)?;
    d.set_item("degree", m.degree)?;
    d.set_item("generators", m.generators)?;
    d.set_item("scale", m.scale)?;
    Ok(d)
}

/// Greedy search for an explicit substitution; `None` if none is found.
#[pyfunction]
fn rationalize(radicands: Vec<Bound<'_, PyAny>>) -> PyResult<Option<PyWitness>> {
    let fs = to_radicands(&radicands)?;
    Ok(greedy_rationalize(&fs)
        .map_err(value_error)?
        .map(|w| WitnessReport::new(&w, &verify_witness(&fs, &w)).into()))
}

/// Seeded comparison of the subset criterion against the genus, returned
/// as the same dict the command line prints.
#[pyfunction]
#[pyo3(signature = (seed = 42, trials = 200, max_m = 3, max_factors = 3, coeff_bound = 5))]
fn scan(
    py: Python<'_>,
    seed: u64,
    trials: usize,
    max_m: usize,
    max_factors: usize,
    coeff_bound: i64,
) -> PyResult<Py<PyAny>> {
    let params = ScanParams {
        max_m,
        max_factors,
        coeff_bound,
    };
    let report = py
        .detach(|| conjecture_scan(seed, trials, params))
        .map_err(value_error)?;
    let text = serde_json::to_string(&report).map_err(value_error)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

#[pymodule]
fn ratroot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", ratroot_core::report::VERSION)?;
    m.add_class::<PyRatFunc>()?;
    m.add_class::<PyWitness>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(decide_root, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(py_hyperelliptic_genus, m)?)?;
    m.add_function(wrap_pyfunction!(py_cyclic_cover_genus, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_genus, m)?)?;
    m.add_function(wrap_pyfunction!(py_subset_criterion, m)?)?;
    m.add_function(wrap_pyfunction!(minpoly, m)?)?;
    m.add_function(wrap_pyfunction!(rationalize, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    Ok(())
}

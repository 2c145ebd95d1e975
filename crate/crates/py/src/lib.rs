//! Python bindings: generator brackets, states and the module action,
//! L operators, singular-vector checks and the Griess table.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use symvoa::fock::{self, Monomial};
use symvoa::liealg::{bracket_r, canonicalize, parse_raw_generator};
use symvoa::scalar::RParam;
use symvoa::{griess, singular, suite, virops};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_r(r: Option<&str>) -> PyResult<RParam> {
    r.map_or(Ok(RParam::Generic), |s| s.parse().map_err(err))
}

/// Element of the Lie algebra: canonical generators plus a constant, over Q[r].
#[pyclass(name = "Element", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyElement(symvoa::LieElement);

#[pymethods]
impl PyElement {
    /// Parses a raw literal "v[i,j](m,n)" and canonicalizes it.
    #[new]
    #[pyo3(signature = (literal, d = 2))]
    fn new(literal: &str, d: u32) -> PyResult<Self> {
        let (i, j, m, n) = parse_raw_generator(literal).map_err(err)?;
        canonicalize(i, j, m, n, d).map(PyElement).map_err(err)
    }

    /// Deformed bracket `[self, other]_r`.
    fn bracket(&self, other: &PyElement) -> PyElement {
        PyElement(bracket_r(&self.0, &other.0))
    }

    #[pyo3(signature = (r = None))]
    fn specialize(&self, r: Option<&str>) -> PyResult<PyElement> {
        Ok(PyElement(self.0.specialize(&parse_r(r)?)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.0)
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.0 == other.0
    }
}

/// Vector of the module, with coefficients in Q[r].
#[pyclass(name = "State", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyState(fock::State);

#[pymethods]
impl PyState {
    /// Monomial literal such as "v[1,1](-2,-2)^2" or "1" for the vacuum.
    #[new]
    fn new(literal: &str) -> PyResult<Self> {
        literal.parse::<Monomial>().map(|m| PyState(fock::State::monomial(m))).map_err(err)
    }

    #[staticmethod]
    fn vacuum() -> Self {
        PyState(fock::State::vacuum())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(err)?;
        fock::State::from_json(&v).map(PyState).map_err(err)
    }

    /// `(det V_p)^nu 1`.
    #[staticmethod]
    fn det_power(p: usize, nu: u32) -> Self {
        PyState(singular::det_power_state(p, nu))
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    /// Action of a Lie algebra element.
    fn act(&self, x: &PyElement) -> PyState {
        PyState(fock::act(&x.0, &self.0))
    }

    /// `L^ij(m)` applied to this state.
    fn act_l(&self, i: u32, j: u32, m: i64) -> PyState {
        PyState(virops::act_l(i, j, m, &self.0))
    }

    /// Closed-form `v^ij(m,n)_l`, `i != j`, `m,n < 0`.
    fn vertex_mode(&self, i: u32, j: u32, m: i64, n: i64, l: i64) -> PyResult<PyState> {
        virops::vertex_mode(i, j, m, n, l, &self.0).map(PyState).map_err(err)
    }

    #[pyo3(signature = (r = None))]
    fn specialize(&self, r: Option<&str>) -> PyResult<PyState> {
        Ok(PyState(self.0.specialize(&parse_r(r)?)))
    }

    /// Degree of a homogeneous state.
    fn degree(&self) -> PyResult<u64> {
        fock::homogeneous_degree(&self.0).map_err(err)
    }

    /// Weight of a homogeneous state, as "2L[1,-1]+L[1,-2]".
    fn weight(&self) -> PyResult<String> {
        match fock::weight_of(&self.0).map_err(err)?.homogeneous() {
            Some(w) => Ok(w.to_string()),
            None => Err(err("state is not homogeneous")),
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &PyState) -> PyState {
        PyState(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyState) -> PyState {
        PyState(&self.0 - &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("State('{}')", self.0)
    }

    fn __eq__(&self, other: &PyState) -> bool {
        self.0 == other.0
    }
}

/// `[x, y]_r` for two raw generator literals, as text.
#[pyfunction]
#[pyo3(signature = (x, y, d = 2, r = None))]
fn bracket(x: &str, y: &str, d: u32, r: Option<&str>) -> PyResult<String> {
    let x = PyElement::new(x, d)?;
    let y = PyElement::new(y, d)?;
    Ok(bracket_r(&x.0, &y.0).specialize(&parse_r(r)?).to_string())
}

/// PBW basis of a weight space.
#[pyfunction]
#[pyo3(signature = (weight, restricted = false))]
fn weight_basis(weight: &str, restricted: bool) -> PyResult<Vec<String>> {
    let w: fock::Weight = weight.parse().map_err(err)?;
    Ok(fock::weight_space_basis(&w, restricted).iter().map(ToString::to_string).collect())
}

/// Singularity of `(det V_p)^nu 1`; `r` defaults to `1 - 2 nu + p`.
/// Returns `(singular, witness)` with the witness as text or `None`.
#[pyfunction]
#[pyo3(signature = (p, nu, r = None, full_algebra = false, d = 2))]
fn singular_check(p: usize, nu: u32, r: Option<&str>, full_algebra: bool, d: u32) -> PyResult<(bool, Option<String>)> {
    let r0 = match r {
        Some(s) => s.parse().map_err(err)?,
        None => RParam::Value(singular::singular_r(p, nu)),
    };
    let u = singular::det_power_state(p, nu);
    let v = singular::is_singular(&u, &r0, full_algebra, if full_algebra { d } else { 1 }, None).map_err(err)?;
    Ok((v.singular, v.witness.map(|(g, out)| format!("{g} -> {out}"))))
}

/// Kernel of the raising operators on a restricted weight space at `r`:
/// `(basis_dim, kernel_dim, vectors)`.
#[pyfunction]
#[pyo3(signature = (weight, r))]
fn singular_search(weight: &str, r: &str) -> PyResult<(usize, usize, Vec<PyState>)> {
    let w: fock::Weight = weight.parse().map_err(err)?;
    let rep = singular::singular_search(&w, &parse_r(Some(r))?, None).map_err(err)?;
    Ok((rep.basis_dim, rep.kernel_dim, rep.kernel_vectors.into_iter().map(PyState).collect()))
}

/// Degree-two products `omega^ij . omega^kl` as text, keyed by basis labels.
#[pyfunction]
fn griess_table(d: u32) -> PyResult<Vec<((u32, u32), (u32, u32), String)>> {
    let t = griess::GriessTable::build(d).map_err(err)?;
    let mut out = Vec::new();
    for a in 0..t.dim() {
        for b in 0..t.dim() {
            out.push((t.basis[a], t.basis[b], griess::griess_product(t.basis[a].0, t.basis[a].1, t.basis[b].0, t.basis[b].1).to_string()));
        }
    }
    Ok(out)
}

/// Commutativity, Jordan identity and the isomorphism onto `Sym_d`.
#[pyfunction]
fn jordan_verify(d: u32) -> PyResult<bool> {
    griess::jordan_verify(d).map(|r| r.passed()).map_err(err)
}

/// One numbered verification: `(passed, [(name, passed, detail)])`.
#[pyfunction]
#[pyo3(signature = (id, d = 2, max_degree = 6, seed = 0, samples = 10_000))]
fn criterion(id: u8, d: u32, max_degree: u64, seed: u64, samples: usize) -> PyResult<(bool, Vec<(String, bool, String)>)> {
    if !(1..=11).contains(&id) {
        return Err(err(format!("no criterion {id}")));
    }
    let cfg = suite::SuiteConfig { d, max_degree, seed, samples, workers: 1 };
    let c = suite::criterion(id, &cfg);
    Ok((c.passed(), c.checks.into_iter().map(|k| (k.name, k.passed, k.detail)).collect()))
}

#[pymodule]
#[pyo3(name = "symvoa")]
fn symvoa_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_class::<PyState>()?;
    m.add_function(wrap_pyfunction!(bracket, m)?)?;
    m.add_function(wrap_pyfunction!(weight_basis, m)?)?;
    m.add_function(wrap_pyfunction!(singular_check, m)?)?;
    m.add_function(wrap_pyfunction!(singular_search, m)?)?;
    m.add_function(wrap_pyfunction!(griess_table, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_verify, m)?)?;
    m.add_function(wrap_pyfunction!(criterion, m)?)?;
    Ok(())
}

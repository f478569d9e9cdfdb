//! Python bindings: formulas, proof scripts, checking, translation between
//! the two calculi, the tautology prover and proof metrics.

use std::collections::HashMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use justify_core::bridge::{self, PremiseBinding};
use justify_core::jl;
use justify_core::luk;
use justify_core::metrics;
use justify_core::{Calculus, Status};

create_exception!(justify, JustifyError, PyValueError, "Base class for kernel errors.");
create_exception!(justify, ParseError, JustifyError, "Input text does not parse.");
create_exception!(justify, ProofError, JustifyError, "An operation's precondition failed.");

fn parse_err(e: impl std::fmt::Display) -> PyErr {
    ParseError::new_err(e.to_string())
}

fn proof_err(e: impl std::fmt::Display) -> PyErr {
    ProofError::new_err(e.to_string())
}

fn to_python(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(proof_err)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A formula, parsed from the concrete syntax (`p -> q`, `~p`, `x:p`, ...).
#[pyclass(frozen, eq, hash, skip_from_py_object, module = "justify")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Formula(justify_core::Formula);

#[pymethods]
impl Formula {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        justify_core::parse_formula(text).map(Formula).map_err(parse_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Formula({:?})", self.0.to_string())
    }

    /// Atom names, sorted.
    fn atoms(&self) -> Vec<String> {
        self.0.atoms().iter().map(|a| a.to_string()).collect()
    }

    fn has_justification(&self) -> bool {
        self.0.has_justification()
    }

    fn is_tautology(&self) -> PyResult<bool> {
        luk::is_tautology(&self.0).map_err(proof_err)
    }
}

/// A proof script in either calculus.
#[pyclass(frozen, eq, skip_from_py_object, module = "justify")]
#[derive(Clone, PartialEq)]
struct Script(justify_core::ProofScript);

#[pymethods]
impl Script {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        justify_core::ProofScript::parse(text).map(Script).map_err(parse_err)
    }

    #[getter]
    fn calculus(&self) -> &'static str {
        match self.0.calculus() {
            Calculus::Luk => "luk",
            Calculus::Jl => "jl",
        }
    }

    #[getter]
    fn premises(&self) -> Vec<Formula> {
        self.0.premises().iter().cloned().map(Formula).collect()
    }

    #[getter]
    fn conclusion(&self) -> Formula {
        Formula(self.0.conclusion().clone())
    }

    /// `(formula, rule)` pairs, with rules rendered as in script files.
    #[getter]
    fn lines(&self) -> Vec<(Formula, String)> {
        self.0
            .lines()
            .iter()
            .map(|l| (Formula(l.formula.clone()), l.rule.render(self.0.calculus())))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<Script {} with {} lines>", self.calculus(), self.0.len())
    }
}

/// Result of checking a script.
#[pyclass(frozen, get_all, module = "justify")]
struct Verdict {
    valid: bool,
    failing_line: Option<usize>,
    reason: String,
    checked_lines: usize,
}

#[pymethods]
impl Verdict {
    fn __bool__(&self) -> bool {
        self.valid
    }

    fn __repr__(&self) -> String {
        match self.failing_line {
            None => "<Verdict valid>".to_string(),
            Some(n) => format!("<Verdict invalid at line {n}: {}>", self.reason),
        }
    }
}

impl From<justify_core::Verdict> for Verdict {
    fn from(v: justify_core::Verdict) -> Self {
        Verdict {
            valid: v.status == Status::Valid,
            failing_line: v.failing_line,
            reason: v.reason,
            checked_lines: v.checked_lines,
        }
    }
}

/// Checks a script with the checker for its calculus.
#[pyfunction]
fn check(script: &Script) -> Verdict {
    justify_core::check(&script.0).into()
}

/// Turns a Łukasiewicz proof into a justified proof. Premises are bound by
/// `bind` (premise text to variable name) or, without it, to x1, x2, ...
#[pyfunction]
#[pyo3(signature = (script, bind = None))]
fn internalize(script: &Script, bind: Option<HashMap<String, String>>) -> PyResult<Script> {
    let binding = match bind {
        None => PremiseBinding::auto(script.0.premises()),
        Some(map) => {
            let mut pairs: Vec<_> = map.into_iter().collect();
            pairs.sort();
            let mut b = PremiseBinding::new();
            for (premise, var) in pairs {
                let f = justify_core::parse_formula(&premise).map_err(parse_err)?;
                b = b.bind(f, &var).map_err(proof_err)?;
            }
            b
        }
    };
    bridge::lift(&script.0, &binding).map(Script).map_err(proof_err)
}

/// Recovers a Łukasiewicz proof from a justified one.
#[pyfunction]
fn externalize(script: &Script) -> PyResult<Script> {
    bridge::externalize(&script.0).map(Script).map_err(proof_err)
}

/// The justification term of the last line of a justified proof.
#[pyfunction]
fn extract_term(script: &Script) -> PyResult<String> {
    bridge::extract_term(&script.0)
        .map(|t| t.to_string())
        .map_err(proof_err)
}

/// Replaces each application introduction by the application axiom and two
/// modus ponens steps.
#[pyfunction]
fn expand_appintro(script: &Script) -> PyResult<Script> {
    jl::expand_appintro(&script.0).map(Script).map_err(proof_err)
}

/// Discharges premise `hyp`, giving a proof of `hyp -> conclusion`.
#[pyfunction]
fn deduction_theorem(script: &Script, hyp: &Formula) -> PyResult<Script> {
    luk::deduction_theorem(&script.0, &hyp.0)
        .map(Script)
        .map_err(proof_err)
}

/// Proves a tautology. Raises ProofError with the falsifying valuation if
/// the formula is not one.
#[pyfunction]
#[pyo3(signature = (formula, justified = false, max_atoms = luk::DEFAULT_MAX_ATOMS))]
fn prove(formula: &Formula, justified: bool, max_atoms: usize) -> PyResult<Script> {
    let p = luk::prove_tautology_with(&formula.0, max_atoms).map_err(proof_err)?;
    if justified {
        bridge::internalize(&p).map(Script).map_err(proof_err)
    } else {
        Ok(Script(p))
    }
}

/// A valuation (atom name to bool) under which `formula` is false, or None.
#[pyfunction]
fn falsifying_valuation(formula: &Formula) -> PyResult<Option<HashMap<String, bool>>> {
    let v = luk::falsifying_valuation(&formula.0).map_err(proof_err)?;
    Ok(v.map(|v| v.iter().map(|(a, b)| (a.to_string(), b)).collect()))
}

/// Step counts, rule histograms and term measures, as a dict.
#[pyfunction]
fn proof_metrics(py: Python<'_>, script: &Script) -> PyResult<Py<PyAny>> {
    let m = metrics::proof_metrics(&script.0).map_err(proof_err)?;
    to_python(py, &m)
}

/// Compares a Łukasiewicz proof with a justified proof of the same formula.
#[pyfunction]
fn contribution_report(py: Python<'_>, luk: &Script, jl: &Script) -> PyResult<Py<PyAny>> {
    let r = metrics::contribution_report(&luk.0, &jl.0).map_err(proof_err)?;
    to_python(py, &r)
}

#[pymodule]
fn justify(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("JustifyError", py.get_type::<JustifyError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("ProofError", py.get_type::<ProofError>())?;
    m.add_class::<Formula>()?;
    m.add_class::<Script>()?;
    m.add_class::<Verdict>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(internalize, m)?)?;
    m.add_function(wrap_pyfunction!(externalize, m)?)?;
    m.add_function(wrap_pyfunction!(extract_term, m)?)?;
    m.add_function(wrap_pyfunction!(expand_appintro, m)?)?;
    m.add_function(wrap_pyfunction!(deduction_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(prove, m)?)?;
    m.add_function(wrap_pyfunction!(falsifying_valuation, m)?)?;
    m.add_function(wrap_pyfunction!(proof_metrics, m)?)?;
    m.add_function(wrap_pyfunction!(contribution_report, m)?)?;
    Ok(())
}

//! Classical truth-table semantics for justification-free formulas.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("formula contains a justification subformula")]
    Justification,
    #[error("valuation does not assign atom `{0}`")]
    MissingAtom(String),
}

/// An assignment of truth values to atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<Arc<str>, bool>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, atom: impl Into<Arc<str>>, value: bool) {
        self.0.insert(atom.into(), value);
    }

    pub fn with(mut self, atom: &str, value: bool) -> Self {
        self.set(atom, value);
        self
    }

    pub fn get(&self, atom: &str) -> Option<bool> {
        self.0.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.0.iter().map(|(k, v)| (&**k, *v))
    }

    /// The valuation numbered `mask` over `atoms`: atom `i` is true iff bit
    /// `n-1-i` is set, so masks count up with the first atom most significant.
    pub fn from_mask(atoms: &[Arc<str>], mask: u64) -> Self {
        let n = atoms.len();
        let mut v = Valuation::new();
        for (i, a) in atoms.iter().enumerate() {
            v.set(a.clone(), mask >> (n - 1 - i) & 1 == 1);
        }
        v
    }
}

/// Formats as `p=1,q=0`.
impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (atom, value) in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{atom}={}", u8::from(value))?;
        }
        Ok(())
    }
}

pub fn eval_formula(f: &Formula, v: &Valuation) -> Result<bool, EvalError> {
    if f.has_justification() {
        return Err(EvalError::Justification);
    }
    eval(f, v)
}

fn eval(f: &Formula, v: &Valuation) -> Result<bool, EvalError> {
    Ok(match f {
        Formula::Atom(p) => v.get(p).ok_or_else(|| EvalError::MissingAtom(p.to_string()))?,
        Formula::Neg(a) => !eval(a, v)?,
        Formula::Impl(a, b) => !eval(a, v)? || eval(b, v)?,
        Formula::And(a, b) => eval(a, v)? && eval(b, v)?,
        Formula::Or(a, b) => eval(a, v)? || eval(b, v)?,
        Formula::Just(..) => return Err(EvalError::Justification),
    })
}

// Below this many atoms the table is walked sequentially.
const PARALLEL_ATOMS: usize = 12;

/// Returns the first valuation (in mask order) that makes `f` false, or
/// `None` if `f` is a tautology.
pub fn falsifying_valuation(f: &Formula) -> Result<Option<Valuation>, EvalError> {
    if f.has_justification() {
        return Err(EvalError::Justification);
    }
    let atoms: Vec<Arc<str>> = f.atoms().into_iter().collect();
    assert!(atoms.len() < 64, "too many atoms for a truth table");
    let rows = 1u64 << atoms.len();
    let falsifies = |mask: u64| {
        let v = Valuation::from_mask(&atoms, mask);
        // Atoms are total over `f`, so evaluation can not fail here.
        (!eval(f, &v).expect("valuation covers all atoms")).then_some(v)
    };
    Ok(if atoms.len() < PARALLEL_ATOMS {
        (0..rows).find_map(falsifies)
    } else {
        (0..rows).into_par_iter().find_map_first(falsifies)
    })
}

pub fn is_tautology(f: &Formula) -> Result<bool, EvalError> {
    Ok(falsifying_valuation(f)?.is_none())
}

//! The Łukasiewicz calculus: axioms L1–L3 and modus ponens.

pub(crate) mod builder;
mod check;
mod deduction;
pub mod lemmas;
mod prover;
mod semantics;

pub use check::check_luk_proof;
pub use deduction::{deduction_theorem, DeductionError};
pub use lemmas::{derive_lemma, LemmaError, LemmaId};
pub use prover::{prove_tautology, prove_tautology_with, ProveError, DEFAULT_MAX_ATOMS};
pub use semantics::{eval_formula, falsifying_valuation, is_tautology, EvalError, Valuation};

//! A proof kernel for Łukasiewicz-style classical propositional logic and its
//! justification-logic extension.
//!
//! Derivations are [`script::ProofScript`]s. The [`luk`] module checks plain
//! Hilbert-style proofs, decides tautologies and builds proofs for them; the
//! [`jl`] module checks proofs in the justified calculus; [`bridge`] turns
//! one kind of proof into the other, synthesizing justification terms along
//! the way; [`metrics`] measures what a derivation contributes.

pub mod syntax;
pub mod bridge;
pub mod jl;
pub mod luk;
pub mod metrics;
pub mod random;
pub mod script;

pub use script::{Calculus, ProofLine, ProofScript, Rule, ScriptError, Status, Verdict};
pub use syntax::{parse_formula, parse_term, Formula, Term};

/// Checks `p` with the checker for its calculus, using the default constant
/// specification for JL scripts.
pub fn check(p: &ProofScript) -> Verdict {
    match p.calculus() {
        Calculus::Luk => luk::check_luk_proof(p),
        Calculus::Jl => jl::check_jl_proof(p, &jl::ConstantSpecification::default()),
    }
}

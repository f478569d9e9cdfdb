//! A complete prover for tautologies, following Kalmár's construction.
//!
//! For every valuation of the atoms, the signed formula (the formula or its
//! negation, whichever is true) is derived from the signed atoms by induction
//! on the formula. Atoms are then eliminated one at a time: the two branches
//! `Γ, p ⊢ A` and `Γ, ~p ⊢ A` are discharged and joined by case analysis.
//!
//! The search is exponential in the number of atoms, so it is bounded.

use std::sync::Arc;

use thiserror::Error;

use super::builder::{Builder, Discharge, LineRef};
use super::lemmas;
use super::semantics::{falsifying_valuation, Valuation};
use crate::script::{Calculus, ProofLine, ProofScript, Rule};
use crate::syntax::{match_scheme, Formula, LukAxiom};

pub const DEFAULT_MAX_ATOMS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProveError {
    #[error("formula contains a justification subformula")]
    Justification,
    #[error("not a tautology: false under {0}")]
    NotATautology(Valuation),
    #[error("formula has {atoms} atoms, more than the bound of {bound}")]
    AtomBoundExceeded { atoms: usize, bound: usize },
}

/// Builds a premise-free Luk proof of `f`.
///
/// `&` and `|` have no axioms of their own, so they are first rewritten by
/// [`Formula::expand_definitions`]; the proof ends in that expansion, which
/// is `f` itself whenever `f` only uses `~` and `->`.
pub fn prove_tautology(f: &Formula) -> Result<ProofScript, ProveError> {
    prove_tautology_with(f, DEFAULT_MAX_ATOMS)
}

pub fn prove_tautology_with(f: &Formula, max_atoms: usize) -> Result<ProofScript, ProveError> {
    if f.has_justification() {
        return Err(ProveError::Justification);
    }
    let goal = f.expand_definitions();
    let atoms: Vec<Arc<str>> = goal.atoms().into_iter().collect();
    if atoms.len() > max_atoms {
        return Err(ProveError::AtomBoundExceeded {
            atoms: atoms.len(),
            bound: max_atoms,
        });
    }
    if let Some(v) = falsifying_valuation(&goal).map_err(|_| ProveError::Justification)? {
        return Err(ProveError::NotATautology(v));
    }

    for ax in LukAxiom::ALL {
        if match_scheme(&goal, ax.scheme()).is_some() {
            let line = ProofLine::new(goal, Rule::Axiom(ax));
            return Ok(ProofScript::new(Calculus::Luk, vec![], vec![line])
                .expect("one-line axiom script"));
        }
    }
    if let Some((a, b)) = goal.as_impl() {
        if a == b {
            let mut builder = Builder::new(vec![]);
            let r = lemmas::identity(&mut builder, a);
            return Ok(builder.finish(r));
        }
    }

    let atoms: Vec<Formula> = atoms.into_iter().map(Formula::Atom).collect();
    let mut literals = Vec::with_capacity(atoms.len());
    let (builder, r) = eliminate(&goal, &atoms, &mut literals);
    Ok(builder.finish(r))
}

/// Derives `goal` from the signed atoms in `literals`, splitting on the
/// remaining atoms until the literals decide the goal.
fn eliminate(goal: &Formula, atoms: &[Formula], literals: &mut Vec<Formula>) -> (Builder, LineRef) {
    let depth = literals.len();
    if depth == atoms.len() || truth(goal, literals) == Some(true) {
        let mut b = Builder::new(literals.clone());
        let r = signed(&mut b, goal, literals);
        debug_assert_eq!(b.formula(r), goal, "leaf must derive the tautology itself");
        return (b, r);
    }
    let atom = &atoms[depth];
    let negated = Formula::neg(atom.clone());

    literals.push(atom.clone());
    let (pos, rp) = eliminate(goal, atoms, literals);
    literals.pop();
    let mut b = Builder::new(literals.clone());
    if !pos.uses(atom, rp) {
        let r = b.splice(&pos, rp);
        return (b, r);
    }
    literals.push(negated.clone());
    let (neg, rn) = eliminate(goal, atoms, literals);
    literals.pop();
    if !neg.uses(&negated, rn) {
        let r = b.splice(&neg, rn);
        return (b, r);
    }

    let (pos, rp) = pos.discharge(atom, rp, Discharge::Lazy);
    let (neg, rn) = neg.discharge(&negated, rn, Discharge::Lazy);
    let if_pos = b.splice(&pos, rp);
    let if_neg = b.splice(&neg, rn);
    let cases = lemmas::case_analysis(&mut b, atom, goal);
    let step = b.mp(cases, if_pos);
    let r = b.mp(step, if_neg);
    (b, r)
}

/// Value of `f` under the partial valuation `literals`, if it is decided.
fn truth(f: &Formula, literals: &[Formula]) -> Option<bool> {
    match f {
        Formula::Atom(_) => {
            if literals.contains(f) {
                Some(true)
            } else if literals.iter().any(|l| matches!(l, Formula::Neg(a) if **a == *f)) {
                Some(false)
            } else {
                None
            }
        }
        Formula::Neg(a) => truth(a, literals).map(|v| !v),
        Formula::Impl(a, c) => match (truth(a, literals), truth(c, literals)) {
            (Some(false), _) | (_, Some(true)) => Some(true),
            (Some(true), Some(false)) => Some(false),
            _ => None,
        },
        _ => unreachable!("prover works on expanded, justification-free formulas"),
    }
}

/// Derives the signed form of `f`: `f` if it is true under `literals`, `~f`
/// if false. `f` must be decided by `literals`.
fn signed(b: &mut Builder, f: &Formula, literals: &[Formula]) -> LineRef {
    match f {
        Formula::Atom(_) => {
            let lit = if literals.contains(f) {
                f.clone()
            } else {
                Formula::neg(f.clone())
            };
            b.hyp(&lit)
        }
        Formula::Neg(a) => {
            let inner = signed(b, a, literals);
            if truth(a, literals) == Some(true) {
                let dni = lemmas::double_negation_intro(b, a);
                b.mp(dni, inner)
            } else {
                // `~a` is already the signed form of `a`.
                inner
            }
        }
        Formula::Impl(a, c) => {
            if truth(a, literals) == Some(false) {
                let na = signed(b, a, literals);
                let boom = lemmas::explosion(b, a, c);
                b.mp(boom, na)
            } else if truth(c, literals) == Some(true) {
                let sc = signed(b, c, literals);
                let k = b.l1(c, a);
                b.mp(k, sc)
            } else {
                let sa = signed(b, a, literals);
                let sc = signed(b, c, literals);
                let lemma = lemmas::negated_implication(b, a, c);
                let step = b.mp(lemma, sa);
                b.mp(step, sc)
            }
        }
        _ => unreachable!("prover works on expanded, justification-free formulas"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::luk::check_luk_proof;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn proves(text: &str) -> ProofScript {
        let s = prove_tautology(&f(text)).unwrap();
        assert!(check_luk_proof(&s).is_valid(), "{text}: {}", check_luk_proof(&s));
        assert!(s.premises().is_empty());
        s
    }

    #[test]
    fn axiom_instances_take_one_line() {
        let s = proves("p -> (q -> p)");
        assert_eq!(s.len(), 1);
        let s = proves("(~p -> ~q) -> (q -> p)");
        assert_eq!(s.len(), 1);
        assert_eq!(s.line(1).rule, Rule::Axiom(LukAxiom::L3));
    }

    #[test]
    fn identity_takes_five_lines() {
        let s = proves("p -> p");
        assert_eq!(s.len(), 5);
        assert_eq!(s.conclusion(), &f("p -> p"));
    }

    #[test]
    fn peirce_and_friends() {
        for t in [
            "((p -> q) -> p) -> p",
            "~~p -> p",
            "(p -> q) -> ((q -> r) -> (p -> r))",
            "~p -> (p -> q)",
            "(~p -> p) -> p",
            "~(p -> p) -> q",
        ] {
            let s = proves(t);
            assert_eq!(s.conclusion(), &f(t));
        }
    }

    #[test]
    fn connectives_are_expanded() {
        let s = proves("p | ~p");
        assert_eq!(s.conclusion(), &f("~p -> ~p"));
        let s = proves("p & q -> q & p");
        assert_eq!(s.conclusion(), &f("p & q -> q & p").expand_definitions());
    }

    #[test]
    fn errors() {
        match prove_tautology(&f("p -> q")) {
            Err(ProveError::NotATautology(v)) => assert_eq!(v.to_string(), "p=1,q=0"),
            other => panic!("{other:?}"),
        }
        assert_eq!(prove_tautology(&f("x:p -> x:p")), Err(ProveError::Justification));
        assert_eq!(
            prove_tautology_with(&f("p -> (q -> (r -> p))"), 2),
            Err(ProveError::AtomBoundExceeded { atoms: 3, bound: 2 })
        );
    }

    #[test]
    fn four_atoms() {
        proves("(p -> q) -> ((r -> s) -> ((p -> ~s) -> (q -> ~r) -> ~p | ~~p))");
    }
}

use thiserror::Error;

use super::builder::{Builder, Discharge};
use super::check_luk_proof;
use crate::script::{Calculus, ProofScript, Verdict};
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("expected a luk script")]
    NotLuk,
    #[error("input proof is invalid: {0}")]
    Invalid(Verdict),
    #[error("`{0}` is not among the premises")]
    NotAPremise(Formula),
}

/// Turns a proof of `B` from `Γ, hyp` into a proof of `hyp -> B` from `Γ`.
///
/// Each line `ψ` of the input becomes a derivation of `hyp -> ψ`: the
/// identity proof when `ψ` is `hyp`, L1 and modus ponens when `ψ` is an
/// axiom or another premise, and L2 with two modus ponens steps when `ψ`
/// came from modus ponens. Every copy of `hyp` is removed from the premises.
pub fn deduction_theorem(p: &ProofScript, hyp: &Formula) -> Result<ProofScript, DeductionError> {
    if p.calculus() != Calculus::Luk {
        return Err(DeductionError::NotLuk);
    }
    if !p.premises().contains(hyp) {
        return Err(DeductionError::NotAPremise(hyp.clone()));
    }
    let verdict = check_luk_proof(p);
    if !verdict.is_valid() {
        return Err(DeductionError::Invalid(verdict));
    }
    let (builder, map) = Builder::import(p);
    let target = map[p.len()];
    let (out, r) = builder.discharge(hyp, target, Discharge::Strict);
    Ok(out.finish(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::luk::is_tautology;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    const DERIVATION: &str = "\
premise: p
premise: q -> (p -> r)
1. p ; premise
2. q -> (p -> r) ; premise
3. p -> (q -> p) ; ax1
4. q -> p ; mp 3 1
5. (q -> (p -> r)) -> ((q -> p) -> (q -> r)) ; ax2
6. (q -> p) -> (q -> r) ; mp 5 2
7. q -> r ; mp 6 4
";

    #[test]
    fn identity_case() {
        let s = ProofScript::parse("premise: p\n1. p ; premise").unwrap();
        let out = deduction_theorem(&s, &f("p")).unwrap();
        assert!(out.premises().is_empty());
        assert_eq!(out.conclusion(), &f("p -> p"));
        assert!(check_luk_proof(&out).is_valid());
    }

    #[test]
    fn discharges_one_premise() {
        let s = ProofScript::parse(DERIVATION).unwrap();
        let out = deduction_theorem(&s, &f("p")).unwrap();
        assert_eq!(out.premises(), &[f("q -> (p -> r)")]);
        assert_eq!(out.conclusion(), &f("p -> (q -> r)"));
        assert!(check_luk_proof(&out).is_valid());
    }

    #[test]
    fn chained_twice() {
        let s = ProofScript::parse(DERIVATION).unwrap();
        let once = deduction_theorem(&s, &f("p")).unwrap();
        let twice = deduction_theorem(&once, &f("q -> (p -> r)")).unwrap();
        assert!(twice.premises().is_empty());
        let goal = f("(q -> (p -> r)) -> (p -> (q -> r))");
        assert_eq!(twice.conclusion(), &goal);
        assert!(check_luk_proof(&twice).is_valid());
        assert!(is_tautology(&goal).unwrap());
    }

    #[test]
    fn errors() {
        let s = ProofScript::parse(DERIVATION).unwrap();
        assert_eq!(
            deduction_theorem(&s, &f("r")),
            Err(DeductionError::NotAPremise(f("r")))
        );
        let bad = ProofScript::parse("premise: p\n1. p ; premise\n2. q ; premise").unwrap();
        assert!(matches!(
            deduction_theorem(&bad, &f("p")),
            Err(DeductionError::Invalid(_))
        ));
        let jl = ProofScript::parse("premise: x:p\n1. x:p ; premise").unwrap();
        assert_eq!(deduction_theorem(&jl, &f("x:p")), Err(DeductionError::NotLuk));
    }
}

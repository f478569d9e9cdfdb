//! Translation between Łukasiewicz proofs and justified proofs.
//!
//! [`internalize`] and [`lift`] walk a Luk proof and attach a justification
//! term to every line: a CS constant to each axiom, a variable to each
//! premise, and `[s*u]` to each modus ponens step whose major and minor lines
//! carry `s` and `u`. [`externalize`] goes the other way. A term alone does
//! not determine the intermediate formulas of a proof, so it follows the
//! rules recorded in the JL script: constants become axiom lines,
//! applications become modus ponens, sums collapse to the summand that was
//! actually derived, and variables become premises.

use std::sync::Arc;

use thiserror::Error;

use crate::jl::{appintro_roles, check_jl_proof, ConstantSpecification};
use crate::luk::builder::{Builder, LineRef};
use crate::luk::check_luk_proof;
use crate::script::{Calculus, ProofLine, ProofScript, Rule, Verdict};
use crate::syntax::{classify_term_ident, Formula, Term, TermLeafKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("expected a {0} script")]
    WrongCalculus(Calculus),
    #[error("input proof is invalid: {0}")]
    Invalid(Verdict),
    #[error("proof has premises; use lift with a premise binding")]
    HasPremises,
    #[error("premise `{0}` has no variable binding")]
    UnboundPremise(Formula),
    #[error("`{0}` is not a variable identifier")]
    NotAVariable(String),
    #[error("variable `{0}` is bound to more than one premise")]
    DuplicateVariable(String),
    #[error("premise `{0}` is bound twice")]
    DuplicatePremise(Formula),
    #[error("final line `{0}` is not of the form t:B")]
    NotJustified(Formula),
    #[error("line {line}: `{formula}` contains a justification subformula")]
    NestedJustification { line: usize, formula: Formula },
    #[error("premise `{0}` is not of the form x:A with A justification-free")]
    PremiseShape(Formula),
    #[error("line {0}: the script does not witness how its term was built")]
    Unwitnessed(usize),
}

/// Assignment of justification variables to premises.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PremiseBinding {
    pairs: Vec<(Formula, Arc<str>)>,
}

impl PremiseBinding {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `premise ↦ var`. The variable must be a variable identifier
    /// (`x...` or `y...`) not already in use, and the premise must not
    /// already be bound.
    pub fn bind(mut self, premise: Formula, var: &str) -> Result<Self, BridgeError> {
        if classify_term_ident(var) != Some(TermLeafKind::Var) {
            return Err(BridgeError::NotAVariable(var.to_string()));
        }
        if self.pairs.iter().any(|(_, v)| &**v == var) {
            return Err(BridgeError::DuplicateVariable(var.to_string()));
        }
        if self.pairs.iter().any(|(f, _)| *f == premise) {
            return Err(BridgeError::DuplicatePremise(premise));
        }
        self.pairs.push((premise, var.into()));
        Ok(self)
    }

    /// Binds the distinct premises to `x1`, `x2`, ... in order.
    pub fn auto(premises: &[Formula]) -> Self {
        let mut out = PremiseBinding::new();
        for p in premises {
            if out.get(p).is_none() {
                let var = format!("x{}", out.pairs.len() + 1);
                out.pairs.push((p.clone(), var.into()));
            }
        }
        out
    }

    pub fn get(&self, premise: &Formula) -> Option<Term> {
        self.pairs
            .iter()
            .find(|(f, _)| f == premise)
            .map(|(_, v)| Term::Var(v.clone()))
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.pairs.iter().map(|(_, v)| &**v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Formula, &str)> {
        self.pairs.iter().map(|(f, v)| (f, &**v))
    }
}

/// Turns a valid premise-free Luk proof into a JL proof of `t:B`, one line
/// per line.
pub fn internalize(p: &ProofScript) -> Result<ProofScript, BridgeError> {
    internalize_with(p, &ConstantSpecification::default())
}

pub fn internalize_with(
    p: &ProofScript,
    cs: &ConstantSpecification,
) -> Result<ProofScript, BridgeError> {
    if p.calculus() == Calculus::Luk && !p.premises().is_empty() {
        return Err(BridgeError::HasPremises);
    }
    lift_with(p, &PremiseBinding::new(), cs)
}

/// Like [`internalize`], but premises `A` become `x:A` under `binding`.
pub fn lift(p: &ProofScript, binding: &PremiseBinding) -> Result<ProofScript, BridgeError> {
    lift_with(p, binding, &ConstantSpecification::default())
}

pub fn lift_with(
    p: &ProofScript,
    binding: &PremiseBinding,
    cs: &ConstantSpecification,
) -> Result<ProofScript, BridgeError> {
    if p.calculus() != Calculus::Luk {
        return Err(BridgeError::WrongCalculus(Calculus::Luk));
    }
    let verdict = check_luk_proof(p);
    if !verdict.is_valid() {
        return Err(BridgeError::Invalid(verdict));
    }
    let premises = p
        .premises()
        .iter()
        .map(|a| {
            binding
                .get(a)
                .map(|x| Formula::just(x, a.clone()))
                .ok_or_else(|| BridgeError::UnboundPremise(a.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut terms: Vec<Term> = Vec::with_capacity(p.len());
    let mut lines = Vec::with_capacity(p.len());
    for line in p.lines() {
        let (term, rule) = match line.rule {
            Rule::Premise => (
                binding.get(&line.formula).expect("premises are bound"),
                Rule::Premise,
            ),
            Rule::Axiom(ax) => (cs.term(ax), Rule::Axiom(ax)),
            Rule::Mp { major, minor } => (
                Term::app(terms[major - 1].clone(), terms[minor - 1].clone()),
                Rule::AppIntro(major, minor),
            ),
            _ => unreachable!("checked luk script"),
        };
        lines.push(ProofLine::new(
            Formula::just(term.clone(), line.formula.clone()),
            rule,
        ));
        terms.push(term);
    }
    Ok(ProofScript::new(Calculus::Jl, premises, lines).expect("same shape as the input"))
}

/// The justification term of the final line.
pub fn extract_term(p: &ProofScript) -> Result<Term, BridgeError> {
    if p.calculus() != Calculus::Jl {
        return Err(BridgeError::WrongCalculus(Calculus::Jl));
    }
    p.conclusion()
        .as_just()
        .map(|(t, _)| t.clone())
        .ok_or_else(|| BridgeError::NotJustified(p.conclusion().clone()))
}

/// How the body of a justified line is obtained in the Luk proof.
enum Witness {
    Axiom(crate::syntax::LukAxiom),
    Premise,
    /// Modus ponens from the bodies of two JL lines (major, minor).
    Mp(usize, usize),
    /// The body is the same as that of another line (sum weakening).
    Same(usize),
}

fn witness(p: &ProofScript, n: usize) -> Result<Witness, BridgeError> {
    let line = p.line(n);
    if line.formula.as_just().is_none() {
        return Err(BridgeError::Unwitnessed(n));
    }
    match line.rule {
        Rule::Premise => Ok(Witness::Premise),
        Rule::Axiom(ax) => Ok(Witness::Axiom(ax)),
        Rule::AppIntro(i, j) => appintro_roles(p, i, j, &line.formula)
            .map(|(major, minor)| Witness::Mp(major, minor))
            .ok_or(BridgeError::Unwitnessed(n)),
        Rule::Mp { major, minor } => match p.line(major).rule {
            Rule::SumAxiom => Ok(Witness::Same(minor)),
            Rule::Mp {
                major: ax_line,
                minor: fn_line,
            } if p.line(ax_line).rule == Rule::AppAxiom => Ok(Witness::Mp(fn_line, minor)),
            _ => Err(BridgeError::Unwitnessed(n)),
        },
        Rule::AppAxiom | Rule::SumAxiom => Err(BridgeError::Unwitnessed(n)),
    }
}

/// Recovers a Luk proof of `B` from a valid JL proof of `t:B`.
pub fn externalize(p: &ProofScript) -> Result<ProofScript, BridgeError> {
    externalize_with(p, &ConstantSpecification::default())
}

pub fn externalize_with(
    p: &ProofScript,
    cs: &ConstantSpecification,
) -> Result<ProofScript, BridgeError> {
    if p.calculus() != Calculus::Jl {
        return Err(BridgeError::WrongCalculus(Calculus::Jl));
    }
    let verdict = check_jl_proof(p, cs);
    if !verdict.is_valid() {
        return Err(BridgeError::Invalid(verdict));
    }
    let Some((_, goal)) = p.conclusion().as_just() else {
        return Err(BridgeError::NotJustified(p.conclusion().clone()));
    };
    if goal.has_justification() {
        return Err(BridgeError::NestedJustification {
            line: p.len(),
            formula: goal.clone(),
        });
    }
    let mut hyps = Vec::with_capacity(p.premises().len());
    for premise in p.premises() {
        match premise.as_just() {
            Some((Term::Var(_), a)) if !a.has_justification() => hyps.push(a.clone()),
            _ => return Err(BridgeError::PremiseShape(premise.clone())),
        }
    }

    // Backwards: find the lines the final term depends on.
    let mut witnesses: Vec<Option<Witness>> = (0..=p.len()).map(|_| None).collect();
    let mut stack = vec![p.len()];
    while let Some(n) = stack.pop() {
        if witnesses[n].is_some() {
            continue;
        }
        let w = witness(p, n)?;
        match w {
            Witness::Mp(a, b) => stack.extend([a, b]),
            Witness::Same(a) => stack.push(a),
            Witness::Axiom(_) | Witness::Premise => {}
        }
        witnesses[n] = Some(w);
    }

    // Forwards: emit the bodies.
    let mut b = Builder::new(hyps);
    let mut emitted: Vec<LineRef> = vec![0; p.len() + 1];
    for n in 1..=p.len() {
        let Some(w) = &witnesses[n] else { continue };
        let body = p.line(n).formula.as_just().expect("witnessed lines are justified").1;
        if body.has_justification() {
            return Err(BridgeError::NestedJustification {
                line: n,
                formula: body.clone(),
            });
        }
        emitted[n] = match *w {
            Witness::Axiom(ax) => b.axiom(ax, body.clone()),
            Witness::Premise => b.hyp(body),
            Witness::Mp(major, minor) => b.mp(emitted[major], emitted[minor]),
            Witness::Same(other) => emitted[other],
        };
    }
    Ok(b.finish(emitted[p.len()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_term};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    const LUK_PAIR: &str = "\
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

    const JL_PAIR: &str = "\
system: jl
premise: x:p
premise: y:(q -> (p -> r))
1. x:p ; premise
2. y:(q -> (p -> r)) ; premise
3. c1:(p -> (q -> p)) ; cs ax1
4. [c1*x]:(q -> p) ; appintro 3 1
5. c2:((q -> (p -> r)) -> ((q -> p) -> (q -> r))) ; cs ax2
6. [c2*y]:((q -> p) -> (q -> r)) ; appintro 5 2
7. [[c2*y]*[c1*x]]:(q -> r) ; appintro 6 4
";

    #[test]
    fn lift_reproduces_golden_pair() {
        let s = ProofScript::parse(LUK_PAIR).unwrap();
        let b = PremiseBinding::new()
            .bind(f("p"), "x")
            .unwrap()
            .bind(f("q -> (p -> r)"), "y")
            .unwrap();
        let out = lift(&s, &b).unwrap();
        assert_eq!(out.to_string(), JL_PAIR);
        assert_eq!(extract_term(&out).unwrap(), parse_term("[[c2*y]*[c1*x]]").unwrap());

        let back = externalize(&out).unwrap();
        assert!(check_luk_proof(&back).is_valid());
        assert_eq!(back.conclusion(), &f("q -> r"));
        assert_eq!(back.premises(), s.premises());
    }

    #[test]
    fn lift_six_line_derivation() {
        let s = ProofScript::parse(
            "premise: p\npremise: p -> q\npremise: (p -> q) -> (q -> r)\n\
             1. p ; premise\n2. p -> q ; premise\n3. q ; mp 2 1\n\
             4. (p -> q) -> (q -> r) ; premise\n5. q -> r ; mp 4 2\n6. r ; mp 5 3\n",
        )
        .unwrap();
        let b = PremiseBinding::auto(s.premises());
        let out = lift(&s, &b).unwrap();
        assert!(check_jl_proof(&out, &ConstantSpecification::default()).is_valid());
        assert_eq!(out.conclusion(), &f("[[x3*x2]*[x2*x1]]:r"));
    }

    #[test]
    fn identity_internalizes_without_variables() {
        let s = crate::luk::prove_tautology(&f("p -> p")).unwrap();
        let out = internalize(&s).unwrap();
        assert_eq!(out.len(), s.len());
        assert!(check_jl_proof(&out, &ConstantSpecification::default()).is_valid());
        assert!(!extract_term(&out).unwrap().has_variables());
        assert_eq!(out.conclusion().as_just().unwrap().1, &f("p -> p"));
    }

    #[test]
    fn single_premise_line() {
        let s = ProofScript::parse("premise: p\n1. p ; premise").unwrap();
        let b = PremiseBinding::new().bind(f("p"), "x").unwrap();
        let out = lift(&s, &b).unwrap();
        assert_eq!(out.to_string(), "system: jl\npremise: x:p\n1. x:p ; premise\n");
    }

    #[test]
    fn axiom_line_becomes_cs_line() {
        let s = ProofScript::parse("1. p -> (q -> p) ; ax1").unwrap();
        let out = internalize(&s).unwrap();
        assert_eq!(out.to_string(), "system: jl\n1. c1:(p -> (q -> p)) ; cs ax1\n");
        assert_eq!(extract_term(&out).unwrap(), Term::constant("c1"));
        let back = externalize(&out).unwrap();
        assert_eq!(back.to_string(), "system: luk\n1. p -> (q -> p) ; ax1\n");
    }

    #[test]
    fn sum_collapses_to_summand() {
        let s = ProofScript::parse(
            "premise: x:p\n1. x:p ; premise\n2. x:p -> [x+y]:p ; sum\n3. [x+y]:p ; mp 2 1",
        )
        .unwrap();
        let out = externalize(&s).unwrap();
        assert_eq!(out.to_string(), "system: luk\npremise: p\n1. p ; premise\n");
    }

    #[test]
    fn expanded_application_is_witnessed() {
        let s = ProofScript::parse(
            "premise: x:p\n\
             1. x:p ; premise\n\
             2. c1:(p -> (q -> p)) ; cs ax1\n\
             3. c1:(p -> (q -> p)) -> (x:p -> [c1*x]:(q -> p)) ; app\n\
             4. x:p -> [c1*x]:(q -> p) ; mp 3 2\n\
             5. [c1*x]:(q -> p) ; mp 4 1\n",
        )
        .unwrap();
        let out = externalize(&s).unwrap();
        assert!(check_luk_proof(&out).is_valid());
        assert_eq!(out.conclusion(), &f("q -> p"));
        assert_eq!(out.len(), 3);
    }

    #[test]
    fn errors() {
        let s = ProofScript::parse("premise: p\n1. p ; premise").unwrap();
        assert_eq!(internalize(&s), Err(BridgeError::HasPremises));
        assert_eq!(
            lift(&s, &PremiseBinding::new()),
            Err(BridgeError::UnboundPremise(f("p")))
        );
        assert_eq!(
            PremiseBinding::new().bind(f("p"), "c1"),
            Err(BridgeError::NotAVariable("c1".into()))
        );
        assert!(matches!(
            PremiseBinding::new()
                .bind(f("p"), "x")
                .unwrap()
                .bind(f("q"), "x"),
            Err(BridgeError::DuplicateVariable(_))
        ));

        let not_just = ProofScript::parse("1. x:(p->q) -> (y:p -> [x*y]:q) ; app").unwrap();
        assert!(matches!(externalize(&not_just), Err(BridgeError::NotJustified(_))));

        let nested = ProofScript::parse("1. c1:(x:p -> (q -> x:p)) ; cs ax1").unwrap();
        assert!(matches!(
            externalize(&nested),
            Err(BridgeError::NestedJustification { line: 1, .. })
        ));

        let bad_premise = ProofScript::parse("premise: c1:p\n1. c1:p ; premise").unwrap();
        assert!(matches!(externalize(&bad_premise), Err(BridgeError::PremiseShape(_))));

        let opaque = ProofScript::parse(
            "premise: x:p\npremise: x:p -> [x+y]:p\n1. x:p ; premise\n2. x:p -> [x+y]:p ; premise\n3. [x+y]:p ; mp 2 1",
        )
        .unwrap();
        assert!(matches!(externalize(&opaque), Err(BridgeError::PremiseShape(_))));

        let luk = ProofScript::parse("1. p -> (q -> p) ; ax1").unwrap();
        assert_eq!(extract_term(&luk), Err(BridgeError::WrongCalculus(Calculus::Jl)));
        assert_eq!(
            extract_term(&internalize(&luk).unwrap()).unwrap(),
            parse_term("c1").unwrap()
        );
    }

    #[test]
    fn sum_of_constants() {
        let s = ProofScript::parse(
            "1. c1:(p -> (q -> p)) ; cs ax1\n\
             2. c1:(p -> (q -> p)) -> [c1+c2]:(p -> (q -> p)) ; sum\n\
             3. [c1+c2]:(p -> (q -> p)) ; mp 2 1\n",
        )
        .unwrap();
        let out = externalize(&s).unwrap();
        assert_eq!(out.len(), 1);
    }
}

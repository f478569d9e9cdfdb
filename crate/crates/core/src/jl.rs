//! The justification calculus: Application and Sum axioms, CS lines for the
//! three Łukasiewicz schemes, modus ponens, and Application introduction.

use std::sync::Arc;

use thiserror::Error;

use crate::script::{Calculus, ProofLine, ProofScript, Rule, Verdict};
use crate::syntax::scheme::application;
use crate::syntax::{
    classify_term_ident, match_scheme, Formula, LukAxiom, SchemeId, Term, TermLeafKind,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CsError {
    #[error("`{0}` is not a constant identifier")]
    NotAConstant(String),
    #[error("constant `{0}` is assigned to more than one scheme")]
    NotInjective(String),
}

/// Which constant justifies every instance of each Łukasiewicz scheme.
///
/// The specification is schematic: one constant per scheme, and every
/// instance of the scheme is justified by it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantSpecification {
    constants: [Arc<str>; 3],
}

impl Default for ConstantSpecification {
    fn default() -> Self {
        ConstantSpecification {
            constants: ["c1".into(), "c2".into(), "c3".into()],
        }
    }
}

impl ConstantSpecification {
    pub fn new(l1: &str, l2: &str, l3: &str) -> Result<Self, CsError> {
        let constants = [l1, l2, l3];
        for c in constants {
            if classify_term_ident(c) != Some(TermLeafKind::Const) {
                return Err(CsError::NotAConstant(c.to_string()));
            }
        }
        for i in 0..3 {
            if constants[i + 1..].contains(&constants[i]) {
                return Err(CsError::NotInjective(constants[i].to_string()));
            }
        }
        Ok(ConstantSpecification {
            constants: constants.map(Arc::from),
        })
    }

    pub fn constant(&self, ax: LukAxiom) -> &Arc<str> {
        &self.constants[ax.number() - 1]
    }

    pub fn term(&self, ax: LukAxiom) -> Term {
        Term::Const(self.constant(ax).clone())
    }

    /// The scheme a constant stands for, if any.
    pub fn scheme_of(&self, constant: &str) -> Option<LukAxiom> {
        LukAxiom::ALL
            .into_iter()
            .find(|ax| &**self.constant(*ax) == constant)
    }
}

/// True iff `f` is `s:(A -> B) -> (t:A -> [s*t]:B)` for some `s`, `t`, `A`, `B`.
pub fn recognize_application_instance(f: &Formula) -> bool {
    match_scheme(f, SchemeId::App).is_some()
}

/// True iff `f` is `s:A -> [s+t]:A` or `t:A -> [s+t]:A`.
pub fn recognize_sum_instance(f: &Formula) -> bool {
    match_scheme(f, SchemeId::SumL).is_some() || match_scheme(f, SchemeId::SumR).is_some()
}

/// Decides which of two lines is the major premise `s:(A -> B)` of an
/// Application introduction yielding `conclusion = [s*t]:B` with `t:A` the
/// minor. Returns `(major, minor)`.
pub fn appintro_roles(
    p: &ProofScript,
    i: usize,
    j: usize,
    conclusion: &Formula,
) -> Option<(usize, usize)> {
    let fits = |major: usize, minor: usize| {
        let (s, body) = p.line(major).formula.as_just()?;
        let (a, b) = body.as_impl()?;
        let (t, a2) = p.line(minor).formula.as_just()?;
        (a == a2 && *conclusion == Formula::just(Term::app(s.clone(), t.clone()), b.clone()))
            .then_some((major, minor))
    };
    fits(i, j).or_else(|| fits(j, i))
}

/// Checks a JL proof line by line against `cs`.
pub fn check_jl_proof(p: &ProofScript, cs: &ConstantSpecification) -> Verdict {
    if p.calculus() != Calculus::Jl {
        return Verdict::invalid(1, "not a jl script");
    }
    for (pos, line) in p.lines().iter().enumerate() {
        let n = pos + 1;
        let f = &line.formula;
        let failure = match line.rule {
            Rule::Premise => (!p.premises().contains(f))
                .then(|| format!("`{f}` is not a declared premise")),
            Rule::Axiom(ax) => match f.as_just() {
                Some((Term::Const(c), body)) if *c == *cs.constant(ax) => {
                    match_scheme(body, ax.scheme())
                        .is_none()
                        .then(|| format!("`{body}` is not an instance of {ax}"))
                }
                _ => Some(format!(
                    "expected `{}:<instance of {ax}>`",
                    cs.constant(ax)
                )),
            },
            Rule::AppAxiom => (!recognize_application_instance(f))
                .then(|| "not an instance of the Application axiom".to_string()),
            Rule::SumAxiom => {
                (!recognize_sum_instance(f)).then(|| "not an instance of a Sum axiom".to_string())
            }
            Rule::Mp { major, minor } => {
                let ok = p.line(major).formula.as_impl().is_some_and(|(a, b)| {
                    *a == p.line(minor).formula && *b == *f
                });
                (!ok).then(|| format!("line {major} is not `(line {minor}) -> (line {n})`"))
            }
            Rule::AppIntro(i, j) => appintro_roles(p, i, j, f).is_none().then(|| {
                format!("lines {i} and {j} do not yield `{f}` by application introduction")
            }),
        };
        if let Some(reason) = failure {
            return Verdict::invalid(n, reason);
        }
    }
    Verdict::valid(p.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExpandError {
    #[error("expected a jl script")]
    NotJl,
    #[error("line {0}: application introduction does not check")]
    BadAppIntro(usize),
}

/// Replaces every Application introduction by its three-line expansion: the
/// Application axiom instance followed by two modus ponens steps.
pub fn expand_appintro(p: &ProofScript) -> Result<ProofScript, ExpandError> {
    if p.calculus() != Calculus::Jl {
        return Err(ExpandError::NotJl);
    }
    let mut lines: Vec<ProofLine> = Vec::with_capacity(p.len());
    let mut map = vec![0; p.len() + 1];
    for (pos, line) in p.lines().iter().enumerate() {
        let n = pos + 1;
        let rule = match line.rule {
            Rule::AppIntro(i, j) => {
                let (major, minor) =
                    appintro_roles(p, i, j, &line.formula).ok_or(ExpandError::BadAppIntro(n))?;
                let (s, body) = p.line(major).formula.as_just().expect("checked by roles");
                let (a, b) = body.as_impl().expect("checked by roles");
                let (t, _) = p.line(minor).formula.as_just().expect("checked by roles");
                let axiom = application(s, t, a, b);
                let rest = axiom.as_impl().expect("axiom is an implication").1.clone();
                lines.push(ProofLine::new(axiom, Rule::AppAxiom));
                let ax_line = lines.len();
                lines.push(ProofLine::new(
                    rest,
                    Rule::Mp {
                        major: ax_line,
                        minor: map[major],
                    },
                ));
                Rule::Mp {
                    major: ax_line + 1,
                    minor: map[minor],
                }
            }
            Rule::Mp { major, minor } => Rule::Mp {
                major: map[major],
                minor: map[minor],
            },
            other => other,
        };
        lines.push(ProofLine::new(line.formula.clone(), rule));
        map[n] = lines.len();
    }
    Ok(ProofScript::new(Calculus::Jl, p.premises().to_vec(), lines)
        .expect("expansion preserves structure"))
}

/// Renames constants throughout a script, for example to move a proof from
/// one constant specification to another.
pub fn relabel_constants(p: &ProofScript, rename: &impl Fn(&str) -> Arc<str>) -> ProofScript {
    let premises = p.premises().iter().map(|f| f.map_constants(rename)).collect();
    let lines = p
        .lines()
        .iter()
        .map(|l| ProofLine::new(l.formula.map_constants(rename), l.rule))
        .collect();
    ProofScript::new(p.calculus(), premises, lines).expect("relabeling preserves structure")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    const PAPER_JL: &str = "\
system: jl
premise: x:p
premise: y:(q -> (p -> r))
1. x:p ; premise
2. y:(q -> (p -> r)) ; premise
3. c1:(p -> (q -> p)) ; cs ax1
4. [c1*x]:(q -> p) ; appintro 3 1
5. c2:((q -> (p -> r)) -> ((q -> p) -> (q -> r))) ; cs ax2
6. [c2*y]:((q -> p) -> (q -> r)) ; appintro 5 2
7. [[c2*y]*[c1*x]]:(q -> r) ; appintro 4 6
";

    fn check(text: &str) -> Verdict {
        check_jl_proof(&ProofScript::parse(text).unwrap(), &ConstantSpecification::default())
    }

    #[test]
    fn paper_derivation_checks_with_either_operand_order() {
        assert!(check(PAPER_JL).is_valid());
        assert!(check(&PAPER_JL.replace("appintro 4 6", "appintro 6 4")).is_valid());
    }

    #[test]
    fn cs_lines() {
        assert!(check("1. c1:(p -> (q -> p)) ; cs ax1").is_valid());
        assert_eq!(check("1. c2:(p -> (q -> p)) ; cs ax1").failing_line, Some(1));
        assert_eq!(check("1. c2:(p -> (q -> p)) ; cs ax2").failing_line, Some(1));
        assert_eq!(check("1. x:(p -> (q -> p)) ; cs ax1").failing_line, Some(1));
    }

    #[test]
    fn appintro_minor_mismatch() {
        let v = check("premise: x:(p->q)\npremise: y:r\n1. x:(p->q) ; premise\n2. y:r ; premise\n3. [x*y]:q ; appintro 1 2");
        assert_eq!(v.failing_line, Some(3));
    }

    #[test]
    fn recognizers() {
        assert!(recognize_application_instance(&f("x:(p->q) -> (y:p -> [x*y]:q)")));
        assert!(!recognize_application_instance(&f("x:(p->q) -> (y:p -> [y*x]:q)")));
        assert!(recognize_application_instance(&f(
            "c1:(p->(q->p)) -> (x:p -> [c1*x]:(q->p))"
        )));
        assert!(recognize_sum_instance(&f("x:p -> [x+y]:p")));
        assert!(recognize_sum_instance(&f("y:p -> [x+y]:p")));
        assert!(!recognize_sum_instance(&f("x:p -> [x+y]:q")));
        assert!(!recognize_sum_instance(&f("[x*y]:p -> [x+y]:p")));
    }

    #[test]
    fn sum_and_app_axioms_in_scripts() {
        let s = "premise: x:p\n1. x:p ; premise\n2. x:p -> [x+y]:p ; sum\n3. [x+y]:p ; mp 2 1";
        assert!(check(s).is_valid());
        let s = "1. x:(p->q) -> (y:p -> [x*y]:q) ; app";
        assert!(check(s).is_valid());
        let s = "1. x:(p->q) -> (y:p -> [x+y]:q) ; app";
        assert_eq!(check(s).failing_line, Some(1));
    }

    #[test]
    fn constant_specifications() {
        assert!(ConstantSpecification::new("ca", "cb", "cc").is_ok());
        assert_eq!(
            ConstantSpecification::new("ca", "ca", "cc"),
            Err(CsError::NotInjective("ca".into()))
        );
        assert_eq!(
            ConstantSpecification::new("x1", "c2", "c3"),
            Err(CsError::NotAConstant("x1".into()))
        );
        let cs = ConstantSpecification::new("ca", "cb", "cc").unwrap();
        assert_eq!(cs.scheme_of("cb"), Some(LukAxiom::L2));
        let s = ProofScript::parse(PAPER_JL).unwrap();
        assert!(!check_jl_proof(&s, &cs).is_valid());
        let renamed = relabel_constants(&s, &|c: &str| -> Arc<str> {
            match c {
                "c1" => "ca".into(),
                "c2" => "cb".into(),
                _ => "cc".into(),
            }
        });
        assert!(check_jl_proof(&renamed, &cs).is_valid());
    }

    #[test]
    fn expansion_of_appintro() {
        let s = ProofScript::parse(PAPER_JL).unwrap();
        let e = expand_appintro(&s).unwrap();
        assert_eq!(e.len(), 7 + 2 * 3);
        assert_eq!(e.conclusion(), s.conclusion());
        assert!(check_jl_proof(&e, &ConstantSpecification::default()).is_valid());
        assert!(e.lines().iter().all(|l| !matches!(l.rule, Rule::AppIntro(..))));
    }
}

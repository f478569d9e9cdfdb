//! Derived theorems of the Łukasiewicz calculus.
//!
//! Each lemma is available in two forms: a builder helper that appends a
//! proof of the instantiated conclusion to an existing derivation, and the
//! catalogue entry [`derive_lemma`] that produces a standalone script.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rustc_hash::FxHashMap;
use thiserror::Error;

use super::builder::{Builder, Discharge, LineRef};
use crate::script::{ProofLine, ProofScript, Rule};
use crate::syntax::{Formula, MetaVar, SubstError, Substitution};

fn neg(f: &Formula) -> Formula {
    Formula::neg(f.clone())
}

fn imp(a: &Formula, b: &Formula) -> Formula {
    Formula::implies(a.clone(), b.clone())
}

/// Proves a theorem in a scratch builder with `hyps`, discharging them in
/// reverse order, then splices the result into `b`.
fn via_hypotheses(
    b: &mut Builder,
    hyps: Vec<Formula>,
    body: impl FnOnce(&mut Builder) -> LineRef,
) -> LineRef {
    let mut scratch = Builder::new(hyps.clone());
    let mut target = body(&mut scratch);
    for h in hyps.iter().rev() {
        let (next, r) = scratch.discharge(h, target, Discharge::Lazy);
        scratch = next;
        target = r;
    }
    b.splice(&scratch, target)
}

/// `a -> a`
pub(crate) fn identity(b: &mut Builder, a: &Formula) -> LineRef {
    let aa = imp(a, a);
    let dist = b.l2(a, &aa, a);
    let k1 = b.l1(a, &aa);
    let step = b.mp(dist, k1);
    let k2 = b.l1(a, a);
    b.mp(step, k2)
}

/// `~~a -> a`
fn build_double_negation_elim(b: &mut Builder, a: &Formula) -> LineRef {
    let nna = neg(&neg(a));
    via_hypotheses(b, vec![nna.clone()], |s| {
        let h = s.hyp(&nna);
        let n4a = neg(&neg(&nna));
        let k = s.l1(&nna, &n4a);
        let n4_to_nn = s.mp(k, h);
        let c1 = s.l3(&neg(&neg(&neg(a))), &neg(a));
        let na_to_n3a = s.mp(c1, n4_to_nn);
        let c2 = s.l3(a, &nna);
        let nn_to_a = s.mp(c2, na_to_n3a);
        s.mp(nn_to_a, h)
    })
}

/// `a -> ~~a`
fn build_double_negation_intro(b: &mut Builder, a: &Formula) -> LineRef {
    let elim = double_negation_elim(b, &neg(a));
    let c = b.l3(&neg(&neg(a)), a);
    b.mp(c, elim)
}

/// `~a -> (a -> c)`
fn build_explosion(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    let na = neg(a);
    via_hypotheses(b, vec![na.clone()], |s| {
        let h = s.hyp(&na);
        let k = s.l1(&na, &neg(c));
        let nc_na = s.mp(k, h);
        let contra = s.l3(c, a);
        s.mp(contra, nc_na)
    })
}

/// `(a -> c) -> (~c -> ~a)`
fn build_contraposition(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    let ac = imp(a, c);
    via_hypotheses(b, vec![ac.clone()], |s| {
        let h = s.hyp(&ac);
        let dne = double_negation_elim(s, a);
        let nna_c = s.syllogism(dne, h);
        let dni = double_negation_intro(s, c);
        let nna_nnc = s.syllogism(nna_c, dni);
        let l3 = s.l3(&neg(a), &neg(c));
        s.mp(l3, nna_nnc)
    })
}

/// `a -> ((a -> c) -> c)`
fn build_assertion(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    let ac = imp(a, c);
    via_hypotheses(b, vec![a.clone(), ac.clone()], |s| {
        let ha = s.hyp(a);
        let hac = s.hyp(&ac);
        s.mp(hac, ha)
    })
}

/// `a -> (~c -> ~(a -> c))`
fn build_negated_implication(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    via_hypotheses(b, vec![a.clone()], |s| {
        let ha = s.hyp(a);
        let asrt = assertion(s, a, c);
        let ac_c = s.mp(asrt, ha);
        let contra = contraposition(s, &imp(a, c), c);
        s.mp(contra, ac_c)
    })
}

/// `(a -> c) -> ((~a -> c) -> c)`
fn build_case_analysis(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    let pos = imp(a, c);
    let negc = imp(&neg(a), c);
    let nc = neg(c);
    let cc = imp(c, c);
    via_hypotheses(b, vec![pos.clone(), negc.clone()], |s| {
        // ~c -> ~(c -> c), by deriving both ~a and ~~a from ~c.
        let mut inner = Builder::new(vec![pos.clone(), negc.clone(), nc.clone()]);
        let ip = inner.hyp(&pos);
        let inn = inner.hyp(&negc);
        let hnc = inner.hyp(&nc);
        let c1 = contraposition(&mut inner, a, c);
        let nc_na = inner.mp(c1, ip);
        let na = inner.mp(nc_na, hnc);
        let c2 = contraposition(&mut inner, &neg(a), c);
        let nc_nna = inner.mp(c2, inn);
        let nna = inner.mp(nc_nna, hnc);
        let boom = explosion(&mut inner, &neg(a), &neg(&cc));
        let step = inner.mp(boom, nna);
        let absurd = inner.mp(step, na);
        let (mut outer, r) = inner.discharge(&nc, absurd, Discharge::Lazy);
        let l3 = outer.l3(c, &cc);
        let cc_c = outer.mp(l3, r);
        let id = identity(&mut outer, c);
        let done = outer.mp(cc_c, id);
        s.splice(&outer, done)
    })
}

/// `a -> (~a -> c)`, the expanded form of `a -> a | c`.
fn build_or_intro_left(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    let na = neg(a);
    via_hypotheses(b, vec![a.clone(), na.clone()], |s| {
        let ha = s.hyp(a);
        let hna = s.hyp(&na);
        let boom = explosion(s, a, c);
        let step = s.mp(boom, hna);
        s.mp(step, ha)
    })
}

/// `a -> (c -> ~(a -> ~c))`, the expanded form of `a -> (c -> a & c)`.
fn build_and_intro(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    let nc = neg(c);
    via_hypotheses(b, vec![a.clone(), c.clone()], |s| {
        let ha = s.hyp(a);
        let hc = s.hyp(c);
        let asrt = assertion(s, a, &nc);
        let anc_nc = s.mp(asrt, ha);
        let contra = contraposition(s, &imp(a, &nc), &nc);
        let nnc_conj = s.mp(contra, anc_nc);
        let dni = double_negation_intro(s, c);
        let nnc = s.mp(dni, hc);
        s.mp(nnc_conj, nnc)
    })
}

/// `~(a -> ~c) -> a`, the expanded form of `a & c -> a`.
fn build_and_elim_left(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    // ~a -> (a -> ~c), contraposed, then double negation.
    let boom = explosion(b, a, &neg(c));
    let contra = contraposition(b, &neg(a), &imp(a, &neg(c)));
    let step = b.mp(contra, boom);
    let dne = double_negation_elim(b, a);
    b.syllogism(step, dne)
}

/// `~(a -> ~c) -> c`, the expanded form of `a & c -> c`.
fn build_and_elim_right(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    // ~c -> (a -> ~c) is L1, contraposed, then double negation.
    let nc = neg(c);
    let k = b.l1(&nc, a);
    let contra = contraposition(b, &nc, &imp(a, &nc));
    let step = b.mp(contra, k);
    let dne = double_negation_elim(b, c);
    b.syllogism(step, dne)
}

/// A lemma proved once over placeholder atoms. Substituting into every line
/// keeps axiom instances and modus ponens steps intact, so instances are
/// copied from the template instead of being rebuilt.
struct Template {
    placeholders: Vec<Arc<str>>,
    lines: Vec<ProofLine>,
}

static TEMPLATES: [OnceLock<Template>; LemmaId::ALL.len()] =
    [const { OnceLock::new() }; LemmaId::ALL.len()];

fn template(id: LemmaId) -> &'static Template {
    TEMPLATES[id as usize].get_or_init(|| {
        let vars = id.metavars();
        let atoms: Vec<Formula> = vars.iter().map(|v| Formula::atom(v.name())).collect();
        let mut b = Builder::new(vec![]);
        let r = match id {
            LemmaId::Identity => identity(&mut b, &atoms[0]),
            LemmaId::DoubleNegationIntro => build_double_negation_intro(&mut b, &atoms[0]),
            LemmaId::DoubleNegationElim => build_double_negation_elim(&mut b, &atoms[0]),
            LemmaId::Explosion => build_explosion(&mut b, &atoms[0], &atoms[1]),
            LemmaId::Contraposition => build_contraposition(&mut b, &atoms[0], &atoms[1]),
            LemmaId::Assertion => build_assertion(&mut b, &atoms[0], &atoms[1]),
            LemmaId::NegatedImplication => build_negated_implication(&mut b, &atoms[0], &atoms[1]),
            LemmaId::CaseAnalysis => build_case_analysis(&mut b, &atoms[0], &atoms[1]),
            LemmaId::OrIntroLeft => build_or_intro_left(&mut b, &atoms[0], &atoms[1]),
            LemmaId::OrIntroRight => b.l1(&atoms[1], &neg(&atoms[0])),
            LemmaId::AndIntro => build_and_intro(&mut b, &atoms[0], &atoms[1]),
            LemmaId::AndElimLeft => build_and_elim_left(&mut b, &atoms[0], &atoms[1]),
            LemmaId::AndElimRight => build_and_elim_right(&mut b, &atoms[0], &atoms[1]),
        };
        Template {
            placeholders: vars.iter().map(|v| Arc::from(v.name())).collect(),
            lines: b.finish(r).into_parts().2,
        }
    })
}

type Memo = FxHashMap<*const Formula, Arc<Formula>>;

fn substitute(f: &Formula, t: &Template, args: &[&Formula], memo: &mut Memo) -> Formula {
    let mut sub = |a: &Arc<Formula>| -> Arc<Formula> {
        if let Some(r) = memo.get(&Arc::as_ptr(a)) {
            return r.clone();
        }
        let r = Arc::new(substitute(a, t, args, memo));
        memo.insert(Arc::as_ptr(a), r.clone());
        r
    };
    match f {
        Formula::Atom(name) => {
            let i = t.placeholders.iter().position(|p| p == name);
            args[i.expect("templates only mention placeholders")].clone()
        }
        Formula::Neg(a) => Formula::Neg(sub(a)),
        Formula::Impl(a, b) => Formula::Impl(sub(a), sub(b)),
        Formula::And(a, b) => Formula::And(sub(a), sub(b)),
        Formula::Or(a, b) => Formula::Or(sub(a), sub(b)),
        Formula::Just(..) => unreachable!("templates are justification-free"),
    }
}

/// Appends the instance of lemma `id` at `args` (in metavariable order).
fn instantiate(b: &mut Builder, id: LemmaId, args: &[&Formula]) -> LineRef {
    let t = template(id);
    let mut memo = Memo::default();
    let mut map: Vec<LineRef> = Vec::with_capacity(t.lines.len() + 1);
    map.push(0);
    for line in &t.lines {
        let f = substitute(&line.formula, t, args, &mut memo);
        map.push(match line.rule {
            Rule::Axiom(ax) => b.axiom(ax, f),
            Rule::Mp { major, minor } => b.mp_to(map[major], map[minor], f),
            _ => unreachable!("lemmas have no premises"),
        });
    }
    *map.last().expect("templates are non-empty")
}

pub(crate) fn double_negation_elim(b: &mut Builder, a: &Formula) -> LineRef {
    instantiate(b, LemmaId::DoubleNegationElim, &[a])
}

pub(crate) fn double_negation_intro(b: &mut Builder, a: &Formula) -> LineRef {
    instantiate(b, LemmaId::DoubleNegationIntro, &[a])
}

pub(crate) fn explosion(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    instantiate(b, LemmaId::Explosion, &[a, c])
}

pub(crate) fn contraposition(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    instantiate(b, LemmaId::Contraposition, &[a, c])
}

pub(crate) fn assertion(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    instantiate(b, LemmaId::Assertion, &[a, c])
}

pub(crate) fn negated_implication(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    instantiate(b, LemmaId::NegatedImplication, &[a, c])
}

pub(crate) fn case_analysis(b: &mut Builder, a: &Formula, c: &Formula) -> LineRef {
    instantiate(b, LemmaId::CaseAnalysis, &[a, c])
}

/// Names of the shipped lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `phi -> phi`
    Identity,
    /// `phi -> ~~phi`
    DoubleNegationIntro,
    /// `~~phi -> phi`
    DoubleNegationElim,
    /// `~phi -> (phi -> psi)`
    Explosion,
    /// `(phi -> psi) -> (~psi -> ~phi)`
    Contraposition,
    /// `phi -> ((phi -> psi) -> psi)`
    Assertion,
    /// `phi -> (~psi -> ~(phi -> psi))`
    NegatedImplication,
    /// `(phi -> chi) -> ((~phi -> chi) -> chi)`
    CaseAnalysis,
    /// `phi -> (~phi -> psi)`, i.e. `phi -> phi | psi` expanded.
    OrIntroLeft,
    /// `psi -> (~phi -> psi)`, i.e. `psi -> phi | psi` expanded.
    OrIntroRight,
    /// `phi -> (psi -> ~(phi -> ~psi))`, i.e. `phi -> (psi -> phi & psi)` expanded.
    AndIntro,
    /// `~(phi -> ~psi) -> phi`
    AndElimLeft,
    /// `~(phi -> ~psi) -> psi`
    AndElimRight,
}

impl LemmaId {
    pub const ALL: [LemmaId; 13] = [
        LemmaId::Identity,
        LemmaId::DoubleNegationIntro,
        LemmaId::DoubleNegationElim,
        LemmaId::Explosion,
        LemmaId::Contraposition,
        LemmaId::Assertion,
        LemmaId::NegatedImplication,
        LemmaId::CaseAnalysis,
        LemmaId::OrIntroLeft,
        LemmaId::OrIntroRight,
        LemmaId::AndIntro,
        LemmaId::AndElimLeft,
        LemmaId::AndElimRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Identity => "identity",
            LemmaId::DoubleNegationIntro => "double-negation-intro",
            LemmaId::DoubleNegationElim => "double-negation-elim",
            LemmaId::Explosion => "explosion",
            LemmaId::Contraposition => "contraposition",
            LemmaId::Assertion => "assertion",
            LemmaId::NegatedImplication => "negated-implication",
            LemmaId::CaseAnalysis => "case-analysis",
            LemmaId::OrIntroLeft => "or-intro-left",
            LemmaId::OrIntroRight => "or-intro-right",
            LemmaId::AndIntro => "and-intro",
            LemmaId::AndElimLeft => "and-elim-left",
            LemmaId::AndElimRight => "and-elim-right",
        }
    }

    pub fn metavars(self) -> &'static [MetaVar] {
        use MetaVar::*;
        match self {
            LemmaId::Identity | LemmaId::DoubleNegationIntro | LemmaId::DoubleNegationElim => {
                &[Phi]
            }
            LemmaId::CaseAnalysis => &[Phi, Chi],
            _ => &[Phi, Psi],
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("unknown lemma `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Substitution(#[from] SubstError),
    #[error("lemma {0} does not use metavariable `{1}`")]
    Unexpected(LemmaId, &'static str),
}

impl FromStr for LemmaId {
    type Err = LemmaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| LemmaError::Unknown(s.to_string()))
    }
}

/// Produces a premise-free Luk proof of lemma `name` instantiated by `sigma`.
pub fn derive_lemma(name: LemmaId, sigma: &Substitution) -> Result<ProofScript, LemmaError> {
    for (v, _) in sigma.formulas() {
        if !name.metavars().contains(&v) {
            return Err(LemmaError::Unexpected(name, v.name()));
        }
    }
    let args = name
        .metavars()
        .iter()
        .map(|&v| sigma.require(v))
        .collect::<Result<Vec<_>, _>>()?;
    let mut b = Builder::new(vec![]);
    let r = instantiate(&mut b, name, &args);
    Ok(b.finish(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::luk::{check_luk_proof, is_tautology};
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn identity_is_five_lines() {
        let s = derive_lemma(LemmaId::Identity, &Substitution::new().with(MetaVar::Phi, f("q")))
            .unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.conclusion(), &f("q -> q"));
        assert!(check_luk_proof(&s).is_valid());
    }

    #[test]
    fn case_analysis_instance() {
        let sigma = Substitution::new()
            .with(MetaVar::Phi, f("p"))
            .with(MetaVar::Chi, f("p"));
        let s = derive_lemma(LemmaId::CaseAnalysis, &sigma).unwrap();
        assert_eq!(s.conclusion(), &f("(p -> p) -> ((~p -> p) -> p)"));
        assert!(check_luk_proof(&s).is_valid());
    }

    #[test]
    fn double_negation_elim_instance() {
        let s = derive_lemma(
            LemmaId::DoubleNegationElim,
            &Substitution::new().with(MetaVar::Phi, f("r")),
        )
        .unwrap();
        assert_eq!(s.conclusion(), &f("~~r -> r"));
        assert!(check_luk_proof(&s).is_valid());
        assert!(is_tautology(s.conclusion()).unwrap());
    }

    #[test]
    fn every_lemma_checks_and_is_a_tautology() {
        let sigma = |l: LemmaId| {
            let mut s = Substitution::new();
            for v in l.metavars() {
                let g = match v {
                    MetaVar::Phi => f("p -> q"),
                    MetaVar::Psi => f("~r"),
                    MetaVar::Chi => f("q"),
                };
                s = s.with(*v, g);
            }
            s
        };
        for l in LemmaId::ALL {
            let s = derive_lemma(l, &sigma(l)).unwrap();
            assert!(check_luk_proof(&s).is_valid(), "{l}: {}", check_luk_proof(&s));
            assert!(s.premises().is_empty());
            assert!(is_tautology(s.conclusion()).unwrap(), "{l}");
        }
    }

    #[test]
    fn conclusions_have_documented_shapes() {
        let s = |l, sigma: &Substitution| derive_lemma(l, sigma).unwrap().conclusion().clone();
        let pq = Substitution::new()
            .with(MetaVar::Phi, f("p"))
            .with(MetaVar::Psi, f("q"));
        assert_eq!(s(LemmaId::Explosion, &pq), f("~p -> (p -> q)"));
        assert_eq!(s(LemmaId::Contraposition, &pq), f("(p -> q) -> (~q -> ~p)"));
        assert_eq!(s(LemmaId::NegatedImplication, &pq), f("p -> (~q -> ~(p -> q))"));
        assert_eq!(s(LemmaId::OrIntroLeft, &pq), f("p -> (~p -> q)"));
        assert_eq!(s(LemmaId::OrIntroRight, &pq), f("q -> (~p -> q)"));
        assert_eq!(s(LemmaId::AndIntro, &pq), f("p -> (q -> ~(p -> ~q))"));
        assert_eq!(s(LemmaId::AndElimLeft, &pq), f("~(p -> ~q) -> p"));
        assert_eq!(s(LemmaId::AndElimRight, &pq), f("~(p -> ~q) -> q"));
    }

    #[test]
    fn errors() {
        assert_eq!(
            "no-such-lemma".parse::<LemmaId>(),
            Err(LemmaError::Unknown("no-such-lemma".into()))
        );
        assert_eq!(
            derive_lemma(LemmaId::Explosion, &Substitution::new().with(MetaVar::Phi, f("p"))),
            Err(LemmaError::Substitution(SubstError::Missing("psi")))
        );
        assert!(matches!(
            derive_lemma(
                LemmaId::Identity,
                &Substitution::new()
                    .with(MetaVar::Phi, f("p"))
                    .with(MetaVar::Chi, f("p"))
            ),
            Err(LemmaError::Unexpected(LemmaId::Identity, "chi"))
        ));
    }
}

//! Axiom schemes and first-order matching against them.
//!
//! A scheme is a formula pattern whose holes are formula metavariables
//! (`phi`, `psi`, `chi`) and, for the justification schemes, term
//! metavariables (`s`, `t`). Matching binds each hole to a whole subformula or
//! subterm; repeated holes must bind structurally equal values.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::Serialize;
use thiserror::Error;

use super::{Formula, Term};

/// The three Łukasiewicz axiom schemes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LukAxiom {
    /// `phi -> (psi -> phi)`
    L1,
    /// `(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))`
    L2,
    /// `(~phi -> ~psi) -> (psi -> phi)`
    L3,
}

impl LukAxiom {
    pub const ALL: [LukAxiom; 3] = [LukAxiom::L1, LukAxiom::L2, LukAxiom::L3];

    pub fn scheme(self) -> SchemeId {
        match self {
            LukAxiom::L1 => SchemeId::L1,
            LukAxiom::L2 => SchemeId::L2,
            LukAxiom::L3 => SchemeId::L3,
        }
    }

    /// 1-based position, as in the `ax1`/`ax2`/`ax3` script keywords.
    pub fn number(self) -> usize {
        match self {
            LukAxiom::L1 => 1,
            LukAxiom::L2 => 2,
            LukAxiom::L3 => 3,
        }
    }

    pub fn from_number(n: usize) -> Option<LukAxiom> {
        match n {
            1 => Some(LukAxiom::L1),
            2 => Some(LukAxiom::L2),
            3 => Some(LukAxiom::L3),
            _ => None,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            LukAxiom::L1 => "ax1",
            LukAxiom::L2 => "ax2",
            LukAxiom::L3 => "ax3",
        }
    }
}

impl fmt::Display for LukAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeId {
    L1,
    L2,
    L3,
    /// `s:(phi -> psi) -> (t:phi -> [s*t]:psi)`
    App,
    /// `s:psi -> [s+t]:psi`
    SumL,
    /// `t:psi -> [s+t]:psi`
    SumR,
}

impl SchemeId {
    pub const ALL: [SchemeId; 6] = [
        SchemeId::L1,
        SchemeId::L2,
        SchemeId::L3,
        SchemeId::App,
        SchemeId::SumL,
        SchemeId::SumR,
    ];

    fn pattern(self) -> &'static Pat {
        &PATTERNS[self as usize]
    }

    pub fn formula_metavars(self) -> &'static [MetaVar] {
        use MetaVar::*;
        match self {
            SchemeId::L1 | SchemeId::L3 | SchemeId::App => &[Phi, Psi],
            SchemeId::L2 => &[Phi, Psi, Chi],
            SchemeId::SumL | SchemeId::SumR => &[Psi],
        }
    }

    pub fn term_metavars(self) -> &'static [TermMetaVar] {
        match self {
            SchemeId::L1 | SchemeId::L2 | SchemeId::L3 => &[],
            _ => &[TermMetaVar::S, TermMetaVar::T],
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SchemeId::L1 => "L1",
            SchemeId::L2 => "L2",
            SchemeId::L3 => "L3",
            SchemeId::App => "App",
            SchemeId::SumL => "SumL",
            SchemeId::SumR => "SumR",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetaVar {
    Phi,
    Psi,
    Chi,
}

impl MetaVar {
    pub fn name(self) -> &'static str {
        match self {
            MetaVar::Phi => "phi",
            MetaVar::Psi => "psi",
            MetaVar::Chi => "chi",
        }
    }
}

impl FromStr for MetaVar {
    type Err = SubstError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "phi" => Ok(MetaVar::Phi),
            "psi" => Ok(MetaVar::Psi),
            "chi" => Ok(MetaVar::Chi),
            _ => Err(SubstError::UnknownMetavariable(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermMetaVar {
    S,
    T,
}

impl TermMetaVar {
    pub fn name(self) -> &'static str {
        match self {
            TermMetaVar::S => "s",
            TermMetaVar::T => "t",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("metavariable `{0}` is not bound")]
    Missing(&'static str),
    #[error("metavariable `{0}` does not occur in scheme {1}")]
    Unexpected(&'static str, SchemeId),
    #[error("unknown metavariable `{0}`")]
    UnknownMetavariable(String),
}

/// Bindings from scheme metavariables to formulas and terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    formulas: BTreeMap<MetaVar, Formula>,
    terms: BTreeMap<TermMetaVar, Term>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: MetaVar, f: Formula) -> Self {
        self.formulas.insert(var, f);
        self
    }

    pub fn with_term(mut self, var: TermMetaVar, t: Term) -> Self {
        self.terms.insert(var, t);
        self
    }

    pub fn get(&self, var: MetaVar) -> Option<&Formula> {
        self.formulas.get(&var)
    }

    pub fn get_term(&self, var: TermMetaVar) -> Option<&Term> {
        self.terms.get(&var)
    }

    pub fn formulas(&self) -> impl Iterator<Item = (MetaVar, &Formula)> {
        self.formulas.iter().map(|(k, v)| (*k, v))
    }

    /// Looks up a bound formula, failing with [`SubstError::Missing`].
    pub fn require(&self, var: MetaVar) -> Result<&Formula, SubstError> {
        self.get(var).ok_or(SubstError::Missing(var.name()))
    }

    fn bind(&mut self, var: MetaVar, f: &Formula) -> bool {
        match self.formulas.get(&var) {
            Some(prev) => prev == f,
            None => {
                self.formulas.insert(var, f.clone());
                true
            }
        }
    }

    fn bind_term(&mut self, var: TermMetaVar, t: &Term) -> bool {
        match self.terms.get(&var) {
            Some(prev) => prev == t,
            None => {
                self.terms.insert(var, t.clone());
                true
            }
        }
    }
}

enum Pat {
    Meta(MetaVar),
    Neg(Box<Pat>),
    Impl(Box<Pat>, Box<Pat>),
    Just(TermPat, Box<Pat>),
}

enum TermPat {
    Meta(TermMetaVar),
    App(Box<TermPat>, Box<TermPat>),
    Sum(Box<TermPat>, Box<TermPat>),
}

fn mv(v: MetaVar) -> Pat {
    Pat::Meta(v)
}
fn neg(p: Pat) -> Pat {
    Pat::Neg(Box::new(p))
}
fn imp(a: Pat, b: Pat) -> Pat {
    Pat::Impl(Box::new(a), Box::new(b))
}
fn just(t: TermPat, p: Pat) -> Pat {
    Pat::Just(t, Box::new(p))
}
fn tv(v: TermMetaVar) -> TermPat {
    TermPat::Meta(v)
}

// Indexed by `SchemeId as usize`.
static PATTERNS: LazyLock<[Pat; 6]> = LazyLock::new(|| {
    use MetaVar::*;
    use TermMetaVar::*;
    let st = || TermPat::App(Box::new(tv(S)), Box::new(tv(T)));
    let sum = || TermPat::Sum(Box::new(tv(S)), Box::new(tv(T)));
    [
        imp(mv(Phi), imp(mv(Psi), mv(Phi))),
        imp(
            imp(mv(Phi), imp(mv(Psi), mv(Chi))),
            imp(imp(mv(Phi), mv(Psi)), imp(mv(Phi), mv(Chi))),
        ),
        imp(imp(neg(mv(Phi)), neg(mv(Psi))), imp(mv(Psi), mv(Phi))),
        imp(
            just(tv(S), imp(mv(Phi), mv(Psi))),
            imp(just(tv(T), mv(Phi)), just(st(), mv(Psi))),
        ),
        imp(just(tv(S), mv(Psi)), just(sum(), mv(Psi))),
        imp(just(tv(T), mv(Psi)), just(sum(), mv(Psi))),
    ]
});

fn match_pat(p: &Pat, f: &Formula, sigma: &mut Substitution) -> bool {
    match (p, f) {
        (Pat::Meta(v), _) => sigma.bind(*v, f),
        (Pat::Neg(pa), Formula::Neg(fa)) => match_pat(pa, fa, sigma),
        (Pat::Impl(pa, pb), Formula::Impl(fa, fb)) => {
            match_pat(pa, fa, sigma) && match_pat(pb, fb, sigma)
        }
        (Pat::Just(tp, pa), Formula::Just(t, fa)) => {
            match_term_pat(tp, t, sigma) && match_pat(pa, fa, sigma)
        }
        _ => false,
    }
}

fn match_term_pat(p: &TermPat, t: &Term, sigma: &mut Substitution) -> bool {
    match (p, t) {
        (TermPat::Meta(v), _) => sigma.bind_term(*v, t),
        (TermPat::App(pl, pr), Term::App(tl, tr)) | (TermPat::Sum(pl, pr), Term::Sum(tl, tr)) => {
            match_term_pat(pl, tl, sigma) && match_term_pat(pr, tr, sigma)
        }
        _ => false,
    }
}

/// Returns the substitution that instantiates `scheme` to exactly `f`, if any.
pub fn match_scheme(f: &Formula, scheme: SchemeId) -> Option<Substitution> {
    let mut sigma = Substitution::new();
    match_pat(scheme.pattern(), f, &mut sigma).then_some(sigma)
}

/// Instantiates `scheme` under `sigma`. Every metavariable of the scheme must
/// be bound, and nothing else may be.
pub fn apply_substitution(scheme: SchemeId, sigma: &Substitution) -> Result<Formula, SubstError> {
    for v in sigma.formulas.keys() {
        if !scheme.formula_metavars().contains(v) {
            return Err(SubstError::Unexpected(v.name(), scheme));
        }
    }
    for v in sigma.terms.keys() {
        if !scheme.term_metavars().contains(v) {
            return Err(SubstError::Unexpected(v.name(), scheme));
        }
    }
    instantiate(scheme.pattern(), sigma)
}

fn instantiate(p: &Pat, sigma: &Substitution) -> Result<Formula, SubstError> {
    Ok(match p {
        Pat::Meta(v) => sigma.require(*v)?.clone(),
        Pat::Neg(a) => Formula::neg(instantiate(a, sigma)?),
        Pat::Impl(a, b) => Formula::implies(instantiate(a, sigma)?, instantiate(b, sigma)?),
        Pat::Just(t, a) => Formula::just(instantiate_term(t, sigma)?, instantiate(a, sigma)?),
    })
}

fn instantiate_term(p: &TermPat, sigma: &Substitution) -> Result<Term, SubstError> {
    Ok(match p {
        TermPat::Meta(v) => sigma
            .get_term(*v)
            .ok_or(SubstError::Missing(v.name()))?
            .clone(),
        TermPat::App(l, r) => Term::app(instantiate_term(l, sigma)?, instantiate_term(r, sigma)?),
        TermPat::Sum(l, r) => Term::sum(instantiate_term(l, sigma)?, instantiate_term(r, sigma)?),
    })
}

/// Builds the L1 instance `a -> (b -> a)`.
pub fn l1(a: &Formula, b: &Formula) -> Formula {
    Formula::implies(a.clone(), Formula::implies(b.clone(), a.clone()))
}

/// Builds the L2 instance `(a -> (b -> c)) -> ((a -> b) -> (a -> c))`.
pub fn l2(a: &Formula, b: &Formula, c: &Formula) -> Formula {
    Formula::implies(
        Formula::implies(a.clone(), Formula::implies(b.clone(), c.clone())),
        Formula::implies(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(a.clone(), c.clone()),
        ),
    )
}

/// Builds the L3 instance `(~a -> ~b) -> (b -> a)`.
pub fn l3(a: &Formula, b: &Formula) -> Formula {
    Formula::implies(
        Formula::implies(Formula::neg(a.clone()), Formula::neg(b.clone())),
        Formula::implies(b.clone(), a.clone()),
    )
}

/// Builds the Application instance `s:(a -> b) -> (t:a -> [s*t]:b)`.
pub fn application(s: &Term, t: &Term, a: &Formula, b: &Formula) -> Formula {
    Formula::implies(
        Formula::just(s.clone(), Formula::implies(a.clone(), b.clone())),
        Formula::implies(
            Formula::just(t.clone(), a.clone()),
            Formula::just(Term::app(s.clone(), t.clone()), b.clone()),
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn matches_l1_instance() {
        let sigma = match_scheme(&f("p -> (q -> p)"), SchemeId::L1).unwrap();
        assert_eq!(sigma.get(MetaVar::Phi), Some(&f("p")));
        assert_eq!(sigma.get(MetaVar::Psi), Some(&f("q")));
    }

    #[test]
    fn matches_l3_instance() {
        let sigma = match_scheme(&f("(~p -> ~q) -> (q -> p)"), SchemeId::L3).unwrap();
        assert_eq!(sigma.get(MetaVar::Phi), Some(&f("p")));
        assert_eq!(sigma.get(MetaVar::Psi), Some(&f("q")));
    }

    #[test]
    fn rejects_non_instances() {
        assert!(match_scheme(&f("p -> p"), SchemeId::L1).is_none());
        assert!(match_scheme(&f("p -> (q -> r)"), SchemeId::L1).is_none());
        assert!(match_scheme(&f("(~p -> ~q) -> (p -> q)"), SchemeId::L3).is_none());
    }

    // Every way of splitting `p -> p` against the L1 shape: the consequent
    // must itself be an implication, and `p` is an atom.
    #[test]
    fn l1_shape_exhaustive_on_small_formulas() {
        for text in ["p -> p", "p", "~p", "(p -> q) -> p", "p -> (q -> q)"] {
            assert!(match_scheme(&f(text), SchemeId::L1).is_none(), "{text}");
        }
        assert!(match_scheme(&f("p -> (p -> p)"), SchemeId::L1).is_some());
    }

    #[test]
    fn applies_substitutions() {
        let s = Substitution::new()
            .with(MetaVar::Phi, f("q"))
            .with(MetaVar::Psi, f("p"))
            .with(MetaVar::Chi, f("r"));
        assert_eq!(
            apply_substitution(SchemeId::L2, &s).unwrap(),
            f("(q -> (p -> r)) -> ((q -> p) -> (q -> r))")
        );
        let s = Substitution::new()
            .with(MetaVar::Phi, f("p"))
            .with(MetaVar::Psi, f("p"));
        assert_eq!(apply_substitution(SchemeId::L1, &s).unwrap(), f("p -> (p -> p)"));
        let s = Substitution::new()
            .with(MetaVar::Phi, f("p -> q"))
            .with(MetaVar::Psi, f("p"));
        assert_eq!(
            apply_substitution(SchemeId::L3, &s).unwrap(),
            f("(~(p->q) -> ~p) -> (p -> (p->q))")
        );
    }

    #[test]
    fn substitution_errors() {
        let s = Substitution::new().with(MetaVar::Phi, f("p"));
        assert_eq!(
            apply_substitution(SchemeId::L1, &s),
            Err(SubstError::Missing("psi"))
        );
        let s = Substitution::new()
            .with(MetaVar::Phi, f("p"))
            .with(MetaVar::Psi, f("p"))
            .with(MetaVar::Chi, f("p"));
        assert!(matches!(
            apply_substitution(SchemeId::L1, &s),
            Err(SubstError::Unexpected("chi", SchemeId::L1))
        ));
    }

    #[test]
    fn justification_schemes() {
        let app = f("x:(p->q) -> (y:p -> [x*y]:q)");
        let sigma = match_scheme(&app, SchemeId::App).unwrap();
        assert_eq!(sigma.get_term(TermMetaVar::S), Some(&Term::var("x")));
        assert_eq!(apply_substitution(SchemeId::App, &sigma).unwrap(), app);
        assert!(match_scheme(&f("x:(p->q) -> (y:p -> [y*x]:q)"), SchemeId::App).is_none());
        assert!(match_scheme(&f("x:p -> [x+y]:p"), SchemeId::SumL).is_some());
        assert!(match_scheme(&f("x:p -> [x+y]:p"), SchemeId::SumR).is_none());
        assert!(match_scheme(&f("y:p -> [x+y]:p"), SchemeId::SumR).is_some());
    }

    #[test]
    fn builders_agree_with_schemes() {
        let (a, b, c) = (f("p"), f("~q"), f("r -> p"));
        assert!(match_scheme(&l1(&a, &b), SchemeId::L1).is_some());
        assert!(match_scheme(&l2(&a, &b, &c), SchemeId::L2).is_some());
        assert!(match_scheme(&l3(&a, &b), SchemeId::L3).is_some());
        let (s, t) = (Term::var("x"), Term::constant("c1"));
        assert!(match_scheme(&application(&s, &t, &a, &b), SchemeId::App).is_some());
    }
}

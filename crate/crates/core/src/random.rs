//! Random valid proofs, for testing and benchmarking.
//!
//! Proofs are grown line by line from axiom instances and premises, joined
//! by modus ponens whenever two existing lines fit together. Axiom instances
//! are often built around formulas already in the proof so that modus ponens
//! has something to work with.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bridge::{lift_with, PremiseBinding};
use crate::jl::ConstantSpecification;
use crate::script::{Calculus, ProofLine, ProofScript, Rule};
use crate::syntax::scheme::{l1, l2, l3};
use crate::syntax::{Formula, LukAxiom, Term};

#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Number of premises (each also appears as a line).
    pub premises: usize,
    /// Upper bound on the number of lines, premises included.
    pub max_lines: usize,
    /// Atoms are drawn from `p`, `q`, `r`, ... up to this many.
    pub atoms: usize,
    /// Depth bound for freshly drawn formulas.
    pub depth: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            premises: 0,
            max_lines: 30,
            atoms: 3,
            depth: 2,
        }
    }
}

const ATOMS: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];

/// A random `~`/`->` formula of depth at most `depth` over the first
/// `atoms` atoms.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, atoms: usize, depth: usize) -> Formula {
    let atoms = atoms.clamp(1, ATOMS.len());
    if depth == 0 || rng.gen_bool(0.3) {
        return Formula::atom(ATOMS[rng.gen_range(0..atoms)]);
    }
    if rng.gen_bool(0.3) {
        Formula::neg(random_formula(rng, atoms, depth - 1))
    } else {
        Formula::implies(
            random_formula(rng, atoms, depth - 1),
            random_formula(rng, atoms, depth - 1),
        )
    }
}

/// A random valid Luk proof.
pub fn random_luk_proof<R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig) -> ProofScript {
    let max_lines = cfg.max_lines.max(cfg.premises).max(1);
    let mut premises: Vec<Formula> = Vec::with_capacity(cfg.premises);
    for i in 0..cfg.premises {
        let fresh = random_formula(rng, cfg.atoms, cfg.depth);
        let f = match premises.last() {
            Some(prev) if i > 0 && rng.gen_bool(0.5) => Formula::implies(prev.clone(), fresh),
            _ => fresh,
        };
        premises.push(f);
    }

    let mut lines: Vec<ProofLine> = premises
        .iter()
        .map(|f| ProofLine::new(f.clone(), Rule::Premise))
        .collect();
    let target = rng.gen_range(cfg.premises.max(1)..=max_lines);
    while lines.len() < target {
        let candidates = mp_candidates(&lines);
        if !candidates.is_empty() && rng.gen_bool(0.55) {
            let &(major, minor) = candidates.choose(rng).expect("non-empty");
            let (_, b) = lines[major - 1].formula.as_impl().expect("major is an implication");
            lines.push(ProofLine::new(b.clone(), Rule::Mp { major, minor }));
        } else {
            let (ax, f) = random_axiom(rng, &lines, cfg);
            lines.push(ProofLine::new(f, Rule::Axiom(ax)));
        }
    }
    ProofScript::new(Calculus::Luk, premises, lines).expect("generated script is well formed")
}

/// Pairs `(major, minor)` of 1-based lines where modus ponens applies and
/// yields a formula not yet in the proof.
fn mp_candidates(lines: &[ProofLine]) -> Vec<(usize, usize)> {
    let mut at: HashMap<&Formula, usize> = HashMap::new();
    for (i, l) in lines.iter().enumerate() {
        at.entry(&l.formula).or_insert(i + 1);
    }
    let mut out = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        if let Some((a, b)) = l.formula.as_impl() {
            if let Some(&j) = at.get(a) {
                if !at.contains_key(b) {
                    out.push((i + 1, j));
                }
            }
        }
    }
    out
}

fn random_axiom<R: Rng + ?Sized>(
    rng: &mut R,
    lines: &[ProofLine],
    cfg: &GenConfig,
) -> (LukAxiom, Formula) {
    let fresh = |rng: &mut R| random_formula(rng, cfg.atoms, cfg.depth);
    let existing = |rng: &mut R| lines.choose(rng).map(|l| l.formula.clone());
    match rng.gen_range(0..3) {
        0 => {
            let a = match existing(rng) {
                Some(f) if rng.gen_bool(0.6) => f,
                _ => fresh(rng),
            };
            let b = fresh(rng);
            (LukAxiom::L1, l1(&a, &b))
        }
        1 => {
            // Prefer an existing `a -> (b -> c)` so the instance can fire.
            let shaped: Vec<_> = lines
                .iter()
                .filter_map(|l| {
                    let (a, bc) = l.formula.as_impl()?;
                    let (b, c) = bc.as_impl()?;
                    Some((a.clone(), b.clone(), c.clone()))
                })
                .collect();
            let (a, b, c) = match shaped.choose(rng) {
                Some(t) if rng.gen_bool(0.7) => t.clone(),
                _ => (fresh(rng), fresh(rng), fresh(rng)),
            };
            (LukAxiom::L2, l2(&a, &b, &c))
        }
        _ => {
            let shaped: Vec<_> = lines
                .iter()
                .filter_map(|l| {
                    let (na, nb) = l.formula.as_impl()?;
                    match (na, nb) {
                        (Formula::Neg(a), Formula::Neg(b)) => {
                            Some(((**a).clone(), (**b).clone()))
                        }
                        _ => None,
                    }
                })
                .collect();
            let (a, b) = match shaped.choose(rng) {
                Some(t) if rng.gen_bool(0.7) => t.clone(),
                _ => (fresh(rng), fresh(rng)),
            };
            (LukAxiom::L3, l3(&a, &b))
        }
    }
}

/// A random valid JL proof: a lifted random Luk proof (premises bound to
/// `x1`, `x2`, ...) with Sum weakenings mixed in, which later application
/// steps then build on.
pub fn random_jl_proof<R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig) -> ProofScript {
    let luk = random_luk_proof(rng, cfg);
    let binding = PremiseBinding::auto(luk.premises());
    let lifted = lift_with(&luk, &binding, &ConstantSpecification::default())
        .expect("generated luk proofs are valid");
    let (_, premises, lifted_lines) = lifted.into_parts();

    let mut lines: Vec<ProofLine> = Vec::with_capacity(lifted_lines.len() * 2);
    // Where the (possibly weakened) justified version of each input line is.
    let mut at: Vec<usize> = vec![0];
    for line in lifted_lines {
        let formula = match line.rule {
            Rule::AppIntro(i, j) => {
                let (s, body) = lines[at[i] - 1].formula.as_just().expect("justified");
                let (_, b) = body.as_impl().expect("major is an implication");
                let (t, _) = lines[at[j] - 1].formula.as_just().expect("justified");
                Formula::just(Term::app(s.clone(), t.clone()), b.clone())
            }
            _ => line.formula.clone(),
        };
        let rule = match line.rule {
            Rule::AppIntro(i, j) if rng.gen_bool(0.5) => Rule::AppIntro(at[j], at[i]),
            Rule::AppIntro(i, j) => Rule::AppIntro(at[i], at[j]),
            other => other,
        };
        lines.push(ProofLine::new(formula, rule));
        let mut here = lines.len();
        if rng.gen_bool(0.2) {
            here = weaken(rng, &mut lines, here, cfg);
        }
        at.push(here);
    }
    ProofScript::new(Calculus::Jl, premises, lines).expect("generated script is well formed")
}

/// Appends `t:A -> [t+u]:A` (or `[u+t]`) and its modus ponens after line `n`.
fn weaken<R: Rng + ?Sized>(
    rng: &mut R,
    lines: &mut Vec<ProofLine>,
    n: usize,
    cfg: &GenConfig,
) -> usize {
    let (t, a) = {
        let (t, a) = lines[n - 1].formula.as_just().expect("justified");
        (t.clone(), a.clone())
    };
    let other = if rng.gen_bool(0.5) {
        Term::constant(["c1", "c2", "c3"][rng.gen_range(0..3)])
    } else {
        Term::var(&format!("y{}", rng.gen_range(1..=cfg.atoms.max(1))))
    };
    let sum = if rng.gen_bool(0.5) {
        Term::sum(t.clone(), other)
    } else {
        Term::sum(other, t.clone())
    };
    let weakened = Formula::just(sum, a.clone());
    let axiom = Formula::implies(Formula::just(t, a), weakened.clone());
    lines.push(ProofLine::new(axiom, Rule::SumAxiom));
    let major = lines.len();
    lines.push(ProofLine::new(weakened, Rule::Mp { major, minor: n }));
    lines.len()
}

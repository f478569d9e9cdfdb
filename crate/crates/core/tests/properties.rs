use std::sync::Arc;

use justify_core::bridge::{externalize, extract_term, internalize, lift, PremiseBinding};
use justify_core::jl::{check_jl_proof, expand_appintro, relabel_constants, ConstantSpecification};
use justify_core::luk::{check_luk_proof, derive_lemma, is_tautology, LemmaId};
use justify_core::random::{random_formula, random_jl_proof, random_luk_proof, GenConfig};
use justify_core::syntax::{apply_substitution, match_scheme, MetaVar, SchemeId, Substitution};
use justify_core::{check, parse_formula, parse_term, Formula, ProofLine, ProofScript, Rule, Term};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["c1", "c2", "c3", "c"]).prop_map(Term::constant),
        prop::sample::select(vec!["x", "y", "x1", "y2"]).prop_map(Term::var),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(s, t)| Term::app(s, t)),
            (inner.clone(), inner).prop_map(|(s, t)| Term::sum(s, t)),
        ]
    })
}

fn formula(justified: bool) -> BoxedStrategy<Formula> {
    let leaf = prop::sample::select(vec!["p", "q", "r", "p1"]).prop_map(Formula::atom);
    leaf.prop_recursive(8, 96, 2, move |inner| {
        let mut options = vec![
            inner.clone().prop_map(Formula::neg).boxed(),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Formula::implies(a, b))
                .boxed(),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Formula::and(a, b))
                .boxed(),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Formula::or(a, b))
                .boxed(),
        ];
        if justified {
            options.push((term(), inner).prop_map(|(t, a)| Formula::just(t, a)).boxed());
        }
        prop::strategy::Union::new(options)
    })
    .boxed()
}

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn formula_round_trip(f in formula(true)) {
        let text = f.to_string();
        prop_assert_eq!(parse_formula(&text).unwrap(), f);
    }

    #[test]
    fn term_round_trip(t in term()) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn term_size_and_depth(s in term(), t in term()) {
        let app = Term::app(s.clone(), t.clone());
        prop_assert_eq!(app.size(), s.size() + t.size() + 1);
        prop_assert_eq!(app.depth(), s.depth().max(t.depth()) + 1);
        let sum = Term::sum(s.clone(), t.clone());
        prop_assert_eq!(sum.size(), app.size());
    }

    #[test]
    fn match_inverts_apply(a in formula(true), b in formula(true), c in formula(true)) {
        let schemes = [
            (SchemeId::L1, Substitution::new().with(MetaVar::Phi, a.clone()).with(MetaVar::Psi, b.clone())),
            (SchemeId::L2, Substitution::new().with(MetaVar::Phi, a.clone()).with(MetaVar::Psi, b.clone()).with(MetaVar::Chi, c)),
            (SchemeId::L3, Substitution::new().with(MetaVar::Phi, a).with(MetaVar::Psi, b)),
        ];
        for (id, sigma) in schemes {
            let inst = apply_substitution(id, &sigma).unwrap();
            let back = match_scheme(&inst, id).unwrap();
            prop_assert_eq!(apply_substitution(id, &back).unwrap(), inst);
            prop_assert_eq!(back, sigma);
        }
    }

    #[test]
    fn random_luk_proofs_check(seed in any::<u64>(), premises in 0usize..=3) {
        let cfg = GenConfig { premises, ..GenConfig::default() };
        let p = random_luk_proof(&mut seeded(seed), &cfg);
        prop_assert!(check_luk_proof(&p).is_valid());
        // Every line of a valid premise-free proof is a tautology.
        if premises == 0 {
            for line in p.lines() {
                prop_assert!(is_tautology(&line.formula).unwrap(), "{}", line.formula);
            }
        }
    }

    #[test]
    fn perturbed_axiom_tag_is_rejected(seed in any::<u64>()) {
        let p = random_luk_proof(&mut seeded(seed), &GenConfig::default());
        let (calc, premises, mut lines) = p.into_parts();
        let Some(n) = lines.iter().position(|l| matches!(l.rule, Rule::Axiom(_))) else {
            return Ok(());
        };
        let f = lines[n].formula.clone();
        let wrong = justify_core::syntax::LukAxiom::ALL
            .into_iter()
            .find(|ax| match_scheme(&f, ax.scheme()).is_none());
        let Some(wrong) = wrong else { return Ok(()) };
        lines[n] = ProofLine::new(f, Rule::Axiom(wrong));
        let bad = ProofScript::new(calc, premises, lines).unwrap();
        let v = check(&bad);
        prop_assert!(!v.is_valid());
        prop_assert_eq!(v.failing_line, Some(n + 1));
    }

    #[test]
    fn jl_round_trips(seed in any::<u64>(), premises in 0usize..=3) {
        let cfg = GenConfig { premises, ..GenConfig::default() };
        let p = random_luk_proof(&mut seeded(seed), &cfg);
        let b = PremiseBinding::auto(p.premises());
        let jl = lift(&p, &b).unwrap();
        prop_assert_eq!(jl.len(), p.len());
        prop_assert!(check(&jl).is_valid());
        if premises == 0 {
            prop_assert_eq!(&internalize(&p).unwrap(), &jl);
        }
        let t = extract_term(&jl).unwrap();
        let bound: Vec<&str> = b.variables().collect();
        prop_assert!(t.variables().iter().all(|v| bound.contains(&&**v)));
        let back = externalize(&jl).unwrap();
        prop_assert!(check_luk_proof(&back).is_valid());
        prop_assert_eq!(back.conclusion(), p.conclusion());
    }

    #[test]
    fn random_jl_proofs_expand_and_externalize(seed in any::<u64>(), premises in 0usize..=3) {
        let cfg = GenConfig { premises, ..GenConfig::default() };
        let p = random_jl_proof(&mut seeded(seed), &cfg);
        prop_assert!(check(&p).is_valid());
        let expanded = expand_appintro(&p).unwrap();
        prop_assert!(check(&expanded).is_valid());
        prop_assert_eq!(expanded.conclusion(), p.conclusion());
        let back = externalize(&p).unwrap();
        prop_assert!(check_luk_proof(&back).is_valid());
        prop_assert_eq!(back.conclusion(), p.conclusion().as_just().unwrap().1);
    }

    #[test]
    fn relabeling_constants_follows_the_specification(seed in any::<u64>()) {
        let p = internalize(&random_luk_proof(&mut seeded(seed), &GenConfig::default())).unwrap();
        let cs = ConstantSpecification::new("ck", "cl", "cm").unwrap();
        let rename = |c: &str| -> Arc<str> {
            match c { "c1" => "ck".into(), "c2" => "cl".into(), "c3" => "cm".into(), other => other.into() }
        };
        let q = relabel_constants(&p, &rename);
        prop_assert!(check_jl_proof(&q, &cs).is_valid());
        if q.lines().iter().any(|l| matches!(l.rule, Rule::Axiom(_))) {
            prop_assert!(!check_jl_proof(&q, &ConstantSpecification::default()).is_valid());
        }
    }
}

#[test]
fn lemmas_hold_under_random_substitutions() {
    let mut rng = seeded(2024);
    for lemma in LemmaId::ALL {
        for _ in 0..50 {
            let mut sigma = Substitution::new();
            for &v in lemma.metavars() {
                sigma = sigma.with(v, random_formula(&mut rng, 3, 3));
            }
            let p = derive_lemma(lemma, &sigma).unwrap();
            let v = check_luk_proof(&p);
            assert!(v.is_valid(), "{lemma}: {v}");
            assert!(p.premises().is_empty());
            assert!(is_tautology(p.conclusion()).unwrap(), "{lemma}");
        }
    }
}

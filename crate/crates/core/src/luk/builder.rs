//! Incremental construction of Łukasiewicz derivations.
//!
//! A [`Builder`] holds lines that are valid under a fixed set of hypotheses.
//! Every formula is derived at most once; asking for a formula that is
//! already present returns its existing line.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hash, Hasher};

use rustc_hash::FxHasher;

use crate::script::{Calculus, ProofLine, ProofScript, Rule};
use crate::syntax::scheme::{l1, l2, l3};
use crate::syntax::{match_scheme, Formula, LukAxiom};

/// Handle to a line of a [`Builder`] (1-based, like script references).
pub(crate) type LineRef = usize;

#[derive(Clone, Debug)]
pub(crate) struct Builder {
    hyps: Vec<Formula>,
    lines: Vec<ProofLine>,
    index: HashMap<Key, LineRef, BuildHasherDefault<FxHasher>>,
}

/// A formula with its hash computed once, so that growing the index does
/// not rehash formulas.
#[derive(Clone, Debug)]
struct Key {
    hash: u64,
    formula: Formula,
}

impl Key {
    fn new(formula: Formula) -> Key {
        let mut h = FxHasher::default();
        formula.hash(&mut h);
        Key {
            hash: h.finish(),
            formula,
        }
    }
}

impl Hash for Key {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.hash);
    }
}

impl PartialEq for Key {
    fn eq(&self, other: &Key) -> bool {
        self.hash == other.hash && self.formula == other.formula
    }
}

impl Eq for Key {}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Discharge {
    /// Compile every line to `h -> line`.
    Strict,
    /// Keep lines that do not depend on the hypothesis as they are, and lift
    /// them with L1 only where they meet a dependent line.
    Lazy,
}

impl Builder {
    pub fn new(hyps: Vec<Formula>) -> Self {
        Builder {
            hyps,
            lines: Vec::new(),
            index: HashMap::default(),
        }
    }

    pub fn formula(&self, r: LineRef) -> &Formula {
        &self.lines[r - 1].formula
    }

    fn push(&mut self, formula: Formula, rule: Rule) -> LineRef {
        let key = Key::new(formula);
        if let Some(&r) = self.index.get(&key) {
            return r;
        }
        self.lines.push(ProofLine {
            formula: key.formula.clone(),
            rule,
        });
        let r = self.lines.len();
        self.index.insert(key, r);
        r
    }

    pub fn hyp(&mut self, f: &Formula) -> LineRef {
        debug_assert!(self.hyps.contains(f), "`{f}` is not a hypothesis");
        self.push(f.clone(), Rule::Premise)
    }

    pub fn axiom(&mut self, ax: LukAxiom, f: Formula) -> LineRef {
        debug_assert!(match_scheme(&f, ax.scheme()).is_some(), "`{f}` is not {ax}");
        self.push(f, Rule::Axiom(ax))
    }

    pub fn l1(&mut self, a: &Formula, b: &Formula) -> LineRef {
        self.axiom(LukAxiom::L1, l1(a, b))
    }

    pub fn l2(&mut self, a: &Formula, b: &Formula, c: &Formula) -> LineRef {
        self.axiom(LukAxiom::L2, l2(a, b, c))
    }

    pub fn l3(&mut self, a: &Formula, b: &Formula) -> LineRef {
        self.axiom(LukAxiom::L3, l3(a, b))
    }

    /// Modus ponens. Panics if `major` is not `minor -> _`; callers construct
    /// both lines, so a mismatch is a bug in the caller.
    pub fn mp(&mut self, major: LineRef, minor: LineRef) -> LineRef {
        let consequent = match self.formula(major).as_impl() {
            Some((a, b)) if a == self.formula(minor) => b.clone(),
            _ => panic!(
                "mp: `{}` does not apply to `{}`",
                self.formula(major),
                self.formula(minor)
            ),
        };
        self.push(consequent, Rule::Mp { major, minor })
    }

    /// Modus ponens when the caller already knows the consequent.
    pub fn mp_to(&mut self, major: LineRef, minor: LineRef, consequent: Formula) -> LineRef {
        debug_assert_eq!(
            self.formula(major),
            &Formula::implies(self.formula(minor).clone(), consequent.clone())
        );
        self.push(consequent, Rule::Mp { major, minor })
    }

    /// From `a -> b` and `b -> c`, derives `a -> c`.
    pub fn syllogism(&mut self, ab: LineRef, bc: LineRef) -> LineRef {
        let (a, b) = split(self.formula(ab));
        let (b2, c) = split(self.formula(bc));
        debug_assert_eq!(b, b2);
        let lift = self.l1(&Formula::implies(b.clone(), c.clone()), &a);
        let a_bc = self.mp(lift, bc);
        let dist = self.l2(&a, &b, &c);
        let step = self.mp(dist, a_bc);
        self.mp(step, ab)
    }

    /// Lines reachable from `target` through rule references.
    fn reachable(&self, target: LineRef) -> Vec<bool> {
        let mut keep = vec![false; self.lines.len() + 1];
        keep[target] = true;
        for r in (1..=target).rev() {
            if keep[r] {
                for dep in self.lines[r - 1].rule.references() {
                    keep[dep] = true;
                }
            }
        }
        keep
    }

    /// True iff the derivation of `target` uses hypothesis `hyp`.
    pub fn uses(&self, hyp: &Formula, target: LineRef) -> bool {
        let keep = self.reachable(target);
        (1..=target).any(|r| {
            keep[r] && self.lines[r - 1].rule == Rule::Premise && self.lines[r - 1].formula == *hyp
        })
    }

    /// Copies the derivation of `target` in `other` into `self`. Hypotheses
    /// used by `other` must be hypotheses of `self` too.
    pub fn splice(&mut self, other: &Builder, target: LineRef) -> LineRef {
        let keep = other.reachable(target);
        let mut map = vec![0; other.lines.len() + 1];
        for r in 1..=target {
            if !keep[r] {
                continue;
            }
            let line = &other.lines[r - 1];
            map[r] = match line.rule {
                Rule::Premise => self.hyp(&line.formula),
                Rule::Axiom(ax) => self.axiom(ax, line.formula.clone()),
                Rule::Mp { major, minor } => self.mp(map[major], map[minor]),
                _ => unreachable!("builders only hold luk rules"),
            };
        }
        map[target]
    }

    /// Imports a Luk script, returning the builder and the line each script
    /// line landed on.
    pub fn import(script: &ProofScript) -> (Builder, Vec<LineRef>) {
        let mut b = Builder::new(script.premises().to_vec());
        let mut map = vec![0];
        for line in script.lines() {
            let r = match line.rule {
                Rule::Premise => b.hyp(&line.formula),
                Rule::Axiom(ax) => b.axiom(ax, line.formula.clone()),
                Rule::Mp { major, minor } => b.mp(map[major], map[minor]),
                _ => unreachable!("import expects a checked luk script"),
            };
            map.push(r);
        }
        (b, map)
    }

    /// Deduction theorem: returns a builder over the remaining hypotheses
    /// that derives `hyp -> formula(target)`, and that line.
    pub fn discharge(&self, hyp: &Formula, target: LineRef, mode: Discharge) -> (Builder, LineRef) {
        let rest: Vec<Formula> = self.hyps.iter().filter(|h| *h != hyp).cloned().collect();
        let mut out = Builder::new(rest);
        let keep = self.reachable(target);

        #[derive(Clone, Copy)]
        enum State {
            Skipped,
            // The line itself, not depending on the hypothesis.
            Plain(LineRef),
            // `hyp -> line`.
            Lifted(LineRef),
        }
        let mut state = vec![State::Skipped; self.lines.len() + 1];

        fn lifted(out: &mut Builder, hyp: &Formula, s: State) -> LineRef {
            match s {
                State::Lifted(r) => r,
                State::Plain(r) => {
                    let f = out.formula(r).clone();
                    let ax = out.l1(&f, hyp);
                    out.mp(ax, r)
                }
                State::Skipped => unreachable!(),
            }
        }

        for r in 1..=target {
            if !keep[r] {
                continue;
            }
            let line = &self.lines[r - 1];
            let psi = &line.formula;
            let s = if psi == hyp {
                State::Lifted(super::lemmas::identity(&mut out, hyp))
            } else {
                let plain = match line.rule {
                    Rule::Premise => Some(out.hyp(psi)),
                    Rule::Axiom(ax) => Some(out.axiom(ax, psi.clone())),
                    Rule::Mp { major, minor } => match (state[major], state[minor]) {
                        (State::Plain(a), State::Plain(b)) if mode == Discharge::Lazy => {
                            Some(out.mp(a, b))
                        }
                        (sa, sb) => {
                            let h_major = lifted(&mut out, hyp, sa);
                            let h_minor = lifted(&mut out, hyp, sb);
                            let minor_f = self.formula(minor).clone();
                            let dist = out.l2(hyp, &minor_f, psi);
                            let step = out.mp(dist, h_major);
                            state[r] = State::Lifted(out.mp(step, h_minor));
                            None
                        }
                    },
                    _ => unreachable!("builders only hold luk rules"),
                };
                match plain {
                    Some(p) if mode == Discharge::Lazy => State::Plain(p),
                    Some(p) => State::Lifted(lifted(&mut out, hyp, State::Plain(p))),
                    None => state[r],
                }
            };
            state[r] = s;
        }
        let result = lifted(&mut out, hyp, state[target]);
        (out, result)
    }

    /// Finishes the derivation of `target` as a premise-carrying Luk script.
    /// Lines not needed for `target` are dropped.
    pub fn finish(&self, target: LineRef) -> ProofScript {
        let keep = self.reachable(target);
        let mut map = vec![0; self.lines.len() + 1];
        let mut lines = Vec::new();
        for r in 1..=target {
            if !keep[r] {
                continue;
            }
            let line = &self.lines[r - 1];
            let rule = match line.rule {
                Rule::Mp { major, minor } => Rule::Mp {
                    major: map[major],
                    minor: map[minor],
                },
                other => other,
            };
            lines.push(ProofLine {
                formula: line.formula.clone(),
                rule,
            });
            map[r] = lines.len();
        }
        ProofScript::new(Calculus::Luk, self.hyps.clone(), lines)
            .expect("builder output is structurally sound")
    }
}

fn split(f: &Formula) -> (Formula, Formula) {
    let (a, b) = f.as_impl().expect("expected an implication");
    (a.clone(), b.clone())
}

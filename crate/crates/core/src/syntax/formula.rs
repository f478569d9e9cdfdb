use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::Term;

/// A propositional formula, possibly containing justified subformulas `t:F`.
///
/// Subtrees are reference counted, so cloning is cheap and large derived
/// formulas share structure. Equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    Neg(Arc<Formula>),
    Impl(Arc<Formula>, Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Just(Term, Arc<Formula>),
}

impl Formula {
    /// Builds an atom. Panics if `name` does not match `[a-z][a-z0-9_]*`.
    pub fn atom(name: &str) -> Formula {
        assert!(super::is_identifier(name), "`{name}` is not a valid atom name");
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(inner: Formula) -> Formula {
        Formula::Neg(Arc::new(inner))
    }

    pub fn implies(antecedent: Formula, consequent: Formula) -> Formula {
        Formula::Impl(Arc::new(antecedent), Arc::new(consequent))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Arc::new(left), Arc::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Arc::new(left), Arc::new(right))
    }

    pub fn just(term: Term, inner: Formula) -> Formula {
        Formula::Just(term, Arc::new(inner))
    }

    /// Splits an implication into antecedent and consequent.
    pub fn as_impl(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Impl(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Splits a justified formula into its term and body.
    pub fn as_just(&self) -> Option<(&Term, &Formula)> {
        match self {
            Formula::Just(t, f) => Some((t, f)),
            _ => None,
        }
    }

    /// True if some subformula has the shape `t:F`.
    pub fn has_justification(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Neg(a) => a.has_justification(),
            Formula::Impl(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.has_justification() || b.has_justification()
            }
            Formula::Just(..) => true,
        }
    }

    /// True if the formula uses only atoms, `~` and `->`.
    pub fn is_implicational(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Neg(a) => a.is_implicational(),
            Formula::Impl(a, b) => a.is_implicational() && b.is_implicational(),
            _ => false,
        }
    }

    /// Atom names in the formula, sorted.
    pub fn atoms(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::Neg(a) | Formula::Just(_, a) => a.collect_atoms(out),
            Formula::Impl(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Number of connectives (`~`, `->`, `&`, `|`, `:`).
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Neg(a) | Formula::Just(_, a) => a.connective_count() + 1,
            Formula::Impl(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.connective_count() + b.connective_count() + 1
            }
        }
    }

    /// Rewrites `&` and `|` into `~`/`->` form: `A | B` becomes `~A -> B` and
    /// `A & B` becomes `~(A -> ~B)`. Other connectives are kept.
    pub fn expand_definitions(&self) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Neg(a) => Formula::neg(a.expand_definitions()),
            Formula::Impl(a, b) => Formula::implies(a.expand_definitions(), b.expand_definitions()),
            Formula::Or(a, b) => Formula::implies(
                Formula::neg(a.expand_definitions()),
                b.expand_definitions(),
            ),
            Formula::And(a, b) => Formula::neg(Formula::implies(
                a.expand_definitions(),
                Formula::neg(b.expand_definitions()),
            )),
            Formula::Just(t, a) => Formula::just(t.clone(), a.expand_definitions()),
        }
    }

    /// Rewrites every justification constant through `f`.
    pub fn map_constants(&self, f: &impl Fn(&str) -> Arc<str>) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Neg(a) => Formula::neg(a.map_constants(f)),
            Formula::Impl(a, b) => Formula::implies(a.map_constants(f), b.map_constants(f)),
            Formula::And(a, b) => Formula::and(a.map_constants(f), b.map_constants(f)),
            Formula::Or(a, b) => Formula::or(a.map_constants(f), b.map_constants(f)),
            Formula::Just(t, a) => Formula::just(t.map_constants(f), a.map_constants(f)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Impl(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Atom(_) | Formula::Neg(_) | Formula::Just(..) => 4,
        }
    }
}

/// Writes `f`, parenthesized if its precedence is below `min`.
fn write_at(out: &mut fmt::Formatter<'_>, f: &Formula, min: u8) -> fmt::Result {
    if f.precedence() < min {
        write!(out, "({f})")
    } else {
        write!(out, "{f}")
    }
}

// Nested implications on the right are still parenthesized, `p -> (q -> p)`,
// even though `->` associates to the right when parsing.
/// Only a bounded preorder prefix of the tree is hashed, so hashing a large
/// derived formula costs the same as hashing a small one. Equal formulas have
/// equal prefixes, so this agrees with `Eq`.
impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let mut budget = 24;
        self.hash_prefix(state, &mut budget);
    }
}

impl Formula {
    fn hash_prefix<H: Hasher>(&self, state: &mut H, budget: &mut u32) {
        if *budget == 0 {
            return;
        }
        *budget -= 1;
        std::mem::discriminant(self).hash(state);
        match self {
            Formula::Atom(name) => name.hash(state),
            Formula::Neg(a) => a.hash_prefix(state, budget),
            Formula::Impl(a, b) | Formula::And(a, b) | Formula::Or(a, b) => {
                a.hash_prefix(state, budget);
                b.hash_prefix(state, budget);
            }
            Formula::Just(t, a) => {
                t.hash(state);
                a.hash_prefix(state, budget);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p) => f.write_str(p),
            Formula::Neg(a) => {
                f.write_str("~")?;
                write_at(f, a, 4)
            }
            Formula::Impl(a, b) => {
                write_at(f, a, 2)?;
                f.write_str(" -> ")?;
                write_at(f, b, 2)
            }
            Formula::Or(a, b) => {
                write_at(f, a, 2)?;
                f.write_str(" | ")?;
                write_at(f, b, 3)
            }
            Formula::And(a, b) => {
                write_at(f, a, 3)?;
                f.write_str(" & ")?;
                write_at(f, b, 4)
            }
            Formula::Just(t, a) => {
                write!(f, "{t}:")?;
                write_at(f, a, 4)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({self})")
    }
}

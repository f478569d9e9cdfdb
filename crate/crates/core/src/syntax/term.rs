use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A justification term: a constant, a variable, an application `[s*t]` or a
/// sum `[s+t]`.
///
/// Constants are identifiers beginning with `c`; variables begin with `x` or
/// `y`. The two namespaces never overlap, so a constant can not be used as a
/// variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Const(Arc<str>),
    Var(Arc<str>),
    App(Arc<Term>, Arc<Term>),
    Sum(Arc<Term>, Arc<Term>),
}

/// Which kind of leaf an identifier denotes in term position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermLeafKind {
    Const,
    Var,
}

/// Classifies a term identifier, or returns `None` if it is not a valid
/// constant or variable name.
pub fn classify_term_ident(name: &str) -> Option<TermLeafKind> {
    if !super::is_identifier(name) {
        return None;
    }
    match name.as_bytes()[0] {
        b'c' => Some(TermLeafKind::Const),
        b'x' | b'y' => Some(TermLeafKind::Var),
        _ => None,
    }
}

impl Term {
    /// Builds a constant. Panics if `name` is not a constant identifier.
    pub fn constant(name: &str) -> Term {
        assert_eq!(
            classify_term_ident(name),
            Some(TermLeafKind::Const),
            "`{name}` is not a constant identifier"
        );
        Term::Const(name.into())
    }

    /// Builds a variable. Panics if `name` is not a variable identifier.
    pub fn var(name: &str) -> Term {
        assert_eq!(
            classify_term_ident(name),
            Some(TermLeafKind::Var),
            "`{name}` is not a variable identifier"
        );
        Term::Var(name.into())
    }

    pub fn app(left: Term, right: Term) -> Term {
        Term::App(Arc::new(left), Arc::new(right))
    }

    pub fn sum(left: Term, right: Term) -> Term {
        Term::Sum(Arc::new(left), Arc::new(right))
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::App(l, r) | Term::Sum(l, r) => l.size() + r.size() + 1,
        }
    }

    /// Longest root-to-leaf path, counting nodes. A leaf has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::App(l, r) | Term::Sum(l, r) => l.depth().max(r.depth()) + 1,
        }
    }

    /// Distinct variable names occurring in the term.
    pub fn variables(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Term::Const(_) => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(l, r) | Term::Sum(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn has_variables(&self) -> bool {
        match self {
            Term::Const(_) => false,
            Term::Var(_) => true,
            Term::App(l, r) | Term::Sum(l, r) => l.has_variables() || r.has_variables(),
        }
    }

    /// Rewrites every constant through `f`.
    pub fn map_constants(&self, f: &impl Fn(&str) -> Arc<str>) -> Term {
        match self {
            Term::Const(c) => Term::Const(f(c)),
            Term::Var(_) => self.clone(),
            Term::App(l, r) => Term::app(l.map_constants(f), r.map_constants(f)),
            Term::Sum(l, r) => Term::sum(l.map_constants(f), r.map_constants(f)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(name) | Term::Var(name) => f.write_str(name),
            Term::App(l, r) => write!(f, "[{l}*{r}]"),
            Term::Sum(l, r) => write!(f, "[{l}+{r}]"),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

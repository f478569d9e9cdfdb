//! Formulas, justification terms, their concrete syntax, and axiom schemes.

mod formula;
mod parse;
pub mod scheme;
mod term;

pub use formula::Formula;
pub use parse::{parse_formula, parse_term, ParseError};
pub use scheme::{
    apply_substitution, match_scheme, LukAxiom, MetaVar, SchemeId, SubstError, Substitution,
    TermMetaVar,
};
pub use term::{classify_term_ident, Term, TermLeafKind};

/// True if `s` matches `[a-z][a-z0-9_]*`.
pub(crate) fn is_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    matches!(bytes.next(), Some(b'a'..=b'z'))
        && bytes.all(|b| matches!(b, b'a'..=b'z' | b'0'..=b'9' | b'_'))
}

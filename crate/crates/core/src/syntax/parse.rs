//! Recursive-descent parser for the ASCII formula and term syntax.
//!
//! ```text
//! formula ::= disj [ "->" formula ]
//! disj    ::= conj { "|" conj }
//! conj    ::= unary { "&" unary }
//! unary   ::= "~" unary | term ":" unary | atom | "(" formula ")"
//! term    ::= const | var | "[" term "*" term "]" | "[" term "+" term "]"
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt;

use thiserror::Error;

use super::term::{classify_term_ident, TermLeafKind};
use super::{Formula, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Arrow,
    Tilde,
    Amp,
    Bar,
    Colon,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Star,
    Plus,
    Eof,
    Bad(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Eof => f.write_str("end of input"),
            Tok::Bad(c) => write!(f, "`{c}`"),
        }
    }
}

fn lex(text: &str) -> Vec<(Tok, usize)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((Tok::Arrow, i));
                i += 2;
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i], b'a'..=b'z' | b'0'..=b'9' | b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                let tok = match c {
                    b'~' => Tok::Tilde,
                    b'&' => Tok::Amp,
                    b'|' => Tok::Bar,
                    b':' => Tok::Colon,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b'[' => Tok::LBracket,
                    b']' => Tok::RBracket,
                    b'*' => Tok::Star,
                    b'+' => Tok::Plus,
                    _ => {
                        // Report the whole (possibly multi-byte) character.
                        let ch = text[i..].chars().next().unwrap_or('?');
                        out.push((Tok::Bad(ch), i));
                        i += ch.len_utf8();
                        continue;
                    }
                };
                out.push((tok, i));
                i += 1;
            }
        }
    }
    out.push((Tok::Eof, text.len()));
    out
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

const FORMULA_START: &[&str] = &["atom", "term", "`~`", "`(`"];

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            toks: lex(text),
            pos: 0,
        }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::LBracket => {
                let t = self.term()?;
                self.justified(t)
            }
            Tok::Ident(name) => {
                if *self.peek2() == Tok::Colon {
                    let t = self.term()?;
                    self.justified(t)
                } else {
                    self.bump();
                    Ok(Formula::Atom(name.into()))
                }
            }
            _ => Err(self.error(FORMULA_START)),
        }
    }

    fn justified(&mut self, t: Term) -> Result<Formula, ParseError> {
        self.expect(Tok::Colon, "`:`")?;
        Ok(Formula::just(t, self.unary()?))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => match classify_term_ident(&name) {
                Some(TermLeafKind::Const) => {
                    self.bump();
                    Ok(Term::Const(name.into()))
                }
                Some(TermLeafKind::Var) => {
                    self.bump();
                    Ok(Term::Var(name.into()))
                }
                None => Err(self.error(&["constant (c...)", "variable (x... or y...)", "`[`"])),
            },
            Tok::LBracket => {
                self.bump();
                let l = self.term()?;
                let t = match self.peek() {
                    Tok::Star => {
                        self.bump();
                        Term::app(l, self.term()?)
                    }
                    Tok::Plus => {
                        self.bump();
                        Term::sum(l, self.term()?)
                    }
                    _ => return Err(self.error(&["`*`", "`+`"])),
                };
                self.expect(Tok::RBracket, "`]`")?;
                Ok(t)
            }
            _ => Err(self.error(&["constant (c...)", "variable (x... or y...)", "`[`"])),
        }
    }
}

/// Parses a formula. Whitespace and `#` comments are ignored.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text);
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a justification term. Binary terms must be bracketed.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text);
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn implication_is_right_associative() {
        let f = parse_formula("p -> (q -> p)").unwrap();
        assert_eq!(f, Formula::implies(a("p"), Formula::implies(a("q"), a("p"))));
        assert_eq!(parse_formula("p -> q -> p").unwrap(), f);
        assert_eq!(parse_formula("p").unwrap(), a("p"));
    }

    #[test]
    fn precedence_levels() {
        let f = parse_formula("~p & q | r -> s").unwrap();
        let expect = Formula::implies(
            Formula::or(Formula::and(Formula::neg(a("p")), a("q")), a("r")),
            a("s"),
        );
        assert_eq!(f, expect);
        assert_eq!(
            parse_formula("p | q | r").unwrap(),
            Formula::or(Formula::or(a("p"), a("q")), a("r"))
        );
    }

    #[test]
    fn justification_binds_tightly() {
        let f = parse_formula("x:p->q").unwrap();
        assert_eq!(
            f,
            Formula::implies(Formula::just(Term::var("x"), a("p")), a("q"))
        );
        let g = parse_formula("[c2*y]:((q->p)->(q->r))").unwrap();
        let body = Formula::implies(
            Formula::implies(a("q"), a("p")),
            Formula::implies(a("q"), a("r")),
        );
        assert_eq!(
            g,
            Formula::just(Term::app(Term::constant("c2"), Term::var("y")), body)
        );
        assert_eq!(
            parse_formula("~x:y:p").unwrap(),
            Formula::neg(Formula::just(
                Term::var("x"),
                Formula::just(Term::var("y"), a("p"))
            ))
        );
    }

    #[test]
    fn terms() {
        assert_eq!(
            parse_term("[[c2*y]*[c1*x]]").unwrap(),
            Term::app(
                Term::app(Term::constant("c2"), Term::var("y")),
                Term::app(Term::constant("c1"), Term::var("x"))
            )
        );
        assert_eq!(parse_term("x").unwrap(), Term::var("x"));
        assert_eq!(
            parse_term("[c1+x]").unwrap(),
            Term::sum(Term::constant("c1"), Term::var("x"))
        );
    }

    #[test]
    fn comments_and_whitespace() {
        let f = parse_formula("  p\t->  # trailing\n q ").unwrap();
        assert_eq!(f, Formula::implies(a("p"), a("q")));
    }

    #[test]
    fn diagnostics_carry_offsets() {
        let e = parse_formula("p -> ").unwrap_err();
        assert_eq!(e.offset, 5);
        assert!(e.expected.contains(&"atom"));

        let e = parse_formula("p q").unwrap_err();
        assert_eq!(e.offset, 2);
        assert_eq!(e.expected, vec!["end of input"]);

        let e = parse_formula("(p -> q").unwrap_err();
        assert_eq!(e.offset, 7);
        assert_eq!(e.expected, vec!["`)`"]);

        // `p` is not a term identifier.
        let e = parse_formula("p:q").unwrap_err();
        assert_eq!(e.offset, 0);

        let e = parse_term("c1*x").unwrap_err();
        assert_eq!(e.offset, 2);

        let e = parse_term("[c1-x]").unwrap_err();
        assert_eq!(e.offset, 3);

        let e = parse_formula("P").unwrap_err();
        assert_eq!(e.found, "`P`");

        assert!(parse_formula("").is_err());
        assert!(parse_formula("p → q").is_err());
    }
}

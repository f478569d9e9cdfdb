//! Proof scripts: the shared representation of derivations in both calculi,
//! and their line-oriented text format.
//!
//! ```text
//! system: luk
//! premise: p
//! premise: q -> (p -> r)
//! 1. p ; premise
//! 2. q -> (p -> r) ; premise
//! 3. p -> (q -> p) ; ax1
//! 4. q -> p ; mp 3 1
//! ```
//!
//! `mp I J` names the implication first and its antecedent second. JL scripts
//! write CS lines as `cs ax1` and add `app`, `sum` and `appintro I J`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::syntax::{parse_formula, Formula, LukAxiom, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Calculus {
    /// The Łukasiewicz calculus: premises, `ax1..ax3`, modus ponens.
    Luk,
    /// The justification calculus over the Łukasiewicz schemes.
    Jl,
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Calculus::Luk => "luk",
            Calculus::Jl => "jl",
        })
    }
}

/// How a line is justified. Line references are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Premise,
    /// A Łukasiewicz axiom instance (Luk), or its CS line `c:A` (JL).
    Axiom(LukAxiom),
    /// JL only: an Application axiom instance.
    AppAxiom,
    /// JL only: a Sum axiom instance, either injection.
    SumAxiom,
    /// From `A -> B` at `major` and `A` at `minor`, infer `B`.
    Mp { major: usize, minor: usize },
    /// JL only: from `s:(A -> B)` and `t:A`, infer `[s*t]:B`. The two lines may
    /// be given in either order.
    AppIntro(usize, usize),
}

impl Rule {
    pub fn references(&self) -> Vec<usize> {
        match *self {
            Rule::Mp { major, minor } => vec![major, minor],
            Rule::AppIntro(i, j) => vec![i, j],
            _ => Vec::new(),
        }
    }

    /// Stable name of the rule kind, used in metrics.
    pub fn kind(&self) -> &'static str {
        match self {
            Rule::Premise => "premise",
            Rule::Axiom(_) => "axiom",
            Rule::AppAxiom => "app",
            Rule::SumAxiom => "sum",
            Rule::Mp { .. } => "mp",
            Rule::AppIntro(..) => "appintro",
        }
    }

    pub fn allowed_in(&self, calculus: Calculus) -> bool {
        match self {
            Rule::Premise | Rule::Axiom(_) | Rule::Mp { .. } => true,
            Rule::AppAxiom | Rule::SumAxiom | Rule::AppIntro(..) => calculus == Calculus::Jl,
        }
    }

    fn jl_only(&self) -> bool {
        !self.allowed_in(Calculus::Luk)
    }

    /// Renders the rule as it appears after `;` in a script of `calculus`.
    pub fn render(&self, calculus: Calculus) -> String {
        match (self, calculus) {
            (Rule::Premise, _) => "premise".into(),
            (Rule::Axiom(a), Calculus::Luk) => a.keyword().into(),
            (Rule::Axiom(a), Calculus::Jl) => format!("cs {}", a.keyword()),
            (Rule::AppAxiom, _) => "app".into(),
            (Rule::SumAxiom, _) => "sum".into(),
            (Rule::Mp { major, minor }, _) => format!("mp {major} {minor}"),
            (Rule::AppIntro(i, j), _) => format!("appintro {i} {j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofLine {
    pub formula: Formula,
    pub rule: Rule,
}

impl ProofLine {
    pub fn new(formula: Formula, rule: Rule) -> Self {
        ProofLine { formula, rule }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("script has no proof lines")]
    Empty,
    #[error("line {line}: rule `{rule}` is not available in a {calculus} script")]
    RuleNotInCalculus {
        line: usize,
        rule: String,
        calculus: Calculus,
    },
    #[error("line {line}: reference to line {reference} is not to an earlier line")]
    BadReference { line: usize, reference: usize },
    #[error("line {line}: both operands refer to line {reference}")]
    SameOperand { line: usize, reference: usize },
    #[error("source line {source_line}: {message}")]
    Malformed { source_line: usize, message: String },
    #[error("source line {source_line}, column {}: {error}", .error.offset + .column)]
    Syntax {
        source_line: usize,
        column: usize,
        error: ParseError,
    },
}

/// A checked-for-shape derivation: lines are numbered 1..n, every reference
/// points strictly backwards, and every rule belongs to the script's
/// calculus. Whether the lines are actually *valid* is decided by the
/// checkers in [`crate::luk`] and [`crate::jl`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofScript {
    calculus: Calculus,
    premises: Vec<Formula>,
    lines: Vec<ProofLine>,
}

impl ProofScript {
    pub fn new(
        calculus: Calculus,
        premises: Vec<Formula>,
        lines: Vec<ProofLine>,
    ) -> Result<Self, ScriptError> {
        if lines.is_empty() {
            return Err(ScriptError::Empty);
        }
        for (pos, line) in lines.iter().enumerate() {
            let n = pos + 1;
            if !line.rule.allowed_in(calculus) {
                return Err(ScriptError::RuleNotInCalculus {
                    line: n,
                    rule: line.rule.render(Calculus::Jl),
                    calculus,
                });
            }
            let refs = line.rule.references();
            for &r in &refs {
                if r == 0 || r >= n {
                    return Err(ScriptError::BadReference {
                        line: n,
                        reference: r,
                    });
                }
            }
            if refs.len() == 2 && refs[0] == refs[1] {
                return Err(ScriptError::SameOperand {
                    line: n,
                    reference: refs[0],
                });
            }
        }
        Ok(ProofScript {
            calculus,
            premises,
            lines,
        })
    }

    pub fn calculus(&self) -> Calculus {
        self.calculus
    }

    pub fn premises(&self) -> &[Formula] {
        &self.premises
    }

    pub fn lines(&self) -> &[ProofLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// The line with 1-based index `n`.
    pub fn line(&self, n: usize) -> &ProofLine {
        &self.lines[n - 1]
    }

    pub fn conclusion(&self) -> &Formula {
        &self.lines.last().expect("scripts are never empty").formula
    }

    pub fn into_parts(self) -> (Calculus, Vec<Formula>, Vec<ProofLine>) {
        (self.calculus, self.premises, self.lines)
    }

    /// Parses the text format. Without a `system:` header the script is read
    /// as JL when it uses a JL-only rule or a justified formula, otherwise as
    /// Luk.
    pub fn parse(text: &str) -> Result<Self, ScriptError> {
        let mut calculus = None;
        let mut premises = Vec::new();
        let mut lines = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let source_line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let malformed = |message: String| ScriptError::Malformed {
                source_line,
                message,
            };
            let formula_at = |text: &str| -> Result<Formula, ScriptError> {
                let column = text.as_ptr() as usize - raw.as_ptr() as usize + 1;
                parse_formula(text).map_err(|error| ScriptError::Syntax {
                    source_line,
                    column,
                    error,
                })
            };

            if let Some(rest) = trimmed.strip_prefix("system:") {
                if calculus.is_some() || !premises.is_empty() || !lines.is_empty() {
                    return Err(malformed("`system:` must be the first entry".into()));
                }
                calculus = Some(match rest.trim() {
                    "luk" => Calculus::Luk,
                    "jl" => Calculus::Jl,
                    other => return Err(malformed(format!("unknown system `{other}`"))),
                });
            } else if let Some(rest) = trimmed.strip_prefix("premise:") {
                if !lines.is_empty() {
                    return Err(malformed("premises must precede proof lines".into()));
                }
                premises.push(formula_at(rest)?);
            } else {
                let (number, rest) = trimmed
                    .split_once('.')
                    .ok_or_else(|| malformed("expected `N. <formula> ; <rule>`".into()))?;
                let number: usize = number
                    .trim()
                    .parse()
                    .map_err(|_| malformed(format!("bad line number `{}`", number.trim())))?;
                if number != lines.len() + 1 {
                    return Err(malformed(format!(
                        "expected line number {}, found {number}",
                        lines.len() + 1
                    )));
                }
                let (formula_text, rule_text) = rest
                    .rsplit_once(';')
                    .ok_or_else(|| malformed("missing `; <rule>`".into()))?;
                let formula = formula_at(formula_text)?;
                let rule = parse_rule(rule_text).map_err(malformed)?;
                lines.push(ProofLine { formula, rule });
            }
        }

        let calculus = calculus.unwrap_or_else(|| {
            let jl = lines.iter().any(|l: &ProofLine| {
                l.rule.jl_only() || l.formula.has_justification()
            }) || premises.iter().any(Formula::has_justification);
            if jl {
                Calculus::Jl
            } else {
                Calculus::Luk
            }
        });
        ProofScript::new(calculus, premises, lines)
    }
}

impl FromStr for ProofScript {
    type Err = ScriptError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProofScript::parse(s)
    }
}

fn parse_rule(text: &str) -> Result<Rule, String> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let index = |w: &str| -> Result<usize, String> {
        w.parse()
            .map_err(|_| format!("bad line reference `{w}`"))
    };
    let axiom = |w: &str| -> Result<LukAxiom, String> {
        w.strip_prefix("ax")
            .and_then(|n| n.parse().ok())
            .and_then(LukAxiom::from_number)
            .ok_or_else(|| format!("unknown axiom `{w}`"))
    };
    match words.as_slice() {
        ["premise"] => Ok(Rule::Premise),
        ["cs", ax] => Ok(Rule::Axiom(axiom(ax)?)),
        ["app"] => Ok(Rule::AppAxiom),
        ["sum"] => Ok(Rule::SumAxiom),
        ["mp", i, j] => Ok(Rule::Mp {
            major: index(i)?,
            minor: index(j)?,
        }),
        ["appintro", i, j] => Ok(Rule::AppIntro(index(i)?, index(j)?)),
        [ax] if ax.starts_with("ax") => Ok(Rule::Axiom(axiom(ax)?)),
        _ => Err(format!("unknown rule `{}`", text.trim())),
    }
}

impl fmt::Display for ProofScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system: {}", self.calculus)?;
        for p in &self.premises {
            writeln!(f, "premise: {p}")?;
        }
        for (i, line) in self.lines.iter().enumerate() {
            writeln!(
                f,
                "{}. {} ; {}",
                i + 1,
                line.formula,
                line.rule.render(self.calculus)
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Valid,
    Invalid,
}

/// Outcome of checking a script. `failing_line` is set exactly when the
/// status is `Invalid`; `checked_lines` counts the lines accepted before the
/// first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub failing_line: Option<usize>,
    pub reason: String,
    pub checked_lines: usize,
}

impl Verdict {
    pub fn valid(lines: usize) -> Self {
        Verdict {
            status: Status::Valid,
            failing_line: None,
            reason: format!("all {lines} lines check"),
            checked_lines: lines,
        }
    }

    pub fn invalid(line: usize, reason: impl Into<String>) -> Self {
        Verdict {
            status: Status::Invalid,
            failing_line: Some(line),
            reason: reason.into(),
            checked_lines: line - 1,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.status == Status::Valid
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failing_line {
            None => write!(f, "valid: {}", self.reason),
            Some(n) => write!(f, "invalid at line {n}: {}", self.reason),
        }
    }
}

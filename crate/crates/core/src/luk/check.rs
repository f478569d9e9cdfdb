use crate::script::{Calculus, ProofScript, Rule, Verdict};
use crate::syntax::match_scheme;

/// Checks a Łukasiewicz proof line by line.
///
/// Each line must be a declared premise, an exact instance of its named axiom
/// scheme, or follow by modus ponens where the major line is literally
/// `minor -> current`. Justified formulas are rejected outright, and `&`/`|`
/// are taken as written: no definitional expansion happens here.
pub fn check_luk_proof(p: &ProofScript) -> Verdict {
    if p.calculus() != Calculus::Luk {
        return Verdict::invalid(1, "not a luk script");
    }
    if let Some(bad) = p.premises().iter().find(|f| f.has_justification()) {
        return Verdict::invalid(1, format!("premise `{bad}` contains a justification"));
    }
    for (pos, line) in p.lines().iter().enumerate() {
        let n = pos + 1;
        let f = &line.formula;
        if f.has_justification() {
            return Verdict::invalid(n, "justified formulas are not part of the luk language");
        }
        match line.rule {
            Rule::Premise => {
                if !p.premises().contains(f) {
                    return Verdict::invalid(n, format!("`{f}` is not a declared premise"));
                }
            }
            Rule::Axiom(ax) => {
                if match_scheme(f, ax.scheme()).is_none() {
                    return Verdict::invalid(n, format!("`{f}` is not an instance of {ax}"));
                }
            }
            Rule::Mp { major, minor } => {
                let ok = p.line(major).formula.as_impl().is_some_and(|(a, b)| {
                    *a == p.line(minor).formula && *b == *f
                });
                if !ok {
                    return Verdict::invalid(
                        n,
                        format!("line {major} is not `(line {minor}) -> (line {n})`"),
                    );
                }
            }
            Rule::AppAxiom | Rule::SumAxiom | Rule::AppIntro(..) => {
                return Verdict::invalid(n, "rule not available in luk");
            }
        }
    }
    Verdict::valid(p.len())
}

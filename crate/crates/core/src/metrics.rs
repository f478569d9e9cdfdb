//! Step counts, rule usage and justification-term complexity of a proof.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::script::{Calculus, ProofScript, Rule, Verdict};
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("{calculus} proof is invalid: {verdict}")]
    Invalid { calculus: Calculus, verdict: Verdict },
    #[error("expected a {0} script")]
    WrongCalculus(Calculus),
    #[error("final formulas do not correspond: `{luk}` vs `{jl}`")]
    Mismatch { luk: Formula, jl: Formula },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub step_count: usize,
    pub rule_histogram: BTreeMap<String, usize>,
    pub axiom_histogram: BTreeMap<String, usize>,
    pub term_size: Option<usize>,
    pub term_depth: Option<usize>,
    pub variable_count: Option<usize>,
}

/// Measures a valid proof. Term fields are filled in for JL proofs whose
/// final line is `t:B`.
pub fn proof_metrics(p: &ProofScript) -> Result<Metrics, MetricsError> {
    let verdict = crate::check(p);
    if !verdict.is_valid() {
        return Err(MetricsError::Invalid {
            calculus: p.calculus(),
            verdict,
        });
    }
    let mut rule_histogram = BTreeMap::new();
    let mut axiom_histogram = BTreeMap::new();
    for line in p.lines() {
        *rule_histogram.entry(line.rule.kind().to_string()).or_insert(0) += 1;
        if let Rule::Axiom(ax) = line.rule {
            *axiom_histogram.entry(ax.keyword().to_string()).or_insert(0) += 1;
        }
    }
    let term = match p.calculus() {
        Calculus::Jl => p.conclusion().as_just().map(|(t, _)| t),
        Calculus::Luk => None,
    };
    Ok(Metrics {
        step_count: p.len(),
        rule_histogram,
        axiom_histogram,
        term_size: term.map(|t| t.size()),
        term_depth: term.map(|t| t.depth()),
        variable_count: term.map(|t| t.variables().len()),
    })
}

impl fmt::Display for Metrics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "steps: {}", self.step_count)?;
        writeln!(f, "rules: {}", histogram(&self.rule_histogram))?;
        writeln!(f, "axioms: {}", histogram(&self.axiom_histogram))?;
        if let (Some(size), Some(depth), Some(vars)) =
            (self.term_size, self.term_depth, self.variable_count)
        {
            writeln!(f, "term_size: {size}")?;
            writeln!(f, "term_depth: {depth}")?;
            writeln!(f, "variables: {vars}")?;
        }
        Ok(())
    }
}

fn histogram(h: &BTreeMap<String, usize>) -> String {
    if h.is_empty() {
        return "-".into();
    }
    h.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Side-by-side comparison of a Luk proof and a JL proof of the same formula.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub luk: Metrics,
    pub jl: Metrics,
    pub steps_preserved: bool,
    /// Final-term nodes per JL step.
    pub term_growth: Option<f64>,
}

/// Compares `luk` with `jl`. The JL proof must end in `t:B` (or in `B`
/// itself) where `B` is the last formula of `luk`.
pub fn contribution_report(luk: &ProofScript, jl: &ProofScript) -> Result<Report, MetricsError> {
    if luk.calculus() != Calculus::Luk {
        return Err(MetricsError::WrongCalculus(Calculus::Luk));
    }
    if jl.calculus() != Calculus::Jl {
        return Err(MetricsError::WrongCalculus(Calculus::Jl));
    }
    let lm = proof_metrics(luk)?;
    let jm = proof_metrics(jl)?;
    let body = jl.conclusion().as_just().map_or(jl.conclusion(), |(_, b)| b);
    if body != luk.conclusion() {
        return Err(MetricsError::Mismatch {
            luk: luk.conclusion().clone(),
            jl: jl.conclusion().clone(),
        });
    }
    let term_growth = jm.term_size.map(|s| s as f64 / jm.step_count as f64);
    Ok(Report {
        steps_preserved: lm.step_count == jm.step_count,
        term_growth,
        luk: lm,
        jl: jm,
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let preserved = if self.steps_preserved {
            "preserved"
        } else {
            "changed"
        };
        writeln!(
            f,
            "steps: {} vs {} ({preserved})",
            self.luk.step_count, self.jl.step_count
        )?;
        writeln!(f, "luk rules: {}", histogram(&self.luk.rule_histogram))?;
        writeln!(f, "jl rules: {}", histogram(&self.jl.rule_histogram))?;
        writeln!(f, "axioms: {}", histogram(&self.luk.axiom_histogram))?;
        if let (Some(size), Some(depth), Some(vars)) =
            (self.jl.term_size, self.jl.term_depth, self.jl.variable_count)
        {
            writeln!(f, "term_size: {size}")?;
            writeln!(f, "term_depth: {depth}")?;
            writeln!(f, "variables: {vars}")?;
        }
        if let Some(g) = self.term_growth {
            writeln!(f, "term_growth: {g:.3} nodes/step")?;
        }
        Ok(())
    }
}

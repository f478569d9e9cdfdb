//! `justify`: check, translate, prove and measure proof scripts.
//!
//! Exit status is 0 for a valid proof (or a tautology), 1 for an invalid one
//! (or a non-tautology), and 2 for anything that prevents a verdict: bad
//! usage, unreadable input, parse and structural errors, shape errors.

use std::io::{self, Read};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use justify_core::bridge::{self, BridgeError, PremiseBinding};
use justify_core::jl::expand_appintro;
use justify_core::luk::{falsifying_valuation, prove_tautology_with, ProveError, DEFAULT_MAX_ATOMS};
use justify_core::metrics::{contribution_report, proof_metrics, Metrics, MetricsError};
use justify_core::{check, parse_formula, Calculus, Formula, ProofScript, Status};

#[derive(Parser)]
#[command(name = "justify", version, about = "Proof kernel for Łukasiewicz and justified proofs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof script line by line.
    Check {
        /// Script file, or `-` for standard input.
        file: String,
        /// Emit a JSON verdict.
        #[arg(long)]
        json: bool,
    },
    /// Turn a Łukasiewicz proof into a justified one.
    Internalize {
        file: String,
        /// Premise bindings, e.g. `p=x,q->(p->r)=y`. Premises default to x1, x2, ...
        #[arg(long)]
        bind: Option<String>,
        /// Replace each application introduction by the application axiom
        /// and two modus ponens steps.
        #[arg(long)]
        expand_appintro: bool,
    },
    /// Recover a Łukasiewicz proof from a justified one.
    Externalize { file: String },
    /// Build a proof of a tautology.
    Prove {
        formula: String,
        /// Output the justified proof instead.
        #[arg(long)]
        justified: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ATOMS)]
        max_atoms: usize,
    },
    /// Measure a proof, or compare a Łukasiewicz proof with a justified one.
    Metrics {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a formula is a tautology.
    Taut { formula: String },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load(path: &str) -> Result<ProofScript> {
    let text = read_input(path)?;
    let name = if path == "-" { "<stdin>" } else { path };
    ProofScript::parse(&text).with_context(|| format!("parsing {name}"))
}

fn formula_arg(text: &str) -> Result<Formula> {
    parse_formula(text).with_context(|| format!("parsing formula `{text}`"))
}

fn parse_binding(spec: &str) -> Result<PremiseBinding> {
    let mut b = PremiseBinding::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (premise, var) = item
            .rsplit_once('=')
            .ok_or_else(|| anyhow!("binding `{item}` is not of the form FORMULA=VAR"))?;
        b = b.bind(formula_arg(premise.trim())?, var.trim())?;
    }
    Ok(b)
}

#[derive(Serialize)]
struct CheckReport<'a> {
    status: Status,
    failing_line: Option<usize>,
    reason: &'a str,
    metrics: Option<Metrics>,
}

fn cmd_check(file: &str, json: bool) -> Result<u8> {
    let p = load(file)?;
    let v = check(&p);
    if json {
        let metrics = v.is_valid().then(|| proof_metrics(&p)).transpose()?;
        let report = CheckReport {
            status: v.status,
            failing_line: v.failing_line,
            reason: &v.reason,
            metrics,
        };
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        for n in 1..=v.checked_lines {
            println!("{n}. ok");
        }
        if let Some(n) = v.failing_line {
            println!("{n}. FAIL {}", v.reason);
        }
        println!("{v}");
    }
    Ok(if v.is_valid() { 0 } else { 1 })
}

/// Invalid input proofs are verdicts (exit 1); every other bridge error is a
/// usage or shape error (exit 2).
fn bridged(r: Result<ProofScript, BridgeError>) -> Result<std::result::Result<ProofScript, u8>> {
    match r {
        Ok(p) => Ok(Ok(p)),
        Err(BridgeError::Invalid(v)) => {
            eprintln!("input proof is {v}");
            Ok(Err(1))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_internalize(file: &str, bind: Option<&str>, expand: bool) -> Result<u8> {
    let p = load(file)?;
    if p.calculus() != Calculus::Luk {
        bail!("internalize expects a luk script");
    }
    let binding = match bind {
        Some(spec) => parse_binding(spec)?,
        None => PremiseBinding::auto(p.premises()),
    };
    let jl = match bridged(bridge::lift(&p, &binding))? {
        Ok(jl) => jl,
        Err(code) => return Ok(code),
    };
    let out = if expand { expand_appintro(&jl)? } else { jl };
    print!("{out}");
    Ok(0)
}

fn cmd_externalize(file: &str) -> Result<u8> {
    let p = load(file)?;
    match bridged(bridge::externalize(&p))? {
        Ok(luk) => {
            print!("{luk}");
            Ok(0)
        }
        Err(code) => Ok(code),
    }
}

fn cmd_prove(formula: &str, justified: bool, max_atoms: usize) -> Result<u8> {
    let f = formula_arg(formula)?;
    let p = match prove_tautology_with(&f, max_atoms) {
        Ok(p) => p,
        Err(ProveError::NotATautology(v)) => {
            println!("not a tautology: false under {v}");
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let out = if justified { bridge::internalize(&p)? } else { p };
    print!("{out}");
    Ok(0)
}

fn cmd_metrics(files: &[String], json: bool) -> Result<u8> {
    let scripts = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
    let verdict_exit = |e: MetricsError| -> Result<u8> {
        match e {
            MetricsError::Invalid { calculus, verdict } => {
                eprintln!("{calculus} proof is {verdict}");
                Ok(1)
            }
            other => Err(other.into()),
        }
    };
    match scripts.as_slice() {
        [p] => match proof_metrics(p) {
            Ok(m) if json => println!("{}", serde_json::to_string_pretty(&m)?),
            Ok(m) => print!("{m}"),
            Err(e) => return verdict_exit(e),
        },
        [a, b] => {
            let (luk, jl) = if a.calculus() == Calculus::Jl { (b, a) } else { (a, b) };
            match contribution_report(luk, jl) {
                Ok(r) if json => println!("{}", serde_json::to_string_pretty(&r)?),
                Ok(r) => print!("{r}"),
                Err(e) => return verdict_exit(e),
            }
        }
        _ => unreachable!("clap enforces one or two files"),
    }
    Ok(0)
}

fn cmd_taut(formula: &str) -> Result<u8> {
    let f = formula_arg(formula)?;
    match falsifying_valuation(&f)? {
        None => {
            println!("tautology");
            Ok(0)
        }
        Some(v) => {
            println!("not a tautology: false under {v}");
            Ok(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { file, json } => cmd_check(&file, json),
        Command::Internalize {
            file,
            bind,
            expand_appintro,
        } => cmd_internalize(&file, bind.as_deref(), expand_appintro),
        Command::Externalize { file } => cmd_externalize(&file),
        Command::Prove {
            formula,
            justified,
            max_atoms,
        } => cmd_prove(&formula, justified, max_atoms),
        Command::Metrics { files, json } => cmd_metrics(&files, json),
        Command::Taut { formula } => cmd_taut(&formula),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

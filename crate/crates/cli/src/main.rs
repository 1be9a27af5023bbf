//! `syllogic`: prove, enumerate, draw nets and re-derive the catalogs.
//!
//! Exit codes: 0 established, 1 not provable or mismatch, 2 usage or parse
//! error.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use syllogic::nets::{build_net, planarity, translate_proof, translate_sequent};
use syllogic::rll::{check_rll_proof, prove_rll, RllProof, RllProofDoc, RllSequent};
use syllogic::syll::{
    check_proof, prove, reject_precheck, AxiomBudget, SyllProof, SyllProofDoc, SyllSequent,
    SystemLevel,
};
use syllogic::syllogistics::{compare_with_table, regenerate, Kind, Section, Syllogism};

#[derive(Parser)]
#[command(
    name = "syllogic",
    version,
    about = "Diagrammatic and linear-logic syllogistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a proof of a diagram sequent, syllogism or formula sequent.
    Prove {
        #[arg(long)]
        system: String,
        #[arg(long, value_enum, default_value_t = ProofFormat::Text)]
        format: ProofFormat,
        /// Axiom leaves allowed per variable in diagram search.
        #[arg(long)]
        budget: Option<usize>,
        sequent: String,
    },
    /// Classify every candidate syllogism of a kind in both calculi.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        strengthened: bool,
        #[arg(long)]
        report: Option<String>,
    },
    /// Translate a formula sequent, prove it and emit its proof net.
    Net {
        sequent: String,
        #[arg(long)]
        check_planar: bool,
        #[arg(long, value_enum, default_value_t = NetFormat::Dot)]
        format: NetFormat,
    },
    /// Re-derive the validity tables and law catalogs.
    Tables {
        #[arg(long)]
        only: Option<String>,
    },
    /// Replay a JSON proof document produced by `prove --format json`.
    Check {
        /// Path to the document; standard input when omitted or `-`.
        file: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProofFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum NetFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Traditional,
    Demorgan,
}

/// A failure that ends the command with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Prove {
            system,
            format,
            budget,
            sequent,
        } => cmd_prove(&system, &sequent, format, budget),
        Command::Enumerate {
            kind,
            strengthened,
            report,
        } => cmd_enumerate(kind, strengthened, report.as_deref()),
        Command::Net {
            sequent,
            check_planar,
            format,
        } => cmd_net(&sequent, check_planar, format),
        Command::Tables { only } => cmd_tables(only.as_deref()),
        Command::Check { file } => cmd_check(file.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// A syllogism if the text has parentheses, otherwise a diagram sequent.
fn parse_syll_input(text: &str) -> Result<SyllSequent, UsageError> {
    if text.contains('(') {
        Ok(text.parse::<Syllogism>()?.syll_sequent())
    } else {
        Ok(text.parse()?)
    }
}

fn cmd_prove(system: &str, text: &str, format: ProofFormat, budget: Option<usize>) -> Outcome {
    let mut out = io::stdout().lock();
    if system.eq_ignore_ascii_case("rll") {
        let seq: RllSequent = text.parse()?;
        let proof = prove_rll(&seq);
        match format {
            ProofFormat::Text => match &proof {
                Some(p) => write!(out, "{}", render_rll(p, 0))?,
                None => writeln!(out, "unprovable")?,
            },
            ProofFormat::Json => {
                let doc = json!({
                    "system": "rll",
                    "sequent": seq.to_string(),
                    "provable": proof.is_some(),
                    "proof": proof.as_ref().map(RllProof::to_doc),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            }
        }
        return Ok(proof.is_some());
    }
    let sys: SystemLevel = system.parse()?;
    let seq = parse_syll_input(text)?;
    if !seq.is_well_formed(&sys) {
        return Err(UsageError(format!("`{seq}` is not well formed in {sys}")));
    }
    let budget = budget.map_or_else(AxiomBudget::default, AxiomBudget::uniform);
    let proof = prove(&seq, &sys, budget);
    match format {
        ProofFormat::Text => match &proof {
            Some(p) => write!(out, "{p}")?,
            None => match reject_precheck(&seq, &sys, budget) {
                Some(why) => writeln!(out, "unprovable ({why})")?,
                None => writeln!(out, "unprovable")?,
            },
        },
        ProofFormat::Json => {
            let doc = json!({
                "system": system.to_ascii_lowercase(),
                "sequent": seq.to_string(),
                "provable": proof.is_some(),
                "proof": proof.as_ref().map(SyllProof::to_doc),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(proof.is_some())
}

fn render_rll(p: &RllProof, depth: usize) -> String {
    let mut s = format!(
        "{:indent$}{}    [{}]\n",
        "",
        p.sequent,
        p.rule.encode(),
        indent = depth * 2
    );
    for c in &p.children {
        s.push_str(&render_rll(c, depth + 1));
    }
    s
}

fn cmd_enumerate(kind: KindArg, strengthened: bool, report: Option<&str>) -> Outcome {
    let kind = match kind {
        KindArg::Traditional => Kind::Traditional,
        KindArg::Demorgan => Kind::DeMorgan,
    };
    let cmp = compare_with_table(kind, strengthened);
    let mut lines = Vec::with_capacity(cmp.records.len() + 16);
    for r in &cmp.records {
        lines.push(r.to_string());
    }
    lines.push(String::new());
    lines.push("# findings".to_string());
    lines.push(format!("candidates\t{}", cmp.records.len()));
    let both = cmp
        .records
        .iter()
        .filter(|r| r.verdict.syll_provable && r.verdict.rll_provable)
        .count();
    lines.push(format!("provable in both\t{both}"));
    lines.push(format!("provable in asserted scope\t{}", cmp.found.len()));
    lines.push(format!("table entries\t{}", cmp.expected.len()));
    for s in cmp.missing() {
        lines.push(format!("missing\t{s}"));
    }
    for s in cmp.extra() {
        lines.push(format!("extra\t{s}"));
    }
    for s in &cmp.disagreements {
        lines.push(format!("disagreement\t{s}"));
    }
    let text = lines.join("\n") + "\n";
    match report {
        Some(path) => fs::write(path, &text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    eprintln!(
        "{} {}: {} candidates, {} provable in scope, {} expected, {} disagreements",
        kind.name(),
        if strengthened {
            "strengthened"
        } else {
            "plain"
        },
        cmp.records.len(),
        cmp.found.len(),
        cmp.expected.len(),
        cmp.disagreements.len()
    );
    Ok(cmp.table_matches() && cmp.calculi_agree())
}

fn cmd_net(text: &str, check_planar: bool, format: NetFormat) -> Outcome {
    let seq: RllSequent = text.parse()?;
    let Some(proof) = prove_rll(&seq) else {
        println!("unprovable");
        return Ok(false);
    };
    let cmll = translate_proof(&proof)?;
    let net = build_net(&cmll)?;
    debug_assert_eq!(net.conclusions, translate_sequent(&seq));
    let pl = planarity(&net);
    match format {
        NetFormat::Dot => print!("{}", net.to_dot()),
        NetFormat::Json => println!("{}", serde_json::to_string_pretty(&net.to_doc())?),
    }
    if !check_planar {
        return Ok(true);
    }
    if pl.planar {
        eprintln!("planar");
    } else {
        eprintln!("not planar: {} crossing(s)", pl.crossings.len());
    }
    Ok(pl.planar)
}

fn cmd_tables(only: Option<&str>) -> Outcome {
    let only = only.map(str::parse::<Section>).transpose()?;
    let lines = regenerate(only);
    let mut out = io::stdout().lock();
    for l in &lines {
        writeln!(out, "{l}")?;
    }
    Ok(lines.iter().all(|l| l.proved))
}

fn cmd_check(file: Option<&str>) -> Outcome {
    let text = match file {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(path) => fs::read_to_string(path)?,
    };
    let doc: Value = serde_json::from_str(&text)?;
    let field = |k: &str| {
        doc.get(k)
            .and_then(Value::as_str)
            .ok_or_else(|| UsageError(format!("missing string field `{k}`")))
    };
    let system = field("system")?;
    let sequent = field("sequent")?;
    let proof = doc.get("proof").cloned().unwrap_or(Value::Null);
    if proof.is_null() {
        println!("no proof");
        return Ok(false);
    }
    let valid = if system.eq_ignore_ascii_case("rll") {
        let seq: RllSequent = sequent.parse()?;
        let p = RllProof::from_doc(&serde_json::from_value::<RllProofDoc>(proof)?)?;
        p.sequent == seq && check_rll_proof(&p)
    } else {
        let sys: SystemLevel = system.parse()?;
        let seq: SyllSequent = sequent.parse()?;
        let p = SyllProof::from_doc(&serde_json::from_value::<SyllProofDoc>(proof)?)?;
        check_proof(&p, &seq, &sys)
    };
    println!("{}", if valid { "valid" } else { "invalid" });
    Ok(valid)
}

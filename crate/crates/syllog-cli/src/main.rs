//! `syllog`: check syllogisms against finite counting models, replay and
//! mine derivations, audit the licence table, and validate discourse chains.
//!
//! Exit codes: 0 on success/valid, 1 when a countermodel is found, a replay
//! step is rejected, or an expectation fails, 2 on usage or parse errors.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use syllog::ast::{ConditionalWff, Figure, Letter, Mnemonic};
use syllog::corpus;
use syllog::discourse::{check_discourse, DiscourseStatus};
use syllog::kernel::{self, axiom_ami1, mine, replay};
use syllog::semantics::{
    audit_facts, census, check_validity, SearchBounds, Verdict, VerdictStatus,
};
use syllog::text::{self, expand_mnemonic, name_of, parse_mnemonic, print_wff};

use output::{print_json, render_bounds, render_model, status_word, CheckReport};

#[derive(Parser)]
#[command(
    name = "syllog",
    version,
    about = "Reasoning engine for classical, generalized, and modal syllogisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest domain size searched
    #[arg(long, global = true, default_value_t = 4)]
    max_domain: u32,

    /// Largest number of possible worlds searched
    #[arg(long, global = true, default_value_t = 2)]
    max_worlds: u32,

    /// Constrain all worlds to share one extension assignment
    #[arg(long, global = true)]
    rigid: bool,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel search (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a formula or mnemonic by exhaustive countermodel search
    Check {
        /// A wff like "all(n,w) & most(p,n) -> some(p,w)" or a mnemonic like AMI-1
        formula: String,
    },
    /// Print the schema a mnemonic names
    Expand { mnemonic: String },
    /// Replay a derivation script against the kernel
    Replay { file: PathBuf },
    /// Replay the shipped corpus and verify the registry expectations
    VerifyCorpus,
    /// Breadth-first closure of AMI-1 under the rules and licences
    Mine {
        /// How many rule applications deep to search
        #[arg(long)]
        depth: u32,
        /// Drop licences that fail the semantic audit
        #[arg(long)]
        strict: bool,
        /// Abort if the closure stores more than this many formulas
        #[arg(long, default_value_t = kernel::DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Classify every syllogism form over the requested letters and figures
    Census {
        /// Proposition letters to enumerate, e.g. AEIO, or "all"
        #[arg(long, default_value = "all")]
        letters: String,
        /// Figures to enumerate, e.g. 1,3
        #[arg(long, default_value = "1,2,3,4")]
        figures: String,
        /// Also enumerate []/<> decorations on all three propositions
        #[arg(long)]
        modal: bool,
        /// Emit mnemonic,status rows as CSV
        #[arg(long)]
        csv: bool,
    },
    /// Check every licence of the fact table model-theoretically
    AuditFacts,
    /// Check a nested syllogism chain
    Discourse { file: PathBuf },
}

fn corpus_dir() -> Option<PathBuf> {
    std::env::var_os("SYL_CORPUS_DIR").map(PathBuf::from)
}

fn parse_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

/// A formula argument is a mnemonic when it parses as one; otherwise it must
/// parse as a wff.
fn resolve_formula(input: &str) -> Result<(ConditionalWff, Option<Mnemonic>), text::SourceError> {
    if let Ok(m) = parse_mnemonic(input) {
        return Ok((expand_mnemonic(&m), Some(m)));
    }
    let parsed = text::parse_wff(input)?;
    match parsed {
        text::ParsedFormula::Conditional(w) => {
            let name = name_of(&w);
            Ok((w, name))
        }
        text::ParsedFormula::Proposition(_) => Err(text::SourceError {
            line: 1,
            column: 1,
            message: "expected a conditional (premises -> conclusion) or a mnemonic".into(),
        }),
    }
}

fn run_check(input: &str, bounds: &SearchBounds, json: bool) -> ExitCode {
    let (wff, name) = match resolve_formula(input) {
        Ok(r) => r,
        Err(e) => return parse_error(e),
    };
    let started = Instant::now();
    let verdict: Verdict = match check_validity(&wff, bounds) {
        Ok(v) => v,
        Err(e) => return parse_error(e),
    };
    let elapsed = started.elapsed().as_millis();
    let status = verdict.status;
    let report = CheckReport::new(input, print_wff(&wff), name, verdict, elapsed);
    if json {
        print_json(&report);
    } else {
        if let Some(m) = report.name {
            println!("formula: {}  ({m})", report.formula);
        } else {
            println!("formula: {}", report.formula);
        }
        println!("status: {}", status_word(status));
        println!("bounds: {}", render_bounds(&report.bounds));
        if let Some(cm) = &report.countermodel {
            print!("{}", render_model(cm));
        }
        println!("elapsed: {elapsed} ms");
    }
    match status {
        VerdictStatus::ValidUpToBound => ExitCode::SUCCESS,
        VerdictStatus::Invalid => ExitCode::from(1),
    }
}

#[derive(Serialize)]
struct ExpandReport {
    command: &'static str,
    mnemonic: Mnemonic,
    wff: String,
    figure: u8,
}

fn run_expand(input: &str, json: bool) -> ExitCode {
    let m = match parse_mnemonic(input) {
        Ok(m) => m,
        Err(e) => return parse_error(e),
    };
    let wff = expand_mnemonic(&m);
    let report = ExpandReport {
        command: "expand",
        mnemonic: m,
        wff: print_wff(&wff),
        figure: m.figure.digit(),
    };
    if json {
        print_json(&report);
    } else {
        println!("{}", report.wff);
    }
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct ReplayCliReport {
    command: &'static str,
    file: String,
    steps_accepted: usize,
    minted: Vec<Mnemonic>,
    elapsed_ms: u128,
}

fn run_replay(file: &PathBuf, json: bool) -> ExitCode {
    let source = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => return parse_error(format!("{}: {e}", file.display())),
    };
    let script = match text::parse_proof_script(&source) {
        Ok(s) => s,
        Err(e) => return parse_error(format!("{}: {e}", file.display())),
    };
    let started = Instant::now();
    match replay(&script) {
        Ok(report) => {
            let out = ReplayCliReport {
                command: "replay",
                file: file.display().to_string(),
                steps_accepted: report.steps_accepted,
                minted: report.minted,
                elapsed_ms: started.elapsed().as_millis(),
            };
            if json {
                print_json(&out);
            } else {
                println!("accepted {} steps", out.steps_accepted);
                let names: Vec<String> = out.minted.iter().map(Mnemonic::to_string).collect();
                println!("minted {} names: {}", names.len(), names.join(" "));
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("replay failed: {failure}");
            ExitCode::from(1)
        }
    }
}

fn run_verify_corpus(bounds: &SearchBounds, json: bool) -> ExitCode {
    let started = Instant::now();
    let report = corpus::verify_corpus(bounds, corpus_dir().as_deref());
    let elapsed = started.elapsed().as_millis();
    if json {
        print_json(&report);
    } else {
        for s in &report.scripts {
            println!(
                "{}: {} steps accepted, {} names minted",
                s.name,
                s.steps_accepted,
                s.minted.len()
            );
        }
        println!(
            "total: {} steps, {} registry entries checked at {}",
            report.total_steps,
            report.registry_entries,
            render_bounds(&report.bounds)
        );
        for p in &report.problems {
            println!("mismatch: {p}");
        }
        println!(
            "verify-corpus: {} ({elapsed} ms)",
            if report.ok() { "ok" } else { "FAILED" }
        );
    }
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[derive(Serialize)]
struct MinedName {
    name: Mnemonic,
    depth: u32,
    wff: String,
}

#[derive(Serialize)]
struct MineReport {
    command: &'static str,
    depth: u32,
    strict: bool,
    formulas: usize,
    names: Vec<MinedName>,
    /// Registry names not reachable at this depth and mode.
    missing_registry_names: Vec<Mnemonic>,
    elapsed_ms: u128,
}

fn run_mine(depth: u32, strict: bool, node_cap: usize, json: bool) -> ExitCode {
    let started = Instant::now();
    let mined = match mine(&[axiom_ami1()], depth, strict, node_cap) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("mine failed: {e}");
            return ExitCode::from(1);
        }
    };
    let mut names: Vec<MinedName> = mined
        .iter()
        .filter_map(|e| {
            name_of(&e.wff).map(|name| MinedName {
                name,
                depth: e.depth,
                wff: print_wff(&e.wff),
            })
        })
        .collect();
    names.sort_by_key(|n| (n.depth, n.name.to_string()));
    names.dedup_by_key(|n| n.name);
    let reached: std::collections::BTreeSet<Mnemonic> = names.iter().map(|n| n.name).collect();
    let missing_registry_names: Vec<Mnemonic> = corpus::registry(corpus_dir().as_deref())
        .into_iter()
        .filter(|e| e.theorem_sourced() || e.source == "A2")
        .map(|e| e.mnemonic)
        .filter(|m| !reached.contains(m))
        .collect();
    let report = MineReport {
        command: "mine",
        depth,
        strict,
        formulas: mined.len(),
        names,
        missing_registry_names,
        elapsed_ms: started.elapsed().as_millis(),
    };
    if json {
        print_json(&report);
    } else {
        println!(
            "mined {} formulas ({} named) at depth {} ({}, {} ms)",
            report.formulas,
            report.names.len(),
            depth,
            if strict { "strict" } else { "all licences" },
            report.elapsed_ms
        );
        for n in &report.names {
            println!("  depth {}: {}  {}", n.depth, n.name, n.wff);
        }
        if report.missing_registry_names.is_empty() {
            println!("contains every registry name");
        } else {
            let missing: Vec<String> = report
                .missing_registry_names
                .iter()
                .map(Mnemonic::to_string)
                .collect();
            println!("registry names not reached: {}", missing.join(" "));
        }
    }
    ExitCode::SUCCESS
}

fn parse_letters(input: &str) -> Result<Vec<Letter>, String> {
    if input.eq_ignore_ascii_case("all") {
        return Ok(Letter::ALL8.to_vec());
    }
    input
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| Letter::from_char(c).ok_or_else(|| format!("unknown letter `{c}`")))
        .collect()
}

fn parse_figures(input: &str) -> Result<Vec<Figure>, String> {
    if input.eq_ignore_ascii_case("all") {
        return Ok(Figure::ALL4.to_vec());
    }
    input
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u8>()
                .ok()
                .and_then(Figure::from_digit)
                .ok_or_else(|| format!("unknown figure `{s}`"))
        })
        .collect()
}

fn run_census(
    letters: &str,
    figures: &str,
    modal: bool,
    csv: bool,
    bounds: &SearchBounds,
    json: bool,
) -> ExitCode {
    let letters = match parse_letters(letters) {
        Ok(l) => l,
        Err(e) => return parse_error(e),
    };
    let figures = match parse_figures(figures) {
        Ok(f) => f,
        Err(e) => return parse_error(e),
    };
    let started = Instant::now();
    let table = census(&letters, &figures, modal, bounds);
    let elapsed = started.elapsed().as_millis();
    if csv {
        println!("mnemonic,status");
        for row in &table.rows {
            println!("{},{}", row.mnemonic, status_word(row.status));
        }
    } else if json {
        print_json(&table);
    } else {
        println!(
            "census: {} forms, {} valid at {} ({elapsed} ms)",
            table.rows.len(),
            table.valid,
            render_bounds(&table.bounds)
        );
        for row in &table.rows {
            if row.status == VerdictStatus::ValidUpToBound {
                println!("  {}", row.mnemonic);
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_audit_facts(bounds: &SearchBounds, json: bool) -> ExitCode {
    let audit = audit_facts(bounds);
    if json {
        print_json(&audit);
    } else {
        println!(
            "audited {} licences at {}: {} pass",
            audit.results.len(),
            render_bounds(&audit.bounds),
            audit.passed_count()
        );
        for r in &audit.results {
            if !r.passed {
                println!("fail [{}]:", r.id);
                for f in &r.failures {
                    let at = f
                        .quantifier
                        .map(|q| format!(" at Q={q}"))
                        .unwrap_or_default();
                    println!("  direction {}{}:", f.direction, at);
                    print!("{}", render_model(&f.countermodel));
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_discourse(file: &PathBuf, bounds: &SearchBounds, json: bool) -> ExitCode {
    let source = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => return parse_error(format!("{}: {e}", file.display())),
    };
    let d = match text::parse_discourse(&source) {
        Ok(d) => d,
        Err(e) => return parse_error(format!("{}: {e}", file.display())),
    };
    let verdict = match check_discourse(&d, bounds) {
        Ok(v) => v,
        Err(e) => return parse_error(e),
    };
    if json {
        print_json(&verdict);
    } else {
        for link in &verdict.links {
            let name = link
                .name
                .map(|m| format!("{m}"))
                .unwrap_or_else(|| "(unnamed)".into());
            println!(
                "link {}: {name}  chained={}  {}",
                link.index + 1,
                if link.structural_ok { "yes" } else { "NO" },
                status_word(link.verdict.status)
            );
            if let Some(cm) = &link.verdict.countermodel {
                print!("{}", render_model(cm));
            }
        }
        println!(
            "discourse: {}",
            match verdict.overall {
                DiscourseStatus::Valid => "valid",
                DiscourseStatus::Invalid => "invalid",
            }
        );
    }
    match verdict.overall {
        DiscourseStatus::Valid => ExitCode::SUCCESS,
        DiscourseStatus::Invalid => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return parse_error(format!("cannot configure {n} threads: {e}"));
        }
    }
    let bounds = SearchBounds::new(cli.max_domain.max(1), cli.max_worlds.max(1), cli.rigid);
    match &cli.command {
        Command::Check { formula } => run_check(formula, &bounds, cli.json),
        Command::Expand { mnemonic } => run_expand(mnemonic, cli.json),
        Command::Replay { file } => run_replay(file, cli.json),
        Command::VerifyCorpus => run_verify_corpus(&bounds, cli.json),
        Command::Mine { depth, strict, node_cap } => {
            run_mine(*depth, *strict, *node_cap, cli.json)
        }
        Command::Census { letters, figures, modal, csv } => {
            run_census(letters, figures, *modal, *csv, &bounds, cli.json)
        }
        Command::AuditFacts => run_audit_facts(&bounds, cli.json),
        Command::Discourse { file } => run_discourse(file, &bounds, cli.json),
    }
}

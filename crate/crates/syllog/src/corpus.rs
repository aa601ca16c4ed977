//! Shipped corpus: the four derivation scripts, the registry of named
//! syllogisms with semantic expectations, the nested-discourse example, and
//! the errata table documenting every correction applied to the source
//! derivations.
//!
//! The files live under `corpus/` in the repository and are embedded here,
//! so the binary is self-contained; loaders accept an override directory.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::ast::{ConditionalWff, Mnemonic};
use crate::kernel::{replay, DerivationScript};
use crate::semantics::{check_validity, SearchBounds, VerdictStatus};
use crate::text::{
    expand_mnemonic, name_of, parse_discourse, parse_mnemonic, parse_proof_script, parse_wff,
    print_wff, ScriptError, SourceError,
};

pub const SCRIPT_NAMES: [&str; 4] = [
    "thm4_2.proof",
    "thm4_3.proof",
    "thm4_4.proof",
    "thm4_5.proof",
];

/// Named syllogisms each script is expected to mint.
pub const EXPECTED_MINTS: [usize; 4] = [19, 22, 8, 24];

/// Steps across all four scripts.
pub const EXPECTED_TOTAL_STEPS: usize = 90;

pub const DISCOURSE_NAME: &str = "sect5.disc";

fn embedded(name: &str) -> &'static str {
    match name {
        "thm4_2.proof" => include_str!("../../../corpus/thm4_2.proof"),
        "thm4_3.proof" => include_str!("../../../corpus/thm4_3.proof"),
        "thm4_4.proof" => include_str!("../../../corpus/thm4_4.proof"),
        "thm4_5.proof" => include_str!("../../../corpus/thm4_5.proof"),
        "sect5.disc" => include_str!("../../../corpus/sect5.disc"),
        "registry.tsv" => include_str!("../../../corpus/registry.tsv"),
        "errata.tsv" => include_str!("../../../corpus/errata.tsv"),
        _ => panic!("no embedded corpus file named {name}"),
    }
}

/// Raw text of a corpus file, from `dir` when given, else the embedded copy.
pub fn file_text(name: &str, dir: Option<&Path>) -> std::io::Result<String> {
    match dir {
        Some(d) => std::fs::read_to_string(d.join(name)),
        None => Ok(embedded(name).to_string()),
    }
}

/// The four derivation scripts, parsed.
pub fn scripts(dir: Option<&Path>) -> Result<Vec<(String, DerivationScript)>, ScriptError> {
    SCRIPT_NAMES
        .iter()
        .map(|name| {
            let text = file_text(name, dir).map_err(|e| {
                ScriptError::Source(SourceError {
                    line: 1,
                    column: 1,
                    message: format!("cannot read {name}: {e}"),
                })
            })?;
            Ok((name.to_string(), parse_proof_script(&text)?))
        })
        .collect()
}

/// The nested-discourse example.
pub fn discourse(dir: Option<&Path>) -> Result<crate::discourse::Discourse, SourceError> {
    let text = file_text(DISCOURSE_NAME, dir).map_err(|e| SourceError {
        line: 1,
        column: 1,
        message: format!("cannot read {DISCOURSE_NAME}: {e}"),
    })?;
    parse_discourse(&text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Valid,
    Invalid,
    /// Invalid with world-varying extensions, valid under rigid extensions.
    ModeDependent,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::Valid => "valid",
            Expectation::Invalid => "invalid",
            Expectation::ModeDependent => "mode_dependent",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegistryEntry {
    pub mnemonic: Mnemonic,
    pub wff: ConditionalWff,
    /// Where the entry comes from: `A2`, a theorem step like `4.2[7]`, or `S5`.
    pub source: String,
    pub expectation: Expectation,
}

impl RegistryEntry {
    pub fn theorem_sourced(&self) -> bool {
        self.source.starts_with("4.")
    }
}

/// Parses the registry table. Panics on a malformed file: the registry is
/// build data, and `verify_corpus` plus the test suite guard its contents.
pub fn registry(dir: Option<&Path>) -> Vec<RegistryEntry> {
    let text = file_text("registry.tsv", dir).expect("registry file readable");
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        assert!(
            fields.len() == 4,
            "registry.tsv line {}: expected 4 tab-separated fields",
            idx + 1
        );
        let mnemonic = parse_mnemonic(fields[0])
            .unwrap_or_else(|e| panic!("registry.tsv line {}: {e}", idx + 1));
        let wff = parse_wff(fields[1])
            .unwrap_or_else(|e| panic!("registry.tsv line {}: {e}", idx + 1))
            .into_conditional()
            .unwrap_or_else(|| panic!("registry.tsv line {}: not a conditional", idx + 1));
        let expectation = match fields[3] {
            "valid" => Expectation::Valid,
            "invalid" => Expectation::Invalid,
            "mode_dependent" => Expectation::ModeDependent,
            other => panic!("registry.tsv line {}: unknown expectation `{other}`", idx + 1),
        };
        entries.push(RegistryEntry {
            mnemonic,
            wff,
            source: fields[2].to_string(),
            expectation,
        });
    }
    entries
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrataEntry {
    pub location: String,
    pub printed: String,
    pub corrected: String,
    pub note: String,
}

/// The corrections applied to the source derivations, one row each.
pub fn errata(dir: Option<&Path>) -> Vec<ErrataEntry> {
    let text = file_text("errata.tsv", dir).expect("errata file readable");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let f: Vec<&str> = line.split('\t').collect();
            assert!(f.len() == 4, "errata.tsv: expected 4 tab-separated fields");
            ErrataEntry {
                location: f[0].into(),
                printed: f[1].into(),
                corrected: f[2].into(),
                note: f[3].into(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ScriptOutcome {
    pub name: String,
    pub steps_accepted: usize,
    pub minted: Vec<Mnemonic>,
}

/// Everything `verify-corpus` checks, with each mismatch spelled out.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub scripts: Vec<ScriptOutcome>,
    pub total_steps: usize,
    pub registry_entries: usize,
    pub problems: Vec<String>,
    pub bounds: SearchBounds,
}

impl CorpusReport {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Replays all four scripts, cross-checks the minted names against the
/// registry, and verifies every registry entry's round-trips and semantic
/// expectation at the given bounds.
pub fn verify_corpus(b: &SearchBounds, dir: Option<&Path>) -> CorpusReport {
    let mut problems = Vec::new();
    let mut outcomes = Vec::new();
    let mut minted_union: BTreeSet<Mnemonic> = BTreeSet::new();
    let mut total_steps = 0;

    match scripts(dir) {
        Ok(parsed) => {
            for ((name, script), expected_mints) in parsed.into_iter().zip(EXPECTED_MINTS) {
                match replay(&script) {
                    Ok(report) => {
                        let distinct: BTreeSet<Mnemonic> = report.minted.iter().copied().collect();
                        if distinct.len() != report.minted.len() {
                            problems.push(format!("{name}: a name is minted twice"));
                        }
                        if distinct.len() != expected_mints {
                            problems.push(format!(
                                "{name}: minted {} names, expected {expected_mints}",
                                distinct.len()
                            ));
                        }
                        for m in &distinct {
                            if !minted_union.insert(*m) {
                                problems.push(format!("{name}: {m} already minted by an earlier script"));
                            }
                        }
                        total_steps += report.steps_accepted;
                        outcomes.push(ScriptOutcome {
                            name,
                            steps_accepted: report.steps_accepted,
                            minted: report.minted,
                        });
                    }
                    Err(failure) => problems.push(format!("{name}: {failure}")),
                }
            }
            if total_steps != EXPECTED_TOTAL_STEPS {
                problems.push(format!(
                    "scripts replay {total_steps} steps in total, expected {EXPECTED_TOTAL_STEPS}"
                ));
            }
        }
        Err(e) => problems.push(format!("cannot parse corpus scripts: {e}")),
    }

    let entries = registry(dir);

    // counts per source group
    let mut per_source: BTreeMap<&str, usize> = BTreeMap::new();
    for e in &entries {
        let group = if e.source == "A2" {
            "A2"
        } else if e.source == "S5" {
            "S5"
        } else {
            &e.source[..3]
        };
        *per_source.entry(group).or_default() += 1;
    }
    for (group, expected) in [("A2", 1), ("4.2", 19), ("4.3", 22), ("4.4", 8), ("4.5", 24), ("S5", 4)] {
        let got = per_source.get(group).copied().unwrap_or(0);
        if got != expected {
            problems.push(format!("registry has {got} {group} entries, expected {expected}"));
        }
    }

    // global distinctness of mnemonics
    let all_names: BTreeSet<Mnemonic> = entries.iter().map(|e| e.mnemonic).collect();
    if all_names.len() != entries.len() {
        problems.push("registry mnemonics are not globally distinct".into());
    }

    // minted names must equal the theorem-sourced registry names exactly
    let theorem_names: BTreeSet<Mnemonic> = entries
        .iter()
        .filter(|e| e.theorem_sourced())
        .map(|e| e.mnemonic)
        .collect();
    for m in minted_union.difference(&theorem_names) {
        problems.push(format!("scripts mint {m}, which the registry does not source to a theorem"));
    }
    for m in theorem_names.difference(&minted_union) {
        problems.push(format!("registry entry {m} is not minted by any script"));
    }

    // per-entry checks, parallel: round-trips and semantic expectation
    let entry_problems: Vec<String> = entries
        .par_iter()
        .flat_map_iter(|e| {
            let mut out = Vec::new();
            let expanded = expand_mnemonic(&e.mnemonic).canonicalize();
            if expanded != e.wff.canonicalize() {
                out.push(format!("{}: recorded wff differs from the expansion of {}", e.source, e.mnemonic));
            }
            match parse_wff(&print_wff(&e.wff)) {
                Ok(p) => {
                    if p.into_conditional().as_ref() != Some(&e.wff.canonicalize()) {
                        out.push(format!("{}: print/parse round-trip changed the wff", e.mnemonic));
                    }
                }
                Err(err) => out.push(format!("{}: printed wff fails to parse: {err}", e.mnemonic)),
            }
            if name_of(&e.wff) != Some(e.mnemonic) {
                out.push(format!("{}: wff does not name back to its mnemonic", e.mnemonic));
            }
            let semantic_problem = |status: VerdictStatus, wanted: &str| {
                format!("{}: expected {wanted}, search says {status:?}", e.mnemonic)
            };
            match e.expectation {
                Expectation::Valid => {
                    let v = check_validity(&e.wff, b).expect("registry wffs stay under the atom cap");
                    if v.status != VerdictStatus::ValidUpToBound {
                        out.push(semantic_problem(v.status, "valid_up_to_bound"));
                    }
                }
                Expectation::Invalid => {
                    let v = check_validity(&e.wff, b).expect("registry wffs stay under the atom cap");
                    if v.status != VerdictStatus::Invalid {
                        out.push(semantic_problem(v.status, "invalid"));
                    }
                }
                Expectation::ModeDependent => {
                    let free = check_validity(&e.wff, &b.with_rigid(false)).unwrap();
                    let rigid = check_validity(&e.wff, &b.with_rigid(true)).unwrap();
                    if free.status != VerdictStatus::Invalid {
                        out.push(format!("{}: expected invalid with world-varying extensions", e.mnemonic));
                    }
                    if rigid.status != VerdictStatus::ValidUpToBound {
                        out.push(format!("{}: expected valid under rigid extensions", e.mnemonic));
                    }
                }
            }
            out
        })
        .collect();
    problems.extend(entry_problems);

    CorpusReport {
        scripts: outcomes,
        total_steps,
        registry_entries: entries.len(),
        problems,
        bounds: *b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scripts_parse_and_replay_with_expected_counts() {
        let parsed = scripts(None).unwrap();
        assert_eq!(parsed.len(), 4);
        let mut steps = Vec::new();
        let mut mints = Vec::new();
        for (name, script) in &parsed {
            let report = replay(script).unwrap_or_else(|e| panic!("{name}: {e}"));
            steps.push(report.steps_accepted);
            mints.push(report.minted.len());
        }
        assert_eq!(steps.iter().sum::<usize>(), EXPECTED_TOTAL_STEPS);
        assert_eq!(steps, vec![25, 25, 12, 28]);
        assert_eq!(mints, vec![19, 22, 8, 24]);
    }

    #[test]
    fn registry_has_78_entries_with_expected_counts() {
        let entries = registry(None);
        assert_eq!(entries.len(), 78);
        let valid_expected = entries
            .iter()
            .filter(|e| e.expectation == Expectation::Valid)
            .count();
        assert_eq!(valid_expected, 75); // 73 theorem + A2 + the S5 AAA-1
        let theorem = entries.iter().filter(|e| e.theorem_sourced()).count();
        assert_eq!(theorem, 73);
    }

    #[test]
    fn registry_wffs_match_their_expansions() {
        for e in registry(None) {
            assert_eq!(
                expand_mnemonic(&e.mnemonic).canonicalize(),
                e.wff.canonicalize(),
                "{} ({})",
                e.mnemonic,
                e.source
            );
            assert_eq!(name_of(&e.wff), Some(e.mnemonic), "{}", e.mnemonic);
        }
    }

    #[test]
    fn every_registry_wff_round_trips_through_the_printer() {
        for e in registry(None) {
            let printed = print_wff(&e.wff);
            let reparsed = parse_wff(&printed).unwrap().into_conditional().unwrap();
            assert_eq!(reparsed, e.wff.canonicalize(), "{}", e.mnemonic);
        }
    }

    #[test]
    fn expanded_mnemonics_recompute_their_own_figure() {
        for e in registry(None) {
            let figure = crate::ast::figure_of(&e.wff).unwrap();
            assert_eq!(figure, e.mnemonic.figure, "{}", e.mnemonic);
        }
    }

    #[test]
    fn errata_table_loads() {
        let rows = errata(None);
        assert!(rows.len() >= 10);
        assert!(rows.iter().any(|r| r.location.contains("thm4_2[18]")));
    }
}

//! Syntactic derivation engine: the three deductive rules, licence-driven
//! rewriting, script replay, and bounded forward mining.
//!
//! Classical-logic glue (axiom A1) is deliberately approximated by exactly
//! three structural moves: conjunct commutation, double-negation elimination,
//! and congruence of equivalences. All three are absorbed into canonical
//! forms, so every acceptance check is a comparison of canonicalized
//! formulas. A step needing more classical reasoning than that is rejected
//! rather than silently generalized.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::LazyLock;

use serde::Serialize;
use thiserror::Error;

use crate::ast::{ConditionalWff, Mnemonic, Proposition, Quantifier, Term, TermAtom};
use crate::semantics::{audit_facts, SearchBounds};
use crate::square::{self, FactLicense, LicenseKind};
use crate::text::name_of;

pub type StepId = u32;

/// Default cap on stored nodes during mining.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// The seed: `all(n,w) & most(p,n) -> some(p,w)`.
pub fn axiom_ami1() -> ConditionalWff {
    ConditionalWff::syllogism_of(
        Proposition::plain(Quantifier::All, Term::named("n"), Term::named("w")),
        Proposition::plain(Quantifier::Most, Term::named("p"), Term::named("n")),
        Proposition::plain(Quantifier::Some, Term::named("p"), Term::named("w")),
    )
}

/// Second argument of an antecedent-strengthening or subsequent-weakening
/// step: either a fact licence or an earlier proved implication step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LicenseRef {
    Fact(String),
    Step(StepId),
}

impl fmt::Display for LicenseRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LicenseRef::Fact(id) => write!(f, "{id}"),
            LicenseRef::Step(id) => write!(f, "{id}"),
        }
    }
}

/// Why a derivation step claims to be acceptable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// The seed syllogism itself.
    Axiom,
    /// Antecedent strengthening: from `λ & θ -> μ` and `π -> λ`, infer
    /// `π & θ -> μ` (either conjunct may be strengthened).
    Rule1 { input: StepId, license: LicenseRef },
    /// Subsequent weakening: from `λ & θ -> μ` and `μ -> π`, infer
    /// `λ & θ -> π`.
    Rule2 { input: StepId, license: LicenseRef },
    /// Anti-syllogism: from `λ & θ -> μ`, infer `~μ & λ -> ~θ`.
    Rule3 { input: StepId },
    /// Equivalence rewriting anywhere in the formula with the cited licences.
    Rewrite { input: StepId, licenses: Vec<String> },
    /// Argument swap licensed by a symmetry fact (3.1 or 3.2).
    Converse { input: StepId, license: String },
    /// Inner-negated quantifiers and complemented terms are one syntax here,
    /// so this accepts a restatement of the cited step.
    D3 { input: StepId },
}

impl Justification {
    pub fn input(&self) -> Option<StepId> {
        match self {
            Justification::Axiom => None,
            Justification::Rule1 { input, .. }
            | Justification::Rule2 { input, .. }
            | Justification::Rule3 { input }
            | Justification::Rewrite { input, .. }
            | Justification::Converse { input, .. }
            | Justification::D3 { input } => Some(*input),
        }
    }

    /// Step ids this justification cites, including licence step refs.
    pub fn cited_steps(&self) -> Vec<StepId> {
        let mut out: Vec<StepId> = self.input().into_iter().collect();
        if let Justification::Rule1 { license: LicenseRef::Step(s), .. }
        | Justification::Rule2 { license: LicenseRef::Step(s), .. } = self
        {
            out.push(*s);
        }
        out
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom => write!(f, "axiom(A2)"),
            Justification::Rule1 { input, license } => write!(f, "rule1({input}, {license})"),
            Justification::Rule2 { input, license } => write!(f, "rule2({input}, {license})"),
            Justification::Rule3 { input } => write!(f, "rule3({input})"),
            Justification::Rewrite { input, licenses } => {
                write!(f, "rewrite({input}, {})", licenses.join(", "))
            }
            Justification::Converse { input, license } => {
                write!(f, "converse({input}, {license})")
            }
            Justification::D3 { input } => write!(f, "d3({input})"),
        }
    }
}

/// One line of a derivation script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptStep {
    pub id: StepId,
    pub wff: ConditionalWff,
    pub justification: Justification,
    pub name: Option<Mnemonic>,
}

/// An ordered list of justified steps with strictly increasing ids and only
/// backward references.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DerivationScript {
    pub steps: Vec<ScriptStep>,
}

/// Machine-readable rejection reasons.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Reject {
    #[error("step cites step {0}, which is not proved")]
    UnresolvedStep(StepId),
    #[error("unknown licence id `{0}`")]
    UnknownLicense(String),
    #[error("licence {0} is not an implication")]
    NotAnImplication(String),
    #[error("licence {0} is not an equivalence")]
    NotAnEquivalence(String),
    #[error("converse requires licence 3.1 or 3.2, got {0}")]
    BadConverseLicense(String),
    #[error("axiom(A2) only licenses the seed syllogism")]
    NotAxiom,
    #[error("cited step {0} is not an implication usable as a side condition")]
    StepNotImplication(StepId),
    #[error("{rule}: target is not obtainable from the cited inputs")]
    Unreachable { rule: &'static str },
    #[error("step claims name {claimed} but the formula names as {actual}")]
    NameMismatch { claimed: Mnemonic, actual: String },
}

fn canonical_eq(a: &ConditionalWff, b: &ConditionalWff) -> bool {
    a.canonicalize() == b.canonicalize()
}

/// Both anti-syllogism variants of a two-premise conditional; the choice of
/// which premise survives is conjunct commutation, an A1 move.
fn rule3_results(src: &ConditionalWff) -> Vec<ConditionalWff> {
    if src.premises().len() != 2 {
        return Vec::new();
    }
    let neg_concl = src.conclusion().negated();
    let p0 = src.premises()[0].clone();
    let p1 = src.premises()[1].clone();
    vec![
        ConditionalWff::new(vec![neg_concl.clone(), p0.clone()], p1.clone().negated()),
        ConditionalWff::new(vec![neg_concl, p1], p0.negated()),
    ]
}

/// Every result of strengthening one premise of `src` through `pi -> premise`
/// instances of the given implication source.
fn rule1_results(
    src: &ConditionalWff,
    strengthen: &dyn Fn(&Proposition) -> Vec<Proposition>,
) -> Vec<ConditionalWff> {
    let mut out = Vec::new();
    for (i, prem) in src.premises().iter().enumerate() {
        for pi in strengthen(prem) {
            out.push(src.with_proposition(i, pi));
        }
    }
    out
}

fn rule2_results(
    src: &ConditionalWff,
    weaken: &dyn Fn(&Proposition) -> Vec<Proposition>,
) -> Vec<ConditionalWff> {
    weaken(src.conclusion())
        .into_iter()
        .map(|pi| src.with_proposition(src.premises().len(), pi))
        .collect()
}

/// Single-licence, single-position rewrites of a wff.
fn rewrite_results(src: &ConditionalWff, lic: &FactLicense) -> Vec<ConditionalWff> {
    let mut out = Vec::new();
    let n = src.premises().len();
    for (i, prop) in src.propositions().enumerate() {
        for rewritten in lic.prop_rewrites(prop) {
            out.push(src.with_proposition(if i < n { i } else { n }, rewritten));
        }
    }
    out
}

/// Breadth-first reachability of `target` from `src` under the cited
/// equivalences, compared canonically. Zero applications count: relabelings
/// that canonicalization already performs are accepted as written.
fn rewrite_reaches(src: &ConditionalWff, licenses: &[&FactLicense], target: &ConditionalWff) -> bool {
    let goal = target.canonicalize();
    let start = src.canonicalize();
    if start == goal {
        return true;
    }
    let mut seen: BTreeSet<ConditionalWff> = [start.clone()].into();
    let mut queue: VecDeque<ConditionalWff> = [start].into();
    while let Some(wff) = queue.pop_front() {
        for lic in licenses {
            for next in rewrite_results(&wff, lic) {
                let next = next.canonicalize();
                if next == goal {
                    return true;
                }
                if seen.len() < 10_000 && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

fn fact(id: &str) -> Result<&'static FactLicense, Reject> {
    square::license(id).ok_or_else(|| Reject::UnknownLicense(id.to_string()))
}

/// Checks whether `target` is obtainable by the cited move, resolving step
/// references through `resolve`. Comparison is modulo canonical form.
pub fn derive_step(
    target: &ConditionalWff,
    just: &Justification,
    resolve: &dyn Fn(StepId) -> Option<ConditionalWff>,
) -> Result<(), Reject> {
    let input = |id: StepId| resolve(id).ok_or(Reject::UnresolvedStep(id));
    match just {
        Justification::Axiom => {
            if canonical_eq(target, &axiom_ami1()) {
                Ok(())
            } else {
                Err(Reject::NotAxiom)
            }
        }
        Justification::Rule1 { input: i, license } | Justification::Rule2 { input: i, license } => {
            let src = input(*i)?;
            let is_rule1 = matches!(just, Justification::Rule1 { .. });
            let candidates = match license {
                LicenseRef::Fact(id) => {
                    let lic = fact(id)?;
                    if lic.kind != LicenseKind::Implication {
                        return Err(Reject::NotAnImplication(id.clone()));
                    }
                    if is_rule1 {
                        rule1_results(&src, &|p| lic.strengthenings(p))
                    } else {
                        rule2_results(&src, &|p| lic.weakenings(p))
                    }
                }
                LicenseRef::Step(s) => {
                    let imp = input(*s)?;
                    if imp.premises().len() != 1 {
                        return Err(Reject::StepNotImplication(*s));
                    }
                    let (from, to) = (imp.premises()[0].canonical(), imp.conclusion().canonical());
                    if is_rule1 {
                        // pi -> premise with premise = to, pi = from
                        rule1_results(&src, &|p| {
                            if p.canonical() == to {
                                vec![from.clone()]
                            } else {
                                Vec::new()
                            }
                        })
                    } else {
                        rule2_results(&src, &|p| {
                            if p.canonical() == from {
                                vec![to.clone()]
                            } else {
                                Vec::new()
                            }
                        })
                    }
                }
            };
            let rule = if is_rule1 { "rule1" } else { "rule2" };
            if candidates.iter().any(|c| canonical_eq(c, target)) {
                Ok(())
            } else {
                Err(Reject::Unreachable { rule })
            }
        }
        Justification::Rule3 { input: i } => {
            let src = input(*i)?;
            if rule3_results(&src).iter().any(|c| canonical_eq(c, target)) {
                Ok(())
            } else {
                Err(Reject::Unreachable { rule: "rule3" })
            }
        }
        Justification::Rewrite { input: i, licenses } => {
            let src = input(*i)?;
            let mut lics = Vec::new();
            for id in licenses {
                let lic = fact(id)?;
                if lic.kind != LicenseKind::Equivalence {
                    return Err(Reject::NotAnEquivalence(id.clone()));
                }
                lics.push(lic);
            }
            if rewrite_reaches(&src, &lics, target) {
                Ok(())
            } else {
                Err(Reject::Unreachable { rule: "rewrite" })
            }
        }
        Justification::Converse { input: i, license } => {
            if license != "3.1" && license != "3.2" {
                return Err(Reject::BadConverseLicense(license.clone()));
            }
            let src = input(*i)?;
            let lic = fact(license)?;
            if rewrite_results(&src, lic)
                .iter()
                .any(|c| canonical_eq(c, target))
            {
                Ok(())
            } else {
                Err(Reject::Unreachable { rule: "converse" })
            }
        }
        Justification::D3 { input: i } => {
            let src = input(*i)?;
            if canonical_eq(&src, target) {
                Ok(())
            } else {
                Err(Reject::Unreachable { rule: "d3" })
            }
        }
    }
}

/// Deduplication key: canonical form with uniformly-complemented atoms
/// stripped to their base and atoms renamed in first-occurrence order, so a
/// schema over `non_w` and the same schema over a fresh atom coincide.
pub fn alpha_key(w: &ConditionalWff) -> String {
    let canon = w.canonicalize();
    // atoms whose every occurrence carries the complement flag
    let mut always: BTreeMap<TermAtom, bool> = BTreeMap::new();
    for prop in canon.propositions() {
        for term in [&prop.subject, &prop.predicate] {
            *always.entry(term.atom.clone()).or_insert(true) &= term.complemented;
        }
    }
    let mut renames: BTreeMap<TermAtom, String> = BTreeMap::new();
    let mut relabel = |term: &Term| -> Term {
        let strip = always[&term.atom];
        let next_name = format!("x{}", renames.len() + 1);
        let name = renames.entry(term.atom.clone()).or_insert(next_name);
        Term {
            atom: TermAtom::new(name.clone()),
            complemented: term.complemented && !strip,
        }
    };
    let rebuilt: Vec<Proposition> = canon
        .propositions()
        .map(|p| Proposition {
            subject: relabel(&p.subject),
            predicate: relabel(&p.predicate),
            ..p.clone()
        })
        .collect();
    let n = rebuilt.len() - 1;
    ConditionalWff::new(rebuilt[..n].to_vec(), rebuilt[n].clone()).to_string()
}

/// A proved formula with how it got there.
#[derive(Clone, Debug, Serialize)]
pub struct ProvedEntry {
    pub wff: ConditionalWff,
    pub depth: u32,
    pub provenance: String,
}

/// Set of proved formulas, deduplicated by [`alpha_key`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct ProvedSet {
    entries: BTreeMap<String, ProvedEntry>,
}

impl ProvedSet {
    pub fn new() -> Self {
        ProvedSet::default()
    }

    /// Inserts unless an alpha-equivalent formula is already present.
    /// Returns whether the formula was new.
    pub fn insert(&mut self, wff: ConditionalWff, depth: u32, provenance: String) -> bool {
        let key = alpha_key(&wff);
        if self.entries.contains_key(&key) {
            return false;
        }
        let canonical = wff.canonicalize();
        self.entries.insert(key, ProvedEntry { wff: canonical, depth, provenance });
        true
    }

    pub fn contains(&self, wff: &ConditionalWff) -> bool {
        self.entries.contains_key(&alpha_key(wff))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ProvedEntry> {
        self.entries.values()
    }

    /// Mnemonics of every syllogism-shaped member that names cleanly.
    pub fn names(&self) -> BTreeSet<Mnemonic> {
        self.entries
            .values()
            .filter_map(|e| name_of(&e.wff))
            .collect()
    }
}

/// Outcome of replaying one script.
#[derive(Clone, Debug, Serialize)]
pub struct ReplayReport {
    pub steps_accepted: usize,
    /// Names minted by the script, in step order.
    pub minted: Vec<Mnemonic>,
    pub proved: ProvedSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("step {step} rejected: {reason}")]
pub struct ReplayFailure {
    pub step: StepId,
    pub reason: Reject,
}

/// Replays a script against the kernel, checking every step and every
/// claimed name. Stops at the first rejected step.
pub fn replay(script: &DerivationScript) -> Result<ReplayReport, ReplayFailure> {
    replay_into(script, ProvedSet::new(), "script")
}

/// Like [`replay`] but accumulating into an existing proved set, tagging
/// provenance with `origin`.
pub fn replay_into(
    script: &DerivationScript,
    mut proved: ProvedSet,
    origin: &str,
) -> Result<ReplayReport, ReplayFailure> {
    let mut by_id: BTreeMap<StepId, ConditionalWff> = BTreeMap::new();
    let mut minted = Vec::new();
    for step in &script.steps {
        let resolve = |id: StepId| by_id.get(&id).cloned();
        derive_step(&step.wff, &step.justification, &resolve)
            .map_err(|reason| ReplayFailure { step: step.id, reason })?;
        if let Some(claimed) = step.name {
            let actual = name_of(&step.wff);
            if actual != Some(claimed) {
                return Err(ReplayFailure {
                    step: step.id,
                    reason: Reject::NameMismatch {
                        claimed,
                        actual: actual
                            .map(|m| m.to_string())
                            .unwrap_or_else(|| "(not syllogism-shaped)".into()),
                    },
                });
            }
            minted.push(claimed);
        }
        by_id.insert(step.id, step.wff.clone());
        proved.insert(
            step.wff.clone(),
            step.id,
            format!("{origin} step {}", step.id),
        );
    }
    Ok(ReplayReport { steps_accepted: script.steps.len(), minted, proved })
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("mining hit the node cap of {cap} at depth {depth}")]
    DepthExceeded { depth: u32, cap: usize },
}

/// Licence ids the strict mode drops: those that fail the semantic audit at
/// default bounds.
pub fn audit_failing_licenses() -> &'static BTreeSet<String> {
    static FAILING: LazyLock<BTreeSet<String>> = LazyLock::new(|| {
        audit_facts(&SearchBounds::default())
            .failing_ids()
            .into_iter()
            .collect()
    });
    &FAILING
}

/// Breadth-first closure of the seeds under the deductive rules, symmetry
/// converses, and inner-negation rewrites, to the given depth. `strict`
/// drops licences that fail the semantic audit.
pub fn mine(
    seeds: &[ConditionalWff],
    depth: u32,
    strict: bool,
    node_cap: usize,
) -> Result<ProvedSet, KernelError> {
    let excluded: &BTreeSet<String> = if strict {
        audit_failing_licenses()
    } else {
        static EMPTY: LazyLock<BTreeSet<String>> = LazyLock::new(BTreeSet::new);
        &EMPTY
    };
    let implications: Vec<&FactLicense> = fact_licenses_of_kind(LicenseKind::Implication)
        .filter(|l| !excluded.contains(l.id))
        .collect();
    let inner_negations: Vec<&FactLicense> = (1..=8)
        .map(|i| square::license(&format!("1.{i}")).unwrap())
        .collect();
    let converses: Vec<&FactLicense> =
        vec![square::license("3.1").unwrap(), square::license("3.2").unwrap()];

    let mut proved = ProvedSet::new();
    let mut frontier: Vec<ConditionalWff> = Vec::new();
    for seed in seeds {
        if proved.insert(seed.clone(), 0, "seed".into()) {
            frontier.push(seed.canonicalize());
        }
    }
    for level in 1..=depth {
        let mut next = Vec::new();
        for wff in &frontier {
            let push = |candidate: ConditionalWff,
                            describe: &str,
                            proved: &mut ProvedSet,
                            next: &mut Vec<ConditionalWff>| {
                let canonical = candidate.canonicalize();
                if proved.insert(
                    canonical.clone(),
                    level,
                    format!("{describe} from {wff}"),
                ) {
                    next.push(canonical);
                }
            };
            for candidate in rule3_results(wff) {
                push(candidate, "rule3", &mut proved, &mut next);
            }
            for lic in &implications {
                for candidate in rule1_results(wff, &|p| lic.strengthenings(p)) {
                    push(candidate, &format!("rule1({})", lic.id), &mut proved, &mut next);
                }
                for candidate in rule2_results(wff, &|p| lic.weakenings(p)) {
                    push(candidate, &format!("rule2({})", lic.id), &mut proved, &mut next);
                }
            }
            for lic in inner_negations.iter().chain(&converses) {
                for candidate in rewrite_results(wff, lic) {
                    push(candidate, &format!("rewrite({})", lic.id), &mut proved, &mut next);
                }
            }
            if proved.len() > node_cap {
                return Err(KernelError::DepthExceeded { depth: level, cap: node_cap });
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(proved)
}

fn fact_licenses_of_kind(kind: LicenseKind) -> impl Iterator<Item = &'static FactLicense> {
    square::fact_licenses().iter().filter(move |l| l.kind == kind)
}

//! Model-theoretic side: evaluation of propositions over finite Kripke
//! models, exhaustive countermodel search, the licence audit, and the
//! whole-space census.
//!
//! All cardinality comparisons are exact integer arithmetic (`2*|P∩W|`
//! against `|P|`); there is no floating point anywhere.
//!
//! Search enumerates Venn-region cardinality vectors rather than labeled
//! subsets: for `k` atoms a world is `2^k` non-negative region counts summing
//! to the domain size. The quantifier clauses depend only on region
//! cardinalities, so this is verdict-equivalent to naive subset enumeration
//! (asserted by an oracle test) and much smaller.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ast::{
    ConditionalWff, Figure, Letter, Mnemonic, Modality, Proposition, Quantifier, TermAtom,
};
use crate::square::{fact_licenses, LicenseKind};
use crate::text::expand_mnemonic;

/// Hard cap on distinct atoms per searched formula; region vectors grow as
/// `2^k` per world.
pub const ATOM_CAP: usize = 4;

/// Search-space limits. Every verdict records the bounds it was computed at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_domain: u32,
    pub max_worlds: u32,
    /// When true, all worlds share one extension assignment.
    pub rigid: bool,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_domain: 4, max_worlds: 2, rigid: false }
    }
}

impl SearchBounds {
    pub fn new(max_domain: u32, max_worlds: u32, rigid: bool) -> Self {
        assert!(max_domain >= 1 && max_worlds >= 1, "bounds must be at least 1");
        SearchBounds { max_domain, max_worlds, rigid }
    }

    pub fn with_rigid(self, rigid: bool) -> Self {
        SearchBounds { rigid, ..self }
    }
}

/// Per-world extensions: which domain elements (numbered from 1) each atom
/// covers. Complement terms evaluate to the rest of the domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct World {
    pub extensions: BTreeMap<TermAtom, BTreeSet<u32>>,
}

/// A finite Kripke model: a domain `1..=domain_size`, a non-empty world
/// list, and a designated actual world.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KripkeModel {
    #[serde(rename = "domain")]
    pub domain_size: u32,
    pub worlds: Vec<World>,
    pub actual: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    ValidUpToBound,
    Invalid,
}

/// Outcome of a bounded validity check. A countermodel is present exactly
/// when the status is `Invalid`, and re-evaluating the formula on it
/// falsifies it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub countermodel: Option<KripkeModel>,
    pub bounds: SearchBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("atom `{0}` has no extension in some world of the model")]
    UnknownAtom(TermAtom),
    #[error("formula uses {atoms} distinct atoms; the search cap is {cap}")]
    BoundsExceeded { atoms: usize, cap: usize },
}

fn extension_of(
    world: &World,
    term: &crate::ast::Term,
    domain_size: u32,
) -> Result<BTreeSet<u32>, SemanticsError> {
    let base = world
        .extensions
        .get(&term.atom)
        .ok_or_else(|| SemanticsError::UnknownAtom(term.atom.clone()))?;
    if term.complemented {
        Ok((1..=domain_size).filter(|e| !base.contains(e)).collect())
    } else {
        Ok(base.clone())
    }
}

fn quantifier_holds(q: Quantifier, inter: u64, subject_card: u64) -> bool {
    match q {
        Quantifier::All => inter == subject_card,
        Quantifier::Some => inter > 0,
        Quantifier::No => inter == 0,
        Quantifier::NotAll => inter < subject_card,
        Quantifier::Most => 2 * inter > subject_card,
        Quantifier::FewerThanHalf => 2 * inter < subject_card,
        Quantifier::AtLeastHalf => 2 * inter >= subject_card,
        Quantifier::AtMostHalf => 2 * inter <= subject_card,
    }
}

fn eval_plain_at(p: &Proposition, m: &KripkeModel, world: usize) -> Result<bool, SemanticsError> {
    let w = &m.worlds[world];
    let subject = extension_of(w, &p.subject, m.domain_size)?;
    let predicate = extension_of(w, &p.predicate, m.domain_size)?;
    let inter = subject.intersection(&predicate).count() as u64;
    Ok(quantifier_holds(p.quantifier, inter, subject.len() as u64))
}

/// Evaluates a proposition in a model. Non-modal propositions are evaluated
/// at `world_index`; `[]` means true in all worlds and `<>` true in at least
/// one. The outer negation, if any, flips the result.
pub fn eval_proposition(
    p: &Proposition,
    m: &KripkeModel,
    world_index: usize,
) -> Result<bool, SemanticsError> {
    let inner = match p.modality {
        Modality::None => eval_plain_at(p, m, world_index)?,
        Modality::Necessary => {
            let mut all = true;
            for w in 0..m.worlds.len() {
                all &= eval_plain_at(p, m, w)?;
            }
            all
        }
        Modality::Possible => {
            let mut any = false;
            for w in 0..m.worlds.len() {
                any |= eval_plain_at(p, m, w)?;
            }
            any
        }
    };
    Ok(inner != p.outer_negated)
}

/// True unless all premises hold at the actual world while the conclusion
/// fails there.
pub fn holds(w: &ConditionalWff, m: &KripkeModel) -> Result<bool, SemanticsError> {
    for prem in w.premises() {
        if !eval_proposition(prem, m, m.actual)? {
            return Ok(true);
        }
    }
    eval_proposition(w.conclusion(), m, m.actual)
}

/// Whether enumerated models must give every base atom a non-empty extension
/// in every world. The spec-level operations always require it; the optional
/// form exists so tests can show which facts depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImportPolicy {
    Required,
    Optional,
}

/// A proposition compiled against a fixed atom ordering for fast evaluation
/// over region-count vectors.
#[derive(Clone, Copy, Debug)]
struct CompiledProp {
    modality: Modality,
    negated: bool,
    quantifier: Quantifier,
    subj_bit: usize,
    subj_compl: bool,
    pred_bit: usize,
    pred_compl: bool,
}

struct Compiled {
    atoms: Vec<TermAtom>,
    premises: Vec<CompiledProp>,
    conclusion: CompiledProp,
    modal: bool,
}

fn compile(w: &ConditionalWff) -> Result<Compiled, SemanticsError> {
    let atoms: Vec<TermAtom> = w.atoms().into_iter().collect();
    if atoms.len() > ATOM_CAP {
        return Err(SemanticsError::BoundsExceeded { atoms: atoms.len(), cap: ATOM_CAP });
    }
    let index = |a: &TermAtom| atoms.iter().position(|b| b == a).unwrap();
    let cp = |p: &Proposition| CompiledProp {
        modality: p.modality,
        negated: p.outer_negated,
        quantifier: p.quantifier,
        subj_bit: index(&p.subject.atom),
        subj_compl: p.subject.complemented,
        pred_bit: index(&p.predicate.atom),
        pred_compl: p.predicate.complemented,
    };
    let premises: Vec<CompiledProp> = w.premises().iter().map(cp).collect();
    let conclusion = cp(w.conclusion());
    let modal = w
        .propositions()
        .any(|p| p.modality != Modality::None);
    Ok(Compiled { atoms, premises, conclusion, modal })
}

impl CompiledProp {
    fn eval_plain(&self, counts: &[u32]) -> bool {
        let mut inter: u64 = 0;
        let mut subj: u64 = 0;
        for (region, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let in_subj = ((region >> self.subj_bit) & 1 == 1) != self.subj_compl;
            if in_subj {
                subj += c as u64;
                let in_pred = ((region >> self.pred_bit) & 1 == 1) != self.pred_compl;
                if in_pred {
                    inter += c as u64;
                }
            }
        }
        quantifier_holds(self.quantifier, inter, subj)
    }

    fn eval(&self, worlds: &[&[u32]], actual: usize) -> bool {
        let inner = match self.modality {
            Modality::None => self.eval_plain(worlds[actual]),
            Modality::Necessary => worlds.iter().all(|w| self.eval_plain(w)),
            Modality::Possible => worlds.iter().any(|w| self.eval_plain(w)),
        };
        inner != self.negated
    }
}

fn falsifies(c: &Compiled, worlds: &[&[u32]]) -> bool {
    c.premises.iter().all(|p| p.eval(worlds, 0)) && !c.conclusion.eval(worlds, 0)
}

/// All region-count vectors for `k` atoms summing to `domain`, in lexicographic
/// order, filtered by the import policy (every base atom non-empty).
fn region_vectors(k: usize, domain: u32, import: ImportPolicy) -> Vec<Vec<u32>> {
    let regions = 1usize << k;
    let mut out = Vec::new();
    let mut current = vec![0u32; regions];
    fn rec(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(current.clone());
            return;
        }
        for c in 0..=remaining {
            current[pos] = c;
            rec(current, pos + 1, remaining - c, out);
        }
    }
    rec(&mut current, 0, domain, &mut out);
    if import == ImportPolicy::Required {
        out.retain(|v| {
            (0..k).all(|bit| {
                v.iter()
                    .enumerate()
                    .any(|(region, &c)| c > 0 && (region >> bit) & 1 == 1)
            })
        });
    }
    out
}

fn vectors_to_model(c: &Compiled, domain: u32, worlds: &[&[u32]]) -> KripkeModel {
    let k = c.atoms.len();
    let built = worlds
        .iter()
        .map(|counts| {
            // assign elements 1..=domain to regions in region-index order
            let mut extensions: BTreeMap<TermAtom, BTreeSet<u32>> =
                c.atoms.iter().map(|a| (a.clone(), BTreeSet::new())).collect();
            let mut next = 1u32;
            for (region, &count) in counts.iter().enumerate() {
                for _ in 0..count {
                    for (bit, atom) in c.atoms.iter().enumerate().take(k) {
                        if (region >> bit) & 1 == 1 {
                            extensions.get_mut(atom).unwrap().insert(next);
                        }
                    }
                    next += 1;
                }
            }
            World { extensions }
        })
        .collect();
    KripkeModel { domain_size: domain, worlds: built, actual: 0 }
}

fn search(
    w: &ConditionalWff,
    b: &SearchBounds,
    import: ImportPolicy,
) -> Result<Option<KripkeModel>, SemanticsError> {
    let compiled = compile(w)?;
    // A non-modal formula only sees the actual world, and a rigid model is
    // indistinguishable from its one-world restriction, so one world suffices
    // in both cases; the canonically-first countermodel is unchanged.
    let world_cap = if b.rigid || !compiled.modal { 1 } else { b.max_worlds };
    for domain in 1..=b.max_domain {
        let vectors = region_vectors(compiled.atoms.len(), domain, import);
        for world_count in 1..=world_cap {
            let mut picks = vec![0usize; world_count as usize];
            'odometer: loop {
                let worlds: Vec<&[u32]> =
                    picks.iter().map(|&i| vectors[i].as_slice()).collect();
                if falsifies(&compiled, &worlds) {
                    return Ok(Some(vectors_to_model(&compiled, domain, &worlds)));
                }
                // next tuple in lexicographic order
                for slot in (0..picks.len()).rev() {
                    picks[slot] += 1;
                    if picks[slot] < vectors.len() {
                        continue 'odometer;
                    }
                    picks[slot] = 0;
                }
                break;
            }
            if vectors.is_empty() {
                break;
            }
        }
    }
    Ok(None)
}

/// Exhaustively searches for a model falsifying `w` within the bounds, under
/// existential import. Returns the first countermodel in canonical
/// enumeration order (domain size, then world count, then region vectors
/// lexicographically), or `None`.
pub fn find_countermodel(
    w: &ConditionalWff,
    b: &SearchBounds,
) -> Result<Option<KripkeModel>, SemanticsError> {
    search(w, b, ImportPolicy::Required)
}

/// Like [`find_countermodel`] but with an explicit import policy.
pub fn find_countermodel_with_policy(
    w: &ConditionalWff,
    b: &SearchBounds,
    import: ImportPolicy,
) -> Result<Option<KripkeModel>, SemanticsError> {
    search(w, b, import)
}

/// Wraps [`find_countermodel`] into a [`Verdict`].
pub fn check_validity(w: &ConditionalWff, b: &SearchBounds) -> Result<Verdict, SemanticsError> {
    let countermodel = find_countermodel(w, b)?;
    Ok(Verdict {
        status: if countermodel.is_some() {
            VerdictStatus::Invalid
        } else {
            VerdictStatus::ValidUpToBound
        },
        countermodel,
        bounds: *b,
    })
}

/// One direction of one licence instance that failed the audit.
#[derive(Clone, Debug, Serialize)]
pub struct AuditFailure {
    /// Quantifier the schematic licence was instantiated at, if schematic.
    pub quantifier: Option<Quantifier>,
    /// `"lhs->rhs"` or `"rhs->lhs"`.
    pub direction: &'static str,
    pub countermodel: KripkeModel,
}

#[derive(Clone, Debug, Serialize)]
pub struct LicenseAudit {
    pub id: String,
    pub kind: LicenseKind,
    pub passed: bool,
    pub failures: Vec<AuditFailure>,
}

/// Semantic audit of the whole licence table.
#[derive(Clone, Debug, Serialize)]
pub struct FactAudit {
    pub results: Vec<LicenseAudit>,
    pub bounds: SearchBounds,
}

impl FactAudit {
    pub fn passed_count(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }

    pub fn failing_ids(&self) -> Vec<String> {
        self.results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.id.clone())
            .collect()
    }
}

/// Checks every licence (schematic quantifiers instantiated over all eight)
/// as an implication or both directions of an equivalence, over two atoms.
pub fn audit_facts(b: &SearchBounds) -> FactAudit {
    let results = fact_licenses()
        .par_iter()
        .map(|lic| {
            let mut failures = Vec::new();
            let schematic = lic.instances().len() > 1;
            for (idx, (lhs, rhs)) in lic.instances().into_iter().enumerate() {
                let q = schematic.then(|| Quantifier::ALL8[idx]);
                let mut dirs = vec![(lhs.clone(), rhs.clone(), "lhs->rhs")];
                if lic.kind == LicenseKind::Equivalence {
                    dirs.push((rhs, lhs, "rhs->lhs"));
                }
                for (from, to, direction) in dirs {
                    let wff = ConditionalWff::new(vec![from], to);
                    let found = find_countermodel(&wff, b)
                        .expect("licence instances stay under the atom cap");
                    if let Some(countermodel) = found {
                        failures.push(AuditFailure { quantifier: q, direction, countermodel });
                    }
                }
            }
            LicenseAudit {
                id: lic.id.to_string(),
                kind: lic.kind,
                passed: failures.is_empty(),
                failures,
            }
        })
        .collect();
    FactAudit { results, bounds: *b }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub mnemonic: Mnemonic,
    pub status: VerdictStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusTable {
    pub rows: Vec<CensusRow>,
    pub valid: usize,
    pub bounds: SearchBounds,
}

/// Classifies every syllogism form over the requested letters and figures;
/// with `modal` set, every combination of `[]`/`<>`/no decoration on the
/// three propositions is enumerated too.
pub fn census(letters: &[Letter], figures: &[Figure], modal: bool, b: &SearchBounds) -> CensusTable {
    let modalities: &[Modality] = if modal {
        &[Modality::None, Modality::Necessary, Modality::Possible]
    } else {
        &[Modality::None]
    };
    let mut forms = Vec::new();
    for &major_letter in letters {
        for &minor_letter in letters {
            for &concl_letter in letters {
                for &figure in figures {
                    for &major_mod in modalities {
                        for &minor_mod in modalities {
                            for &concl_mod in modalities {
                                forms.push(Mnemonic {
                                    major_mod,
                                    major_letter,
                                    minor_mod,
                                    minor_letter,
                                    concl_mod,
                                    concl_letter,
                                    figure,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    let rows: Vec<CensusRow> = forms
        .par_iter()
        .map(|&mnemonic| {
            let wff = expand_mnemonic(&mnemonic);
            let status = match find_countermodel(&wff, b)
                .expect("expanded mnemonics use three atoms")
            {
                Some(_) => VerdictStatus::Invalid,
                None => VerdictStatus::ValidUpToBound,
            };
            CensusRow { mnemonic, status }
        })
        .collect();
    let valid = rows
        .iter()
        .filter(|r| r.status == VerdictStatus::ValidUpToBound)
        .count();
    CensusTable { rows, valid, bounds: *b }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::Term;

    fn prop(q: Quantifier, s: &str, p: &str) -> Proposition {
        Proposition::plain(q, Term::named(s), Term::named(p))
    }

    fn world(pairs: &[(&str, &[u32])]) -> World {
        World {
            extensions: pairs
                .iter()
                .map(|(name, elems)| (TermAtom::new(*name), elems.iter().copied().collect()))
                .collect(),
        }
    }

    fn model(domain_size: u32, worlds: Vec<World>) -> KripkeModel {
        KripkeModel { domain_size, worlds, actual: 0 }
    }

    #[test]
    fn counting_quantifiers_by_hand() {
        // most(p,n) with P={1}, N={1,2}: 2*1 > 1
        let m = model(2, vec![world(&[("p", &[1]), ("n", &[1, 2])])]);
        assert!(eval_proposition(&prop(Quantifier::Most, "p", "n"), &m, 0).unwrap());

        // exact half: at_least_half true while most false — the pair behind
        // the 4.9 audit failure
        let m = model(2, vec![world(&[("p", &[1, 2]), ("w", &[1])])]);
        assert!(eval_proposition(&prop(Quantifier::AtLeastHalf, "p", "w"), &m, 0).unwrap());
        assert!(!eval_proposition(&prop(Quantifier::Most, "p", "w"), &m, 0).unwrap());

        // all(p,w) with P={1}, W={1}
        let m = model(1, vec![world(&[("p", &[1]), ("w", &[1])])]);
        assert!(eval_proposition(&prop(Quantifier::All, "p", "w"), &m, 0).unwrap());
    }

    #[test]
    fn complement_terms_evaluate_against_the_domain() {
        let m = model(3, vec![world(&[("w", &[1])])]);
        // some(non_w, non_w): complement is {2,3}
        let p = Proposition::plain(
            Quantifier::Some,
            Term::named("w").complement(),
            Term::named("w").complement(),
        );
        assert!(eval_proposition(&p, &m, 0).unwrap());
        let all_w_not_w = Proposition::plain(
            Quantifier::No,
            Term::named("w"),
            Term::named("w").complement(),
        );
        assert!(eval_proposition(&all_w_not_w, &m, 0).unwrap());
    }

    #[test]
    fn unknown_atom_is_an_error() {
        let m = model(1, vec![world(&[("p", &[1])])]);
        let err = eval_proposition(&prop(Quantifier::Some, "p", "q"), &m, 0).unwrap_err();
        assert!(matches!(err, SemanticsError::UnknownAtom(a) if a.name() == "q"));
    }

    #[test]
    fn modalities_quantify_over_worlds() {
        let m = model(
            2,
            vec![
                world(&[("p", &[1]), ("w", &[2])]),
                world(&[("p", &[1]), ("w", &[1])]),
            ],
        );
        let some = prop(Quantifier::Some, "p", "w");
        let nec = Proposition { modality: Modality::Necessary, ..some.clone() };
        let pos = Proposition { modality: Modality::Possible, ..some.clone() };
        assert!(!eval_proposition(&some, &m, 0).unwrap());
        assert!(eval_proposition(&some, &m, 1).unwrap());
        assert!(!eval_proposition(&nec, &m, 0).unwrap());
        assert!(eval_proposition(&pos, &m, 0).unwrap());
        // outer negation flips
        assert!(eval_proposition(&nec.negated(), &m, 0).unwrap());
    }

    fn ami1() -> ConditionalWff {
        ConditionalWff::syllogism_of(
            prop(Quantifier::All, "n", "w"),
            prop(Quantifier::Most, "p", "n"),
            prop(Quantifier::Some, "p", "w"),
        )
    }

    fn mam1_instance() -> ConditionalWff {
        ConditionalWff::syllogism_of(
            prop(Quantifier::Most, "z", "p"),
            prop(Quantifier::All, "c", "z"),
            prop(Quantifier::Most, "c", "p"),
        )
    }

    #[test]
    fn holds_examples() {
        let m = model(2, vec![world(&[("n", &[1]), ("w", &[1]), ("p", &[1])])]);
        assert!(holds(&ami1(), &m).unwrap());

        // hand countermodel to most(z,p) & all(c,z) -> most(c,p)
        let m = model(
            3,
            vec![world(&[("z", &[1, 2, 3]), ("p", &[1, 2]), ("c", &[3])])],
        );
        assert!(!holds(&mam1_instance(), &m).unwrap());

        // vacuous truth when a premise fails
        let m = model(2, vec![world(&[("n", &[1]), ("w", &[2]), ("p", &[1])])]);
        assert!(holds(&ami1(), &m).unwrap());
    }

    #[test]
    fn ami1_has_no_countermodel_at_default_bounds() {
        assert!(find_countermodel(&ami1(), &SearchBounds::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn mmi1_countermodel_is_found_and_self_checks() {
        let mmi1 = ConditionalWff::syllogism_of(
            prop(Quantifier::Most, "n", "w"),
            prop(Quantifier::Most, "p", "n"),
            prop(Quantifier::Some, "p", "w"),
        );
        let cm = find_countermodel(&mmi1, &SearchBounds::default())
            .unwrap()
            .expect("most-most-some in the first figure is invalid");
        assert!(!holds(&mmi1, &cm).unwrap());
        assert!(cm.domain_size <= 3);
    }

    #[test]
    fn mam1_is_invalid_with_a_domain_three_countermodel() {
        let verdict = check_validity(&mam1_instance(), &SearchBounds::new(3, 1, false)).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Invalid);
        let cm = verdict.countermodel.unwrap();
        assert!(!holds(&mam1_instance(), &cm).unwrap());
    }

    fn aii_rigid_case() -> ConditionalWff {
        // all(r,n) & <>some(c,r) -> <>some(c,n)
        ConditionalWff::syllogism_of(
            prop(Quantifier::All, "r", "n"),
            Proposition {
                modality: Modality::Possible,
                ..prop(Quantifier::Some, "c", "r")
            },
            Proposition {
                modality: Modality::Possible,
                ..prop(Quantifier::Some, "c", "n")
            },
        )
    }

    #[test]
    fn rigidity_changes_the_modal_verdict() {
        let b = SearchBounds::new(2, 2, false);
        let free = find_countermodel(&aii_rigid_case(), &b).unwrap();
        let cm = free.expect("invalid with world-varying extensions");
        assert!(!holds(&aii_rigid_case(), &cm).unwrap());
        assert_eq!(cm.worlds.len(), 2);

        let rigid = find_countermodel(&aii_rigid_case(), &b.with_rigid(true)).unwrap();
        assert!(rigid.is_none());
    }

    #[test]
    fn existential_import_is_what_validates_subalternation() {
        // all(p,w) -> some(p,w): valid only under import
        let wff = ConditionalWff::new(
            vec![prop(Quantifier::All, "p", "w")],
            prop(Quantifier::Some, "p", "w"),
        );
        let b = SearchBounds::default();
        assert!(find_countermodel(&wff, &b).unwrap().is_none());
        let no_import =
            find_countermodel_with_policy(&wff, &b, ImportPolicy::Optional).unwrap();
        let cm = no_import.expect("empty P falsifies all->some");
        assert!(!holds(&wff, &cm).unwrap());
    }

    #[test]
    fn audit_fails_exactly_fact_4_9() {
        let audit = audit_facts(&SearchBounds::default());
        assert_eq!(audit.results.len(), 32);
        assert_eq!(audit.passed_count(), 31);
        assert_eq!(audit.failing_ids(), vec!["4.9".to_string()]);
        let failing = audit.results.iter().find(|r| r.id == "4.9").unwrap();
        let cm = &failing.failures[0].countermodel;
        assert_eq!(cm.domain_size, 2);
    }

    #[test]
    fn modal_duality_holds_on_every_searched_model() {
        // eval([]Q) is the conjunction over worlds, eval(<>Q) the disjunction;
        // []p => p at actual, and p at actual => <>p.
        let m = model(
            2,
            vec![
                world(&[("p", &[1, 2]), ("w", &[1])]),
                world(&[("p", &[1]), ("w", &[])]),
            ],
        );
        for q in Quantifier::ALL8 {
            let plain = prop(q, "p", "w");
            let nec = Proposition { modality: Modality::Necessary, ..plain.clone() };
            let pos = Proposition { modality: Modality::Possible, ..plain.clone() };
            let per_world: Vec<bool> = (0..m.worlds.len())
                .map(|i| eval_proposition(&plain, &m, i).unwrap())
                .collect();
            assert_eq!(
                eval_proposition(&nec, &m, 0).unwrap(),
                per_world.iter().all(|&b| b)
            );
            assert_eq!(
                eval_proposition(&pos, &m, 0).unwrap(),
                per_world.iter().any(|&b| b)
            );
            if eval_proposition(&nec, &m, 0).unwrap() {
                assert!(eval_proposition(&plain, &m, 0).unwrap());
            }
            if eval_proposition(&plain, &m, 0).unwrap() {
                assert!(eval_proposition(&pos, &m, 0).unwrap());
            }
        }
    }

    #[test]
    fn atom_cap_is_enforced() {
        let wff = ConditionalWff::syllogism_of(
            prop(Quantifier::All, "a", "b"),
            prop(Quantifier::All, "c", "d"),
            prop(Quantifier::Some, "e", "f"),
        );
        let err = find_countermodel(&wff, &SearchBounds::default()).unwrap_err();
        assert!(matches!(err, SemanticsError::BoundsExceeded { atoms: 6, cap: 4 }));
    }
}

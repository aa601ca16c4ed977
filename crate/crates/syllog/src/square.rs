//! The negation algebra on the eight quantifiers and the licence tables the
//! kernel, the semantic audit, and the replay justifications all share.
//!
//! Licences are data, not code: every rewrite or subordination step cites an
//! entry of this table by id, and the same entries are what the semantic
//! audit checks model-theoretically.

use std::fmt;
use std::sync::LazyLock;

use serde::Serialize;

use crate::ast::{Modality, Proposition, Quantifier, Term, TermAtom};

/// The three negations that generate a modern square of opposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NegationMode {
    /// `Q¬`: negate the predicate argument.
    Inner,
    /// `¬Q`: sentential negation.
    Outer,
    /// `¬Q¬`: both.
    Dual,
}

fn inner_negation(q: Quantifier) -> Quantifier {
    use Quantifier::*;
    match q {
        All => No,
        No => All,
        Some => NotAll,
        NotAll => Some,
        Most => FewerThanHalf,
        FewerThanHalf => Most,
        AtLeastHalf => AtMostHalf,
        AtMostHalf => AtLeastHalf,
    }
}

fn outer_negation(q: Quantifier) -> Quantifier {
    use Quantifier::*;
    match q {
        All => NotAll,
        NotAll => All,
        Some => No,
        No => Some,
        Most => AtMostHalf,
        AtMostHalf => Most,
        FewerThanHalf => AtLeastHalf,
        AtLeastHalf => FewerThanHalf,
    }
}

/// Table lookup for the inner, outer, and dual negation of a quantifier.
pub fn negate(q: Quantifier, mode: NegationMode) -> Quantifier {
    match mode {
        NegationMode::Inner => inner_negation(q),
        NegationMode::Outer => outer_negation(q),
        NegationMode::Dual => outer_negation(inner_negation(q)),
    }
}

/// Which of the two squares a quantifier belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareId {
    AllSquare,
    MostSquare,
}

pub fn square_of(q: Quantifier) -> SquareId {
    use Quantifier::*;
    match q {
        All | No | Some | NotAll => SquareId::AllSquare,
        Most | FewerThanHalf | AtLeastHalf | AtMostHalf => SquareId::MostSquare,
    }
}

/// Whether a licence may be used in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LicenseKind {
    Equivalence,
    Implication,
}

/// Term placeholder in a licence schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemaVar {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchemaTerm {
    pub var: SchemaVar,
    pub complemented: bool,
}

impl SchemaTerm {
    const X: SchemaTerm = SchemaTerm { var: SchemaVar::X, complemented: false };
    const Y: SchemaTerm = SchemaTerm { var: SchemaVar::Y, complemented: false };
    const NOT_Y: SchemaTerm = SchemaTerm { var: SchemaVar::Y, complemented: true };
}

/// Quantifier slot of a licence schema: fixed, schematic, or the outer
/// negation of the schematic binding (duality right-hand sides).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemaQuant {
    Fixed(Quantifier),
    Any,
    NegAny,
}

/// One side of a licence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchemaProp {
    pub modality: Modality,
    pub outer_negated: bool,
    pub quantifier: SchemaQuant,
    pub subject: SchemaTerm,
    pub predicate: SchemaTerm,
}

impl SchemaProp {
    const fn plain(quantifier: SchemaQuant) -> SchemaProp {
        SchemaProp {
            modality: Modality::None,
            outer_negated: false,
            quantifier,
            subject: SchemaTerm::X,
            predicate: SchemaTerm::Y,
        }
    }

    fn is_plain(&self) -> bool {
        self.modality == Modality::None && !self.outer_negated
    }
}

/// A fact licence: a schematic equivalence or implication with a stable id.
#[derive(Clone, Debug)]
pub struct FactLicense {
    pub id: &'static str,
    pub kind: LicenseKind,
    pub lhs: SchemaProp,
    pub rhs: SchemaProp,
}

struct Binding {
    x: Term,
    y: Term,
    q: Option<Quantifier>,
    carried_modality: Modality,
    carried_negation: bool,
}

fn match_side(side: &SchemaProp, p: &Proposition, congruence: bool) -> Option<Binding> {
    let (carried_modality, carried_negation) = if congruence {
        (p.modality, p.outer_negated)
    } else {
        if p.modality != side.modality || p.outer_negated != side.outer_negated {
            return None;
        }
        (Modality::None, false)
    };
    let q = match side.quantifier {
        SchemaQuant::Fixed(f) => {
            if p.quantifier != f {
                return None;
            }
            None
        }
        SchemaQuant::Any => Some(p.quantifier),
        SchemaQuant::NegAny => Some(outer_negation(p.quantifier)),
    };
    let bind = |st: &SchemaTerm, t: &Term| -> Term {
        if st.complemented {
            t.complement()
        } else {
            t.clone()
        }
    };
    let (x, y) = match (side.subject.var, side.predicate.var) {
        (SchemaVar::X, SchemaVar::Y) => (bind(&side.subject, &p.subject), bind(&side.predicate, &p.predicate)),
        (SchemaVar::Y, SchemaVar::X) => (bind(&side.predicate, &p.predicate), bind(&side.subject, &p.subject)),
        _ => unreachable!("licence schemas use each variable once"),
    };
    Some(Binding { x, y, q, carried_modality, carried_negation })
}

fn build_side(side: &SchemaProp, b: &Binding, congruence: bool) -> Proposition {
    let quantifier = match side.quantifier {
        SchemaQuant::Fixed(f) => f,
        SchemaQuant::Any => b.q.expect("schematic licence bound a quantifier"),
        SchemaQuant::NegAny => outer_negation(b.q.expect("schematic licence bound a quantifier")),
    };
    let pick = |st: &SchemaTerm| -> Term {
        let base = match st.var {
            SchemaVar::X => b.x.clone(),
            SchemaVar::Y => b.y.clone(),
        };
        if st.complemented {
            base.complement()
        } else {
            base
        }
    };
    let (modality, outer_negated) = if congruence {
        (b.carried_modality, b.carried_negation)
    } else {
        (side.modality, side.outer_negated)
    };
    Proposition {
        modality,
        outer_negated,
        quantifier,
        subject: pick(&side.subject),
        predicate: pick(&side.predicate),
    }
}

impl FactLicense {
    /// Plain equivalences (inner negation, symmetry) also apply under a
    /// modality or an outer negation, carried through unchanged.
    fn congruent(&self) -> bool {
        self.kind == LicenseKind::Equivalence && self.lhs.is_plain() && self.rhs.is_plain()
    }

    /// Every proposition this equivalence can rewrite `p` into, in either
    /// direction. Empty for implications.
    pub fn prop_rewrites(&self, p: &Proposition) -> Vec<Proposition> {
        if self.kind != LicenseKind::Equivalence {
            return Vec::new();
        }
        let congruence = self.congruent();
        let mut out = Vec::new();
        if let Some(b) = match_side(&self.lhs, p, congruence) {
            out.push(build_side(&self.rhs, &b, congruence));
        }
        if let Some(b) = match_side(&self.rhs, p, congruence) {
            out.push(build_side(&self.lhs, &b, congruence));
        }
        out.retain(|r| r != p);
        out.dedup();
        out
    }

    /// For an implication `lhs -> rhs`: the propositions `pi` such that
    /// `pi -> p` instantiates this licence. Used by antecedent strengthening.
    pub fn strengthenings(&self, p: &Proposition) -> Vec<Proposition> {
        if self.kind != LicenseKind::Implication {
            return Vec::new();
        }
        match_side(&self.rhs, p, false)
            .map(|b| vec![build_side(&self.lhs, &b, false)])
            .unwrap_or_default()
    }

    /// For an implication `lhs -> rhs`: the propositions `pi` such that
    /// `p -> pi` instantiates this licence. Used by subsequent weakening.
    pub fn weakenings(&self, p: &Proposition) -> Vec<Proposition> {
        if self.kind != LicenseKind::Implication {
            return Vec::new();
        }
        match_side(&self.lhs, p, false)
            .map(|b| vec![build_side(&self.rhs, &b, false)])
            .unwrap_or_default()
    }

    /// Concrete (lhs, rhs) instances over atoms `p`, `w`, with schematic
    /// quantifiers expanded over all eight. Used by the semantic audit.
    pub fn instances(&self) -> Vec<(Proposition, Proposition)> {
        let x = Term::plain(TermAtom::new("p"));
        let y = Term::plain(TermAtom::new("w"));
        let schematic = matches!(self.lhs.quantifier, SchemaQuant::Any | SchemaQuant::NegAny)
            || matches!(self.rhs.quantifier, SchemaQuant::Any | SchemaQuant::NegAny);
        let qs: Vec<Option<Quantifier>> = if schematic {
            Quantifier::ALL8.into_iter().map(Some).collect()
        } else {
            vec![None]
        };
        qs.into_iter()
            .map(|q| {
                let b = Binding {
                    x: x.clone(),
                    y: y.clone(),
                    q,
                    carried_modality: Modality::None,
                    carried_negation: false,
                };
                (build_side(&self.lhs, &b, false), build_side(&self.rhs, &b, false))
            })
            .collect()
    }
}

impl fmt::Display for FactLicense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.id)
    }
}

fn equivalence(id: &'static str, lhs: SchemaProp, rhs: SchemaProp) -> FactLicense {
    FactLicense { id, kind: LicenseKind::Equivalence, lhs, rhs }
}

fn implication(id: &'static str, lhs: SchemaProp, rhs: SchemaProp) -> FactLicense {
    FactLicense { id, kind: LicenseKind::Implication, lhs, rhs }
}

fn fixed(q: Quantifier) -> SchemaProp {
    SchemaProp::plain(SchemaQuant::Fixed(q))
}

static LICENSES: LazyLock<Vec<FactLicense>> = LazyLock::new(|| {
    use Quantifier::*;
    let mut t = Vec::with_capacity(32);

    // Inner negation: Q(x,y) <-> Q'(x, non_y).
    let inner_pairs = [
        ("1.1", All),
        ("1.2", No),
        ("1.3", Some),
        ("1.4", NotAll),
        ("1.5", Most),
        ("1.6", FewerThanHalf),
        ("1.7", AtLeastHalf),
        ("1.8", AtMostHalf),
    ];
    for (id, q) in inner_pairs {
        let rhs = SchemaProp {
            quantifier: SchemaQuant::Fixed(inner_negation(q)),
            predicate: SchemaTerm::NOT_Y,
            ..SchemaProp::plain(SchemaQuant::Fixed(q))
        };
        t.push(equivalence(id, fixed(q), rhs));
    }

    // Outer negation: ~Q(x,y) <-> Q'(x,y).
    let outer_pairs = [
        ("2.1", All),
        ("2.2", NotAll),
        ("2.3", No),
        ("2.4", Some),
        ("2.5", Most),
        ("2.6", AtMostHalf),
        ("2.7", FewerThanHalf),
        ("2.8", AtLeastHalf),
    ];
    for (id, q) in outer_pairs {
        let lhs = SchemaProp {
            outer_negated: true,
            ..SchemaProp::plain(SchemaQuant::Fixed(q))
        };
        t.push(equivalence(id, lhs, fixed(outer_negation(q))));
    }

    // Symmetry: some and no commute their arguments.
    for (id, q) in [("3.1", Some), ("3.2", No)] {
        let rhs = SchemaProp {
            subject: SchemaTerm::Y,
            predicate: SchemaTerm::X,
            ..SchemaProp::plain(SchemaQuant::Fixed(q))
        };
        t.push(equivalence(id, fixed(q), rhs));
    }

    // Subordination implications.
    let subs = [
        ("4.1", All, Some),
        ("4.2", No, NotAll),
        ("4.3", All, Most),
        ("4.4", Most, Some),
        ("4.5", AtLeastHalf, Some),
        ("4.6", All, AtLeastHalf),
        ("4.7", AtMostHalf, NotAll),
        ("4.8", FewerThanHalf, NotAll),
        ("4.9", AtLeastHalf, Most),
    ];
    for (id, from, to) in subs {
        t.push(implication(id, fixed(from), fixed(to)));
    }
    let nec = |q| SchemaProp { modality: Modality::Necessary, ..SchemaProp::plain(q) };
    let pos = |q| SchemaProp { modality: Modality::Possible, ..SchemaProp::plain(q) };
    t.push(implication("4.10", nec(SchemaQuant::Any), SchemaProp::plain(SchemaQuant::Any)));
    t.push(implication("4.11", nec(SchemaQuant::Any), pos(SchemaQuant::Any)));
    t.push(implication("4.12", SchemaProp::plain(SchemaQuant::Any), pos(SchemaQuant::Any)));

    // Duality: ~[]Q <-> <>~Q and ~<>Q <-> []~Q.
    t.push(equivalence(
        "5.1",
        SchemaProp { outer_negated: true, ..nec(SchemaQuant::Any) },
        pos(SchemaQuant::NegAny),
    ));
    t.push(equivalence(
        "5.2",
        SchemaProp { outer_negated: true, ..pos(SchemaQuant::Any) },
        nec(SchemaQuant::NegAny),
    ));

    t
});

/// The complete licence table: 8 inner negations, 8 outer negations,
/// 2 symmetries, 12 subordinations, 2 dualities.
pub fn fact_licenses() -> &'static [FactLicense] {
    &LICENSES
}

/// Looks a licence up by its id, e.g. `"4.10"`.
pub fn license(id: &str) -> Option<&'static FactLicense> {
    LICENSES.iter().find(|l| l.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::Term;
    use std::collections::BTreeSet;

    #[test]
    fn negation_table_spot_checks() {
        assert_eq!(negate(Quantifier::All, NegationMode::Inner), Quantifier::No);
        assert_eq!(negate(Quantifier::Most, NegationMode::Outer), Quantifier::AtMostHalf);
        assert_eq!(negate(Quantifier::AtLeastHalf, NegationMode::Inner), Quantifier::AtMostHalf);
        assert_eq!(negate(Quantifier::FewerThanHalf, NegationMode::Outer), Quantifier::AtLeastHalf);
    }

    #[test]
    fn inner_and_outer_are_involutions_and_dual_commutes() {
        for q in Quantifier::ALL8 {
            assert_eq!(negate(negate(q, NegationMode::Inner), NegationMode::Inner), q);
            assert_eq!(negate(negate(q, NegationMode::Outer), NegationMode::Outer), q);
            let io = negate(negate(q, NegationMode::Outer), NegationMode::Inner);
            let oi = negate(negate(q, NegationMode::Inner), NegationMode::Outer);
            assert_eq!(io, oi);
            assert_eq!(negate(q, NegationMode::Dual), io);
        }
    }

    #[test]
    fn squares_partition_the_eight_quantifiers() {
        let mut all_square = BTreeSet::new();
        let mut most_square = BTreeSet::new();
        for q in Quantifier::ALL8 {
            match square_of(q) {
                SquareId::AllSquare => all_square.insert(q),
                SquareId::MostSquare => most_square.insert(q),
            };
            // squares are closed under all three negations
            for mode in [NegationMode::Inner, NegationMode::Outer, NegationMode::Dual] {
                assert_eq!(square_of(negate(q, mode)), square_of(q));
            }
        }
        assert_eq!(all_square.len(), 4);
        assert_eq!(most_square.len(), 4);
    }

    #[test]
    fn licence_table_is_complete_and_stable() {
        let ids: Vec<&str> = fact_licenses().iter().map(|l| l.id).collect();
        let expected: Vec<String> = (1..=8)
            .map(|i| format!("1.{i}"))
            .chain((1..=8).map(|i| format!("2.{i}")))
            .chain((1..=2).map(|i| format!("3.{i}")))
            .chain((1..=12).map(|i| format!("4.{i}")))
            .chain((1..=2).map(|i| format!("5.{i}")))
            .collect();
        assert_eq!(ids.len(), 32);
        assert_eq!(ids, expected.iter().map(String::as_str).collect::<Vec<_>>());
    }

    #[test]
    fn symmetry_licence_swaps_arguments() {
        let some_pw = Proposition::plain(Quantifier::Some, Term::named("p"), Term::named("w"));
        let rewrites = license("3.1").unwrap().prop_rewrites(&some_pw);
        assert_eq!(rewrites.len(), 1);
        assert_eq!(rewrites[0].subject, Term::named("w"));
        assert_eq!(rewrites[0].predicate, Term::named("p"));
        // and under a modality, via congruence
        let mod_some = Proposition::new(
            Modality::Possible,
            Quantifier::Some,
            Term::named("p"),
            Term::named("w"),
        );
        let rewrites = license("3.1").unwrap().prop_rewrites(&mod_some);
        assert_eq!(rewrites.len(), 1);
        assert_eq!(rewrites[0].modality, Modality::Possible);
    }

    #[test]
    fn inner_negation_licence_moves_the_complement_flag() {
        let all_nw = Proposition::plain(Quantifier::All, Term::named("n"), Term::named("w"));
        let rewrites = license("1.1").unwrap().prop_rewrites(&all_nw);
        assert_eq!(rewrites.len(), 1);
        assert_eq!(rewrites[0].quantifier, Quantifier::No);
        assert!(rewrites[0].predicate.complemented);
        // reverse direction: no(n,w) -> all(n,non_w)
        let no_nw = Proposition::plain(Quantifier::No, Term::named("n"), Term::named("w"));
        let back = license("1.1").unwrap().prop_rewrites(&no_nw);
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].quantifier, Quantifier::All);
        assert!(back[0].predicate.complemented);
    }

    #[test]
    fn schematic_implications_instantiate() {
        // 4.10: []Q -> Q; strengthening most(p,n) yields []most(p,n)
        let most = Proposition::plain(Quantifier::Most, Term::named("p"), Term::named("n"));
        let pis = license("4.10").unwrap().strengthenings(&most);
        assert_eq!(pis.len(), 1);
        assert_eq!(pis[0].modality, Modality::Necessary);
        assert_eq!(pis[0].quantifier, Quantifier::Most);
        // 4.9: at_least_half -> most
        let pis = license("4.9").unwrap().strengthenings(&most);
        assert_eq!(pis.len(), 1);
        assert_eq!(pis[0].quantifier, Quantifier::AtLeastHalf);
        // 4.12: Q -> <>Q; weakening some yields <>some
        let some = Proposition::plain(Quantifier::Some, Term::named("p"), Term::named("w"));
        let ws = license("4.12").unwrap().weakenings(&some);
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].modality, Modality::Possible);
    }

    #[test]
    fn duality_licences_fold_negated_modalities() {
        // ~[]most(p,w) <-> <>at_most_half(p,w)
        let neg_nec_most = Proposition::new(
            Modality::Necessary,
            Quantifier::Most,
            Term::named("p"),
            Term::named("w"),
        )
        .negated();
        let rw = license("5.1").unwrap().prop_rewrites(&neg_nec_most);
        assert_eq!(rw.len(), 1);
        assert_eq!(rw[0].modality, Modality::Possible);
        assert_eq!(rw[0].quantifier, Quantifier::AtMostHalf);
        assert!(!rw[0].outer_negated);
    }

    #[test]
    fn schematic_licences_expand_to_eight_instances() {
        assert_eq!(license("4.10").unwrap().instances().len(), 8);
        assert_eq!(license("5.1").unwrap().instances().len(), 8);
        assert_eq!(license("1.1").unwrap().instances().len(), 1);
        assert_eq!(fact_licenses().len(), 32);
    }
}

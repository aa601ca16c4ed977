//! Core syntax: terms, quantifiers, propositions, conditionals, and the
//! mnemonic naming scheme for syllogisms.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::square::{self, NegationMode};

/// A lexical variable naming a set of individuals.
///
/// Names are case-sensitive, non-empty, and may not begin with the reserved
/// complement prefix `non_`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TermAtom(String);

impl TermAtom {
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(!name.is_empty(), "term atom name must be non-empty");
        assert!(
            !name.starts_with("non_"),
            "term atom name may not start with the complement prefix non_"
        );
        TermAtom(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TermAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for TermAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An atom or its complement (the rest of the domain).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Term {
    pub atom: TermAtom,
    pub complemented: bool,
}

impl Term {
    pub fn plain(atom: TermAtom) -> Self {
        Term { atom, complemented: false }
    }

    pub fn named(name: &str) -> Self {
        Term::plain(TermAtom::new(name))
    }

    /// Flips between a term and its complement. An involution.
    pub fn complement(&self) -> Term {
        Term {
            atom: self.atom.clone(),
            complemented: !self.complemented,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            write!(f, "non_{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// The eight quantifiers: the classical square around `all` plus the
/// counting square around `most`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantifier {
    All,
    No,
    Some,
    NotAll,
    Most,
    FewerThanHalf,
    AtLeastHalf,
    AtMostHalf,
}

impl Quantifier {
    pub const ALL8: [Quantifier; 8] = [
        Quantifier::All,
        Quantifier::No,
        Quantifier::Some,
        Quantifier::NotAll,
        Quantifier::Most,
        Quantifier::FewerThanHalf,
        Quantifier::AtLeastHalf,
        Quantifier::AtMostHalf,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::All => "all",
            Quantifier::No => "no",
            Quantifier::Some => "some",
            Quantifier::NotAll => "not_all",
            Quantifier::Most => "most",
            Quantifier::FewerThanHalf => "fewer_than_half",
            Quantifier::AtLeastHalf => "at_least_half",
            Quantifier::AtMostHalf => "at_most_half",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Self> {
        Quantifier::ALL8.into_iter().find(|q| q.keyword() == word)
    }

    pub fn letter(self) -> Letter {
        Letter::of_quantifier(self)
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Modal decoration of a proposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Modality {
    None,
    Necessary,
    Possible,
}

impl Modality {
    /// ASCII rendering: `[]` for necessity, `<>` for possibility.
    pub fn token(self) -> &'static str {
        match self {
            Modality::None => "",
            Modality::Necessary => "[]",
            Modality::Possible => "<>",
        }
    }
}

/// One-letter proposition codes: `A E I O` for the classical square,
/// `M F S H` for the counting square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    E,
    I,
    O,
    M,
    F,
    S,
    H,
}

impl Letter {
    pub const ALL8: [Letter; 8] = [
        Letter::A,
        Letter::E,
        Letter::I,
        Letter::O,
        Letter::M,
        Letter::F,
        Letter::S,
        Letter::H,
    ];

    /// The classical four.
    pub const CLASSICAL: [Letter; 4] = [Letter::A, Letter::E, Letter::I, Letter::O];

    pub fn quantifier(self) -> Quantifier {
        match self {
            Letter::A => Quantifier::All,
            Letter::E => Quantifier::No,
            Letter::I => Quantifier::Some,
            Letter::O => Quantifier::NotAll,
            Letter::M => Quantifier::Most,
            Letter::F => Quantifier::FewerThanHalf,
            Letter::S => Quantifier::AtLeastHalf,
            Letter::H => Quantifier::AtMostHalf,
        }
    }

    pub fn of_quantifier(q: Quantifier) -> Letter {
        match q {
            Quantifier::All => Letter::A,
            Quantifier::No => Letter::E,
            Quantifier::Some => Letter::I,
            Quantifier::NotAll => Letter::O,
            Quantifier::Most => Letter::M,
            Quantifier::FewerThanHalf => Letter::F,
            Quantifier::AtLeastHalf => Letter::S,
            Quantifier::AtMostHalf => Letter::H,
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        Letter::ALL8.into_iter().find(|l| l.char() == c)
    }

    pub fn char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::E => 'E',
            Letter::I => 'I',
            Letter::O => 'O',
            Letter::M => 'M',
            Letter::F => 'F',
            Letter::S => 'S',
            Letter::H => 'H',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.char())
    }
}

/// Placement pattern of the middle term across major and minor premise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Figure {
    One,
    Two,
    Three,
    Four,
}

impl Figure {
    pub const ALL4: [Figure; 4] = [Figure::One, Figure::Two, Figure::Three, Figure::Four];

    pub fn digit(self) -> u8 {
        match self {
            Figure::One => 1,
            Figure::Two => 2,
            Figure::Three => 3,
            Figure::Four => 4,
        }
    }

    pub fn from_digit(d: u8) -> Option<Figure> {
        Figure::ALL4.into_iter().find(|f| f.digit() == d)
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digit())
    }
}

/// A modality-decorated quantified statement over two terms.
///
/// `outer_negated` is sentential negation written outside the modality, as in
/// `~<>some(p,w)`. Negation directly on the quantifier needs no separate
/// form: the eight quantifiers are closed under it, so [`Proposition::canonical`]
/// folds every negation away.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Proposition {
    pub modality: Modality,
    pub outer_negated: bool,
    pub quantifier: Quantifier,
    pub subject: Term,
    pub predicate: Term,
}

impl Proposition {
    pub fn new(modality: Modality, quantifier: Quantifier, subject: Term, predicate: Term) -> Self {
        Proposition {
            modality,
            outer_negated: false,
            quantifier,
            subject,
            predicate,
        }
    }

    pub fn plain(quantifier: Quantifier, subject: Term, predicate: Term) -> Self {
        Proposition::new(Modality::None, quantifier, subject, predicate)
    }

    /// Toggles the outer negation.
    pub fn negated(&self) -> Proposition {
        let mut p = self.clone();
        p.outer_negated = !p.outer_negated;
        p
    }

    /// Negation-free form. `~Q` folds through the outer-negation table;
    /// `~[]Q` and `~<>Q` fold through modal duality into `<>` and `[]` of
    /// the outer-negated quantifier.
    pub fn canonical(&self) -> Proposition {
        if !self.outer_negated {
            return self.clone();
        }
        let quantifier = square::negate(self.quantifier, NegationMode::Outer);
        let modality = match self.modality {
            Modality::None => Modality::None,
            Modality::Necessary => Modality::Possible,
            Modality::Possible => Modality::Necessary,
        };
        Proposition {
            modality,
            outer_negated: false,
            quantifier,
            subject: self.subject.clone(),
            predicate: self.predicate.clone(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<TermAtom> {
        [self.subject.atom.clone(), self.predicate.atom.clone()].into()
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.outer_negated {
            f.write_str("~")?;
        }
        write!(
            f,
            "{}{}({},{})",
            self.modality.token(),
            self.quantifier,
            self.subject,
            self.predicate
        )
    }
}

/// One or two conjoined premises entailing a conclusion. Every syllogism and
/// every derivation step has this shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ConditionalWff {
    premises: Vec<Proposition>,
    conclusion: Proposition,
}

impl ConditionalWff {
    pub fn new(premises: Vec<Proposition>, conclusion: Proposition) -> Self {
        assert!(
            (1..=2).contains(&premises.len()),
            "a conditional has one or two premises"
        );
        ConditionalWff { premises, conclusion }
    }

    pub fn syllogism_of(major: Proposition, minor: Proposition, conclusion: Proposition) -> Self {
        ConditionalWff::new(vec![major, minor], conclusion)
    }

    pub fn premises(&self) -> &[Proposition] {
        &self.premises
    }

    pub fn conclusion(&self) -> &Proposition {
        &self.conclusion
    }

    pub fn propositions(&self) -> impl Iterator<Item = &Proposition> {
        self.premises.iter().chain(std::iter::once(&self.conclusion))
    }

    /// Rebuilds the wff with the proposition at `index` replaced.
    /// Premises come first; the last index is the conclusion.
    pub fn with_proposition(&self, index: usize, prop: Proposition) -> ConditionalWff {
        let mut w = self.clone();
        if index < w.premises.len() {
            w.premises[index] = prop;
        } else {
            w.conclusion = prop;
        }
        w
    }

    pub fn atoms(&self) -> BTreeSet<TermAtom> {
        self.propositions().flat_map(|p| p.atoms()).collect()
    }

    /// Views the conditional as a figured syllogism, or explains why it is
    /// not one.
    pub fn syllogism(&self) -> Result<Syllogism<'_>, NotSyllogismShaped> {
        if self.premises.len() != 2 {
            return Err(NotSyllogismShaped("needs exactly two premises".into()));
        }
        let subject = self.conclusion.subject.atom.clone();
        let predicate = self.conclusion.predicate.atom.clone();
        if subject == predicate {
            return Err(NotSyllogismShaped(
                "conclusion relates a term atom to itself".into(),
            ));
        }
        let atoms = self.atoms();
        if atoms.len() != 3 {
            return Err(NotSyllogismShaped(format!(
                "a syllogism spans exactly three term atoms, found {}",
                atoms.len()
            )));
        }
        let middle = atoms
            .iter()
            .find(|a| **a != subject && **a != predicate)
            .cloned()
            .expect("three atoms with two named by the conclusion leave one middle");
        let mut other = Vec::with_capacity(2);
        for prem in &self.premises {
            let pa = prem.atoms();
            if pa.len() != 2 {
                return Err(NotSyllogismShaped(
                    "premise relates a term atom to itself".into(),
                ));
            }
            if !pa.contains(&middle) {
                return Err(NotSyllogismShaped(
                    "middle term must occur in both premises".into(),
                ));
            }
            other.push(pa.into_iter().find(|a| *a != middle).unwrap());
        }
        let major_index = if other[0] == predicate && other[1] == subject {
            0
        } else if other[0] == subject && other[1] == predicate {
            1
        } else {
            return Err(NotSyllogismShaped(
                "each conclusion term must occur in exactly one premise".into(),
            ));
        };
        let major = &self.premises[major_index];
        let minor = &self.premises[1 - major_index];
        let major_predicate_first = major.subject.atom == predicate;
        let minor_middle_first = minor.subject.atom == middle;
        let figure = match (major_predicate_first, minor_middle_first) {
            (false, false) => Figure::One,
            (true, false) => Figure::Two,
            (false, true) => Figure::Three,
            (true, true) => Figure::Four,
        };
        Ok(Syllogism {
            major,
            minor,
            major_index,
            middle,
            subject,
            predicate,
            figure,
        })
    }

    /// Deterministic normal form: negations folded away, premises ordered
    /// major-then-minor when syllogism-shaped (lexicographically otherwise).
    /// Idempotent; used for deduplication and replay comparison.
    pub fn canonicalize(&self) -> ConditionalWff {
        let premises: Vec<Proposition> = self.premises.iter().map(|p| p.canonical()).collect();
        let conclusion = self.conclusion.canonical();
        let mut w = ConditionalWff { premises, conclusion };
        if w.premises.len() == 2 {
            match w.syllogism() {
                Ok(view) if view.major_index == 1 => w.premises.swap(0, 1),
                Ok(_) => {}
                Err(_) => w.premises.sort(),
            }
        }
        w
    }
}

impl fmt::Display for ConditionalWff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, " -> {}", self.conclusion)
    }
}

/// A conditional decomposed into syllogistic roles.
#[derive(Clone, Debug)]
pub struct Syllogism<'a> {
    /// The premise containing the conclusion's predicate atom.
    pub major: &'a Proposition,
    /// The premise containing the conclusion's subject atom.
    pub minor: &'a Proposition,
    /// Index of the major premise in the premise list.
    pub major_index: usize,
    pub middle: TermAtom,
    pub subject: TermAtom,
    pub predicate: TermAtom,
    pub figure: Figure,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("not syllogism-shaped: {0}")]
pub struct NotSyllogismShaped(pub String);

/// The figure (1-4) of a syllogism-shaped conditional.
pub fn figure_of(w: &ConditionalWff) -> Result<Figure, NotSyllogismShaped> {
    Ok(w.syllogism()?.figure)
}

/// Free-function form of [`ConditionalWff::canonicalize`].
pub fn canonicalize(w: &ConditionalWff) -> ConditionalWff {
    w.canonicalize()
}

/// Letter/figure/modality code such as `AMI-1` or `[]E[]M<>O-4`.
///
/// Letter order is major, minor, conclusion, regardless of the order the
/// premises happen to be written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mnemonic {
    pub major_mod: Modality,
    pub major_letter: Letter,
    pub minor_mod: Modality,
    pub minor_letter: Letter,
    pub concl_mod: Modality,
    pub concl_letter: Letter,
    pub figure: Figure,
}

impl fmt::Display for Mnemonic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}{}{}{}-{}",
            self.major_mod.token(),
            self.major_letter,
            self.minor_mod.token(),
            self.minor_letter,
            self.concl_mod.token(),
            self.concl_letter,
            self.figure
        )
    }
}

impl Serialize for Mnemonic {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prop(q: Quantifier, s: &str, p: &str) -> Proposition {
        Proposition::plain(q, Term::named(s), Term::named(p))
    }

    fn ami1() -> ConditionalWff {
        ConditionalWff::syllogism_of(
            prop(Quantifier::All, "n", "w"),
            prop(Quantifier::Most, "p", "n"),
            prop(Quantifier::Some, "p", "w"),
        )
    }

    #[test]
    fn complement_is_an_involution() {
        let w = Term::named("w");
        let non_w = w.complement();
        assert!(non_w.complemented);
        assert_eq!(non_w.atom, w.atom);
        assert_eq!(non_w.complement(), w);
        let n = Term::named("n");
        assert_eq!(n.complement().complement(), n);
    }

    #[test]
    fn figure_of_named_instances() {
        // all(n,w) & most(p,n) -> some(p,w) is first figure
        assert_eq!(figure_of(&ami1()).unwrap(), Figure::One);
        // no(p,w) & most(p,n) -> not_all(n,w) is third figure
        let emo3 = ConditionalWff::syllogism_of(
            prop(Quantifier::No, "p", "w"),
            prop(Quantifier::Most, "p", "n"),
            prop(Quantifier::NotAll, "n", "w"),
        );
        assert_eq!(figure_of(&emo3).unwrap(), Figure::Three);
        // most(p,n) & all(n,w) -> some(w,p) is fourth figure
        let mai4 = ConditionalWff::syllogism_of(
            prop(Quantifier::Most, "p", "n"),
            prop(Quantifier::All, "n", "w"),
            prop(Quantifier::Some, "w", "p"),
        );
        assert_eq!(figure_of(&mai4).unwrap(), Figure::Four);
        // no(p,w) & all(n,w) -> at_most_half(p,n) is second figure
        let aeh2 = ConditionalWff::syllogism_of(
            prop(Quantifier::No, "p", "w"),
            prop(Quantifier::All, "n", "w"),
            prop(Quantifier::AtMostHalf, "p", "n"),
        );
        assert_eq!(figure_of(&aeh2).unwrap(), Figure::Two);
    }

    #[test]
    fn complement_flags_share_the_atom_for_figure_purposes() {
        // no(n,non_w) & most(p,n) -> not_all(p,non_w): figure 1 over atoms n,p,w
        let emo1 = ConditionalWff::syllogism_of(
            Proposition::plain(Quantifier::No, Term::named("n"), Term::named("w").complement()),
            prop(Quantifier::Most, "p", "n"),
            Proposition::plain(
                Quantifier::NotAll,
                Term::named("p"),
                Term::named("w").complement(),
            ),
        );
        assert_eq!(figure_of(&emo1).unwrap(), Figure::One);
    }

    #[test]
    fn shape_errors() {
        let one_premise = ConditionalWff::new(
            vec![prop(Quantifier::All, "n", "w")],
            prop(Quantifier::Some, "n", "w"),
        );
        assert!(one_premise.syllogism().is_err());

        // four atoms
        let scattered = ConditionalWff::syllogism_of(
            prop(Quantifier::All, "a", "b"),
            prop(Quantifier::All, "c", "d"),
            prop(Quantifier::Some, "a", "d"),
        );
        assert!(scattered.syllogism().is_err());

        // middle missing from one premise
        let nomiddle = ConditionalWff::syllogism_of(
            prop(Quantifier::All, "s", "p"),
            prop(Quantifier::All, "m", "s"),
            prop(Quantifier::Some, "s", "p"),
        );
        assert!(nomiddle.syllogism().is_err());
    }

    #[test]
    fn canonicalize_eliminates_outer_negation() {
        // ~some(p,w) -> no(p,w)
        let negated = prop(Quantifier::Some, "p", "w").negated();
        let canon = negated.canonical();
        assert_eq!(canon.quantifier, Quantifier::No);
        assert!(!canon.outer_negated);
        // ~[]all -> <>not_all, ~<>some -> []no
        let nec = Proposition::new(
            Modality::Necessary,
            Quantifier::All,
            Term::named("p"),
            Term::named("w"),
        )
        .negated()
        .canonical();
        assert_eq!((nec.modality, nec.quantifier), (Modality::Possible, Quantifier::NotAll));
        let pos = Proposition::new(
            Modality::Possible,
            Quantifier::Some,
            Term::named("p"),
            Term::named("w"),
        )
        .negated()
        .canonical();
        assert_eq!((pos.modality, pos.quantifier), (Modality::Necessary, Quantifier::No));
    }

    #[test]
    fn canonicalize_orders_major_premise_first() {
        let swapped = ConditionalWff::syllogism_of(
            prop(Quantifier::Most, "p", "n"),
            prop(Quantifier::All, "n", "w"),
            prop(Quantifier::Some, "p", "w"),
        );
        assert_eq!(swapped.canonicalize(), ami1());
    }

    #[test]
    fn canonicalize_is_idempotent_on_fixed_cases() {
        for w in [
            ami1(),
            ConditionalWff::new(
                vec![prop(Quantifier::Some, "b", "a").negated()],
                prop(Quantifier::No, "a", "b"),
            ),
        ] {
            let once = w.canonicalize();
            assert_eq!(once.canonicalize(), once);
        }
    }

    #[test]
    fn mnemonic_display() {
        let m = Mnemonic {
            major_mod: Modality::Necessary,
            major_letter: Letter::E,
            minor_mod: Modality::Necessary,
            minor_letter: Letter::M,
            concl_mod: Modality::Possible,
            concl_letter: Letter::O,
            figure: Figure::Four,
        };
        assert_eq!(m.to_string(), "[]E[]M<>O-4");
    }
}

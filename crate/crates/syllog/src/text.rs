//! Text frontend: the proposition DSL, mnemonic codes, proof scripts, and
//! discourse files.
//!
//! ASCII encodings throughout: `[]` for necessity, `<>` for possibility,
//! `~` for negation, `&` and `->` for the connectives, and a `non_` prefix
//! for complemented terms, so corpus files stay typeable and diff-friendly.

use std::fmt;

use thiserror::Error;

use crate::ast::{
    ConditionalWff, Figure, Letter, Mnemonic, Modality, NotSyllogismShaped, Proposition,
    Quantifier, Term, TermAtom,
};
use crate::discourse::Discourse;
use crate::kernel::{DerivationScript, Justification, LicenseRef, ScriptStep, StepId};

/// A parse error with a 1-based position into the offending input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct SourceError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Result of [`parse_wff`]: the grammar admits both conditionals and bare
/// propositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedFormula {
    Conditional(ConditionalWff),
    Proposition(Proposition),
}

impl ParsedFormula {
    pub fn into_conditional(self) -> Option<ConditionalWff> {
        match self {
            ParsedFormula::Conditional(w) => Some(w),
            ParsedFormula::Proposition(_) => None,
        }
    }
}

impl fmt::Display for ParsedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedFormula::Conditional(w) => write!(f, "{w}"),
            ParsedFormula::Proposition(p) => write!(f, "{p}"),
        }
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn new(text: &str, line: usize, col: usize) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0, line, col }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t' | '\r' | '\n')) {
            self.bump();
        }
    }

    fn err(&self, message: impl Into<String>) -> SourceError {
        SourceError { line: self.line, column: self.col, message: message.into() }
    }

    fn expect(&mut self, c: char) -> Result<(), SourceError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), SourceError> {
        let (line, col) = (self.line, self.col);
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.err("expected a name")),
        }
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok((s, line, col))
    }

    fn modality(&mut self) -> Result<Option<Modality>, SourceError> {
        match (self.peek(), self.peek_at(1)) {
            (Some('['), Some(']')) => {
                self.bump();
                self.bump();
                Ok(Some(Modality::Necessary))
            }
            (Some('<'), Some('>')) => {
                self.bump();
                self.bump();
                Ok(Some(Modality::Possible))
            }
            (Some('[') | Some('<'), _) => Err(self.err("expected `[]` or `<>`")),
            _ => Ok(None),
        }
    }

    fn term(&mut self) -> Result<Term, SourceError> {
        let (word, line, col) = self.ident()?;
        if let Some(rest) = word.strip_prefix("non_") {
            if rest.is_empty() {
                return Err(SourceError { line, column: col, message: "empty term name after the complement prefix".into() });
            }
            if rest.starts_with("non_") {
                return Err(SourceError { line, column: col, message: "nested complement prefix; complement is an involution, write the plain term".into() });
            }
            Ok(Term { atom: TermAtom::new(rest), complemented: true })
        } else {
            Ok(Term::plain(TermAtom::new(word)))
        }
    }

    fn proposition(&mut self) -> Result<Proposition, SourceError> {
        self.skip_ws();
        let mut outer_negated = false;
        while self.peek() == Some('~') {
            self.bump();
            self.skip_ws();
            outer_negated = !outer_negated;
        }
        let mut modality = self.modality()?.unwrap_or(Modality::None);
        self.skip_ws();
        let (mut word, mut wline, mut wcol) = self.ident()?;
        if modality == Modality::None && (word == "nec" || word == "pos") {
            self.skip_ws();
            if self.peek() != Some('(') {
                modality = if word == "nec" { Modality::Necessary } else { Modality::Possible };
                (word, wline, wcol) = self.ident()?;
            }
        }
        let quantifier = Quantifier::from_keyword(&word).ok_or(SourceError {
            line: wline,
            column: wcol,
            message: format!("unknown quantifier `{word}`"),
        })?;
        self.skip_ws();
        self.expect('(')?;
        self.skip_ws();
        let subject = self.term()?;
        self.skip_ws();
        if self.peek() != Some(',') {
            return Err(self.err("expected `,`: quantifiers take exactly two terms"));
        }
        self.bump();
        self.skip_ws();
        let predicate = self.term()?;
        self.skip_ws();
        if self.peek() != Some(')') {
            return Err(self.err("expected `)`: quantifiers take exactly two terms"));
        }
        self.bump();
        Ok(Proposition { modality, outer_negated, quantifier, subject, predicate })
    }
}

fn parse_wff_at(text: &str, line: usize, col: usize) -> Result<ParsedFormula, SourceError> {
    let mut cur = Cursor::new(text, line, col);
    let first = cur.proposition()?;
    cur.skip_ws();
    let parsed = match cur.peek() {
        None => ParsedFormula::Proposition(first),
        Some('&') => {
            cur.bump();
            let second = cur.proposition()?;
            cur.skip_ws();
            cur.expect('-')?;
            cur.expect('>')?;
            let conclusion = cur.proposition()?;
            ParsedFormula::Conditional(ConditionalWff::new(vec![first, second], conclusion))
        }
        Some('-') => {
            cur.bump();
            cur.expect('>')?;
            let conclusion = cur.proposition()?;
            ParsedFormula::Conditional(ConditionalWff::new(vec![first], conclusion))
        }
        Some(c) => return Err(cur.err(format!("unexpected `{c}` after a proposition"))),
    };
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.err("unexpected trailing input"));
    }
    Ok(parsed)
}

/// Parses a formula: `prop`, `prop -> prop`, or `prop & prop -> prop`.
pub fn parse_wff(text: &str) -> Result<ParsedFormula, SourceError> {
    parse_wff_at(text, 1, 1)
}

/// Canonical text of a conditional; `parse_wff(print_wff(w))` structurally
/// equals `canonicalize(w)`.
pub fn print_wff(w: &ConditionalWff) -> String {
    w.canonicalize().to_string()
}

fn parse_mnemonic_at(text: &str, line: usize, col: usize) -> Result<Mnemonic, SourceError> {
    let mut cur = Cursor::new(text, line, col);
    cur.skip_ws();
    let mut slots = Vec::with_capacity(3);
    for _ in 0..3 {
        let modality = cur.modality()?.unwrap_or(Modality::None);
        match cur.peek() {
            Some(c) => {
                if let Some(letter) = Letter::from_char(c) {
                    cur.bump();
                    slots.push((modality, letter));
                } else {
                    return Err(cur.err(format!("unknown letter `{c}`")));
                }
            }
            None => return Err(cur.err("expected a proposition letter")),
        }
    }
    cur.expect('-')?;
    let figure = match cur.peek() {
        Some(c @ '1'..='4') => {
            cur.bump();
            Figure::from_digit(c as u8 - b'0').unwrap()
        }
        _ => return Err(cur.err("expected a figure digit 1-4")),
    };
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.err("unexpected trailing input after the figure"));
    }
    Ok(Mnemonic {
        major_mod: slots[0].0,
        major_letter: slots[0].1,
        minor_mod: slots[1].0,
        minor_letter: slots[1].1,
        concl_mod: slots[2].0,
        concl_letter: slots[2].1,
        figure,
    })
}

/// Parses a mnemonic such as `AMI-1` or `[]E[]M<>O-4`.
pub fn parse_mnemonic(text: &str) -> Result<Mnemonic, SourceError> {
    parse_mnemonic_at(text, 1, 1)
}

/// Role atoms per figure: (middle, conclusion subject, conclusion predicate).
/// Chosen to reproduce the source instances: figure 1 matches AMI-1 exactly,
/// figure 2 AEH-2, figures 3 and 4 EMO-3 and its converses.
fn role_atoms(figure: Figure) -> (&'static str, &'static str, &'static str) {
    match figure {
        Figure::One => ("n", "p", "w"),
        Figure::Two => ("w", "p", "n"),
        Figure::Three | Figure::Four => ("p", "n", "w"),
    }
}

/// The schema a mnemonic names, over fixed role atoms, major premise first.
pub fn expand_mnemonic(m: &Mnemonic) -> ConditionalWff {
    let (middle, subject, predicate) = role_atoms(m.figure);
    let (mid, sub, pred) = (Term::named(middle), Term::named(subject), Term::named(predicate));
    let major = {
        let (s, p) = match m.figure {
            Figure::One | Figure::Three => (mid.clone(), pred.clone()),
            Figure::Two | Figure::Four => (pred.clone(), mid.clone()),
        };
        Proposition::new(m.major_mod, m.major_letter.quantifier(), s, p)
    };
    let minor = {
        let (s, p) = match m.figure {
            Figure::One | Figure::Two => (sub.clone(), mid.clone()),
            Figure::Three | Figure::Four => (mid.clone(), sub.clone()),
        };
        Proposition::new(m.minor_mod, m.minor_letter.quantifier(), s, p)
    };
    let conclusion = Proposition::new(m.concl_mod, m.concl_letter.quantifier(), sub, pred);
    ConditionalWff::syllogism_of(major, minor, conclusion)
}

/// Names a syllogism-shaped conditional, if it instantiates a mnemonic
/// schema. Atoms whose every occurrence is complemented count as plain (the
/// schema over `non_w` is the schema over a fresh atom); a mixed-flag atom
/// fits no schema and yields `None`.
pub fn name_of(w: &ConditionalWff) -> Option<Mnemonic> {
    let canon = w.canonicalize();
    let view = canon.syllogism().ok()?;
    let mut always: std::collections::BTreeMap<&TermAtom, bool> = Default::default();
    for prop in canon.propositions() {
        for term in [&prop.subject, &prop.predicate] {
            *always.entry(&term.atom).or_insert(true) &= term.complemented;
        }
    }
    for prop in canon.propositions() {
        for term in [&prop.subject, &prop.predicate] {
            if term.complemented && !always[&term.atom] {
                return None;
            }
        }
    }
    Some(Mnemonic {
        major_mod: view.major.modality,
        major_letter: view.major.quantifier.letter(),
        minor_mod: view.minor.modality,
        minor_letter: view.minor.quantifier.letter(),
        concl_mod: canon.conclusion().modality,
        concl_letter: canon.conclusion().quantifier.letter(),
        figure: view.figure,
    })
}

/// Script and discourse file errors.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error("line {line}: step {step} cites step {cited}, which is not defined earlier")]
    DanglingReference { line: usize, step: StepId, cited: StepId },
}

/// Splits a line on `|`, keeping the 1-based column of each field's start.
fn split_fields(line: &str) -> Vec<(String, usize)> {
    let mut fields = Vec::new();
    let mut current = String::new();
    let mut start = 1;
    let mut col = 0;
    for c in line.chars() {
        col += 1;
        if c == '|' {
            fields.push((current.clone(), start));
            current.clear();
            start = col + 1;
        } else {
            current.push(c);
        }
    }
    fields.push((current, start));
    fields
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn field_err(line: usize, column: usize, message: impl Into<String>) -> SourceError {
    SourceError { line, column, message: message.into() }
}

fn parse_step_ref(arg: &str, line: usize, col: usize) -> Result<StepId, SourceError> {
    arg.trim()
        .parse::<StepId>()
        .map_err(|_| field_err(line, col, format!("expected a step id, got `{}`", arg.trim())))
}

fn looks_like_fact_id(arg: &str) -> bool {
    arg.contains('.')
}

fn parse_justification(field: &str, line: usize, col: usize) -> Result<Justification, SourceError> {
    let text = field.trim();
    let open = text
        .find('(')
        .ok_or_else(|| field_err(line, col, "justification needs arguments in parentheses"))?;
    if !text.ends_with(')') {
        return Err(field_err(line, col, "unbalanced parentheses in justification"));
    }
    let kind = &text[..open];
    let args: Vec<&str> = {
        let inner = &text[open + 1..text.len() - 1];
        if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(str::trim).collect()
        }
    };
    let arity = |n: usize| -> Result<(), SourceError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(field_err(line, col, format!("{kind} takes {n} argument(s), got {}", args.len())))
        }
    };
    match kind {
        "axiom" => {
            arity(1)?;
            if args[0] != "A2" {
                return Err(field_err(line, col, "axiom justification must cite A2"));
            }
            Ok(Justification::Axiom)
        }
        "rule1" | "rule2" => {
            arity(2)?;
            let input = parse_step_ref(args[0], line, col)?;
            let license = if looks_like_fact_id(args[1]) {
                LicenseRef::Fact(args[1].to_string())
            } else {
                LicenseRef::Step(parse_step_ref(args[1], line, col)?)
            };
            Ok(if kind == "rule1" {
                Justification::Rule1 { input, license }
            } else {
                Justification::Rule2 { input, license }
            })
        }
        "rule3" => {
            arity(1)?;
            Ok(Justification::Rule3 { input: parse_step_ref(args[0], line, col)? })
        }
        "d3" => {
            arity(1)?;
            Ok(Justification::D3 { input: parse_step_ref(args[0], line, col)? })
        }
        "converse" => {
            arity(2)?;
            Ok(Justification::Converse {
                input: parse_step_ref(args[0], line, col)?,
                license: args[1].to_string(),
            })
        }
        "rewrite" => {
            if args.len() < 2 {
                return Err(field_err(line, col, "rewrite takes a step id and at least one licence"));
            }
            Ok(Justification::Rewrite {
                input: parse_step_ref(args[0], line, col)?,
                licenses: args[1..].iter().map(|s| s.to_string()).collect(),
            })
        }
        other => Err(field_err(line, col, format!("unknown justification kind `{other}`"))),
    }
}

fn parse_name_field(field: &str, line: usize, col: usize) -> Result<Mnemonic, SourceError> {
    let text = field.trim();
    let rest = text
        .strip_prefix("name=")
        .ok_or_else(|| field_err(line, col, "expected `name=MNEMONIC`"))?;
    parse_mnemonic_at(rest, line, col)
}

/// Parses a proof script: one step per line, `ID | WFF | JUST [| name=MNEMONIC]`,
/// `#` comments. Ids must strictly increase and references must point backward.
pub fn parse_proof_script(text: &str) -> Result<DerivationScript, ScriptError> {
    let mut steps: Vec<ScriptStep> = Vec::new();
    let mut seen: std::collections::BTreeSet<StepId> = Default::default();
    let mut last_id: Option<StepId> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let fields = split_fields(line);
        if !(3..=4).contains(&fields.len()) {
            return Err(field_err(
                line_no,
                1,
                "expected `ID | WFF | JUSTIFICATION [| name=MNEMONIC]`",
            )
            .into());
        }
        let (id_field, id_col) = &fields[0];
        let id: StepId = id_field
            .trim()
            .parse()
            .map_err(|_| field_err(line_no, *id_col, format!("expected a step id, got `{}`", id_field.trim())))?;
        if let Some(prev) = last_id {
            if id <= prev {
                return Err(field_err(
                    line_no,
                    *id_col,
                    format!("step ids must be strictly increasing ({id} after {prev})"),
                )
                .into());
            }
        }
        let (wff_field, wff_col) = &fields[1];
        let leading = wff_field.len() - wff_field.trim_start().len();
        let parsed = parse_wff_at(wff_field.trim(), line_no, wff_col + leading)?;
        let wff = parsed.into_conditional().ok_or_else(|| {
            field_err(line_no, *wff_col, "a derivation step must be a conditional")
        })?;
        let (just_field, just_col) = &fields[2];
        let justification = parse_justification(just_field, line_no, *just_col)?;
        for cited in justification.cited_steps() {
            if !seen.contains(&cited) {
                return Err(ScriptError::DanglingReference { line: line_no, step: id, cited });
            }
        }
        let name = match fields.get(3) {
            Some((name_field, name_col)) => Some(parse_name_field(name_field, line_no, *name_col)?),
            None => None,
        };
        seen.insert(id);
        last_id = Some(id);
        steps.push(ScriptStep { id, wff, justification, name });
    }
    Ok(DerivationScript { steps })
}

/// Parses a discourse file: one syllogism per line, `WFF [| name=MNEMONIC]`.
/// The chain link is implicit (each conclusion should recur as a premise of
/// the next line; checking that is the discourse module's job).
pub fn parse_discourse(text: &str) -> Result<Discourse, SourceError> {
    let mut links = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let fields = split_fields(line);
        if !(1..=2).contains(&fields.len()) {
            return Err(field_err(line_no, 1, "expected `WFF [| name=MNEMONIC]`"));
        }
        let (wff_field, wff_col) = &fields[0];
        let leading = wff_field.len() - wff_field.trim_start().len();
        let parsed = parse_wff_at(wff_field.trim(), line_no, wff_col + leading)?;
        let wff = parsed
            .into_conditional()
            .ok_or_else(|| field_err(line_no, *wff_col, "a discourse line must be a conditional"))?;
        let name = match fields.get(1) {
            Some((name_field, name_col)) => Some(parse_name_field(name_field, line_no, *name_col)?),
            None => None,
        };
        links.push((name, wff));
    }
    if links.is_empty() {
        return Err(field_err(1, 1, "a discourse needs at least one syllogism"));
    }
    Ok(Discourse { links })
}

/// Convenience: a syllogism-shape check usable as a filter.
pub fn is_syllogism_shaped(w: &ConditionalWff) -> Result<(), NotSyllogismShaped> {
    w.syllogism().map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_conditional(text: &str) -> ConditionalWff {
        parse_wff(text).unwrap().into_conditional().unwrap()
    }

    #[test]
    fn parses_the_seed_syllogism() {
        let w = parse_conditional("all(n,w) & most(p,n) -> some(p,w)");
        assert_eq!(w.premises().len(), 2);
        assert_eq!(w.premises()[0].quantifier, Quantifier::All);
        assert_eq!(w.conclusion().quantifier, Quantifier::Some);
        assert_eq!(name_of(&w).unwrap().to_string(), "AMI-1");
    }

    #[test]
    fn parses_modalities_and_negations() {
        let w = parse_conditional("[]no(p,w) & most(p,n) -> <>not_all(n,w)");
        assert_eq!(w.premises()[0].modality, Modality::Necessary);
        assert_eq!(w.conclusion().modality, Modality::Possible);
        assert_eq!(name_of(&w).unwrap().to_string(), "[]EM<>O-3");

        let keywords = parse_conditional("nec no(p,w) & most(p,n) -> pos not_all(n,w)");
        assert_eq!(keywords, w);

        let negated = parse_wff("~<>some(p,w)").unwrap();
        match negated {
            ParsedFormula::Proposition(p) => {
                assert!(p.outer_negated);
                assert_eq!(p.modality, Modality::Possible);
            }
            _ => panic!("expected a bare proposition"),
        }
    }

    #[test]
    fn complement_terms_round_trip() {
        let w = parse_conditional("no(n,non_w) & most(p,n) -> not_all(p,non_w)");
        assert!(w.premises()[0].predicate.complemented);
        assert_eq!(print_wff(&w), "no(n,non_w) & most(p,n) -> not_all(p,non_w)");
        assert_eq!(name_of(&w).unwrap().to_string(), "EMO-1");
    }

    #[test]
    fn arity_error_points_into_the_input() {
        let err = parse_wff("most(p)").unwrap_err();
        assert_eq!(err.line, 1);
        assert!((1..=7).contains(&err.column), "column {} out of range", err.column);
        assert!(err.message.contains("two terms"));
    }

    #[test]
    fn unknown_quantifier_and_unbalanced_parens() {
        let err = parse_wff("every(p,w)").unwrap_err();
        assert!(err.message.contains("unknown quantifier"));
        let err = parse_wff("some(p,w").unwrap_err();
        assert!(err.message.contains(")"));
        let err = parse_wff("all(p,w) & most(p,n)").unwrap_err();
        assert!(err.message.contains("-"));
    }

    #[test]
    fn print_then_parse_is_canonical_form() {
        let swapped = parse_conditional("most(p,n) & all(n,w) -> some(p,w)");
        let printed = print_wff(&swapped);
        assert_eq!(printed, "all(n,w) & most(p,n) -> some(p,w)");
        let reparsed = parse_conditional(&printed);
        assert_eq!(reparsed, swapped.canonicalize());
    }

    #[test]
    fn mnemonic_parsing() {
        let m = parse_mnemonic("AMI-1").unwrap();
        assert_eq!(
            (m.major_letter, m.minor_letter, m.concl_letter, m.figure),
            (Letter::A, Letter::M, Letter::I, Figure::One)
        );
        assert_eq!(m.major_mod, Modality::None);

        let m = parse_mnemonic("[]E[]M<>O-4").unwrap();
        assert_eq!(m.major_mod, Modality::Necessary);
        assert_eq!(m.concl_mod, Modality::Possible);
        assert_eq!(m.figure, Figure::Four);

        let err = parse_mnemonic("AXI-1").unwrap_err();
        assert!(err.message.contains("unknown letter `X`"));
        assert_eq!(err.column, 2);

        assert!(parse_mnemonic("AMI-5").is_err());
        assert!(parse_mnemonic("AMI").is_err());
    }

    #[test]
    fn expansion_matches_the_source_instances() {
        let ami1 = expand_mnemonic(&parse_mnemonic("AMI-1").unwrap());
        assert_eq!(ami1.to_string(), "all(n,w) & most(p,n) -> some(p,w)");

        let aeh2 = expand_mnemonic(&parse_mnemonic("AEH-2").unwrap());
        assert_eq!(aeh2.to_string(), "all(n,w) & no(p,w) -> at_most_half(p,n)");

        let boxed = expand_mnemonic(&parse_mnemonic("[]E[]M<>O-4").unwrap());
        assert_eq!(boxed.to_string(), "[]no(w,p) & []most(p,n) -> <>not_all(n,w)");
    }

    #[test]
    fn naming_is_inverse_to_expansion() {
        for text in ["AAA-1", "<>MM<>I-1", "EAH-1", "A<>I<>I-1", "[]E[]A<>O-2"] {
            let m = parse_mnemonic(text).unwrap();
            assert_eq!(name_of(&expand_mnemonic(&m)), Some(m), "round-trip of {text}");
        }
    }

    #[test]
    fn naming_named_instances_from_other_atom_sets() {
        let aaa1 = parse_conditional("all(k,z) & all(c,k) -> all(c,z)");
        assert_eq!(name_of(&aaa1).unwrap().to_string(), "AAA-1");
        let mmii = parse_conditional("<>most(p,r) & most(c,p) -> <>some(c,r)");
        assert_eq!(name_of(&mmii).unwrap().to_string(), "<>MM<>I-1");
        // a bare non-syllogism has no name
        let w = parse_wff("all(n,w)").unwrap();
        assert!(w.into_conditional().is_none());
        let mixed = parse_conditional("all(n,w) & most(p,n) -> some(p,non_w)");
        assert_eq!(name_of(&mixed), None);
    }

    #[test]
    fn proof_script_lines_parse() {
        let script = parse_proof_script(
            "# a header comment\n\
             1 | all(n,w) & most(p,n) -> some(p,w) | axiom(A2)\n\
             2 | all(n,w) & most(p,n) -> some(w,p) | converse(1, 3.1) | name=MAI-4\n\
             3 | ~some(p,w) & all(n,w) -> ~most(p,n) | rule3(1)\n\
             4 | no(p,w) & all(n,w) -> at_most_half(p,n) | rewrite(3, 2.4, 2.5) | name=AEH-2\n",
        )
        .unwrap();
        assert_eq!(script.steps.len(), 4);
        assert_eq!(script.steps[1].name.unwrap().to_string(), "MAI-4");
        assert!(matches!(
            script.steps[3].justification,
            Justification::Rewrite { input: 3, .. }
        ));
    }

    #[test]
    fn dangling_and_misordered_references_are_errors() {
        let err = parse_proof_script(
            "1 | all(n,w) & most(p,n) -> some(p,w) | axiom(A2)\n\
             5 | all(n,w) & most(p,n) -> some(w,p) | rule3(9)\n",
        )
        .unwrap_err();
        assert!(matches!(
            err,
            ScriptError::DanglingReference { line: 2, step: 5, cited: 9 }
        ));

        let err = parse_proof_script(
            "2 | all(n,w) & most(p,n) -> some(p,w) | axiom(A2)\n\
             2 | all(n,w) & most(p,n) -> some(w,p) | converse(2, 3.1)\n",
        )
        .unwrap_err();
        assert!(matches!(err, ScriptError::Source(e) if e.message.contains("strictly increasing")));
    }

    #[test]
    fn discourse_files_parse_and_empty_is_an_error() {
        let d = parse_discourse(
            "all(k,z) & all(c,k) -> all(c,z) | name=AAA-1\n\
             most(z,p) & all(c,z) -> most(c,p) | name=MAM-1\n",
        )
        .unwrap();
        assert_eq!(d.links.len(), 2);
        assert_eq!(d.links[0].0.unwrap().to_string(), "AAA-1");

        let single = parse_discourse("all(k,z) & all(c,k) -> all(c,z)\n").unwrap();
        assert_eq!(single.links.len(), 1);

        assert!(parse_discourse("# nothing here\n").is_err());
        assert!(parse_discourse("").is_err());
    }
}

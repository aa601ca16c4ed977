//! Validation of nested syllogistic discourse chains: each conclusion must
//! recur as a premise of the next syllogism, and the whole discourse is
//! valid exactly when every link is structurally chained and semantically
//! valid.

use rayon::prelude::*;
use serde::Serialize;

use crate::ast::{ConditionalWff, Mnemonic};
use crate::semantics::{check_validity, SearchBounds, SemanticsError, Verdict, VerdictStatus};

/// An ordered chain of named syllogisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discourse {
    pub links: Vec<(Option<Mnemonic>, ConditionalWff)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscourseStatus {
    Valid,
    Invalid,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkVerdict {
    pub index: usize,
    pub name: Option<Mnemonic>,
    /// Whether the previous conclusion recurs (canonically) among this
    /// link's premises. The first link is trivially chained.
    pub structural_ok: bool,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscourseVerdict {
    pub overall: DiscourseStatus,
    pub links: Vec<LinkVerdict>,
}

/// Checks chaining and per-link validity. A broken link is reported as
/// `structural_ok = false` on the offending link, not as an error.
pub fn check_discourse(d: &Discourse, b: &SearchBounds) -> Result<DiscourseVerdict, SemanticsError> {
    let verdicts: Result<Vec<Verdict>, SemanticsError> = d
        .links
        .par_iter()
        .map(|(_, wff)| check_validity(wff, b))
        .collect();
    let verdicts = verdicts?;
    let mut links = Vec::with_capacity(d.links.len());
    for (index, ((name, wff), verdict)) in d.links.iter().zip(verdicts).enumerate() {
        let structural_ok = if index == 0 {
            true
        } else {
            let prev_conclusion = d.links[index - 1].1.conclusion().canonical();
            wff.premises()
                .iter()
                .any(|p| p.canonical() == prev_conclusion)
        };
        links.push(LinkVerdict { index, name: *name, structural_ok, verdict });
    }
    let overall = if links
        .iter()
        .all(|l| l.structural_ok && l.verdict.status == VerdictStatus::ValidUpToBound)
    {
        DiscourseStatus::Valid
    } else {
        DiscourseStatus::Invalid
    };
    Ok(DiscourseVerdict { overall, links })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_discourse;

    #[test]
    fn barbara_composed_with_itself_is_valid() {
        let d = parse_discourse(
            "all(k,z) & all(c,k) -> all(c,z)\n\
             all(z,r) & all(c,z) -> all(c,r)\n",
        )
        .unwrap();
        let v = check_discourse(&d, &SearchBounds::default()).unwrap();
        assert_eq!(v.overall, DiscourseStatus::Valid);
        assert!(v.links.iter().all(|l| l.structural_ok));
    }

    #[test]
    fn a_broken_chain_is_structurally_flagged() {
        let d = parse_discourse(
            "all(k,z) & all(c,k) -> all(c,z)\n\
             all(z,r) & all(x,z) -> all(x,r)\n",
        )
        .unwrap();
        let v = check_discourse(&d, &SearchBounds::default()).unwrap();
        assert_eq!(v.overall, DiscourseStatus::Invalid);
        assert!(v.links[0].structural_ok);
        assert!(!v.links[1].structural_ok);
        // both links are individually valid; only the chaining is broken
        assert!(v
            .links
            .iter()
            .all(|l| l.verdict.status == VerdictStatus::ValidUpToBound));
    }

    #[test]
    fn premise_order_does_not_matter_for_chaining() {
        let d = parse_discourse(
            "all(k,z) & all(c,k) -> all(c,z)\n\
             all(c,z) & all(z,r) -> all(c,r)\n",
        )
        .unwrap();
        let v = check_discourse(&d, &SearchBounds::default()).unwrap();
        assert_eq!(v.overall, DiscourseStatus::Valid);
    }

    #[test]
    fn one_invalid_link_sinks_the_discourse() {
        let d = parse_discourse(
            "all(k,z) & all(c,k) -> all(c,z)\n\
             most(z,p) & all(c,z) -> most(c,p)\n",
        )
        .unwrap();
        let v = check_discourse(&d, &SearchBounds::default()).unwrap();
        assert_eq!(v.overall, DiscourseStatus::Invalid);
        assert!(v.links[1].structural_ok);
        assert_eq!(v.links[1].verdict.status, VerdictStatus::Invalid);
        assert!(v.links[1].verdict.countermodel.is_some());
    }
}

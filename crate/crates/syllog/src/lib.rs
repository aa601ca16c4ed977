//! A reasoning engine for classical, generalized, and generalized modal
//! syllogisms over the quantifier squares around `all` and `most`.
//!
//! Three legs:
//!
//! - a proof kernel that replays derivation scripts and mines the closure of
//!   the seed syllogism AMI-1 under three deductive rules and a licence table
//!   ([`kernel`], [`corpus`]);
//! - a finite Kripke-model semantics with exhaustive countermodel search
//!   under counting interpretations of the quantifiers ([`semantics`]);
//! - a text frontend for formulas, mnemonic codes like `AMI-1`, proof
//!   scripts, and discourse files ([`text`], [`discourse`]).

pub mod ast;
pub mod corpus;
pub mod discourse;
pub mod kernel;
pub mod semantics;
pub mod square;
pub mod text;

pub use ast::{
    canonicalize, figure_of, ConditionalWff, Figure, Letter, Mnemonic, Modality,
    NotSyllogismShaped, Proposition, Quantifier, Term, TermAtom,
};
pub use semantics::{
    check_validity, find_countermodel, holds, KripkeModel, SearchBounds, SemanticsError, Verdict,
    VerdictStatus, World,
};
pub use square::{fact_licenses, license, negate, square_of, FactLicense, LicenseKind, NegationMode, SquareId};
pub use text::{parse_mnemonic, parse_wff, print_wff, SourceError};

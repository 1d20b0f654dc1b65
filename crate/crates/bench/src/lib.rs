//! Shared inputs for the kernel benchmarks.

use sn_core::calculus::{Kernel, System, Tableau};
use sn_core::cutelim::CutInstance;
use sn_core::embedding::CnProof;
use sn_core::polarity::PartRef;
use sn_core::search::{prove, SearchBudget};
use sn_core::syntax::parse_sequent;

/// Goals of increasing size that bounded search proves within the default budget.
pub const GOALS: &[(&str, System)] = &[
    ("A |- A", System::Sn),
    ("A & B |- B | C", System::Sn),
    ("~(A | B) & A |-", System::Pcn),
    ("forall x. x = 0 |- 0 = 0 & 1 = 0", System::Sn),
    ("(A & B) & ~(B & A) |-", System::Pcn),
    ("|- exists x. x + 1 = 2", System::Sn),
];

pub const MP_FIXTURE: &str = r#"[{"axiom": "2.25", "formula": "0 + 0 = 0"},
  {"axiom": "2.11a", "formula": "0 + 0 = 0 -> 0 = 1 -> 0 + 0 = 0"},
  {"mp": [1, 2]}]"#;

pub fn proof_of(k: &Kernel, src: &str, system: System) -> Tableau {
    let s = parse_sequent(src).expect("benchmark goals parse");
    prove(k, &s, system, SearchBudget::default()).proof().unwrap_or_else(|| panic!("no proof of {src}"))
}

/// A cut on `A & B` between `(A & B) & ~B |-` and `~(A & B) & (A & B) |-`.
pub fn conjunction_cut(k: &Kernel) -> CutInstance {
    let left = proof_of(k, "(A & B) & ~B |-", System::Pcn);
    let right = proof_of(k, "~(A & B) & (A & B) |-", System::Pcn);
    let left_part = PartRef::parse_in("ant:/and.left", &left.seq).expect("valid part");
    let right_part = PartRef::parse_in("ant:/and.left/neg", &right.seq).expect("valid part");
    CutInstance { left, right, left_part, right_part }
}

pub fn mp_fixture() -> CnProof {
    CnProof::from_json(MP_FIXTURE).expect("fixture parses")
}

//! Axioms, reduction rules, proof trees and the checker.

mod axioms;
mod check;
mod json;
mod oracle;
mod rules;
mod tableau;

pub use axioms::{AxiomKind, AxiomMatch, AxiomOutcome, Kernel};
pub use check::{least_system, Verdict};
pub use json::{from_json, to_json};
pub use oracle::{decide_axiom8, OracleConfig, Verdict8};
pub use rules::{apply_rule, apply_tracked, apply_tracked_unchecked, Arg, ArgKind, Child, Conn3, RuleId, System};
pub use tableau::{by_rule, Fresh, Just, Tableau};

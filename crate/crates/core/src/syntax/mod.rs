//! Object language: terms, formulas, sequents, their text form and evaluation.

mod equiv;
mod formula;
mod parse;
mod print;
mod signature;
mod term;

pub use equiv::{alpha_eq, equivalent};
pub use formula::{Formula, Sequent, EQ};
pub use parse::{parse_formula, parse_sequent, parse_term};
pub use signature::{FnEval, PredEval, Signature};
pub use term::{sym, Sym, Term, ADD, MUL};

/// Parse helper for tests and fixtures; panics on malformed input.
pub fn f(src: &str) -> Formula {
    parse_formula(src).unwrap_or_else(|e| panic!("bad formula `{src}`: {e}"))
}

/// Parse helper for tests and fixtures; panics on malformed input.
pub fn seq(src: &str) -> Sequent {
    parse_sequent(src).unwrap_or_else(|e| panic!("bad sequent `{src}`: {e}"))
}

/// Parse helper for tests and fixtures; panics on malformed input.
pub fn t(src: &str) -> Term {
    parse_term(src).unwrap_or_else(|e| panic!("bad term `{src}`: {e}"))
}

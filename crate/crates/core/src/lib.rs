//! Proof kernel for the strong-negation tableau systems SN, PCN and FN of
//! constructive arithmetic without induction.

pub mod calculus;
pub mod cutelim;
pub mod embedding;
pub mod error;
pub mod metatheory;
pub mod polarity;
pub mod search;
pub mod syntax;

pub use error::{Error, Result};

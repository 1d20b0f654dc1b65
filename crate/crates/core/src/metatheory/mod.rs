//! Proof transformations: each takes checked proofs and returns a proof of
//! the transformed sequent, or a typed error when the input is outside the
//! transformation's domain.

mod extract;
mod pairs;
pub(crate) mod replay;
mod shift;
mod structural;
mod subst;

pub use extract::{xf_disjunction, xf_witness, Disjunct};
pub use pairs::{equality_sequent, extended_axiom_sequent, xf_equality, xf_equality_in, xf_extended_axiom, xf_extended_axiom_in};
pub use shift::{xf_fn_drop_imp, xf_fn_prime, xf_fn_to_pcn, xf_impfree_to_pcn, xf_neg_right, xf_shift_right};
pub use structural::{
    detach, inversion_premises, xf_contract, xf_interchange, xf_invert, xf_thin, xf_translate, xf_untranslate, xf_weaken_into,
};
pub use subst::{rename_apart, xf_substitute};
pub(crate) use subst::subst_tree;

/// Catalogue entry for a transformation, as listed by the command line tool.
#[derive(Clone, Copy, Debug)]
pub struct XformInfo {
    pub name: &'static str,
    pub input: &'static str,
    pub output: &'static str,
    /// Output size in terms of input size, when bounded.
    pub size_bound: &'static str,
}

pub const XFORMS: &[XformInfo] = &[
    XformInfo { name: "substitute", input: "S", output: "S[x:=t]", size_bound: "equal" },
    XformInfo { name: "invert", input: "S with a non-retention part", output: "one premise", size_bound: "at most input" },
    XformInfo { name: "contract", input: "S with two copies of a part", output: "S with one copy", size_bound: "at most input" },
    XformInfo { name: "thin", input: "S minus a part", output: "S", size_bound: "at most input" },
    XformInfo { name: "translate", input: "F[A] |- G", output: "F[;] and A |- G", size_bound: "input plus splits" },
    XformInfo { name: "untranslate", input: "F[;] and A |- G", output: "F[A] |- G", size_bound: "input plus splits" },
    XformInfo { name: "interchange", input: "F[A,B]", output: "F[B,A]", size_bound: "input plus splits" },
    XformInfo { name: "disjunction", input: "G |- H[A]", output: "G |- H[;] or G |- A", size_bound: "unbounded" },
    XformInfo { name: "witness", input: "G |- H[Ex A(x)]", output: "G |- H[A(t)]", size_bound: "unbounded" },
    XformInfo { name: "shift-right", input: "G |- H[A]", output: "G and ~A |- H[;]", size_bound: "input plus splits" },
    XformInfo { name: "neg-right", input: "F[A] |-", output: "F[;] |- ~A", size_bound: "input plus splits" },
    XformInfo { name: "fn-prime", input: "F[P] |- in FN", output: "F[;] |- ~P in FN", size_bound: "input plus splits" },
    XformInfo { name: "fn-to-pcn", input: "G |- in FN", output: "G |- in PCN", size_bound: "equal" },
    XformInfo { name: "impfree-to-pcn", input: "G |- in SN, implication free", output: "G |- in PCN", size_bound: "equal" },
    XformInfo { name: "fn-drop-imp", input: "F[A->B] |- in FN", output: "F[;] |- in PCN", size_bound: "at most input" },
    XformInfo { name: "extended-axiom", input: "equivalent A, B", output: "A |- B and variants", size_bound: "linear in length" },
    XformInfo { name: "equality", input: "s=t, A(x)", output: "s=t and A(s) |- A(t) and variants", size_bound: "linear in length" },
];

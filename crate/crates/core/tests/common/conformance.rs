//! Table of hand-traced rule and axiom cases.
//!
//! Expected premises were derived by hand from the rule schemata and are
//! compared structurally (both sides parsed), so spacing is irrelevant.

use sn_core::calculus::{apply_rule, Arg, AxiomKind, Kernel, RuleId, System, Tableau};
use sn_core::polarity::PartRef;
use sn_core::syntax::{parse_sequent, parse_term, sym};
use sn_core::Error;

pub enum Expect {
    Premises(&'static [&'static str]),
    Fails(&'static str),
}

pub struct RuleCase {
    pub rule: RuleId,
    pub seq: &'static str,
    pub part: &'static str,
    /// `""`, `"t=<term>"` or `"b=<variable>"`.
    pub arg: &'static str,
    pub expect: Expect,
}

use Expect::{Fails, Premises};
use RuleId::*;

const fn ok(rule: RuleId, seq: &'static str, part: &'static str, arg: &'static str, out: &'static [&'static str]) -> RuleCase {
    RuleCase { rule, seq, part, arg, expect: Premises(out) }
}

const fn bad(rule: RuleId, seq: &'static str, part: &'static str, arg: &'static str, err: &'static str) -> RuleCase {
    RuleCase { rule, seq, part, arg, expect: Fails(err) }
}

pub const RULE_CASES: &[RuleCase] = &[
    ok(AndNegL, "~(A & B) |-", "ant:/neg", "", &["~A |-", "~B |-"]),
    ok(AndNegL, "C & ~(A & B) |- D", "ant:/and.right/neg", "", &["C & ~A |- D", "C & ~B |- D"]),
    ok(AndNegL, "~(C | (A & B)) |-", "ant:/neg/or.right", "", &["~(C | A) |-", "~(C | B) |-"]),
    ok(AndNegL, "~~~(A & B) |-", "ant:/neg/neg/neg", "", &["~~~A |-", "~~~B |-"]),
    bad(AndNegL, "A & B |-", "ant:/", "", "WrongShape"),
    bad(AndNegL, "|- ~(A & B)", "suc:/neg", "", "WrongShape"),
    bad(AndNegL, "~(A | B) |-", "ant:/neg", "", "WrongShape"),
    ok(AndPosR, "|- A & B", "suc:/", "", &["|- A", "|- B"]),
    ok(AndPosR, "C |- D | (A & B)", "suc:/or.right", "", &["C |- D | A", "C |- D | B"]),
    ok(AndPosR, "|- ~~(A & B)", "suc:/neg/neg", "", &["|- ~~A", "|- ~~B"]),
    bad(AndPosR, "|- ~(A & B)", "suc:/neg", "", "WrongShape"),
    bad(AndPosR, "A & B |-", "ant:/", "", "WrongShape"),
    bad(AndPosR, "|- A | B", "suc:/", "", "WrongShape"),
    ok(OrPosL, "A | B |-", "ant:/", "", &["A |-", "B |-"]),
    ok(OrPosL, "C & (A | B) |- D", "ant:/and.right", "", &["C & A |- D", "C & B |- D"]),
    ok(OrPosL, "~~(A | B) |-", "ant:/neg/neg", "", &["~~A |-", "~~B |-"]),
    bad(OrPosL, "~(A | B) |-", "ant:/neg", "", "WrongShape"),
    bad(OrPosL, "|- A | B", "suc:/", "", "WrongShape"),
    bad(OrPosL, "A & B |-", "ant:/", "", "WrongShape"),
    ok(OrNegR, "|- ~(A | B)", "suc:/neg", "", &["|- ~A", "|- ~B"]),
    ok(OrNegR, "C |- D | ~(A | B)", "suc:/or.right/neg", "", &["C |- D | ~A", "C |- D | ~B"]),
    ok(OrNegR, "|- ~(C & (A | B))", "suc:/neg/and.right", "", &["|- ~(C & A)", "|- ~(C & B)"]),
    bad(OrNegR, "|- A | B", "suc:/", "", "WrongShape"),
    bad(OrNegR, "~(A | B) |-", "ant:/neg", "", "WrongShape"),
    bad(OrNegR, "|- ~(A & B)", "suc:/neg", "", "WrongShape"),
    ok(ImpPosL, "A -> B |-", "ant:/", "", &["A -> B |- A", "(A -> B) & B |-"]),
    ok(ImpPosL, "C & (A -> B) |- D", "ant:/and.right", "", &["C & (A -> B) |- D | A", "(C & (A -> B)) & B |- D"]),
    ok(ImpPosL, "~~(A -> B) |- D", "ant:/neg/neg", "", &["~~(A -> B) |- D | A", "~~(A -> B) & B |- D"]),
    bad(ImpPosL, "|- A -> B", "suc:/", "", "WrongShape"),
    bad(ImpPosL, "~(A -> B) |-", "ant:/neg", "", "WrongShape"),
    bad(ImpPosL, "A & B |-", "ant:/", "", "WrongShape"),
    ok(ImpPosR, "|- A -> B", "suc:/", "", &["A |- B"]),
    ok(ImpPosR, "C |- A -> B", "suc:/", "", &["C & A |- B"]),
    ok(ImpPosR, "C |- D | (A -> B)", "suc:/or.right", "", &["C & A |- B"]),
    bad(ImpPosR, "A -> B |-", "ant:/", "", "WrongShape"),
    bad(ImpPosR, "|- ~(A -> B)", "suc:/neg", "", "WrongShape"),
    bad(ImpPosR, "|- A | B", "suc:/", "", "WrongShape"),
    ok(ImpNegR, "|- ~(A -> B)", "suc:/neg", "", &["|- A", "|- ~B"]),
    ok(ImpNegR, "C |- D | ~(A -> B)", "suc:/or.right/neg", "", &["C |- D | A", "C |- D | ~B"]),
    ok(ImpNegR, "|- ~(D & (A -> B))", "suc:/neg/and.right", "", &["|- ~D | A", "|- ~(D & B)"]),
    bad(ImpNegR, "|- A -> B", "suc:/", "", "WrongShape"),
    bad(ImpNegR, "~(A -> B) |-", "ant:/neg", "", "WrongShape"),
    bad(ImpNegR, "|- ~(A & B)", "suc:/neg", "", "WrongShape"),
    ok(AllPosL, "forall x. x = 0 |-", "ant:/", "t=0", &["(forall x. x = 0) & 0 = 0 |-"]),
    ok(AllPosL, "C & (forall x. x = 1) |- D", "ant:/and.right", "t=1", &["(C & (forall x. x = 1)) & 1 = 1 |- D"]),
    ok(AllPosL, "~~(forall x. x = y) |-", "ant:/neg/neg", "t=y", &["~~(forall x. x = y) & y = y |-"]),
    bad(AllPosL, "~(forall x. x = 0) |-", "ant:/neg", "t=0", "WrongShape"),
    bad(AllPosL, "|- forall x. x = 0", "suc:/", "t=0", "WrongShape"),
    bad(AllPosL, "forall x. x = 0 |-", "ant:/", "", "MissingArgument"),
    bad(AllPosL, "exists x. x = 0 |-", "ant:/", "t=0", "WrongShape"),
    ok(AllNegL, "~(forall x. x = 0) |-", "ant:/neg", "b=b", &["~(b = 0) |-"]),
    ok(AllNegL, "C & ~(forall x. x = y) |- D", "ant:/and.right/neg", "b=b", &["C & ~(b = y) |- D"]),
    ok(AllNegL, "~(C | (forall x. x = 1)) |-", "ant:/neg/or.right", "b=b", &["~(C | b = 1) |-"]),
    bad(AllNegL, "forall x. x = 0 |-", "ant:/", "b=b", "WrongShape"),
    bad(AllNegL, "~(forall x. x = b) |-", "ant:/neg", "b=b", "EigenNotFresh"),
    bad(AllNegL, "~(forall x. x = 0) |-", "ant:/neg", "t=0", "MissingArgument"),
    bad(AllNegL, "|- ~(forall x. x = 0)", "suc:/neg", "b=b", "WrongShape"),
    ok(AllPosR, "|- forall x. x = x", "suc:/", "b=b", &["|- b = b"]),
    ok(AllPosR, "C |- forall x. x = 0", "suc:/", "b=b", &["C |- b = 0"]),
    ok(AllPosR, "C |- D | (forall x. x = 0)", "suc:/or.right", "b=b", &["C |- b = 0"]),
    bad(AllPosR, "|- ~(forall x. x = 0)", "suc:/neg", "b=b", "WrongShape"),
    bad(AllPosR, "b = 0 |- forall x. x = 0", "suc:/", "b=b", "EigenNotFresh"),
    bad(AllPosR, "forall x. x = 0 |-", "ant:/", "b=b", "WrongShape"),
    bad(AllPosR, "|- exists x. x = 0", "suc:/", "b=b", "WrongShape"),
    ok(AllNegR, "|- ~(forall x. x = 0)", "suc:/neg", "t=1", &["|- ~(forall x. x = 0) | ~(1 = 0)"]),
    ok(AllNegR, "C |- D | ~(forall x. x = 0)", "suc:/or.right/neg", "t=0", &["C |- (D | ~(forall x. x = 0)) | ~(0 = 0)"]),
    ok(AllNegR, "|- ~(D & (forall x. x = 2))", "suc:/neg/and.right", "t=2", &["|- ~(D & (forall x. x = 2)) | ~(2 = 2)"]),
    bad(AllNegR, "|- forall x. x = 0", "suc:/", "t=0", "WrongShape"),
    bad(AllNegR, "~(forall x. x = 0) |-", "ant:/neg", "t=0", "WrongShape"),
    bad(AllNegR, "|- ~(forall x. x = 0)", "suc:/neg", "b=c", "MissingArgument"),
    ok(ExPosL, "exists x. x = 0 |-", "ant:/", "b=b", &["b = 0 |-"]),
    ok(ExPosL, "C & (exists x. x = y) |- D", "ant:/and.right", "b=b", &["C & b = y |- D"]),
    ok(ExPosL, "~~(exists x. x = 1) |-", "ant:/neg/neg", "b=b", &["~~(b = 1) |-"]),
    bad(ExPosL, "~(exists x. x = 0) |-", "ant:/neg", "b=b", "WrongShape"),
    bad(ExPosL, "(exists x. x = 0) & b = 1 |-", "ant:/and.left", "b=b", "EigenNotFresh"),
    bad(ExPosL, "|- exists x. x = 0", "suc:/", "b=b", "WrongShape"),
    bad(ExPosL, "exists x. x = 0 |-", "ant:/", "", "MissingArgument"),
    ok(ExNegL, "~(exists x. x = 0) |-", "ant:/neg", "t=0", &["~(exists x. x = 0) & ~(0 = 0) |-"]),
    ok(ExNegL, "C & ~(exists x. x = 1) |- D", "ant:/and.right/neg", "t=1", &["(C & ~(exists x. x = 1)) & ~(1 = 1) |- D"]),
    ok(ExNegL, "~(C | (exists x. x = y)) |-", "ant:/neg/or.right", "t=y", &["~(C | (exists x. x = y)) & ~(y = y) |-"]),
    bad(ExNegL, "exists x. x = 0 |-", "ant:/", "t=0", "WrongShape"),
    bad(ExNegL, "|- ~(exists x. x = 0)", "suc:/neg", "t=0", "WrongShape"),
    bad(ExNegL, "~(forall x. x = 0) |-", "ant:/neg", "t=0", "WrongShape"),
    ok(ExPosR, "|- exists x. x = 1", "suc:/", "t=1", &["|- (exists x. x = 1) | 1 = 1"]),
    ok(ExPosR, "C |- D | (exists x. x = 0)", "suc:/or.right", "t=0", &["C |- (D | (exists x. x = 0)) | 0 = 0"]),
    ok(ExPosR, "|- ~~(exists x. x = y)", "suc:/neg/neg", "t=y", &["|- ~~(exists x. x = y) | y = y"]),
    bad(ExPosR, "|- ~(exists x. x = 0)", "suc:/neg", "t=0", "WrongShape"),
    bad(ExPosR, "exists x. x = 0 |-", "ant:/", "t=0", "WrongShape"),
    bad(ExPosR, "|- exists x. x = 0", "suc:/", "", "MissingArgument"),
    ok(ExNegR, "|- ~(exists x. x = 0)", "suc:/neg", "b=b", &["|- ~(b = 0)"]),
    ok(ExNegR, "C |- D | ~(exists x. x = 1)", "suc:/or.right/neg", "b=b", &["C |- ~(b = 1)"]),
    ok(ExNegR, "|- ~(D & (exists x. x = y))", "suc:/neg/and.right", "b=b", &["|- ~(b = y)"]),
    bad(ExNegR, "|- exists x. x = 0", "suc:/", "b=b", "WrongShape"),
    bad(ExNegR, "b = 1 |- ~(exists x. x = 0)", "suc:/neg", "b=b", "EigenNotFresh"),
    bad(ExNegR, "~(exists x. x = 0) |-", "ant:/neg", "b=b", "WrongShape"),
];

fn arg_of(text: &str) -> Arg {
    if let Some(t) = text.strip_prefix("t=") {
        Arg::Term(parse_term(t).expect("table terms parse"))
    } else if let Some(b) = text.strip_prefix("b=") {
        Arg::Eigen(sym(b))
    } else {
        Arg::None
    }
}

fn kind(e: &Error) -> String {
    format!("{e:?}").split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

/// `Err` describes the first disagreement with the table.
pub fn run_rule_case(c: &RuleCase) -> Result<(), String> {
    let s = parse_sequent(c.seq).map_err(|e| format!("{}: {e}", c.seq))?;
    let got = PartRef::parse_in(c.part, &s).map_err(|e| e.to_string()).and_then(|p| {
        apply_rule(&s, c.rule, &p, &arg_of(c.arg)).map_err(|e| kind(&e))
    });
    match (&c.expect, got) {
        (Premises(want), Ok(kids)) => {
            let want: Vec<_> = want.iter().map(|w| parse_sequent(w).expect("table premises parse")).collect();
            if want == kids {
                Ok(())
            } else {
                Err(format!("{} on `{}`: expected {want:?}, got {kids:?}", c.rule, c.seq))
            }
        }
        (Premises(_), Err(e)) => Err(format!("{} on `{}` failed: {e}", c.rule, c.seq)),
        (Fails(k), Err(e)) if e == *k => Ok(()),
        (Fails(k), Err(e)) => Err(format!("{} on `{}`: expected {k}, got {e}", c.rule, c.seq)),
        (Fails(k), Ok(kids)) => Err(format!("{} on `{}`: expected {k}, got {kids:?}", c.rule, c.seq)),
    }
}

pub struct AxiomCase {
    pub kind: AxiomKind,
    pub seq: &'static str,
    pub holds: bool,
}

const fn ax(kind: AxiomKind, seq: &'static str, holds: bool) -> AxiomCase {
    AxiomCase { kind, seq, holds }
}

use AxiomKind::*;

pub const AXIOM_CASES: &[AxiomCase] = &[
    ax(Ax1, "~(0 = 0) |-", true),
    ax(Ax1, "A & ~(1 + 1 = 2) |-", true),
    ax(Ax1, "~(0 = 0) |- B", true),
    ax(Ax1, "0 = 0 |-", false),
    ax(Ax1, "~(0 = 1) |-", false),
    ax(Ax1, "|- ~(0 = 0)", false),
    ax(Ax2, "0 = 1 |-", true),
    ax(Ax2, "~~(1 = 0) |-", true),
    ax(Ax2, "A & 2 = 3 |- B", true),
    ax(Ax2, "0 = 0 |-", false),
    ax(Ax2, "~(0 = 1) |-", false),
    ax(Ax2, "|- 0 = 1", false),
    ax(Ax3, "|- 0 = 0", true),
    ax(Ax3, "A |- B | 1 = 1", true),
    ax(Ax3, "|- ~~(2 = 2)", true),
    ax(Ax3, "|- 0 = 1", false),
    ax(Ax3, "0 = 0 |-", false),
    ax(Ax3, "|- ~(0 = 0)", false),
    ax(Ax4, "|- ~(0 = 1)", true),
    ax(Ax4, "A |- ~(1 = 2) | B", true),
    ax(Ax4, "|- ~(s(0) = 0)", true),
    ax(Ax4, "|- ~(0 = 0)", false),
    ax(Ax4, "|- 0 = 1", false),
    ax(Ax4, "~(0 = 1) |-", false),
    ax(Ax5, "A & ~A |-", true),
    ax(Ax5, "0 + 1 = 1 & ~(1 = 1) |-", true),
    ax(Ax5, "P & ~(Q | P) |-", true),
    ax(Ax5, "A & ~B |-", false),
    ax(Ax5, "A & A |-", false),
    ax(Ax5, "x = 0 & ~(y = 0) |-", false),
    ax(Ax6, "A |- A", true),
    ax(Ax6, "A & B |- C | B", true),
    ax(Ax6, "x = 1 + 1 |- x = 2", true),
    ax(Ax6, "x = 1 |- x = 1", true),
    ax(Ax6, "A |- B", false),
    ax(Ax6, "~A |- A", false),
    ax(Ax6, "A |- ~A", false),
    ax(Ax7, "~A |- ~A", true),
    ax(Ax7, "~(A | B) |- ~B", true),
    ax(Ax7, "~(1 + 1 = 0) |- ~(2 = 0)", true),
    ax(Ax7, "~A |- A", false),
    ax(Ax7, "A |- A", false),
    ax(Ax7, "~A |- ~B", false),
    ax(Ax8, "|- x = x", true),
    ax(Ax8, "~(x + 0 = x) |-", true),
    ax(Ax8, "~~(s(x) = 0) |-", true),
    ax(Ax8, "|- x = 0", false),
    ax(Ax8, "|- 0 = 0", false),
    ax(Ax8, "x = y |-", false),
];

pub fn run_axiom_case(k: &Kernel, c: &AxiomCase) -> Result<(), String> {
    let s = parse_sequent(c.seq).map_err(|e| e.to_string())?;
    let got = k.check_axiom(&s, c.kind, System::Sn);
    match (c.holds, got) {
        (true, Ok(None)) | (false, Err(_)) => Ok(()),
        (true, Ok(Some(w))) => Err(format!("{} on `{}` only accepted on trust: {w}", c.kind, c.seq)),
        (true, Err(e)) => Err(format!("{} should close `{}`: {e}", c.kind, c.seq)),
        (false, Ok(_)) => Err(format!("{} should not close `{}`", c.kind, c.seq)),
    }
}

/// One-step proofs whose premises are axioms; `pcn` and `fn_ok` say whether
/// the proof must be accepted in those systems.
pub struct SystemCase {
    pub rule: RuleId,
    pub seq: &'static str,
    pub part: &'static str,
    pub arg: &'static str,
    pub pcn: bool,
    pub fn_ok: bool,
}

const fn sys(rule: RuleId, seq: &'static str, part: &'static str, arg: &'static str, pcn: bool, fn_ok: bool) -> SystemCase {
    SystemCase { rule, seq, part, arg, pcn, fn_ok }
}

pub const SYSTEM_CASES: &[SystemCase] = &[
    sys(AndNegL, "A & ~(A & A) |-", "ant:/and.right/neg", "", true, true),
    sys(AndNegL, "~(0 = 0 & 1 = 1) |-", "ant:/neg", "", true, true),
    sys(AndNegL, "~(A | (0 = 0 & A)) & A |-", "ant:/and.left/neg/or.right", "", true, true),
    sys(AndNegL, "~(0 = 0 & 1 = 1) |- B", "ant:/neg", "", false, true),
    sys(AndNegL, "A & ~(A & A) |- B", "ant:/and.right/neg", "", false, true),
    sys(AndNegL, "~(A & A) |- ~A", "ant:/neg", "", false, true),
    sys(OrPosL, "0 = 1 | 1 = 2 |-", "ant:/", "", true, true),
    sys(OrPosL, "~A & (A | A) |-", "ant:/and.right", "", true, true),
    sys(OrPosL, "~~(0 = 1 | A & ~A) |-", "ant:/neg/neg", "", true, true),
    sys(OrPosL, "0 = 1 | 1 = 2 |- C", "ant:/", "", false, true),
    sys(OrPosL, "A | A |- A", "ant:/", "", false, true),
    sys(OrPosL, "~A & (A | A) |- C", "ant:/and.right", "", false, true),
    sys(AllPosL, "forall x. x = 1 |-", "ant:/", "t=0", true, true),
    sys(AllPosL, "~A & (forall x. A) |-", "ant:/and.right", "t=0", true, true),
    sys(AllPosL, "~~(forall x. s(x) = 0) |-", "ant:/neg/neg", "t=2", true, true),
    sys(AllPosL, "forall x. x = 1 |- C", "ant:/", "t=0", false, true),
    sys(AllPosL, "forall x. x = 0 |- 0 = 0", "ant:/", "t=0", false, true),
    sys(AllPosL, "~~(forall x. s(x) = 0) |- C", "ant:/neg/neg", "t=2", false, true),
    sys(AllNegL, "~(forall x. 0 = 0) |-", "ant:/neg", "b=b", true, true),
    sys(AllNegL, "A & ~(forall x. A) |-", "ant:/and.right/neg", "b=b", true, true),
    sys(AllNegL, "~(forall x. x = x) |-", "ant:/neg", "b=b", true, true),
    sys(AllNegL, "~(forall x. 0 = 0) |- C", "ant:/neg", "b=b", false, true),
    sys(AllNegL, "~(forall x. x = x) |- C", "ant:/neg", "b=b", false, true),
    sys(AllNegL, "A & ~(forall x. A) |- C", "ant:/and.right/neg", "b=b", false, true),
    sys(ExPosL, "exists x. 0 = 1 |-", "ant:/", "b=b", true, true),
    sys(ExPosL, "exists x. s(x) = 0 |-", "ant:/", "b=b", true, true),
    sys(ExPosL, "~A & (exists x. A) |-", "ant:/and.right", "b=b", true, true),
    sys(ExPosL, "exists x. 0 = 1 |- C", "ant:/", "b=b", false, true),
    sys(ExPosL, "exists x. s(x) = 0 |- C", "ant:/", "b=b", false, true),
    sys(ExPosL, "~A & (exists x. A) |- A", "ant:/and.right", "b=b", false, true),
    sys(ExNegL, "~(exists x. x = 0) |-", "ant:/neg", "t=0", true, true),
    sys(ExNegL, "~(exists x. x = 2) |-", "ant:/neg", "t=2", true, true),
    sys(ExNegL, "~(A | (exists x. x = 1)) |-", "ant:/neg/or.right", "t=1", true, true),
    sys(ExNegL, "~(exists x. x = 0) |- C", "ant:/neg", "t=0", false, true),
    sys(ExNegL, "~(exists x. x = 2) |- C", "ant:/neg", "t=2", false, true),
    sys(ExNegL, "~(A | (exists x. x = 1)) |- C", "ant:/neg/or.right", "t=1", false, true),
    sys(AndPosR, "|- 0 = 0 & 1 = 1", "suc:/", "", false, true),
    sys(OrNegR, "|- ~(0 = 1 | 1 = 0)", "suc:/neg", "", false, true),
    sys(ImpPosR, "|- A -> A", "suc:/", "", false, true),
    sys(ImpNegR, "|- ~(0 = 0 -> 0 = 1)", "suc:/neg", "", false, true),
    sys(AllPosR, "|- forall x. x = x", "suc:/", "b=b", false, true),
    sys(AllNegR, "|- ~(forall x. x = 0)", "suc:/neg", "t=1", false, true),
    sys(ExPosR, "|- exists x. x = 1", "suc:/", "t=1", false, true),
    sys(ExNegR, "|- ~(exists x. s(x) = 0)", "suc:/neg", "b=b", false, true),
    sys(ImpPosL, "0 = 0 -> 0 = 1 |-", "ant:/", "", false, false),
    sys(ImpPosL, "1 = 1 -> 2 = 3 |-", "ant:/", "", false, false),
    sys(ImpPosL, "(A & (A -> B)) & ~B |-", "ant:/and.left/and.right", "", false, false),
];

/// Build the one-step proof of a system case; every premise must be an axiom.
pub fn system_case_proof(k: &Kernel, c: &SystemCase) -> Result<Tableau, String> {
    let s = parse_sequent(c.seq).map_err(|e| e.to_string())?;
    let p = PartRef::parse_in(c.part, &s).map_err(|e| e.to_string())?;
    let arg = arg_of(c.arg);
    let kids = apply_rule(&s, c.rule, &p, &arg).map_err(|e| e.to_string())?;
    let children = kids.into_iter().map(|q| k.leaf(q, System::Sn).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
    Ok(Tableau::step(s, c.rule, p, arg, children))
}

/// Acceptance in PCN, FN and SN must match the row.
pub fn run_system_case(k: &Kernel, c: &SystemCase) -> Result<(), String> {
    let tb = system_case_proof(k, c)?;
    let got = (k.accepts(&tb, System::Pcn), k.accepts(&tb, System::Fn), k.accepts(&tb, System::Sn));
    if got == (c.pcn, c.fn_ok, true) {
        Ok(())
    } else {
        Err(format!("{} on `{}`: (PCN, FN, SN) acceptance {got:?}", c.rule, c.seq))
    }
}

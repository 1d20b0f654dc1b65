mod common;

use common::conformance::{run_axiom_case, run_rule_case, run_system_case, AXIOM_CASES, RULE_CASES, SYSTEM_CASES};
use sn_core::calculus::{from_json, to_json, Arg, AxiomKind, AxiomOutcome, Kernel, RuleId, System, Tableau, Verdict, Verdict8};
use sn_core::polarity::PartRef;
use sn_core::search::{prove, SearchBudget};
use sn_core::syntax::{seq, sym};

fn failures<T>(cases: &[T], run: impl Fn(&T) -> Result<(), String>) -> Vec<String> {
    cases.iter().filter_map(|c| run(c).err()).collect()
}

#[test]
fn every_rule_has_three_positive_and_three_negative_rows() {
    for r in RuleId::ALL {
        let rows: Vec<_> = RULE_CASES.iter().filter(|c| c.rule == r).collect();
        let pos = rows.iter().filter(|c| matches!(c.expect, common::conformance::Expect::Premises(_))).count();
        assert!(pos >= 3 && rows.len() - pos >= 3, "{r}: {pos} positive, {} negative", rows.len() - pos);
    }
    for k in AxiomKind::ALL {
        let pos = AXIOM_CASES.iter().filter(|c| c.kind == k && c.holds).count();
        let neg = AXIOM_CASES.iter().filter(|c| c.kind == k && !c.holds).count();
        assert!(pos >= 3 && neg >= 3, "{k}: {pos}/{neg}");
    }
}

#[test]
fn rule_table() {
    let bad = failures(RULE_CASES, run_rule_case);
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn axiom_table() {
    let k = Kernel::default();
    let bad = failures(AXIOM_CASES, |c| run_axiom_case(&k, c));
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn system_restrictions() {
    let k = Kernel::default();
    let bad = failures(SYSTEM_CASES, |c| run_system_case(&k, c));
    assert!(bad.is_empty(), "{bad:#?}");
    for r in RuleId::ALL {
        let pcn = SYSTEM_CASES.iter().filter(|c| c.rule == r && c.pcn).count();
        if r.admitted(System::Pcn) {
            let neg = SYSTEM_CASES.iter().filter(|c| c.rule == r && !c.pcn).count();
            assert!(pcn >= 3 && neg >= 3, "{r}");
        } else {
            assert_eq!(pcn, 0, "{r}");
        }
    }
    assert!(SYSTEM_CASES.iter().filter(|c| !c.fn_ok).count() >= 3);
    assert!(SYSTEM_CASES.iter().filter(|c| c.fn_ok).count() >= 3);
}

#[test]
fn match_axiom_is_ordered_and_respects_pcn() {
    let k = Kernel::default();
    let first = |s: &str, sys| match k.match_axiom(&seq(s), sys) {
        AxiomOutcome::Match(m) => Some(m.kind),
        _ => None,
    };
    assert_eq!(first("0 = 0 |-", System::Sn), None);
    assert_eq!(first("~(1 = 0) |-", System::Sn), None);
    assert_eq!(first("~~(1 = 0) |-", System::Sn), Some(AxiomKind::Ax2));
    // Both Ax2 and Ax5 apply; the lower number wins.
    assert_eq!(first("0 = 1 & ~(0 = 1) |-", System::Sn), Some(AxiomKind::Ax2));
    assert_eq!(first("~(~(s(x) = s(y)) | x = y) |-", System::Sn), Some(AxiomKind::Ax8));
    assert_eq!(first("|- 0 = 0", System::Sn), Some(AxiomKind::Ax3));
    assert_eq!(first("|- 0 = 0", System::Pcn), None);
    assert_eq!(first("A |- A", System::Pcn), None);
}

#[test]
fn axiom8_oracle_verdicts() {
    let k = Kernel::default();
    assert!(matches!(k.axiom8(&seq("~~(s(a) = 0) |-"), System::Sn), Verdict8::Certified(_)));
    assert!(matches!(k.axiom8(&seq("~(a + 0 = a) |-"), System::Sn), Verdict8::Certified(_)));
    match k.axiom8(&seq("~(a * b = b * a + 1) |-"), System::Sn) {
        Verdict8::Refuted(cex) => assert!(cex.iter().all(|(_, n)| *n == 0), "{cex:?}"),
        v => panic!("{v:?}"),
    }
}

#[test]
fn worked_universal_instance_checks() {
    // Two steps: instantiate the retained universal, then close by Ax5.
    let k = Kernel::default();
    let s = seq("~(~(forall x. x = 0) | 1 = 0) |-");
    let tb = prove(&k, &s, System::Pcn, SearchBudget::default()).proof().expect("provable");
    assert!(tb.rules_used().contains(&RuleId::AllPosL));
    assert!(k.accepts(&tb, System::Pcn));
}

#[test]
fn eigenvariable_clash_is_rejected_by_the_checker() {
    let k = Kernel::default();
    let root = seq("b = b |- forall x. x = x");
    let bad = Tableau::step(
        root.clone(),
        RuleId::AllPosR,
        PartRef::parse_in("suc:/", &root).unwrap(),
        Arg::Eigen(sym("b")),
        vec![Tableau::leaf(seq("b = b |- b = b"), AxiomKind::Ax6)],
    );
    match k.check(&bad, System::Sn) {
        Verdict::Rejected { reason, .. } => assert!(reason.contains("fresh") || reason.contains("eigen"), "{reason}"),
        v => panic!("{v:?}"),
    }
}

#[test]
fn fn_and_pcn_proofs_are_sn_proofs() {
    let k = Kernel::default();
    for (s, sys) in [("~(A | B) & A |-", System::Pcn), ("|- A -> A", System::Fn), ("(A & B) & ~(B & A) |-", System::Pcn)] {
        let tb = prove(&k, &seq(s), sys, SearchBudget::default()).proof().unwrap();
        assert!(k.accepts(&tb, sys) && k.accepts(&tb, System::Sn), "{s}");
    }
}

#[test]
fn proof_files_round_trip_and_recheck() {
    let k = Kernel::default();
    let tb = prove(&k, &seq("forall x. x = 0 |- 0 = 0 & 1 = 0"), System::Sn, SearchBudget::default()).proof().unwrap();
    let text = to_json(&tb);
    let back = from_json(&text).unwrap();
    assert_eq!(back, tb);
    assert!(k.accepts(&back, System::Sn));
    let tampered = text.replacen("1 = 0", "2 = 0", 2);
    let t2 = from_json(&tampered).unwrap();
    assert!(!k.accepts(&t2, System::Sn));
    assert!(from_json("{\"seq\": \"|-\"}").is_err());
}

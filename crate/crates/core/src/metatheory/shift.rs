//! Moving parts across the turnstile and between the three systems.

use crate::calculus::{Kernel, RuleId, System, Tableau, Verdict};
use crate::error::{Error, Result};
use crate::polarity::{attach, delete_tracked, locate, part_at, Conn, PartRef, PathMap, SeqMap, Side, Sign, Step};
use crate::syntax::{Formula, Sequent};

use super::replay::{replay, through, Dest};

fn need_side(part: &PartRef, side: Side) -> Result<()> {
    if part.side != side {
        return Err(Error::InvalidPart(format!("{part} must be in the {}", if side == Side::Ant { "antecedent" } else { "succedent" })));
    }
    Ok(())
}

/// `Γ |- G[A₊]` to `Γ ∧ ∼A |- G[;]`, and `Γ |- G[A₋]` to `Γ ∧ A |- G[;]`.
pub fn xf_shift_right(kernel: &Kernel, tb: &Tableau, part: &PartRef) -> Result<Tableau> {
    need_side(part, Side::Suc)?;
    let a = part_at(&tb.seq, part)?.clone();
    let (del, suc_map) = delete_tracked(&tb.seq, part)?;
    let piece = if part.sign == Sign::Pos { Formula::neg(a) } else { a };
    let had = tb.seq.ant.is_some();
    let ant = attach(tb.seq.ant.clone(), Conn::And, piece);
    let tgt = Sequent::new(Some(ant), del.suc);
    let mut path = if had { vec![Step::AndR] } else { Vec::new() };
    if part.sign == Sign::Pos {
        path.push(Step::Not);
    }
    let at = locate(&tgt, Side::Ant, &path)?;
    let map = SeqMap { ant: if had { PathMap::under(vec![Step::AndL]) } else { PathMap::dropped() }, suc: suc_map };
    let mut corr = through(&tb.seq, &map, std::slice::from_ref(part));
    corr.push((part.clone(), Dest::At(at)));
    replay(kernel, System::Sn, tb, &tgt, corr)
}

/// `F[A⁺] |-` to `F[;] |- ∼A`, and `F[A⁻] |-` to `F[;] |- A`.
///
/// Fails with `NotConstructive` when the proof must use a rule on the moved
/// part that has no counterpart once the part sits in the succedent.
pub fn xf_neg_right(kernel: &Kernel, tb: &Tableau, part: &PartRef) -> Result<Tableau> {
    move_to_succedent(kernel, tb, part, System::Sn)
}

fn move_to_succedent(kernel: &Kernel, tb: &Tableau, part: &PartRef, system: System) -> Result<Tableau> {
    need_side(part, Side::Ant)?;
    if tb.seq.suc.is_some() {
        return Err(Error::NotPcn(format!("`{}` has a succedent formula", tb.seq)));
    }
    let a = part_at(&tb.seq, part)?.clone();
    let (del, ant_map) = delete_tracked(&tb.seq, part)?;
    let (suc, path) = if part.sign == Sign::Pos { (Formula::neg(a), vec![Step::Not]) } else { (a, Vec::new()) };
    let tgt = Sequent::new(del.ant, Some(suc));
    let at = locate(&tgt, Side::Suc, &path)?;
    let map = SeqMap { ant: ant_map, suc: PathMap::dropped() };
    let mut corr = through(&tb.seq, &map, std::slice::from_ref(part));
    corr.push((part.clone(), Dest::At(at)));
    replay(kernel, system, tb, &tgt, corr).map_err(|e| match e {
        Error::Replay(m) => Error::NotConstructive(m),
        e => e,
    })
}

/// FN version for a prime part: `F[P⁺] |-` to `F[;] |- ∼P`.
pub fn xf_fn_prime(kernel: &Kernel, tb: &Tableau, part: &PartRef) -> Result<Tableau> {
    let p = part_at(&tb.seq, part)?;
    if !p.is_prime() {
        return Err(Error::ShapeMismatch(format!("`{p}` is not prime")));
    }
    move_to_succedent(kernel, tb, part, System::Fn)
}

fn recheck(kernel: &Kernel, tb: &Tableau, system: System) -> Result<Tableau> {
    match kernel.check(tb, system) {
        Verdict::Accepted { .. } => Ok(tb.clone()),
        Verdict::Rejected { node, reason } => Err(Error::NotPcn(format!("{node}: {reason}"))),
    }
}

/// An FN proof of `Γ |-` is already a PCN proof.
pub fn xf_fn_to_pcn(kernel: &Kernel, tb: &Tableau) -> Result<Tableau> {
    if tb.seq.suc.is_some() {
        return Err(Error::NotPcn(format!("`{}` has a succedent formula", tb.seq)));
    }
    if let Some(r) = tb.rules_used().into_iter().find(|r| !r.admitted(System::Fn)) {
        return Err(Error::WrongSystem { rule: r.label().into(), system: "FN".into() });
    }
    recheck(kernel, tb, System::Pcn)
}

/// An SN proof of an implication-free `Γ |-` is already a PCN proof.
pub fn xf_impfree_to_pcn(kernel: &Kernel, tb: &Tableau) -> Result<Tableau> {
    if tb.seq.suc.is_some() {
        return Err(Error::NotPcn(format!("`{}` has a succedent formula", tb.seq)));
    }
    if !tb.seq.is_implication_free() {
        return Err(Error::SideConditionFailed(format!("`{}` contains an implication", tb.seq)));
    }
    recheck(kernel, tb, System::Pcn)
}

/// Drop a positive antecedent implication from an FN proof of `F[(A⊃B)⁺] |-`.
pub fn xf_fn_drop_imp(kernel: &Kernel, tb: &Tableau, part: &PartRef) -> Result<Tableau> {
    need_side(part, Side::Ant)?;
    let f = part_at(&tb.seq, part)?;
    if !matches!(f, Formula::Imp(..)) || part.sign != Sign::Pos {
        return Err(Error::ShapeMismatch(format!("{part} is not a positive implication")));
    }
    if tb.seq.suc.is_some() {
        return Err(Error::NotPcn(format!("`{}` has a succedent formula", tb.seq)));
    }
    if tb.rules_used().contains(&RuleId::ImpPosL) {
        return Err(Error::WrongSystem { rule: RuleId::ImpPosL.label().into(), system: "FN".into() });
    }
    let (tgt, ant_map) = delete_tracked(&tb.seq, part)?;
    let map = SeqMap { ant: ant_map, suc: PathMap::dropped() };
    let corr = through(&tb.seq, &map, std::slice::from_ref(part));
    replay(kernel, System::Pcn, tb, &tgt, corr)
}

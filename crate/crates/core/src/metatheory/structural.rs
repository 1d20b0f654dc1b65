use crate::calculus::{ArgKind, Fresh, Kernel, RuleId, System, Tableau};
use crate::error::{Error, Result};
use crate::polarity::{
    attach, delete_tracked, leaves, locate, part_at, replace, side_formula, Conn, PartRef, PathMap, SeqMap, Side, Sign, Step,
};
use crate::syntax::{alpha_eq, Formula, Sequent};

use super::replay::{invert_with, replay, through, Corr, Dest};

/// Proof of the premise `choice` of a non-retention rule at `part`.
pub fn xf_invert(kernel: &Kernel, tb: &Tableau, part: &PartRef, choice: usize, system: System) -> Result<Tableau> {
    let f = part_at(&tb.seq, part)?;
    let rule = RuleId::for_part(f, part.side, part.sign)
        .ok_or_else(|| Error::NotInvertible(format!("no rule acts on `{f}` at {part}")))?;
    if rule.is_retention() || rule == RuleId::ImpPosR {
        return Err(Error::NotInvertible(format!("{rule} keeps its principal formula or leaves a structural part")));
    }
    let c = (rule.arg_kind() == ArgKind::Eigen).then(|| Fresh::avoiding(&[tb]).var("b"));
    Ok(invert_with(kernel, system, tb, part, rule, choice, c)?.proof)
}

/// Premises a non-retention rule would produce, with one fresh eigenvariable.
pub fn inversion_premises(tb: &Tableau, part: &PartRef) -> Result<Vec<Sequent>> {
    let f = part_at(&tb.seq, part)?;
    let rule = RuleId::for_part(f, part.side, part.sign).ok_or_else(|| Error::NotInvertible(part.to_string()))?;
    let c = (rule.arg_kind() == ArgKind::Eigen).then(|| Fresh::avoiding(&[tb]).var("b"));
    let n = if matches!(rule, RuleId::AndNegL | RuleId::AndPosR | RuleId::OrPosL | RuleId::OrNegR | RuleId::ImpNegR) { 2 } else { 1 };
    (0..n)
        .map(|i| super::replay::inversion_target(&tb.seq, part, rule, i, c.as_ref()).map(|(s, _, _)| s))
        .collect()
}

/// Merge two identical parts of the same role into the first one.
pub fn xf_contract(kernel: &Kernel, tb: &Tableau, p1: &PartRef, p2: &PartRef, system: System) -> Result<Tableau> {
    let a = part_at(&tb.seq, p1)?;
    let b = part_at(&tb.seq, p2)?;
    if p1.side != p2.side || p1.sign != p2.sign || !alpha_eq(a, b) {
        return Err(Error::ShapeMismatch(format!("{p1} and {p2} are not two copies of one part")));
    }
    if !p1.disjoint(p2) {
        return Err(Error::OverlappingParts(p1.to_string(), p2.to_string()));
    }
    let (tgt, m) = delete_tracked(&tb.seq, p2)?;
    let mut map = SeqMap::identity();
    *map.side_mut(p2.side) = m.clone();
    let mut corr = through(&tb.seq, &map, std::slice::from_ref(p2));
    let home = map.apply(p1).ok_or_else(|| Error::InvalidPart(p1.to_string()))?;
    for (l, _) in leaves(&tb.seq) {
        if p2.is_prefix_of(&l) {
            let rel = &l.path[p2.path.len()..];
            corr.push((l.clone(), Dest::At(home.join(rel, l.sign))));
        }
    }
    replay(kernel, system, tb, &tgt, corr)
}

/// Weaken a proof of `delete(target, part)` into a proof of `target`.
pub fn xf_thin(kernel: &Kernel, tb: &Tableau, target: &Sequent, part: &PartRef, system: System) -> Result<Tableau> {
    let (del, m) = delete_tracked(target, part)?;
    if del != tb.seq {
        return Err(Error::ShapeMismatch(format!("deleting {part} from `{target}` gives `{del}`, not `{}`", tb.seq)));
    }
    let mut map = SeqMap::identity();
    *map.side_mut(part.side) = m;
    let mut corr = Corr::new();
    for (l, _) in leaves(target) {
        if part.is_prefix_of(&l) {
            continue;
        }
        if let Some(l2) = map.apply(&l) {
            corr.push((l2, Dest::At(l)));
        }
    }
    replay(kernel, system, tb, target, corr)
}

/// Pull the part out of its side and attach it at the top:
/// `F[A⁺] ↦ F[;] ∧ A`, `F[A⁻] ↦ F[;] ∧ ∼A`, and dually with `∨` on the right.
pub fn detach(s: &Sequent, part: &PartRef) -> Result<(Sequent, SeqMap, PartRef)> {
    let a = part_at(s, part)?.clone();
    let (del, m) = delete_tracked(s, part)?;
    let conn = match part.side {
        Side::Ant => Conn::And,
        Side::Suc => Conn::Or,
    };
    let ctx = side_formula(&del, part.side).cloned();
    let had_ctx = ctx.is_some();
    let piece = if part.sign == Sign::Pos { a } else { Formula::neg(a) };
    let joined = attach(ctx, conn, piece);
    let mut out = del.clone();
    match part.side {
        Side::Ant => out.ant = Some(joined),
        Side::Suc => out.suc = Some(joined),
    }
    let mut path = Vec::new();
    let side_map = if had_ctx {
        path.push(if conn == Conn::And { Step::AndR } else { Step::OrR });
        let mut m2 = m;
        crate::polarity::compose(&mut m2, &PathMap::under(vec![if conn == Conn::And { Step::AndL } else { Step::OrL }]));
        m2
    } else {
        PathMap::dropped()
    };
    if part.sign == Sign::Neg {
        path.push(Step::Not);
    }
    let at = locate(&out, part.side, &path)?;
    let mut map = SeqMap::identity();
    *map.side_mut(part.side) = side_map;
    Ok((out, map, at))
}

pub fn xf_translate(kernel: &Kernel, tb: &Tableau, part: &PartRef, system: System) -> Result<Tableau> {
    let (tgt, map, at) = detach(&tb.seq, part)?;
    let mut corr = through(&tb.seq, &map, std::slice::from_ref(part));
    corr.push((part.clone(), Dest::At(at)));
    replay(kernel, system, tb, &tgt, corr)
}

/// Inverse of [`xf_translate`]: `tb` proves the detached form of `target`.
pub fn xf_untranslate(kernel: &Kernel, tb: &Tableau, target: &Sequent, part: &PartRef, system: System) -> Result<Tableau> {
    let (fwd, map, at) = detach(target, part)?;
    if fwd != tb.seq {
        return Err(Error::ShapeMismatch(format!("`{}` is not the detached form of `{target}`", tb.seq)));
    }
    let mut corr = Corr::new();
    for (l, _) in leaves(target) {
        if part.is_prefix_of(&l) {
            continue;
        }
        if let Some(l2) = map.apply(&l) {
            corr.push((l2, Dest::At(l)));
        }
    }
    corr.push((at, Dest::At(part.clone())));
    replay(kernel, system, tb, target, corr)
}

/// Swap two disjoint parts of equal role.
pub fn xf_interchange(kernel: &Kernel, tb: &Tableau, p1: &PartRef, p2: &PartRef, system: System) -> Result<Tableau> {
    if !p1.disjoint(p2) {
        return Err(Error::OverlappingParts(p1.to_string(), p2.to_string()));
    }
    if p1.side != p2.side || p1.sign != p2.sign {
        return Err(Error::ShapeMismatch(format!("{p1} and {p2} have different roles")));
    }
    let a = part_at(&tb.seq, p1)?.clone();
    let b = part_at(&tb.seq, p2)?.clone();
    let tgt = replace(&replace(&tb.seq, p1, b)?, p2, a)?;
    let mut corr = Corr::new();
    for (l, _) in leaves(&tb.seq) {
        let dest = if p1.is_prefix_of(&l) {
            p2.join(&l.path[p1.path.len()..], l.sign)
        } else if p2.is_prefix_of(&l) {
            p1.join(&l.path[p2.path.len()..], l.sign)
        } else {
            l.clone()
        };
        corr.push((l, Dest::At(dest)));
    }
    replay(kernel, system, tb, &tgt, corr)
}

/// Weaken a proof into any sequent containing its parts, pairing by formula.
pub fn xf_weaken_into(kernel: &Kernel, tb: &Tableau, target: &Sequent, system: System) -> Result<Tableau> {
    super::replay::adapt(kernel, system, tb, target, &[])
}

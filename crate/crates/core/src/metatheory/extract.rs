//! Splitting a succedent: disjunction property and witness extraction.

use crate::calculus::{apply_tracked, apply_tracked_unchecked, Arg, Just, Kernel, RuleId, System, Tableau};
use crate::error::{Error, Result};
use crate::polarity::{delete, delete_many, leaves, locate, part_at, replace, PartRef, Side, Sign, Step};
use crate::syntax::{Formula, Sequent, Term};

use super::replay::{adapt, replay, Corr, Dest};
use super::structural::xf_thin;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Group {
    Ctx,
    Part,
    Shared,
}

type Labels = Vec<(PartRef, Group)>;

/// Result of splitting `Γ |- G[A]`.
#[derive(Clone, Debug)]
pub enum Disjunct {
    /// A proof of `Γ |- G[;]`.
    Left(Tableau),
    /// A proof of `Γ |- A`, or of `Γ |- ∼A` for a negative part.
    Right(Tableau),
}

struct Splitter<'k> {
    kernel: &'k Kernel,
}

fn label(labels: &Labels, p: &PartRef) -> Group {
    labels.iter().find(|(k, _)| k == p).map(|(_, g)| *g).unwrap_or(Group::Shared)
}

fn project(seq: &Sequent, labels: &Labels, keep: Group) -> Result<Sequent> {
    let drop: Vec<PartRef> = labels
        .iter()
        .filter(|(_, g)| *g != keep && *g != Group::Shared)
        .map(|(p, _)| p.clone())
        .collect();
    Ok(delete_many(seq, &drop)?.0)
}

impl Splitter<'_> {
    /// Proofs of the two projections of `tb`'s sequent, where achievable.
    fn split(&self, tb: &Tableau, labels: &Labels) -> Result<[Option<Tableau>; 2]> {
        let groups = [Group::Ctx, Group::Part];
        let mut out: [Option<Tableau>; 2] = [None, None];
        let Just::Rule { rule, part, arg } = &tb.just else {
            for (i, g) in groups.iter().enumerate() {
                let s = project(&tb.seq, labels, *g)?;
                out[i] = self.kernel.close(&s, System::Sn).map(|k| Tableau::leaf(s, k));
            }
            return Ok(out);
        };
        let lp = label(labels, part);
        let kids = apply_tracked_unchecked(&tb.seq, *rule, part, arg)?;
        let mut results = Vec::with_capacity(kids.len());
        for (c, child) in kids.iter().zip(&tb.children) {
            let mut next = Labels::new();
            for (l, _) in leaves(&c.seq) {
                let inherited = labels.iter().filter(|(k, _)| k != part).find(|(k, _)| c.map.apply(k).as_ref() == Some(&l));
                next.push((l, inherited.map(|(_, g)| *g).unwrap_or(lp)));
            }
            results.push(self.split(child, &next)?);
        }
        for (i, g) in groups.iter().enumerate() {
            let target = project(&tb.seq, labels, *g)?;
            if lp == *g || lp == Group::Shared {
                if results.iter().all(|r| r[i].is_some()) {
                    out[i] = Some(self.rebuild(&tb.seq, labels, *g, *rule, part, arg, &target, &results, i)?);
                }
            } else if let Some(r) = results.iter().find_map(|r| r[i].as_ref()) {
                out[i] = Some(adapt(self.kernel, System::Sn, r, &target, &[])?);
            }
        }
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn rebuild(
        &self,
        seq: &Sequent,
        labels: &Labels,
        g: Group,
        rule: RuleId,
        part: &PartRef,
        arg: &Arg,
        target: &Sequent,
        results: &[[Option<Tableau>; 2]],
        i: usize,
    ) -> Result<Tableau> {
        let drop: Vec<PartRef> = labels.iter().filter(|(_, h)| *h != g && *h != Group::Shared).map(|(p, _)| p.clone()).collect();
        let (_, m) = delete_many(seq, &drop)?;
        let at = m.apply(part).ok_or_else(|| Error::Replay(format!("{part} lost in projection")))?;
        let tkids = apply_tracked(target, rule, &at, arg)?;
        let mut children = Vec::with_capacity(tkids.len());
        for (tk, r) in tkids.iter().zip(results) {
            let proof = r[i].as_ref().expect("checked by caller");
            children.push(adapt(self.kernel, System::Sn, proof, &tk.seq, &[])?);
        }
        Ok(Tableau::step(target.clone(), rule, at, arg.clone(), children))
    }
}

/// `Γ |- G[A]` yields a proof of `Γ |- G[;]` or of `Γ |- A` (`∼A` for a
/// negative part), preferring the former.
pub fn xf_disjunction(kernel: &Kernel, tb: &Tableau, part: &PartRef) -> Result<Disjunct> {
    if part.side != Side::Suc {
        return Err(Error::InvalidPart(format!("{part} must be in the succedent")));
    }
    let a = part_at(&tb.seq, part)?.clone();
    let alone = match part.sign {
        Sign::Pos => a.clone(),
        Sign::Neg => Formula::neg(a.clone()),
    };
    let right_target = Sequent::new(tb.seq.ant.clone(), Some(alone));
    if part.path.is_empty() {
        return Ok(Disjunct::Right(tb.clone()));
    }
    let mut labels = Labels::new();
    for (l, _) in leaves(&tb.seq) {
        let g = if l.side == Side::Ant {
            Group::Shared
        } else if part.is_prefix_of(&l) {
            Group::Part
        } else {
            Group::Ctx
        };
        labels.push((l, g));
    }
    let sp = Splitter { kernel };
    let [ctx, inner] = sp.split(tb, &labels)?;
    if let Some(p) = ctx {
        let tgt = delete(&tb.seq, part)?;
        return Ok(Disjunct::Left(adapt(kernel, System::Sn, &p, &tgt, &[])?));
    }
    if let Some(p) = inner {
        let mut corr = Corr::new();
        let drop: Vec<PartRef> = labels.iter().filter(|(_, g)| *g == Group::Ctx).map(|(p, _)| p.clone()).collect();
        let (proj, m) = delete_many(&tb.seq, &drop)?;
        let here = m.apply(part).ok_or_else(|| Error::Replay("part lost in projection".into()))?;
        let root_at = if part.sign == Sign::Pos { vec![] } else { vec![Step::Not] };
        let dest = locate(&right_target, Side::Suc, &root_at)?;
        debug_assert_eq!(proj, p.seq);
        for (l, _) in leaves(&p.seq) {
            if l.side == Side::Ant {
                corr.push((l.clone(), Dest::At(l)));
            } else if here.is_prefix_of(&l) {
                corr.push((l.clone(), Dest::At(dest.join(&l.path[here.path.len()..], l.sign))));
            }
        }
        return Ok(Disjunct::Right(replay(kernel, System::Sn, &p, &right_target, corr)?));
    }
    Err(Error::NoDisjunct(format!("neither `{}` nor `{right_target}` is provable from this proof", delete(&tb.seq, part)?)))
}

fn collect_witnesses(tb: &Tableau, copies: &[PartRef], out: &mut Vec<Term>) -> Result<()> {
    let Just::Rule { rule, part, arg } = &tb.just else { return Ok(()) };
    let kids = apply_tracked_unchecked(&tb.seq, *rule, part, arg)?;
    let hit = copies.contains(part);
    for (c, child) in kids.iter().zip(&tb.children) {
        let mut next: Vec<PartRef> = copies.iter().filter(|k| *k != part).filter_map(|k| c.map.apply(k)).collect();
        if hit && *rule == RuleId::ExPosR {
            let t = arg.term().expect("term rule").clone();
            if !out.contains(&t) {
                out.push(t);
            }
            next.extend(c.retained.clone());
        }
        collect_witnesses(child, &next, out)?;
    }
    Ok(())
}

fn disjunction(parts: &[Formula]) -> Formula {
    let mut it = parts.iter().rev();
    let last = it.next().expect("at least one disjunct").clone();
    it.fold(last, |acc, a| Formula::or(a.clone(), acc))
}

/// Location of disjunct `i` of `k` in `disjunction`, rooted at `at`.
fn disjunct_path(at: &PartRef, i: usize, k: usize) -> Vec<Step> {
    let mut p = at.path.clone();
    p.extend(std::iter::repeat_n(Step::OrR, i));
    if i + 1 < k {
        p.push(Step::OrL);
    }
    p
}

/// From a proof of `Γ |- G[∃x A(x)]` build a term `t` and a proof of
/// `Γ |- G[A(t)]`.
pub fn xf_witness(kernel: &Kernel, tb: &Tableau, e: &PartRef) -> Result<(Term, Tableau)> {
    let f = part_at(&tb.seq, e)?.clone();
    let Formula::Exists(v, body) = &f else {
        return Err(Error::ShapeMismatch(format!("`{f}` is not existential")));
    };
    if e.side != Side::Suc || e.sign != Sign::Pos {
        return Err(Error::InvalidPart(format!("{e} is not a positive succedent part")));
    }
    let mut terms = Vec::new();
    collect_witnesses(tb, std::slice::from_ref(e), &mut terms)?;
    let eigen = tb.eigenvariables();
    if let Some(t) = terms.iter().find(|t| t.vars().iter().any(|v| eigen.contains(v))) {
        return Err(Error::NotConstructive(format!("witness `{t}` depends on an eigenvariable of the proof")));
    }
    let zero = Term::Zero;
    if terms.is_empty() {
        let tgt = replace(&tb.seq, e, body.instantiate(v, &zero)?)?;
        let corr = super::replay::through(&tb.seq, &crate::polarity::SeqMap::identity(), std::slice::from_ref(e));
        return Ok((zero, replay(kernel, System::Sn, tb, &tgt, corr)?));
    }
    let insts: Vec<Formula> = terms.iter().map(|t| body.instantiate(v, t)).collect::<Result<_>>()?;
    let k = insts.len();
    let gathered = replace(&tb.seq, e, disjunction(&insts))?;
    let mut list = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        list.push((t.clone(), locate(&gathered, Side::Suc, &disjunct_path(e, i, k))?));
    }
    let mut corr = super::replay::through(&tb.seq, &crate::polarity::SeqMap::identity(), std::slice::from_ref(e));
    corr.push((e.clone(), Dest::Absorb(list)));
    let mut proof = replay(kernel, System::Sn, tb, &gathered, corr)?;
    for n in (1..=k).rev() {
        let here = locate(&proof.seq, Side::Suc, &disjunct_path(e, n - 1, n))?;
        match xf_disjunction(kernel, &proof, &here)? {
            Disjunct::Right(p) => {
                let tgt = replace(&tb.seq, e, insts[n - 1].clone())?;
                return Ok((terms[n - 1].clone(), adapt(kernel, System::Sn, &p, &tgt, &[])?));
            }
            Disjunct::Left(p) => {
                if n == 1 {
                    let tgt = replace(&tb.seq, e, body.instantiate(v, &zero)?)?;
                    return Ok((zero, xf_thin(kernel, &p, &tgt, e, System::Sn)?));
                }
                let tgt = replace(&tb.seq, e, disjunction(&insts[..n - 1]))?;
                proof = adapt(kernel, System::Sn, &p, &tgt, &[])?;
            }
        }
    }
    unreachable!("loop returns on its last iteration")
}

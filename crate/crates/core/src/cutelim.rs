//! Cut elimination for PCN, the restricted SN cut, and consistency checks.
//!
//! A cut joins `F₁[A⁺] |-` and `F₂[A⁻] |-` into `F₁[;] ∧ F₂[;] |-`. The
//! recursion is on the length of the cut formula; within one grade a
//! quantifier is handled by climbing the premise that keeps copies of it,
//! which is where the rank comes down.

use std::fmt;

use crate::calculus::{apply_tracked, apply_tracked_unchecked, Arg, AxiomKind, Fresh, Just, Kernel, RuleId, System, Tableau, Verdict};
use crate::error::{Error, Result};
use crate::metatheory::replay::{adapt, through, Replayer};
use crate::metatheory::{xf_disjunction, xf_impfree_to_pcn, xf_invert, xf_neg_right, xf_shift_right, Disjunct};
use crate::polarity::{attach2, delete_many, leaves, locate, part_at, Conn, PartRef, PathMap, SeqMap, Side, Sign, Step};
use crate::syntax::{alpha_eq, parse_sequent, Formula, Sequent, Term};

/// Two PCN proofs and the parts holding the cut formula.
#[derive(Clone, Debug)]
pub struct CutInstance {
    pub left: Tableau,
    pub right: Tableau,
    /// Positive antecedent occurrence in `left`.
    pub left_part: PartRef,
    /// Negative antecedent occurrence in `right`.
    pub right_part: PartRef,
}

/// One recursive call as seen by the termination measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Measure {
    pub grade: usize,
    pub rank: usize,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω·{}+{}", self.grade, self.rank)
    }
}

#[derive(Clone, Debug)]
pub struct CutResult {
    pub proof: Tableau,
    /// Measures of all calls, parent before children, with nesting depth.
    pub trace: Vec<(usize, Measure)>,
}

/// Length of the branch segment from `tb` up to the introduction of the
/// part, counting the current sequent. Retained copies continue the count.
pub fn rank(tb: &Tableau, part: &PartRef) -> usize {
    rank_many(tb, std::slice::from_ref(part))
}

fn rank_many(tb: &Tableau, copies: &[PartRef]) -> usize {
    if copies.is_empty() {
        return 0;
    }
    let Just::Rule { rule, part, arg } = &tb.just else { return 1 };
    let Ok(kids) = apply_tracked_unchecked(&tb.seq, *rule, part, arg) else { return 1 };
    let hit = copies.contains(part);
    let mut best = 0;
    for (c, child) in kids.iter().zip(&tb.children) {
        let mut next: Vec<PartRef> = copies.iter().filter(|k| *k != part).filter_map(|k| c.map.apply(k)).collect();
        if hit {
            next.extend(c.retained.clone());
        }
        best = best.max(rank_many(child, &next));
    }
    1 + best
}

impl CutInstance {
    pub fn cut_formula(&self) -> Result<&Formula> {
        part_at(&self.left.seq, &self.left_part)
    }

    pub fn grade(&self) -> Result<usize> {
        Ok(self.cut_formula()?.length())
    }

    pub fn rank_l(&self) -> usize {
        rank(&self.left, &self.left_part)
    }

    pub fn rank_r(&self) -> usize {
        rank(&self.right, &self.right_part)
    }

    pub fn measure(&self) -> Result<Measure> {
        Ok(Measure { grade: self.grade()?, rank: self.rank_l() + self.rank_r() })
    }

    /// The cut-free conclusion `F₁[;] ∧ F₂[;] |-`.
    pub fn conclusion(&self) -> Result<Sequent> {
        Ok(join(&self.left.seq, &self.left_part, &self.right.seq, &self.right_part)?.0)
    }

    fn validate(&self, kernel: &Kernel) -> Result<()> {
        for (tb, name) in [(&self.left, "left"), (&self.right, "right")] {
            if tb.seq.suc.is_some() {
                return Err(Error::NotPcn(format!("{name} premise `{}` has a succedent", tb.seq)));
            }
            if let Verdict::Rejected { node, reason } = kernel.check(tb, System::Pcn) {
                return Err(Error::NotPcn(format!("{name} premise, {node}: {reason}")));
            }
        }
        self.check_parts()
    }

    fn check_parts(&self) -> Result<()> {
        let a = part_at(&self.left.seq, &self.left_part).map_err(|e| Error::PartMismatch(e.to_string()))?;
        let b = part_at(&self.right.seq, &self.right_part).map_err(|e| Error::PartMismatch(e.to_string()))?;
        let ok_role = self.left_part.side == Side::Ant
            && self.left_part.sign == Sign::Pos
            && self.right_part.side == Side::Ant
            && self.right_part.sign == Sign::Neg;
        if !ok_role || !alpha_eq(a, b) {
            return Err(Error::PartMismatch(format!("`{a}` at {} against `{b}` at {}", self.left_part, self.right_part)));
        }
        Ok(())
    }
}

/// `F₁[;] ∧ F₂[;]` with maps for the leaves of each premise.
fn join(l: &Sequent, pl: &PartRef, r: &Sequent, pr: &PartRef) -> Result<(Sequent, SeqMap, SeqMap)> {
    let (dl, ml) = delete_many(l, std::slice::from_ref(pl))?;
    let (dr, mr) = delete_many(r, std::slice::from_ref(pr))?;
    join_deleted(dl.ant, ml, dr.ant, mr)
}

fn join_deleted(a: Option<Formula>, ma: SeqMap, b: Option<Formula>, mb: SeqMap) -> Result<(Sequent, SeqMap, SeqMap)> {
    let both = a.is_some() && b.is_some();
    let ant = attach2(a, Conn::And, b);
    let lift = |m: SeqMap, step: Step| -> SeqMap {
        let mut ant = m.ant;
        if both {
            crate::polarity::compose(&mut ant, &PathMap::under(vec![step]));
        }
        SeqMap { ant, suc: PathMap::dropped() }
    };
    Ok((Sequent::new(ant, None), lift(ma, Step::AndL), lift(mb, Step::AndR)))
}

struct Cutter<'k> {
    kernel: &'k Kernel,
    trace: Vec<(usize, Measure)>,
    depth: usize,
}

fn sub(p: &PartRef, step: Step, s: &Sequent) -> Result<PartRef> {
    locate(s, p.side, &[p.path.as_slice(), &[step]].concat())
}

fn mismatch(msg: impl Into<String>) -> Error {
    Error::PartMismatch(msg.into())
}

/// Which premise keeps the quantified cut formula while we climb it.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Climb {
    Left,
    Right,
}

impl Cutter<'_> {
    fn enter(&mut self, m: Measure, parent: Option<Measure>) -> Result<()> {
        if let Some(p) = parent {
            if m >= p {
                return Err(Error::MeasureViolation(format!("{m} does not decrease from {p}")));
            }
        }
        self.trace.push((self.depth, m));
        Ok(())
    }

    fn cut(&mut self, ci: &CutInstance, parent: Option<Measure>) -> Result<Tableau> {
        ci.check_parts()?;
        let m = ci.measure()?;
        self.enter(m, parent)?;
        self.depth += 1;
        let out = self.cut_inner(ci, m);
        self.depth -= 1;
        out
    }

    fn cut_inner(&mut self, ci: &CutInstance, m: Measure) -> Result<Tableau> {
        let k = self.kernel;
        let (target, _, mr) = join(&ci.left.seq, &ci.left_part, &ci.right.seq, &ci.right_part)?;
        let a = ci.cut_formula()?.clone();
        let (pl, pr) = (&ci.left_part, &ci.right_part);
        match &a {
            Formula::Prime(..) => {
                let corr = through(&ci.right.seq, &mr, std::slice::from_ref(pr));
                let left = ci.left.clone();
                let pl = pl.clone();
                let mut hook = move |leaf: &Sequent| adapt(k, System::Pcn, &left, leaf, std::slice::from_ref(&pl));
                Replayer::new(k, System::Pcn, &ci.right, &target).with_hook(&mut hook).run(&ci.right, &target, corr)
            }
            Formula::Imp(..) => {
                // No PCN rule acts on a positive implication: drop it.
                let (_, ml, _) = join(&ci.left.seq, pl, &ci.right.seq, pr)?;
                let corr = through(&ci.left.seq, &ml, std::slice::from_ref(pl));
                crate::metatheory::replay::replay(k, System::Pcn, &ci.left, &target, corr)
            }
            Formula::Neg(_) => {
                let swapped = CutInstance {
                    left: ci.right.clone(),
                    right: ci.left.clone(),
                    left_part: sub(pr, Step::Not, &ci.right.seq)?,
                    right_part: sub(pl, Step::Not, &ci.left.seq)?,
                };
                let p = self.cut(&swapped, Some(m))?;
                adapt(k, System::Pcn, &p, &target, &[])
            }
            Formula::And(..) => {
                let r0 = xf_invert(k, &ci.right, pr, 0, System::Pcn)?;
                let r1 = xf_invert(k, &ci.right, pr, 1, System::Pcn)?;
                let first = CutInstance {
                    left: ci.left.clone(),
                    right: r0,
                    left_part: sub(pl, Step::AndL, &ci.left.seq)?,
                    right_part: pr.clone(),
                };
                let p1 = self.cut(&first, Some(m))?;
                let d_at = follow_left(&ci.left.seq, &first.left_part, &sub(pl, Step::AndR, &ci.left.seq)?, &first.right.seq, pr)?;
                let second = CutInstance { left: p1, right: r1, left_part: d_at, right_part: pr.clone() };
                let p2 = self.cut(&second, Some(m))?;
                adapt(k, System::Pcn, &p2, &target, &[])
            }
            Formula::Or(..) => {
                let l0 = xf_invert(k, &ci.left, pl, 0, System::Pcn)?;
                let l1 = xf_invert(k, &ci.left, pl, 1, System::Pcn)?;
                let first = CutInstance {
                    left: l0,
                    right: ci.right.clone(),
                    left_part: pl.clone(),
                    right_part: sub(pr, Step::OrL, &ci.right.seq)?,
                };
                let p1 = self.cut(&first, Some(m))?;
                let d_at = follow_right(&first.left.seq, pl, &ci.right.seq, &first.right_part, &sub(pr, Step::OrR, &ci.right.seq)?)?;
                let second = CutInstance { left: l1, right: p1, left_part: pl.clone(), right_part: d_at };
                let p2 = self.cut(&second, Some(m))?;
                adapt(k, System::Pcn, &p2, &target, &[])
            }
            Formula::Forall(..) => {
                let b = Fresh::avoiding(&[&ci.left, &ci.right]).var("b");
                let inv = invert_with_eigen(k, &ci.right, pr, &b)?;
                let other = delete_many(&ci.right.seq, std::slice::from_ref(pr))?.0.ant;
                let mut climb = Climber { cutter: self, grade: m.grade, other_rank: ci.rank_r(), fixed: inv, fixed_part: pr.clone(), eigen: b, other, side: Climb::Left };
                climb.go(&ci.left, std::slice::from_ref(pl), None)
            }
            Formula::Exists(..) => {
                let b = Fresh::avoiding(&[&ci.left, &ci.right]).var("b");
                let inv = invert_with_eigen(k, &ci.left, pl, &b)?;
                let other = delete_many(&ci.left.seq, std::slice::from_ref(pl))?.0.ant;
                let mut climb = Climber { cutter: self, grade: m.grade, other_rank: ci.rank_l(), fixed: inv, fixed_part: pl.clone(), eigen: b, other, side: Climb::Right };
                climb.go(&ci.right, std::slice::from_ref(pr), None)
            }
        }
    }
}

/// Where a left-premise part sits in the conclusion of a cut at `cut_l`.
fn follow_left(lseq: &Sequent, cut_l: &PartRef, x: &PartRef, rseq: &Sequent, cut_r: &PartRef) -> Result<PartRef> {
    let (c, ml, _) = join(lseq, cut_l, rseq, cut_r)?;
    let p = ml.apply(x).ok_or_else(|| mismatch(format!("{x} lost in the cut")))?;
    locate(&c, p.side, &p.path)
}

fn follow_right(lseq: &Sequent, cut_l: &PartRef, rseq: &Sequent, cut_r: &PartRef, x: &PartRef) -> Result<PartRef> {
    let (c, _, mr) = join(lseq, cut_l, rseq, cut_r)?;
    let p = mr.apply(x).ok_or_else(|| mismatch(format!("{x} lost in the cut")))?;
    locate(&c, p.side, &p.path)
}

fn invert_with_eigen(k: &Kernel, tb: &Tableau, part: &PartRef, b: &crate::syntax::Sym) -> Result<Tableau> {
    let f = part_at(&tb.seq, part)?;
    let rule = RuleId::for_part(f, part.side, part.sign).ok_or_else(|| mismatch(format!("no rule for `{f}`")))?;
    Ok(crate::metatheory::replay::invert_with(k, System::Pcn, tb, part, rule, 0, Some(b.clone()))?.proof)
}

/// Climbs the premise holding quantifier copies, cutting each instance
/// against the inverted other premise.
struct Climber<'a, 'k> {
    cutter: &'a mut Cutter<'k>,
    grade: usize,
    other_rank: usize,
    /// The inverted premise, with `eigen` standing for the witness.
    fixed: Tableau,
    fixed_part: PartRef,
    eigen: crate::syntax::Sym,
    /// The other premise with the cut formula deleted.
    other: Option<Formula>,
    side: Climb,
}

impl Climber<'_, '_> {
    fn target(&self, seq: &Sequent, copies: &[PartRef]) -> Result<(Sequent, SeqMap)> {
        let (d, m) = delete_many(seq, copies)?;
        let blank = SeqMap { ant: PathMap::dropped(), suc: PathMap::dropped() };
        let (c, ml, mr) = match self.side {
            Climb::Left => join_deleted(d.ant, m, self.other.clone(), blank)?,
            Climb::Right => join_deleted(self.other.clone(), blank, d.ant, m)?,
        };
        Ok((c, if self.side == Climb::Left { ml } else { mr }))
    }

    fn go(&mut self, tb: &Tableau, copies: &[PartRef], parent: Option<Measure>) -> Result<Tableau> {
        let k = self.cutter.kernel;
        let m = Measure { grade: self.grade, rank: rank_many(tb, copies) + self.other_rank };
        // The root of the climb is the cut call itself, already traced.
        if let Some(p) = parent {
            self.cutter.enter(m, Some(p))?;
        }
        let (target, map) = self.target(&tb.seq, copies)?;
        let Just::Rule { rule, part, arg } = &tb.just else {
            return k.leaf(target, System::Pcn);
        };
        let kids = apply_tracked_unchecked(&tb.seq, *rule, part, arg)?;
        if copies.contains(part) {
            let t = arg.term().ok_or_else(|| mismatch(format!("{rule} on the cut formula")))?.clone();
            let c = &kids[0];
            let mut next: Vec<PartRef> = copies.iter().filter(|x| *x != part).filter_map(|x| c.map.apply(x)).collect();
            next.extend(c.retained.clone());
            self.cutter.depth += 1;
            let p = self.go(&tb.children[0], &next, Some(m));
            self.cutter.depth -= 1;
            let p = p?;
            let (_, cmap) = self.target(&c.seq, &next)?;
            let inst_at = cmap.apply(&c.comps[0]).ok_or_else(|| mismatch("instance lost"))?;
            let inst_at = locate(&p.seq, inst_at.side, &inst_at.path)?;
            let mut fresh = Fresh::avoiding(&[&self.fixed, &p]);
            let fixed = crate::metatheory::subst_tree(&self.fixed, &[(self.eigen.clone(), t)], &mut fresh)?;
            let inner = match self.side {
                Climb::Left => CutInstance { left: p, right: fixed, left_part: inst_at, right_part: self.fixed_part.clone() },
                Climb::Right => CutInstance { left: fixed, right: p, left_part: self.fixed_part.clone(), right_part: inst_at },
            };
            let q = self.cutter.cut(&inner, Some(m))?;
            return adapt(k, System::Pcn, &q, &target, &[]);
        }
        let at = map.apply(part).ok_or_else(|| mismatch(format!("{part} lost")))?;
        let (arg, children) = match arg {
            Arg::Eigen(b) if target.has_free(b) => {
                let mut fresh = Fresh::avoiding(&[tb]);
                let mut vars = Default::default();
                target.all_vars_into(&mut vars);
                fresh.reserve(vars);
                let nb = fresh.var(b);
                let sigma = [(b.clone(), Term::Var(nb.clone()))];
                let ch = tb.children.iter().map(|c| crate::metatheory::subst_tree(c, &sigma, &mut fresh)).collect::<Result<Vec<_>>>()?;
                (Arg::Eigen(nb), ch)
            }
            _ => (arg.clone(), tb.children.clone()),
        };
        let kids = apply_tracked_unchecked(&tb.seq, *rule, part, &arg)?;
        let tkids = apply_tracked(&target, *rule, &at, &arg)?;
        let mut out = Vec::with_capacity(kids.len());
        for ((c, child), tk) in kids.iter().zip(&children).zip(&tkids) {
            let next: Vec<PartRef> = copies.iter().filter_map(|x| c.map.apply(x)).collect();
            self.cutter.depth += 1;
            let p = self.go(child, &next, Some(m));
            self.cutter.depth -= 1;
            out.push(adapt(k, System::Pcn, &p?, &tk.seq, &[])?);
        }
        Ok(Tableau::step(target, *rule, at, arg, out))
    }
}

/// Eliminate a cut between two PCN proofs.
pub fn pcn_cut(kernel: &Kernel, ci: &CutInstance) -> Result<CutResult> {
    ci.validate(kernel)?;
    let mut c = Cutter { kernel, trace: Vec::new(), depth: 0 };
    let proof = c.cut(ci, None)?;
    Ok(CutResult { proof, trace: c.trace })
}

/// The SN cut under the side condition that the shifted premises are
/// implication free: from `Γ |- G[A]` and `F[A] |- Δ`, with opposite signs
/// for `A` in the two conventional forms, derive `Γ ∧ F[;] |- G[;] ∨ Δ`.
pub fn sn_cut_restricted(kernel: &Kernel, p1: &Tableau, q: &PartRef, p2: &Tableau, r: &PartRef) -> Result<Tableau> {
    let a = part_at(&p1.seq, q)?.clone();
    let b = part_at(&p2.seq, r)?.clone();
    if q.side != Side::Suc || r.side != Side::Ant || q.sign != r.sign || !alpha_eq(&a, &b) {
        return Err(mismatch(format!("`{a}` at {q} against `{b}` at {r}")));
    }
    for (tb, name) in [(p1, "first"), (p2, "second")] {
        if let Verdict::Rejected { node, reason } = kernel.check(tb, System::Sn) {
            return Err(Error::Rejected { node: format!("{name} premise {node}"), reason });
        }
    }
    let g_del = crate::polarity::delete(&p1.seq, q)?;
    let f_del = crate::polarity::delete(&p2.seq, r)?;
    let final_ant = attach2(p1.seq.ant.clone(), Conn::And, f_del.ant.clone());
    let final_seq = Sequent::new(final_ant.clone(), attach2(g_del.suc.clone(), Conn::Or, p2.seq.suc.clone()));

    let right = match xf_disjunction(kernel, p1, q)? {
        Disjunct::Left(p) => return adapt(kernel, System::Sn, &p, &final_seq, &[]),
        Disjunct::Right(p) => p,
    };
    let gamma_na = Sequent::new(attach2(p1.seq.ant.clone(), Conn::And, Some(Formula::neg(right.seq.suc.clone().expect("succedent")))), None);
    let f_nd = Sequent::new(attach2(p2.seq.ant.clone(), Conn::And, p2.seq.suc.clone().map(Formula::neg)), None);
    for s in [&gamma_na, &f_nd] {
        if !s.is_implication_free() {
            return Err(Error::SideConditionFailed(format!("`{s}` contains an implication")));
        }
    }
    // Γ ∧ ∼X |- with X = A or ∼A.
    let shifted1 = xf_shift_right(kernel, &right, &PartRef::root(Side::Suc))?;
    let shifted2 = match &p2.seq.suc {
        Some(_) => xf_shift_right(kernel, p2, &PartRef::root(Side::Suc))?,
        None => p2.clone(),
    };
    let shifted1 = xf_impfree_to_pcn(kernel, &shifted1)?;
    let shifted2 = xf_impfree_to_pcn(kernel, &shifted2)?;
    let gamma_prefix: Vec<Step> = if p1.seq.ant.is_some() { vec![Step::AndR] } else { vec![] };
    let mut a1 = [gamma_prefix, vec![Step::Not]].concat();
    if q.sign == Sign::Neg {
        a1.push(Step::Not);
    }
    let a1 = locate(&shifted1.seq, Side::Ant, &a1)?;
    let a2 = if p2.seq.suc.is_some() && p2.seq.ant.is_some() {
        let p = [vec![Step::AndL], r.path.clone()].concat();
        locate(&shifted2.seq, Side::Ant, &p)?
    } else {
        locate(&shifted2.seq, Side::Ant, &r.path)?
    };
    let ci = if a1.sign == Sign::Pos {
        CutInstance { left: shifted1, right: shifted2, left_part: a1, right_part: a2 }
    } else {
        CutInstance { left: shifted2, right: shifted1, left_part: a2, right_part: a1 }
    };
    let cut = pcn_cut(kernel, &ci)?.proof;
    let Some(delta) = p2.seq.suc.clone() else {
        return adapt(kernel, System::Sn, &cut, &final_seq, &[]);
    };
    // (Γ ∧ F[;]) ∧ ∼Δ |- , then move Δ back to the right.
    let staged = Sequent::new(Some(match &final_ant {
        Some(x) => Formula::and(x.clone(), Formula::neg(delta.clone())),
        None => Formula::neg(delta.clone()),
    }), None);
    let staged_proof = adapt(kernel, System::Sn, &cut, &staged, &[])?;
    let d_path = if final_ant.is_some() { vec![Step::AndR, Step::Not] } else { vec![Step::Not] };
    let d_at = locate(&staged, Side::Ant, &d_path)?;
    let moved = xf_neg_right(kernel, &staged_proof, &d_at)?;
    adapt(kernel, System::Sn, &moved, &final_seq, &[])
}

/// Finite facts behind the consistency arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemoLine {
    pub sequent: String,
    pub system: System,
    pub axiom: Option<AxiomKind>,
    /// Rule applications available at the root.
    pub applicable_rules: usize,
    pub expected: &'static str,
    pub holds: bool,
}

pub fn consistency_demos(kernel: &Kernel) -> Vec<DemoLine> {
    let cases: [(&str, System, &'static str); 4] = [
        ("|-", System::Sn, "irreducible and no axiom"),
        ("|- 0=1", System::Sn, "irreducible and no axiom"),
        ("~(0=1) |-", System::Pcn, "irreducible and no axiom"),
        ("0=1 |-", System::Sn, "axiom 2"),
    ];
    cases
        .into_iter()
        .map(|(src, system, expected)| {
            let s = parse_sequent(src).expect("fixed demo sequents parse");
            let axiom = kernel.close(&s, system);
            let applicable_rules = leaves(&s)
                .into_iter()
                .filter(|(p, f)| RuleId::for_part(f, p.side, p.sign).is_some_and(|r| r.admitted(system)))
                .count();
            let holds = match expected {
                "axiom 2" => axiom == Some(AxiomKind::Ax2),
                _ => axiom.is_none() && applicable_rules == 0,
            };
            DemoLine { sequent: s.to_string(), system, axiom, applicable_rules, expected, holds }
        })
        .collect()
}

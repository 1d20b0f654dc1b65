//! Transport a proof onto a rearranged sequent.
//!
//! A correspondence sends leaves of the source root to parts of the target.
//! Each source step is re-enacted at the image of its principal part, either
//! by the same rule or, for a part that moved to the other side, by the
//! mirror rule. Parts without an image are never touched by the target
//! proof; if the source needs one, replay fails.

use crate::calculus::{apply_tracked, apply_tracked_unchecked, Arg, Child, Fresh, Just, Kernel, RuleId, System, Tableau};
use crate::error::{Error, Result};
use crate::polarity::{descend, leaves, locate, part_at, PartRef, SeqMap, Side, Step};
use crate::syntax::{alpha_eq, Formula, Sequent, Sym, Term};

use super::subst::subst_tree;

/// Image of a source part in the target.
#[derive(Clone, Debug)]
pub(crate) enum Dest {
    At(PartRef),
    /// The target already stands where the source's `choice` premise
    /// starts: the source step is skipped and its new parts go to `at`.
    Done { choice: usize, at: Vec<PartRef>, eigen: Option<Sym> },
    /// An existential whose instances were gathered into one disjunction;
    /// each witness term points at its disjunct.
    Absorb(Vec<(Term, PartRef)>),
}

pub(crate) type Corr = Vec<(PartRef, Dest)>;

pub(crate) type LeafHook<'h> = &'h mut dyn FnMut(&Sequent) -> Result<Tableau>;

pub(crate) struct Replayer<'k, 'h> {
    kernel: &'k Kernel,
    system: System,
    fresh: Fresh,
    hook: Option<LeafHook<'h>>,
}

fn lookup<'a>(corr: &'a Corr, p: &PartRef) -> Option<&'a Dest> {
    corr.iter().find(|(k, _)| k == p).map(|(_, d)| d)
}

fn map_dest(d: &Dest, m: &SeqMap) -> Option<Dest> {
    match d {
        Dest::At(x) => m.apply(x).map(Dest::At),
        Dest::Done { choice, at, eigen } => {
            let at = at.iter().map(|x| m.apply(x)).collect::<Option<Vec<_>>>()?;
            Some(Dest::Done { choice: *choice, at, eigen: eigen.clone() })
        }
        Dest::Absorb(list) => {
            let list: Vec<_> = list.iter().filter_map(|(t, x)| m.apply(x).map(|y| (t.clone(), y))).collect();
            (!list.is_empty()).then_some(Dest::Absorb(list))
        }
    }
}

fn quantifier(f: &Formula) -> Option<(&Sym, &Formula)> {
    match f {
        Formula::Forall(v, b) | Formula::Exists(v, b) => Some((v, b)),
        _ => None,
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Replay(msg.into())
}

impl<'k, 'h> Replayer<'k, 'h> {
    pub(crate) fn new(kernel: &'k Kernel, system: System, src: &Tableau, tgt: &Sequent) -> Replayer<'k, 'h> {
        let mut fresh = Fresh::avoiding(&[src]);
        let mut vars = Default::default();
        tgt.all_vars_into(&mut vars);
        fresh.reserve(vars);
        Replayer { kernel, system, fresh, hook: None }
    }

    pub(crate) fn with_hook(mut self, hook: LeafHook<'h>) -> Self {
        self.hook = Some(hook);
        self
    }

    /// Replay `src` onto `tgt` under `corr`.
    pub(crate) fn run(&mut self, src: &Tableau, tgt: &Sequent, corr: Corr) -> Result<Tableau> {
        let (corr, split) = self.normalize(&src.seq, tgt, corr)?;
        if let Some(at) = split {
            return self.split_implication(src, tgt, corr, at);
        }
        let Just::Rule { rule, part, arg } = &src.just else {
            if let Some(k) = self.kernel.close(tgt, self.system) {
                return Ok(Tableau::leaf(tgt.clone(), k));
            }
            if let Some(h) = self.hook.as_mut() {
                return h(tgt);
            }
            return Err(bad(format!("`{tgt}` is not an axiom")));
        };
        match lookup(&corr, part).cloned() {
            None => Err(Error::NotConstructive(format!(
                "{rule} acts on `{}`, which has no counterpart in `{tgt}`",
                part_at(&src.seq, part)?
            ))),
            Some(Dest::Done { choice, at, eigen }) => self.skip(src, *rule, part, arg, &corr, choice, &at, eigen, tgt),
            Some(Dest::Absorb(list)) => self.absorb(src, *rule, part, arg, &corr, &list, tgt),
            Some(Dest::At(l)) => self.step(src, *rule, part, arg, &corr, &l, tgt),
        }
    }

    /// Push `At` entries down to source leaves. Returns a target implication
    /// that must be decomposed first, when a structural source implication
    /// meets a target implication that no sign rule looks into.
    fn normalize(&self, src: &Sequent, tgt: &Sequent, corr: Corr) -> Result<(Corr, Option<PartRef>)> {
        let mut out = Corr::new();
        let mut split = None;
        for (q, d) in corr {
            match d {
                Dest::At(x) => self.expand(src, tgt, q, x, &mut out, &mut split)?,
                other => out.push((q, other)),
            }
        }
        Ok((out, split))
    }

    fn expand(&self, src: &Sequent, tgt: &Sequent, q: PartRef, x: PartRef, out: &mut Corr, split: &mut Option<PartRef>) -> Result<()> {
        if (q.side == x.side) != (q.sign == x.sign) {
            return Err(bad(format!("{q} and {x} play different roles")));
        }
        let f = part_at(src, &q)?;
        let g = part_at(tgt, &x)?;
        let fk = descend(f, q.side, q.sign);
        if fk.is_empty() {
            out.push((q, Dest::At(x)));
            return Ok(());
        }
        let gk = descend(g, x.side, x.sign);
        if gk.is_empty() {
            let structural_imp = matches!(f, Formula::Imp(..)) && matches!(g, Formula::Imp(..));
            if structural_imp && x.side == Side::Suc {
                out.push((q, Dest::At(x.clone())));
                split.get_or_insert(x);
                return Ok(());
            }
            return Err(bad(format!("`{f}` at {q} has no matching structure at {x}")));
        }
        for (step, sg, _) in fk {
            let (_, tsg, _) = gk
                .iter()
                .find(|(st, _, _)| *st == step)
                .ok_or_else(|| bad(format!("`{f}` and `{g}` disagree in shape")))?;
            self.expand(src, tgt, q.child(step, sg), x.child(step, *tsg), out, split)?;
        }
        Ok(())
    }

    /// Apply (→⊃₊) in the target only, so that the source's structural
    /// implication finds its halves.
    fn split_implication(&mut self, src: &Tableau, tgt: &Sequent, corr: Corr, at: PartRef) -> Result<Tableau> {
        let kids = apply_tracked(tgt, RuleId::ImpPosR, &at, &Arg::None)?;
        let kid = &kids[0];
        let mut next = Corr::new();
        for (q, d) in corr {
            if let Dest::At(x) = &d {
                if *x == at {
                    let l = locate(&src.seq, q.side, &[q.path.as_slice(), &[Step::ImpL]].concat())?;
                    let r = locate(&src.seq, q.side, &[q.path.as_slice(), &[Step::ImpR]].concat())?;
                    next.push((l, Dest::At(kid.comps[0].clone())));
                    next.push((r, Dest::At(kid.comps[1].clone())));
                    continue;
                }
            }
            if let Some(d2) = map_dest(&d, &kid.map) {
                next.push((q, d2));
            }
        }
        let sub = self.run(src, &kid.seq, next)?;
        Ok(Tableau::step(tgt.clone(), RuleId::ImpPosR, at, Arg::None, vec![sub]))
    }

    #[allow(clippy::too_many_arguments)]
    fn skip(
        &mut self,
        src: &Tableau,
        rule: RuleId,
        p: &PartRef,
        arg: &Arg,
        corr: &Corr,
        choice: usize,
        at: &[PartRef],
        eigen: Option<Sym>,
        tgt: &Sequent,
    ) -> Result<Tableau> {
        let skids = apply_tracked_unchecked(&src.seq, rule, p, arg)?;
        let sk = skids.get(choice).ok_or_else(|| bad(format!("{rule} has no premise {choice}")))?;
        let mut child = src.children[choice].clone();
        if let (Some(c), Arg::Eigen(d)) = (&eigen, arg) {
            if c != d {
                child = subst_tree(&child, &[(d.clone(), Term::Var(c.clone()))], &mut self.fresh)?;
            }
        }
        let mut next = Corr::new();
        for (k, d) in corr {
            if k == p {
                continue;
            }
            if let Some(k2) = sk.map.apply(k) {
                next.push((k2, d.clone()));
            }
        }
        for (c, a) in sk.comps.iter().zip(at) {
            next.push((c.clone(), Dest::At(a.clone())));
        }
        if let Some(r) = &sk.retained {
            next.push((r.clone(), Dest::Done { choice, at: at.to_vec(), eigen }));
        }
        self.run(&child, tgt, next)
    }

    #[allow(clippy::too_many_arguments)]
    fn absorb(
        &mut self,
        src: &Tableau,
        rule: RuleId,
        p: &PartRef,
        arg: &Arg,
        corr: &Corr,
        list: &[(Term, PartRef)],
        tgt: &Sequent,
    ) -> Result<Tableau> {
        let t = arg.term().ok_or_else(|| bad(format!("{rule} on a gathered existential")))?;
        let loc = list
            .iter()
            .find(|(u, _)| u == t)
            .map(|(_, l)| l.clone())
            .ok_or_else(|| bad(format!("no disjunct for witness `{t}`")))?;
        let skids = apply_tracked_unchecked(&src.seq, rule, p, arg)?;
        let sk = &skids[0];
        let mut next = Corr::new();
        for (k, d) in corr {
            if k != p {
                if let Some(k2) = sk.map.apply(k) {
                    next.push((k2, d.clone()));
                }
            }
        }
        next.push((sk.comps[0].clone(), Dest::At(loc)));
        if let Some(r) = &sk.retained {
            next.push((r.clone(), Dest::Absorb(list.to_vec())));
        }
        self.run(&src.children[0], tgt, next)
    }

    #[allow(clippy::too_many_arguments)]
    fn step(
        &mut self,
        src: &Tableau,
        rule: RuleId,
        p: &PartRef,
        arg: &Arg,
        corr: &Corr,
        l: &PartRef,
        tgt: &Sequent,
    ) -> Result<Tableau> {
        let tr = if p.side == l.side { Some(rule) } else { rule.mirror() };
        let fs = part_at(&src.seq, p)?;
        let ft = part_at(tgt, l)?;
        if !alpha_eq(fs, ft) {
            return Err(bad(format!("`{fs}` replayed onto `{ft}`")));
        }
        let Some(tr) = tr else {
            // (→⊃₊) onto a structural antecedent implication: no target step.
            let skids = apply_tracked_unchecked(&src.seq, rule, p, arg)?;
            let sk = &skids[0];
            let mut next = Corr::new();
            for (k, d) in corr {
                if k != p {
                    if let Some(k2) = sk.map.apply(k) {
                        next.push((k2, d.clone()));
                    }
                }
            }
            let a = locate(tgt, l.side, &[l.path.as_slice(), &[Step::ImpL]].concat())?;
            let b = locate(tgt, l.side, &[l.path.as_slice(), &[Step::ImpR]].concat())?;
            next.push((sk.comps[0].clone(), Dest::At(a)));
            next.push((sk.comps[1].clone(), Dest::At(b)));
            return self.run(&src.children[0], tgt, next);
        };

        let mut node = std::borrow::Cow::Borrowed(src);
        let mut arg = arg.clone();
        if let Arg::Eigen(b) = &arg {
            if tgt.has_free(b) {
                let mut vars = Default::default();
                tgt.all_vars_into(&mut vars);
                self.fresh.reserve(vars);
                let nb = self.fresh.var(b);
                let sigma = [(b.clone(), Term::Var(nb.clone()))];
                let children = src.children.iter().map(|c| subst_tree(c, &sigma, &mut self.fresh)).collect::<Result<Vec<_>>>()?;
                node = std::borrow::Cow::Owned(Tableau::step(src.seq.clone(), rule, p.clone(), Arg::Eigen(nb.clone()), children));
                arg = Arg::Eigen(nb);
            }
        }
        let skids = apply_tracked_unchecked(&node.seq, rule, p, &arg)?;
        let tkids = apply_tracked(tgt, tr, l, &arg)?;
        let others: Vec<PartRef> = corr
            .iter()
            .filter(|(k, d)| k != p && matches!(d, Dest::At(x) if x == l))
            .map(|(k, _)| k.clone())
            .collect();
        if others.iter().any(|o| (o.side == p.side) != (o.sign == p.sign)) {
            return Err(bad("parts of different roles share one image"));
        }
        let mut kids = Vec::with_capacity(tkids.len());
        for (i, (sk, tk)) in skids.iter().zip(&tkids).enumerate() {
            let mut child = node.children[i].clone();
            let mut next = Corr::new();
            for (k, d) in corr {
                if k == p || others.contains(k) {
                    continue;
                }
                let (Some(k2), Some(d2)) = (sk.map.apply(k), map_dest(d, &tk.map)) else { continue };
                next.push((k2, d2));
            }
            for (cs, ct) in sk.comps.iter().zip(&tk.comps) {
                next.push((cs.clone(), Dest::At(ct.clone())));
            }
            match (&sk.retained, &tk.retained) {
                (Some(rs), Some(rt)) => next.push((rs.clone(), Dest::At(rt.clone()))),
                (Some(rs), None) => next.push((rs.clone(), Dest::Done { choice: i, at: tk.comps.clone(), eigen: None })),
                _ => {}
            }
            let mut pending: Vec<PartRef> = others.iter().filter_map(|o| sk.map.apply(o)).collect();
            while let Some(o) = pending.first().cloned() {
                pending.remove(0);
                if let Some(rt) = &tk.retained {
                    next.push((o, Dest::At(rt.clone())));
                    continue;
                }
                let fo = part_at(&child.seq, &o)?;
                let ro = RuleId::for_part(fo, o.side, o.sign).ok_or_else(|| bad(format!("`{fo}` is not decomposable")))?;
                if ro.is_retention() || ro == RuleId::ImpPosR {
                    next.push((o, Dest::Done { choice: i, at: tk.comps.clone(), eigen: arg.eigen().cloned() }));
                    continue;
                }
                let inv = self.invert_at(&child, &o, ro, i, arg.eigen().cloned())?;
                next = next.into_iter().filter_map(|(k, d)| inv.map.apply(&k).map(|k2| (k2, d))).collect();
                pending = pending.into_iter().filter_map(|x| inv.map.apply(&x)).collect();
                for (cs, ct) in inv.comps.iter().zip(&tk.comps) {
                    next.push((cs.clone(), Dest::At(ct.clone())));
                }
                child = inv.proof;
            }
            kids.push(self.run(&child, &tk.seq, next)?);
        }
        Ok(Tableau::step(tgt.clone(), tr, l.clone(), arg, kids))
    }

    fn invert_at(&mut self, src: &Tableau, o: &PartRef, ro: RuleId, choice: usize, eigen: Option<Sym>) -> Result<Inverted> {
        let c = match (ro.arg_kind(), eigen) {
            (crate::calculus::ArgKind::Eigen, Some(c)) => Some(c),
            (crate::calculus::ArgKind::Eigen, None) => {
                let mut vars = Default::default();
                src.seq.all_vars_into(&mut vars);
                self.fresh.reserve(vars);
                Some(self.fresh.var("b"))
            }
            _ => None,
        };
        invert_with(self.kernel, self.system, src, o, ro, choice, c)
    }
}

pub(crate) struct Inverted {
    pub proof: Tableau,
    pub map: SeqMap,
    pub comps: Vec<PartRef>,
}

/// The sequent a non-retention rule at `o` would produce as premise
/// `choice`, with `c` as its eigenvariable. Dropping rules are inverted in
/// place so the rest of the succedent survives.
pub(crate) fn inversion_target(s: &Sequent, o: &PartRef, ro: RuleId, choice: usize, c: Option<&Sym>) -> Result<(Sequent, SeqMap, Vec<PartRef>)> {
    let arg = match c {
        Some(c) => Arg::Eigen(c.clone()),
        None => Arg::None,
    };
    if matches!(ro, RuleId::AllPosR | RuleId::ExNegR) {
        let f = part_at(s, o)?;
        let (v, body) = quantifier(f).ok_or_else(|| bad("not a quantifier"))?;
        let inst = body.instantiate(v, &Term::Var(c.expect("eigen rule").clone()))?;
        let seq = crate::polarity::replace(s, o, inst)?;
        let mut map = SeqMap::identity();
        *map.side_mut(o.side) = crate::polarity::PathMap::except(o.path.clone());
        return Ok((seq, map, vec![o.clone()]));
    }
    let kids: Vec<Child> = apply_tracked_unchecked(s, ro, o, &arg)?;
    let k = kids.into_iter().nth(choice).ok_or_else(|| bad(format!("{ro} has no premise {choice}")))?;
    Ok((k.seq, k.map, k.comps))
}

pub(crate) fn invert_with(kernel: &Kernel, system: System, src: &Tableau, o: &PartRef, ro: RuleId, choice: usize, c: Option<Sym>) -> Result<Inverted> {
    let (tseq, map, comps) = inversion_target(&src.seq, o, ro, choice, c.as_ref())?;
    let mut corr = Corr::new();
    for (l, _) in leaves(&src.seq) {
        if o.is_prefix_of(&l) {
            continue;
        }
        if let Some(l2) = map.apply(&l) {
            corr.push((l, Dest::At(l2)));
        }
    }
    corr.push((o.clone(), Dest::Done { choice, at: comps.clone(), eigen: c }));
    let proof = Replayer::new(kernel, system, src, &tseq).run(src, &tseq, corr)?;
    debug_assert!(proof.size() <= src.size(), "inversion grew the proof");
    Ok(Inverted { proof, map, comps })
}

/// Pair leaves by formula, side and sign. Several source leaves may share
/// a target leaf once its copies run out. Parts under `skip` stay unmapped.
pub(crate) fn pair_leaves(s: &Sequent, t: &Sequent, skip: &[PartRef]) -> Corr {
    let tl = leaves(t);
    let mut used = vec![false; tl.len()];
    let mut corr = Corr::new();
    for (r, f) in leaves(s) {
        if skip.iter().any(|k| k.is_prefix_of(&r)) {
            continue;
        }
        let cands: Vec<usize> = (0..tl.len())
            .filter(|&j| tl[j].0.side == r.side && tl[j].0.sign == r.sign && alpha_eq(f, tl[j].1))
            .collect();
        let pick = cands.iter().copied().find(|&j| !used[j]).or_else(|| cands.last().copied());
        if let Some(j) = pick {
            used[j] = true;
            corr.push((r, Dest::At(tl[j].0.clone())));
        }
    }
    corr
}

/// Replay with leaves paired by formula.
pub(crate) fn adapt(kernel: &Kernel, system: System, src: &Tableau, tgt: &Sequent, skip: &[PartRef]) -> Result<Tableau> {
    if skip.is_empty() && src.seq == *tgt {
        return Ok(src.clone());
    }
    let corr = pair_leaves(&src.seq, tgt, skip);
    Replayer::new(kernel, system, src, tgt).run(src, tgt, corr)
}

/// Replay with an explicit correspondence.
pub(crate) fn replay(kernel: &Kernel, system: System, src: &Tableau, tgt: &Sequent, corr: Corr) -> Result<Tableau> {
    Replayer::new(kernel, system, src, tgt).run(src, tgt, corr)
}

/// The identity correspondence on leaves outside `skip`, through `map`.
pub(crate) fn through(s: &Sequent, map: &SeqMap, skip: &[PartRef]) -> Corr {
    leaves(s)
        .into_iter()
        .filter(|(l, _)| !skip.iter().any(|k| k.is_prefix_of(l)))
        .filter_map(|(l, _)| map.apply(&l).map(|l2| (l, Dest::At(l2))))
        .collect()
}

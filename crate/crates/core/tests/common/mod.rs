//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sn_core::calculus::{Kernel, RuleId, System, Tableau};
use sn_core::metatheory::xf_extended_axiom_in;
use sn_core::polarity::{locate, PartRef, Side, Sign, Step};
use sn_core::search::{prove, SearchBudget};
use sn_core::syntax::{Formula, Sequent, Term};

pub mod conformance;
pub mod goldens;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct Gen {
    pub max_num: u64,
    pub free: Vec<&'static str>,
}

impl Default for Gen {
    fn default() -> Self {
        Gen { max_num: 5, free: vec!["a", "c"] }
    }
}

impl Gen {
    pub fn term(&self, r: &mut Rng8, bound: &[String], depth: usize) -> Term {
        let pick = r.gen_range(0..if depth == 0 { 3 } else { 6 });
        match pick {
            0 => Term::num(r.gen_range(0..=self.max_num)),
            1 if !bound.is_empty() => Term::var(bound.choose(r).unwrap()),
            1 | 2 => Term::var(self.free.choose(r).unwrap()),
            3 => Term::succ(self.term(r, bound, depth - 1)),
            4 => Term::add(self.term(r, bound, depth - 1), self.term(r, bound, depth - 1)),
            _ => Term::mul(self.term(r, bound, depth - 1), self.term(r, bound, depth - 1)),
        }
    }

    pub fn closed_term(&self, r: &mut Rng8) -> Term {
        match r.gen_range(0..3) {
            0 => Term::num(r.gen_range(0..=self.max_num)),
            1 => Term::add(Term::num(r.gen_range(0..3)), Term::num(r.gen_range(0..3))),
            _ => Term::succ(Term::num(r.gen_range(0..self.max_num))),
        }
    }

    pub fn prime(&self, r: &mut Rng8, bound: &[String]) -> Formula {
        match r.gen_range(0..5) {
            0 => Formula::pred(["A", "B", "C"].choose(r).unwrap(), vec![]),
            1 => Formula::pred("P", vec![self.term(r, bound, 1)]),
            2 => Formula::pred("Q", vec![self.term(r, bound, 0), self.term(r, bound, 0)]),
            _ => Formula::eq(self.term(r, bound, 1), self.term(r, bound, 1)),
        }
    }

    /// A closed prime formula, decidable by evaluation.
    pub fn constant_prime(&self, r: &mut Rng8) -> Formula {
        Formula::eq(self.closed_term(r), self.closed_term(r))
    }

    pub fn formula(&self, r: &mut Rng8, bound: &mut Vec<String>, depth: usize) -> Formula {
        if depth == 0 {
            return self.prime(r, bound);
        }
        match r.gen_range(0..8) {
            0 => self.prime(r, bound),
            1 => Formula::neg(self.formula(r, bound, depth - 1)),
            2 => Formula::and(self.formula(r, bound, depth - 1), self.formula(r, bound, depth - 1)),
            3 => Formula::or(self.formula(r, bound, depth - 1), self.formula(r, bound, depth - 1)),
            4 => Formula::imp(self.formula(r, bound, depth - 1), self.formula(r, bound, depth - 1)),
            k => {
                let v = ["x", "y", "z"][bound.len() % 3].to_string();
                bound.push(v.clone());
                let body = self.formula(r, bound, depth - 1);
                bound.pop();
                if k == 5 {
                    Formula::forall(&v, body)
                } else {
                    Formula::exists(&v, body)
                }
            }
        }
    }

    pub fn closed_formula(&self, r: &mut Rng8, depth: usize) -> Formula {
        self.formula(r, &mut Vec::new(), depth)
    }

    /// Surround `x` with noise so that it sits at a part of the given role.
    pub fn wrap(&self, r: &mut Rng8, side: Side, sign: Sign, x: Formula, k: usize) -> Formula {
        if k == 0 || r.gen_bool(0.35) {
            return x;
        }
        let noise = self.closed_formula(r, 1);
        let inner = |r: &mut Rng8, s: Sign| self.wrap(r, side, s, x.clone(), k - 1);
        match (side, sign, r.gen_range(0..3)) {
            (_, s, 0) => Formula::neg(inner(r, s.flip())),
            (Side::Ant, Sign::Pos, 1) => Formula::and(inner(r, Sign::Pos), noise),
            (Side::Ant, Sign::Pos, _) => Formula::and(noise, inner(r, Sign::Pos)),
            (Side::Ant, Sign::Neg, 1) => Formula::or(noise, inner(r, Sign::Neg)),
            (Side::Ant, Sign::Neg, _) => Formula::imp(noise, inner(r, Sign::Neg)),
            (Side::Suc, Sign::Pos, 1) => Formula::or(inner(r, Sign::Pos), noise),
            (Side::Suc, Sign::Pos, _) => Formula::or(noise, inner(r, Sign::Pos)),
            (Side::Suc, Sign::Neg, _) => Formula::and(inner(r, Sign::Neg), noise),
        }
    }
}

/// Path to the unique occurrence of `marker` among the leaves of `s`.
pub fn find_marker(s: &Sequent, marker: &Formula) -> Vec<PartRef> {
    sn_core::polarity::parts(s).into_iter().filter(|(_, f)| *f == marker).map(|(p, _)| p).collect()
}

/// A checked proof built from a complementary pair inside random noise.
pub fn pair_proof(g: &Gen, r: &mut Rng8, kernel: &Kernel, depth: usize) -> Option<Tableau> {
    let a = g.closed_formula(r, depth);
    let marker = Formula::pred("M", vec![]);
    let roles = [
        ((Side::Ant, Sign::Pos), (Side::Ant, Sign::Neg)),
        ((Side::Ant, Sign::Pos), (Side::Suc, Sign::Pos)),
        ((Side::Ant, Sign::Neg), (Side::Suc, Sign::Neg)),
    ];
    let ((s1, g1), (s2, g2)) = *roles.choose(r).unwrap();
    let marker2 = Formula::pred("N", vec![]);
    let wx = g.wrap(r, s1, g1, marker.clone(), 2);
    let wy = g.wrap(r, s2, g2, marker2.clone(), 2);
    let (ant, suc) = if s2 == Side::Ant {
        let suc = r.gen_bool(0.3).then(|| g.closed_formula(r, 1));
        (Formula::and(wx, wy), suc)
    } else {
        (wx, Some(wy))
    };
    let skel = Sequent::new(Some(ant), suc);
    let xp = find_marker(&skel, &marker).pop()?;
    let yp = find_marker(&skel, &marker2).pop()?;
    let s = sn_core::polarity::replace(&sn_core::polarity::replace(&skel, &xp, a.clone()).ok()?, &yp, a).ok()?;
    let xp = locate(&s, xp.side, &xp.path).ok()?;
    let yp = locate(&s, yp.side, &yp.path).ok()?;
    xf_extended_axiom_in(kernel, &s, &xp, &yp).ok()
}

/// A searched proof of a small random goal.
pub fn searched_proof(g: &Gen, r: &mut Rng8, kernel: &Kernel) -> Option<Tableau> {
    let budget = SearchBudget { depth: 2, pool: 2, nodes: 3_000, millis: 200 };
    let piece = |r: &mut Rng8| -> Formula {
        match r.gen_range(0..4) {
            0 => g.constant_prime(r),
            1 => Formula::pred(["A", "B"].choose(r).unwrap(), vec![]),
            _ => {
                let mut b = Vec::new();
                g.formula(r, &mut b, 2)
            }
        }
    };
    let a = piece(r);
    let b = piece(r);
    let c = piece(r);
    let s = match r.gen_range(0..5) {
        0 => Sequent::new(Some(Formula::and(a.clone(), b)), Some(Formula::or(c, a))),
        1 => Sequent::new(None, Some(Formula::or(a.clone(), Formula::neg(a)))),
        2 => Sequent::new(Some(Formula::and(a.clone(), Formula::neg(Formula::or(a, c)))), None),
        3 => Sequent::new(Some(a.clone()), Some(Formula::or(b, a))),
        _ => Sequent::new(None, Some(Formula::or(a, b))),
    };
    prove(kernel, &s, System::Sn, budget).proof()
}

/// Mixed corpus of checked proofs.
pub fn proof_corpus(seed: u64, n: usize) -> Vec<Tableau> {
    let kernel = Kernel::default();
    let g = Gen::default();
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < n && tries < n * 50 {
        tries += 1;
        let d = r.gen_range(1..=3);
        let p = if r.gen_bool(0.7) { pair_proof(&g, &mut r, &kernel, d) } else { searched_proof(&g, &mut r, &kernel) };
        if let Some(p) = p {
            out.push(p);
        }
    }
    out
}

pub fn uses(tb: &Tableau, rule: RuleId) -> bool {
    tb.rules_used().contains(&rule)
}

pub fn step_path(steps: &[Step]) -> Vec<Step> {
    steps.to_vec()
}

pub mod xforms {
    use sn_core::calculus::{least_system, Fresh, Kernel, RuleId, System, Tableau};
    use sn_core::metatheory::*;
    use sn_core::polarity::{leaves, parts, PartRef, Side, Sign};
    use sn_core::syntax::{Formula, Term};
    use sn_core::Error;

    /// Outcome of one transformation: checked output, or a domain refusal.
    pub enum Outcome {
        Ok { name: String, proof: Tableau, system: System, input_size: usize },
        Refused { name: String, err: Error },
        Broken { name: String, err: Error },
    }

    fn domain_refusal(e: &Error) -> bool {
        matches!(
            e,
            Error::NotConstructive(_) | Error::NoDisjunct(_) | Error::NotInvertible(_) | Error::SideConditionFailed(_)
                | Error::EigenNotFresh(_) | Error::CaptureViolation { .. }
        )
    }

    fn record(out: &mut Vec<Outcome>, name: String, r: sn_core::Result<Tableau>, system: System, input_size: usize) {
        out.push(match r {
            Ok(proof) => Outcome::Ok { name, proof, system, input_size },
            Err(err) if domain_refusal(&err) => Outcome::Refused { name, err },
            Err(err) => Outcome::Broken { name, err },
        });
    }

    /// Run every applicable transformation on `tb`.
    pub fn run_all(k: &Kernel, tb: &Tableau) -> Vec<Outcome> {
        let mut out = Vec::new();
        let sys = least_system(tb).max(System::Sn).min(System::Sn);
        let n = tb.size();
        let all_parts: Vec<(PartRef, Formula)> = parts(&tb.seq).into_iter().map(|(p, f)| (p, f.clone())).collect();
        let free: Vec<_> = tb.seq.free_vars().into_iter().collect();
        if !free.is_empty() {
            let binds: Vec<_> = free.iter().enumerate().map(|(i, v)| (v.clone(), Term::num(i as u64 + 1))).collect();
            record(&mut out, "substitute".into(), xf_substitute(k, tb, &binds, sys), sys, n);
        }
        for (p, f) in &all_parts {
            let leaf = leaves(&tb.seq).iter().any(|(q, _)| q == p);
            if leaf {
                if let Some(r) = RuleId::for_part(f, p.side, p.sign) {
                    let arity = if matches!(r, RuleId::AndNegL | RuleId::AndPosR | RuleId::OrPosL | RuleId::OrNegR | RuleId::ImpNegR) { 2 } else { 1 };
                    for c in 0..arity {
                        record(&mut out, format!("invert {p} #{c}"), xf_invert(k, tb, p, c, sys), sys, n);
                    }
                }
            }
            record(&mut out, format!("translate {p}"), xf_translate(k, tb, p, sys), sys, n);
            if let Ok((fwd, _, _)) = detach(&tb.seq, p) {
                if let Ok(t) = xf_translate(k, tb, p, sys) {
                    debug_assert_eq!(t.seq, fwd);
                    record(&mut out, format!("untranslate {p}"), xf_untranslate(k, &t, &tb.seq, p, sys), sys, n);
                }
            }
            if p.side == Side::Suc {
                record(&mut out, format!("shift-right {p}"), xf_shift_right(k, tb, p), System::Sn, n);
                let dp = xf_disjunction(k, tb, p).map(|d| match d {
                    Disjunct::Left(t) | Disjunct::Right(t) => t,
                });
                record(&mut out, format!("disjunction {p}"), dp, System::Sn, n);
            }
            if p.side == Side::Ant && tb.seq.suc.is_none() {
                record(&mut out, format!("neg-right {p}"), xf_neg_right(k, tb, p), System::Sn, n);
                let fnp = !tb.rules_used().contains(&RuleId::ImpPosL);
                if fnp && f.is_prime() {
                    record(&mut out, format!("fn-prime {p}"), xf_fn_prime(k, tb, p), System::Fn, n);
                }
                if fnp && leaf && p.sign == Sign::Pos && matches!(f, Formula::Imp(..)) {
                    record(&mut out, format!("fn-drop-imp {p}"), xf_fn_drop_imp(k, tb, p), System::Pcn, n);
                }
            }
        }
        // Thinning a copy in, then contracting it away again.
        let noise = Formula::pred("W", vec![]);
        for (p, f) in all_parts.iter().take(4) {
            let copy = match p.sign {
                Sign::Pos => f.clone(),
                Sign::Neg => Formula::neg(f.clone()),
            };
            let (target, second) = match p.side {
                Side::Ant => (sn_core::syntax::Sequent::new(Some(Formula::and(tb.seq.ant.clone().unwrap(), copy)), tb.seq.suc.clone()), Side::Ant),
                Side::Suc => (sn_core::syntax::Sequent::new(tb.seq.ant.clone(), Some(Formula::or(tb.seq.suc.clone().unwrap(), copy))), Side::Suc),
            };
            let tail = if p.side == Side::Ant { sn_core::polarity::Step::AndR } else { sn_core::polarity::Step::OrR };
            let mut path = vec![tail];
            if p.sign == Sign::Neg {
                path.push(sn_core::polarity::Step::Not);
            }
            let q = sn_core::polarity::locate(&target, second, &path).unwrap();
            let head = if p.side == Side::Ant { sn_core::polarity::Step::AndL } else { sn_core::polarity::Step::OrL };
            let p1 = PartRef { side: p.side, path: [vec![head], p.path.clone()].concat(), sign: p.sign };
            match xf_thin(k, tb, &target, &q, sys) {
                Ok(t) => {
                    record(&mut out, format!("contract {p}"), xf_contract(k, &t, &p1, &q, sys), sys, t.size());
                    record(&mut out, format!("thin {p}"), Ok(t), sys, n);
                }
                Err(e) => record(&mut out, format!("thin {p}"), Err(e), sys, n),
            }
        }
        if let Some(a) = &tb.seq.ant {
            let target = sn_core::syntax::Sequent::new(Some(Formula::and(noise.clone(), a.clone())), tb.seq.suc.clone());
            record(&mut out, "weaken".into(), xf_weaken_into(k, tb, &target, sys), sys, n);
        }
        // Interchange of disjoint parts with the same role.
        let ls: Vec<PartRef> = all_parts.iter().map(|(p, _)| p.clone()).collect();
        'outer: for (i, a) in ls.iter().enumerate() {
            for b in &ls[i + 1..] {
                if a.side == b.side && a.sign == b.sign && a.disjoint(b) {
                    record(&mut out, format!("interchange {a} {b}"), xf_interchange(k, tb, a, b, sys), sys, n);
                    break 'outer;
                }
            }
        }
        if tb.seq.suc.is_none()
            && tb.seq.is_implication_free() {
                record(&mut out, "impfree-to-pcn".into(), xf_impfree_to_pcn(k, tb), System::Pcn, n);
            }
        let _ = Fresh::avoiding(&[tb]);
        out
    }
}

/// Closed cut formula of length at most `max_len`.
pub fn cut_formula(g: &Gen, r: &mut Rng8, max_len: usize) -> Formula {
    loop {
        let d = r.gen_range(0..=3);
        let a = g.closed_formula(r, d);
        if a.length() <= max_len {
            return a;
        }
    }
}

pub fn imp_free(g: &Gen, r: &mut Rng8, depth: usize) -> Formula {
    loop {
        let a = g.closed_formula(r, depth);
        if a.is_implication_free() {
            return a;
        }
    }
}

/// Antecedent context without implications putting `x` at a part of `sign`.
pub fn wrap_pcn(g: &Gen, r: &mut Rng8, sign: Sign, x: Formula, k: usize) -> Formula {
    let done = k == 0 || r.gen_bool(0.3);
    match sign {
        Sign::Pos if done => x,
        Sign::Neg if done => Formula::neg(x),
        Sign::Pos => match r.gen_range(0..3) {
            0 => Formula::and(wrap_pcn(g, r, Sign::Pos, x, k - 1), imp_free(g, r, 1)),
            1 => Formula::and(imp_free(g, r, 1), wrap_pcn(g, r, Sign::Pos, x, k - 1)),
            _ => Formula::neg(wrap_pcn(g, r, Sign::Neg, x, k - 1)),
        },
        Sign::Neg => match r.gen_range(0..3) {
            0 => Formula::or(wrap_pcn(g, r, Sign::Neg, x, k - 1), imp_free(g, r, 1)),
            1 => Formula::or(imp_free(g, r, 1), wrap_pcn(g, r, Sign::Neg, x, k - 1)),
            _ => Formula::neg(wrap_pcn(g, r, Sign::Pos, x, k - 1)),
        },
    }
}

/// A PCN proof of an antecedent holding `a` at a part of `sign`.
///
/// Either `a` is closed against a second copy of itself, or it is inert
/// and the sequent closes through an unrelated pair.
pub fn pcn_side(g: &Gen, r: &mut Rng8, kernel: &Kernel, a: &Formula, sign: Sign) -> Option<(Tableau, PartRef)> {
    let markers = [Formula::pred("M", vec![]), Formula::pred("N", vec![]), Formula::pred("O", vec![])];
    let use_cut = a.is_implication_free() && r.gen_bool(0.75);
    let d = r.gen_range(0..=2);
    let other = if use_cut { a.clone() } else { imp_free(g, r, d) };
    let wx = wrap_pcn(g, r, sign, markers[0].clone(), 2);
    let y_sign = if use_cut { sign.flip() } else { Sign::Pos };
    let wy = wrap_pcn(g, r, y_sign, markers[1].clone(), 2);
    let mut ant = if r.gen_bool(0.5) { Formula::and(wx, wy) } else { Formula::and(wy, wx) };
    if !use_cut {
        let wz = wrap_pcn(g, r, Sign::Neg, markers[2].clone(), 1);
        ant = if r.gen_bool(0.5) { Formula::and(ant, wz) } else { Formula::and(wz, ant) };
    }
    let skel = Sequent::new(Some(ant), None);
    let at: Vec<Option<PartRef>> = markers.iter().map(|m| find_marker(&skel, m).pop()).collect();
    let fills = [a.clone(), other.clone(), other];
    let mut s = skel.clone();
    for (p, f) in at.iter().zip(&fills) {
        if let Some(p) = p {
            s = sn_core::polarity::replace(&s, p, f.clone()).ok()?;
        }
    }
    let relocate = |p: &Option<PartRef>| p.as_ref().and_then(|p| locate(&s, p.side, &p.path).ok());
    let xp = relocate(&at[0]).filter(|p| p.sign == sign)?;
    let yp = relocate(&at[1])?;
    let proof = if use_cut { xf_extended_axiom_in(kernel, &s, &xp, &yp).ok()? } else { xf_extended_axiom_in(kernel, &s, &yp, &relocate(&at[2])?).ok()? };
    kernel.accepts(&proof, System::Pcn).then_some((proof, xp))
}

/// A random cut between PCN proofs on a formula of length at most `max_len`.
pub fn cut_instance(g: &Gen, r: &mut Rng8, kernel: &Kernel, max_len: usize) -> Option<sn_core::cutelim::CutInstance> {
    let a = cut_formula(g, r, max_len);
    let (left, left_part) = pcn_side(g, r, kernel, &a, Sign::Pos)?;
    let (right, right_part) = pcn_side(g, r, kernel, &a, Sign::Neg)?;
    Some(sn_core::cutelim::CutInstance { left, right, left_part, right_part })
}

/// Premises for the restricted SN cut: `Γ |- G[A]` and `F[A] |- Δ` with
/// `A` of the same sign in both, closed by pairing `A` with a copy.
pub struct SnCut {
    pub p1: Tableau,
    pub q: PartRef,
    pub p2: Tableau,
    pub r: PartRef,
}

pub fn suc_wrap(g: &Gen, r: &mut Rng8, sign: Sign, x: Formula, k: usize) -> Formula {
    let done = k == 0 || r.gen_bool(0.4);
    match sign {
        Sign::Pos if done => x,
        Sign::Neg if done => Formula::neg(x),
        Sign::Pos => match r.gen_range(0..3) {
            0 => Formula::or(suc_wrap(g, r, Sign::Pos, x, k - 1), imp_free(g, r, 1)),
            1 => Formula::or(imp_free(g, r, 1), suc_wrap(g, r, Sign::Pos, x, k - 1)),
            _ => Formula::neg(suc_wrap(g, r, Sign::Neg, x, k - 1)),
        },
        Sign::Neg => match r.gen_range(0..2) {
            0 => Formula::and(suc_wrap(g, r, Sign::Neg, x, k - 1), imp_free(g, r, 1)),
            _ => Formula::neg(suc_wrap(g, r, Sign::Pos, x, k - 1)),
        },
    }
}

fn paired(kernel: &Kernel, skel: &Sequent, fill: &Formula, x: &Formula, y: &Formula) -> Option<(Tableau, PartRef, PartRef)> {
    let xp = find_marker(skel, x).pop()?;
    let yp = find_marker(skel, y).pop()?;
    let s = sn_core::polarity::replace(&sn_core::polarity::replace(skel, &xp, fill.clone()).ok()?, &yp, fill.clone()).ok()?;
    let xp = locate(&s, xp.side, &xp.path).ok()?;
    let yp = locate(&s, yp.side, &yp.path).ok()?;
    let p = xf_extended_axiom_in(kernel, &s, &xp, &yp).ok()?;
    kernel.accepts(&p, System::Sn).then_some((p, xp, yp))
}

fn quantified(f: &Formula) -> bool {
    match f {
        Formula::Prime(..) => false,
        Formula::Neg(a) => quantified(a),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => quantified(a) || quantified(b),
        _ => true,
    }
}

/// With `implications`, an implication is planted in `Γ`. The succedent
/// `Δ` is kept free of quantifiers.
pub fn sn_cut(g: &Gen, r: &mut Rng8, kernel: &Kernel, implications: bool) -> Option<SnCut> {
    let d = r.gen_range(0..=2);
    let a = imp_free(g, r, d);
    let sign = if r.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
    let (m, n) = (Formula::pred("M", vec![]), Formula::pred("N", vec![]));
    // Γ |- G[A]: the succedent copy pairs with one in Γ.
    let g_suc = suc_wrap(g, r, sign, m.clone(), 2);
    let mut gamma = wrap_pcn(g, r, sign, n.clone(), 1);
    if implications {
        gamma = Formula::and(gamma, Formula::imp(imp_free(g, r, 0), imp_free(g, r, 0)));
    } else if r.gen_bool(0.5) {
        gamma = Formula::and(gamma, imp_free(g, r, 1));
    }
    let (p1, q, _) = paired(kernel, &Sequent::new(Some(gamma), Some(g_suc)), &a, &m, &n)?;
    // F[A] |- Δ: pair with Δ or with an opposite copy in F.
    let fx = wrap_pcn(g, r, sign, m.clone(), 2);
    let skel = if !quantified(&a) && r.gen_bool(0.5) {
        let delta = if r.gen_bool(0.5) { Formula::or(suc_wrap(g, r, sign, n.clone(), 1), imp_free(g, r, 0)) } else { suc_wrap(g, r, sign, n.clone(), 1) };
        Sequent::new(Some(fx), Some(delta))
    } else {
        let fy = wrap_pcn(g, r, sign.flip(), n.clone(), 1);
        let delta = r.gen_bool(0.5).then(|| imp_free(g, r, 1)).filter(|d| !quantified(d));
        Sequent::new(Some(Formula::and(fx, fy)), delta)
    };
    let (p2, rp, _) = paired(kernel, &skel, &a, &m, &n)?;
    (q.side == Side::Suc && q.sign == sign && rp.sign == sign).then_some(SnCut { p1, q, p2, r: rp })
}

/// A random instance of a CN axiom schema.
pub fn schema_instance(g: &Gen, r: &mut Rng8, schema: sn_core::embedding::Schema) -> Formula {
    use sn_core::embedding::Schema;
    use sn_core::syntax::parse_formula;
    let x: sn_core::syntax::Sym = sn_core::syntax::sym("x");
    match schema {
        Schema::S2_18 | Schema::S2_19 => {
            let mut bound = vec!["x".to_string()];
            let d = r.gen_range(0..=2);
            let body = g.formula(r, &mut bound, d);
            let t = g.term(r, &[], 1);
            let inst = body.subst(&x, &t).unwrap_or_else(|_| body.clone());
            if schema == Schema::S2_18 {
                Formula::imp(Formula::Forall(x, Box::new(body)), inst)
            } else {
                Formula::imp(inst, Formula::Exists(x, Box::new(body)))
            }
        }
        Schema::Leibniz => {
            let (s, t) = (g.term(r, &[], 1), g.term(r, &[], 1));
            let mut bound = vec!["z".to_string()];
            let d = r.gen_range(0..=1);
            let body = g.formula(r, &mut bound, d);
            let z = sn_core::syntax::sym("z");
            let (bs, bt) = (body.subst(&z, &s), body.subst(&z, &t));
            match (bs, bt) {
                (Ok(bs), Ok(bt)) => Formula::imp(Formula::eq(s, t), Formula::imp(bs, bt)),
                _ => Formula::imp(Formula::eq(s.clone(), t.clone()), Formula::imp(Formula::eq(s.clone(), s), Formula::eq(t.clone(), t))),
            }
        }
        _ => {
            let shape = schema.shape();
            let mut metas: std::collections::BTreeMap<char, String> = std::collections::BTreeMap::new();
            let mut out = String::new();
            let chars: Vec<char> = shape.chars().collect();
            for (i, &c) in chars.iter().enumerate() {
                let alone = (i == 0 || !chars[i - 1].is_alphanumeric()) && chars.get(i + 1).is_none_or(|n| !n.is_alphanumeric());
                let meta = alone && matches!(c, 'A' | 'B' | 'C' | 'a' | 'b' | 'c' | 'x');
                if !meta {
                    out.push(c);
                    continue;
                }
                let text = metas
                    .entry(c)
                    .or_insert_with(|| {
                        if c.is_uppercase() {
                            let d = r.gen_range(0..=2);
                            format!("({})", g.closed_formula(r, d))
                        } else {
                            format!("({})", g.term(r, &[], 1))
                        }
                    })
                    .clone();
                out.push_str(&text);
            }
            parse_formula(&out).unwrap_or_else(|e| panic!("{out}: {e}"))
        }
    }
}

fn true_prime(g: &Gen, r: &mut Rng8, want: bool) -> Formula {
    let sig = sn_core::syntax::Signature::default();
    loop {
        let p = g.constant_prime(r);
        if sig.truth(&p) == Some(want) {
            return p;
        }
    }
}

/// A closed formula with a proof from no assumptions.
pub fn truthy(g: &Gen, r: &mut Rng8, depth: usize) -> Formula {
    if depth == 0 {
        return match r.gen_range(0..2) {
            0 => true_prime(g, r, true),
            _ => Formula::neg(true_prime(g, r, false)),
        };
    }
    match r.gen_range(0..6) {
        0 => Formula::and(truthy(g, r, depth - 1), truthy(g, r, depth - 1)),
        1 => Formula::or(truthy(g, r, depth - 1), imp_free(g, r, 1)),
        2 => Formula::or(imp_free(g, r, 1), truthy(g, r, depth - 1)),
        3 => Formula::neg(Formula::neg(truthy(g, r, depth - 1))),
        4 => Formula::neg(Formula::and(true_prime(g, r, false), imp_free(g, r, 1))),
        _ => truthy(g, r, 0),
    }
}

/// A searched proof of `|- G[A]` with `A` a disjunction, or an existential
/// when `existential` is set, and the address of `A`.
pub fn extraction_goal(g: &Gen, r: &mut Rng8, kernel: &Kernel, existential: bool) -> Option<(Tableau, PartRef)> {
    let a = if existential {
        let t = g.closed_term(r);
        let x = Term::var("x");
        let body = match r.gen_range(0..4) {
            0 => Formula::eq(x, t),
            1 => Formula::eq(Term::add(x, Term::num(1)), Term::succ(t)),
            2 => Formula::and(Formula::eq(x, t), truthy(g, r, 0)),
            _ => Formula::or(Formula::pred("P", vec![x.clone()]), Formula::eq(t, x)),
        };
        Formula::exists("x", body)
    } else if r.gen_bool(0.5) {
        Formula::or(truthy(g, r, 1), imp_free(g, r, 1))
    } else {
        Formula::or(imp_free(g, r, 1), truthy(g, r, 1))
    };
    let marker = Formula::pred("M", vec![]);
    let skel = Sequent::new(None, Some(suc_wrap(g, r, Sign::Pos, marker.clone(), 2)));
    let at = find_marker(&skel, &marker).pop()?;
    let s = sn_core::polarity::replace(&skel, &at, a).ok()?;
    let at = locate(&s, at.side, &at.path).ok()?;
    let budget = SearchBudget { depth: 3, pool: 2, nodes: 20_000, millis: 500 };
    let tb = prove(kernel, &s, System::Sn, budget).proof()?;
    Some((tb, at))
}

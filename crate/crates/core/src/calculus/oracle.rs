//! Decision layers for axiom 8: every numeral instance of an open sequent is
//! closed by one of the first seven axioms.
//!
//! An instance closes iff one of its prime parts is a witness: a true or
//! false constant part of the right side and sign, or a pair of parts whose
//! arguments agree in value. The oracle therefore reasons about the finite
//! list of candidate witnesses rather than about instances.

use std::collections::{BTreeMap, BTreeSet};

use super::rules::System;
use crate::polarity::{leaves, Side, Sign};
use crate::syntax::{Formula, Sequent, Signature, Sym, Term, ADD, EQ, MUL};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict8 {
    Certified(String),
    Refuted(Vec<(Sym, u64)>),
    Unknown(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest numeral tried per variable during exhaustive testing.
    pub bound: u64,
    /// Cap on the number of tuples tested.
    pub max_tuples: usize,
    /// Nesting depth of case splits.
    pub split_depth: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { bound: 8, max_tuples: 20_000, split_depth: 2 }
    }
}

#[derive(Clone, Debug)]
enum Witness {
    /// A constant prime part that closes when it has this truth value.
    Single(Formula, bool),
    /// Two prime parts that close when their arguments agree.
    Pair(Vec<Term>, Vec<Term>),
}

fn witnesses(s: &Sequent, system: System) -> Vec<Witness> {
    let prime_leaves: Vec<(Side, Sign, &Formula)> =
        leaves(s).into_iter().filter(|(_, f)| f.is_prime()).map(|(r, f)| (r.side, r.sign, f)).collect();
    let mut out = Vec::new();
    for &(side, sign, f) in &prime_leaves {
        let want = match (side, sign) {
            (Side::Ant, Sign::Neg) => Some(true),
            (Side::Ant, Sign::Pos) => Some(false),
            (Side::Suc, Sign::Pos) if system != System::Pcn => Some(true),
            (Side::Suc, Sign::Neg) if system != System::Pcn => Some(false),
            _ => None,
        };
        if let Some(w) = want {
            out.push(Witness::Single(f.clone(), w));
        }
    }
    let pairs: &[((Side, Sign), (Side, Sign))] = if system == System::Pcn {
        &[((Side::Ant, Sign::Pos), (Side::Ant, Sign::Neg))]
    } else {
        &[
            ((Side::Ant, Sign::Pos), (Side::Ant, Sign::Neg)),
            ((Side::Ant, Sign::Pos), (Side::Suc, Sign::Pos)),
            ((Side::Ant, Sign::Neg), (Side::Suc, Sign::Neg)),
        ]
    };
    for &(k1, k2) in pairs {
        for &(s1, g1, f1) in &prime_leaves {
            if (s1, g1) != k1 {
                continue;
            }
            for &(s2, g2, f2) in &prime_leaves {
                if (s2, g2) != k2 {
                    continue;
                }
                if let (Formula::Prime(p, xs), Formula::Prime(q, ys)) = (f1, f2) {
                    if p == q && xs.len() == ys.len() {
                        out.push(Witness::Pair(xs.clone(), ys.clone()));
                    }
                }
            }
        }
    }
    out
}

// ---- polynomial normal forms over the natural numbers ----

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Atom {
    Var(Sym),
    Opaque(String),
}

type Mono = Vec<Atom>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Poly(BTreeMap<Mono, i128>);

impl Poly {
    fn constant(c: i128) -> Poly {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(Vec::new(), c);
        }
        Poly(m)
    }

    fn atom(a: Atom) -> Poly {
        let mut m = BTreeMap::new();
        m.insert(vec![a], 1);
        Poly(m)
    }

    fn add(&self, o: &Poly) -> Poly {
        let mut m = self.0.clone();
        for (k, v) in &o.0 {
            let e = m.entry(k.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                m.remove(k);
            }
        }
        Poly(m)
    }

    fn scale(&self, c: i128) -> Poly {
        if c == 0 {
            return Poly::default();
        }
        Poly(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(-1))
    }

    fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::default();
        for (k1, v1) in &self.0 {
            for (k2, v2) in &o.0 {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                k.sort();
                out = out.add(&Poly(BTreeMap::from([(k, v1 * v2)])));
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero for every valuation: a nonzero constant and all coefficients
    /// of the same sign (monomials over naturals are never negative).
    fn never_zero(&self) -> bool {
        let c = self.0.get(&Vec::new()).copied().unwrap_or(0);
        if c == 0 {
            return false;
        }
        self.0.values().all(|v| (*v > 0) == (c > 0))
    }
}

fn normal_form(t: &Term) -> Poly {
    match t {
        Term::Var(v) => Poly::atom(Atom::Var(v.clone())),
        Term::Zero => Poly::default(),
        Term::Succ(a) => normal_form(a).add(&Poly::constant(1)),
        Term::App(f, args) if &**f == ADD && args.len() == 2 => normal_form(&args[0]).add(&normal_form(&args[1])),
        Term::App(f, args) if &**f == MUL && args.len() == 2 => normal_form(&args[0]).mul(&normal_form(&args[1])),
        Term::App(..) => Poly::atom(Atom::Opaque(t.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tri {
    True,
    False,
    Unknown,
}

/// An equation assumed true or false in the current case.
#[derive(Clone, Debug)]
struct Hyp {
    diff: Poly,
    holds: bool,
}

fn eq_status(s: &Term, t: &Term, hyps: &[Hyp]) -> Tri {
    if s == t {
        return Tri::True;
    }
    let d = normal_form(s).sub(&normal_form(t));
    if d.is_zero() {
        return Tri::True;
    }
    if d.never_zero() {
        return Tri::False;
    }
    for h in hyps {
        let Some((m, &a)) = h.diff.0.iter().find(|(k, _)| !k.is_empty()) else { continue };
        let b = d.0.get(m).copied().unwrap_or(0);
        let r = d.scale(a).sub(&h.diff.scale(b));
        if h.holds {
            if r.is_zero() {
                return Tri::True;
            }
            if r.never_zero() {
                return Tri::False;
            }
        } else if r.is_zero() && b != 0 {
            return Tri::False;
        }
    }
    Tri::Unknown
}

fn holds_symbolically(w: &Witness, hyps: &[Hyp], sig: &Signature) -> bool {
    match w {
        Witness::Single(Formula::Prime(p, args), want) if &**p == EQ && args.len() == 2 => {
            let st = eq_status(&args[0], &args[1], hyps);
            st == if *want { Tri::True } else { Tri::False }
        }
        Witness::Single(f, want) => sig.truth(f) == Some(*want),
        Witness::Pair(xs, ys) => xs.iter().zip(ys).all(|(x, y)| eq_status(x, y, hyps) == Tri::True),
    }
}

fn subst_witness(w: &Witness, v: &Sym, by: &Term) -> Witness {
    let sub = |ts: &Vec<Term>| ts.iter().map(|t| t.subst_many(&[(v.clone(), by.clone())])).collect::<Vec<_>>();
    match w {
        Witness::Single(Formula::Prime(p, args), want) => Witness::Single(Formula::Prime(p.clone(), sub(args)), *want),
        Witness::Single(f, want) => Witness::Single(f.clone(), *want),
        Witness::Pair(xs, ys) => Witness::Pair(sub(xs), sub(ys)),
    }
}

/// Equations worth splitting on.
fn split_candidates(ws: &[Witness], hyps: &[Hyp]) -> Vec<(Term, Term)> {
    let mut out: Vec<(Term, Term)> = Vec::new();
    let mut push = |s: &Term, t: &Term| {
        if eq_status(s, t, hyps) == Tri::Unknown && !out.iter().any(|(a, b)| (a == s && b == t) || (a == t && b == s)) {
            out.push((s.clone(), t.clone()));
        }
    };
    for w in ws {
        match w {
            Witness::Single(Formula::Prime(p, args), _) if &**p == EQ && args.len() == 2 => push(&args[0], &args[1]),
            Witness::Pair(xs, ys) => xs.iter().zip(ys).for_each(|(x, y)| push(x, y)),
            _ => {}
        }
    }
    out.truncate(12);
    out
}

fn certify(ws: &[Witness], hyps: &[Hyp], sig: &Signature, depth: usize) -> Option<String> {
    if let Some(w) = ws.iter().find(|w| holds_symbolically(w, hyps, sig)) {
        return Some(match w {
            Witness::Single(f, true) => format!("`{f}` is always true"),
            Witness::Single(f, false) => format!("`{f}` is always false"),
            Witness::Pair(xs, ys) => format!(
                "arguments ({}) and ({}) always agree",
                xs.iter().map(Term::to_string).collect::<Vec<_>>().join(", "),
                ys.iter().map(Term::to_string).collect::<Vec<_>>().join(", ")
            ),
        });
    }
    if depth == 0 {
        return None;
    }
    for (s, t) in split_candidates(ws, hyps) {
        let diff = normal_form(&s).sub(&normal_form(&t));
        // Case s = t: substitute when one side is a variable not occurring in the other.
        let yes = match (&s, &t) {
            (Term::Var(v), other) | (other, Term::Var(v)) if !other.contains_var(v) => {
                let ws2: Vec<Witness> = ws.iter().map(|w| subst_witness(w, v, other)).collect();
                certify(&ws2, hyps, sig, depth - 1)
            }
            _ => {
                let mut h = hyps.to_vec();
                h.push(Hyp { diff: diff.clone(), holds: true });
                certify(ws, &h, sig, depth - 1)
            }
        };
        let Some(yes) = yes else { continue };
        let mut h = hyps.to_vec();
        h.push(Hyp { diff, holds: false });
        if let Some(no) = certify(ws, &h, sig, depth - 1) {
            return Some(format!("case {s} = {t}: {yes}; case {s} ≠ {t}: {no}"));
        }
    }
    None
}

fn holds_concretely(w: &Witness, env: &BTreeMap<Sym, u64>, sig: &Signature) -> bool {
    let look = |v: &str| env.get(v).copied();
    match w {
        Witness::Single(f, want) => matches!(sig.decide_with(f, &look), Ok(b) if b == *want),
        Witness::Pair(xs, ys) => xs.iter().zip(ys).all(|(x, y)| {
            x == y || matches!((sig.eval_with(x, &look), sig.eval_with(y, &look)), (Ok(a), Ok(b)) if a == b)
        }),
    }
}

/// Search small tuples for an instance that no witness closes.
fn counterexample(vars: &[Sym], ws: &[Witness], sig: &Signature, cfg: &OracleConfig) -> Option<Vec<(Sym, u64)>> {
    let n = vars.len() as u32;
    let mut bound = cfg.bound;
    while bound > 0 && (bound + 1).checked_pow(n).is_none_or(|c| c as usize > cfg.max_tuples) {
        bound -= 1;
    }
    let mut tuple = vec![0u64; vars.len()];
    loop {
        let env: BTreeMap<Sym, u64> = vars.iter().cloned().zip(tuple.iter().copied()).collect();
        if !ws.iter().any(|w| holds_concretely(w, &env, sig)) {
            return Some(env.into_iter().collect());
        }
        let mut i = 0;
        loop {
            if i == tuple.len() {
                return None;
            }
            tuple[i] += 1;
            if tuple[i] <= bound {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Decide axiom 8 for an open sequent.
pub fn decide_axiom8(s: &Sequent, system: System, sig: &Signature, cfg: &OracleConfig) -> Verdict8 {
    let vars: Vec<Sym> = s.free_vars().into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    if vars.is_empty() {
        return Verdict8::Unknown("sequent has no free variables".into());
    }
    if system == System::Pcn && s.suc.is_some() {
        return Verdict8::Unknown("PCN sequents have an empty succedent".into());
    }
    let ws = witnesses(s, system);
    let cert = certify(&ws, &[], sig, cfg.split_depth);
    if let Some(cex) = counterexample(&vars, &ws, sig, cfg) {
        return Verdict8::Refuted(cex);
    }
    match cert {
        Some(c) => Verdict8::Certified(c),
        None => Verdict8::Unknown(format!("no counterexample with components up to {}, but no certificate", cfg.bound)),
    }
}

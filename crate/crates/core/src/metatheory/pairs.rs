//! Proofs from a complementary pair of parts with a common skeleton:
//! extended axioms for equivalent formulas and equality substitution.

use crate::calculus::{by_rule, Arg, Fresh, Kernel, RuleId, System, Tableau};
use crate::error::{Error, Result};
use crate::polarity::{part_at, PartRef, Side, Sign, Step};
use crate::syntax::{equivalent, Formula, Sequent, Sym, Term};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    /// `x` antecedent positive, `y` antecedent negative.
    BothLeft,
    /// `x` antecedent positive, `y` succedent positive.
    Positive,
    /// `x` antecedent negative, `y` succedent negative.
    Negative,
}

fn mode_of(x: &PartRef, y: &PartRef) -> Option<(Mode, bool)> {
    use Side::*;
    use Sign::*;
    match ((x.side, x.sign), (y.side, y.sign)) {
        ((Ant, Pos), (Ant, Neg)) => Some((Mode::BothLeft, false)),
        ((Ant, Neg), (Ant, Pos)) => Some((Mode::BothLeft, true)),
        ((Ant, Pos), (Suc, Pos)) => Some((Mode::Positive, false)),
        ((Suc, Pos), (Ant, Pos)) => Some((Mode::Positive, true)),
        ((Ant, Neg), (Suc, Neg)) => Some((Mode::Negative, false)),
        ((Suc, Neg), (Ant, Neg)) => Some((Mode::Negative, true)),
        _ => None,
    }
}

struct Pairer<'k> {
    kernel: &'k Kernel,
    system: System,
    fresh: Fresh,
}

fn mapped(c: &crate::calculus::Child, p: &PartRef) -> Result<PartRef> {
    c.map.apply(p).ok_or_else(|| Error::Replay(format!("{p} vanished")))
}

fn sub(p: &PartRef, step: Step, s: &Sequent) -> Result<PartRef> {
    crate::polarity::locate(s, p.side, &[p.path.as_slice(), &[step]].concat())
}

fn quant(f: &Formula) -> Option<(&Sym, &Formula)> {
    match f {
        Formula::Forall(v, b) | Formula::Exists(v, b) => Some((v, b)),
        _ => None,
    }
}

impl Pairer<'_> {
    fn pair(&mut self, s: &Sequent, x: &PartRef, y: &PartRef) -> Result<Tableau> {
        let (mode, swap) = mode_of(x, y).ok_or_else(|| Error::ShapeMismatch(format!("{x} and {y} are not complementary")))?;
        let (x, y) = if swap { (y, x) } else { (x, y) };
        let fx = part_at(s, x)?;
        let fy = part_at(s, y)?;
        use Formula::*;
        use RuleId::*;
        let mismatch = || Error::ShapeMismatch(format!("`{fx}` and `{fy}` differ in shape"));
        match (fx, fy) {
            (Prime(..), Prime(..)) => self.kernel.leaf(s.clone(), self.system),
            (Neg(_), Neg(_)) => self.pair(s, &sub(x, Step::Not, s)?, &sub(y, Step::Not, s)?),
            (And(..), And(..)) | (Or(..), Or(..)) => {
                let and = matches!(fx, And(..));
                // Split the structural side, decompose the leaf side.
                let (rule, at, structural_is_x) = match (mode, and) {
                    (Mode::BothLeft, true) => (AndNegL, y, true),
                    (Mode::BothLeft, false) => (OrPosL, x, false),
                    (Mode::Positive, true) => (AndPosR, y, true),
                    (Mode::Positive, false) => (OrPosL, x, false),
                    (Mode::Negative, true) => (AndNegL, x, false),
                    (Mode::Negative, false) => (OrNegR, y, true),
                };
                let (l, r) = if and { (Step::AndL, Step::AndR) } else { (Step::OrL, Step::OrR) };
                by_rule(s, rule, at, Arg::None, |i, c| {
                    let step = if i == 0 { l } else { r };
                    if structural_is_x {
                        let x2 = sub(&mapped(&c, x)?, step, &c.seq)?;
                        self.pair(&c.seq, &x2, &c.comps[0])
                    } else {
                        let y2 = sub(&mapped(&c, y)?, step, &c.seq)?;
                        self.pair(&c.seq, &c.comps[0], &y2)
                    }
                })
            }
            (Forall(..), Forall(..)) | (Exists(..), Exists(..)) => {
                let all = matches!(fx, Forall(..));
                let (v1, _) = quant(fx).ok_or_else(mismatch)?;
                let b = self.fresh.var(v1);
                // The eigenvariable side goes first, then the witness side uses it.
                let (first, first_at, second, x_first) = match (mode, all) {
                    (Mode::BothLeft, true) => (AllNegL, y, AllPosL, false),
                    (Mode::BothLeft, false) => (ExPosL, x, ExNegL, true),
                    (Mode::Positive, true) => (AllPosR, y, AllPosL, false),
                    (Mode::Positive, false) => (ExPosL, x, ExPosR, true),
                    (Mode::Negative, true) => (AllNegL, x, AllNegR, true),
                    (Mode::Negative, false) => (ExNegR, y, ExNegL, false),
                };
                let other = if x_first { y } else { x };
                by_rule(s, first, first_at, Arg::Eigen(b.clone()), |_, c| {
                    let held = c.comps[0].clone();
                    let other2 = mapped(&c, other)?;
                    by_rule(&c.seq, second, &other2, Arg::Term(Term::Var(b.clone())), |_, c2| {
                        let held2 = mapped(&c2, &held)?;
                        let inst = c2.comps[0].clone();
                        if x_first {
                            self.pair(&c2.seq, &held2, &inst)
                        } else {
                            self.pair(&c2.seq, &inst, &held2)
                        }
                    })
                })
            }
            (Imp(..), Imp(..)) => match mode {
                Mode::BothLeft => by_rule(s, ImpPosL, x, Arg::None, |i, c| {
                    let y2 = mapped(&c, y)?;
                    if i == 0 {
                        let y1 = sub(&y2, Step::ImpL, &c.seq)?;
                        self.pair(&c.seq, &y1, &c.comps[0])
                    } else {
                        let y1 = sub(&y2, Step::ImpR, &c.seq)?;
                        self.pair(&c.seq, &c.comps[0], &y1)
                    }
                }),
                Mode::Positive => by_rule(s, ImpPosR, y, Arg::None, |_, c| {
                    let x2 = mapped(&c, x)?;
                    let (ya, yb) = (c.comps[0].clone(), c.comps[1].clone());
                    by_rule(&c.seq, ImpPosL, &x2, Arg::None, |i, c2| {
                        if i == 0 {
                            self.pair(&c2.seq, &mapped(&c2, &ya)?, &c2.comps[0])
                        } else {
                            self.pair(&c2.seq, &c2.comps[0], &mapped(&c2, &yb)?)
                        }
                    })
                }),
                Mode::Negative => by_rule(s, ImpNegR, y, Arg::None, |i, c| {
                    let x2 = mapped(&c, x)?;
                    if i == 0 {
                        self.pair(&c.seq, &sub(&x2, Step::ImpL, &c.seq)?, &c.comps[0])
                    } else {
                        self.pair(&c.seq, &sub(&x2, Step::ImpR, &c.seq)?, &c.comps[0])
                    }
                }),
            },
            _ => Err(mismatch()),
        }
    }
}

fn build(kernel: &Kernel, s: &Sequent, x: &PartRef, y: &PartRef, system: System) -> Result<Tableau> {
    let mut vars = Default::default();
    s.all_vars_into(&mut vars);
    let mut p = Pairer { kernel, system, fresh: Fresh::new(vars) };
    p.pair(s, x, y)
}

fn least(s: &Sequent) -> System {
    if s.suc.is_none() && s.is_implication_free() {
        System::Pcn
    } else {
        System::Sn
    }
}

/// A proof of `s` from complementary parts holding equivalent formulas.
pub fn xf_extended_axiom_in(kernel: &Kernel, s: &Sequent, x: &PartRef, y: &PartRef) -> Result<Tableau> {
    let a = part_at(s, x)?;
    let b = part_at(s, y)?;
    if !equivalent(a, b, &kernel.sig) {
        return Err(Error::NotEquivalent(a.to_string(), b.to_string()));
    }
    build(kernel, s, x, y, least(s))
}

/// The three minimal forms: `A |- B`, `∼A |- ∼B` and `A ∧ ∼B |-`.
pub fn extended_axiom_sequent(shape: u8, a: &Formula, b: &Formula) -> Result<(Sequent, PartRef, PartRef)> {
    let (s, x, y) = match shape {
        1 => (Sequent::new(Some(a.clone()), Some(b.clone())), (Side::Ant, vec![]), (Side::Suc, vec![])),
        2 => (
            Sequent::new(Some(Formula::neg(a.clone())), Some(Formula::neg(b.clone()))),
            (Side::Ant, vec![Step::Not]),
            (Side::Suc, vec![Step::Not]),
        ),
        3 => (
            Sequent::ant(Formula::and(a.clone(), Formula::neg(b.clone()))),
            (Side::Ant, vec![Step::AndL]),
            (Side::Ant, vec![Step::AndR, Step::Not]),
        ),
        _ => return Err(Error::Format(format!("extended axiom shape {shape} is not 1, 2 or 3"))),
    };
    let x = crate::polarity::locate(&s, x.0, &x.1)?;
    let y = crate::polarity::locate(&s, y.0, &y.1)?;
    Ok((s, x, y))
}

pub fn xf_extended_axiom(kernel: &Kernel, shape: u8, a: &Formula, b: &Formula) -> Result<Tableau> {
    let (s, x, y) = extended_axiom_sequent(shape, a, b)?;
    xf_extended_axiom_in(kernel, &s, &x, &y)
}

/// The six substitution forms for `s = t` and `A(x)`, numbered as
/// `A(s) |- A(t)`, `A(t) |- A(s)`, `∼A(s) |- ∼A(t)`, `∼A(t) |- ∼A(s)`,
/// `A(s) ∧ ∼A(t) |-` and `A(t) ∧ ∼A(s) |-`, each with `s = t` conjoined on
/// the left.
pub fn equality_sequent(kind: u8, s: &Term, t: &Term, x: &Sym, a: &Formula) -> Result<(Sequent, PartRef, PartRef)> {
    let e = Formula::eq(s.clone(), t.clone());
    let a_s = a.subst(x, s)?;
    let a_t = a.subst(x, t)?;
    let (first, second) = if kind % 2 == 1 { (a_s, a_t) } else { (a_t, a_s) };
    let (seq, xp, yp) = match kind {
        1 | 2 => (
            Sequent::new(Some(Formula::and(e, first)), Some(second)),
            (Side::Ant, vec![Step::AndR]),
            (Side::Suc, vec![]),
        ),
        3 | 4 => (
            Sequent::new(Some(Formula::and(e, Formula::neg(first))), Some(Formula::neg(second))),
            (Side::Ant, vec![Step::AndR, Step::Not]),
            (Side::Suc, vec![Step::Not]),
        ),
        5 | 6 => (
            Sequent::ant(Formula::and(Formula::and(e, first), Formula::neg(second))),
            (Side::Ant, vec![Step::AndL, Step::AndR]),
            (Side::Ant, vec![Step::AndR, Step::Not]),
        ),
        _ => return Err(Error::Format(format!("equality kind {kind} is not in 1..=6"))),
    };
    let xp = crate::polarity::locate(&seq, xp.0, &xp.1)?;
    let yp = crate::polarity::locate(&seq, yp.0, &yp.1)?;
    Ok((seq, xp, yp))
}

/// Proof of an equality-substitution sequent; leaves close by axiom 8.
pub fn xf_equality(kernel: &Kernel, kind: u8, s: &Term, t: &Term, x: &Sym, a: &Formula) -> Result<Tableau> {
    let (seq, xp, yp) = equality_sequent(kind, s, t, x, a)?;
    build(kernel, &seq, &xp, &yp, least(&seq))
}

/// Same, for explicit parts of an arbitrary sequent holding `A(s)` and `A(t)`.
pub fn xf_equality_in(kernel: &Kernel, seq: &Sequent, x: &PartRef, y: &PartRef) -> Result<Tableau> {
    build(kernel, seq, x, y, least(seq))
}

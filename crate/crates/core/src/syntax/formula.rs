use std::collections::BTreeSet;

use super::term::{sym, Sym, Term};
use crate::error::{Error, Result};

pub const EQ: &str = "=";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Prime(Sym, Vec<Term>),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(Sym, Box<Formula>),
    Exists(Sym, Box<Formula>),
}

impl Formula {
    pub fn eq(s: Term, t: Term) -> Formula {
        Formula::Prime(sym(EQ), vec![s, t])
    }

    pub fn pred(name: &str, args: Vec<Term>) -> Formula {
        Formula::Prime(sym(name), args)
    }

    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(v: &str, a: Formula) -> Formula {
        Formula::Forall(sym(v), Box::new(a))
    }

    pub fn exists(v: &str, a: Formula) -> Formula {
        Formula::Exists(sym(v), Box::new(a))
    }

    pub fn is_prime(&self) -> bool {
        matches!(self, Formula::Prime(..))
    }

    /// Number of logical symbols.
    pub fn length(&self) -> usize {
        match self {
            Formula::Prime(..) => 0,
            Formula::Neg(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => 1 + a.length(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.length() + b.length(),
        }
    }

    pub fn is_implication_free(&self) -> bool {
        match self {
            Formula::Prime(..) => true,
            Formula::Imp(..) => false,
            Formula::Neg(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => a.is_implication_free(),
            Formula::And(a, b) | Formula::Or(a, b) => a.is_implication_free() && b.is_implication_free(),
        }
    }

    fn free_into(&self, bound: &mut Vec<Sym>, out: &mut BTreeSet<Sym>) {
        match self {
            Formula::Prime(_, args) => {
                let mut vs = BTreeSet::new();
                args.iter().for_each(|a| a.vars_into(&mut vs));
                out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Neg(a) => a.free_into(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.free_into(bound, out);
                b.free_into(bound, out);
            }
            Formula::Forall(v, a) | Formula::Exists(v, a) => {
                bound.push(v.clone());
                a.free_into(bound, out);
                bound.pop();
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Sym> {
        let mut out = BTreeSet::new();
        self.free_into(&mut Vec::new(), &mut out);
        out
    }

    pub fn has_free(&self, v: &str) -> bool {
        self.free_vars().iter().any(|w| &**w == v)
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_vars_into(&self, out: &mut BTreeSet<Sym>) {
        match self {
            Formula::Prime(_, args) => args.iter().for_each(|a| a.vars_into(out)),
            Formula::Neg(a) => a.all_vars_into(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.all_vars_into(out);
                b.all_vars_into(out);
            }
            Formula::Forall(v, a) | Formula::Exists(v, a) => {
                out.insert(v.clone());
                a.all_vars_into(out);
            }
        }
    }

    /// Terms occurring as arguments of prime subformulas, with their subterms.
    pub fn terms_into(&self, out: &mut Vec<Term>) {
        match self {
            Formula::Prime(_, args) => args.iter().for_each(|a| a.subterms_into(out)),
            Formula::Neg(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => a.terms_into(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.terms_into(out);
                b.terms_into(out);
            }
        }
    }

    /// Simultaneous capture-checked substitution of terms for free variables.
    pub fn subst_many(&self, sigma: &[(Sym, Term)]) -> Result<Formula> {
        if sigma.is_empty() {
            return Ok(self.clone());
        }
        Ok(match self {
            Formula::Prime(p, args) => Formula::Prime(p.clone(), args.iter().map(|a| a.subst_many(sigma)).collect()),
            Formula::Neg(a) => Formula::neg(a.subst_many(sigma)?),
            Formula::And(a, b) => Formula::and(a.subst_many(sigma)?, b.subst_many(sigma)?),
            Formula::Or(a, b) => Formula::or(a.subst_many(sigma)?, b.subst_many(sigma)?),
            Formula::Imp(a, b) => Formula::imp(a.subst_many(sigma)?, b.subst_many(sigma)?),
            Formula::Forall(v, a) | Formula::Exists(v, a) => {
                let inner: Vec<(Sym, Term)> = sigma.iter().filter(|(x, _)| x != v).cloned().collect();
                for (x, t) in &inner {
                    if t.contains_var(v) && a.has_free(x) {
                        return Err(Error::CaptureViolation { var: x.to_string(), captured: v.to_string() });
                    }
                }
                let body = Box::new(a.subst_many(&inner)?);
                match self {
                    Formula::Forall(..) => Formula::Forall(v.clone(), body),
                    _ => Formula::Exists(v.clone(), body),
                }
            }
        })
    }

    pub fn subst(&self, var: &str, by: &Term) -> Result<Formula> {
        self.subst_many(&[(sym(var), by.clone())])
    }

    /// Instance `A(t)` of a quantifier body `A(x)`.
    pub fn instantiate(&self, var: &Sym, by: &Term) -> Result<Formula> {
        self.subst_many(&[(var.clone(), by.clone())])
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub ant: Option<Formula>,
    pub suc: Option<Formula>,
}

impl Sequent {
    pub fn new(ant: Option<Formula>, suc: Option<Formula>) -> Sequent {
        Sequent { ant, suc }
    }

    pub fn ant(a: Formula) -> Sequent {
        Sequent { ant: Some(a), suc: None }
    }

    pub fn suc(b: Formula) -> Sequent {
        Sequent { ant: None, suc: Some(b) }
    }

    pub fn empty() -> Sequent {
        Sequent::default()
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.ant.iter().chain(self.suc.iter())
    }

    pub fn free_vars(&self) -> BTreeSet<Sym> {
        let mut out = BTreeSet::new();
        for f in self.formulas() {
            out.extend(f.free_vars());
        }
        out
    }

    pub fn has_free(&self, v: &str) -> bool {
        self.formulas().any(|f| f.has_free(v))
    }

    pub fn all_vars_into(&self, out: &mut BTreeSet<Sym>) {
        for f in self.formulas() {
            f.all_vars_into(out);
        }
    }

    pub fn is_implication_free(&self) -> bool {
        self.formulas().all(Formula::is_implication_free)
    }

    pub fn subst_many(&self, sigma: &[(Sym, Term)]) -> Result<Sequent> {
        Ok(Sequent {
            ant: self.ant.as_ref().map(|f| f.subst_many(sigma)).transpose()?,
            suc: self.suc.as_ref().map(|f| f.subst_many(sigma)).transpose()?,
        })
    }

    pub fn length(&self) -> usize {
        self.formulas().map(Formula::length).sum()
    }
}

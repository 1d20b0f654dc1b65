use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::formula::{Formula, EQ};
use super::term::{sym, Sym, Term, ADD, MUL};
use crate::error::{Error, Result};

pub type FnEval = Arc<dyn Fn(&[u64]) -> u64 + Send + Sync>;
pub type PredEval = Arc<dyn Fn(&[u64]) -> bool + Send + Sync>;

const BUILTINS: [&str; 5] = ["0", "s", ADD, MUL, EQ];

/// Function and predicate symbols beyond the built-in `0`, `s`, `+`, `*`, `=`.
///
/// Predicates that are not registered are schematic letters: they parse and
/// take part in structural reasoning, but no constant instance of them has a
/// truth value.
#[derive(Clone, Default)]
pub struct Signature {
    functions: BTreeMap<Sym, (usize, FnEval)>,
    predicates: BTreeMap<Sym, (usize, PredEval)>,
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Signature")
            .field("functions", &self.functions.iter().map(|(k, v)| (k.clone(), v.0)).collect::<Vec<_>>())
            .field("predicates", &self.predicates.iter().map(|(k, v)| (k.clone(), v.0)).collect::<Vec<_>>())
            .finish()
    }
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn add_function(&mut self, name: &str, arity: usize, eval: FnEval) -> Result<()> {
        if BUILTINS.contains(&name) {
            return Err(Error::Shadowing(name.into()));
        }
        self.functions.insert(sym(name), (arity, eval));
        Ok(())
    }

    pub fn add_predicate(&mut self, name: &str, arity: usize, decide: PredEval) -> Result<()> {
        if BUILTINS.contains(&name) {
            return Err(Error::Shadowing(name.into()));
        }
        self.predicates.insert(sym(name), (arity, decide));
        Ok(())
    }

    pub fn function(&self, name: &str) -> Option<&(usize, FnEval)> {
        self.functions.get(name)
    }

    pub fn is_interpreted(&self, pred: &str) -> bool {
        pred == EQ || self.predicates.contains_key(pred)
    }

    /// Check arities of every known symbol used in `f`.
    pub fn validate(&self, f: &Formula) -> Result<()> {
        match f {
            Formula::Prime(p, args) => {
                let want = if &**p == EQ { Some(2) } else { self.predicates.get(p).map(|e| e.0) };
                if let Some(want) = want {
                    if want != args.len() {
                        return Err(Error::Arity { name: p.to_string(), expected: want, got: args.len() });
                    }
                }
                args.iter().try_for_each(|t| self.validate_term(t))
            }
            Formula::Neg(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => self.validate(a),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                self.validate(a)?;
                self.validate(b)
            }
        }
    }

    fn validate_term(&self, t: &Term) -> Result<()> {
        match t {
            Term::Var(_) | Term::Zero => Ok(()),
            Term::Succ(a) => self.validate_term(a),
            Term::App(f, args) => {
                let want = match &**f {
                    ADD | MUL => 2,
                    _ => self.functions.get(f).map(|e| e.0).ok_or_else(|| Error::UnknownFunction(f.to_string()))?,
                };
                if want != args.len() {
                    return Err(Error::Arity { name: f.to_string(), expected: want, got: args.len() });
                }
                args.iter().try_for_each(|a| self.validate_term(a))
            }
        }
    }

    /// Value of a term whose variables are read from `env`.
    pub fn eval_with(&self, t: &Term, env: &dyn Fn(&str) -> Option<u64>) -> Result<u64> {
        match t {
            Term::Var(v) => env(v).ok_or_else(|| Error::NonNumericalTerm(t.to_string())),
            Term::Zero => Ok(0),
            Term::Succ(a) => self.eval_with(a, env)?.checked_add(1).ok_or_else(|| Error::Overflow(t.to_string())),
            Term::App(f, args) => {
                let vals = args.iter().map(|a| self.eval_with(a, env)).collect::<Result<Vec<_>>>()?;
                match &**f {
                    ADD => vals[0].checked_add(vals[1]).ok_or_else(|| Error::Overflow(t.to_string())),
                    MUL => vals[0].checked_mul(vals[1]).ok_or_else(|| Error::Overflow(t.to_string())),
                    _ => {
                        let (arity, eval) = self.functions.get(f).ok_or_else(|| Error::UnknownFunction(f.to_string()))?;
                        if *arity != vals.len() {
                            return Err(Error::Arity { name: f.to_string(), expected: *arity, got: vals.len() });
                        }
                        Ok(eval(&vals))
                    }
                }
            }
        }
    }

    pub fn eval_term(&self, t: &Term) -> Result<u64> {
        if !t.is_numerical() {
            return Err(Error::NonNumericalTerm(t.to_string()));
        }
        self.eval_with(t, &|_| None)
    }

    pub fn decide_with(&self, p: &Formula, env: &dyn Fn(&str) -> Option<u64>) -> Result<bool> {
        let Formula::Prime(name, args) = p else {
            return Err(Error::NotPrime(p.to_string()));
        };
        let vals = args.iter().map(|a| self.eval_with(a, env)).collect::<Result<Vec<_>>>()?;
        if &**name == EQ {
            return Ok(vals[0] == vals[1]);
        }
        let (arity, decide) = self.predicates.get(name).ok_or_else(|| Error::UnknownPredicate(name.to_string()))?;
        if *arity != vals.len() {
            return Err(Error::Arity { name: name.to_string(), expected: *arity, got: vals.len() });
        }
        Ok(decide(&vals))
    }

    pub fn eval_prime(&self, p: &Formula) -> Result<bool> {
        let Formula::Prime(_, args) = p else {
            return Err(Error::NotPrime(p.to_string()));
        };
        if !args.iter().all(Term::is_numerical) {
            return Err(Error::NotConstant(p.to_string()));
        }
        self.decide_with(p, &|_| None)
    }

    /// Truth value of a constant prime formula, `None` when it has none.
    pub fn truth(&self, p: &Formula) -> Option<bool> {
        self.eval_prime(p).ok()
    }
}

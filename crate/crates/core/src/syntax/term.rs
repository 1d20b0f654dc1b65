use std::collections::BTreeSet;
use std::sync::Arc;

/// Interned-ish identifier shared by variables, functions and predicates.
pub type Sym = Arc<str>;

pub fn sym(s: &str) -> Sym {
    Arc::from(s)
}

pub const ADD: &str = "+";
pub const MUL: &str = "*";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Sym),
    Zero,
    Succ(Box<Term>),
    App(Sym, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(sym(name))
    }

    /// The numeral `0^(n)`.
    pub fn num(n: u64) -> Term {
        let mut t = Term::Zero;
        for _ in 0..n {
            t = Term::Succ(Box::new(t));
        }
        t
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::App(sym(ADD), vec![a, b])
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::App(sym(MUL), vec![a, b])
    }

    /// Value of the term if it is a numeral.
    pub fn numeral_value(&self) -> Option<u64> {
        let mut n = 0u64;
        let mut t = self;
        loop {
            match t {
                Term::Zero => return Some(n),
                Term::Succ(inner) => {
                    n += 1;
                    t = inner;
                }
                _ => return None,
            }
        }
    }

    pub fn is_numerical(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Zero => true,
            Term::Succ(t) => t.is_numerical(),
            Term::App(_, args) => args.iter().all(Term::is_numerical),
        }
    }

    pub fn vars_into(&self, out: &mut BTreeSet<Sym>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero => {}
            Term::Succ(t) => t.vars_into(out),
            Term::App(_, args) => args.iter().for_each(|a| a.vars_into(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<Sym> {
        let mut out = BTreeSet::new();
        self.vars_into(&mut out);
        out
    }

    pub fn contains_var(&self, v: &str) -> bool {
        match self {
            Term::Var(w) => &**w == v,
            Term::Zero => false,
            Term::Succ(t) => t.contains_var(v),
            Term::App(_, args) => args.iter().any(|a| a.contains_var(v)),
        }
    }

    /// Replace variables by terms; terms carry no binders so this never fails.
    pub fn subst(&self, var: &str, by: &Term) -> Term {
        match self {
            Term::Var(w) if &**w == var => by.clone(),
            Term::Var(_) | Term::Zero => self.clone(),
            Term::Succ(t) => Term::succ(t.subst(var, by)),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| a.subst(var, by)).collect()),
        }
    }

    pub fn subst_many(&self, sigma: &[(Sym, Term)]) -> Term {
        match self {
            Term::Var(w) => sigma
                .iter()
                .find(|(v, _)| v == w)
                .map(|(_, t)| t.clone())
                .unwrap_or_else(|| self.clone()),
            Term::Zero => Term::Zero,
            Term::Succ(t) => Term::succ(t.subst_many(sigma)),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| a.subst_many(sigma)).collect()),
        }
    }

    /// All subterms, outermost first.
    pub fn subterms_into(&self, out: &mut Vec<Term>) {
        out.push(self.clone());
        match self {
            Term::Var(_) | Term::Zero => {}
            Term::Succ(t) => t.subterms_into(out),
            Term::App(_, args) => args.iter().for_each(|a| a.subterms_into(out)),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero => 1,
            Term::Succ(t) => 1 + t.size(),
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }
}

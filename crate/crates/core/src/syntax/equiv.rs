use super::formula::Formula;
use super::signature::Signature;
use super::term::{Sym, Term};

/// Bound-variable correspondence while walking two formulas in parallel.
type Binders<'a> = Vec<(&'a Sym, &'a Sym)>;

fn lookup<'a>(env: &Binders<'a>, v: &Sym, left: bool) -> Option<usize> {
    env.iter().rposition(|(a, b)| if left { *a == v } else { *b == v })
}

fn same_term(s: &Term, t: &Term, env: &Binders<'_>) -> bool {
    match (s, t) {
        (Term::Var(a), Term::Var(b)) => match (lookup(env, a, true), lookup(env, b, false)) {
            (None, None) => a == b,
            (Some(i), Some(j)) => i == j,
            _ => false,
        },
        (Term::Zero, Term::Zero) => true,
        (Term::Succ(a), Term::Succ(b)) => same_term(a, b, env),
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| same_term(x, y, env))
        }
        _ => false,
    }
}

fn walk<'a>(a: &'a Formula, b: &'a Formula, sig: &Signature, env: &mut Binders<'a>) -> bool {
    match (a, b) {
        (Formula::Prime(p, xs), Formula::Prime(q, ys)) => {
            p == q
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(x, y)| {
                    same_term(x, y, env)
                        || (x.is_numerical()
                            && y.is_numerical()
                            && matches!((sig.eval_term(x), sig.eval_term(y)), (Ok(u), Ok(v)) if u == v))
                })
        }
        (Formula::Neg(x), Formula::Neg(y)) => walk(x, y, sig, env),
        (Formula::And(x1, x2), Formula::And(y1, y2))
        | (Formula::Or(x1, x2), Formula::Or(y1, y2))
        | (Formula::Imp(x1, x2), Formula::Imp(y1, y2)) => walk(x1, y1, sig, env) && walk(x2, y2, sig, env),
        (Formula::Forall(u, x), Formula::Forall(v, y)) | (Formula::Exists(u, x), Formula::Exists(v, y)) => {
            env.push((u, v));
            let ok = walk(x, y, sig, env);
            env.pop();
            ok
        }
        _ => false,
    }
}

/// Same skeleton, and at each argument position either the same term (up to
/// renaming of bound variables) or two numerical terms of equal value.
pub fn equivalent(a: &Formula, b: &Formula, sig: &Signature) -> bool {
    a == b || walk(a, b, sig, &mut Vec::new())
}

/// Equality up to renaming of bound variables.
pub fn alpha_eq(a: &Formula, b: &Formula) -> bool {
    fn go<'a>(a: &'a Formula, b: &'a Formula, env: &mut Binders<'a>) -> bool {
        match (a, b) {
            (Formula::Prime(p, xs), Formula::Prime(q, ys)) => {
                p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| same_term(x, y, env))
            }
            (Formula::Neg(x), Formula::Neg(y)) => go(x, y, env),
            (Formula::And(x1, x2), Formula::And(y1, y2))
            | (Formula::Or(x1, x2), Formula::Or(y1, y2))
            | (Formula::Imp(x1, x2), Formula::Imp(y1, y2)) => go(x1, y1, env) && go(x2, y2, env),
            (Formula::Forall(u, x), Formula::Forall(v, y)) | (Formula::Exists(u, x), Formula::Exists(v, y)) => {
                env.push((u, v));
                let ok = go(x, y, env);
                env.pop();
                ok
            }
            _ => false,
        }
    }
    a == b || go(a, b, &mut Vec::new())
}

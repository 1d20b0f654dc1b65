use crate::calculus::{Arg, Fresh, Just, Kernel, System, Tableau};
use crate::error::Result;
use crate::syntax::{Sym, Term};

/// Apply `sigma` to every node, renaming eigenvariables that occur in its
/// range. With `rename_all` every eigenvariable is renamed apart.
fn go(tb: &Tableau, sigma: &[(Sym, Term)], fresh: &mut Fresh, rename_all: bool) -> Result<Tableau> {
    if sigma.is_empty() && !rename_all {
        return Ok(tb.clone());
    }
    let seq = tb.seq.subst_many(sigma)?;
    let (just, inner) = match &tb.just {
        Just::Axiom(k) => (Just::Axiom(*k), Vec::new()),
        Just::Rule { rule, part, arg } => {
            let mut inner: Vec<(Sym, Term)> = sigma.to_vec();
            let arg = match arg {
                Arg::None => Arg::None,
                Arg::Term(t) => Arg::Term(t.subst_many(sigma)),
                Arg::Eigen(b) => {
                    inner.retain(|(x, _)| x != b);
                    if rename_all || inner.iter().any(|(_, t)| t.contains_var(b)) {
                        let nb = fresh.var(b);
                        inner.push((b.clone(), Term::Var(nb.clone())));
                        Arg::Eigen(nb)
                    } else {
                        Arg::Eigen(b.clone())
                    }
                }
            };
            (Just::Rule { rule: *rule, part: part.clone(), arg }, inner)
        }
    };
    let children = tb.children.iter().map(|c| go(c, &inner, fresh, rename_all)).collect::<Result<Vec<_>>>()?;
    Ok(Tableau { seq, just, children })
}

/// Substitute throughout a tree. Leaf labels are kept as they were.
pub(crate) fn subst_tree(tb: &Tableau, sigma: &[(Sym, Term)], fresh: &mut Fresh) -> Result<Tableau> {
    for (_, t) in sigma {
        fresh.reserve(t.vars());
    }
    go(tb, sigma, fresh, false)
}

/// Give every eigenvariable a new name unused anywhere else.
pub fn rename_apart(tb: &Tableau, fresh: &mut Fresh) -> Tableau {
    go(tb, &[], fresh, true).expect("renaming to fresh names cannot capture")
}

/// Recompute axiom labels after the leaves' sequents changed.
pub(crate) fn relabel(tb: &Tableau, kernel: &Kernel, system: System) -> Result<Tableau> {
    if tb.children.is_empty() {
        return kernel.leaf(tb.seq.clone(), system);
    }
    let children = tb.children.iter().map(|c| relabel(c, kernel, system)).collect::<Result<Vec<_>>>()?;
    Ok(Tableau { seq: tb.seq.clone(), just: tb.just.clone(), children })
}

/// Simultaneous substitution applied to a whole proof.
pub fn xf_substitute(kernel: &Kernel, tb: &Tableau, bindings: &[(Sym, Term)], system: System) -> Result<Tableau> {
    tb.seq.subst_many(bindings)?;
    let mut fresh = Fresh::avoiding(&[tb]);
    let hygienic = rename_apart(tb, &mut fresh);
    let out = subst_tree(&hygienic, bindings, &mut fresh)?;
    relabel(&out, kernel, system)
}

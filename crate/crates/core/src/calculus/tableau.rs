use std::collections::BTreeSet;

use super::axioms::{AxiomKind, Kernel};
use super::rules::{apply_tracked, Arg, Child, RuleId, System};
use crate::error::{Error, Result};
use crate::polarity::PartRef;
use crate::syntax::{Sequent, Sym};

/// How a tableau node is justified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Just {
    Axiom(AxiomKind),
    Rule { rule: RuleId, part: PartRef, arg: Arg },
}

/// A proof tree: every node carries its sequent, leaves name an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub seq: Sequent,
    pub just: Just,
    pub children: Vec<Tableau>,
}

impl Tableau {
    pub fn leaf(seq: Sequent, kind: AxiomKind) -> Tableau {
        Tableau { seq, just: Just::Axiom(kind), children: Vec::new() }
    }

    pub fn step(seq: Sequent, rule: RuleId, part: PartRef, arg: Arg, children: Vec<Tableau>) -> Tableau {
        Tableau { seq, just: Just::Rule { rule, part, arg }, children }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tableau::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.children.iter().map(Tableau::height).max().unwrap_or(0)
    }

    pub fn rule(&self) -> Option<RuleId> {
        match &self.just {
            Just::Rule { rule, .. } => Some(*rule),
            Just::Axiom(_) => None,
        }
    }

    pub fn axiom(&self) -> Option<AxiomKind> {
        match &self.just {
            Just::Axiom(k) => Some(*k),
            Just::Rule { .. } => None,
        }
    }

    /// Every node in preorder.
    pub fn nodes(&self) -> Vec<&Tableau> {
        let mut out = vec![self];
        let mut i = 0;
        while i < out.len() {
            let n = out[i];
            out.extend(n.children.iter());
            i += 1;
        }
        out
    }

    pub fn rules_used(&self) -> BTreeSet<RuleId> {
        self.nodes().into_iter().filter_map(Tableau::rule).collect()
    }

    pub fn axioms_used(&self) -> BTreeSet<AxiomKind> {
        self.nodes().into_iter().filter_map(Tableau::axiom).collect()
    }

    pub fn eigenvariables(&self) -> BTreeSet<Sym> {
        self.nodes()
            .into_iter()
            .filter_map(|n| match &n.just {
                Just::Rule { arg: Arg::Eigen(b), .. } => Some(b.clone()),
                _ => None,
            })
            .collect()
    }

    /// Every variable name occurring anywhere in the tree.
    pub fn all_vars(&self) -> BTreeSet<Sym> {
        let mut out = BTreeSet::new();
        for n in self.nodes() {
            n.seq.all_vars_into(&mut out);
            if let Just::Rule { arg, .. } = &n.just {
                match arg {
                    Arg::Term(t) => t.vars_into(&mut out),
                    Arg::Eigen(b) => {
                        out.insert(b.clone());
                    }
                    Arg::None => {}
                }
            }
        }
        out
    }
}

/// Supplies variable names not yet used in a given set.
#[derive(Clone, Debug)]
pub struct Fresh {
    used: BTreeSet<Sym>,
    next: usize,
}

impl Fresh {
    pub fn new(used: BTreeSet<Sym>) -> Fresh {
        Fresh { used, next: 0 }
    }

    pub fn avoiding(tbs: &[&Tableau]) -> Fresh {
        let mut used = BTreeSet::new();
        for tb in tbs {
            used.extend(tb.all_vars());
        }
        Fresh::new(used)
    }

    pub fn reserve(&mut self, vars: impl IntoIterator<Item = Sym>) {
        self.used.extend(vars);
    }

    pub fn var(&mut self, hint: &str) -> Sym {
        let stem: String = hint.trim_end_matches(|c: char| c.is_ascii_digit() || c == '_').to_string();
        let stem = if stem.is_empty() { "b".to_string() } else { stem };
        loop {
            self.next += 1;
            let cand: Sym = format!("{stem}_{}", self.next).into();
            if !self.used.contains(&cand) {
                self.used.insert(cand.clone());
                return cand;
            }
        }
    }
}

impl Kernel {
    /// A leaf for `s` if some axiom closes it.
    pub fn leaf(&self, s: Sequent, system: System) -> Result<Tableau> {
        match self.close(&s, system) {
            Some(k) => Ok(Tableau::leaf(s, k)),
            None => match self.match_axiom(&s, system) {
                super::axioms::AxiomOutcome::Unknown(why) => Err(Error::Axiom8Unknown(format!("`{s}`: {why}"))),
                _ => Err(Error::Rejected { node: s.to_string(), reason: "not an axiom".into() }),
            },
        }
    }
}

/// Apply a rule and build the node from proofs of the premises.
pub fn by_rule(
    s: &Sequent,
    rule: RuleId,
    part: &PartRef,
    arg: Arg,
    mut prove: impl FnMut(usize, Child) -> Result<Tableau>,
) -> Result<Tableau> {
    let kids = apply_tracked(s, rule, part, &arg)?;
    let mut children = Vec::with_capacity(kids.len());
    for (i, c) in kids.into_iter().enumerate() {
        children.push(prove(i, c)?);
    }
    Ok(Tableau::step(s.clone(), rule, part.clone(), arg, children))
}

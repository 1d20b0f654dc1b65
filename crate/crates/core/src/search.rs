//! Bounded proof search by iterative deepening.
//!
//! Invertible rules that keep the rest of the sequent are applied eagerly
//! and do not count towards depth. Every other application is a choice
//! point: retention rules over a term pool, and the rules that drop the
//! rest of the succedent.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::calculus::{apply_tracked, Arg, ArgKind, AxiomOutcome, Fresh, Kernel, RuleId, System, Tableau, Verdict};
use crate::polarity::{leaves, PartRef, Side};
use crate::syntax::{alpha_eq, Sequent, Sym, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchBudget {
    /// Choice steps allowed on one branch.
    pub depth: usize,
    /// Largest numeral in the term pool.
    pub pool: u64,
    pub nodes: usize,
    pub millis: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { depth: 4, pool: 2, nodes: 200_000, millis: 5_000 }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(Tableau),
    Exhausted,
    /// A branch reached by invertible steps only ends in this sequent,
    /// which is no axiom and admits no rule.
    Refuted(Sequent),
}

impl SearchOutcome {
    pub fn proof(self) -> Option<Tableau> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

enum Res {
    Found(Tableau),
    Fail,
    Stuck(Sequent),
    Abort,
}

struct Searcher<'k> {
    kernel: &'k Kernel,
    system: System,
    budget: SearchBudget,
    nodes: usize,
    deadline: Instant,
}

/// Rules applied without backtracking: invertible, and nothing is lost.
fn forced(s: &Sequent, rule: RuleId, part: &PartRef) -> bool {
    use RuleId::*;
    match rule {
        AndNegL | AndPosR | OrPosL | OrNegR | ImpNegR | AllNegL | ExPosL => true,
        AllPosR | ExNegR => leaves(s).iter().all(|(r, _)| r.side == Side::Ant || r == part),
        _ => false,
    }
}

fn eigen_for(s: &Sequent) -> Sym {
    let mut vars = BTreeSet::new();
    s.all_vars_into(&mut vars);
    Fresh::new(vars).var("b")
}

fn term_pool(s: &Sequent, bound: u64) -> Vec<Term> {
    let free = s.free_vars();
    let mut pool: Vec<Term> = (0..=bound).map(Term::num).collect();
    pool.extend(free.iter().map(|v| Term::Var(v.clone())));
    let mut terms = Vec::new();
    for f in s.formulas() {
        f.terms_into(&mut terms);
    }
    let mut subs = Vec::new();
    for t in &terms {
        t.subterms_into(&mut subs);
    }
    for t in subs {
        if t.vars().iter().all(|v| free.contains(v)) && !pool.contains(&t) {
            pool.push(t);
        }
    }
    pool
}

/// Is the new part of a retention step already present with the same role?
fn redundant(s: &Sequent, kid_seq: &Sequent, comp: &PartRef) -> bool {
    let Ok(f) = crate::polarity::part_at(kid_seq, comp) else { return false };
    leaves(s).iter().any(|(r, g)| r.side == comp.side && r.sign == comp.sign && alpha_eq(f, g))
}

impl Searcher<'_> {
    fn admitted(&self, rule: RuleId) -> bool {
        rule.admitted(self.system)
    }

    fn dfs(&mut self, s: &Sequent, depth: usize, only_forced: bool, branch: &mut Vec<Sequent>) -> Res {
        self.nodes += 1;
        if self.nodes > self.budget.nodes || Instant::now() > self.deadline {
            return Res::Abort;
        }
        if let Some(k) = self.kernel.close(s, self.system) {
            return Res::Found(Tableau::leaf(s.clone(), k));
        }
        if branch.contains(s) {
            return Res::Fail;
        }
        let undecided = matches!(self.kernel.match_axiom(s, self.system), AxiomOutcome::Unknown(_));
        let parts: Vec<(PartRef, RuleId)> = leaves(s)
            .into_iter()
            .filter_map(|(p, f)| RuleId::for_part(f, p.side, p.sign).map(|r| (p, r)))
            .filter(|(_, r)| self.admitted(*r))
            .collect();
        branch.push(s.clone());
        let out = self.expand(s, depth, only_forced, &parts, undecided, branch);
        branch.pop();
        out
    }

    fn expand(&mut self, s: &Sequent, depth: usize, only_forced: bool, parts: &[(PartRef, RuleId)], undecided: bool, branch: &mut Vec<Sequent>) -> Res {
        if let Some((p, r)) = parts.iter().find(|(p, r)| forced(s, *r, p)) {
            let arg = if r.arg_kind() == ArgKind::Eigen { Arg::Eigen(eigen_for(s)) } else { Arg::None };
            return self.apply(s, *r, p, arg, depth, only_forced, branch);
        }
        if parts.is_empty() {
            return if only_forced && !undecided && !(self.system == System::Pcn && s.suc.is_some()) {
                Res::Stuck(s.clone())
            } else {
                Res::Fail
            };
        }
        if depth == 0 {
            return Res::Fail;
        }
        let pool = term_pool(s, self.budget.pool);
        for (p, r) in parts {
            let args: Vec<Arg> = match r.arg_kind() {
                ArgKind::Eigen => vec![Arg::Eigen(eigen_for(s))],
                ArgKind::Term => pool.iter().cloned().map(Arg::Term).collect(),
                ArgKind::None => vec![Arg::None],
            };
            for arg in args {
                if r.is_retention() {
                    let Ok(kids) = apply_tracked(s, *r, p, &arg) else { continue };
                    if kids.iter().all(|k| redundant(s, &k.seq, &k.comps[0])) {
                        continue;
                    }
                }
                match self.apply(s, *r, p, arg, depth - 1, false, branch) {
                    Res::Found(t) => return Res::Found(t),
                    Res::Abort => return Res::Abort,
                    _ => {}
                }
            }
        }
        Res::Fail
    }

    #[allow(clippy::too_many_arguments)]
    fn apply(&mut self, s: &Sequent, rule: RuleId, p: &PartRef, arg: Arg, depth: usize, only_forced: bool, branch: &mut Vec<Sequent>) -> Res {
        let Ok(kids) = apply_tracked(s, rule, p, &arg) else { return Res::Fail };
        let mut children = Vec::with_capacity(kids.len());
        for k in kids {
            if self.system == System::Pcn && k.seq.suc.is_some() {
                return Res::Fail;
            }
            match self.dfs(&k.seq, depth, only_forced, branch) {
                Res::Found(t) => children.push(t),
                other => return other,
            }
        }
        Res::Found(Tableau::step(s.clone(), rule, p.clone(), arg, children))
    }
}

/// Search for a proof of `goal` in `system`.
pub fn prove(kernel: &Kernel, goal: &Sequent, system: System, budget: SearchBudget) -> SearchOutcome {
    if system == System::Pcn && goal.suc.is_some() {
        return SearchOutcome::Exhausted;
    }
    let mut sr = Searcher {
        kernel,
        system,
        budget,
        nodes: 0,
        deadline: Instant::now() + Duration::from_millis(budget.millis),
    };
    for depth in 0..=budget.depth {
        let mut branch = Vec::new();
        match sr.dfs(goal, depth, true, &mut branch) {
            Res::Found(t) => {
                return match kernel.check(&t, system) {
                    Verdict::Accepted { .. } => SearchOutcome::Found(t),
                    Verdict::Rejected { .. } => SearchOutcome::Exhausted,
                };
            }
            Res::Stuck(s) => return SearchOutcome::Refuted(s),
            Res::Abort => return SearchOutcome::Exhausted,
            Res::Fail => {}
        }
    }
    SearchOutcome::Exhausted
}

use super::axioms::Kernel;
use super::rules::{apply_rule, RuleId, System};
use super::tableau::{Just, Tableau};
use crate::polarity::part_at;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Accepted; warnings list axiom-8 leaves taken on trust.
    Accepted { warnings: Vec<String> },
    /// `node` is a slash-separated child index path from the root.
    Rejected { node: String, reason: String },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

fn node_name(path: &[usize]) -> String {
    if path.is_empty() {
        "root".into()
    } else {
        let idx: Vec<String> = path.iter().map(usize::to_string).collect();
        format!("root/{}", idx.join("/"))
    }
}

impl Kernel {
    /// Re-derive every premise and re-match every leaf.
    pub fn check(&self, tb: &Tableau, system: System) -> Verdict {
        let mut warnings = Vec::new();
        let mut path = Vec::new();
        match self.check_node(tb, system, &mut path, &mut warnings) {
            Ok(()) => Verdict::Accepted { warnings },
            Err((p, reason)) => Verdict::Rejected { node: node_name(&p), reason },
        }
    }

    pub fn accepts(&self, tb: &Tableau, system: System) -> bool {
        self.check(tb, system).is_accepted()
    }

    fn check_node(
        &self,
        tb: &Tableau,
        system: System,
        path: &mut Vec<usize>,
        warnings: &mut Vec<String>,
    ) -> Result<(), (Vec<usize>, String)> {
        let fail = |path: &Vec<usize>, msg: String| Err((path.clone(), msg));
        if system == System::Pcn && tb.seq.suc.is_some() {
            return fail(path, format!("`{}` has a succedent formula", tb.seq));
        }
        match &tb.just {
            Just::Axiom(kind) => {
                if !tb.children.is_empty() {
                    return fail(path, "axiom node with children".into());
                }
                match self.check_axiom(&tb.seq, *kind, system) {
                    Ok(Some(w)) => warnings.push(w),
                    Ok(None) => {}
                    Err(e) => return fail(path, e),
                }
            }
            Just::Rule { rule, part, arg } => {
                if !rule.admitted(system) {
                    return fail(path, format!("{rule} is not a rule of {system}"));
                }
                if let Err(e) = part_at(&tb.seq, part) {
                    return fail(path, e.to_string());
                }
                let expect = match apply_rule(&tb.seq, *rule, part, arg) {
                    Ok(v) => v,
                    Err(e) => return fail(path, e.to_string()),
                };
                if expect.len() != tb.children.len() {
                    return fail(path, format!("{rule} has {} premises, found {}", expect.len(), tb.children.len()));
                }
                for (i, (want, child)) in expect.iter().zip(&tb.children).enumerate() {
                    if *want != child.seq {
                        path.push(i);
                        return fail(path, format!("expected premise `{want}`, found `{}`", child.seq));
                    }
                }
                for (i, child) in tb.children.iter().enumerate() {
                    path.push(i);
                    self.check_node(child, system, path, warnings)?;
                    path.pop();
                }
            }
        }
        Ok(())
    }
}

/// The smallest system among PCN, FN and SN whose rules cover the tree.
pub fn least_system(tb: &Tableau) -> System {
    let rules = tb.rules_used();
    let pcn = tb.nodes().iter().all(|n| n.seq.suc.is_none()) && rules.iter().all(|r| r.admitted(System::Pcn));
    if pcn {
        System::Pcn
    } else if !rules.contains(&RuleId::ImpPosL) {
        System::Fn
    } else {
        System::Sn
    }
}

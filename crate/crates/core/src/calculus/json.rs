//! Proof files: one JSON object per node.
//!
//! ```json
//! {"seq": "~(0=0) |-", "just": "axiom:Ax1", "children": []}
//! {"seq": "...", "just": {"rule": "and-l-", "path": "ant:/neg"}, "children": [...]}
//! ```
//!
//! Sequents below the root are re-derived by the checker, so a file whose
//! inner sequents disagree with the rules is rejected rather than trusted.

use serde::{Deserialize, Serialize};

use super::axioms::AxiomKind;
use super::rules::{Arg, RuleId};
use super::tableau::{Just, Tableau};
use crate::error::{Error, Result};
use crate::polarity::PartRef;
use crate::syntax::{parse_sequent, parse_term, sym};

#[derive(Serialize, Deserialize)]
struct Node {
    seq: String,
    just: JustFile,
    #[serde(default)]
    children: Vec<Node>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JustFile {
    Axiom(String),
    Rule {
        rule: String,
        path: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        term: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eigen: Option<String>,
    },
}

fn to_node(tb: &Tableau) -> Node {
    let just = match &tb.just {
        Just::Axiom(k) => JustFile::Axiom(format!("axiom:{k}")),
        Just::Rule { rule, part, arg } => JustFile::Rule {
            rule: rule.id().into(),
            path: part.to_string(),
            term: arg.term().map(|t| t.to_string()),
            eigen: arg.eigen().map(|b| b.to_string()),
        },
    };
    Node { seq: tb.seq.to_string(), just, children: tb.children.iter().map(to_node).collect() }
}

fn from_node(n: Node) -> Result<Tableau> {
    let seq = parse_sequent(&n.seq)?;
    let just = match n.just {
        JustFile::Axiom(s) => {
            let k = s.strip_prefix("axiom:").ok_or_else(|| Error::Format(format!("bad justification `{s}`")))?;
            Just::Axiom(k.parse::<AxiomKind>()?)
        }
        JustFile::Rule { rule, path, term, eigen } => {
            let rule: RuleId = rule.parse()?;
            let part = PartRef::parse_in(&path, &seq)?;
            let arg = match (term, eigen) {
                (None, None) => Arg::None,
                (Some(t), None) => Arg::Term(parse_term(&t)?),
                (None, Some(b)) => Arg::Eigen(sym(&b)),
                (Some(_), Some(_)) => return Err(Error::Format("both `term` and `eigen` given".into())),
            };
            Just::Rule { rule, part, arg }
        }
    };
    let children = n.children.into_iter().map(from_node).collect::<Result<Vec<_>>>()?;
    Ok(Tableau { seq, just, children })
}

pub fn to_json(tb: &Tableau) -> String {
    serde_json::to_string_pretty(&to_node(tb)).expect("proof trees serialize")
}

pub fn from_json(text: &str) -> Result<Tableau> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let node = Node::deserialize(&mut de).map_err(|e| Error::Format(e.to_string()))?;
    de.end().map_err(|e| Error::Format(e.to_string()))?;
    from_node(node)
}

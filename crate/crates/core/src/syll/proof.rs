use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::ParseError;

use super::rules::{apply_rule, SyllRule};
use super::system::{SyllSequent, SystemFlag, SystemLevel};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyllProof {
    pub node: Diagram,
    pub rule: SyllRule,
    pub children: Vec<SyllProof>,
}

impl SyllProof {
    pub fn leaf(node: Diagram, rule: SyllRule) -> Self {
        SyllProof {
            node,
            rule,
            children: vec![],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(SyllProof::size).sum::<usize>()
    }

    /// Pre-order traversal.
    pub fn nodes(&self) -> Vec<&SyllProof> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }

    pub fn uses(&self, pred: impl Fn(&SyllRule) -> bool + Copy) -> usize {
        self.nodes().iter().filter(|n| pred(&n.rule)).count()
    }

    pub fn to_doc(&self) -> SyllProofDoc {
        SyllProofDoc {
            rule: self.rule.encode(),
            diagram: self.node.to_string(),
            children: self.children.iter().map(SyllProof::to_doc).collect(),
        }
    }

    pub fn from_doc(doc: &SyllProofDoc) -> Result<SyllProof, ParseError> {
        Ok(SyllProof {
            node: doc.diagram.parse()?,
            rule: SyllRule::decode(&doc.rule)
                .ok_or_else(|| ParseError::new(0, format!("unrecognised rule `{}`", doc.rule)))?,
            children: doc
                .children
                .iter()
                .map(SyllProof::from_doc)
                .collect::<Result<_, _>>()?,
        })
    }

    fn write_tree(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}{}    [{}]",
            "",
            self.node,
            self.rule,
            indent = depth * 2
        )?;
        for c in &self.children {
            c.write_tree(f, depth + 1)?;
        }
        Ok(())
    }
}

/// Indented tree, conclusion first.
impl fmt::Display for SyllProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_tree(f, 0)
    }
}

/// Machine-readable proof tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyllProofDoc {
    pub rule: String,
    pub diagram: String,
    pub children: Vec<SyllProofDoc>,
}

/// Independent replay: every node follows from its children by its rule,
/// the rule is enabled in `system`, every node is well formed for the
/// system, each premise is used exactly once, and the root is the goal.
pub fn check_proof(p: &SyllProof, seq: &SyllSequent, system: &SystemLevel) -> bool {
    let mut used = vec![0usize; seq.premises.len()];
    p.node == seq.goal && replay(p, seq, system, &mut used) && used.iter().all(|&n| n == 1)
}

fn enabled(rule: &SyllRule, system: &SystemLevel) -> bool {
    match rule {
        SyllRule::Star { .. } | SyllRule::ReverseNew => system.has(SystemFlag::NewDiagramRules),
        SyllRule::ExistAxiom(_) => system.has(SystemFlag::ExistentialAxiom),
        SyllRule::IdentAxiom(_) => system.has(SystemFlag::IdentityAxiom),
        _ => system.has(SystemFlag::BaseRules),
    }
}

fn replay(p: &SyllProof, seq: &SyllSequent, system: &SystemLevel, used: &mut [usize]) -> bool {
    if !enabled(&p.rule, system) || !p.node.is_well_formed_with(system.admits_new()) {
        return false;
    }
    if let SyllRule::Premise(i) = p.rule {
        return match (seq.premises.get(i), p.children.is_empty()) {
            (Some(d), true) if *d == p.node => {
                used[i] += 1;
                true
            }
            _ => false,
        };
    }
    let inputs: Vec<Diagram> = p.children.iter().map(|c| c.node.clone()).collect();
    match apply_rule(&p.rule, &inputs) {
        Ok(out) if out == p.node => p.children.iter().all(|c| replay(c, seq, system, used)),
        _ => false,
    }
}

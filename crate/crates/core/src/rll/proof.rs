use serde::{Deserialize, Serialize};

use crate::error::ParseError;

use super::formula::RllFormula;
use super::sequent::RllSequent;

/// Rule instance at a proof node. Indices refer to the context of the
/// node's own sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RllRule {
    Id,
    /// `principal` is the tensor being split on the left.
    TensorL {
        principal: usize,
    },
    /// `left` lists the context formulas sent to the first premise.
    TensorR {
        left: Vec<usize>,
    },
    /// `left` lists the context formulas (other than `principal`) sent to
    /// the premise proving the antecedent.
    LollipopL {
        principal: usize,
        left: Vec<usize>,
    },
    LollipopR,
}

impl RllRule {
    pub fn name(&self) -> &'static str {
        match self {
            RllRule::Id => "id",
            RllRule::TensorL { .. } => "tensor-l",
            RllRule::TensorR { .. } => "tensor-r",
            RllRule::LollipopL { .. } => "lollipop-l",
            RllRule::LollipopR => "lollipop-r",
        }
    }

    /// Compact text form: `id`, `tensor-l 0`, `tensor-r 0 2`,
    /// `lollipop-l 1 | 0`, `lollipop-r`.
    pub fn encode(&self) -> String {
        let join = |v: &[usize]| {
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            RllRule::Id | RllRule::LollipopR => self.name().to_string(),
            RllRule::TensorL { principal } => format!("tensor-l {principal}"),
            RllRule::TensorR { left } if left.is_empty() => "tensor-r".to_string(),
            RllRule::TensorR { left } => format!("tensor-r {}", join(left)),
            RllRule::LollipopL { principal, left } if left.is_empty() => {
                format!("lollipop-l {principal} |")
            }
            RllRule::LollipopL { principal, left } => {
                format!("lollipop-l {principal} | {}", join(left))
            }
        }
    }

    pub fn decode(text: &str) -> Result<RllRule, ParseError> {
        let bad = || ParseError::new(0, format!("unrecognised rule `{text}`"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let nums = |s: &str| s.split_whitespace().map(num).collect::<Result<Vec<_>, _>>();
        let (head, rest) = text.trim().split_once(' ').unwrap_or((text.trim(), ""));
        match head {
            "id" if rest.is_empty() => Ok(RllRule::Id),
            "lollipop-r" if rest.is_empty() => Ok(RllRule::LollipopR),
            "tensor-l" => Ok(RllRule::TensorL {
                principal: num(rest.trim())?,
            }),
            "tensor-r" => Ok(RllRule::TensorR { left: nums(rest)? }),
            "lollipop-l" => {
                let (p, l) = rest.split_once('|').ok_or_else(bad)?;
                Ok(RllRule::LollipopL {
                    principal: num(p.trim())?,
                    left: nums(l)?,
                })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RllProof {
    pub sequent: RllSequent,
    pub rule: RllRule,
    pub children: Vec<RllProof>,
}

impl RllProof {
    pub fn leaves(&self) -> Vec<&RllSequent> {
        if self.children.is_empty() {
            return vec![&self.sequent];
        }
        self.children.iter().flat_map(RllProof::leaves).collect()
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(RllProof::size).sum::<usize>()
    }

    pub fn to_doc(&self) -> RllProofDoc {
        RllProofDoc {
            rule: self.rule.encode(),
            sequent: self.sequent.to_string(),
            children: self.children.iter().map(RllProof::to_doc).collect(),
        }
    }

    pub fn from_doc(doc: &RllProofDoc) -> Result<RllProof, ParseError> {
        Ok(RllProof {
            sequent: doc.sequent.parse()?,
            rule: RllRule::decode(&doc.rule)?,
            children: doc
                .children
                .iter()
                .map(RllProof::from_doc)
                .collect::<Result<_, _>>()?,
        })
    }
}

/// Machine-readable proof tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RllProofDoc {
    pub rule: String,
    pub sequent: String,
    pub children: Vec<RllProofDoc>,
}

fn sorted(mut v: Vec<RllFormula>) -> Vec<RllFormula> {
    v.sort();
    v
}

fn pick(ctx: &[RllFormula], idx: &[usize]) -> Option<Vec<RllFormula>> {
    let mut seen = vec![false; ctx.len()];
    let mut out = Vec::with_capacity(idx.len());
    for &i in idx {
        if i >= ctx.len() || seen[i] {
            return None;
        }
        seen[i] = true;
        out.push(ctx[i].clone());
    }
    Some(out)
}

fn rest(ctx: &[RllFormula], skip: &[usize]) -> Vec<RllFormula> {
    ctx.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, f)| f.clone())
        .collect()
}

fn same(ctx: &[RllFormula], concl: &RllFormula, node: &RllSequent) -> bool {
    node.conclusion == *concl && sorted(ctx.to_vec()) == node.sorted_context()
}

/// Replays every branching as an exact rule instance, with multiset
/// bookkeeping on contexts.
pub fn check_rll_proof(p: &RllProof) -> bool {
    let ctx = &p.sequent.context;
    let concl = &p.sequent.conclusion;
    let ok = match (&p.rule, p.children.as_slice()) {
        (RllRule::Id, []) => ctx.len() == 1 && ctx[0] == *concl,
        (RllRule::TensorL { principal }, [c]) => match ctx.get(*principal) {
            Some(RllFormula::Tensor(a, b)) => {
                let mut want = rest(ctx, &[*principal]);
                want.push((**a).clone());
                want.push((**b).clone());
                same(&want, concl, &c.sequent)
            }
            _ => false,
        },
        (RllRule::LollipopR, [c]) => match concl {
            RllFormula::Lollipop(a, b) => {
                let mut want = ctx.clone();
                want.push((**a).clone());
                same(&want, b, &c.sequent)
            }
            _ => false,
        },
        (RllRule::TensorR { left }, [l, r]) => match (concl, pick(ctx, left)) {
            (RllFormula::Tensor(a, b), Some(lctx)) => {
                same(&lctx, a, &l.sequent) && same(&rest(ctx, left), b, &r.sequent)
            }
            _ => false,
        },
        (RllRule::LollipopL { principal, left }, [l, r]) => {
            match (ctx.get(*principal), pick(ctx, left)) {
                (Some(RllFormula::Lollipop(a, b)), Some(lctx)) if !left.contains(principal) => {
                    let mut skip = left.clone();
                    skip.push(*principal);
                    let mut rctx = rest(ctx, &skip);
                    rctx.push((**b).clone());
                    same(&lctx, a, &l.sequent) && same(&rctx, concl, &r.sequent)
                }
                _ => false,
            }
        }
        _ => false,
    };
    ok && p.children.iter().all(check_rll_proof)
}

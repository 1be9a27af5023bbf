//! Cut-free backward proof search.
//!
//! Every backward step strictly lowers the number of connectives in the
//! sequent, so the search tree is finite. Provability of each sub-sequent
//! is memoised on its sorted context; the proof itself is rebuilt along the
//! first successful choice so that node contexts keep their concrete order.

use std::collections::HashMap;

use super::formula::RllFormula;
use super::proof::{RllProof, RllRule};
use super::sequent::RllSequent;

type Key = (Vec<RllFormula>, RllFormula);

#[derive(Default)]
pub struct RllProver {
    memo: HashMap<Key, bool>,
}

/// A backward rule choice together with the premises it needs.
struct Choice {
    rule: RllRule,
    premises: Vec<RllSequent>,
}

impl RllProver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn prove(&mut self, seq: &RllSequent) -> Option<RllProof> {
        for choice in choices(seq) {
            if choice.premises.iter().all(|p| self.provable(p)) {
                let children = choice
                    .premises
                    .iter()
                    .map(|p| self.prove(p).expect("memo says provable"))
                    .collect();
                return Some(RllProof {
                    sequent: seq.clone(),
                    rule: choice.rule,
                    children,
                });
            }
        }
        None
    }

    pub fn provable(&mut self, seq: &RllSequent) -> bool {
        let key = (seq.sorted_context(), seq.conclusion.clone());
        if let Some(&b) = self.memo.get(&key) {
            return b;
        }
        if !resources_balance(seq) {
            self.memo.insert(key, false);
            return false;
        }
        let result = choices(seq)
            .into_iter()
            .any(|c| c.premises.iter().all(|p| self.provable(p)));
        self.memo.insert(key, result);
        result
    }
}

/// Deterministic cut-free search; `None` when every rule choice and context
/// split fails.
pub fn prove_rll(seq: &RllSequent) -> Option<RllProof> {
    RllProver::new().prove(seq)
}

/// `a |- b` and `b |- a` are both provable.
pub fn equivalent(a: &RllFormula, b: &RllFormula) -> bool {
    let mut p = RllProver::new();
    p.provable(&RllSequent::new(vec![a.clone()], b.clone()))
        && p.provable(&RllSequent::new(vec![b.clone()], a.clone()))
}

/// Every Id leaf pairs one positive with one negative occurrence of the
/// same atom, so in a provable sequent each atom (and `bot`) occurs equally
/// often with either polarity. Context formulas are negative, the
/// conclusion positive, and the antecedent of an implication flips polarity.
fn resources_balance(seq: &RllSequent) -> bool {
    fn walk(f: &RllFormula, pos: bool, counts: &mut HashMap<Option<String>, i64>) {
        let sign = if pos { 1 } else { -1 };
        match f {
            RllFormula::Atom(n) => *counts.entry(Some(n.clone())).or_default() += sign,
            RllFormula::Bottom => *counts.entry(None).or_default() += sign,
            RllFormula::Tensor(a, b) => {
                walk(a, pos, counts);
                walk(b, pos, counts);
            }
            RllFormula::Lollipop(a, b) => {
                walk(a, !pos, counts);
                walk(b, pos, counts);
            }
        }
    }
    let mut counts = HashMap::new();
    for f in &seq.context {
        walk(f, false, &mut counts);
    }
    walk(&seq.conclusion, true, &mut counts);
    counts.values().all(|&c| c == 0)
}

/// Backward rule applications in the fixed order Id, tensor-left,
/// lollipop-right, tensor-right, lollipop-left; positions left to right,
/// splits in increasing bitmask order.
///
/// Tensor-left and lollipop-right are invertible: when one applies, its
/// first instance is the only choice offered after Id.
fn choices(seq: &RllSequent) -> Vec<Choice> {
    let ctx = &seq.context;
    let concl = &seq.conclusion;
    let mut out = Vec::new();

    if ctx.len() == 1 && ctx[0] == *concl {
        out.push(Choice {
            rule: RllRule::Id,
            premises: vec![],
        });
    }

    for (i, f) in ctx.iter().enumerate() {
        if let RllFormula::Tensor(a, b) = f {
            let mut c = without(ctx, &[i]);
            c.push((**a).clone());
            c.push((**b).clone());
            out.push(Choice {
                rule: RllRule::TensorL { principal: i },
                premises: vec![RllSequent::new(c, concl.clone())],
            });
            return out;
        }
    }

    if let RllFormula::Lollipop(a, b) = concl {
        let mut c = ctx.clone();
        c.push((**a).clone());
        out.push(Choice {
            rule: RllRule::LollipopR,
            premises: vec![RllSequent::new(c, (**b).clone())],
        });
        return out;
    }

    if let RllFormula::Tensor(a, b) = concl {
        let all: Vec<usize> = (0..ctx.len()).collect();
        for left in subsets(&all) {
            let lctx = left.iter().map(|&i| ctx[i].clone()).collect();
            let rctx = without(ctx, &left);
            out.push(Choice {
                rule: RllRule::TensorR { left },
                premises: vec![
                    RllSequent::new(lctx, (**a).clone()),
                    RllSequent::new(rctx, (**b).clone()),
                ],
            });
        }
    }

    for (i, f) in ctx.iter().enumerate() {
        if let RllFormula::Lollipop(a, b) = f {
            let others: Vec<usize> = (0..ctx.len()).filter(|&j| j != i).collect();
            for left in subsets(&others) {
                let lctx = left.iter().map(|&j| ctx[j].clone()).collect();
                let mut skip = left.clone();
                skip.push(i);
                let mut rctx = without(ctx, &skip);
                rctx.push((**b).clone());
                out.push(Choice {
                    rule: RllRule::LollipopL { principal: i, left },
                    premises: vec![
                        RllSequent::new(lctx, (**a).clone()),
                        RllSequent::new(rctx, concl.clone()),
                    ],
                });
            }
        }
    }
    out
}

fn without(ctx: &[RllFormula], skip: &[usize]) -> Vec<RllFormula> {
    ctx.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, f)| f.clone())
        .collect()
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u32..(1 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::proof::check_rll_proof;
    use super::*;

    fn seq(s: &str) -> RllSequent {
        s.parse().unwrap()
    }

    fn provable(s: &str) -> bool {
        let p = prove_rll(&seq(s));
        if let Some(p) = &p {
            assert!(check_rll_proof(p), "prover output must replay: {s}");
            assert_eq!(p.sequent, seq(s));
        }
        p.is_some()
    }

    #[test]
    fn barbara_derivation_shape() {
        let p = prove_rll(&seq("M -o P, S -o M |- S -o P")).unwrap();
        let mut leaves: Vec<String> = p.leaves().iter().map(|s| s.to_string()).collect();
        leaves.sort();
        assert_eq!(leaves, ["M |- M", "P |- P", "S |- S"]);
        assert_eq!(p.rule, RllRule::LollipopR);
    }

    #[test]
    fn double_complement_is_one_directional() {
        assert!(provable("A |- A^^"));
        assert!(!provable("A^^ |- A"));
        assert!(provable("A * A^ |- bot"));
    }

    #[test]
    fn linear_context_is_consumed() {
        assert!(!provable("A, A -o B |- A * B"));
        assert!(provable("A, A -o B |- B"));
        assert!(!provable("A, B |- A"));
    }

    #[test]
    fn equivalences() {
        let f = |s: &str| s.parse::<RllFormula>().unwrap();
        assert!(equivalent(&f("A * B"), &f("B * A")));
        assert!(equivalent(&f("A -o B^"), &f("B -o A^")));
        assert!(equivalent(&f("A^"), &f("A^^^")));
        assert!(!equivalent(&f("A"), &f("A^^")));
    }

    #[test]
    fn deterministic() {
        let s = seq("P -o M^, M * S |- S * P^");
        assert_eq!(prove_rll(&s), prove_rll(&s));
    }
}

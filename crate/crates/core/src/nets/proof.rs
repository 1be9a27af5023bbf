use std::fmt;

use super::formula::{CmllFormula, CmllSequent};

/// Rule instance at a CMLL proof node. Positions index the node's own
/// ordered conclusions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmllRule {
    /// `=> A^, A` or `=> A, A^`.
    Identity,
    /// `=> 1`.
    One,
    /// Drops the `bot` at `pos`.
    False { pos: usize },
    /// Splits the tensor at `pos`: the first premise is the conclusions at
    /// `left` followed by the left factor, the second the remaining ones
    /// followed by the right factor.
    Times { pos: usize, left: Vec<usize> },
    /// Replaces the par at `pos` by its two components, appended at the end.
    Parr { pos: usize },
    /// The premise lists conclusion `perm[i]` at position `i`.
    Exchange { perm: Vec<usize> },
}

impl fmt::Display for CmllRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            CmllRule::Identity => f.write_str("identity"),
            CmllRule::One => f.write_str("one"),
            CmllRule::False { pos } => write!(f, "false {pos}"),
            CmllRule::Times { pos, left } => write!(f, "times {pos} | {}", list(left)),
            CmllRule::Parr { pos } => write!(f, "parr {pos}"),
            CmllRule::Exchange { perm } => write!(f, "exchange {}", list(perm)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmllProof {
    pub sequent: CmllSequent,
    pub rule: CmllRule,
    pub children: Vec<CmllProof>,
}

impl CmllProof {
    pub fn leaves(&self) -> Vec<&CmllSequent> {
        if self.children.is_empty() {
            return vec![&self.sequent];
        }
        self.children.iter().flat_map(CmllProof::leaves).collect()
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(CmllProof::size).sum::<usize>()
    }

    fn write_tree(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}{}    [{}]",
            "",
            self.sequent,
            self.rule,
            indent = depth * 2
        )?;
        for c in &self.children {
            c.write_tree(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for CmllProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_tree(f, 0)
    }
}

/// Premise sequents of a rule instance, or `None` if the rule does not
/// apply to `seq`.
pub(crate) fn premises(rule: &CmllRule, seq: &[CmllFormula]) -> Option<Vec<Vec<CmllFormula>>> {
    let without = |skip: &[usize]| -> Vec<CmllFormula> {
        seq.iter()
            .enumerate()
            .filter(|(i, _)| !skip.contains(i))
            .map(|(_, f)| f.clone())
            .collect()
    };
    match rule {
        CmllRule::Identity => match seq {
            [a, b] if a.is_atom() && *b == a.negation() => Some(vec![]),
            _ => None,
        },
        CmllRule::One => (seq == [CmllFormula::One]).then(Vec::new),
        CmllRule::False { pos } => match seq.get(*pos) {
            Some(CmllFormula::Bot) => Some(vec![without(&[*pos])]),
            _ => None,
        },
        CmllRule::Parr { pos } => match seq.get(*pos) {
            Some(CmllFormula::Par(a, b)) => {
                let mut c = without(&[*pos]);
                c.push((**a).clone());
                c.push((**b).clone());
                Some(vec![c])
            }
            _ => None,
        },
        CmllRule::Times { pos, left } => {
            let (a, b) = match seq.get(*pos) {
                Some(CmllFormula::Tensor(a, b)) => (a, b),
                _ => return None,
            };
            let mut seen = vec![false; seq.len()];
            seen[*pos] = true;
            let mut l = Vec::new();
            for &i in left {
                if i >= seq.len() || seen[i] {
                    return None;
                }
                seen[i] = true;
                l.push(seq[i].clone());
            }
            l.push((**a).clone());
            let mut r: Vec<CmllFormula> = seq
                .iter()
                .zip(&seen)
                .filter(|(_, s)| !**s)
                .map(|(f, _)| f.clone())
                .collect();
            r.push((**b).clone());
            Some(vec![l, r])
        }
        CmllRule::Exchange { perm } => {
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            if sorted != (0..seq.len()).collect::<Vec<_>>() {
                return None;
            }
            Some(vec![perm.iter().map(|&i| seq[i].clone()).collect()])
        }
    }
}

/// Ordered replay: each node's premises must be exactly the sequents the
/// rule produces, including conclusion order. Identity leaves must be
/// atomic.
pub fn check_cmll_proof(p: &CmllProof) -> bool {
    match premises(&p.rule, &p.sequent.conclusions) {
        Some(want) => {
            want.len() == p.children.len()
                && want
                    .iter()
                    .zip(&p.children)
                    .all(|(w, c)| *w == c.sequent.conclusions && check_cmll_proof(c))
        }
        None => false,
    }
}

/// Builds a proof from the root down by applying `rule` to `seq` and
/// completing the premises with `rest`.
pub(crate) fn node(
    seq: Vec<CmllFormula>,
    rule: CmllRule,
    rest: impl FnOnce(Vec<Vec<CmllFormula>>) -> Vec<CmllProof>,
) -> CmllProof {
    let prem = premises(&rule, &seq).expect("rule applies by construction");
    CmllProof {
        sequent: CmllSequent::new(seq),
        rule,
        children: rest(prem),
    }
}

/// Proofs of `=> (1 * A)^, A`, `=> A^, 1 * A`, `=> (bot | A)^, A` and
/// `=> A^, bot | A`, witnessing that both units are neutral.
pub fn unit_law_proofs(a: &CmllFormula) -> Vec<CmllProof> {
    let one_a = CmllFormula::tensor(CmllFormula::One, a.clone());
    let bot_a = CmllFormula::par(CmllFormula::Bot, a.clone());
    let one = || CmllProof {
        sequent: CmllSequent::new(vec![CmllFormula::One]),
        rule: CmllRule::One,
        children: vec![],
    };
    let eta_pair =
        |x: &CmllFormula, y: &CmllFormula| super::translate::eta(vec![x.clone(), y.clone()]);

    // => bot | A^, A   by par, then false on bot
    let p1 = node(
        vec![one_a.negation(), a.clone()],
        CmllRule::Parr { pos: 0 },
        |prem| {
            vec![node(prem[0].clone(), CmllRule::False { pos: 1 }, |prem| {
                vec![eta_pair(&prem[0][0], &prem[0][1])]
            })]
        },
    );
    // => A^, 1 * A   by times with the unit on its own
    let p2 = node(
        vec![a.negation(), one_a.clone()],
        CmllRule::Times {
            pos: 1,
            left: vec![],
        },
        |prem| vec![one(), eta_pair(&prem[1][0], &prem[1][1])],
    );
    // => 1 * A^, A
    let p3 = node(
        vec![bot_a.negation(), a.clone()],
        CmllRule::Times {
            pos: 0,
            left: vec![],
        },
        |prem| vec![one(), eta_pair(&prem[1][0], &prem[1][1])],
    );
    // => A^, bot | A
    let p4 = node(
        vec![a.negation(), bot_a],
        CmllRule::Parr { pos: 1 },
        |prem| {
            vec![node(prem[0].clone(), CmllRule::False { pos: 1 }, |prem| {
                vec![eta_pair(&prem[0][0], &prem[0][1])]
            })]
        },
    );
    vec![p1, p2, p3, p4]
}

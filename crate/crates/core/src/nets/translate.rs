//! The polarised translation from the intuitionistic calculus into CMLL.
//!
//! | formula | positive | negative |
//! |---|---|---|
//! | `bot` | `bot` | `1` |
//! | atom `a` | `a` | `a^` |
//! | `A * B` | `A+ * B+` | `B- \| A-` |
//! | `A -o B` | `A- \| B+` | `B- * A+` |
//!
//! The negative column is the mirror image of the negation of the positive
//! one, so the atoms of `A-` read right to left are those of `A+`.

use crate::error::TranslationFailure;
use crate::rll::{RllFormula, RllProof, RllRule, RllSequent};

use super::formula::{CmllFormula, CmllSequent};
use super::proof::{node, CmllProof, CmllRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

/// The translation before unit normalisation.
pub fn translate_formula_raw(f: &RllFormula, polarity: Polarity) -> CmllFormula {
    use Polarity::{Negative as N, Positive as P};
    match (f, polarity) {
        (RllFormula::Bottom, P) => CmllFormula::Bot,
        (RllFormula::Bottom, N) => CmllFormula::One,
        (RllFormula::Atom(a), P) => CmllFormula::pos(a),
        (RllFormula::Atom(a), N) => CmllFormula::neg(a),
        (RllFormula::Tensor(a, b), P) => {
            CmllFormula::tensor(translate_formula_raw(a, P), translate_formula_raw(b, P))
        }
        (RllFormula::Tensor(a, b), N) => {
            CmllFormula::par(translate_formula_raw(b, N), translate_formula_raw(a, N))
        }
        (RllFormula::Lollipop(a, b), P) => {
            CmllFormula::par(translate_formula_raw(a, N), translate_formula_raw(b, P))
        }
        (RllFormula::Lollipop(a, b), N) => {
            CmllFormula::tensor(translate_formula_raw(b, N), translate_formula_raw(a, P))
        }
    }
}

/// The translation with units removed.
///
/// ```
/// use syllogic::nets::{translate_formula, Polarity};
///
/// let f = "A -o bot".parse().unwrap();
/// assert_eq!(translate_formula(&f, Polarity::Negative).to_string(), "A");
/// assert_eq!(translate_formula(&f, Polarity::Positive).to_string(), "A^");
/// ```
pub fn translate_formula(f: &RllFormula, polarity: Polarity) -> CmllFormula {
    translate_formula_raw(f, polarity).normalize_units()
}

/// `G |- C` becomes `=> G-, C+`, context in its stored order, before unit
/// normalisation.
pub fn translate_sequent_raw(seq: &RllSequent) -> CmllSequent {
    let mut out: Vec<CmllFormula> = seq
        .context
        .iter()
        .map(|f| translate_formula_raw(f, Polarity::Negative))
        .collect();
    out.push(translate_formula_raw(&seq.conclusion, Polarity::Positive));
    CmllSequent::new(out)
}

/// `G |- C` becomes `=> G-, C+` with units removed.
pub fn translate_sequent(seq: &RllSequent) -> CmllSequent {
    translate_sequent_raw(seq).normalize_units()
}

/// Duality up to swapping the components of a binary connective.
fn dual_up_to_mirror(a: &CmllFormula, b: &CmllFormula) -> bool {
    use CmllFormula::*;
    match (a, b) {
        (Pos(x), Neg(y)) | (Neg(x), Pos(y)) => x == y,
        (One, Bot) | (Bot, One) => true,
        (Tensor(a1, a2), Par(b1, b2)) | (Par(a1, a2), Tensor(b1, b2)) => {
            (dual_up_to_mirror(a1, b1) && dual_up_to_mirror(a2, b2))
                || (dual_up_to_mirror(a1, b2) && dual_up_to_mirror(a2, b1))
        }
        _ => false,
    }
}

/// Atomic-axiom proof of `=> X, Y` for a dual pair, in either order and
/// with either pairing of components.
pub(crate) fn eta(seq: Vec<CmllFormula>) -> CmllProof {
    debug_assert!(seq.len() == 2 && dual_up_to_mirror(&seq[0], &seq[1]));
    match (&seq[0], &seq[1]) {
        (CmllFormula::Bot, _) => node(seq, CmllRule::False { pos: 0 }, |p| vec![eta_unit(p)]),
        (_, CmllFormula::Bot) => node(seq, CmllRule::False { pos: 1 }, |p| vec![eta_unit(p)]),
        (x, _) if x.is_atom() => CmllProof {
            sequent: CmllSequent::new(seq),
            rule: CmllRule::Identity,
            children: vec![],
        },
        _ => {
            let par_pos = if matches!(seq[0], CmllFormula::Par(..)) {
                0
            } else {
                1
            };
            node(seq, CmllRule::Parr { pos: par_pos }, |p| {
                // premise: [tensor, c1, c2]
                let prem = p.into_iter().next().expect("one premise");
                let CmllFormula::Tensor(t1, _) = &prem[0] else {
                    unreachable!("dual of a par is a tensor")
                };
                let j = if dual_up_to_mirror(t1, &prem[1]) {
                    1
                } else {
                    2
                };
                vec![node(
                    prem,
                    CmllRule::Times {
                        pos: 0,
                        left: vec![j],
                    },
                    |q| q.into_iter().map(eta).collect(),
                )]
            })
        }
    }
}

fn eta_unit(p: Vec<Vec<CmllFormula>>) -> CmllProof {
    let seq = p.into_iter().next().expect("one premise");
    CmllProof {
        sequent: CmllSequent::new(seq),
        rule: CmllRule::One,
        children: vec![],
    }
}

/// Wraps `p` in an exchange so that it concludes `target`.
fn fit(target: Vec<CmllFormula>, p: CmllProof) -> Result<CmllProof, TranslationFailure> {
    if p.sequent.conclusions == target {
        return Ok(p);
    }
    let have = &p.sequent.conclusions;
    let mut used = vec![false; target.len()];
    let mut perm = Vec::with_capacity(have.len());
    for f in have {
        let i = (0..target.len())
            .find(|&i| !used[i] && target[i] == *f)
            .ok_or_else(|| TranslationFailure(format!("`{f}` missing from exchange target")))?;
        used[i] = true;
        perm.push(i);
    }
    if have.len() != target.len() {
        return Err(TranslationFailure(
            "exchange changes the number of conclusions".into(),
        ));
    }
    Ok(CmllProof {
        sequent: CmllSequent::new(target),
        rule: CmllRule::Exchange { perm },
        children: vec![p],
    })
}

/// Maps an intuitionistic proof to a CMLL proof of the raw translation of
/// its root: identity to eta-expanded axioms, tensor-right and
/// lollipop-left to times, lollipop-right and tensor-left to par, with
/// exchanges where conclusion orders differ.
pub fn translate_proof(p: &RllProof) -> Result<CmllProof, TranslationFailure> {
    let seq = translate_sequent_raw(&p.sequent).conclusions;
    let n = p.sequent.context.len();
    let bad = |why: &str| TranslationFailure(format!("{} at `{}`", why, p.rule.encode()));
    let kids: Vec<CmllProof> = p
        .children
        .iter()
        .map(translate_proof)
        .collect::<Result<_, _>>()?;
    let rule = match &p.rule {
        RllRule::Id => {
            if seq.len() != 2 || !dual_up_to_mirror(&seq[0], &seq[1]) {
                return Err(bad("identity on non-dual pair"));
            }
            return Ok(eta(seq));
        }
        RllRule::TensorR { left } => CmllRule::Times {
            pos: n,
            left: left.clone(),
        },
        RllRule::LollipopR => CmllRule::Parr { pos: n },
        RllRule::TensorL { principal } => CmllRule::Parr { pos: *principal },
        RllRule::LollipopL { principal, left } => {
            // the B- premise takes everything but the antecedent's context
            let rest = (0..=n)
                .filter(|i| i != principal && !left.contains(i))
                .collect();
            CmllRule::Times {
                pos: *principal,
                left: rest,
            }
        }
    };
    let prem = super::proof::premises(&rule, &seq).ok_or_else(|| bad("rule does not apply"))?;
    let mut kids = kids;
    if let RllRule::LollipopL { .. } = p.rule {
        kids.reverse();
    }
    if prem.len() != kids.len() {
        return Err(bad("premise count mismatch"));
    }
    let children = prem
        .into_iter()
        .zip(kids)
        .map(|(want, k)| fit(want, k))
        .collect::<Result<_, _>>()?;
    Ok(CmllProof {
        sequent: CmllSequent::new(seq),
        rule,
        children,
    })
}

#[cfg(test)]
mod tests {
    use super::super::proof::{check_cmll_proof, unit_law_proofs};
    use super::*;
    use crate::rll::prove_rll;

    fn seq(s: &str) -> RllSequent {
        s.parse().unwrap()
    }

    #[test]
    fn formula_table() {
        let f = |s: &str| s.parse::<RllFormula>().unwrap();
        assert_eq!(
            translate_formula(&f("S -o M"), Polarity::Negative).to_string(),
            "M^ * S"
        );
        assert_eq!(
            translate_formula(&f("A * B"), Polarity::Positive).to_string(),
            "A * B"
        );
        assert_eq!(
            translate_formula(&f("A * B"), Polarity::Negative).to_string(),
            "B^ | A^"
        );
        assert_eq!(
            translate_formula_raw(&f("A^"), Polarity::Negative).to_string(),
            "1 * A"
        );
    }

    #[test]
    fn displayed_sequents() {
        assert_eq!(
            translate_sequent(&seq("M -o P, S -o M |- S -o P")).to_string(),
            "=> P^ * M, M^ * S, S^ | P"
        );
        assert_eq!(
            translate_sequent(&seq("P -o M^, M * S |- S * P^")).to_string(),
            "=> M * P, S^ | M^, S * P^"
        );
        assert_eq!(translate_sequent(&seq("A |- A")).to_string(), "=> A^, A");
    }

    #[test]
    fn proofs_replay() {
        for s in [
            "M -o P, S -o M |- S -o P",
            "P -o M^, M * S |- S * P^",
            "A * A^ |- bot",
            "A |- A^^",
            "A -o B |- B^ -o A^",
            "A * B |- (A -o B^)^",
            "M -o P^, S * M |- S * P^",
        ] {
            let p = prove_rll(&seq(s)).unwrap();
            let c = translate_proof(&p).unwrap();
            assert!(check_cmll_proof(&c), "{s}\n{c}");
            assert_eq!(c.sequent, translate_sequent_raw(&seq(s)));
        }
    }

    #[test]
    fn barbara_leaves() {
        let p = prove_rll(&seq("M -o P, S -o M |- S -o P")).unwrap();
        let c = translate_proof(&p).unwrap();
        let mut leaves: Vec<String> = c.leaves().iter().map(|s| s.to_string()).collect();
        leaves.sort();
        assert_eq!(leaves, ["=> M^, M", "=> P^, P", "=> S^, S"]);
    }

    #[test]
    fn units_are_neutral() {
        for a in ["A", "A * B^", "A | B"] {
            for p in unit_law_proofs(&a.parse().unwrap()) {
                assert!(check_cmll_proof(&p), "{p}");
            }
        }
    }
}

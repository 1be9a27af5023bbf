use std::fmt;

use crate::diagram::{is_syllogistic_shape, reversal_is_traditional, Diagram, TermVar, Token};
use crate::error::RuleError;

/// One inference step. Positional rules record the token index of the
/// variable they act on, so that replay is unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SyllRule {
    /// Leaf: the premise with this index.
    Premise(usize),
    /// Reversal of a traditional syllogistic diagram.
    ReverseSyllogistic,
    /// Reversal of a new syllogistic diagram.
    ReverseNew,
    /// Children `[x, y]` give `x y`.
    ConcatLeft,
    /// Children `[x, y]` give `y x`.
    ConcatRight,
    /// `-> A ->` becomes `->`.
    DeleteRight { var: TermVar, at: usize },
    /// `<- A <-` becomes `<-`.
    DeleteLeft { var: TermVar, at: usize },
    /// `* <- A -> *` becomes `A`.
    Star { var: TermVar, at: usize },
    /// Leaf `A <- * -> A`.
    ExistAxiom(TermVar),
    /// Leaf `A -> A`.
    IdentAxiom(TermVar),
}

impl SyllRule {
    pub fn arity(&self) -> usize {
        match self {
            SyllRule::Premise(_) | SyllRule::ExistAxiom(_) | SyllRule::IdentAxiom(_) => 0,
            SyllRule::ConcatLeft | SyllRule::ConcatRight => 2,
            _ => 1,
        }
    }

    /// Text form used in proof documents, e.g. `delete-right M@2`.
    pub fn encode(&self) -> String {
        self.to_string()
    }

    pub fn decode(text: &str) -> Option<SyllRule> {
        let text = text.trim();
        let (head, arg) = text.split_once(' ').unwrap_or((text, ""));
        let arg = arg.trim();
        let var = || TermVar::new(arg).ok();
        let var_at = || {
            let (v, at) = arg.split_once('@')?;
            Some((TermVar::new(v).ok()?, at.parse().ok()?))
        };
        let nullary = arg.is_empty();
        Some(match head {
            "premise" => SyllRule::Premise(arg.parse().ok()?),
            "reverse" if nullary => SyllRule::ReverseSyllogistic,
            "reverse-new" if nullary => SyllRule::ReverseNew,
            "concat-left" if nullary => SyllRule::ConcatLeft,
            "concat-right" if nullary => SyllRule::ConcatRight,
            "delete-right" => {
                let (var, at) = var_at()?;
                SyllRule::DeleteRight { var, at }
            }
            "delete-left" => {
                let (var, at) = var_at()?;
                SyllRule::DeleteLeft { var, at }
            }
            "star" => {
                let (var, at) = var_at()?;
                SyllRule::Star { var, at }
            }
            "axiom-exist" => SyllRule::ExistAxiom(var()?),
            "axiom-ident" => SyllRule::IdentAxiom(var()?),
            _ => return None,
        })
    }
}

impl fmt::Display for SyllRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyllRule::Premise(i) => write!(f, "premise {i}"),
            SyllRule::ReverseSyllogistic => f.write_str("reverse"),
            SyllRule::ReverseNew => f.write_str("reverse-new"),
            SyllRule::ConcatLeft => f.write_str("concat-left"),
            SyllRule::ConcatRight => f.write_str("concat-right"),
            SyllRule::DeleteRight { var, at } => write!(f, "delete-right {var}@{at}"),
            SyllRule::DeleteLeft { var, at } => write!(f, "delete-left {var}@{at}"),
            SyllRule::Star { var, at } => write!(f, "star {var}@{at}"),
            SyllRule::ExistAxiom(v) => write!(f, "axiom-exist {v}"),
            SyllRule::IdentAxiom(v) => write!(f, "axiom-ident {v}"),
        }
    }
}

/// `A <- * -> A`.
pub fn exist_axiom(v: &TermVar) -> Diagram {
    let a = Token::Var(v.clone());
    Diagram::from_tokens(vec![a.clone(), Token::Left, Token::Bullet, Token::Right, a])
        .expect("axiom diagram is alternating")
}

/// `A -> A`.
pub fn ident_axiom(v: &TermVar) -> Diagram {
    let a = Token::Var(v.clone());
    Diagram::from_tokens(vec![a.clone(), Token::Right, a]).expect("axiom diagram is alternating")
}

/// Overlaps `d1` and `d2` on their common extremal variable.
///
/// ```
/// use syllogic::diagram::Diagram;
/// use syllogic::syll::concatenate;
///
/// let d1: Diagram = "A -> * <- B".parse().unwrap();
/// let d2: Diagram = "B -> C".parse().unwrap();
/// assert_eq!(concatenate(&d1, &d2).unwrap().to_string(), "A -> * <- B -> C");
/// ```
pub fn concatenate(d1: &Diagram, d2: &Diagram) -> Result<Diagram, RuleError> {
    d1.concat(d2).ok_or_else(|| {
        RuleError::NotConcatenable(
            d1.to_string(),
            d1.last_var().to_string(),
            d2.to_string(),
            d2.first_var().to_string(),
        )
    })
}

fn mismatch(msg: impl Into<String>) -> RuleError {
    RuleError::RuleShapeMismatch(msg.into())
}

/// Applies one rule top-down. Leaves (premises) have no defined output and
/// are rejected; axioms take no inputs.
pub fn apply_rule(rule: &SyllRule, inputs: &[Diagram]) -> Result<Diagram, RuleError> {
    if inputs.len() != rule.arity() || matches!(rule, SyllRule::Premise(_)) {
        return Err(mismatch(format!(
            "`{rule}` takes {} input(s), got {}",
            rule.arity(),
            inputs.len()
        )));
    }
    match rule {
        SyllRule::Premise(_) => unreachable!(),
        SyllRule::ExistAxiom(v) => Ok(exist_axiom(v)),
        SyllRule::IdentAxiom(v) => Ok(ident_axiom(v)),
        SyllRule::ConcatLeft => concatenate(&inputs[0], &inputs[1]),
        SyllRule::ConcatRight => concatenate(&inputs[1], &inputs[0]),
        SyllRule::ReverseSyllogistic | SyllRule::ReverseNew => {
            let d = &inputs[0];
            if !is_syllogistic_shape(d, true) {
                return Err(mismatch(format!("`{d}` is not a syllogistic diagram")));
            }
            let traditional = reversal_is_traditional(d);
            match (rule, traditional) {
                (SyllRule::ReverseSyllogistic, false) => Err(mismatch(format!(
                    "`{d}` is a new syllogistic diagram; use reverse-new"
                ))),
                (SyllRule::ReverseNew, true) => Err(mismatch(format!(
                    "`{d}` is a traditional syllogistic diagram; use reverse"
                ))),
                _ => Ok(d.reversal()),
            }
        }
        SyllRule::DeleteRight { var, at } => {
            delete(&inputs[0], var, *at, Token::Right).map_err(mismatch)
        }
        SyllRule::DeleteLeft { var, at } => {
            delete(&inputs[0], var, *at, Token::Left).map_err(mismatch)
        }
        SyllRule::Star { var, at } => {
            let d = &inputs[0];
            let t = d.tokens();
            let v = Token::Var(var.clone());
            let ok = *at >= 2
                && at + 2 < t.len()
                && t[at - 2..=at + 2]
                    == [Token::Bullet, Token::Left, v, Token::Right, Token::Bullet];
            if !ok {
                return Err(mismatch(format!(
                    "no part `* <- {var} -> *` at {at} in `{d}`"
                )));
            }
            Ok(d.splice(at - 2, at + 3, &[Token::Var(var.clone())]))
        }
    }
}

fn delete(d: &Diagram, var: &TermVar, at: usize, arrow: Token) -> Result<Diagram, String> {
    let t = d.tokens();
    let ok = at >= 1
        && at + 1 < t.len()
        && t[at].as_var() == Some(var)
        && t[at - 1] == arrow
        && t[at + 1] == arrow;
    if !ok {
        return Err(format!("no part `{arrow} {var} {arrow}` at {at} in `{d}`"));
    }
    Ok(d.splice(at - 1, at + 2, &[arrow]))
}

/// Every position where a delete or star rule applies, in token order.
pub(crate) fn local_rewrites(d: &Diagram, with_star: bool) -> Vec<SyllRule> {
    let t = d.tokens();
    let mut out = Vec::new();
    for at in 1..t.len().saturating_sub(1) {
        let Some(var) = t[at].as_var() else { continue };
        if t[at - 1] == Token::Right && t[at + 1] == Token::Right {
            out.push(SyllRule::DeleteRight {
                var: var.clone(),
                at,
            });
        }
        if t[at - 1] == Token::Left && t[at + 1] == Token::Left {
            out.push(SyllRule::DeleteLeft {
                var: var.clone(),
                at,
            });
        }
        if with_star
            && at >= 2
            && at + 2 < t.len()
            && t[at - 1] == Token::Left
            && t[at + 1] == Token::Right
            && t[at - 2] == Token::Bullet
            && t[at + 2] == Token::Bullet
        {
            out.push(SyllRule::Star {
                var: var.clone(),
                at,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn v(s: &str) -> TermVar {
        TermVar::new(s).unwrap()
    }

    #[test]
    fn delete_right() {
        let r = SyllRule::DeleteRight { var: v("M"), at: 2 };
        assert_eq!(apply_rule(&r, &[d("S -> M -> P")]).unwrap(), d("S -> P"));
        assert!(apply_rule(&r, &[d("S <- M <- P")]).is_err());
        let l = SyllRule::DeleteLeft { var: v("M"), at: 2 };
        assert_eq!(apply_rule(&l, &[d("S <- M <- P")]).unwrap(), d("S <- P"));
    }

    #[test]
    fn star() {
        let r = SyllRule::Star { var: v("M"), at: 6 };
        let out = apply_rule(&r, &[d("S <- * -> * <- M -> * -> P")]).unwrap();
        assert_eq!(out, d("S <- * -> M -> P"));
        let bad = SyllRule::Star { var: v("A"), at: 0 };
        assert!(matches!(
            apply_rule(&bad, &[d("A -> B")]),
            Err(RuleError::RuleShapeMismatch(_))
        ));
    }

    #[test]
    fn concatenation() {
        assert_eq!(concatenate(&d("A"), &d("A")).unwrap(), d("A"));
        assert!(matches!(
            concatenate(&d("A -> B"), &d("C -> D")),
            Err(RuleError::NotConcatenable(..))
        ));
        let right = apply_rule(&SyllRule::ConcatRight, &[d("B -> C"), d("A -> B")]).unwrap();
        assert_eq!(right, d("A -> B -> C"));
    }

    #[test]
    fn reversal_rules_are_split_by_kind() {
        let rev = SyllRule::ReverseSyllogistic;
        let new = SyllRule::ReverseNew;
        assert_eq!(
            apply_rule(&rev, &[d("A <- * -> B")]).unwrap(),
            d("B <- * -> A")
        );
        assert_eq!(apply_rule(&rev, &[d("B <- A")]).unwrap(), d("A -> B"));
        assert!(apply_rule(&rev, &[d("A -> * -> B")]).is_err());
        assert_eq!(
            apply_rule(&new, &[d("A -> * -> B")]).unwrap(),
            d("B <- * <- A")
        );
        assert!(apply_rule(&new, &[d("A -> B")]).is_err());
        assert!(apply_rule(&rev, &[d("A -> B -> C")]).is_err());
    }

    #[test]
    fn codec() {
        for r in [
            SyllRule::Premise(1),
            SyllRule::ReverseSyllogistic,
            SyllRule::ReverseNew,
            SyllRule::ConcatLeft,
            SyllRule::ConcatRight,
            SyllRule::DeleteRight { var: v("M"), at: 2 },
            SyllRule::DeleteLeft { var: v("M"), at: 4 },
            SyllRule::Star { var: v("M"), at: 4 },
            SyllRule::ExistAxiom(v("A")),
            SyllRule::IdentAxiom(v("A")),
        ] {
            assert_eq!(SyllRule::decode(&r.encode()), Some(r));
        }
        assert_eq!(SyllRule::decode("cut"), None);
    }
}

use std::fmt;
use std::str::FromStr;

use crate::diagram::{interior, Diagram, TermVar, Token};
use crate::error::ParseError;
use crate::rll::{RllFormula, RllSequent};
use crate::syll::SyllSequent;

/// A term-variable, possibly complemented (`s` for non-S).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedTerm {
    pub var: TermVar,
    pub complemented: bool,
}

impl SignedTerm {
    pub fn new(var: TermVar, complemented: bool) -> Self {
        SignedTerm { var, complemented }
    }

    pub fn plain(name: &str) -> Self {
        Self::new(TermVar::new(name).expect("valid identifier"), false)
    }

    pub fn complement(name: &str) -> Self {
        Self::new(TermVar::new(name).expect("valid identifier"), true)
    }

    pub fn to_formula(&self) -> RllFormula {
        let a = RllFormula::atom(self.var.as_str());
        if self.complemented {
            a.complement()
        } else {
            a
        }
    }
}

/// Complemented terms print with a lowercase first letter.
impl fmt::Display for SignedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.var.as_str();
        if self.complemented {
            let mut chars = s.chars();
            let head = chars.next().expect("nonempty").to_ascii_lowercase();
            write!(f, "{head}{}", chars.as_str())
        } else {
            f.write_str(s)
        }
    }
}

impl FromStr for SignedTerm {
    type Err = ParseError;

    /// A lowercase first letter marks a complemented term; the variable is
    /// the uppercased form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars
            .next()
            .ok_or_else(|| ParseError::new(0, "expected a term"))?;
        let complemented = head.is_ascii_lowercase();
        let name = format!("{}{}", head.to_ascii_uppercase(), chars.as_str());
        Ok(SignedTerm::new(TermVar::new(name)?, complemented))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    Universal,
    Particular,
}

impl Quantity {
    pub fn letter(self) -> char {
        match self {
            Quantity::Universal => 'A',
            Quantity::Particular => 'I',
        }
    }
}

/// `A(S,p)` or `I(m,P)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CategoricalProp {
    pub quantity: Quantity,
    pub subject: SignedTerm,
    pub predicate: SignedTerm,
}

impl CategoricalProp {
    pub fn new(quantity: Quantity, subject: SignedTerm, predicate: SignedTerm) -> Self {
        CategoricalProp {
            quantity,
            subject,
            predicate,
        }
    }

    /// The existential import `I(X,X)` on a term.
    pub fn import(t: &SignedTerm) -> Self {
        Self::new(Quantity::Particular, t.clone(), t.clone())
    }

    /// Universal as linear implication, particular as tensor.
    pub fn to_formula(&self) -> RllFormula {
        let s = self.subject.to_formula();
        let q = self.predicate.to_formula();
        match self.quantity {
            Quantity::Universal => RllFormula::lollipop(s, q),
            Quantity::Particular => RllFormula::tensor(s, q),
        }
    }

    pub fn to_diagram(&self) -> Diagram {
        let mut tokens = vec![Token::Var(self.subject.var.clone())];
        tokens.extend(interior(
            self.quantity == Quantity::Universal,
            self.subject.complemented,
            self.predicate.complemented,
        ));
        tokens.push(Token::Var(self.predicate.var.clone()));
        Diagram::from_tokens(tokens).expect("interiors alternate")
    }

    /// Whether both terms are uncomplemented subjects (the traditional
    /// propositions allow a complement only on the predicate).
    pub fn is_traditional(&self) -> bool {
        !self.subject.complemented
    }

    fn mentions(&self, v: &TermVar) -> bool {
        self.subject.var == *v || self.predicate.var == *v
    }
}

impl fmt::Display for CategoricalProp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({},{})",
            self.quantity.letter(),
            self.subject,
            self.predicate
        )
    }
}

impl FromStr for CategoricalProp {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = |m: &str| ParseError::new(0, format!("{m} in `{t}`"));
        let quantity = match t.chars().next() {
            Some('A') => Quantity::Universal,
            Some('I') => Quantity::Particular,
            _ => return Err(bad("expected quantity letter A or I")),
        };
        let inner = t[1..]
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected `(subject,predicate)`"))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| bad("expected `,` between terms"))?;
        Ok(CategoricalProp::new(quantity, a.parse()?, b.parse()?))
    }
}

/// Two premises, an optional existential import and a conclusion.
///
/// The first premise carries the predicate term of the conclusion, the
/// second its subject; the middle term occurs in both premises only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllogism {
    pub premise1: CategoricalProp,
    pub premise2: CategoricalProp,
    pub import: Option<SignedTerm>,
    pub conclusion: CategoricalProp,
}

impl Syllogism {
    pub fn new(
        premise1: CategoricalProp,
        premise2: CategoricalProp,
        import: Option<SignedTerm>,
        conclusion: CategoricalProp,
    ) -> Result<Self, ParseError> {
        let s = Syllogism {
            premise1,
            premise2,
            import,
            conclusion,
        };
        let subj = &s.conclusion.subject.var;
        let pred = &s.conclusion.predicate.var;
        let err = |m: &str| Err(ParseError::new(0, format!("{m}: {s}")));
        if subj == pred {
            return err("conclusion terms must differ");
        }
        if !s.premise1.mentions(pred) || s.premise1.mentions(subj) {
            return err("first premise must contain the predicate term and not the subject");
        }
        if !s.premise2.mentions(subj) || s.premise2.mentions(pred) {
            return err("second premise must contain the subject term and not the predicate");
        }
        let m1 = other(&s.premise1, pred);
        let m2 = other(&s.premise2, subj);
        if m1 != m2 || m1 == *subj || m1 == *pred {
            return err("premises must share one middle term");
        }
        Ok(s)
    }

    pub fn middle(&self) -> TermVar {
        other(&self.premise1, &self.conclusion.predicate.var)
    }

    /// Positional figure 1-4; complement flags are ignored.
    pub fn figure(&self) -> u8 {
        let m = self.middle();
        match (
            self.premise1.subject.var == m,
            self.premise2.predicate.var == m,
        ) {
            (true, true) => 1,
            (false, true) => 2,
            (true, false) => 3,
            (false, false) => 4,
        }
    }

    /// Quantity letters of the premises, import (as `I`) and conclusion.
    pub fn mood(&self) -> String {
        let mut s = String::new();
        s.push(self.premise1.quantity.letter());
        s.push(self.premise2.quantity.letter());
        if self.import.is_some() {
            s.push('I');
        }
        s.push(self.conclusion.quantity.letter());
        s
    }

    /// Premises in order, then the import if any.
    pub fn premises(&self) -> Vec<CategoricalProp> {
        let mut v = vec![self.premise1.clone(), self.premise2.clone()];
        if let Some(t) = &self.import {
            v.push(CategoricalProp::import(t));
        }
        v
    }

    pub fn syll_sequent(&self) -> SyllSequent {
        SyllSequent::new(
            self.premises()
                .iter()
                .map(CategoricalProp::to_diagram)
                .collect(),
            self.conclusion.to_diagram(),
        )
    }

    pub fn rll_sequent(&self) -> RllSequent {
        RllSequent::new(
            self.premises()
                .iter()
                .map(CategoricalProp::to_formula)
                .collect(),
            self.conclusion.to_formula(),
        )
    }
}

fn other(p: &CategoricalProp, v: &TermVar) -> TermVar {
    if p.subject.var == *v {
        p.predicate.var.clone()
    } else {
        p.subject.var.clone()
    }
}

/// `P1 ; P2 [; I(X,X)] / C`.
impl fmt::Display for Syllogism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.premise1, self.premise2)?;
        if let Some(t) = &self.import {
            write!(f, " ; {}", CategoricalProp::import(t))?;
        }
        write!(f, " / {}", self.conclusion)
    }
}

impl FromStr for Syllogism {
    type Err = ParseError;

    /// The import may be written as `I(S,S)` or as the bare term `S`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lhs, rhs) = s
            .split_once('/')
            .ok_or_else(|| ParseError::new(s.len(), "expected `/` before the conclusion"))?;
        let parts: Vec<&str> = lhs.split(';').collect();
        if !(2..=3).contains(&parts.len()) {
            return Err(ParseError::new(
                0,
                "expected two premises and an optional import",
            ));
        }
        let import = match parts.get(2) {
            None => None,
            Some(t) if t.contains('(') => {
                let p: CategoricalProp = t.parse()?;
                if p.quantity != Quantity::Particular || p.subject != p.predicate {
                    return Err(ParseError::new(0, format!("`{p}` is not an import I(X,X)")));
                }
                Some(p.subject)
            }
            Some(t) => Some(t.parse()?),
        };
        Syllogism::new(parts[0].parse()?, parts[1].parse()?, import, rhs.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> CategoricalProp {
        s.parse().unwrap()
    }

    fn syl(s: &str) -> Syllogism {
        s.parse().unwrap()
    }

    #[test]
    fn formulas() {
        assert_eq!(p("I(S,p)").to_formula().to_string(), "S * P^");
        assert_eq!(p("A(a,B)").to_formula().to_string(), "A^ -o B");
        assert_eq!(p("A(S,M)").to_formula().to_string(), "S -o M");
    }

    #[test]
    fn diagrams() {
        let cases = [
            ("A(A,B)", "A -> B"),
            ("A(A,b)", "A -> * <- B"),
            ("I(A,B)", "A <- * -> B"),
            ("I(A,b)", "A <- * -> * <- B"),
            ("A(a,B)", "A -> * -> B"),
            ("A(a,b)", "A -> * -> * <- B"),
            ("I(a,B)", "A -> * <- * -> B"),
            ("I(a,b)", "A -> * <- * -> * <- B"),
            ("I(S,S)", "S <- * -> S"),
        ];
        for (prop, diag) in cases {
            assert_eq!(p(prop).to_diagram().to_string(), diag, "{prop}");
        }
    }

    #[test]
    fn particular_diagrams_are_symmetric() {
        for (ab, ba) in [
            ("I(A,B)", "I(B,A)"),
            ("I(a,b)", "I(b,a)"),
            ("I(A,b)", "I(b,A)"),
        ] {
            assert_eq!(p(ab).to_diagram().reversal(), p(ba).to_diagram());
        }
    }

    #[test]
    fn figure_and_mood() {
        assert_eq!(syl("A(M,P) ; A(S,M) / A(S,P)").figure(), 1);
        let darapti = syl("I(M,P) ; A(M,S) / I(S,P)");
        assert_eq!(darapti.figure(), 3);
        assert_eq!(darapti.mood(), "IAI");
        assert_eq!(syl("A(P,M) ; A(M,s) / A(S,p)").figure(), 4);
        assert_eq!(syl("A(P,m) ; A(S,M) / A(S,p)").figure(), 2);
        let s = syl("A(M,P) ; A(S,M) ; I(S,S) / I(S,P)");
        assert_eq!(s.mood(), "AAII");
        assert_eq!(s, syl("A(M,P) ; A(S,M) ; S / I(S,P)"));
        assert_eq!(syl("A(M,P) ; A(S,M) / A(S,P)").mood(), "AAA");
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "A(M,p) ; I(s,m) ; I(s,s) / I(s,p)",
            "I(M,P) ; A(M,S) / I(S,P)",
        ] {
            assert_eq!(syl(s).to_string(), s);
        }
    }

    #[test]
    fn malformed() {
        assert!("A(M,P) ; A(S,P) / A(S,P)".parse::<Syllogism>().is_err());
        assert!("A(M,P) ; A(S,M) / A(S,M)".parse::<Syllogism>().is_err());
        assert!("E(M,P) ; A(S,M) / A(S,P)".parse::<Syllogism>().is_err());
        assert!("A(M,P) ; A(S,M) ; A(S,S) / I(S,P)"
            .parse::<Syllogism>()
            .is_err());
        assert!("A(M,P) A(S,M) / A(S,P)".parse::<Syllogism>().is_err());
    }

    #[test]
    fn sequents() {
        let s = syl("A(M,P) ; A(S,M) ; I(S,S) / I(S,P)");
        assert_eq!(
            s.syll_sequent().to_string(),
            "M -> P, S -> M, S <- * -> S |= S <- * -> P"
        );
        assert_eq!(
            s.rll_sequent().to_string(),
            "M -o P, S -o M, S * S |- S * P"
        );
    }
}

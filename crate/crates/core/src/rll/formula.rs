use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::lexer::{Cursor, Tok};

/// Formulas of the intuitionistic calculus: atoms, the distinguished atom
/// `bot`, tensor and linear implication.
///
/// The complement `A^` is not a constructor; it is `A -o bot`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RllFormula {
    Atom(String),
    Bottom,
    Tensor(Box<RllFormula>, Box<RllFormula>),
    Lollipop(Box<RllFormula>, Box<RllFormula>),
}

impl RllFormula {
    pub fn atom(name: &str) -> Self {
        RllFormula::Atom(name.to_string())
    }

    pub fn tensor(a: RllFormula, b: RllFormula) -> Self {
        RllFormula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn lollipop(a: RllFormula, b: RllFormula) -> Self {
        RllFormula::Lollipop(Box::new(a), Box::new(b))
    }

    /// `A^`, i.e. `A -o bot`.
    pub fn complement(self) -> Self {
        RllFormula::lollipop(self, RllFormula::Bottom)
    }

    /// Number of binary connectives.
    pub fn connectives(&self) -> usize {
        match self {
            RllFormula::Atom(_) | RllFormula::Bottom => 0,
            RllFormula::Tensor(a, b) | RllFormula::Lollipop(a, b) => {
                1 + a.connectives() + b.connectives()
            }
        }
    }

    fn is_complement(&self) -> Option<&RllFormula> {
        match self {
            RllFormula::Lollipop(a, b) if **b == RllFormula::Bottom => Some(a),
            _ => None,
        }
    }
}

/// `complement(a) = a -o bot`.
pub fn complement(a: RllFormula) -> RllFormula {
    a.complement()
}

impl fmt::Display for RllFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(inner) = self.is_complement() {
            return match inner {
                RllFormula::Tensor(..) => write!(f, "({inner})^"),
                RllFormula::Lollipop(..) if inner.is_complement().is_none() => {
                    write!(f, "({inner})^")
                }
                _ => write!(f, "{inner}^"),
            };
        }
        match self {
            RllFormula::Atom(n) => f.write_str(n),
            RllFormula::Bottom => f.write_str("bot"),
            RllFormula::Tensor(a, b) => {
                if is_plain_lollipop(a) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                f.write_str(" * ")?;
                if matches!(**b, RllFormula::Tensor(..)) || is_plain_lollipop(b) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            RllFormula::Lollipop(a, b) => {
                if is_plain_lollipop(a) {
                    write!(f, "({a}) -o {b}")
                } else {
                    write!(f, "{a} -o {b}")
                }
            }
        }
    }
}

fn is_plain_lollipop(x: &RllFormula) -> bool {
    matches!(x, RllFormula::Lollipop(..)) && x.is_complement().is_none()
}

impl FromStr for RllFormula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s)?;
        let f = parse_impl(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.unexpected("end of input"));
        }
        Ok(f)
    }
}

pub(crate) fn parse_impl(cur: &mut Cursor) -> Result<RllFormula, ParseError> {
    let lhs = parse_tensor(cur)?;
    if cur.eat(&Tok::Lolli) {
        let rhs = parse_impl(cur)?;
        Ok(RllFormula::lollipop(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn parse_tensor(cur: &mut Cursor) -> Result<RllFormula, ParseError> {
    let mut acc = parse_postfix(cur)?;
    while cur.eat(&Tok::Star) {
        let rhs = parse_postfix(cur)?;
        acc = RllFormula::tensor(acc, rhs);
    }
    Ok(acc)
}

fn parse_postfix(cur: &mut Cursor) -> Result<RllFormula, ParseError> {
    let mut f = parse_primary(cur)?;
    while cur.eat(&Tok::Caret) {
        f = f.complement();
    }
    Ok(f)
}

fn parse_primary(cur: &mut Cursor) -> Result<RllFormula, ParseError> {
    match cur.peek() {
        Some(Tok::Ident(_)) => match cur.bump() {
            Some(Tok::Ident(name)) => Ok(RllFormula::Atom(name)),
            _ => unreachable!(),
        },
        Some(Tok::Bot) => {
            cur.bump();
            Ok(RllFormula::Bottom)
        }
        Some(Tok::LParen) => {
            cur.bump();
            let f = parse_impl(cur)?;
            cur.expect(&Tok::RParen)?;
            Ok(f)
        }
        _ => Err(cur.unexpected("a formula")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> RllFormula {
        s.parse().unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(
            f("A * B -o C"),
            RllFormula::lollipop(RllFormula::tensor(f("A"), f("B")), f("C"))
        );
        assert_eq!(
            f("A -o B -o C"),
            RllFormula::lollipop(f("A"), RllFormula::lollipop(f("B"), f("C")))
        );
        assert_eq!(
            f("A * B * C"),
            RllFormula::tensor(RllFormula::tensor(f("A"), f("B")), f("C"))
        );
        assert_eq!(f("A * B^"), RllFormula::tensor(f("A"), f("B").complement()));
        assert_eq!(f("A^^"), f("(A -o bot) -o bot"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(f("A")), f("A -o bot"));
        assert_eq!(complement(complement(f("A"))).to_string(), "A^^");
        assert_eq!(complement(RllFormula::Bottom).to_string(), "bot^");
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "A",
            "bot",
            "A * B",
            "A -o B",
            "(A -o B) -o C",
            "A * (B * C)",
            "(A -o B) * C",
            "A * (B -o C)",
            "(A * B)^",
            "(A -o B)^",
            "A^^^",
            "A^ -o B^",
            "A^ * B^",
        ] {
            let x = f(s);
            assert_eq!(x.to_string(), s);
            assert_eq!(f(&x.to_string()), x);
        }
    }

    #[test]
    fn errors() {
        assert!("A *".parse::<RllFormula>().is_err());
        assert!("(A".parse::<RllFormula>().is_err());
        assert!("A B".parse::<RllFormula>().is_err());
        assert!("A # B".parse::<RllFormula>().is_err());
    }
}

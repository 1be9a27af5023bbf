use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::lexer::{Cursor, Tok};

/// Classical multiplicative formulas in negation normal form. Negation is
/// the computed [`CmllFormula::negation`], never a constructor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CmllFormula {
    Pos(String),
    Neg(String),
    One,
    Bot,
    Tensor(Box<CmllFormula>, Box<CmllFormula>),
    Par(Box<CmllFormula>, Box<CmllFormula>),
}

impl CmllFormula {
    pub fn pos(name: &str) -> Self {
        CmllFormula::Pos(name.to_string())
    }

    pub fn neg(name: &str) -> Self {
        CmllFormula::Neg(name.to_string())
    }

    pub fn tensor(a: CmllFormula, b: CmllFormula) -> Self {
        CmllFormula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn par(a: CmllFormula, b: CmllFormula) -> Self {
        CmllFormula::Par(Box::new(a), Box::new(b))
    }

    /// De Morgan dual: `(A*B)^ = A^ | B^`, `(A|B)^ = A^ * B^`, `1^ = bot`.
    pub fn negation(&self) -> CmllFormula {
        match self {
            CmllFormula::Pos(n) => CmllFormula::Neg(n.clone()),
            CmllFormula::Neg(n) => CmllFormula::Pos(n.clone()),
            CmllFormula::One => CmllFormula::Bot,
            CmllFormula::Bot => CmllFormula::One,
            CmllFormula::Tensor(a, b) => CmllFormula::par(a.negation(), b.negation()),
            CmllFormula::Par(a, b) => CmllFormula::tensor(a.negation(), b.negation()),
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, CmllFormula::Pos(_) | CmllFormula::Neg(_))
    }

    /// Removes units: `1 * X`, `X * 1`, `bot | X` and `X | bot` become `X`.
    pub fn normalize_units(&self) -> CmllFormula {
        match self {
            CmllFormula::Tensor(a, b) => match (a.normalize_units(), b.normalize_units()) {
                (CmllFormula::One, x) | (x, CmllFormula::One) => x,
                (x, y) => CmllFormula::tensor(x, y),
            },
            CmllFormula::Par(a, b) => match (a.normalize_units(), b.normalize_units()) {
                (CmllFormula::Bot, x) | (x, CmllFormula::Bot) => x,
                (x, y) => CmllFormula::par(x, y),
            },
            other => other.clone(),
        }
    }

    /// Atom occurrences from left to right.
    pub fn atoms(&self) -> Vec<&CmllFormula> {
        match self {
            CmllFormula::Pos(_) | CmllFormula::Neg(_) => vec![self],
            CmllFormula::One | CmllFormula::Bot => vec![],
            CmllFormula::Tensor(a, b) | CmllFormula::Par(a, b) => {
                let mut v = a.atoms();
                v.extend(b.atoms());
                v
            }
        }
    }

    /// Number of atom occurrences.
    pub fn atom_count(&self) -> usize {
        self.atoms().len()
    }
}

/// De Morgan dual in negation normal form; an involution.
pub fn linear_negation(f: &CmllFormula) -> CmllFormula {
    f.negation()
}

/// `*` binds tighter than `|`; both associate to the left.
impl fmt::Display for CmllFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmllFormula::Pos(n) => f.write_str(n),
            CmllFormula::Neg(n) => write!(f, "{n}^"),
            CmllFormula::One => f.write_str("1"),
            CmllFormula::Bot => f.write_str("bot"),
            CmllFormula::Tensor(a, b) => {
                let wrap_a = matches!(**a, CmllFormula::Par(..));
                let wrap_b = matches!(**b, CmllFormula::Par(..) | CmllFormula::Tensor(..));
                write_side(f, a, wrap_a)?;
                f.write_str(" * ")?;
                write_side(f, b, wrap_b)
            }
            CmllFormula::Par(a, b) => {
                write_side(f, a, false)?;
                f.write_str(" | ")?;
                write_side(f, b, matches!(**b, CmllFormula::Par(..)))
            }
        }
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, x: &CmllFormula, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({x})")
    } else {
        write!(f, "{x}")
    }
}

impl FromStr for CmllFormula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s)?;
        let f = parse_par(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.unexpected("end of input"));
        }
        Ok(f)
    }
}

fn parse_par(cur: &mut Cursor) -> Result<CmllFormula, ParseError> {
    let mut acc = parse_tensor(cur)?;
    while cur.eat(&Tok::Bar) {
        acc = CmllFormula::par(acc, parse_tensor(cur)?);
    }
    Ok(acc)
}

fn parse_tensor(cur: &mut Cursor) -> Result<CmllFormula, ParseError> {
    let mut acc = parse_postfix(cur)?;
    while cur.eat(&Tok::Star) {
        acc = CmllFormula::tensor(acc, parse_postfix(cur)?);
    }
    Ok(acc)
}

fn parse_postfix(cur: &mut Cursor) -> Result<CmllFormula, ParseError> {
    let mut f = parse_primary(cur)?;
    while cur.eat(&Tok::Caret) {
        f = f.negation();
    }
    Ok(f)
}

fn parse_primary(cur: &mut Cursor) -> Result<CmllFormula, ParseError> {
    match cur.peek() {
        Some(Tok::Ident(_)) => match cur.bump() {
            Some(Tok::Ident(n)) => Ok(CmllFormula::Pos(n)),
            _ => unreachable!(),
        },
        Some(Tok::One) => {
            cur.bump();
            Ok(CmllFormula::One)
        }
        Some(Tok::Bot) => {
            cur.bump();
            Ok(CmllFormula::Bot)
        }
        Some(Tok::LParen) => {
            cur.bump();
            let f = parse_par(cur)?;
            cur.expect(&Tok::RParen)?;
            Ok(f)
        }
        _ => Err(cur.unexpected("a formula")),
    }
}

/// Right-sided sequent `=> F1, ..., Fn`. The order is kept: it fixes the
/// left-to-right order of atoms in a proof net.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CmllSequent {
    pub conclusions: Vec<CmllFormula>,
}

impl CmllSequent {
    pub fn new(conclusions: Vec<CmllFormula>) -> Self {
        CmllSequent { conclusions }
    }

    pub fn normalize_units(&self) -> CmllSequent {
        CmllSequent::new(
            self.conclusions
                .iter()
                .map(CmllFormula::normalize_units)
                .collect(),
        )
    }
}

impl fmt::Display for CmllSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("=>")?;
        for (i, c) in self.conclusions.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CmllSequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s)?;
        cur.expect(&Tok::DoubleArrow)?;
        let mut conclusions = Vec::new();
        if !cur.at_end() {
            loop {
                conclusions.push(parse_par(&mut cur)?);
                if !cur.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        if !cur.at_end() {
            return Err(cur.unexpected("`,` or end of input"));
        }
        Ok(CmllSequent { conclusions })
    }
}

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::ParseError;
use crate::lexer::{Cursor, Tok};

use super::formula::{parse_impl, RllFormula};

/// `context |- conclusion` with a multiset context.
///
/// The stored order is kept for display and translation, but equality and
/// hashing ignore it.
#[derive(Debug, Clone)]
pub struct RllSequent {
    pub context: Vec<RllFormula>,
    pub conclusion: RllFormula,
}

impl RllSequent {
    pub fn new(context: Vec<RllFormula>, conclusion: RllFormula) -> Self {
        RllSequent {
            context,
            conclusion,
        }
    }

    pub(crate) fn sorted_context(&self) -> Vec<RllFormula> {
        let mut c = self.context.clone();
        c.sort();
        c
    }

    pub fn size(&self) -> usize {
        self.context
            .iter()
            .map(RllFormula::connectives)
            .sum::<usize>()
            + self.conclusion.connectives()
    }
}

impl PartialEq for RllSequent {
    fn eq(&self, other: &Self) -> bool {
        self.conclusion == other.conclusion && self.sorted_context() == other.sorted_context()
    }
}

impl Eq for RllSequent {}

impl Hash for RllSequent {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sorted_context().hash(state);
        self.conclusion.hash(state);
    }
}

impl fmt::Display for RllSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.context.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        if self.context.is_empty() {
            write!(f, "|- {}", self.conclusion)
        } else {
            write!(f, " |- {}", self.conclusion)
        }
    }
}

impl FromStr for RllSequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s)?;
        let mut context = Vec::new();
        if !cur.eat(&Tok::Turnstile) {
            loop {
                context.push(parse_impl(&mut cur)?);
                if cur.eat(&Tok::Comma) {
                    continue;
                }
                cur.expect(&Tok::Turnstile)?;
                break;
            }
        }
        let conclusion = parse_impl(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.unexpected("end of input"));
        }
        Ok(RllSequent {
            context,
            conclusion,
        })
    }
}

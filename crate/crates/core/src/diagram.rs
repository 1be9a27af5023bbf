//! Linear diagrams: finite alternating sequences of term-variables, arrows
//! and bullets that begin and end at a term-variable.
//!
//! The concrete notation is ASCII: `->` and `<-` for arrows, `*` for the
//! bullet, identifiers for term-variables. Tokens may be separated by any
//! amount of whitespace; the canonical rendering joins them with single
//! spaces.
//!
//! ```
//! use syllogic::diagram::Diagram;
//!
//! let d: Diagram = "S <- * -> P".parse().unwrap();
//! assert_eq!(d.bullet_count(), 1);
//! assert_eq!(d.reversal().to_string(), "P <- * -> S");
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A term-variable name such as `S`, `M` or `P`.
///
/// Comparison is case-sensitive. Whether a term is complemented is never
/// recorded here: in diagrams it is a positional property, in categorical
/// propositions a separate flag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TermVar(String);

impl TermVar {
    pub fn new(name: impl Into<String>) -> Result<Self, ParseError> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(TermVar(name))
        } else {
            Err(ParseError::new(
                0,
                format!("invalid term-variable `{name}`"),
            ))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for TermVar {
    type Error = ParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        TermVar::new(s)
    }
}

impl From<TermVar> for String {
    fn from(v: TermVar) -> String {
        v.0
    }
}

impl fmt::Display for TermVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// One component of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    Var(TermVar),
    Right,
    Left,
    Bullet,
}

impl Token {
    pub fn var(name: &str) -> Token {
        Token::Var(TermVar::new(name).expect("valid term-variable"))
    }

    pub fn is_arrow(&self) -> bool {
        matches!(self, Token::Right | Token::Left)
    }

    pub fn as_var(&self) -> Option<&TermVar> {
        match self {
            Token::Var(v) => Some(v),
            _ => None,
        }
    }

    fn mirrored(&self) -> Token {
        match self {
            Token::Right => Token::Left,
            Token::Left => Token::Right,
            t => t.clone(),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Var(v) => write!(f, "{v}"),
            Token::Right => f.write_str("->"),
            Token::Left => f.write_str("<-"),
            Token::Bullet => f.write_str("*"),
        }
    }
}

/// A valid diagram. Construction goes through [`Diagram::from_tokens`] or
/// parsing, both of which enforce the alternation invariant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    tokens: Vec<Token>,
}

/// A run of consecutive tokens inside a host diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramPart<'a> {
    pub tokens: &'a [Token],
    pub offset: usize,
}

impl Diagram {
    /// Validates alternation and endpoint conditions.
    pub fn from_tokens(tokens: Vec<Token>) -> Result<Self, ParseError> {
        if tokens.is_empty() {
            return Err(ParseError::new(0, "empty diagram"));
        }
        for (i, t) in tokens.iter().enumerate() {
            let want_arrow = i % 2 == 1;
            if t.is_arrow() != want_arrow {
                let msg = if want_arrow {
                    format!("expected an arrow at token {i}, found `{t}`")
                } else {
                    format!("expected a term-variable or bullet at token {i}, found `{t}`")
                };
                return Err(ParseError::new(i, msg));
            }
        }
        if !matches!(tokens[0], Token::Var(_)) {
            return Err(ParseError::new(0, "diagram must begin at a term-variable"));
        }
        let last = tokens.len() - 1;
        if !matches!(tokens[last], Token::Var(_)) {
            return Err(ParseError::new(last, "diagram must end at a term-variable"));
        }
        Ok(Diagram { tokens })
    }

    /// Single-variable diagram.
    pub fn var(v: TermVar) -> Self {
        Diagram {
            tokens: vec![Token::Var(v)],
        }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first_var(&self) -> &TermVar {
        self.tokens[0]
            .as_var()
            .expect("diagram starts at a variable")
    }

    pub fn last_var(&self) -> &TermVar {
        self.tokens[self.tokens.len() - 1]
            .as_var()
            .expect("diagram ends at a variable")
    }

    /// Term-variables in order of occurrence, with repetitions.
    pub fn vars(&self) -> impl Iterator<Item = &TermVar> {
        self.tokens.iter().filter_map(Token::as_var)
    }

    pub fn part(&self, offset: usize, len: usize) -> Option<DiagramPart<'_>> {
        let tokens = self.tokens.get(offset..offset.checked_add(len)?)?;
        Some(DiagramPart { tokens, offset })
    }

    /// Token sequence reversed with the two arrow directions swapped.
    pub fn reversal(&self) -> Diagram {
        Diagram {
            tokens: self.tokens.iter().rev().map(Token::mirrored).collect(),
        }
    }

    pub fn bullet_count(&self) -> usize {
        self.tokens.iter().filter(|t| **t == Token::Bullet).count()
    }

    /// Number of matches of `v ->  *` and `* <- v` over the occurrences of
    /// `v`; an occurrence inside `* <- v -> *` counts twice.
    pub fn complemented_occurrences(&self, v: &TermVar) -> usize {
        let t = &self.tokens;
        let mut count = 0;
        for (i, tok) in t.iter().enumerate() {
            if tok.as_var() != Some(v) {
                continue;
            }
            if i + 2 < t.len() && t[i + 1] == Token::Right && t[i + 2] == Token::Bullet {
                count += 1;
            }
            if i >= 2 && t[i - 1] == Token::Left && t[i - 2] == Token::Bullet {
                count += 1;
            }
        }
        count
    }

    /// Membership in the inductive closure of syllogistic diagrams (old and
    /// new), their reversals, and concatenations.
    pub fn is_well_formed(&self) -> bool {
        self.is_well_formed_with(true)
    }

    /// Like [`Diagram::is_well_formed`], optionally restricted to the four
    /// traditional syllogistic diagrams and their reversals.
    pub fn is_well_formed_with(&self, include_new: bool) -> bool {
        let allowed = if include_new {
            extended_segments()
        } else {
            base_segments()
        };
        self.segments().all(|seg| allowed.iter().any(|a| a == seg))
    }

    /// The token runs strictly between consecutive term-variables.
    pub(crate) fn segments(&self) -> impl Iterator<Item = &[Token]> {
        let idx: Vec<usize> = self
            .tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, Token::Var(_)))
            .map(|(i, _)| i)
            .collect();
        let toks = &self.tokens;
        (0..idx.len().saturating_sub(1)).map(move |k| &toks[idx[k] + 1..idx[k + 1]])
    }

    /// Concatenation on the shared extremal variable.
    pub fn concat(&self, other: &Diagram) -> Option<Diagram> {
        if self.last_var() != other.first_var() {
            return None;
        }
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens[1..].iter().cloned());
        Some(Diagram { tokens })
    }

    /// Splices `replacement` over `tokens[start..end]`. The caller keeps the
    /// result alternating.
    pub(crate) fn splice(&self, start: usize, end: usize, replacement: &[Token]) -> Diagram {
        let mut tokens = Vec::with_capacity(self.tokens.len());
        tokens.extend_from_slice(&self.tokens[..start]);
        tokens.extend_from_slice(replacement);
        tokens.extend_from_slice(&self.tokens[end..]);
        debug_assert!(Diagram::from_tokens(tokens.clone()).is_ok());
        Diagram { tokens }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_diagram(s)
    }
}

/// Parses the ASCII notation, reporting byte offsets on failure.
pub fn parse_diagram(text: &str) -> Result<Diagram, ParseError> {
    let lexed = lex(text)?;
    if lexed.is_empty() {
        return Err(ParseError::new(text.len(), "empty diagram"));
    }
    for (k, (pos, tok)) in lexed.iter().enumerate() {
        let want_arrow = k % 2 == 1;
        if tok.is_arrow() == want_arrow {
            continue;
        }
        let msg = match (want_arrow, k) {
            (false, 0) => "diagram must begin at a term-variable".to_string(),
            (false, _) => format!("two adjacent arrows at `{tok}`"),
            (true, _) => format!("missing arrow before `{tok}`"),
        };
        return Err(ParseError::new(*pos, msg));
    }
    if !matches!(lexed[0].1, Token::Var(_)) {
        return Err(ParseError::new(
            lexed[0].0,
            "diagram must begin at a term-variable",
        ));
    }
    let (pos, last) = &lexed[lexed.len() - 1];
    if !matches!(last, Token::Var(_)) {
        let at = if last.is_arrow() { text.len() } else { *pos };
        return Err(ParseError::new(at, "diagram must end at a term-variable"));
    }
    Ok(Diagram {
        tokens: lexed.into_iter().map(|(_, t)| t).collect(),
    })
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if text[i..].starts_with("->") {
            out.push((i, Token::Right));
            i += 2;
        } else if text[i..].starts_with("<-") {
            out.push((i, Token::Left));
            i += 2;
        } else if c == b'*' {
            out.push((i, Token::Bullet));
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Var(TermVar(text[start..i].to_string()))));
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(ParseError::new(i, format!("unknown token `{ch}`")));
        }
    }
    Ok(out)
}

/// Interior of the syllogistic diagram for a categorical proposition with
/// the given subject/predicate complement flags.
pub(crate) fn interior(universal: bool, subj_compl: bool, pred_compl: bool) -> Vec<Token> {
    use Token::{Bullet as B, Left as L, Right as R};
    match (universal, subj_compl, pred_compl) {
        (true, false, false) => vec![R],
        (true, false, true) => vec![R, B, L],
        (false, false, false) => vec![L, B, R],
        (false, false, true) => vec![L, B, R, B, L],
        (true, true, false) => vec![R, B, R],
        (true, true, true) => vec![R, B, R, B, L],
        (false, true, false) => vec![R, B, L, B, R],
        (false, true, true) => vec![R, B, L, B, R, B, L],
    }
}

fn mirror_segment(seg: &[Token]) -> Vec<Token> {
    seg.iter().rev().map(Token::mirrored).collect()
}

fn closure(include_new: bool) -> Vec<Vec<Token>> {
    let mut out: Vec<Vec<Token>> = Vec::new();
    for universal in [true, false] {
        for subj in [false, true] {
            if subj && !include_new {
                continue;
            }
            for pred in [false, true] {
                let seg = interior(universal, subj, pred);
                for s in [mirror_segment(&seg), seg] {
                    if !out.contains(&s) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn base_segments() -> &'static [Vec<Token>] {
    static CELL: OnceLock<Vec<Vec<Token>>> = OnceLock::new();
    CELL.get_or_init(|| closure(false))
}

pub(crate) fn extended_segments() -> &'static [Vec<Token>] {
    static CELL: OnceLock<Vec<Vec<Token>>> = OnceLock::new();
    CELL.get_or_init(|| closure(true))
}

/// True when `d` is exactly one (new) syllogistic diagram or the reversal
/// of one, i.e. two variables joined by an allowed segment.
pub(crate) fn is_syllogistic_shape(d: &Diagram, include_new: bool) -> bool {
    let vars = d.tokens.iter().filter(|t| t.as_var().is_some()).count();
    vars == 2 && d.is_well_formed_with(include_new)
}

/// Whether the reversal step between `d` and its mirror image is one of the
/// traditional double-line rules (as opposed to the added ones for the new
/// diagrams).
pub(crate) fn reversal_is_traditional(d: &Diagram) -> bool {
    is_syllogistic_shape(d, false)
}

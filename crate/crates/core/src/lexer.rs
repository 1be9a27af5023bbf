//! Tokenizer shared by the intuitionistic and classical formula grammars.

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Bot,
    One,
    Caret,
    Star,
    Bar,
    Lolli,
    LParen,
    RParen,
    Comma,
    Turnstile,
    DoubleArrow,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Bot => "`bot`".into(),
            Tok::One => "`1`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Star => "`*`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Lolli => "`-o`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::DoubleArrow => "`=>`".into(),
        }
    }
}

pub(crate) fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let rest = &text[i..];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let (tok, len) = if rest.starts_with("-o") && !continues_ident(bytes, i + 2) {
            (Tok::Lolli, 2)
        } else if rest.starts_with("|-") {
            (Tok::Turnstile, 2)
        } else if rest.starts_with("=>") {
            (Tok::DoubleArrow, 2)
        } else {
            match c {
                b'^' => (Tok::Caret, 1),
                b'*' => (Tok::Star, 1),
                b'|' => (Tok::Bar, 1),
                b'(' => (Tok::LParen, 1),
                b')' => (Tok::RParen, 1),
                b',' => (Tok::Comma, 1),
                b'1' if !continues_ident(bytes, i + 1) => (Tok::One, 1),
                c if c.is_ascii_alphabetic() => {
                    let mut j = i;
                    while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                    {
                        j += 1;
                    }
                    let word = &text[i..j];
                    let tok = if word == "bot" {
                        Tok::Bot
                    } else {
                        Tok::Ident(word.to_string())
                    };
                    (tok, j - i)
                }
                _ => {
                    let ch = rest.chars().next().unwrap_or('?');
                    return Err(ParseError::new(i, format!("unknown token `{ch}`")));
                }
            }
        };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

fn continues_ident(bytes: &[u8], at: usize) -> bool {
    bytes
        .get(at)
        .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
}

/// Cursor over a token stream with end-of-input position tracking.
pub(crate) struct Cursor {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Cursor {
            toks: lex(text)?,
            pos: 0,
            end: text.len(),
        })
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    pub(crate) fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    pub(crate) fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, t: &Tok) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.unexpected(&t.describe()))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::new(
                self.offset(),
                format!("expected {wanted}, found {}", t.describe()),
            ),
            None => ParseError::new(self.end, format!("expected {wanted}, found end of input")),
        }
    }
}

use thiserror::Error;

/// Malformed input text; `position` is a byte offset (or a token index for
/// programmatically built token lists).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("rule shape mismatch: {0}")]
    RuleShapeMismatch(String),
    #[error("diagrams are not concatenable: `{0}` ends at {1}, `{2}` starts at {3}")]
    NotConcatenable(String, String, String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("identity leaf on non-atomic formula `{0}`")]
    NonAtomicIdentity(String),
    #[error("invalid proof: {0}")]
    InvalidProof(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot translate rule instance: {0}")]
pub struct TranslationFailure(pub String);

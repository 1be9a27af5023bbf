//! Two calculi for syllogistic reasoning and the bridge between them.
//!
//! * [`diagram`]: linear diagrams of term-variables, arrows and bullets.
//! * [`syll`]: the diagrammatic inference systems and their proof search.
//! * [`rll`]: the intuitionistic multiplicative sequent calculus with a
//!   distinguished `bot` atom.
//! * [`syllogistics`]: categorical propositions, their encodings in both
//!   calculi, the validity tables and the exhaustive candidate sweeps.
//! * [`nets`]: classical multiplicative logic, the polarised translation,
//!   proof nets and the crossing test on axiom links.

pub mod diagram;
pub mod error;
mod lexer;
pub mod nets;
pub mod rll;
pub mod syll;
pub mod syllogistics;

pub use error::{NetError, ParseError, RuleError, TranslationFailure};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    pub mod chapter1 {}
    #[doc = include_str!("../../../book/src/syll.md")]
    pub mod chapter2 {}
    #[doc = include_str!("../../../book/src/rll.md")]
    pub mod chapter3 {}
    #[doc = include_str!("../../../book/src/syllogistics.md")]
    pub mod chapter4 {}
    #[doc = include_str!("../../../book/src/nets.md")]
    pub mod chapter5 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod chapter6 {}
    #[doc = include_str!("../../../book/src/findings.md")]
    pub mod chapter7 {}
}

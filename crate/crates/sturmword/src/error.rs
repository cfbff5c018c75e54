use thiserror::Error;

use crate::sturmian::DirectiveViolation;

/// Errors shared by the word, stream, morphism, and directive operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word literal contained a character other than 'a' or 'b'.
    #[error("invalid character at position {0}: expected 'a' or 'b'")]
    InvalidCharacter(usize),
    /// Pattern matching requires a nonempty pattern.
    #[error("pattern must be nonempty")]
    EmptyPattern,
    /// Covering operations require nonempty words.
    #[error("covering requires nonempty words")]
    EmptyInput,
    /// A binary morphism must map both letters to nonempty words.
    #[error("morphism images must be nonempty")]
    ErasingMorphism,
    /// A fixed-point stream needs `f(seed)` to start with the seed and have
    /// length at least 2, so that iteration strictly grows.
    #[error("morphism is not prolongable on the requested seed")]
    NotProlongable,
    /// A periodic stream needs a nonempty cycle.
    #[error("periodic stream requires a nonempty cycle")]
    EmptyCycle,
    /// Directive expansion stopped before the stable prefix reached the
    /// requested length.
    #[error("stable prefix did not reach the requested length within {0} block pairs")]
    GenerationStalled(usize),
    /// The rewriting closure grew past the configured cap.
    #[error("relation closure exceeded the cap of {0} words")]
    ClosureCapExceeded(usize),
    /// Shape analysis needs at least two occurrences of 'b'.
    #[error("shape analysis requires at least two 'b' letters")]
    TooFewBs,
    /// A directive sequence violated a representation constraint.
    #[error("invalid directive sequence: {0}")]
    InvalidDirective(DirectiveViolation),
    /// A generator word contained an unknown token.
    #[error("unknown generator token {token:?} at token position {position}")]
    InvalidGeneratorToken { token: String, position: usize },
    /// Text that should describe a directive sequence did not parse.
    #[error("directive syntax error: {0}")]
    DirectiveSyntax(String),
}

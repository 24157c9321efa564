use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// An enumeration would exceed its size guard.
    #[error("enumeration refused: {what} is {value}, guard is {guard}")]
    Guard { what: &'static str, value: usize, guard: usize },

    #[error("involution is not dominant (contains 132)")]
    NotDominant,

    #[error("partition {0} is not strictly contained in the staircase of size {1}")]
    Containment(String, usize),

    /// A symmetric polynomial is not in the span of the requested basis.
    #[error("not in span: {0}")]
    NotInSpan(String),

    /// A search bounded by a budget ran out before reaching a verdict.
    #[error("search budget of {0} exhausted")]
    Budget(usize),

    /// A checked identity failed; carries a witness.
    #[error("falsified: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;

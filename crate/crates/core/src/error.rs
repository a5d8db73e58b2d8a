use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid letter {letter} for family {family} at rank {rank}")]
    InvalidLetter { family: char, rank: usize, letter: i32 },
    #[error("invalid color {color} for family {family} at rank {rank}")]
    InvalidColor { family: char, rank: usize, color: usize },
    #[error("family or rank mismatch: {0}")]
    Mismatch(String),
    #[error("{what} has size {size}, above the cap {cap}")]
    TooLarge { what: &'static str, size: u128, cap: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent transport: f_{color} undefined at step {step}")]
    InconsistentTransport { color: usize, step: usize },
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("property violated: {0}")]
    PropertyViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

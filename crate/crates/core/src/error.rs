use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("expected a binary alphabet {{0,1}}, got {0}")]
    NotBinary(String),
    #[error("empty factor")]
    EmptyFactor,
    #[error("morphism is not prolongable on {0:?}")]
    NotProlongable(char),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("malformed Zeckendorf representation: {0}")]
    MalformedZeckendorf(String),
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
}

impl Error {
    pub(crate) fn out_of_range(msg: impl Into<String>) -> Self {
        Error::OutOfRange(msg.into())
    }
}

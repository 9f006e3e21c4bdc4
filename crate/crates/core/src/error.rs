use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("truncation level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("letter {letter} outside alphabet 1..={dim}")]
    LetterOutOfRange { letter: u16, dim: usize },

    #[error("word of length {len} exceeds truncation level {level}")]
    WordTooLong { len: usize, level: usize },

    #[error("exponential requires a zero constant term")]
    NonZeroConstant,

    #[error("logarithm and inverse require constant term 1")]
    ConstantNotOne,

    #[error("not a Lie element: Dynkin test fails at level {level}")]
    NotLie { level: usize },

    #[error("expected at least one vector")]
    EmptyInput,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

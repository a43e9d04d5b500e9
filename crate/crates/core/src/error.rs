use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different variable contexts")]
    ContextMismatch,
    #[error("division is not exact")]
    NotDivisible,
    #[error("substitution makes a denominator vanish")]
    DenominatorVanishes,
    #[error("division by zero")]
    ZeroDenominator,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("size {n} is outside the supported range 1..={max}")]
    SizeOutOfRange { n: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("conjugated matrix is not strictly upper-triangular")]
    NotUpperTriangular,
    #[error("rank {m} is too large for n = {n}")]
    RankTooLarge { n: usize, m: usize },
    #[error("involution is not supported in the upper-right block: {0}")]
    NotBlockSupported(String),
    #[error("word length {word} + {base} does not match orbit dimension {dim}")]
    DimensionMismatch { word: usize, base: usize, dim: usize },
    #[error("the middle reflection s_{0} is not allowed in block mode")]
    MiddleReflectionInBlockMode(usize),
    #[error("word does not carry the minimal orbit onto the target: {0}")]
    WordMismatch(String),
    #[error("wrong class kind: {0}")]
    WrongKind(String),
    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid theory settings: {0}")]
    InvalidTheory(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SumsetError {
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("coordinate overflow in integer lattice")]
    Overflow,
    #[error("operation unsupported: {0}")]
    Unsupported(String),
    #[error("set is empty")]
    EmptySet,
    #[error("size mismatch: |A| = {a}, |B| = {b}")]
    SizeMismatch { a: usize, b: usize },
    #[error("constant c = {0} must lie in (0, 1/14]")]
    BadConstant(String),
    #[error("no medium-sized baseline pair found within the search budget")]
    NoBaseline,
    #[error("no subset found within the search cap")]
    NotFound,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("C is not a subset of A+B")]
    NotSubset,
    #[error("zero walks between some pair; certificate is vacuous")]
    ZeroWalks,
    #[error("dimension {0} exceeds the supported maximum of 3")]
    DimensionTooLarge(usize),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("no prime found in ({lo}, {hi}]")]
    NoPrimeFound { lo: u64, hi: u64 },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, SumsetError>;

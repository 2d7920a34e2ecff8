use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group of order {order} exceeds the brute-force bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("{a} is not a unit modulo {n}")]
    NotCoprime { a: u64, n: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not covered by the known family rules: {0}")]
    NotCovered(String),
    #[error("construction self-check failed: {0}")]
    Construction(String),
    #[error("closed form and census disagree: {0}")]
    Mismatch(String),
    #[error("amalgamated subgroup is not normal in both factors")]
    NotNormal,
    #[error("element {elem} does not belong to factor {side}")]
    LetterOutOfRange { side: usize, elem: usize },
    #[error("missing input: {0}")]
    MissingInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

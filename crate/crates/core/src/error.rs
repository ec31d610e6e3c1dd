use alloc::string::String;

/// Errors raised by the computations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for series {series}")]
    InvalidRank { series: char, rank: usize },
    #[error("unknown Lie series `{0}`")]
    UnknownSeries(char),
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not regular")]
    NotRegular(String),
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("q = {0} lies outside the open interval (0,1)")]
    QOutOfRange(String),
    #[error("truncation size {got} is below the minimum {min}")]
    TruncationTooSmall { got: usize, min: usize },
    #[error("torus coordinate {index} does not have unit modulus")]
    NonUnitModulus { index: usize },
    #[error("weight table was built for highest weight {table}, not {requested}")]
    TableMismatch { table: String, requested: String },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("logarithm base must be positive, got {0}")]
    NonPositiveBase(String),
    #[error("invalid action datum: {0}")]
    InvalidAction(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

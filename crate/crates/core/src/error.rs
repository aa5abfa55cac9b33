use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot compose: left map has domain <{left}>, right map has codomain <{right}>")]
    MapMismatch { left: usize, right: usize },
    #[error("invalid pointed map: {0}")]
    InvalidMap(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("{what} size {n} exceeds the ceiling {max}")]
    CeilingExceeded { what: &'static str, n: usize, max: usize },
    #[error("enumeration budget of {0} search nodes exceeded")]
    BudgetExceeded(u64),
    #[error("invalid plasma: {0}")]
    InvalidPlasma(String),
    #[error("not a plasma morphism: {0}")]
    NotAMorphism(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("Dynkin system is not closed under intersections")]
    NotIntersectionClosed,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not a prime up to 97")]
    NotPrime(u64),
    #[error("window level mismatch: {0}")]
    LevelMismatch(String),
    #[error("index {index} out of range for {what} (limit {limit})")]
    IndexOutOfRange { what: &'static str, index: usize, limit: usize },
    #[error("unrecognized 2-simplex with edges {0:?}")]
    UnrecognizedSimplex((usize, usize, usize)),
    #[error("malformed simplex tuple: {0}")]
    MalformedTuple(String),
    #[error("unsupported format {0:?}")]
    UnsupportedFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

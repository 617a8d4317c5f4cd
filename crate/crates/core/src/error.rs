use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("triangle {0:?} repeats a vertex")]
    DegenerateTriangle([usize; 3]),
    #[error("duplicate triangle {0:?}")]
    DuplicateTriangle([usize; 3]),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("inconsistent rotation system: {0}")]
    Rotation(String),
    #[error("invalid colored map: {0}")]
    InvalidMap(String),
    #[error("generator gave up after {0} attempts")]
    RetryCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<i64>),
    #[error("invalid setting: {0}")]
    InvalidSetting(String),
    #[error("sigma is not admissible: {0}")]
    Inadmissible(String),
    #[error("k = {k} is out of range: {reason}")]
    KOutOfRange { k: u32, reason: String },
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("invalid plane partition: {0}")]
    InvalidPlanePartition(String),
    #[error("not a facet: {0}")]
    NotAFacet(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("data file {file}, line {line}: {msg}")]
    Data { file: String, line: usize, msg: String },
    #[error("instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

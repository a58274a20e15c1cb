use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("resource guard: {what} = {value} exceeds the configured maximum {max}")]
    ResourceGuard {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid Hessenberg function {values:?}: {reason}")]
    InvalidHessenberg { values: Vec<usize>, reason: String },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("non-integral coefficient for {partition} in the {basis}-expansion")]
    Integrality { basis: char, partition: String },

    #[error("series is not invertible: constant term is not 1")]
    NotInvertible,

    #[error("k = {k} is out of range for n = {n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("malformed increasing tree: {0}")]
    MalformedTree(String),

    #[error("Delta is not well defined at w = {word:?}: {reason}")]
    DeltaNotWellDefined { word: Vec<usize>, reason: String },

    #[error("edge {u}-{v} is not incident to the root {root}")]
    EdgeNotIncident { u: usize, v: usize, root: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

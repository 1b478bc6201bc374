use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("row count {rows} is smaller than the {parts} nonzero parts of the partition")]
    TooFewRows { rows: usize, parts: usize },

    #[error("beta-set entries must be strictly decreasing: {0:?}")]
    InvalidBetaSet(Vec<usize>),

    #[error("size mismatch: {what} has size {left}, expected {right}")]
    SizeMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("rank {rank} exceeds the cap {cap} for {what}")]
    RankCap {
        what: &'static str,
        rank: usize,
        cap: usize,
    },

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("Harish-Chandra induction only supports one-row GL labels, got {0}")]
    UnsupportedGlPart(Partition),

    #[error("rank equation violated: {0}")]
    RankEquation(String),

    #[error("multiset mixes labels of different series or ranks: {0}")]
    MixedMultiset(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::partitions::Bipartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part index must be at least 1, got {0}")]
    InvalidIndex(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse partition {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("unsupported charge ({s1}, {s2}): only s1 <= s2 is implemented")]
    UnsupportedCharge { s1: i64, s2: i64 },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("wall crossing produced a malformed tableau: {0}")]
    MalformedResult(String),

    #[error("displacements are undefined at step {step}: statement E fails")]
    UndefinedDisplacement { step: usize },

    #[error("filler of length {len} exceeds top row of length {top_len}")]
    FillerOutOfRange { len: usize, top_len: usize },

    #[error("step {step} is out of range for a chain of {len} steps")]
    StepOutOfRange { step: usize, len: usize },

    #[error("e must be a positive integer, got {0}")]
    InvalidE(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bipartition {0} is not symmetric")]
    NotSymmetric(Bipartition),

    #[error("type D certification needs a nonempty bipartition")]
    EmptyBipartition,

    #[error("theorem contradiction for {subject}: {detail}")]
    TheoremContradiction { subject: Bipartition, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

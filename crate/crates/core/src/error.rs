use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },

    #[error("edge {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("permutation length {got} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{what} budget of {limit} exceeded (lower bound {lower_bound})")]
    Budget {
        what: &'static str,
        limit: u64,
        lower_bound: u64,
    },

    #[error("edge action not faithful; D' undefined")]
    NotFaithful,

    #[error("no distinguishing labeling with at most {max_labels} labels")]
    Exhausted { max_labels: u32 },

    #[error("bound witness not found within {cap} labels")]
    BoundWitnessNotFound { cap: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;

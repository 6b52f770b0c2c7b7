use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("2-cycle between {0} and {1}")]
    TwoCycle(usize, usize),

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),

    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {0} is not in the domain of the neighborhood map")]
    NotInDomain(usize),

    #[error("cannot swap at position {position}: {reason}")]
    SwapPrecondition {
        position: usize,
        reason: &'static str,
    },

    #[error("block {index} has no zeros")]
    EmptyZeroRun { index: usize },

    #[error("weights {0} and {1} have the same magnitude")]
    DuplicateMagnitude(i64, i64),

    #[error("threshold must be positive (got {0})")]
    NonPositiveThreshold(i64),

    #[error("sequence contains a minus; expected a binary (+/0) sequence")]
    ContainsMinus,

    #[error("brute force is limited to n <= {max} (got {n})")]
    TooLarge { n: usize, max: usize },

    #[error("invalid displit partition: {0}")]
    InvalidPartition(String),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("parse error at offset {offset}: {message}")]
    SequenceSyntax { offset: usize, message: String },

    #[error("parse error at line {line}: {message}")]
    EdgeListSyntax { line: usize, message: String },
}

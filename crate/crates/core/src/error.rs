use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Weight indices carried by errors are 1-based, matching category numbering.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rows of a matrix must share one dimension")]
    RaggedRows,
    #[error("zero vector has no ray representative")]
    ZeroVector,
    #[error("at least one category is required")]
    NoCategories,
    #[error("weight at index {0} is negative")]
    NegativeWeight(usize),
    #[error("omega_{0} * gamma_{0} exceeds 1")]
    ProductExceedsOne(usize),
    #[error("weights are not pointed; degenerate indices {0:?} must be merged first")]
    NotPointed(Vec<usize>),
    #[error("facet count formula needs every omega_i > 0 (omega_{0} = 0)")]
    FormulaInapplicable(usize),
    #[error("special case {kind} does not apply: {reason}")]
    KindMismatch { kind: &'static str, reason: String },
    #[error("weights have no degenerate index to merge")]
    NothingToMerge,
    #[error("matrix has rank {rank}, full rank {expected} required")]
    RankDeficient { rank: usize, expected: usize },
    #[error("point set is empty")]
    EmptyInput,
    #[error("edge {edge} does not start where edge {prev} ends")]
    DisconnectedPath { prev: usize, edge: usize },
    #[error("edge index {0} out of range")]
    UnknownEdge(usize),
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("duplicate node id {0:?}")]
    DuplicateNode(String),
    #[error("edge {edge}: category {category} outside 1..={k}")]
    BadCategory { edge: usize, category: usize, k: usize },
    #[error("edge {0}: length must be positive")]
    NonPositiveLength(usize),
    #[error("more than {0} paths")]
    PathCapExceeded(usize),
    #[error("rays do not span a pointed full-dimensional cone: {0}")]
    NonPointedInput(String),
    #[error("graph format: {0}")]
    Format(String),
}

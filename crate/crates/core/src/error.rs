use thiserror::Error;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {index} out of range for quiver of rank {rank}")]
    VertexOutOfRange { index: usize, rank: usize },

    #[error("exchange matrix of rank {rank} needs {expected} entries, got {found}")]
    MatrixShape {
        rank: usize,
        expected: usize,
        found: usize,
    },

    #[error("exchange matrix is not skew-symmetric at ({i}, {j})")]
    NotSkewSymmetric { i: usize, j: usize },

    #[error("arrow {from} -> {to} is a loop")]
    Loop { from: usize, to: usize },

    #[error("arrows between {a} and {b} point both ways (2-cycle)")]
    TwoCycle { a: usize, b: usize },

    #[error("quiver must have at least {min} vertices, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("seed quiver is disconnected")]
    Disconnected,

    #[error("exchange matrix entry overflowed during mutation")]
    EntryOverflow,

    #[error("mutation class exceeded the cap of {cap} classes")]
    ClassCapExceeded { cap: usize },

    #[error("punctured polygon needs n >= {min}, got {n}")]
    PolygonTooSmall { n: usize, min: usize },

    #[error("diagonal {diagonal} is not valid in the punctured {n}-gon")]
    InvalidDiagonal { diagonal: String, n: usize },

    #[error("not a triangulation: {0}")]
    NotATriangulation(String),

    #[error("diagonal {0} is not in the triangulation")]
    DiagonalNotFound(String),

    #[error("flip found {candidates} completing diagonals, expected exactly 2")]
    FlipDefect { candidates: usize },

    #[error("diagonal {0} is not close to the border")]
    NotCloseToBorder(String),

    #[error("expected {expected} leaves, tree has {found}")]
    LeafCountMismatch { expected: usize, found: usize },

    #[error("tree mutation not applicable: {0}")]
    TreeMutation(String),

    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

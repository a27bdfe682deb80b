use thiserror::Error;

/// Errors reported by the lattice, decomposition and chamber operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix rows do not form a square matrix")]
    NotSquare,

    #[error("matrix is not symmetric (entries ({i},{j}) and ({j},{i}) differ)")]
    NotSymmetric { i: usize, j: usize },

    #[error("prime index {0} is out of range")]
    PrimeIndexOutOfRange(usize),

    #[error("singular linear system")]
    SingularSystem,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("fujiki constant must be positive")]
    NonPositiveFujiki,

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("half-dimension must be at least 1")]
    ZeroHalfDim,

    #[error("effective expression has a negative coefficient at prime {0}")]
    NegativeCoefficient(usize),

    #[error("indices {0:?} do not form a block (restricted Gram matrix is not negative definite)")]
    NotABlock(Vec<usize>),

    #[error("prime {0} is not exceptional")]
    NotExceptional(usize),

    #[error("class is not big")]
    NotBig,

    #[error("class is not decomposable: {reason}")]
    NotDecomposable { reason: String },

    #[error("hodge-type inequality requires q(D, D) > 0")]
    NonPositiveSquare,

    #[error("linear program is unbounded")]
    Unbounded,
}

pub type Result<T> = std::result::Result<T, Error>;

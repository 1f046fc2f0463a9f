use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("multiset count C(n+k-1, k) overflows for n = {n}, k = {k}")]
    CountOverflow { n: usize, k: usize },

    #[error("multinomial coefficient overflows for multiplicities {counts:?}")]
    MultinomialOverflow { counts: Vec<usize> },

    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),

    #[error("rank {rank} out of range for {count} multisets")]
    RankOutOfRange { rank: usize, count: usize },

    #[error("power k must be at least 1")]
    ZeroPower,

    #[error("invalid graph parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("weight on ({u}, {v}) is not finite")]
    NonFiniteWeight { u: usize, v: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("k = {k} exceeds the permanent kernel cap of {cap}; use the orbit kernel instead")]
    PermanentCap { k: usize, cap: usize },

    #[error("power dimension N = {dim} exceeds the size budget of {max} (n = {n}, k = {k})")]
    SizeBudget {
        n: usize,
        k: usize,
        dim: usize,
        max: usize,
    },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error(
        "Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

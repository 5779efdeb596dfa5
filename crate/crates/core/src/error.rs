use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be a positive integer")]
    ZeroModulus,

    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// The coefficient at `index` differs from the one at `gcd(n, index)`.
    #[error("polynomial is not integer-valued at the {n}-th roots of unity (coefficient {index} differs from coefficient gcd({n},{index}))")]
    NotInModule { n: usize, index: usize },

    #[error("invalid orbit profile: {0}")]
    InvalidProfile(String),

    #[error("element order {order} does not divide {n}")]
    OrderNotDividingN { order: usize, n: usize },

    #[error("invalid universal vector: {0}")]
    InvalidUniversalVector(String),

    #[error("matrix is not a CSP matrix")]
    NotCsp,

    #[error("matrix has a negative entry at row {row}, column {col}")]
    NegativeEntry { row: usize, col: usize },

    #[error("matrix must have integer entries")]
    NotInteger,

    #[error("matrices have different row or column sums")]
    MismatchedMargins,

    #[error("matrix sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("a swap needs distinct rows and distinct columns")]
    DegenerateSwap,

    #[error("cell ({row}, {col}) is outside an {n}x{n} matrix (columns are 1-based)")]
    CellOutOfRange { row: usize, col: usize, n: usize },

    #[error("rows {0} and {1} have neither equal gcd with n nor equal row sums")]
    GcdMismatch(usize, usize),

    #[error("the zero matrix spans no ray")]
    ZeroMatrix,

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{beads} beads cannot encode a partition with {parts} parts")]
    TooFewBeads { beads: usize, parts: usize },

    #[error("runner count must be positive")]
    ZeroRunners,

    #[error("partition of size {partition} cannot be paired with a cycle type of size {cycle_type}")]
    WeightMismatch { partition: usize, cycle_type: usize },

    #[error("{d} does not divide {m}")]
    DNotDividingM { d: usize, m: usize },

    #[error("invalid rational {0:?}")]
    InvalidRational(String),
}

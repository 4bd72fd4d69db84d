use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    OrderExceedsCap { order: BigUint, cap: u64 },

    #[error("coset index {index} exceeds the vertex cap {cap}")]
    IndexExceedsCap { index: BigUint, cap: u64 },

    #[error("graph on {n} vertices exceeds the cap {cap}")]
    GraphTooLarge { n: usize, cap: usize },

    #[error("{0} does not divide {1}")]
    NotDivisible(BigUint, BigUint),

    #[error("no construction recipe for subgroup type {0}")]
    NoRecipe(String),

    #[error("unknown subgroup type {0}")]
    UnknownType(String),

    #[error("no catalog type matches the fingerprint")]
    Unidentified,

    #[error("fingerprint matches several catalog types: {0:?}")]
    Ambiguous(Vec<String>),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("permutation is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid triple ({0}, {1}, {2}): every entry must be a positive integer")]
    InvalidTriple(i64, i64, i64),

    #[error("image sequence is not a bijection on 0..{0}")]
    NotAPermutation(usize),

    #[error("permutation domain mismatch: {left} vs {right} points")]
    DomainMismatch { left: usize, right: usize },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("group closure exceeded the limit of {limit} elements")]
    SizeExceeded { limit: usize },

    #[error("group is not abelian")]
    NotAbelian,

    #[error("abelian group of order {order} and exponent {exponent} is not of rank at most 2")]
    RankExceeded { order: usize, exponent: u64 },

    #[error("row reduction mismatch at entry ({row}, {col}): got {got}, expected {expected} mod {modulus}")]
    RowReduction {
        row: usize,
        col: usize,
        got: i128,
        expected: i128,
        modulus: u64,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

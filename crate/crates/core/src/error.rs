use thiserror::Error;

use crate::gauss::Role;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {value} out of range 1..={n}")]
    ElementOutOfRange { value: usize, n: usize },

    #[error("{param} not invertible mod n")]
    NotInvertible { param: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed token {token:?} at position {position}")]
    MalformedToken { token: String, position: usize },

    #[error("crossing {crossing} appears {count} times (expected 2)")]
    CrossingMultiplicity { crossing: u32, count: usize },

    #[error("crossing {crossing} has no {missing} occurrence")]
    MissingRole { crossing: u32, missing: Role },

    #[error("crossing {crossing} has mismatched signs")]
    SignMismatch { crossing: u32 },

    #[error("invalid move site: {0}")]
    InvalidSite(String),

    #[error("generator {0} is unassigned")]
    UnassignedGenerator(u32),

    #[error("coloring violates the relation at crossing {crossing}")]
    InvalidColoring { crossing: u32 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cochain fails the Yang-Baxter cocycle condition")]
    NotACocycle,

    #[error("search too large: {candidates} candidate assignments (limit {limit})")]
    SearchTooLarge { candidates: u128, limit: u128 },

    #[error("order {n} exceeds the enumeration limit {limit}")]
    OrderTooLarge { n: usize, limit: usize },

    #[error("cell is not blank")]
    CellNotBlank,

    #[error("not a biquandle: {0}")]
    InvalidBiquandle(String),
}

use alloc::string::String;
use alloc::vec::Vec;

use crate::MonomialPrime;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("variable index {index} is out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("empty variable set")]
    EmptySupport,

    #[error("operation is undefined on the unit ideal")]
    UnitIdeal,

    #[error("resource limit: {what} needs {size}, bound is {bound}")]
    ResourceLimit {
        what: &'static str,
        size: u128,
        bound: u128,
    },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("vectors {u:?} and {v:?} have different modulus")]
    ModulusMismatch { u: Vec<u32>, v: Vec<u32> },

    /// `u(i) > v(i)` but no `j` with `u(j) < v(j)` gives a base `u - e_i + e_j`.
    /// `i` is 0-based.
    #[error("exchange fails for u = {u:?}, v = {v:?} at coordinate {i}")]
    ExchangeFailure { u: Vec<u32>, v: Vec<u32>, i: usize },

    #[error("ideal is not polymatroidal")]
    NotPolymatroidal,

    #[error("caps sum to {sum} which is below the rank {d}")]
    EmptyPolymatroid { sum: u64, d: u64 },

    #[error("caps are not sorted in non-increasing order")]
    UnsortedCaps,

    #[error("{0} is not in the stable set")]
    NotStablePrime(MonomialPrime),

    #[error("{a} and {b} intersect but their union is missing from the family")]
    ConditionViolation { a: MonomialPrime, b: MonomialPrime },

    #[error("ideal is not transversal: {0}")]
    ReconstructionMismatch(&'static str),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }

    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}

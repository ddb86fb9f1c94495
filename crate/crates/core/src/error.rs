use alloc::string::String;

use thiserror::Error;

use crate::field::FieldSpec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed PD code: {0}")]
    MalformedPd(String),

    #[error("arc multiplicity: arc {arc} occurs {count} time(s), expected exactly 2")]
    ArcMultiplicity { arc: u32, count: usize },

    #[error("no consistent orientation: {0}")]
    Orientation(String),

    #[error("basepoint arc {0} does not occur in the diagram")]
    Basepoint(u32),

    #[error("state covers {got} crossings but the diagram has {expected}")]
    StateMismatch { expected: usize, got: usize },

    #[error("non-planar rotation system: V - E + F = {euler}, expected {expected}")]
    NonPlanar { euler: i64, expected: i64 },

    #[error("face index {0} out of range")]
    FaceIndex(usize),

    #[error("characteristic 2 is not supported: invariant computations need a field with 2 != 0")]
    CharacteristicTwo,

    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("resource limit: {size} exceeds the cap of {cap}")]
    ResourceLimit { size: usize, cap: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("not a knot module: expected exactly one tower, found {0}")]
    NotKnotModule(usize),

    #[error("invalid site: {0}")]
    InvalidSite(String),

    #[error("not a chain map: {0}")]
    NotChainMap(String),

    #[error("mismatch: {0}")]
    Mismatch(String),
}

impl Error {
    /// True for failures that indicate a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvalidComplex(_) | Error::NotChainMap(_))
    }
}

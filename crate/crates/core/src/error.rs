use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("Galois index must be nonzero")]
    ZeroGaloisIndex,
    #[error("reconstructed value is not rational")]
    NonRationalResult,
    #[error("direction must be a nonzero vector")]
    ZeroDirection,
    #[error("set size {size} is not supported for graph detection in F_{p}^{d}")]
    UnsupportedSize { size: usize, p: u64, d: usize },
    #[error("dimension {d} is not supported by this operation")]
    UnsupportedDim { d: usize },
    #[error("the pair is not a tiling at the requested level")]
    NotATiling,
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("interpolation data missing value at {missing}")]
    IncompleteDomain { missing: u64 },
    #[error("coordinate index {index} out of range for dimension {dim}")]
    BadIndex { index: usize, dim: usize },
    #[error("base length must be nonzero")]
    ZeroBase,
    #[error("center distance is zero; use direct intersection")]
    ZeroDistance,
    #[error("radius must be nonzero")]
    ZeroRadius,
    #[error("operation requires odd characteristic, got p = {0}")]
    EvenCharacteristic(u64),
    #[error("p = {p} is not 1 mod 4")]
    BadResidue { p: u64 },
    #[error("search exceeded node budget of {budget}")]
    BudgetExceeded { budget: u64 },
    #[error("point set must be nonempty")]
    EmptySet,
    #[error("manifest error: {0}")]
    Manifest(String),
}

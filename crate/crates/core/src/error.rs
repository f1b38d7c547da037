use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no factorization")]
    ZeroInput,
    #[error("|{value}| exceeds the factorization bound 2^{bound_bits}")]
    FactorBoundExceeded { value: i128, bound_bits: u32 },
    #[error("{0} is not an odd prime")]
    InvalidExponent(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large for residue-field arithmetic")]
    PrimeTooLarge(u128),
    #[error("p = {p} is ramified in the {l}-th cyclotomic field")]
    RamifiedPrime { p: u64, l: u64 },
    #[error("norm {p}^{f} does not fit in 128 bits")]
    NormOverflow { p: u64, f: u32 },
    #[error("element lies in the prime ideal above {p}; symbol undefined")]
    SymbolUndefined { p: u64 },
    #[error("argument is not coprime to the prime {prime}")]
    NotCoprime { prime: u128 },
    #[error("element is not primary")]
    NotPrimary,
    #[error("modulus of norm {norm} does not generate a prime ideal")]
    UnsupportedModulus { norm: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("target assignment violates a multiplicative relation")]
    InconsistentAssignment,
    #[error("brute-force enumeration of {l}^{m} tuples exceeds the scale guard")]
    ScaleGuard { l: u64, m: usize },
    #[error("{0} is an exact l-th power")]
    LthPower(String),
    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

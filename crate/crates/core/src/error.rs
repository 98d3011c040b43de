use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the zero element has no logarithm or character value")]
    ZeroElement,
    #[error("character index {0} is not regular")]
    NotRegular(u64),
    #[error("enumeration needs {needed} point-operations, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("matrix is not invertible at the working level")]
    NotInvertible,
    #[error("matrix is central at the working level")]
    Central,
    #[error("matrix is not in the Iwahori subgroup")]
    NotIwahori,
    #[error("scalar decomposition is not maximal: reduced matrix has scalar diagonal")]
    NonMaximalDecomposition,
    #[error("matrix precision {have} is below the working level {need}")]
    InsufficientPrecision { have: usize, need: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(&'static str),
    #[error("case not covered by the counting formulas")]
    NotCovered,
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("gcd(m, n) must be 1 in the ramified case (m = {m}, n = {n})")]
    RamifiedGcd { m: u32, n: u32 },
    #[error("weight is not dominant")]
    NotDominant,
    #[error("eigenvalues are not pairwise distinct")]
    RepeatedEigenvalues,
    #[error("eigenvalue list is central (all entries equal)")]
    CentralSpectrum,
    #[error("mass list is empty")]
    EmptyMasses,
    #[error("mass {mass} is not divisible by mu_E = {mu}")]
    MassNotDivisible { mass: u64, mu: u64 },
    #[error("polynomial degree {degree} is not below the Weyl degree {weyl}")]
    DegreeTooHigh { degree: u32, weyl: u32 },
    #[error("local dimension {dim} at q = {q} is below the minimal cuspidal dimension {min}")]
    LocalDimensionTooSmall { q: u64, dim: u128, min: u128 },
    #[error("W is only formed for even m")]
    OddLevel,
    #[error("arithmetic overflow")]
    Overflow,
}

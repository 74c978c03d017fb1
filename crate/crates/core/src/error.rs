use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0:?} is reducible over F_{1}")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("no built-in modulus for p={p}, m={m}; supply one with --modulus or field.modulus")]
    NoDefaultModulus { p: u32, m: u32 },
    #[error("field of order {0} is too large (at most 256 elements are supported)")]
    FieldTooLarge(u64),
    #[error("element does not belong to this field")]
    ForeignElement,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("{0} is not a unit")]
    NonUnit(String),
    #[error("beta must be a nonzero field element")]
    ZeroBeta,
    #[error("divisor has a non-unit leading coefficient")]
    NonUnitLeading,
    #[error("polynomial has degree {deg}, which exceeds {bound}")]
    DegreeTooLarge { deg: i64, bound: i64 },
    #[error("division leaves a nonzero remainder")]
    NotRightDivisor,
    #[error("generator must be monic")]
    NotMonic,
    #[error("lambda = {0} is not a unit")]
    LambdaNotUnit(String),
    #[error("lambda = {0} is not fixed by the automorphism, so <x^n - lambda> is not two-sided")]
    LambdaNotFixed(String),
    #[error(
        "n = {n} must be a multiple of ord(Theta) = {order}, otherwise x^n - lambda is not central"
    )]
    LengthNotMultiple { n: usize, order: usize },
    #[error("code length must be positive")]
    ZeroLength,
    #[error("Hermitian duality needs ord(Theta) = 2, got {0}")]
    HermitianOrder(usize),
    #[error("lambda^2 must equal 1")]
    LambdaSquare,
    #[error("three-type dual formulas need lambda = 1 or lambda = -1")]
    LambdaNotSign,
    #[error("search space of {size} exceeds the brute-force bound {cap}")]
    BruteForceBound { size: u128, cap: u128 },
    #[error("word set is not a left ideal: {0}")]
    NotLeftIdeal(&'static str),
    #[error("inconsistent LI-3 data: g1 does not right-divide the u-shifted cofactor times f1")]
    InconsistentLi3,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed parameter pair (r={r}, s={s}): need 0 < s < r")]
    MalformedParams { r: BigInt, s: BigInt },

    #[error("({a}, {b}, {c}) is not a Pythagorean triple with positive entries")]
    NotPythagorean { a: BigInt, b: BigInt, c: BigInt },

    #[error("({a}, {b}, {c}) is not primitive")]
    NotPrimitive { a: BigInt, b: BigInt, c: BigInt },

    #[error("gap g={g} admits no primitive triple: {reason}")]
    InadmissibleGap { g: BigInt, reason: String },

    #[error("leg gap f={f} admits no primitive triple: {reason}")]
    InadmissibleLegGap { f: u64, reason: String },

    #[error("legs differ by {actual}, expected f={expected}")]
    LegGapMismatch { expected: u64, actual: BigInt },

    #[error("division by zero in Z[sqrt 2]")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{0} is not a prime")]
    NotPrime(BigInt),

    #[error("{0} does not split in Z[sqrt 2] (need p ≡ ±1 mod 8)")]
    NotSplit(u64),

    #[error("{value} is out of the supported range ({limit})")]
    OutOfRange { value: BigInt, limit: &'static str },

    #[error("invalid exponent range {lo}..{hi}")]
    EmptyRange { lo: i64, hi: i64 },

    #[error("sieve bound {requested} exceeds the configured budget {budget}")]
    SieveBudget { requested: u64, budget: u64 },

    #[error("{n} exceeds the sieve bound {bound}")]
    BeyondSieve { n: u64, bound: u64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

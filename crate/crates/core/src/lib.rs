//! Generation, classification and verification of primitive Pythagorean
//! triples `(a, b, b + g)` and `(a, a + f, c)`, with exact big-integer
//! arithmetic throughout.
//!
//! * [`triple`]: triples, the `(r, s)` parametrization and a brute-force enumerator.
//! * [`g_family`]: admissible hypotenuse gaps `g` and their infinite families.
//! * [`zsqrt2`]: the Euclidean ring `Z[√2]`.
//! * [`pell`]: `x² − 2y² = −1` and multiplication by powers of `3 + 2√2`.
//! * [`f_family`]: admissible leg differences `f` and triple generation through `Z[√2]`.
//! * [`density`]: totient sieves and the parity-class density counts.
//! * [`verify`]: oracle-equivalence suites.

pub mod density;
pub mod error;
pub mod f_family;
pub mod g_family;
pub mod pell;
pub mod primes;
pub mod triple;
pub mod verify;
pub mod zsqrt2;

pub use density::{DensityFamily, DensityRow, TotientSieve};
pub use error::{Error, Result};
pub use f_family::{CfElement, FSpec, FTriple};
pub use g_family::{GClass, GFamilyItem, GKind};
pub use pell::{PellSolution, RecurrencePair};
pub use triple::{ParamPair, Triple, TripleClass};
pub use zsqrt2::QuadInt;

pub use num_bigint::BigInt;

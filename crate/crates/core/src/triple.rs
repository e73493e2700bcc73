//! Pythagorean triples, the classical `(r, s)` parametrization and the
//! exhaustive primitive-triple enumerator used as a reference oracle.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// An ordered triple `(a, b, c)` of positive integers with `a² + b² = c²`.
///
/// The legs keep the order they were built with; use [`Triple::normalized`]
/// for the `(odd leg, even leg, hypotenuse)` view of a primitive triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

/// Which leg of a triple is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Leg {
    A,
    B,
}

/// Derived facts about a triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleClass {
    pub primitive: bool,
    /// `None` when both legs are even (never the case for a primitive triple).
    pub even_leg: Option<Leg>,
    /// `c` minus the larger leg.
    pub g: BigInt,
    /// `|b - a|`.
    pub f: BigInt,
}

impl Triple {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        if !a.is_positive() || !b.is_positive() || !c.is_positive() || &a * &a + &b * &b != &c * &c
        {
            return Err(Error::NotPythagorean { a, b, c });
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// The same triple with its legs exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
        }
    }

    /// Reorders the legs to `(odd, even, c)`. Leaves both-even triples as-is.
    pub fn normalized(&self) -> Self {
        if self.a.is_even() && self.b.is_odd() {
            self.swapped()
        } else {
            self.clone()
        }
    }

    /// Reorders the legs so that `a < b`.
    pub fn ascending(&self) -> Self {
        if self.a > self.b {
            self.swapped()
        } else {
            self.clone()
        }
    }

    pub fn classify(&self) -> TripleClass {
        let even_leg = match (self.a.is_even(), self.b.is_even()) {
            (true, false) => Some(Leg::A),
            (false, true) => Some(Leg::B),
            _ => None,
        };
        let larger = if self.a > self.b { &self.a } else { &self.b };
        TripleClass {
            primitive: is_primitive(self),
            even_leg,
            g: &self.c - larger,
            f: (&self.b - &self.a).abs(),
        }
    }

    pub fn to_u64s(&self) -> Option<(u64, u64, u64)> {
        Some((
            u64::try_from(&self.a).ok()?,
            u64::try_from(&self.b).ok()?,
            u64::try_from(&self.c).ok()?,
        ))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Parameters `0 < s < r` of the classical parametrization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPair {
    r: BigInt,
    s: BigInt,
}

impl ParamPair {
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self> {
        let (r, s) = (r.into(), s.into());
        if !s.is_positive() || s >= r {
            return Err(Error::MalformedParams { r, s });
        }
        Ok(Self { r, s })
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, s={})", self.r, self.s)
    }
}

/// `(r² − s², 2rs, r² + s²)`.
pub fn from_params(p: &ParamPair) -> Triple {
    let r2 = &p.r * &p.r;
    let s2 = &p.s * &p.s;
    Triple {
        a: &r2 - &s2,
        b: BigInt::from(2) * &p.r * &p.s,
        c: r2 + s2,
    }
}

/// Any common divisor of two entries divides the third, so checking the legs suffices.
pub fn is_primitive(t: &Triple) -> bool {
    t.a.gcd(&t.b).is_one()
}

/// Whether `from_params(p)` is primitive: `gcd(r, s) = 1` with `r`, `s` of opposite parity.
pub fn primitive_from_params(p: &ParamPair) -> bool {
    p.r.gcd(&p.s).is_one() && (&p.r + &p.s).is_odd()
}

/// Recovers `(r, s)` from a primitive triple in either leg order.
pub fn to_params(t: &Triple) -> Result<ParamPair> {
    if !is_primitive(t) {
        return Err(Error::NotPrimitive {
            a: t.a.clone(),
            b: t.b.clone(),
            c: t.c.clone(),
        });
    }
    let odd = if t.a.is_odd() { &t.a } else { &t.b };
    let r2: BigInt = (&t.c + odd) / 2;
    let s2: BigInt = (&t.c - odd) / 2;
    let (r, s) = (r2.sqrt(), s2.sqrt());
    if &r * &r != r2 || &s * &s != s2 {
        // unreachable for a validated primitive triple
        return Err(Error::Internal(format!(
            "{t} has no integral (r, s) preimage"
        )));
    }
    ParamPair::new(r, s)
}

/// Every primitive triple with hypotenuse at most `c_max`, each exactly once,
/// as `(odd leg, even leg, c)` sorted by `c` then `a`.
pub fn enumerate_ppts(c_max: u64) -> Vec<Triple> {
    enumerate_ppts_u64(c_max)
        .into_iter()
        .map(|(a, b, c)| Triple {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        })
        .collect()
}

/// Machine-word form of [`enumerate_ppts`] for scans over large bounds.
pub fn enumerate_ppts_u64(c_max: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    let mut r: u64 = 2;
    while r.checked_mul(r).is_some_and(|r2| r2 < c_max) {
        let r2 = r * r;
        let mut s = if r.is_multiple_of(2) { 1 } else { 2 };
        while s < r {
            let c = r2 + s * s;
            if c > c_max {
                break;
            }
            if r.gcd(&s) == 1 {
                out.push((r2 - s * s, 2 * r * s, c));
            }
            s += 2;
        }
        r += 1;
    }
    out.sort_unstable_by_key(|&(a, _, c)| (c, a));
    out
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    #[test]
    fn from_params_examples() {
        assert_eq!(from_params(&ParamPair::new(2, 1).unwrap()), t(3, 4, 5));
        assert_eq!(from_params(&ParamPair::new(4, 1).unwrap()), t(15, 8, 17));
        assert!(matches!(
            ParamPair::new(3, 3),
            Err(Error::MalformedParams { .. })
        ));
        assert!(ParamPair::new(3, 0).is_err());
        assert!(ParamPair::new(-1, -2).is_err());
    }

    #[test]
    fn constructor_rejects_non_pythagorean() {
        assert!(Triple::new(1, 2, 3).is_err());
        assert!(Triple::new(0, 5, 5).is_err());
        assert!(Triple::new(-3, 4, 5).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&t(3, 4, 5)));
        assert!(!is_primitive(&t(6, 8, 10)));
        assert!(is_primitive(&t(15, 8, 17)));
        assert!(primitive_from_params(&ParamPair::new(2, 1).unwrap()));
        assert!(!primitive_from_params(&ParamPair::new(3, 1).unwrap()));
        assert!(!primitive_from_params(&ParamPair::new(9, 6).unwrap()));
    }

    #[test]
    fn to_params_examples() {
        assert_eq!(
            to_params(&t(3, 4, 5)).unwrap(),
            ParamPair::new(2, 1).unwrap()
        );
        assert_eq!(
            to_params(&t(15, 8, 17)).unwrap(),
            ParamPair::new(4, 1).unwrap()
        );
        assert_eq!(
            to_params(&t(8, 15, 17)).unwrap(),
            ParamPair::new(4, 1).unwrap()
        );
        assert!(matches!(
            to_params(&t(6, 8, 10)),
            Err(Error::NotPrimitive { .. })
        ));
    }

    #[test]
    fn enumerate_small_bounds() {
        assert_eq!(enumerate_ppts(5), vec![t(3, 4, 5)]);
        assert_eq!(
            enumerate_ppts(17),
            vec![t(3, 4, 5), t(5, 12, 13), t(15, 8, 17)]
        );
        assert!(enumerate_ppts(4).is_empty());
        assert!(enumerate_ppts(0).is_empty());
    }

    #[test]
    fn classify_and_normalize() {
        let cls = t(15, 8, 17).classify();
        assert!(cls.primitive);
        assert_eq!(cls.even_leg, Some(Leg::B));
        assert_eq!(cls.g, BigInt::from(2));
        assert_eq!(cls.f, BigInt::from(7));
        assert_eq!(t(4, 3, 5).normalized(), t(3, 4, 5));
        assert_eq!(t(6, 8, 10).classify().even_leg, None);
        assert_eq!(t(15, 8, 17).ascending(), t(8, 15, 17));
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&BigInt::from(49)), Some(BigInt::from(7)));
        assert_eq!(exact_sqrt(&BigInt::from(50)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
    }
}

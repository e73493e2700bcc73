//! Exact arithmetic in the ring `Z[√2]`.
//!
//! The ring is Euclidean for `|N|`, so every ideal is principal and ideals are
//! carried around as generators. Associates differ by `±(1+√2)^k`; see
//! [`QuadInt::normalized`] for the canonical representative.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::primes;

/// `x + y√2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub x: BigInt,
    pub y: BigInt,
}

impl QuadInt {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The fundamental unit `1 + √2`.
    pub fn fundamental_unit() -> Self {
        Self::new(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            x: self.x.clone(),
            y: -&self.y,
        }
    }

    /// `x² − 2y²`.
    pub fn norm(&self) -> BigInt {
        &self.x * &self.x - BigInt::from(2) * &self.y * &self.y
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Whether `self` divides `other` in the ring.
    pub fn divides(&self, other: &QuadInt) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        let n = self.norm();
        let num = other * &self.conjugate();
        num.x.is_multiple_of(&n) && num.y.is_multiple_of(&n)
    }

    pub fn is_associate(&self, other: &QuadInt) -> bool {
        self.divides(other) && other.divides(self)
    }

    // Quantity minimised by the balanced associate; strictly convex along
    // multiplication by powers of the unit.
    fn spread(&self) -> BigInt {
        &self.x * &self.x + BigInt::from(2) * &self.y * &self.y
    }

    fn canonical_key(&self) -> (BigInt, BigInt, bool, bool) {
        (
            self.x.abs(),
            self.y.abs(),
            self.x.is_negative(),
            self.y.is_negative(),
        )
    }

    /// Canonical associate: minimal `|x|`, then minimal `|y|`, then `x ≥ 0`, then `y ≥ 0`.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let up = Self::fundamental_unit();
        let down = Self::new(-1, 1);
        let mut q = self.clone();
        loop {
            let s = q.spread();
            let a = &q * &up;
            if a.spread() < s {
                q = a;
                continue;
            }
            let b = &q * &down;
            if b.spread() < s {
                q = b;
                continue;
            }
            break;
        }
        let mut best = q.clone();
        let mut cand = &q * &down.pow(2);
        for _ in 0..5 {
            for c in [cand.clone(), -&cand] {
                if c.canonical_key().cmp(&best.canonical_key()) == Ordering::Less {
                    best = c;
                }
            }
            cand = &cand * &up;
        }
        best
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_negative() {
            write!(f, "{}-{}√2", self.x, -&self.y)
        } else {
            write!(f, "{}+{}√2", self.x, self.y)
        }
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            x: &self.x * &rhs.x + BigInt::from(2) * &self.y * &rhs.y,
            y: &self.x * &rhs.y + &self.y * &rhs.x,
        }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QuadInt {
            type Output = QuadInt;
            fn $m(self, rhs: QuadInt) -> QuadInt {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        -&self
    }
}

/// `num / den` rounded to a nearest integer, ties toward zero.
fn round_half_toward_zero(num: &BigInt, den: &BigInt) -> BigInt {
    let negative = num.is_negative() != den.is_negative();
    let (n, d) = (num.abs(), den.abs());
    let (mut q, r) = n.div_rem(&d);
    if BigInt::from(2) * r > d {
        q += 1;
    }
    if negative {
        -q
    } else {
        q
    }
}

/// Division with remainder: `alpha = beta·quotient + remainder`, `|N(remainder)| < |N(beta)|`.
pub fn euclid_div(alpha: &QuadInt, beta: &QuadInt) -> Result<(QuadInt, QuadInt)> {
    if beta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = beta.norm();
    let num = alpha * &beta.conjugate();
    let quotient = QuadInt {
        x: round_half_toward_zero(&num.x, &n),
        y: round_half_toward_zero(&num.y, &n),
    };
    let remainder = alpha - &(beta * &quotient);
    Ok((quotient, remainder))
}

/// Greatest common divisor, returned as its canonical associate.
pub fn gcd(alpha: &QuadInt, beta: &QuadInt) -> Result<QuadInt> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut a, mut b) = (alpha.clone(), beta.clone());
    while !b.is_zero() {
        let (_, r) = euclid_div(&a, &b)?;
        a = b;
        b = r;
    }
    Ok(a.normalized())
}

fn checked_prime(p: &BigInt) -> Result<u64> {
    let v = u64::try_from(p).map_err(|_| {
        if p.is_negative() {
            Error::NotPrime(p.clone())
        } else {
            Error::OutOfRange {
                value: p.clone(),
                limit: "primes must be below 2^64",
            }
        }
    })?;
    if !primes::is_prime(v) {
        return Err(Error::NotPrime(p.clone()));
    }
    Ok(v)
}

/// Whether the rational prime `p` splits into two conjugate prime ideals.
pub fn splits(p: &BigInt) -> Result<bool> {
    let p = checked_prime(p)?;
    Ok(matches!(p % 8, 1 | 7))
}

/// A generator `u` of one prime ideal above a split prime `p`, with `|N(u)| = p`.
///
/// Scans `y = 1, 2, …` and, for each `y`, tries `x² = p + 2y²` and then `x² = 2y² − p`.
pub fn ideal_generator(p: &BigInt) -> Result<QuadInt> {
    let pv = checked_prime(p)?;
    if !matches!(pv % 8, 1 | 7) {
        return Err(Error::NotSplit(pv));
    }
    let p = BigInt::from(pv);
    let bound = BigInt::from(2) * (p.sqrt() + 1u32);
    let mut y = BigInt::one();
    while y <= bound {
        let two_y2 = BigInt::from(2) * &y * &y;
        for target in [&p + &two_y2, &two_y2 - &p] {
            if target.is_negative() {
                continue;
            }
            let x = target.sqrt();
            if &x * &x == target {
                return Ok(QuadInt { x, y });
            }
        }
        y += 1;
    }
    Err(Error::Internal(format!(
        "no element of norm ±{p} found with y ≤ {bound}"
    )))
}

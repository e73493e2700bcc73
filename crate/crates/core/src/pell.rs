//! The negative Pell equation `x² − 2y² = −1` and the linear recurrences
//! for multiplying by powers of `δ = 3 + 2√2`.

use num_bigint::BigInt;

use crate::zsqrt2::QuadInt;

/// `δ = (1 + √2)² = 3 + 2√2`, the generator of the norm-one units.
pub fn delta() -> QuadInt {
    QuadInt::new(3, 2)
}

/// Components of `γδ^m`, `γ = 1 + √2`. The `±` sign is left to callers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub x: BigInt,
    pub y: BigInt,
    pub m: i64,
}

/// `A_n`, `B_n` with `tδ^n = A_n·t + B_n·(2k + j√2)` for every `t = j + k√2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrencePair {
    pub n: u64,
    pub a: BigInt,
    pub b: BigInt,
}

/// Iterates `A_n = 6A_{n−1} − A_{n−2}`, `B_n = 6B_{n−1} − B_{n−2}` from
/// `(A_0, A_1) = (1, 3)`, `(B_0, B_1) = (0, 2)`.
pub fn recurrence_coeffs(n: u64) -> RecurrencePair {
    let (mut a0, mut a1) = (BigInt::from(1), BigInt::from(3));
    let (mut b0, mut b1) = (BigInt::from(0), BigInt::from(2));
    for _ in 0..n {
        let a2 = 6 * &a1 - &a0;
        let b2 = 6 * &b1 - &b0;
        a0 = std::mem::replace(&mut a1, a2);
        b0 = std::mem::replace(&mut b1, b2);
    }
    RecurrencePair { n, a: a0, b: b0 }
}

/// `t·δ^n` through the recurrence coefficients.
pub fn apply_delta_power(t: &QuadInt, n: u64) -> QuadInt {
    let RecurrencePair { a, b, .. } = recurrence_coeffs(n);
    let twist = QuadInt {
        x: BigInt::from(2) * &t.y,
        y: t.x.clone(),
    };
    QuadInt {
        x: &a * &t.x + &b * &twist.x,
        y: &a * &t.y + &b * &twist.y,
    }
}

/// `t·δ^m` for any integer `m`; negative powers use `δ⁻¹ = 3 − 2√2`.
pub fn apply_delta_power_signed(t: &QuadInt, m: i64) -> QuadInt {
    if m >= 0 {
        apply_delta_power(t, m as u64)
    } else {
        // conj(conj(t)·δ^|m|) = t·conj(δ)^|m| = t·δ^m
        apply_delta_power(&t.conjugate(), m.unsigned_abs()).conjugate()
    }
}

pub fn neg_pell_solution(m: i64) -> PellSolution {
    let QuadInt { x, y } = apply_delta_power_signed(&QuadInt::fundamental_unit(), m);
    PellSolution { x, y, m }
}

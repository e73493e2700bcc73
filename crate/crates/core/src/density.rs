//! Totient sieves and exact counts of the parameter sets behind the density
//! of `(a, b, b + g)` triples among all primitive triples of the same parity.
//!
//! * `P(B)`: pairs `(r, s)`, `gcd(r, s) = 1`, `0 < s < r ≤ B`.
//! * `G_O(B)`: pairs `(k, m)`, `gcd = 1`, `0 < m < k ≤ B`, `k`, `m` odd.
//! * `G_EE(B)`: same with `m` even, `k` odd.
//! * `G_EO(B)`: same with `m` odd, `k` even.
//! * `G(B)`: the `g = 1` family, pairs `(n + 1, n)`, `n + 1 ≤ B`.
//!
//! The first three occupy a third of `P(B)` asymptotically; `G(B)` has density zero.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::primes::{factorize, odd_part};

/// Largest sieve bound built unless overridden.
pub const DEFAULT_SIEVE_BUDGET: u64 = 10_000_000;

/// `φ(n)` and `μ(n)` for `1 ≤ n ≤ bound`.
#[derive(Debug, Clone)]
pub struct TotientSieve {
    bound: u64,
    phi: Vec<u32>,
    mu: Vec<i8>,
}

pub fn build_sieve(bound: u64) -> Result<TotientSieve> {
    build_sieve_with_budget(bound, DEFAULT_SIEVE_BUDGET)
}

/// Linear sieve over `1..=bound`; refuses bounds above `budget` (two tables of that length).
pub fn build_sieve_with_budget(bound: u64, budget: u64) -> Result<TotientSieve> {
    if bound > budget || bound >= u32::MAX as u64 {
        return Err(Error::SieveBudget {
            requested: bound,
            budget,
        });
    }
    let n = bound as usize;
    let mut phi = vec![0u32; n + 1];
    let mut mu = vec![0i8; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    if n >= 1 {
        phi[1] = 1;
        mu[1] = 1;
    }
    for i in 2..=n {
        if phi[i] == 0 {
            phi[i] = i as u32 - 1;
            mu[i] = -1;
            primes.push(i as u32);
        }
        for &p in &primes {
            let ip = i * p as usize;
            if ip > n {
                break;
            }
            if i % p as usize == 0 {
                phi[ip] = phi[i] * p;
                mu[ip] = 0;
                break;
            }
            phi[ip] = phi[i] * (p - 1);
            mu[ip] = -mu[i];
        }
    }
    Ok(TotientSieve { bound, phi, mu })
}

impl TotientSieve {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    fn check(&self, n: u64) -> Result<()> {
        if n > self.bound {
            return Err(Error::BeyondSieve {
                n,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// # Panics
    /// If `n` is zero or beyond the sieve bound.
    pub fn phi(&self, n: u64) -> u64 {
        assert!(
            n >= 1 && n <= self.bound,
            "phi({n}) outside 1..={}",
            self.bound
        );
        self.phi[n as usize] as u64
    }

    /// # Panics
    /// If `n` is zero or beyond the sieve bound.
    pub fn mu(&self, n: u64) -> i8 {
        assert!(
            n >= 1 && n <= self.bound,
            "mu({n}) outside 1..={}",
            self.bound
        );
        self.mu[n as usize]
    }

    /// `φ(n)` for odd `n`, zero for even `n`.
    pub fn phi2(&self, n: u64) -> u64 {
        if n.is_multiple_of(2) {
            0
        } else {
            self.phi(n)
        }
    }

    fn phi_slice(&self, lo: u64, hi: u64) -> &[u32] {
        &self.phi[lo as usize..=hi as usize]
    }
}

/// `Σ_{d | n} φ₂(d)`, computed from the factorization of `n` alone.
pub fn phi2_divisor_sum(n: u64) -> u64 {
    assert!(n >= 1);
    let odd_factors: Vec<(u64, u32)> = factorize(n).into_iter().filter(|&(p, _)| p != 2).collect();
    // divisors paired with their totients
    let mut divisors: Vec<(u64, u64)> = vec![(1, 1)];
    for (p, e) in odd_factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for &(d, phi_d) in &divisors {
            next.push((d, phi_d));
            let (mut pk, mut phi_pk) = (1u64, 1u64);
            for k in 1..=e {
                pk *= p;
                phi_pk = if k == 1 { p - 1 } else { phi_pk * p };
                next.push((d * pk, phi_d * phi_pk));
            }
        }
        divisors = next;
    }
    divisors.iter().map(|&(_, phi)| phi).sum()
}

/// `Σ_{d | n} μ(d)·oddpart(n / d) = φ₂(n)`.
pub fn moebius_inversion_check(n: u64, sieve: &TotientSieve) -> Result<bool> {
    sieve.check(n)?;
    let mut total: i64 = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let e = n / d;
            total += sieve.mu(d) as i64 * odd_part(e) as i64;
            if e != d {
                total += sieve.mu(e) as i64 * odd_part(d) as i64;
            }
        }
        d += 1;
    }
    Ok(total == sieve.phi2(n) as i64)
}

pub fn sum_phi(bound: u64, sieve: &TotientSieve) -> Result<u64> {
    sieve.check(bound)?;
    if bound == 0 {
        return Ok(0);
    }
    Ok(sieve.phi_slice(1, bound).iter().map(|&v| v as u64).sum())
}

pub fn sum_phi2(bound: u64, sieve: &TotientSieve) -> Result<u64> {
    sieve.check(bound)?;
    if bound == 0 {
        return Ok(0);
    }
    Ok(sieve
        .phi_slice(1, bound)
        .iter()
        .step_by(2)
        .map(|&v| v as u64)
        .sum())
}

/// `#P(B) = Σ_{2 ≤ r ≤ B} φ(r)`; `r = 1` has no `0 < s < 1`.
pub fn count_pool(bound: u64, sieve: &TotientSieve) -> Result<u64> {
    Ok(sum_phi(bound, sieve)?.saturating_sub(1))
}

/// `#G_O(B) = Σ_{odd 3 ≤ k ≤ B} φ(k)/2`.
pub fn count_go(bound: u64, sieve: &TotientSieve) -> Result<u64> {
    sieve.check(bound)?;
    if bound < 3 {
        return Ok(0);
    }
    Ok(sieve
        .phi_slice(3, bound)
        .iter()
        .step_by(2)
        .map(|&v| v as u64 / 2)
        .sum())
}

/// `#G_EE(B)`: for odd `k` the coprime `m < k` split evenly between the two parities.
pub fn count_gee(bound: u64, sieve: &TotientSieve) -> Result<u64> {
    count_go(bound, sieve)
}

/// `#G_EO(B) = Σ_{even k ≤ B} φ(k)`; every `m` coprime to an even `k` is odd.
pub fn count_geo(bound: u64, sieve: &TotientSieve) -> Result<u64> {
    sieve.check(bound)?;
    if bound < 2 {
        return Ok(0);
    }
    Ok(sieve
        .phi_slice(2, bound)
        .iter()
        .step_by(2)
        .map(|&v| v as u64)
        .sum())
}

pub fn count_g1(bound: u64) -> u64 {
    bound.saturating_sub(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DensityFamily {
    GO,
    GEE,
    GEO,
    G1,
}

impl DensityFamily {
    pub const ALL: [DensityFamily; 4] = [Self::GO, Self::GEE, Self::GEO, Self::G1];

    pub fn name(self) -> &'static str {
        match self {
            Self::GO => "GO",
            Self::GEE => "GEE",
            Self::GEO => "GEO",
            Self::G1 => "G1",
        }
    }

    pub fn count(self, bound: u64, sieve: &TotientSieve) -> Result<u64> {
        match self {
            Self::GO => count_go(bound, sieve),
            Self::GEE => count_gee(bound, sieve),
            Self::GEO => count_geo(bound, sieve),
            Self::G1 => {
                sieve.check(bound)?;
                Ok(count_g1(bound))
            }
        }
    }

    /// Ratio of the family's main term to the pool's `(3/π²)B²`.
    ///
    /// The three parity families each have main term `B²/π²`, so `π²` cancels
    /// and the prediction is exactly `1/3`; `G(B)` is linear in `B`, giving `0`.
    pub fn predicted(self) -> Ratio<u64> {
        match self {
            Self::G1 => Ratio::from_integer(0),
            _ => Ratio::new(1, 3),
        }
    }
}

impl fmt::Display for DensityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DensityFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?} (expected GO, GEE, GEO or G1)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityRow {
    pub bound: u64,
    pub family_count: u64,
    pub pool_count: u64,
    pub ratio: Ratio<u64>,
    pub predicted: Ratio<u64>,
}

/// Renders a non-negative rational to six decimals, rounding half up.
pub fn decimal6(r: &Ratio<u64>) -> String {
    let (num, den) = (BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    let scaled: BigInt = (num * 2_000_000u32 + &den) / (den * 2u32);
    let whole = &scaled / 1_000_000u32;
    let frac = &scaled % 1_000_000u32;
    format!("{whole}.{frac:0>6}")
}

impl DensityRow {
    pub fn ratio_decimal(&self) -> String {
        decimal6(&self.ratio)
    }

    pub fn predicted_decimal(&self) -> String {
        decimal6(&self.predicted)
    }

    pub fn ratio_f64(&self) -> f64 {
        *self.ratio.numer() as f64 / *self.ratio.denom() as f64
    }
}

pub fn density_report(
    family: DensityFamily,
    grid: &[u64],
    sieve: &TotientSieve,
) -> Result<Vec<DensityRow>> {
    grid.iter()
        .map(|&bound| {
            if bound < 2 {
                return Err(Error::OutOfRange {
                    value: bound.into(),
                    limit: "density bounds start at 2",
                });
            }
            let family_count = family.count(bound, sieve)?;
            let pool_count = count_pool(bound, sieve)?;
            Ok(DensityRow {
                bound,
                family_count,
                pool_count,
                ratio: Ratio::new(family_count, pool_count),
                predicted: family.predicted(),
            })
        })
        .collect()
}

/// Which summatory function a convergence row describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Summatory {
    /// `Σ φ(n) ~ (3/π²)B²`
    Phi,
    /// `Σ φ₂(n) ~ (2/π²)B²`
    Phi2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub bound: u64,
    pub sum: u64,
    /// Exact sum over the main term; tends to 1.
    pub normalized: f64,
    /// `|normalized − 1|`.
    pub error: f64,
    /// `error·B / ln B`.
    pub c_ln: f64,
    /// `error·B / log₂ B`.
    pub c_log2: f64,
}

pub fn convergence(
    kind: Summatory,
    grid: &[u64],
    sieve: &TotientSieve,
) -> Result<Vec<ConvergenceRow>> {
    grid.iter()
        .map(|&bound| {
            let (sum, coeff) = match kind {
                Summatory::Phi => (sum_phi(bound, sieve)?, 3.0),
                Summatory::Phi2 => (sum_phi2(bound, sieve)?, 2.0),
            };
            let b = bound as f64;
            let normalized = sum as f64 * PI * PI / (coeff * b * b);
            let error = (normalized - 1.0).abs();
            Ok(ConvergenceRow {
                bound,
                sum,
                normalized,
                error,
                c_ln: error * b / b.ln(),
                c_log2: error * b / b.log2(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn sieve_examples() {
        let s = build_sieve(10).unwrap();
        let phis: Vec<u64> = (1..=10).map(|n| s.phi(n)).collect();
        assert_eq!(phis, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4]);
        let s = build_sieve(12).unwrap();
        assert_eq!(s.mu(12), 0);
        assert_eq!(s.mu(1), 1);
        assert_eq!(s.mu(6), 1);
        assert_eq!(s.mu(7), -1);
    }

    #[test]
    fn sieve_matches_naive_phi() {
        let s = build_sieve(500).unwrap();
        for n in 1..=500 {
            assert_eq!(s.phi(n), naive_phi(n), "n={n}");
        }
    }

    #[test]
    fn sieve_budget() {
        assert!(matches!(
            build_sieve_with_budget(101, 100),
            Err(Error::SieveBudget { .. })
        ));
        assert!(build_sieve_with_budget(100, 100).is_ok());
        assert_eq!(build_sieve(0).unwrap().bound(), 0);
    }

    #[test]
    fn phi2_examples() {
        let s = build_sieve(10).unwrap();
        assert_eq!(s.phi2(9), 6);
        assert_eq!(s.phi2(8), 0);
        assert_eq!(s.phi2(1), 1);
        assert_eq!(phi2_divisor_sum(12), 3);
        assert_eq!(phi2_divisor_sum(9), 9);
        assert_eq!(phi2_divisor_sum(1), 1);
    }

    #[test]
    fn sum_examples() {
        let s = build_sieve(10).unwrap();
        assert_eq!(sum_phi(10, &s).unwrap(), 32);
        assert_eq!(sum_phi2(10, &s).unwrap(), 19);
        assert_eq!(sum_phi(1, &s).unwrap(), 1);
        assert_eq!(count_pool(10, &s).unwrap(), 31);
        assert_eq!(count_pool(2, &s).unwrap(), 1);
        assert_eq!(count_pool(1, &s).unwrap(), 0);
        assert_eq!(count_go(10, &s).unwrap(), 9);
        assert_eq!(count_geo(10, &s).unwrap(), 13);
        assert_eq!(count_gee(10, &s).unwrap(), 9);
        assert_eq!(count_g1(10), 9);
        assert!(matches!(sum_phi(11, &s), Err(Error::BeyondSieve { .. })));
    }

    #[test]
    fn report_examples() {
        let s = build_sieve(10).unwrap();
        let go = density_report(DensityFamily::GO, &[10], &s).unwrap();
        assert_eq!(go[0].ratio, Ratio::new(9, 31));
        assert_eq!(go[0].ratio_decimal(), "0.290323");
        assert_eq!(go[0].predicted_decimal(), "0.333333");
        let g1 = density_report(DensityFamily::G1, &[10], &s).unwrap();
        assert_eq!((g1[0].family_count, g1[0].pool_count), (9, 31));
        assert_eq!(g1[0].predicted_decimal(), "0.000000");
        let geo = density_report(DensityFamily::GEO, &[10], &s).unwrap();
        assert_eq!(geo[0].ratio, Ratio::new(13, 31));
        assert_eq!(geo[0].ratio_decimal(), "0.419355");
        assert!(density_report(DensityFamily::GO, &[1], &s).is_err());
    }

    #[test]
    fn moebius_examples() {
        let s = build_sieve(100).unwrap();
        assert!(moebius_inversion_check(9, &s).unwrap());
        assert!(moebius_inversion_check(8, &s).unwrap());
        assert!(moebius_inversion_check(1, &s).unwrap());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal6(&Ratio::new(1, 2)), "0.500000");
        assert_eq!(decimal6(&Ratio::new(2, 3)), "0.666667");
        assert_eq!(decimal6(&Ratio::new(1, 1)), "1.000000");
        assert_eq!(decimal6(&Ratio::new(1, 2_000_000)), "0.000001");
        assert_eq!(decimal6(&Ratio::new(1, 2_000_001)), "0.000000");
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("geo".parse::<DensityFamily>().unwrap(), DensityFamily::GEO);
        assert!("GX".parse::<DensityFamily>().is_err());
    }
}

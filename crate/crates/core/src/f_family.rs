//! Primitive triples `(a, a + f, c)` with a fixed difference between the legs.
//!
//! Such a triple satisfies `(2a + f)² − 2c² = −f²`, so `X + Y√2 = (2a + f) + c√2`
//! has norm `−f²`. Every solution is `±γδ^m·u²` with `u` running over the
//! elements of norm `±f` built from one prime above each prime factor of `f`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::pell::apply_delta_power_signed;
use crate::primes::factorize;
use crate::triple::Triple;
use crate::zsqrt2::{ideal_generator, QuadInt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FRejection {
    Even,
    /// A prime factor that is not `±1 (mod 8)`.
    Prime(u64),
}

impl fmt::Display for FRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FRejection::Even => f.write_str("f is even"),
            FRejection::Prime(p) => write!(f, "prime factor {p} ≡ {} (mod 8), not ±1", p % 8),
        }
    }
}

/// A leg difference with its factorization and admissibility verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSpec {
    pub f: u64,
    pub factorization: Vec<(u64, u32)>,
    pub admissible: bool,
    pub rejections: Vec<FRejection>,
}

impl FSpec {
    pub fn rejection_reason(&self) -> String {
        self.rejections
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    }

    fn require_admissible(&self) -> Result<()> {
        if self.admissible {
            Ok(())
        } else {
            Err(Error::InadmissibleLegGap {
                f: self.f,
                reason: self.rejection_reason(),
            })
        }
    }
}

/// Factors `f` and checks that it is odd with every prime factor `≡ ±1 (mod 8)`.
pub fn admissible_f(f: &BigInt) -> Result<FSpec> {
    if !f.is_positive() {
        return Err(Error::InadmissibleLegGap {
            f: 0,
            reason: "f must be positive".into(),
        });
    }
    let fv = u64::try_from(f).map_err(|_| Error::OutOfRange {
        value: f.clone(),
        limit: "factorization supports f < 2^64",
    })?;
    let factorization = factorize(fv);
    let mut rejections = Vec::new();
    if fv % 2 == 0 {
        rejections.push(FRejection::Even);
    }
    rejections.extend(
        factorization
            .iter()
            .filter(|&&(p, _)| p != 2 && !matches!(p % 8, 1 | 7))
            .map(|&(p, _)| FRejection::Prime(p)),
    );
    Ok(FSpec {
        f: fv,
        factorization,
        admissible: rejections.is_empty(),
        rejections,
    })
}

/// `(2a + f, c)` for a triple with `b − a = f`.
pub fn pell_recast(t: &Triple, f: u64) -> Result<(BigInt, BigInt)> {
    let diff = t.b() - t.a();
    if diff != BigInt::from(f) {
        return Err(Error::LegGapMismatch {
            expected: f,
            actual: diff,
        });
    }
    Ok((BigInt::from(2) * t.a() + f, t.c().clone()))
}

/// One element of norm `±f`: a product of prime generators or their conjugates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfElement {
    pub u: QuadInt,
    /// Per distinct prime factor (ascending): `false` for the generator, `true` for its conjugate.
    pub choices: Vec<bool>,
}

impl CfElement {
    /// Choice string, one `0` (generator) or `1` (conjugate) per prime factor.
    pub fn label(&self) -> String {
        if self.choices.is_empty() {
            return "-".into();
        }
        self.choices
            .iter()
            .map(|&c| if c { '1' } else { '0' })
            .collect()
    }
}

/// All `2^k` products over the `k` distinct prime factors of an admissible `f`.
pub fn cf_elements(spec: &FSpec) -> Result<Vec<CfElement>> {
    spec.require_admissible()?;
    let gens = spec
        .factorization
        .iter()
        .map(|&(p, e)| Ok((ideal_generator(&BigInt::from(p))?, e)))
        .collect::<Result<Vec<_>>>()?;
    let k = gens.len();
    let out = (0u64..1 << k)
        .map(|mask| {
            let choices: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            let u = gens
                .iter()
                .zip(&choices)
                .fold(QuadInt::one(), |acc, ((g, e), &conj)| {
                    let q = if conj { g.conjugate() } else { g.clone() };
                    &acc * &q.pow(*e)
                });
            CfElement { u, choices }
        })
        .collect();
    Ok(out)
}

/// A generated triple with the branch that first produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTriple {
    pub triple: Triple,
    pub m: i64,
    pub sign: i8,
    pub cf_choice: CfElement,
    /// `2a + f`.
    pub x: BigInt,
    /// `c`.
    pub y: BigInt,
    /// Number of `(m, sign, u)` branches that produced this triple.
    pub hits: usize,
}

/// The triple read off `sign·γδ^m·u²`, if the branch yields one.
fn branch_triple(f: u64, u: &QuadInt, m: i64, sign: i8) -> Option<(Triple, BigInt, BigInt)> {
    let base = &QuadInt::fundamental_unit() * &(u * u);
    let mut v = apply_delta_power_signed(&base, m);
    if sign < 0 {
        v = -v;
    }
    let (x, y) = (v.x.abs(), v.y.abs());
    let f = BigInt::from(f);
    if x <= f || (&x - &f).is_odd() {
        return None;
    }
    let a = (&x - &f) / 2;
    let b = (&x + &f) / 2;
    let t = Triple::new(a, b, y.clone()).ok()?;
    Some((t, x, y))
}

/// Sweeps `m ∈ [m_lo, m_hi]`, both signs and the given elements; one entry per
/// distinct triple, sorted by `c` then `a`.
pub fn generate_from_elements(
    spec: &FSpec,
    elements: &[CfElement],
    m_lo: i64,
    m_hi: i64,
) -> Result<Vec<FTriple>> {
    spec.require_admissible()?;
    if m_lo > m_hi {
        return Err(Error::EmptyRange { lo: m_lo, hi: m_hi });
    }
    let mut found: BTreeMap<(BigInt, BigInt), FTriple> = BTreeMap::new();
    for m in m_lo..=m_hi {
        for el in elements {
            for sign in [1i8, -1] {
                let Some((triple, x, y)) = branch_triple(spec.f, &el.u, m, sign) else {
                    continue;
                };
                let key = (triple.c().clone(), triple.a().clone());
                found
                    .entry(key)
                    .and_modify(|ft| ft.hits += 1)
                    .or_insert_with(|| FTriple {
                        triple,
                        m,
                        sign,
                        cf_choice: el.clone(),
                        x,
                        y,
                        hits: 1,
                    });
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Every `(a, a + f, c)` triple reachable with `m ∈ [m_lo, m_hi]`.
pub fn generate_f_triples(spec: &FSpec, m_lo: i64, m_hi: i64) -> Result<Vec<FTriple>> {
    let elements = cf_elements(spec)?;
    generate_from_elements(spec, &elements, m_lo, m_hi)
}

/// Rechecks a generated triple from scratch.
pub fn verify_f_triple(ft: &FTriple, spec: &FSpec) -> bool {
    let (a, b, c) = (ft.triple.a(), ft.triple.b(), ft.triple.c());
    let f = BigInt::from(spec.f);
    a * a + b * b == c * c
        && b - a == f
        && a.gcd(b).is_one()
        && &ft.x * &ft.x - BigInt::from(2) * &ft.y * &ft.y == -(&f * &f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: i64) -> FSpec {
        admissible_f(&BigInt::from(f)).unwrap()
    }

    fn t(a: i64, b: i64, c: i64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let s7 = spec(7);
        assert!(s7.admissible);
        assert_eq!(s7.factorization, vec![(7, 1)]);
        let s12 = spec(12);
        assert!(!s12.admissible);
        assert_eq!(s12.rejections, vec![FRejection::Even, FRejection::Prime(3)]);
        let s119 = spec(119);
        assert!(s119.admissible);
        assert_eq!(s119.factorization, vec![(7, 1), (17, 1)]);
        assert!(spec(1).admissible);
        assert!(!spec(3).admissible);
        assert!(admissible_f(&BigInt::from(0)).is_err());
        assert!(matches!(
            admissible_f(&(BigInt::from(u64::MAX) + 1)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn recast_examples() {
        let big = |v: i64| BigInt::from(v);
        assert_eq!(pell_recast(&t(3, 4, 5), 1).unwrap(), (big(7), big(5)));
        assert_eq!(pell_recast(&t(5, 12, 13), 7).unwrap(), (big(17), big(13)));
        assert_eq!(pell_recast(&t(8, 15, 17), 7).unwrap(), (big(23), big(17)));
        assert!(matches!(
            pell_recast(&t(8, 15, 17), 5),
            Err(Error::LegGapMismatch { .. })
        ));
    }

    #[test]
    fn cf_examples() {
        let one = cf_elements(&spec(1)).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].u, QuadInt::one());

        let seven = cf_elements(&spec(7)).unwrap();
        assert_eq!(seven.len(), 2);
        assert!(seven[0].u.is_associate(&QuadInt::new(3, 1)));
        assert!(seven[1].u.is_associate(&QuadInt::new(3, -1)));

        let f49 = cf_elements(&spec(49)).unwrap();
        assert_eq!(f49.len(), 2);
        assert!(f49[0].u.is_associate(&QuadInt::new(11, 6)));
        assert!(f49[1].u.is_associate(&QuadInt::new(11, -6)));

        assert_eq!(cf_elements(&spec(119)).unwrap().len(), 4);
        for el in cf_elements(&spec(119)).unwrap() {
            assert_eq!(el.u.norm().abs(), BigInt::from(119));
        }
        assert!(cf_elements(&spec(3)).is_err());
    }

    #[test]
    fn generation_examples() {
        let ones: Vec<_> = generate_f_triples(&spec(1), 1, 2)
            .unwrap()
            .into_iter()
            .map(|ft| ft.triple)
            .collect();
        assert_eq!(ones, vec![t(3, 4, 5), t(20, 21, 29)]);

        let s7 = spec(7);
        let u = CfElement {
            u: QuadInt::new(3, 1),
            choices: vec![false],
        };
        let got: Vec<_> = generate_from_elements(&s7, std::slice::from_ref(&u), 0, 0)
            .unwrap()
            .into_iter()
            .map(|ft| ft.triple)
            .collect();
        assert_eq!(got, vec![t(8, 15, 17)]);
        let got: Vec<_> = generate_from_elements(&s7, &[u], 1, 1)
            .unwrap()
            .into_iter()
            .map(|ft| ft.triple)
            .collect();
        assert_eq!(got, vec![t(65, 72, 97)]);

        // the conjugate branch contributes (5, 12, 13) at m = 1
        let all: Vec<_> = generate_f_triples(&s7, 0, 1)
            .unwrap()
            .into_iter()
            .map(|ft| ft.triple)
            .collect();
        assert_eq!(all, vec![t(5, 12, 13), t(8, 15, 17), t(65, 72, 97)]);
    }

    #[test]
    fn degenerate_branch_filtered_for_unit_gap() {
        // m = 0, f = 1 gives X = 1 = f, i.e. a = 0
        assert!(generate_f_triples(&spec(1), 0, 0).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_ranges_and_gaps() {
        assert!(matches!(
            generate_f_triples(&spec(7), 2, 1),
            Err(Error::EmptyRange { .. })
        ));
        assert!(matches!(
            generate_f_triples(&spec(21), 0, 1),
            Err(Error::InadmissibleLegGap { .. })
        ));
    }

    #[test]
    fn verification() {
        let s7 = spec(7);
        for ft in generate_f_triples(&s7, -3, 3).unwrap() {
            assert!(verify_f_triple(&ft, &s7), "{}", ft.triple);
        }
        // Pythagorean with b − a = 7 and the right Pell value, but gcd 7
        let bad = FTriple {
            triple: t(21, 28, 35),
            m: 0,
            sign: 1,
            cf_choice: cf_elements(&s7).unwrap().remove(0),
            x: BigInt::from(49),
            y: BigInt::from(35),
            hits: 1,
        };
        assert!(!verify_f_triple(&bad, &s7));
    }
}

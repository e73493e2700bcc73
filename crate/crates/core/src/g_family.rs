//! Primitive triples `(a, b, b + g)` with a fixed gap between the hypotenuse
//! and one leg.
//!
//! A gap is admissible exactly when `g = m²` with `m` odd, or `g = 2m²`.
//! Each admissible gap has one infinite family, indexed by `n ≥ 1`:
//!
//! | class               | `r_n`          | `s_n`          | condition          | `a_n`        |
//! |---------------------|----------------|----------------|--------------------|--------------|
//! | `g = m²`, `m` odd   | `(2n+1+m)/2`   | `(2n+1−m)/2`   | `gcd(2n+1, m) = 1` | `m(2n+1)`    |
//! | `g = 2m²`, `m` odd  | `n`            | `m`            | `gcd(n, m) = 1`    | `2mn`        |
//! | `g = 2m²`, `m` even | `2n+1`         | `m`            | `gcd(2n+1, m) = 1` | `2m(2n+1)`   |
//!
//! Indices failing their condition are skipped, never renumbered.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::triple::{exact_sqrt, from_params, is_primitive, ParamPair, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GKind {
    OddSquare,
    TwiceSquareOddM,
    TwiceSquareEvenM,
    Inadmissible,
}

impl GKind {
    pub fn name(self) -> &'static str {
        match self {
            GKind::OddSquare => "OddSquare",
            GKind::TwiceSquareOddM => "TwiceSquareOddM",
            GKind::TwiceSquareEvenM => "TwiceSquareEvenM",
            GKind::Inadmissible => "Inadmissible",
        }
    }
}

impl fmt::Display for GKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Admissibility class of a hypotenuse-leg gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GClass {
    pub kind: GKind,
    /// Root `m`; `None` for inadmissible gaps.
    pub m: Option<BigInt>,
    pub g: BigInt,
    /// Forms `g` failed to match, for inadmissible gaps.
    pub failed: Vec<&'static str>,
}

impl GClass {
    pub fn is_admissible(&self) -> bool {
        self.kind != GKind::Inadmissible
    }

    pub fn rejection_reason(&self) -> Option<String> {
        (!self.is_admissible()).then(|| format!("not {}", self.failed.join(" nor ")))
    }

    /// Stride and offset of the progression `a_n = t·n + q`.
    pub fn progression(&self) -> Option<(BigInt, BigInt)> {
        let m = self.m.as_ref()?;
        Some(match self.kind {
            GKind::OddSquare => (BigInt::from(2) * m, m.clone()),
            GKind::TwiceSquareOddM => (BigInt::from(2) * m, BigInt::zero()),
            GKind::TwiceSquareEvenM => (BigInt::from(4) * m, BigInt::from(2) * m),
            GKind::Inadmissible => return None,
        })
    }

    fn root(&self) -> Result<&BigInt> {
        match &self.m {
            Some(m) if self.is_admissible() => Ok(m),
            _ => Err(Error::InadmissibleGap {
                g: self.g.clone(),
                reason: self.rejection_reason().unwrap_or_default(),
            }),
        }
    }
}

impl fmt::Display for GClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.m {
            Some(m) => write!(f, "{}(m={})", self.kind, m),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// One member of a gap family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFamilyItem {
    pub n: BigInt,
    /// `2n + 1` for the odd-square and even-`m` classes, `n` for the odd-`m` twice-square class.
    pub k: BigInt,
    pub params: ParamPair,
    /// Odd leg first when `g` is odd, even leg first when `g` is even.
    pub triple: Triple,
    pub stride: BigInt,
    pub offset: BigInt,
}

const NOT_ODD_SQUARE: &str = "m² (m odd)";
const NOT_TWICE_SQUARE: &str = "2m²";

pub fn classify_g(g: &BigInt) -> GClass {
    let inadmissible = |failed: Vec<&'static str>| GClass {
        kind: GKind::Inadmissible,
        m: None,
        g: g.clone(),
        failed,
    };
    if !g.is_positive() {
        return inadmissible(vec!["positive"]);
    }
    if g.is_odd() {
        return match exact_sqrt(g) {
            Some(m) => GClass {
                kind: GKind::OddSquare,
                m: Some(m),
                g: g.clone(),
                failed: Vec::new(),
            },
            None => inadmissible(vec![NOT_ODD_SQUARE, NOT_TWICE_SQUARE]),
        };
    }
    match exact_sqrt(&(g / 2)) {
        Some(m) => GClass {
            kind: if m.is_odd() {
                GKind::TwiceSquareOddM
            } else {
                GKind::TwiceSquareEvenM
            },
            m: Some(m),
            g: g.clone(),
            failed: Vec::new(),
        },
        None => inadmissible(vec![NOT_ODD_SQUARE, NOT_TWICE_SQUARE]),
    }
}

/// The leg `b = (a² − g²) / 2g` completing `(a, b, b + g)`, when it is a positive integer.
pub fn leg_from_gap(a: &BigInt, g: &BigInt) -> Option<BigInt> {
    if !g.is_positive() {
        return None;
    }
    let num = a * a - g * g;
    let den = BigInt::from(2) * g;
    let (b, rem) = num.div_rem(&den);
    (rem.is_zero() && b.is_positive()).then_some(b)
}

/// `(r_n, s_n)` for index `n`, or `None` when the index is skipped.
pub fn family_params(gc: &GClass, n: &BigInt) -> Result<Option<ParamPair>> {
    let m = gc.root()?;
    if !n.is_positive() {
        return Ok(None);
    }
    let k: BigInt = BigInt::from(2) * n + 1;
    let (r, s, coprime) = match gc.kind {
        GKind::OddSquare => ((&k + m) / 2, (&k - m) / 2, k.gcd(m).is_one()),
        GKind::TwiceSquareOddM => (n.clone(), m.clone(), n.gcd(m).is_one() && (n + m).is_odd()),
        GKind::TwiceSquareEvenM => (k.clone(), m.clone(), k.gcd(m).is_one()),
        GKind::Inadmissible => unreachable!("root() rejects inadmissible classes"),
    };
    if !coprime || !s.is_positive() || s >= r {
        return Ok(None);
    }
    Ok(Some(ParamPair::new(r, s)?))
}

fn build_item(gc: &GClass, n: BigInt, params: ParamPair) -> GFamilyItem {
    let base = from_params(&params);
    let (triple, k) = match gc.kind {
        GKind::OddSquare => (base, BigInt::from(2) * &n + 1),
        GKind::TwiceSquareOddM => (base.swapped(), n.clone()),
        _ => (base.swapped(), BigInt::from(2) * &n + 1),
    };
    let (stride, offset) = gc.progression().expect("admissible class");
    GFamilyItem {
        n,
        k,
        params,
        triple,
        stride,
        offset,
    }
}

/// Lazy iterator over a gap family, ascending in `n`.
pub struct GFamilyIter {
    class: GClass,
    next_n: BigInt,
}

impl Iterator for GFamilyIter {
    type Item = GFamilyItem;

    fn next(&mut self) -> Option<GFamilyItem> {
        loop {
            let n = self.next_n.clone();
            self.next_n += 1;
            if let Some(p) = family_params(&self.class, &n).ok()? {
                return Some(build_item(&self.class, n, p));
            }
        }
    }
}

/// Smallest `n ≥ 1` with `s < r`; every smaller index is skipped anyway.
fn first_index(gc: &GClass) -> Result<BigInt> {
    let m = gc.root()?;
    let n: BigInt = match gc.kind {
        GKind::OddSquare => (m + 1) / 2,
        GKind::TwiceSquareOddM => m + 1,
        _ => m / 2,
    };
    Ok(n.max(BigInt::one()))
}

pub fn g_family(g: &BigInt) -> Result<GFamilyIter> {
    let class = classify_g(g);
    let next_n = first_index(&class)?;
    Ok(GFamilyIter { class, next_n })
}

/// The first `count` members of the family for gap `g`.
pub fn generate_g_family(g: &BigInt, count: usize) -> Result<Vec<GFamilyItem>> {
    Ok(g_family(g)?.take(count).collect())
}

/// Locates a primitive triple within the family of its gap `g = c − b`.
///
/// Returns the class and family index; regenerating at that index gives back `t`.
pub fn invert_to_family(t: &Triple) -> Result<(GClass, BigInt)> {
    if !is_primitive(t) {
        return Err(Error::NotPrimitive {
            a: t.a().clone(),
            b: t.b().clone(),
            c: t.c().clone(),
        });
    }
    let g = t.c() - t.b();
    let gc = classify_g(&g);
    let m = gc.root()?.clone();
    let a = t.a();
    let n: BigInt = match gc.kind {
        GKind::OddSquare => (a / &m - 1) / 2,
        GKind::TwiceSquareOddM => a / (BigInt::from(2) * &m),
        GKind::TwiceSquareEvenM => (a / (BigInt::from(2) * &m) - 1) / 2,
        GKind::Inadmissible => unreachable!(),
    };
    let item = family_params(&gc, &n)?.map(|p| build_item(&gc, n.clone(), p));
    match item {
        Some(item) if item.triple == *t => Ok((gc, n)),
        _ => Err(Error::Internal(format!(
            "{t} not reproduced by family {gc} at n={n}"
        ))),
    }
}

/// Regenerates the family member at a known index.
pub fn family_item(gc: &GClass, n: &BigInt) -> Result<Option<GFamilyItem>> {
    Ok(family_params(gc, n)?.map(|p| build_item(gc, n.clone(), p)))
}

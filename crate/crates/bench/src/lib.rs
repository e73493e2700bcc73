//! Fixed inputs shared by the benchmarks in `benches/`.

use ppt_core::QuadInt;

// norms 7, 17, 23, 31, 73
const FACTORS: [(i64, i64); 5] = [(3, 1), (5, 2), (5, 1), (7, 3), (9, 2)];

/// Pairs `(u·v, u·w)` with a common factor `u`, built from a fixed walk so runs
/// are comparable.
pub fn gcd_inputs(count: usize) -> Vec<(QuadInt, QuadInt)> {
    (1..=count as i64)
        .map(|i| {
            let u = &FACTORS[i as usize % FACTORS.len()];
            let v = QuadInt::new(1_000 + 7 * i, 313 - i);
            let w = QuadInt::new(-2_001 + 11 * i, 97 + 3 * i);
            let u = QuadInt::new(u.0, u.1);
            (&u * &v, &u * &w)
        })
        .collect()
}

pub const DENSITY_BOUNDS: [u64; 3] = [10_000, 100_000, 1_000_000];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_share_a_factor() {
        for (a, b) in gcd_inputs(50) {
            let g = ppt_core::zsqrt2::gcd(&a, &b).unwrap();
            assert!(g.norm().magnitude() > &1u32.into());
        }
    }
}

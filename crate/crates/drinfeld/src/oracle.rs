//! Independent combinatorial cross-check: the Freyd–Yetter braid-group action
//! on Gⁿ and its fixed-point count, which equals the braided dimension of the
//! Schrödinger module of a group algebra.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::zoo::FiniteGroup;

/// Hard cap on the number of tuples enumerated by the oracle.
pub const MAX_ORACLE_TUPLES: u128 = 10_000_000;

/// Apply the Freyd–Yetter action of a braid word to a tuple in Gⁿ:
/// σ_i sends (g_i, g_{i+1}) to (g_{i+1}, g_{i+1}⁻¹ g_i g_{i+1}) and σ_i⁻¹
/// applies the inverse permutation; the first letter acts first.
pub fn fy_apply(g: &FiniteGroup, b: &BraidWord, tuple: &[usize]) -> Result<Vec<usize>> {
    if tuple.len() != b.strands {
        return Err(Error::DimensionMismatch(format!(
            "tuple length {} ≠ strand count {}",
            tuple.len(),
            b.strands
        )));
    }
    let mut t = tuple.to_vec();
    for &w in &b.letters {
        let i = w.unsigned_abs() as usize - 1;
        let (a, c) = (t[i], t[i + 1]);
        if w > 0 {
            t[i] = c;
            t[i + 1] = g.mul(g.mul(g.inv(c), a), c);
        } else {
            t[i] = g.mul(g.mul(a, c), g.inv(a));
            t[i + 1] = a;
        }
    }
    Ok(t)
}

/// Count the fixed points of the Freyd–Yetter action on Gⁿ by pure
/// enumeration.
pub fn fy_fixed_points(g: &FiniteGroup, b: &BraidWord) -> Result<u64> {
    let mut total: u128 = 1;
    for _ in 0..b.strands {
        total = total.saturating_mul(g.order as u128);
        if total > MAX_ORACLE_TUPLES {
            return Err(Error::EnumerationTooLarge(format!(
                "|G|^n = {}^{} exceeds the {MAX_ORACLE_TUPLES}-tuple oracle guard",
                g.order, b.strands
            )));
        }
    }
    let mut tuple = vec![0usize; b.strands];
    let mut count = 0u64;
    loop {
        if fy_apply(g, b, &tuple)? == tuple {
            count += 1;
        }
        // odometer increment over Gⁿ
        let mut pos = b.strands;
        loop {
            if pos == 0 {
                return Ok(count);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < g.order {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braided_dim, parse_braid, torus_braid, Orientation, Side};
    use crate::double::build_double;
    use crate::field::FieldDescriptor;
    use crate::rep::schrodinger;
    use crate::zoo::{group_algebra, make_group};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn spec_values() {
        let s3 = make_group("S3").unwrap();
        let c2 = make_group("C2").unwrap();
        assert_eq!(fy_fixed_points(&s3, &parse_braid("2: 1 1").unwrap()).unwrap(), 18);
        assert_eq!(fy_fixed_points(&c2, &parse_braid("2: 1").unwrap()).unwrap(), 2);
        assert_eq!(fy_fixed_points(&s3, &parse_braid("2: 1 1 1").unwrap()).unwrap(), 12);
    }

    #[test]
    fn sigma_inverse_is_inverse() {
        let s3 = make_group("S3").unwrap();
        let b = parse_braid("3: 1 -1 2 -2").unwrap();
        for a in 0..6 {
            for c in 0..6 {
                for d in 0..6 {
                    let t = vec![a, c, d];
                    assert_eq!(fy_apply(&s3, &b, &t).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn class_equation_identity() {
        // fixed points of t_{2,2} = |G| · #Conj(G)
        for name in ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"] {
            let g = make_group(name).unwrap();
            let n = fy_fixed_points(&g, &torus_braid(2, 2).unwrap()).unwrap();
            assert_eq!(n, (g.order * g.conj_class_count()) as u64, "{name}");
        }
    }

    #[test]
    fn braid_relation_invariance() {
        let g = make_group("S3").unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..10 {
            let mut letters: Vec<i32> = (0..4)
                .map(|_| {
                    let l = rng.gen_range(1..=2i32);
                    if rng.gen_bool(0.5) {
                        l
                    } else {
                        -l
                    }
                })
                .collect();
            let base = BraidWord::new(3, letters.clone()).unwrap();
            let v = fy_fixed_points(&g, &base).unwrap();
            // insert σ₁σ₂σ₁ vs σ₂σ₁σ₂ at a random spot
            let at = rng.gen_range(0..=letters.len());
            let mut w1 = letters.clone();
            w1.splice(at..at, [1, 2, 1]);
            let mut w2 = letters.clone();
            w2.splice(at..at, [2, 1, 2]);
            let v1 = fy_fixed_points(&g, &BraidWord::new(3, w1).unwrap()).unwrap();
            let v2 = fy_fixed_points(&g, &BraidWord::new(3, w2).unwrap()).unwrap();
            assert_eq!(v1, v2);
            // conjugation-style sanity: appending σᵢσᵢ⁻¹ is a no-op
            letters.extend_from_slice(&[2, -2]);
            assert_eq!(v, fy_fixed_points(&g, &BraidWord::new(3, letters).unwrap()).unwrap());
        }
    }

    #[test]
    fn oracle_matches_braided_dim() {
        let fq = FieldDescriptor::Rationals;
        for name in ["C2", "S3"] {
            let g = make_group(name).unwrap();
            let a = group_algebra(&g, fq);
            let dq = build_double(&a).unwrap();
            let schr = schrodinger(&dq).unwrap();
            for text in ["1:", "2: 1", "2: 1 1", "3: 1 -2", "2: -1 -1 -1"] {
                let b = parse_braid(text).unwrap();
                let expect = fq.from_i64(fy_fixed_points(&g, &b).unwrap() as i64);
                for side in [Side::Left, Side::Right] {
                    let v = braided_dim(&dq, &schr, &b, side, Orientation::Standard).unwrap();
                    assert_eq!(v, expect, "{name} {text}");
                }
            }
        }
    }

    #[test]
    fn guard_triggers() {
        let g = make_group("S4").unwrap();
        let b = BraidWord::new(6, vec![1]).unwrap();
        assert!(matches!(
            fy_fixed_points(&g, &b),
            Err(Error::EnumerationTooLarge(_))
        ));
    }
}

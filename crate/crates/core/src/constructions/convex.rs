//! Points in strictly convex position spanning `i·3^(i−1)` equal-area
//! triangles.
//!
//! The circle rotations of the classical construction are replaced by
//! translations along the parabola `y = x²`: `t ↦ t + s` acts on the plane as
//! the shear `(x, y) ↦ (x + s, y + 2sx + s²)`, which preserves areas and
//! keeps every point on the (strictly convex) parabola. A triangle with
//! parameters `t, t + x, t + x + y` has doubled area `x·y·(x + y)`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::json;

use super::{params, product_triples, rng, CertKind, Certificate, GeneratedSet, Geometry, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::exact::{int, AreaKey, Point2, Rat};

/// Coprime gaps `(x, y)` and scale `c` with `x·y·(x+y) = 903210·c³`; after
/// dividing by `c` every pair spans doubled area 903210.
pub const GAP_PAIRS: [(i64, i64, i64); 12] = [
    (6, 385, 1),
    (11, 805, 2),
    (15, 238, 1),
    (23, 187, 1),
    (46, 119, 1),
    (51, 110, 1),
    (55, 336, 2),
    (69, 85, 1),
    (77, 1173, 5),
    (112, 1265, 6),
    (119, 640, 4),
    (368, 567, 6),
];

pub const COMMON_DOUBLED_AREA: i64 = 903_210;

const MAX_LEVELS: u32 = 8;
const MAX_ATTEMPTS: usize = 64;

/// Builds `3^i` parameters as sums `Σ d_j` with `d_j ∈ {0, a_j, b_j}`; index
/// `Σ digit_j·3^j` matches [`product_triples`].
fn level_sums(steps: &[(Rat, Rat)]) -> Vec<Rat> {
    let mut ts = vec![int(0)];
    for (a, b) in steps {
        let mut next = Vec::with_capacity(ts.len() * 3);
        for d in [int(0), a.clone(), b.clone()] {
            next.extend(ts.iter().map(|t| t + &d));
        }
        ts = next;
    }
    ts
}

pub fn gen_convex_unit(i: u32) -> Result<GeneratedSet> {
    gen_convex_unit_seeded(i, DEFAULT_SEED)
}

/// `3^i` points on `y = x²` with a certificate of `i·3^(i−1)` triangles of
/// doubled area 903210. The seed picks which gap pairs are used, their
/// order and orientation; collisions among the parameter sums trigger a
/// retry.
pub fn gen_convex_unit_seeded(i: u32, seed: u64) -> Result<GeneratedSet> {
    if !(1..=MAX_LEVELS).contains(&i) {
        return Err(Error::InvalidParam(format!("convex-unit level must be in 1..={MAX_LEVELS}, got {i}")));
    }
    let mut r = rng(seed);
    for attempt in 0..MAX_ATTEMPTS {
        let mut pairs = GAP_PAIRS.to_vec();
        pairs.shuffle(&mut r);
        let steps: Vec<(Rat, Rat)> = pairs[..i as usize]
            .iter()
            .map(|&(x, y, c)| {
                let (x, y) = if r.gen_bool(0.5) { (x, y) } else { (y, x) };
                let c = int(c);
                (int(x) / &c, int(x + y) / &c)
            })
            .collect();
        let ts = level_sums(&steps);
        let mut sorted = ts.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let pts: Vec<Point2> = ts.iter().map(|t| Point2::new(t.clone(), t * t)).collect();
        let cert = Certificate {
            kind: CertKind::EqualArea,
            target_key: Some(AreaKey(int(COMMON_DOUBLED_AREA))),
            triples: product_triples(i),
            origin: None,
            provenance: "translated copies of equal-area parabola triangles, one level per gap pair".into(),
            params: Default::default(),
            seed: Some(seed),
        };
        let gaps: Vec<String> = steps.iter().map(|(a, b)| format!("{a},{b}")).collect();
        return Ok(GeneratedSet::new(
            Geometry::Plane(pts),
            Some(cert),
            params(&[
                ("construction", json!("convex-unit")),
                ("i", json!(i)),
                ("seed", json!(seed)),
                ("attempt", json!(attempt)),
                ("steps", json!(gaps)),
            ]),
        ));
    }
    Err(Error::ConstructionFailed { seed, reason: "every attempt produced colliding parameter sums".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_pairs_share_one_area() {
        for (x, y, c) in GAP_PAIRS {
            assert_eq!(x * y * (x + y), COMMON_DOUBLED_AREA * c * c * c, "pair ({x}, {y})");
            assert_eq!(num_integer::gcd(x, y), 1);
        }
    }

    #[test]
    fn level_sizes() {
        for i in 1..=3 {
            let g = gen_convex_unit(i).unwrap();
            assert_eq!(g.geometry.len(), 3usize.pow(i));
            assert_eq!(g.cert_len(), i as usize * 3usize.pow(i - 1));
        }
        assert!(gen_convex_unit(0).is_err());
        assert!(gen_convex_unit(9).is_err());
    }
}

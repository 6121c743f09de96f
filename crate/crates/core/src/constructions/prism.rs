//! Points on the parallel edges of a right prism.
//!
//! The triangle `A=(1,0,0)`, `B=(0,1,0)`, `C=(0,0,1)` is exactly equilateral
//! (all sides √2) and lies in the plane `x+y+z=1`, so prism edges run along
//! `(1,1,1)`. The rhombus variant adds `D=(1,1,−1)`, the mirror of `C`
//! across `AB`.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{params, CertKind, Certificate, GeneratedSet, Geometry};
use crate::error::{Error, Result};
use crate::exact::{frac, int, AreaKey, Point3, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrismShape {
    Equilateral,
    Rhombus,
}

/// Step between consecutive points along an edge, as a multiple of (1,1,1).
const STEP: (i64, i64) = (1, 4);

pub fn gen_prism(n: usize, shape: PrismShape) -> Result<GeneratedSet> {
    let (bases, counts): (Vec<Point3>, Vec<usize>) = match shape {
        PrismShape::Equilateral => {
            if n == 0 || n % 3 != 0 {
                return Err(Error::BadN { n, reason: "equilateral prism needs n divisible by 3".into() });
            }
            (vec![Point3::from_ints(1, 0, 0), Point3::from_ints(0, 1, 0), Point3::from_ints(0, 0, 1)], vec![n / 3; 3])
        }
        PrismShape::Rhombus => {
            if n == 0 || n % 6 != 0 {
                return Err(Error::BadN { n, reason: "rhombus prism needs n divisible by 6".into() });
            }
            (
                vec![Point3::from_ints(1, 0, 0), Point3::from_ints(0, 1, 0), Point3::from_ints(0, 0, 1), Point3::from_ints(1, 1, -1)],
                vec![n / 3, n / 3, n / 6, n / 6],
            )
        }
    };
    if counts.iter().any(|&c| c < 2) {
        return Err(Error::BadN { n, reason: "every edge needs at least two points".into() });
    }
    let step: Rat = frac(STEP.0, STEP.1);
    let dir = Point3::from_ints(1, 1, 1).scale(&step);
    let mut pts = Vec::with_capacity(n);
    let mut line_of = Vec::with_capacity(n);
    let mut first = Vec::new();
    for (l, (b, &c)) in bases.iter().zip(&counts).enumerate() {
        first.push(pts.len());
        for j in 0..c {
            pts.push(b.add(&dir.scale(&int(j as i64))));
            line_of.push(l);
        }
    }
    // edges at distance √2 are the base sides; in the rhombus C and D are √6 apart
    let adjacent = |l1: usize, l2: usize| l1 != l2 && !(shape == PrismShape::Rhombus && l1 + l2 == 5);
    let mut triples = Vec::new();
    for (l, &c) in counts.iter().enumerate() {
        for j in 0..c - 1 {
            let (p, q) = (first[l] + j, first[l] + j + 1);
            for (r, &lr) in line_of.iter().enumerate() {
                if adjacent(l, lr) {
                    triples.push(vec![p, q, r]);
                }
            }
        }
    }
    // 4A² = |step·(1,1,1)|² · 2
    let key = AreaKey(&step * &step * int(3) * int(2));
    let cert = Certificate {
        kind: CertKind::MinArea,
        target_key: Some(key),
        triples,
        origin: None,
        provenance: "consecutive pair on one edge with any point on an edge at base distance √2".into(),
        params: Default::default(),
        seed: None,
    };
    let shape_name = match shape {
        PrismShape::Equilateral => "equilateral",
        PrismShape::Rhombus => "rhombus",
    };
    Ok(GeneratedSet::new(
        Geometry::Space(pts),
        Some(cert),
        params(&[("construction", json!("prism")), ("n", json!(n)), ("shape", json!(shape_name)), ("per_edge", json!(counts))]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_sizes_follow_closed_forms() {
        for n in [6usize, 9, 12, 15] {
            let m = n / 3;
            assert_eq!(gen_prism(n, PrismShape::Equilateral).unwrap().cert_len(), 3 * (m - 1) * 2 * m);
        }
        for n in [12usize, 24] {
            let want = 2 * (n / 3 - 1) * (2 * n / 3) + 2 * (n / 6 - 1) * (2 * n / 3);
            assert_eq!(gen_prism(n, PrismShape::Rhombus).unwrap().cert_len(), want);
        }
        assert!(matches!(gen_prism(7, PrismShape::Equilateral), Err(Error::BadN { .. })));
        assert!(matches!(gen_prism(9, PrismShape::Rhombus), Err(Error::BadN { .. })));
        assert!(gen_prism(3, PrismShape::Equilateral).is_err());
    }
}

//! Perturbed Minkowski sums with no three collinear points and
//! `k·3^(k−1)` triangles of minimum area.
//!
//! Each level contributes `{0, a_j, b_j}` where `b_j` is a Pythagorean unit
//! vector and `a_j` is `λ·b_j` turned by a small rational rotation. Before
//! the turn the three points of a level are collinear; after it they span
//! doubled area `λ·sin δ`, the same for every level. The rotation parameter
//! is halved until a full census confirms no collinear triple and that
//! these are exactly the minimum-area triangles.

use num_traits::Signed;
use rand::Rng;
use serde_json::json;

use super::{params, product_triples, rng, CertKind, Certificate, GeneratedSet, Geometry, DEFAULT_SEED};
use crate::census::{area_census, CensusOptions};
use crate::error::{Error, Result};
use crate::exact::{frac, int, AreaKey, Point2, Rat};

const MAX_LEVELS: u32 = 8;
const DIRECTION_DRAWS: usize = 8;
const HALVINGS: usize = 24;

/// Rational point on the unit circle from the half-angle tangent `t`.
fn unit_from_tan(t: &Rat) -> (Rat, Rat) {
    let d = int(1) + t * t;
    ((int(1) - t * t) / &d, (int(2) * t) / &d)
}

fn rotate(v: &Point2, t: &Rat) -> Point2 {
    let (c, s) = unit_from_tan(t);
    Point2::new(&c * &v.x - &s * &v.y, &s * &v.x + &c * &v.y)
}

fn sums(steps: &[(Point2, Point2)]) -> Vec<Point2> {
    let mut pts = vec![Point2::from_ints(0, 0)];
    for (a, b) in steps {
        let zero = Point2::from_ints(0, 0);
        let mut next = Vec::with_capacity(pts.len() * 3);
        for d in [&zero, a, b] {
            next.extend(pts.iter().map(|p| p.add(d)));
        }
        pts = next;
    }
    pts
}

/// Distinct Pythagorean unit directions, pairwise nonparallel.
fn directions(k: usize, r: &mut impl Rng) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(k);
    while out.len() < k {
        let p = r.gen_range(1..40i64);
        let q = r.gen_range(1..40i64);
        let (x, y) = unit_from_tan(&frac(p, q));
        let v = Point2::new(x, y);
        if out.iter().all(|u| u.cross(&v) != int(0)) {
            out.push(v);
        }
    }
    out
}

pub fn gen_perturbed_minkowski(k: u32) -> Result<GeneratedSet> {
    gen_perturbed_minkowski_seeded(k, DEFAULT_SEED)
}

pub fn gen_perturbed_minkowski_seeded(k: u32, seed: u64) -> Result<GeneratedSet> {
    if !(1..=MAX_LEVELS).contains(&k) {
        return Err(Error::InvalidParam(format!("perturbed-minkowski k must be in 1..={MAX_LEVELS}, got {k}")));
    }
    let mut r = rng(seed);
    let want = k as usize * 3usize.pow(k - 1);
    for draw in 0..DIRECTION_DRAWS {
        let bs = directions(k as usize, &mut r);
        let lambda = frac(r.gen_range(1..9), 10) + frac(1, r.gen_range(50..100));
        let mut t = frac(1, 8);
        for halving in 0..HALVINGS {
            let steps: Vec<(Point2, Point2)> = bs.iter().map(|b| (rotate(&b.scale(&lambda), &t), b.clone())).collect();
            let pts = sums(&steps);
            let key = AreaKey(steps[0].0.cross(&steps[0].1).abs());
            let Ok(c) = area_census(&pts, &CensusOptions::default()) else {
                t /= int(2);
                continue;
            };
            let ok = c.degenerate_count == 0 && c.min_class().is_some_and(|(mk, mc)| mk == &key && mc.count as usize == want);
            if !ok {
                t /= int(2);
                continue;
            }
            let cert = Certificate {
                kind: CertKind::MinArea,
                target_key: Some(key),
                triples: product_triples(k),
                origin: None,
                provenance: "levels {0, a_j, b_j} with a_j a rotated multiple of unit b_j".into(),
                params: Default::default(),
                seed: Some(seed),
            };
            let dirs: Vec<String> = bs.iter().map(|b| format!("{},{}", b.x, b.y)).collect();
            return Ok(GeneratedSet::new(
                Geometry::Plane(pts),
                Some(cert),
                params(&[
                    ("construction", json!("perturbed-minkowski")),
                    ("k", json!(k)),
                    ("seed", json!(seed)),
                    ("lambda", json!(lambda.to_string())),
                    ("rotation_tan_half", json!(t.to_string())),
                    ("draw", json!(draw)),
                    ("halvings", json!(halving)),
                    ("directions", json!(dirs)),
                ]),
            ));
        }
    }
    Err(Error::ConstructionFailed { seed, reason: format!("no admissible rotation after {DIRECTION_DRAWS} draws x {HALVINGS} halvings") })
}

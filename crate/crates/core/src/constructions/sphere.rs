//! Origin plus two clusters of rational unit vectors with exact orthogonal
//! pairs.
//!
//! `S₁` holds `m` points `(cos θᵢ, 0, sin θᵢ)` near `e₁`. `S₂` holds `e₂`,
//! orthogonal to all of `S₁`, and `m − 1` points `cos β·e₂ + sin β·wᵢ` with
//! `wᵢ = (−sin θᵢ, 0, cos θᵢ)`, each orthogonal to exactly one `sᵢ`. All
//! angles come from rational half-angle tangents, so every coordinate is
//! rational and every point lies exactly on the unit sphere.

use serde_json::json;

use super::{params, CertKind, Certificate, GeneratedSet, Geometry};
use crate::error::{Error, Result};
use crate::exact::{frac, int, AreaKey, Point3, Rat};

fn cos_sin(t: &Rat) -> (Rat, Rat) {
    let d = int(1) + t * t;
    ((int(1) - t * t) / &d, (int(2) * t) / &d)
}

/// Index 0 is the origin, then `S₁` (`m` points), then `S₂` (`m` points).
/// The certificate lists all `2m − 1` orthogonal pairs about the origin.
pub fn gen_sphere_orthogonal(m: usize) -> Result<GeneratedSet> {
    if m < 2 {
        return Err(Error::InvalidParam(format!("sphere scaffold needs m >= 2, got {m}")));
    }
    let spread = int(64 * m as i64);
    let thetas: Vec<(Rat, Rat)> = (0..m).map(|i| cos_sin(&(int(i as i64) / &spread))).collect();
    let (cb, sb) = cos_sin(&frac(1, 32));
    let mut pts = vec![Point3::zero()];
    for (c, s) in &thetas {
        pts.push(Point3::new(c.clone(), int(0), s.clone()));
    }
    let e2_index = pts.len();
    pts.push(Point3::from_ints(0, 1, 0));
    for (c, s) in thetas.iter().take(m - 1) {
        pts.push(Point3::new(-(&sb * s), cb.clone(), &sb * c));
    }
    let mut pairs = Vec::new();
    for i in 0..m {
        pairs.push(vec![1 + i, e2_index]);
    }
    for i in 0..m - 1 {
        pairs.push(vec![1 + i, e2_index + 1 + i]);
    }
    let cert = Certificate {
        kind: CertKind::OrthogonalPairs,
        target_key: Some(AreaKey(int(1))),
        triples: pairs,
        origin: Some(0),
        provenance: "e2 against every point of S1, and each rotated w_i against its s_i".into(),
        params: Default::default(),
        seed: None,
    };
    Ok(GeneratedSet::new(
        Geometry::Space(pts),
        Some(cert),
        params(&[("construction", json!("sphere-orthogonal")), ("m", json!(m))]),
    ))
}

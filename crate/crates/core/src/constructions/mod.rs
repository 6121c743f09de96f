//! Generators for the lower-bound constructions, each returning an exact
//! point (or line) set and a certificate that is re-verified from scratch.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::census::{line_triangle, min_nonzero_area};
use crate::error::{Error, Result};
use crate::exact::{AreaKey, Geom, Line2, Point2, Point3};

mod convex;
mod grid;
mod lines;
mod minkowski;
mod prism;
mod sphere;
mod two_rows;

pub use convex::{gen_convex_unit, gen_convex_unit_seeded, GAP_PAIRS};
pub use grid::{gen_erdos_purdy_lattice, gen_grid, grid_min_area_triples};
pub use lines::{gen_great_circle_config, gen_line_families, GreatCircleConfig};
pub use minkowski::{gen_perturbed_minkowski, gen_perturbed_minkowski_seeded};
pub use prism::{gen_prism, PrismShape};
pub use sphere::gen_sphere_orthogonal;
pub use two_rows::{gen_two_rows, TwoRowsMode, ACUTE_ROW_HEIGHT};

pub const DEFAULT_SEED: u64 = 0x7a11_2024;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    EqualArea,
    MinArea,
    CollinearTriples,
    OrthogonalPairs,
}

/// Triangles (or, for orthogonal pairs, point pairs) guaranteed by a
/// generator. `origin` is the apex index for orthogonal pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertKind,
    pub target_key: Option<AreaKey>,
    pub triples: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<usize>,
    #[serde(default)]
    pub provenance: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }
}

/// Output geometry of a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geometry {
    Plane(Vec<Point2>),
    Space(Vec<Point3>),
    Lines(Vec<Line2>),
}

impl Geometry {
    pub fn len(&self) -> usize {
        match self {
            Geometry::Plane(p) => p.len(),
            Geometry::Space(p) => p.len(),
            Geometry::Lines(l) => l.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedSet {
    pub geometry: Geometry,
    pub certificate: Option<Certificate>,
    pub params: BTreeMap<String, Value>,
}

impl GeneratedSet {
    pub(crate) fn new(geometry: Geometry, certificate: Option<Certificate>, params: BTreeMap<String, Value>) -> Self {
        let certificate = certificate.map(|mut c| {
            c.params = params.clone();
            c
        });
        GeneratedSet { geometry, certificate, params }
    }

    pub fn points2(&self) -> Option<&[Point2]> {
        match &self.geometry {
            Geometry::Plane(p) => Some(p),
            _ => None,
        }
    }

    pub fn points3(&self) -> Option<&[Point3]> {
        match &self.geometry {
            Geometry::Space(p) => Some(p),
            _ => None,
        }
    }

    pub fn lines(&self) -> Option<&[Line2]> {
        match &self.geometry {
            Geometry::Lines(l) => Some(l),
            _ => None,
        }
    }

    pub fn cert_len(&self) -> usize {
        self.certificate.as_ref().map_or(0, |c| c.len())
    }
}

pub(crate) fn params(kv: &[(&str, Value)]) -> BTreeMap<String, Value> {
    kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Outcome of re-checking a certificate against its geometry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertCheck {
    pub checked: usize,
    /// For `min_area` certificates: whether the target equals the global minimum.
    pub target_is_global_min: Option<bool>,
    /// Global count of the target class, when it was computed.
    pub census_count: Option<u64>,
}

fn check_tuple(t: &[usize], arity: usize, n: usize) -> Result<()> {
    if t.len() != arity || t.iter().any(|&i| i >= n) {
        return Err(Error::AuditFailed(format!("malformed certificate entry {t:?}")));
    }
    let set: BTreeSet<_> = t.iter().collect();
    if set.len() != arity {
        return Err(Error::AuditFailed(format!("repeated index in certificate entry {t:?}")));
    }
    Ok(())
}

fn check_unique(c: &Certificate) -> Result<()> {
    let mut seen = BTreeSet::new();
    for t in &c.triples {
        let mut s = t.clone();
        s.sort_unstable();
        if !seen.insert(s) {
            return Err(Error::AuditFailed(format!("certificate lists {t:?} twice")));
        }
    }
    Ok(())
}

fn verify_area_cert<P: Geom>(pts: &[P], c: &Certificate) -> Result<CertCheck> {
    check_unique(c)?;
    let target = c.target_key.clone();
    for t in &c.triples {
        check_tuple(t, 3, pts.len())?;
        let key = AreaKey(P::area_key(&pts[t[0]], &pts[t[1]], &pts[t[2]]));
        match c.kind {
            CertKind::CollinearTriples => {
                if !key.is_degenerate() {
                    return Err(Error::AuditFailed(format!("triple {t:?} is not collinear")));
                }
            }
            _ => {
                let want = target.as_ref().ok_or_else(|| Error::AuditFailed("missing target_key".into()))?;
                if &key != want {
                    return Err(Error::AuditFailed(format!("triple {t:?} has key {key}, expected {want}")));
                }
            }
        }
    }
    let mut out = CertCheck { checked: c.triples.len(), target_is_global_min: None, census_count: None };
    if c.kind == CertKind::MinArea {
        let m = min_nonzero_area(pts)?;
        let is_min = Some(&m.key) == target.as_ref();
        out.target_is_global_min = Some(is_min);
        out.census_count = Some(m.count);
        if !is_min {
            return Err(Error::AuditFailed(format!(
                "target key {} is not the global minimum {}",
                target.map(|k| k.to_string()).unwrap_or_default(),
                m.key
            )));
        }
    }
    Ok(out)
}

/// Re-verifies a certificate for a point set: equal keys, collinearity,
/// orthogonality about the origin index, and global minimality for
/// `min_area`.
pub fn verify_certificate(geometry: &Geometry, c: &Certificate) -> Result<CertCheck> {
    match (geometry, c.kind) {
        (Geometry::Space(pts), CertKind::OrthogonalPairs) => {
            check_unique(c)?;
            let o = c.origin.ok_or_else(|| Error::AuditFailed("orthogonal pairs need an origin".into()))?;
            if o >= pts.len() {
                return Err(Error::AuditFailed("origin index out of range".into()));
            }
            for t in &c.triples {
                check_tuple(t, 2, pts.len())?;
                if t.contains(&o) {
                    return Err(Error::AuditFailed(format!("pair {t:?} contains the origin")));
                }
                let d = pts[t[0]].sub(&pts[o]).dot(&pts[t[1]].sub(&pts[o]));
                if !d.is_zero() {
                    return Err(Error::AuditFailed(format!("pair {t:?} is not orthogonal")));
                }
            }
            Ok(CertCheck { checked: c.triples.len(), target_is_global_min: None, census_count: None })
        }
        (_, CertKind::OrthogonalPairs) => Err(Error::AuditFailed("orthogonal pairs need a 3D point set".into())),
        (Geometry::Plane(pts), _) => verify_area_cert(pts, c),
        (Geometry::Space(pts), _) => verify_area_cert(pts, c),
        (Geometry::Lines(lines), _) => {
            check_unique(c)?;
            let want = c.target_key.as_ref().ok_or_else(|| Error::AuditFailed("missing target_key".into()))?;
            for t in &c.triples {
                check_tuple(t, 3, lines.len())?;
                let tri = line_triangle(&lines[t[0]], &lines[t[1]], &lines[t[2]])
                    .ok_or_else(|| Error::AuditFailed(format!("lines {t:?} do not bound a triangle")))?;
                let key = AreaKey(Point2::area_key(&tri[0], &tri[1], &tri[2]));
                if &key != want {
                    return Err(Error::AuditFailed(format!("lines {t:?} bound key {key}, expected {want}")));
                }
            }
            Ok(CertCheck { checked: c.triples.len(), target_is_global_min: None, census_count: None })
        }
    }
}

/// Index triples of the "one level varies" triangles in a mixed radix-3
/// product set with `levels` levels: for level `j`, the three points that
/// agree everywhere except at digit `j`.
pub(crate) fn product_triples(levels: u32) -> Vec<Vec<usize>> {
    let n = 3usize.pow(levels);
    let mut out = Vec::new();
    for j in 0..levels {
        let step = 3usize.pow(j);
        for idx in 0..n {
            if (idx / step) % 3 == 0 {
                out.push(vec![idx, idx + step, idx + 2 * step]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_triples_count() {
        for i in 1..=5u32 {
            assert_eq!(product_triples(i).len(), i as usize * 3usize.pow(i - 1));
        }
    }
}

//! Three parallel line families with many unit-area triangles, and the
//! projective great-circle configuration built from a grid's rich lines.

use serde_json::json;

use super::{params, CertKind, Certificate, GeneratedSet, Geometry};
use crate::error::{Error, Result};
use crate::exact::{int, AreaKey, Line2, Point2, Point3};
use crate::incidence::{rich_lines, Cylinder3};

/// Lines `x = a`, `y = b` (`a, b < m`) and `x + y = c` for `m` consecutive
/// values of `c` starting at `⌊(m−1)/2⌋`. The triangle cut by `x=a`, `y=b`,
/// `x+y=c` has doubled area `(c − a − b)²`, so the certificate lists the
/// triples with `|c − a − b| = 1`.
pub fn gen_line_families(m: usize) -> Result<GeneratedSet> {
    if m < 2 {
        return Err(Error::InvalidParam(format!("line families need m >= 2, got {m}")));
    }
    let mi = m as i64;
    let c0 = (mi - 1) / 2;
    let mut lines = Vec::with_capacity(3 * m);
    for a in 0..mi {
        lines.push(Line2::from_ints(1, 0, -a)?);
    }
    for b in 0..mi {
        lines.push(Line2::from_ints(0, 1, -b)?);
    }
    for c in c0..c0 + mi {
        lines.push(Line2::from_ints(1, 1, -c)?);
    }
    let mut triples = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for k in 0..m {
                let c = c0 + k as i64;
                if (c - a as i64 - b as i64).abs() == 1 {
                    triples.push(vec![a, m + b, 2 * m + k]);
                }
            }
        }
    }
    let cert = Certificate {
        kind: CertKind::EqualArea,
        target_key: Some(AreaKey(int(1))),
        triples,
        origin: None,
        provenance: "x=a, y=b, x+y=c with |c-a-b| = 1".into(),
        params: Default::default(),
        seed: None,
    };
    Ok(GeneratedSet::new(
        Geometry::Lines(lines),
        Some(cert),
        params(&[("construction", json!("line-families")), ("m", json!(m)), ("c_offset", json!(c0))]),
    ))
}

/// Grid points `(i, j)` lifted to `(i, j, 1)` and one cylinder per `g`-rich
/// line `ax + by + c = 0`, with axis `(a, b, c)` through the origin. Under
/// projective membership a lifted point lies on the cylinder exactly when
/// its direction is orthogonal to the axis, which is planar incidence.
#[derive(Clone, Debug)]
pub struct GreatCircleConfig {
    pub points: Vec<Point3>,
    pub lines: Vec<Line2>,
    pub cylinders: Vec<Cylinder3>,
    pub planar_incidences: u64,
    pub projective: bool,
}

pub fn gen_great_circle_config(g: usize) -> Result<GreatCircleConfig> {
    if g < 2 {
        return Err(Error::InvalidParam(format!("great-circle grid side must be >= 2, got {g}")));
    }
    let mut grid = Vec::with_capacity(g * g);
    for i in 0..g as i64 {
        for j in 0..g as i64 {
            grid.push(Point2::from_ints(i, j));
        }
    }
    let rich = rich_lines(&grid, g)?;
    let points = grid.iter().map(|p| Point3::new(p.x.clone(), p.y.clone(), int(1))).collect();
    let planar_incidences = rich.iter().map(|(_, c)| *c as u64).sum();
    let mut lines = Vec::with_capacity(rich.len());
    let mut cylinders = Vec::with_capacity(rich.len());
    for (l, _) in rich {
        let axis = Point3::new(l.a.clone(), l.b.clone(), l.c.clone());
        cylinders.push(Cylinder3::new(&Point3::zero(), &axis, int(1))?);
        lines.push(l);
    }
    Ok(GreatCircleConfig { points, lines, cylinders, planar_incidences, projective: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{point_cylinder_incidences_with, Membership};

    #[test]
    fn line_family_counts() {
        let want = [4usize, 12, 22, 36, 52];
        for (m, w) in (2..=6).zip(want) {
            assert_eq!(gen_line_families(m).unwrap().cert_len(), w, "m = {m}");
        }
    }

    #[test]
    fn great_circles_preserve_incidences() {
        let c = gen_great_circle_config(3).unwrap();
        assert_eq!(c.cylinders.len(), 8);
        assert_eq!(c.planar_incidences, 24);
        let r = point_cylinder_incidences_with(&c.points, &c.cylinders, Membership::Projective);
        assert_eq!(r.total, 24);
    }
}

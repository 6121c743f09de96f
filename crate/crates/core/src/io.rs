//! Text formats: point files, line files and cylinder lists.
//!
//! A point file starts with `dim=2` or `dim=3`, then one point per line with
//! integer or `p/q` coordinates. A line file starts with `lines` and holds
//! `a b c` rows for `ax + by + c = 0`. `#` starts a comment everywhere.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::constructions::Geometry;
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, parse_rat, Line2, Point2, Point3, Rat};
use crate::incidence::Cylinder3;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_row(line_no: usize, row: &str, arity: usize) -> Result<Vec<Rat>> {
    let fields: Vec<&str> = row.split_whitespace().collect();
    if fields.len() != arity {
        return Err(Error::Parse(format!("line {line_no}: expected {arity} fields, got {}", fields.len())));
    }
    fields
        .iter()
        .map(|f| parse_rat(f).map_err(|e| Error::Parse(format!("line {line_no}: {e}"))))
        .collect()
}

fn reject_duplicates<T: std::hash::Hash + Eq>(items: &[T], dup: impl Fn(usize, usize) -> Error) -> Result<()> {
    let mut seen: HashMap<&T, usize> = HashMap::new();
    for (i, x) in items.iter().enumerate() {
        if let Some(&j) = seen.get(x) {
            return Err(dup(j, i));
        }
        seen.insert(x, i);
    }
    Ok(())
}

/// Parses a point file or a line file.
pub fn parse_geometry(text: &str) -> Result<Geometry> {
    let mut rows = content_lines(text);
    let (hl, header) = rows.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let header: String = header.split_whitespace().collect();
    match header.as_str() {
        "dim=2" => {
            let pts: Vec<Point2> = rows
                .map(|(n, r)| parse_row(n, r, 2).map(|v| Point2::new(v[0].clone(), v[1].clone())))
                .collect::<Result<_>>()?;
            reject_duplicates(&pts, Error::DuplicatePoints)?;
            Ok(Geometry::Plane(pts))
        }
        "dim=3" => {
            let pts: Vec<Point3> = rows
                .map(|(n, r)| parse_row(n, r, 3).map(|v| Point3::new(v[0].clone(), v[1].clone(), v[2].clone())))
                .collect::<Result<_>>()?;
            reject_duplicates(&pts, Error::DuplicatePoints)?;
            Ok(Geometry::Space(pts))
        }
        "lines" => {
            let lines: Vec<Line2> = rows
                .map(|(n, r)| {
                    let v = parse_row(n, r, 3)?;
                    Line2::new(v[0].clone(), v[1].clone(), v[2].clone())
                        .map_err(|_| Error::Parse(format!("line {n}: a and b are both zero")))
                })
                .collect::<Result<_>>()?;
            reject_duplicates(&lines, Error::DuplicateLines)?;
            Ok(Geometry::Lines(lines))
        }
        other => Err(Error::Parse(format!("line {hl}: expected header dim=2, dim=3 or lines, got {other:?}"))),
    }
}

pub fn read_geometry(path: &Path) -> Result<Geometry> {
    parse_geometry(&std::fs::read_to_string(path)?)
}

/// Canonical text: header plus one row per item, rationals in lowest terms.
pub fn format_geometry(g: &Geometry) -> String {
    let mut out = String::new();
    match g {
        Geometry::Plane(pts) => {
            out.push_str("dim=2\n");
            for p in pts {
                out.push_str(&format!("{} {}\n", fmt_rat(&p.x), fmt_rat(&p.y)));
            }
        }
        Geometry::Space(pts) => {
            out.push_str("dim=3\n");
            for p in pts {
                out.push_str(&format!("{} {} {}\n", fmt_rat(&p.x), fmt_rat(&p.y), fmt_rat(&p.z)));
            }
        }
        Geometry::Lines(lines) => {
            out.push_str("lines\n");
            for l in lines {
                out.push_str(&format!("{} {} {}\n", fmt_rat(&l.a), fmt_rat(&l.b), fmt_rat(&l.c)));
            }
        }
    }
    out
}

/// SHA-256 of the canonical text, hex encoded.
pub fn digest(g: &Geometry) -> String {
    hex::encode(Sha256::digest(format_geometry(g).as_bytes()))
}

/// JSON form of a cylinder: rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylinderSpec {
    pub point: [String; 3],
    pub dir: [String; 3],
    pub radius_sq: String,
}

impl CylinderSpec {
    pub fn to_cylinder(&self) -> Result<Cylinder3> {
        let p = self.point.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        let d = self.dir.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        let point = Point3::new(p[0].clone(), p[1].clone(), p[2].clone());
        let dir = Point3::new(d[0].clone(), d[1].clone(), d[2].clone());
        Cylinder3::new(&point, &dir, parse_rat(&self.radius_sq)?).map_err(|e| Error::Parse(format!("bad cylinder: {e}")))
    }

    pub fn from_cylinder(c: &Cylinder3) -> CylinderSpec {
        let f = |p: &Point3| [fmt_rat(&p.x), fmt_rat(&p.y), fmt_rat(&p.z)];
        CylinderSpec { point: f(&c.axis_point), dir: f(&c.axis_dir), radius_sq: fmt_rat(&c.radius_sq) }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CylinderDoc {
    List(Vec<CylinderSpec>),
    Wrapped { cylinders: Vec<CylinderSpec> },
}

/// Accepts either a JSON array of cylinders or `{"cylinders": [...]}`.
pub fn parse_cylinders(text: &str) -> Result<Vec<Cylinder3>> {
    let doc: CylinderDoc = serde_json::from_str(text).map_err(|e| Error::Parse(format!("cylinder JSON: {e}")))?;
    let specs = match doc {
        CylinderDoc::List(v) | CylinderDoc::Wrapped { cylinders: v } => v,
    };
    specs.iter().map(CylinderSpec::to_cylinder).collect()
}

pub fn read_cylinders(path: &Path) -> Result<Vec<Cylinder3>> {
    parse_cylinders(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn point_file_roundtrip() {
        let text = "# a comment\ndim=2\n0 0\n1/2 -3   # trailing\n\n4/2 6/4\n";
        let g = parse_geometry(text).unwrap();
        let Geometry::Plane(pts) = &g else { panic!() };
        assert_eq!(pts[1], Point2::new(frac(1, 2), frac(-3, 1)));
        assert_eq!(pts[2], Point2::new(frac(2, 1), frac(3, 2)));
        assert_eq!(format_geometry(&g), "dim=2\n0 0\n1/2 -3\n2 3/2\n");
        assert_eq!(parse_geometry(&format_geometry(&g)).unwrap(), g);
        assert_eq!(digest(&g).len(), 64);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_geometry("dim=2\n0 0\n0/5 0\n"), Err(Error::DuplicatePoints(0, 1))));
        assert!(matches!(parse_geometry("dim=3\n0 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_geometry("dim=4\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_geometry("dim=2\n1/0 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_geometry("lines\n1 0 0\n2 0 0\n"), Err(Error::DuplicateLines(0, 1))));
        assert!(matches!(parse_geometry(""), Err(Error::Parse(_))));
    }

    #[test]
    fn cylinders_json() {
        let t = r#"[{"point":["0","0","0"],"dir":["2","0","0"],"radius_sq":"1/4"}]"#;
        let c = parse_cylinders(t).unwrap();
        assert_eq!(c[0].axis_dir, Point3::from_ints(1, 0, 0));
        let w = format!("{{\"cylinders\": {t}}}");
        assert_eq!(parse_cylinders(&w).unwrap(), c);
        assert_eq!(CylinderSpec::from_cylinder(&c[0]).to_cylinder().unwrap(), c[0]);
    }
}

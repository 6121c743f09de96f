//! Cylinders around connecting lines and point–cylinder incidences.
//!
//! For a unit-area triangle `pqr` in space, `r` lies on the cylinder around
//! line `pq` with squared radius `4/|pq|²`, so counting unit-area triangles
//! reduces to counting points on such cylinders.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fmt_rat, int, primitive_ints, Point3, Rat};

/// Infinite circular cylinder. The direction is a primitive integer vector
/// with positive first nonzero entry and the axis point is the point of the
/// axis closest to the origin, so equal cylinders compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cylinder3 {
    pub axis_point: Point3,
    pub axis_dir: Point3,
    pub radius_sq: Rat,
}

/// A line in space in the same canonical form as a cylinder axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisLine {
    pub point: Point3,
    pub dir: Point3,
}

fn canonical_dir(d: &Point3) -> Result<Point3> {
    if d.is_zero() {
        return Err(Error::Degenerate);
    }
    let v = primitive_ints(&[d.x.clone(), d.y.clone(), d.z.clone()]);
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let s = if neg { -Rat::one() } else { Rat::one() };
    let mut it = v.into_iter().map(|x| Rat::from_integer(x) * &s);
    Ok(Point3::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap()))
}

impl AxisLine {
    pub fn new(point: &Point3, dir: &Point3) -> Result<AxisLine> {
        let dir = canonical_dir(dir)?;
        let t = point.dot(&dir) / dir.norm_sq();
        Ok(AxisLine { point: point.sub(&dir.scale(&t)), dir })
    }

    pub fn through(a: &Point3, b: &Point3) -> Result<AxisLine> {
        AxisLine::new(a, &b.sub(a))
    }

    pub fn dist_sq(&self, x: &Point3) -> Rat {
        let y = x.sub(&self.point);
        let t = y.dot(&self.dir);
        y.norm_sq() - &t * &t / self.dir.norm_sq()
    }

    pub fn contains(&self, x: &Point3) -> bool {
        self.dist_sq(x).is_zero()
    }
}

impl Cylinder3 {
    pub fn new(axis_point: &Point3, axis_dir: &Point3, radius_sq: Rat) -> Result<Cylinder3> {
        if !radius_sq.is_positive() {
            return Err(Error::InvalidParam(format!("cylinder radius² must be positive, got {radius_sq}")));
        }
        let ax = AxisLine::new(axis_point, axis_dir)?;
        Ok(Cylinder3 { axis_point: ax.point, axis_dir: ax.dir, radius_sq })
    }

    /// The cylinder around line `ab` holding every `r` with `pqr` of area 1.
    pub fn unit_area(a: &Point3, b: &Point3) -> Result<Cylinder3> {
        let l = a.sub(b).norm_sq();
        if l.is_zero() {
            return Err(Error::Degenerate);
        }
        Cylinder3::new(a, &b.sub(a), int(4) / l)
    }

    pub fn axis(&self) -> AxisLine {
        AxisLine { point: self.axis_point.clone(), dir: self.axis_dir.clone() }
    }

    pub fn dist_sq(&self, x: &Point3) -> Rat {
        self.axis().dist_sq(x)
    }

    pub fn contains(&self, x: &Point3) -> bool {
        self.dist_sq(x) == self.radius_sq
    }

    /// Membership of the ray through `x` (a projective point): the direction
    /// makes the cone angle fixed by the cylinder. Meaningful for cylinders
    /// whose axis passes through the origin.
    pub fn contains_projective(&self, x: &Point3) -> bool {
        !x.is_zero() && self.dist_sq(x) == &self.radius_sq * x.norm_sq()
    }
}

impl std::fmt::Display for Cylinder3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cyl(axis {} + t{}, r² {})", self.axis_point, self.axis_dir, fmt_rat(&self.radius_sq))
    }
}

/// Unit-area cylinders of all point pairs, grouped by multiplicity.
#[derive(Clone, Debug, Default)]
pub struct CylinderMultiset {
    pub classes: BTreeMap<Cylinder3, u64>,
    /// Points on each distinct axis line.
    pub axis_points: BTreeMap<AxisLine, u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MultiplicityBucket {
    /// Inclusive lower end, a power of two.
    pub lo: u64,
    pub cylinders: u64,
}

impl CylinderMultiset {
    pub fn distinct(&self) -> usize {
        self.classes.len()
    }

    pub fn total(&self) -> u64 {
        self.classes.values().sum()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.classes.values().copied().max().unwrap_or(0)
    }

    /// Counts of cylinders with multiplicity in `[2^i, 2^(i+1))`.
    pub fn buckets(&self) -> Vec<MultiplicityBucket> {
        let mut by: BTreeMap<u64, u64> = BTreeMap::new();
        for &m in self.classes.values() {
            let lo = 1u64 << (63 - m.leading_zeros());
            *by.entry(lo).or_default() += 1;
        }
        by.into_iter().map(|(lo, cylinders)| MultiplicityBucket { lo, cylinders }).collect()
    }
}

pub fn cylinder_multiset(pts: &[Point3]) -> Result<CylinderMultiset> {
    let n = pts.len();
    let per_i: Vec<Vec<(Cylinder3, AxisLine, usize, usize)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i + 1..n)
                .map(|j| {
                    let c = Cylinder3::unit_area(&pts[i], &pts[j]).map_err(|_| Error::DuplicatePoints(i, j))?;
                    let ax = c.axis();
                    Ok((c, ax, i, j))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut out = CylinderMultiset::default();
    let mut on_axis: HashMap<AxisLine, BTreeSet<usize>> = HashMap::new();
    for (c, ax, i, j) in per_i.into_iter().flatten() {
        *out.classes.entry(c).or_default() += 1;
        let s = on_axis.entry(ax).or_default();
        s.insert(i);
        s.insert(j);
    }
    out.axis_points = on_axis.into_iter().map(|(k, v)| (k, v.len() as u64)).collect();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Affine,
    Projective,
}

/// Incidences between points and cylinders. An incidence `(p, C)` is of
/// type 1 when the generator of `C` through `p` holds another point of the
/// set, type 2 otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IncidenceReport {
    pub total: u64,
    pub type1: u64,
    pub type2: u64,
    pub per_cylinder: Vec<u64>,
}

pub fn point_cylinder_incidences(pts: &[Point3], cyls: &[Cylinder3]) -> IncidenceReport {
    point_cylinder_incidences_with(pts, cyls, Membership::Affine)
}

pub fn point_cylinder_incidences_with(pts: &[Point3], cyls: &[Cylinder3], mode: Membership) -> IncidenceReport {
    // lines through the points in each axis direction, with their point counts
    let dirs: BTreeSet<&Point3> = cyls.iter().map(|c| &c.axis_dir).collect();
    let mut along: HashMap<AxisLine, u64> = HashMap::new();
    for d in dirs {
        for p in pts {
            let l = AxisLine::new(p, d).expect("cylinder direction is nonzero");
            *along.entry(l).or_default() += 1;
        }
    }
    let rows: Vec<(u64, u64)> = cyls
        .par_iter()
        .map(|c| {
            let (mut t1, mut t2) = (0, 0);
            for p in pts {
                let on = match mode {
                    Membership::Affine => c.contains(p),
                    Membership::Projective => c.contains_projective(p),
                };
                if !on {
                    continue;
                }
                let g = AxisLine::new(p, &c.axis_dir).expect("cylinder direction is nonzero");
                if along.get(&g).copied().unwrap_or(0) >= 2 {
                    t1 += 1;
                } else {
                    t2 += 1;
                }
            }
            (t1, t2)
        })
        .collect();
    let mut r = IncidenceReport::default();
    for (t1, t2) in rows {
        r.type1 += t1;
        r.type2 += t2;
        r.per_cylinder.push(t1 + t2);
    }
    r.total = r.type1 + r.type2;
    r
}

/// Pairs `(i, j)`, `i < j`, with `(pᵢ − o)·(pⱼ − o) = 0`; points equal to `o`
/// are skipped.
pub fn orthogonal_pairs(pts: &[Point3], o: &Point3) -> Vec<(usize, usize)> {
    let v: Vec<Option<Point3>> = pts.iter().map(|p| if p == o { None } else { Some(p.sub(o)) }).collect();
    let n = pts.len();
    let mut out: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let v = &v;
            (i + 1..n).filter_map(move |j| match (&v[i], &v[j]) {
                (Some(a), Some(b)) if a.dot(b).is_zero() => Some((i, j)),
                _ => None,
            })
        })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn p(x: i64, y: i64, z: i64) -> Point3 {
        Point3::from_ints(x, y, z)
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Cylinder3::new(&p(0, 0, 5), &p(0, 0, -3), int(1)).unwrap();
        let b = Cylinder3::new(&p(0, 0, -2), &p(0, 0, 7), int(1)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.axis_point, p(0, 0, 0));
        assert_eq!(a.axis_dir, p(0, 0, 1));
        let c = Cylinder3::new(&p(1, 1, 0), &p(-2, 2, 0), int(1)).unwrap();
        assert_eq!(c.axis_dir, p(1, -1, 0));
        assert_eq!(c.axis_point, p(1, 1, 0));
    }

    #[test]
    fn unit_area_cylinder_membership() {
        let c = Cylinder3::unit_area(&p(0, 0, 0), &p(2, 0, 0)).unwrap();
        assert_eq!(c.radius_sq, int(1));
        assert!(c.contains(&p(7, 1, 0)));
        assert!(c.contains(&p(-1, 0, 1)));
        assert!(!c.contains(&p(0, 1, 1)));
        assert!(Cylinder3::unit_area(&p(1, 1, 1), &p(1, 1, 1)).is_err());
    }

    #[test]
    fn projective_membership() {
        // axis through the origin along z, cone angle 45°
        let c = Cylinder3::new(&p(0, 0, 0), &p(0, 0, 1), frac(1, 2)).unwrap();
        assert!(c.contains_projective(&p(1, 0, 1)));
        assert!(c.contains_projective(&p(3, 0, 3)));
        assert!(!c.contains_projective(&p(1, 0, 2)));
    }

    #[test]
    fn multiset_of_collinear_points() {
        let pts = vec![p(0, 0, 0), p(1, 0, 0), p(2, 0, 0), p(3, 0, 0)];
        let m = cylinder_multiset(&pts).unwrap();
        // lengths 1 (×3), 2 (×2), 3 (×1) on a single axis
        assert_eq!(m.distinct(), 3);
        assert_eq!(m.total(), 6);
        assert_eq!(m.max_multiplicity(), 3);
        assert_eq!(m.axis_points.values().copied().collect::<Vec<_>>(), vec![4]);
        assert_eq!(m.buckets(), vec![MultiplicityBucket { lo: 1, cylinders: 1 }, MultiplicityBucket { lo: 2, cylinders: 2 }]);
    }

    #[test]
    fn incidence_types() {
        let c = Cylinder3::new(&p(0, 0, 0), &p(0, 0, 1), int(1)).unwrap();
        let pts = vec![p(1, 0, 0), p(1, 0, 5), p(0, 1, 0), p(0, 0, 0)];
        let r = point_cylinder_incidences(&pts, &[c]);
        assert_eq!((r.total, r.type1, r.type2), (3, 2, 1));
        assert_eq!(r.per_cylinder, vec![3]);
    }

    #[test]
    fn orthogonal_pairs_about_a_center() {
        let pts = vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1), p(1, 1, 0)];
        assert_eq!(orthogonal_pairs(&pts, &p(0, 0, 0)), vec![(1, 2), (1, 3), (2, 3), (3, 4)]);
    }
}

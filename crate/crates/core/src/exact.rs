//! Exact rational geometric kernel.
//!
//! Every predicate here works on `BigRational` values; nothing in the
//! decision path touches floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, always in lowest terms.
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p` for integers and `p/q` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Parses `p` or `p/q` (optional sign, surrounding whitespace ignored).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Lossy conversion used only for reporting and float cross-checks.
pub fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Point in the rational plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rat,
    pub y: Rat,
}

/// Point (or vector) in rational 3-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Point2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2 { x: int(x), y: int(y) }
    }

    pub fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, s: &Rat) -> Point2 {
        Point2::new(&self.x * s, &self.y * s)
    }

    pub fn dot(&self, o: &Point2) -> Rat {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of the cross product.
    pub fn cross(&self, o: &Point2) -> Rat {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }
}

impl Point3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Point3 { x: int(x), y: int(y), z: int(z) }
    }

    pub fn zero() -> Self {
        Point3::from_ints(0, 0, 0)
    }

    pub fn sub(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn add(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn scale(&self, s: &Rat) -> Point3 {
        Point3::new(&self.x * s, &self.y * s, &self.z * s)
    }

    pub fn dot(&self, o: &Point3) -> Rat {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// xy-projection.
    pub fn xy(&self) -> Point2 {
        Point2::new(self.x.clone(), self.y.clone())
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Common interface of 2D and 3D points used by the census and charging code.
pub trait Geom: Clone + fmt::Debug + fmt::Display + Ord + std::hash::Hash + Send + Sync {
    const DIM: u8;
    fn coords(&self) -> Vec<&Rat>;
    fn from_coords(c: Vec<Rat>) -> Self;
    fn sq_dist(&self, o: &Self) -> Rat;
    /// Position of the projection of `self` on line `ab`, as a multiple of `b - a`.
    fn projection_param(&self, a: &Self, b: &Self) -> Rat;
    /// The area key of triangle `abc`: |doubled area| in 2D, 4A² in 3D.
    fn area_key(a: &Self, b: &Self, c: &Self) -> Rat;
}

impl Geom for Point2 {
    const DIM: u8 = 2;

    fn coords(&self) -> Vec<&Rat> {
        vec![&self.x, &self.y]
    }

    fn from_coords(mut c: Vec<Rat>) -> Self {
        let y = c.pop().expect("2 coordinates");
        let x = c.pop().expect("2 coordinates");
        Point2 { x, y }
    }

    fn sq_dist(&self, o: &Self) -> Rat {
        self.sub(o).norm_sq()
    }

    fn projection_param(&self, a: &Self, b: &Self) -> Rat {
        let d = b.sub(a);
        self.sub(a).dot(&d) / d.norm_sq()
    }

    fn area_key(a: &Self, b: &Self, c: &Self) -> Rat {
        double_area_2d(a, b, c).abs()
    }
}

impl Geom for Point3 {
    const DIM: u8 = 3;

    fn coords(&self) -> Vec<&Rat> {
        vec![&self.x, &self.y, &self.z]
    }

    fn from_coords(mut c: Vec<Rat>) -> Self {
        let z = c.pop().expect("3 coordinates");
        let y = c.pop().expect("3 coordinates");
        let x = c.pop().expect("3 coordinates");
        Point3 { x, y, z }
    }

    fn sq_dist(&self, o: &Self) -> Rat {
        self.sub(o).norm_sq()
    }

    fn projection_param(&self, a: &Self, b: &Self) -> Rat {
        let d = b.sub(a);
        self.sub(a).dot(&d) / d.norm_sq()
    }

    fn area_key(a: &Self, b: &Self, c: &Self) -> Rat {
        quad_sq_area_3d(a, b, c)
    }
}

/// Canonical exact area identifier. In 2D the value is the absolute doubled
/// area, in 3D it is `4·area²`; the dimension is tracked by the owner.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct AreaKey(pub Rat);

impl AreaKey {
    /// Key of a unit-area triangle in the given dimension.
    pub fn unit(dim: u8) -> AreaKey {
        AreaKey(if dim == 2 { int(2) } else { int(4) })
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<AreaKey> for String {
    fn from(k: AreaKey) -> String {
        fmt_rat(&k.0)
    }
}

impl TryFrom<String> for AreaKey {
    type Error = Error;
    fn try_from(s: String) -> Result<AreaKey> {
        parse_rat(&s).map(AreaKey)
    }
}

impl fmt::Display for AreaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Segment with endpoints stored in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment<P> {
    pub p: P,
    pub q: P,
}

pub type Segment2 = Segment<Point2>;
pub type Segment3 = Segment<Point3>;

impl<P: Geom> Segment<P> {
    /// Fails with `Degenerate` when the endpoints coincide.
    pub fn new(a: P, b: P) -> Result<Self> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Segment { p: a, q: b }),
            Ordering::Greater => Ok(Segment { p: b, q: a }),
            Ordering::Equal => Err(Error::Degenerate),
        }
    }

    pub fn sq_len(&self) -> Rat {
        self.p.sq_dist(&self.q)
    }
}

impl<P: fmt::Display> fmt::Display for Segment<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}–{}", self.p, self.q)
    }
}

/// Line `ax + by + c = 0` with coprime integer coefficients whose first
/// nonzero entry of `(a, b)` is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line2 {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

/// Scales rationals to coprime integers (sign untouched). All-zero input
/// is returned unchanged.
pub fn primitive_ints(v: &[Rat]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = v.iter().map(|r| (r * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

impl Line2 {
    /// Canonical line from arbitrary rational coefficients.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Degenerate);
        }
        let mut v = primitive_ints(&[a, b, c]);
        let lead_neg = if v[0].is_zero() { v[1].is_negative() } else { v[0].is_negative() };
        if lead_neg {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        let mut it = v.into_iter().map(Rat::from_integer);
        Ok(Line2 { a: it.next().unwrap(), b: it.next().unwrap(), c: it.next().unwrap() })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Line2::new(int(a), int(b), int(c))
    }

    /// The line through two distinct points.
    pub fn through(p: &Point2, q: &Point2) -> Result<Self> {
        if p == q {
            return Err(Error::Degenerate);
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = -(&a * &p.x + &b * &p.y);
        Line2::new(a, b, c)
    }

    /// The line through `p` parallel to `self`.
    pub fn parallel_through(&self, p: &Point2) -> Line2 {
        let c = -(&self.a * &p.x + &self.b * &p.y);
        Line2::new(self.a.clone(), self.b.clone(), c).expect("direction is nonzero")
    }

    pub fn eval(&self, p: &Point2) -> Rat {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel(&self, o: &Line2) -> bool {
        (&self.a * &o.b - &self.b * &o.a).is_zero()
    }

    /// Intersection point, `None` for parallel lines.
    pub fn intersect(&self, o: &Line2) -> Option<Point2> {
        let det = &self.a * &o.b - &self.b * &o.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &o.c - &self.c * &o.b) / &det;
        let y = (&self.c * &o.a - &self.a * &o.c) / &det;
        Some(Point2::new(x, y))
    }

    /// A direction vector of the line.
    pub fn direction(&self) -> Point2 {
        Point2::new(self.b.clone(), -self.a.clone())
    }

    /// Some point on the line.
    pub fn point(&self) -> Point2 {
        let n = &self.a * &self.a + &self.b * &self.b;
        let s = -&self.c / n;
        Point2::new(&self.a * &s, &self.b * &s)
    }
}

impl fmt::Display for Line2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

/// Signed doubled area (positive for counter-clockwise `abc`).
pub fn double_area_2d(a: &Point2, b: &Point2, c: &Point2) -> Rat {
    b.sub(a).cross(&c.sub(a))
}

/// `‖(b−a)×(c−a)‖² = 4·area²`.
pub fn quad_sq_area_3d(a: &Point3, b: &Point3, c: &Point3) -> Rat {
    b.sub(a).cross(&c.sub(a)).norm_sq()
}

/// Splits `‖u×v‖²` into the squared cross product of the xy-projections and
/// the residual `‖y·u₀ − x·v₀‖²`, where `x`, `y` are the z-components of `u`, `v`.
/// Returns `(total, planar, residual)`; `total == planar + residual` exactly.
pub fn area_decomposition_3d(u: &Point3, v: &Point3) -> (Rat, Rat, Rat) {
    let total = u.cross(v).norm_sq();
    let (u0, v0) = (u.xy(), v.xy());
    let c = u0.cross(&v0);
    let planar = &c * &c;
    let residual = u0.scale(&v.z).sub(&v0.scale(&u.z)).norm_sq();
    (total, planar, residual)
}

pub fn collinear<P: Geom>(a: &P, b: &P, c: &P) -> bool {
    P::area_key(a, b, c).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleClass {
    Acute,
    Right,
    Obtuse,
    Degenerate,
}

/// Classifies by comparing the largest squared side with the sum of the others.
pub fn classify_angles<P: Geom>(a: &P, b: &P, c: &P) -> AngleClass {
    if collinear(a, b, c) {
        return AngleClass::Degenerate;
    }
    let mut s = [a.sq_dist(b), b.sq_dist(c), c.sq_dist(a)];
    s.sort();
    match (&s[0] + &s[1]).cmp(&s[2]) {
        Ordering::Greater => AngleClass::Acute,
        Ordering::Equal => AngleClass::Right,
        Ordering::Less => AngleClass::Obtuse,
    }
}

/// Index pairs of the triangle sides, paired with the opposite vertex index.
const SIDES: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (0, 2, 1)];

/// Longest side of a nondegenerate triangle, with the opposite vertex's
/// position (0, 1 or 2). Ties go to the smallest canonical segment.
pub fn longest_side_with_apex<P: Geom>(a: &P, b: &P, c: &P) -> Result<(Segment<P>, usize)> {
    if collinear(a, b, c) {
        return Err(Error::Degenerate);
    }
    let v = [a, b, c];
    let mut best: Option<(Rat, Segment<P>, usize)> = None;
    for (i, j, k) in SIDES {
        let seg = Segment::new(v[i].clone(), v[j].clone())?;
        let len = seg.sq_len();
        let better = match &best {
            None => true,
            Some((bl, bs, _)) => match len.cmp(bl) {
                Ordering::Greater => true,
                Ordering::Equal => seg < *bs,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((len, seg, k));
        }
    }
    let (_, seg, k) = best.expect("three sides");
    Ok((seg, k))
}

pub fn longest_side<P: Geom>(a: &P, b: &P, c: &P) -> Result<Segment<P>> {
    longest_side_with_apex(a, b, c).map(|(s, _)| s)
}

/// True iff every point is a vertex of the convex hull and no three points
/// are collinear. Duplicated points make the answer `false`.
pub fn convex_position_check(pts: &[Point2]) -> Result<bool> {
    if pts.len() < 3 {
        return Err(Error::TooFewPoints { need: 3, got: pts.len() });
    }
    let mut v: Vec<&Point2> = pts.iter().collect();
    v.sort();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Ok(false);
    }
    // Monotone chain keeping only strict turns: points on hull edges are dropped.
    let turn = |o: &Point2, a: &Point2, b: &Point2| double_area_2d(o, a, b);
    let mut hull: Vec<&Point2> = Vec::with_capacity(v.len() * 2);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &&Point2>> =
            if pass == 0 { Box::new(v.iter()) } else { Box::new(v.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2 && !turn(hull[hull.len() - 2], hull[hull.len() - 1], p).is_positive() {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    Ok(hull.len() == pts.len())
}

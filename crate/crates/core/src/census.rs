//! Brute-force triangle-area census over point sets and line arrangements.
//!
//! Points are scaled by the LCM of their denominators so the inner loop runs
//! on integers (`i128` when the coordinates are small enough, `BigInt`
//! otherwise). Keys are turned back into exact rationals at the end.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{classify_angles, AngleClass, AreaKey, Geom, Line2, Point2, Point3, Rat, Segment};

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    /// Keep every index triple per area class.
    pub witnesses: bool,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl CensusOptions {
    pub fn with_witnesses() -> Self {
        CensusOptions { witnesses: true, threads: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AreaClass {
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<[usize; 3]>>,
}

/// Exact multiset of triangle areas. Only nonzero keys appear in `classes`;
/// collinear triples are counted in `degenerate_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub dim: u8,
    pub n: usize,
    pub classes: BTreeMap<AreaKey, AreaClass>,
    pub degenerate_count: u64,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.classes.values().map(|c| c.count).sum::<u64>() + self.degenerate_count
    }

    pub fn count(&self, key: &AreaKey) -> u64 {
        self.classes.get(key).map_or(0, |c| c.count)
    }

    pub fn min_class(&self) -> Option<(&AreaKey, &AreaClass)> {
        self.classes.iter().next()
    }

    pub fn max_class(&self) -> Option<(&AreaKey, &AreaClass)> {
        self.classes.iter().next_back()
    }

    /// Largest class; ties go to the smaller key.
    pub fn modal_class(&self) -> Option<(&AreaKey, &AreaClass)> {
        let mut best: Option<(&AreaKey, &AreaClass)> = None;
        for (k, c) in &self.classes {
            if best.is_none_or(|(_, b)| c.count > b.count) {
                best = Some((k, c));
            }
        }
        best
    }

    pub fn distinct_count(&self) -> usize {
        self.classes.len()
    }
}

/// An extremal area class with its full witness list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub key: AreaKey,
    pub count: u64,
    pub witnesses: Vec<[usize; 3]>,
}

pub fn binom3(n: usize) -> u64 {
    let n = n as u64;
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Rejects point sets with repeated points; returns the first offending pair.
pub fn check_distinct<P: Ord>(pts: &[P]) -> Result<()> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| pts[a].cmp(&pts[b]).then(a.cmp(&b)));
    for w in idx.windows(2) {
        if pts[w[0]] == pts[w[1]] {
            return Err(Error::DuplicatePoints(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(())
}

fn check_input<P: Geom>(pts: &[P]) -> Result<()> {
    if pts.len() < 3 {
        return Err(Error::TooFewPoints { need: 3, got: pts.len() });
    }
    check_distinct(pts)
}

// ---------------------------------------------------------------------------
// integer kernels

trait Kernel: Sync {
    type K: Hash + Eq + Ord + Clone + Send + Sync;
    fn len(&self) -> usize;
    fn key(&self, i: usize, j: usize, k: usize) -> Self::K;
    fn is_zero(k: &Self::K) -> bool;
    fn to_big(k: &Self::K) -> BigInt;
    fn from_big(b: &BigInt) -> Option<Self::K>;
}

struct Small2(Vec<[i128; 2]>);
struct Small3(Vec<[i128; 3]>);
struct Big2(Vec<[BigInt; 2]>);
struct Big3(Vec<[BigInt; 3]>);

impl Kernel for Small2 {
    type K = i128;
    fn len(&self) -> usize {
        self.0.len()
    }
    fn key(&self, i: usize, j: usize, k: usize) -> i128 {
        let (a, b, c) = (self.0[i], self.0[j], self.0[k]);
        ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).abs()
    }
    fn is_zero(k: &i128) -> bool {
        *k == 0
    }
    fn to_big(k: &i128) -> BigInt {
        BigInt::from(*k)
    }
    fn from_big(b: &BigInt) -> Option<i128> {
        i128::try_from(b).ok()
    }
}

impl Kernel for Small3 {
    type K = i128;
    fn len(&self) -> usize {
        self.0.len()
    }
    fn key(&self, i: usize, j: usize, k: usize) -> i128 {
        let (a, b, c) = (self.0[i], self.0[j], self.0[k]);
        let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
        let x = u[1] * v[2] - u[2] * v[1];
        let y = u[2] * v[0] - u[0] * v[2];
        let z = u[0] * v[1] - u[1] * v[0];
        x * x + y * y + z * z
    }
    fn is_zero(k: &i128) -> bool {
        *k == 0
    }
    fn to_big(k: &i128) -> BigInt {
        BigInt::from(*k)
    }
    fn from_big(b: &BigInt) -> Option<i128> {
        i128::try_from(b).ok()
    }
}

impl Kernel for Big2 {
    type K = BigInt;
    fn len(&self) -> usize {
        self.0.len()
    }
    fn key(&self, i: usize, j: usize, k: usize) -> BigInt {
        let (a, b, c) = (&self.0[i], &self.0[j], &self.0[k]);
        ((&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])).abs()
    }
    fn is_zero(k: &BigInt) -> bool {
        k.is_zero()
    }
    fn to_big(k: &BigInt) -> BigInt {
        k.clone()
    }
    fn from_big(b: &BigInt) -> Option<BigInt> {
        Some(b.clone())
    }
}

impl Kernel for Big3 {
    type K = BigInt;
    fn len(&self) -> usize {
        self.0.len()
    }
    fn key(&self, i: usize, j: usize, k: usize) -> BigInt {
        let (a, b, c) = (&self.0[i], &self.0[j], &self.0[k]);
        let u: [BigInt; 3] = std::array::from_fn(|t| &b[t] - &a[t]);
        let v: [BigInt; 3] = std::array::from_fn(|t| &c[t] - &a[t]);
        let x = &u[1] * &v[2] - &u[2] * &v[1];
        let y = &u[2] * &v[0] - &u[0] * &v[2];
        let z = &u[0] * &v[1] - &u[1] * &v[0];
        &x * &x + &y * &y + &z * &z
    }
    fn is_zero(k: &BigInt) -> bool {
        k.is_zero()
    }
    fn to_big(k: &BigInt) -> BigInt {
        k.clone()
    }
    fn from_big(b: &BigInt) -> Option<BigInt> {
        Some(b.clone())
    }
}

enum Scaled {
    Small2(Small2),
    Small3(Small3),
    Big2(Big2),
    Big3(Big3),
}

/// Integer image of a point set together with the key denominator
/// (`D²` in 2D, `D⁴` in 3D for common denominator `D`).
struct ScaledSet {
    data: Scaled,
    key_denom: BigInt,
}

const SMALL_BITS_2D: u64 = 61;
const SMALL_BITS_3D: u64 = 29;

fn scale<P: Geom>(pts: &[P], force_big: bool) -> ScaledSet {
    let d = pts
        .iter()
        .flat_map(|p| p.coords().into_iter().map(|c| c.denom().clone()))
        .fold(BigInt::one(), |acc, x| acc.lcm(&x));
    let ints: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| p.coords().into_iter().map(|c| c.numer() * (&d / c.denom())).collect())
        .collect();
    let max_bits = ints.iter().flatten().map(|x| x.bits()).max().unwrap_or(0);
    let dim = P::DIM;
    let key_denom = if dim == 2 { &d * &d } else { (&d * &d) * (&d * &d) };
    let small = |c: &BigInt| i128::try_from(c).expect("checked bit length");
    let data = if dim == 2 {
        if !force_big && max_bits < SMALL_BITS_2D {
            Scaled::Small2(Small2(ints.iter().map(|v| [small(&v[0]), small(&v[1])]).collect()))
        } else {
            Scaled::Big2(Big2(ints.into_iter().map(|v| [v[0].clone(), v[1].clone()]).collect()))
        }
    } else if !force_big && max_bits < SMALL_BITS_3D {
        Scaled::Small3(Small3(ints.iter().map(|v| [small(&v[0]), small(&v[1]), small(&v[2])]).collect()))
    } else {
        Scaled::Big3(Big3(ints.into_iter().map(|v| [v[0].clone(), v[1].clone(), v[2].clone()]).collect()))
    };
    ScaledSet { data, key_denom }
}

type Bucket = (u64, Vec<[usize; 3]>);

fn enumerate<Kr: Kernel>(kern: &Kr, witnesses: bool) -> (HashMap<Kr::K, Bucket>, u64) {
    let n = kern.len();
    (0..n)
        .into_par_iter()
        .fold(
            || (HashMap::<Kr::K, Bucket>::new(), 0u64),
            |(mut m, mut degen), i| {
                for j in i + 1..n {
                    for k in j + 1..n {
                        let key = kern.key(i, j, k);
                        if Kr::is_zero(&key) {
                            degen += 1;
                            continue;
                        }
                        let e = m.entry(key).or_insert_with(|| (0, Vec::new()));
                        e.0 += 1;
                        if witnesses {
                            e.1.push([i, j, k]);
                        }
                    }
                }
                (m, degen)
            },
        )
        .reduce(
            || (HashMap::new(), 0),
            |(mut a, da), (b, db)| {
                for (k, (c, w)) in b {
                    let e = a.entry(k).or_insert_with(|| (0, Vec::new()));
                    e.0 += c;
                    e.1.extend(w);
                }
                (a, da + db)
            },
        )
}

fn census_from<Kr: Kernel>(kern: &Kr, key_denom: &BigInt, dim: u8, witnesses: bool) -> Census {
    let (map, degenerate_count) = enumerate(kern, witnesses);
    let classes = map
        .into_iter()
        .map(|(k, (count, mut w))| {
            let key = AreaKey(Rat::new(Kr::to_big(&k), key_denom.clone()));
            let witnesses = witnesses.then(|| {
                w.sort_unstable();
                w
            });
            (key, AreaClass { count, witnesses })
        })
        .collect();
    Census { dim, n: kern.len(), classes, degenerate_count }
}

fn triples_with<Kr: Kernel>(kern: &Kr, target: &BigInt) -> Vec<[usize; 3]> {
    let Some(t) = Kr::from_big(target) else { return Vec::new() };
    let n = kern.len();
    let mut out: Vec<[usize; 3]> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut v = Vec::new();
            for j in i + 1..n {
                for k in j + 1..n {
                    if kern.key(i, j, k) == t {
                        v.push([i, j, k]);
                    }
                }
            }
            v
        })
        .collect();
    out.sort_unstable();
    out
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) if t > 0 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

fn run_census<P: Geom>(pts: &[P], opts: &CensusOptions, force_big: bool) -> Result<Census> {
    check_input(pts)?;
    let s = scale(pts, force_big);
    let w = opts.witnesses;
    let dim = P::DIM;
    Ok(with_threads(opts.threads, || match &s.data {
        Scaled::Small2(k) => census_from(k, &s.key_denom, dim, w),
        Scaled::Small3(k) => census_from(k, &s.key_denom, dim, w),
        Scaled::Big2(k) => census_from(k, &s.key_denom, dim, w),
        Scaled::Big3(k) => census_from(k, &s.key_denom, dim, w),
    }))
}

/// Exact census of all `C(n,3)` triples.
pub fn area_census<P: Geom>(pts: &[P], opts: &CensusOptions) -> Result<Census> {
    run_census(pts, opts, false)
}

/// Same census computed entirely with `BigInt` arithmetic; used to cross-check
/// the fast path.
pub fn area_census_bigint<P: Geom>(pts: &[P], opts: &CensusOptions) -> Result<Census> {
    run_census(pts, opts, true)
}

/// All index triples whose area key equals `key`, sorted.
pub fn triples_with_key<P: Geom>(pts: &[P], key: &AreaKey) -> Result<Vec<[usize; 3]>> {
    check_input(pts)?;
    let s = scale(pts, false);
    let scaled = &key.0 * Rat::from_integer(s.key_denom.clone());
    if !scaled.is_integer() {
        return Ok(Vec::new());
    }
    let target = scaled.to_integer();
    Ok(match &s.data {
        Scaled::Small2(k) => triples_with(k, &target),
        Scaled::Small3(k) => triples_with(k, &target),
        Scaled::Big2(k) => triples_with(k, &target),
        Scaled::Big3(k) => triples_with(k, &target),
    })
}

/// Number of unit-area triangles (key 2 in 2D, 4 in 3D).
pub fn count_unit_area<P: Geom>(pts: &[P]) -> Result<u64> {
    Ok(triples_with_key(pts, &AreaKey::unit(P::DIM))?.len() as u64)
}

fn extremal<P: Geom>(pts: &[P], max: bool) -> Result<Extremal> {
    let c = area_census(pts, &CensusOptions::default())?;
    let (key, class) = if max { c.max_class() } else { c.min_class() }.ok_or(Error::NoNonzeroTriangle)?;
    let witnesses = triples_with_key(pts, key)?;
    debug_assert_eq!(witnesses.len() as u64, class.count);
    Ok(Extremal { key: key.clone(), count: class.count, witnesses })
}

/// Smallest nonzero area class.
pub fn min_nonzero_area<P: Geom>(pts: &[P]) -> Result<Extremal> {
    extremal(pts, false)
}

/// Largest area class.
pub fn max_area<P: Geom>(pts: &[P]) -> Result<Extremal> {
    extremal(pts, true)
}

/// Number of acute triangles among the minimum-area triangles.
pub fn acute_min_area_count(pts: &[Point2]) -> Result<u64> {
    let m = min_nonzero_area(pts)?;
    Ok(m
        .witnesses
        .iter()
        .filter(|t| classify_angles(&pts[t[0]], &pts[t[1]], &pts[t[2]]) == AngleClass::Acute)
        .count() as u64)
}

/// Number of distinct nonzero area keys.
pub fn distinct_area_count<P: Geom>(pts: &[P]) -> Result<usize> {
    Ok(area_census(pts, &CensusOptions::default())?.distinct_count())
}

fn common_side_counts<Kr: Kernel>(kern: &Kr) -> Vec<(usize, usize, usize)> {
    let n = kern.len();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut v = Vec::new();
            for j in i + 1..n {
                let keys: HashSet<Kr::K> = (0..n)
                    .filter(|&c| c != i && c != j)
                    .map(|c| kern.key(i, j, c))
                    .filter(|k| !Kr::is_zero(k))
                    .collect();
                v.push((i, j, keys.len()));
            }
            v
        })
        .collect()
}

/// The segment `ab` maximizing the number of distinct nonzero areas of
/// triangles `abc`; ties go to the smallest canonical segment.
pub fn distinct_areas_common_side<P: Geom>(pts: &[P]) -> Result<(Segment<P>, usize)> {
    check_input(pts)?;
    let s = scale(pts, false);
    let counts = match &s.data {
        Scaled::Small2(k) => common_side_counts(k),
        Scaled::Small3(k) => common_side_counts(k),
        Scaled::Big2(k) => common_side_counts(k),
        Scaled::Big3(k) => common_side_counts(k),
    };
    let best = counts.iter().map(|c| c.2).max().unwrap_or(0);
    let seg = counts
        .iter()
        .filter(|c| c.2 == best)
        .map(|&(i, j, _)| Segment::new(pts[i].clone(), pts[j].clone()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("at least one pair");
    Ok((seg, best))
}

/// Per-point counts of maximum-area triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidentHistogram {
    pub key: AreaKey,
    pub triangles: u64,
    pub counts: Vec<u64>,
    /// Index of the point with the largest count (smallest index on ties).
    pub argmax: usize,
    pub max: u64,
}

pub fn max_area_incident_histogram(pts: &[Point3]) -> Result<IncidentHistogram> {
    let m = max_area(pts)?;
    let mut counts = vec![0u64; pts.len()];
    for t in &m.witnesses {
        for &v in t {
            counts[v] += 1;
        }
    }
    let max = counts.iter().copied().max().unwrap_or(0);
    let argmax = counts.iter().position(|&c| c == max).unwrap_or(0);
    Ok(IncidentHistogram { key: m.key, triangles: m.count, counts, argmax, max })
}

/// Census of the triangles cut out by triples of lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineTriangleCensus {
    pub n: usize,
    pub classes: BTreeMap<AreaKey, u64>,
    /// Triples with a parallel pair or a common point.
    pub skipped: u64,
}

impl LineTriangleCensus {
    pub fn modal_class(&self) -> Option<(&AreaKey, u64)> {
        let mut best: Option<(&AreaKey, u64)> = None;
        for (k, &c) in &self.classes {
            if best.is_none_or(|(_, b)| c > b) {
                best = Some((k, c));
            }
        }
        best
    }

    pub fn total(&self) -> u64 {
        self.classes.values().sum::<u64>() + self.skipped
    }
}

/// The triangle of three pairwise nonparallel, nonconcurrent lines.
pub fn line_triangle(l1: &Line2, l2: &Line2, l3: &Line2) -> Option<[Point2; 3]> {
    let a = l1.intersect(l2)?;
    let b = l1.intersect(l3)?;
    let c = l2.intersect(l3)?;
    if a == b {
        return None;
    }
    Some([a, b, c])
}

pub fn line_triple_census(lines: &[Line2]) -> Result<LineTriangleCensus> {
    check_distinct(lines).map_err(|e| match e {
        Error::DuplicatePoints(i, j) => Error::DuplicateLines(i, j),
        e => e,
    })?;
    let n = lines.len();
    let mut classes: BTreeMap<AreaKey, u64> = BTreeMap::new();
    let mut skipped = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                match line_triangle(&lines[i], &lines[j], &lines[k]) {
                    Some([a, b, c]) => {
                        *classes.entry(AreaKey(Point2::area_key(&a, &b, &c))).or_default() += 1;
                    }
                    None => skipped += 1,
                }
            }
        }
    }
    Ok(LineTriangleCensus { n, classes, skipped })
}

/// Reference O(n³) census straight on the rational kernel. Slow; used as an
/// independent oracle in tests.
pub fn area_census_reference<P: Geom>(pts: &[P]) -> BTreeMap<AreaKey, u64> {
    let mut m = BTreeMap::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                *m.entry(AreaKey(P::area_key(&pts[i], &pts[j], &pts[k]))).or_default() += 1;
            }
        }
    }
    m
}

/// Whether `pts` contains three collinear points (exhaustive).
pub fn has_collinear_triple<P: Geom>(pts: &[P]) -> Result<bool> {
    Ok(area_census(pts, &CensusOptions::default())?.degenerate_count > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    fn p2(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn p3(x: i64, y: i64, z: i64) -> Point3 {
        Point3::from_ints(x, y, z)
    }

    fn square() -> Vec<Point2> {
        vec![p2(0, 0), p2(1, 0), p2(1, 1), p2(0, 1)]
    }

    fn grid(w: i64, h: i64) -> Vec<Point2> {
        let mut v = Vec::new();
        for x in 0..w {
            for y in 0..h {
                v.push(p2(x, y));
            }
        }
        v
    }

    #[test]
    fn unit_square_census() {
        let c = area_census(&square(), &CensusOptions::with_witnesses()).unwrap();
        assert_eq!(c.classes.len(), 1);
        let (k, class) = c.min_class().unwrap();
        assert_eq!(k.0, int(1));
        assert_eq!(class.count, 4);
        assert_eq!(class.witnesses.as_ref().unwrap().len(), 4);
        assert_eq!(c.degenerate_count, 0);
    }

    #[test]
    fn tetrahedron_corner_census() {
        let pts = vec![p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0), p3(0, 0, 1)];
        let c = area_census(&pts, &CensusOptions::default()).unwrap();
        assert_eq!(c.count(&AreaKey(int(1))), 3);
        assert_eq!(c.count(&AreaKey(int(3))), 1);
    }

    #[test]
    fn grid_census_matches_reference_and_bigint_path() {
        let g = grid(3, 3);
        let fast = area_census(&g, &CensusOptions::default()).unwrap();
        let big = area_census_bigint(&g, &CensusOptions::default()).unwrap();
        assert_eq!(fast, big);
        let reference = area_census_reference(&g);
        assert_eq!(reference.get(&AreaKey(int(0))).copied().unwrap_or(0), fast.degenerate_count);
        for (k, c) in &fast.classes {
            assert_eq!(reference[k], c.count);
        }
        assert_eq!(fast.total(), 84);
        // unit doubled area count in the 3x3 grid: 32 triangles of area 1/2
        assert_eq!(fast.count(&AreaKey(int(1))), 32);
    }

    #[test]
    fn rational_coordinates_are_scaled_exactly() {
        let pts = vec![
            Point2::new(frac(1, 3), frac(1, 2)),
            Point2::new(frac(5, 3), frac(1, 2)),
            Point2::new(frac(1, 3), frac(7, 4)),
            Point2::new(frac(-2, 7), frac(1, 5)),
        ];
        let fast = area_census(&pts, &CensusOptions::default()).unwrap();
        let reference = area_census_reference(&pts);
        let flat: BTreeMap<AreaKey, u64> = fast.classes.iter().map(|(k, c)| (k.clone(), c.count)).collect();
        assert_eq!(flat, reference);
    }

    #[test]
    fn unit_area_counts() {
        assert_eq!(count_unit_area(&[p2(0, 0), p2(2, 0), p2(0, 1), p2(2, 1)]).unwrap(), 4);
        assert_eq!(count_unit_area(&square()).unwrap(), 0);
    }

    #[test]
    fn extremal_classes() {
        let m = min_nonzero_area(&square()).unwrap();
        assert_eq!((m.key.0.clone(), m.count), (int(1), 4));
        let m = max_area(&square()).unwrap();
        assert_eq!((m.key.0.clone(), m.count), (int(1), 4));
        assert!(matches!(min_nonzero_area(&[p2(0, 0), p2(1, 0), p2(2, 0)]), Err(Error::NoNonzeroTriangle)));
        let trap = vec![p2(0, 0), p2(4, 0), p2(1, 3), p2(3, 3)];
        let m = max_area(&trap).unwrap();
        // (0,0),(4,0) with either top vertex: doubled area 12
        assert_eq!((m.key.0.clone(), m.count), (int(12), 2));
    }

    #[test]
    fn errors_on_bad_input() {
        assert!(matches!(area_census(&[p2(0, 0), p2(1, 0)], &CensusOptions::default()), Err(Error::TooFewPoints { .. })));
        let dup = vec![p2(0, 0), p2(1, 0), p2(0, 0), p2(0, 1)];
        assert!(matches!(area_census(&dup, &CensusOptions::default()), Err(Error::DuplicatePoints(0, 2))));
    }

    #[test]
    fn acute_counts() {
        assert_eq!(acute_min_area_count(&square()).unwrap(), 0);
        assert_eq!(acute_min_area_count(&grid(3, 3)).unwrap(), 0);
    }

    #[test]
    fn distinct_counts_and_common_side() {
        assert_eq!(distinct_area_count(&[p2(0, 0), p2(3, 1), p2(1, 5)]).unwrap(), 1);
        let (seg, c) = distinct_areas_common_side(&[p2(0, 0), p2(3, 1), p2(1, 5)]).unwrap();
        assert_eq!(c, 1);
        assert_eq!((seg.p, seg.q), (p2(0, 0), p2(1, 5)));
        let mut pts = square();
        pts.push(p2(5, 5));
        // oracle: collect keys by hand from the reference census
        let reference = area_census_reference(&pts);
        let nonzero = reference.keys().filter(|k| !k.is_degenerate()).count();
        assert_eq!(distinct_area_count(&pts).unwrap(), nonzero);
    }

    #[test]
    fn histogram_of_single_triangle() {
        let h = max_area_incident_histogram(&[p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0)]).unwrap();
        assert_eq!(h.counts, vec![1, 1, 1]);
        assert_eq!(h.argmax, 0);
    }

    #[test]
    fn cube_corner_histogram_is_uniform() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(p3(x, y, z));
                }
            }
        }
        let h = max_area_incident_histogram(&pts).unwrap();
        // the largest triangles are the 8 equilateral ones (4A² = 3), 3 through each corner
        assert_eq!(h.key.0, int(3));
        assert_eq!(h.triangles, 8);
        assert!(h.counts.iter().all(|&c| c == 3));
    }

    #[test]
    fn line_census_examples() {
        let l = |a, b, c| Line2::from_ints(a, b, c).unwrap();
        let c = line_triple_census(&[l(1, 0, 0), l(0, 1, 0), l(1, 1, -1)]).unwrap();
        assert_eq!(c.classes.get(&AreaKey(int(1))), Some(&1));
        assert_eq!(c.skipped, 0);
        let c = line_triple_census(&[l(1, 0, 0), l(0, 1, 0), l(1, -1, 0)]).unwrap();
        assert_eq!(c.skipped, 1);
        assert!(matches!(line_triple_census(&[l(1, 0, 0), l(2, 0, 0)]), Err(Error::DuplicateLines(0, 1))));
    }
}

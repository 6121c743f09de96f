#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use triarea::exact::{collinear, Point2, Point3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct integer points in `[0, side)²`.
pub fn random_points2(r: &mut impl Rng, n: usize, side: i64) -> Vec<Point2> {
    assert!(n <= (side * side) as usize, "{n} points do not fit a side-{side} grid");
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert((r.gen_range(0..side), r.gen_range(0..side)));
    }
    let mut v: Vec<Point2> = seen.into_iter().map(|(x, y)| Point2::from_ints(x, y)).collect();
    // shuffle so index order does not follow coordinate order
    for i in (1..v.len()).rev() {
        v.swap(i, r.gen_range(0..=i));
    }
    v
}

pub fn random_points3(r: &mut impl Rng, n: usize, side: i64) -> Vec<Point3> {
    assert!(n <= (side * side * side) as usize, "{n} points do not fit a side-{side} cube");
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert((r.gen_range(0..side), r.gen_range(0..side), r.gen_range(0..side)));
    }
    seen.into_iter().map(|(x, y, z)| Point3::from_ints(x, y, z)).collect()
}

pub fn all_collinear<P: triarea::exact::Geom>(pts: &[P]) -> bool {
    pts.len() < 3 || (2..pts.len()).all(|k| collinear(&pts[0], &pts[1], &pts[k]))
}

/// Random planar set with `3 ≤ n ≤ max_n` that is not entirely collinear.
pub fn random_spanning2(r: &mut impl Rng, max_n: usize, side: i64) -> Vec<Point2> {
    loop {
        let n = r.gen_range(3..=max_n.min((side * side) as usize));
        let p = random_points2(r, n, side);
        if !all_collinear(&p) {
            return p;
        }
    }
}

pub fn random_spanning3(r: &mut impl Rng, max_n: usize, side: i64) -> Vec<Point3> {
    loop {
        let n = r.gen_range(3..=max_n.min((side * side * side) as usize));
        let p = random_points3(r, n, side);
        if !all_collinear(&p) {
            return p;
        }
    }
}

pub fn binom3(n: usize) -> u64 {
    let n = n as u64;
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

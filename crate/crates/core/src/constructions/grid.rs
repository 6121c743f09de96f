//! Integer grids and Erdős–Purdy lattice sections.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde_json::json;

use super::{params, CertKind, Certificate, GeneratedSet, Geometry};
use crate::error::{Error, Result};
use crate::exact::{int, AreaKey, Point2};

fn grid_points(w: usize, h: usize) -> Vec<Point2> {
    let mut v = Vec::with_capacity(w * h);
    for x in 0..w {
        for y in 0..h {
            v.push(Point2::from_ints(x as i64, y as i64));
        }
    }
    v
}

/// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Minimum-area (doubled area 1) triangles of the `w × h` grid, computed by
/// lattice arithmetic instead of enumeration: for every primitive
/// non-axis-parallel vector `ab` and each side `s = ±1`, the unique lattice
/// point `c` with `cross(ab, ac) = s` whose projection falls strictly inside
/// `ab`. Indices follow the `x * h + y` layout of [`gen_grid`].
pub fn grid_min_area_triples(w: usize, h: usize) -> Vec<Vec<usize>> {
    let (wi, hi) = (w as i64, h as i64);
    let idx = |x: i64, y: i64| (x * hi + y) as usize;
    let mut seen = BTreeSet::new();
    for ax in 0..wi {
        for ay in 0..hi {
            for bx in 0..wi {
                for by in 0..hi {
                    let (dx, dy) = (bx - ax, by - ay);
                    if dx == 0 || dy == 0 || (ax, ay) >= (bx, by) || dx.gcd(&dy) != 1 {
                        continue;
                    }
                    // dx·Y − dy·X = s  ⇐  X = −s·t0, Y = s·s0 where s0·dx + t0·dy = 1
                    let (g, s0, t0) = ext_gcd(dx, dy);
                    let (s0, t0) = if g < 0 { (-s0, -t0) } else { (s0, t0) };
                    let len2 = dx * dx + dy * dy;
                    for s in [-1i64, 1] {
                        let (x0, y0) = (-s * t0, s * s0);
                        // shifting by k·(dx,dy) moves the projection by k; pick the k with it in (0,1)
                        let dot = x0 * dx + y0 * dy;
                        let k = -Integer::div_floor(&dot, &len2);
                        let (x, y) = (x0 + k * dx, y0 + k * dy);
                        let (cx, cy) = (ax + x, ay + y);
                        if (0..wi).contains(&cx) && (0..hi).contains(&cy) {
                            let mut t = [idx(ax, ay), idx(bx, by), idx(cx, cy)];
                            t.sort_unstable();
                            seen.insert(t.to_vec());
                        }
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// The `w × h` integer grid, points ordered by `x` then `y`.
pub fn gen_grid(w: usize, h: usize) -> Result<GeneratedSet> {
    if w < 2 || h < 2 {
        return Err(Error::InvalidParam(format!("grid needs w, h >= 2, got {w} x {h}")));
    }
    if w * h < 3 {
        return Err(Error::TooFewPoints { need: 3, got: w * h });
    }
    let cert = Certificate {
        kind: CertKind::MinArea,
        target_key: Some(AreaKey(int(1))),
        triples: grid_min_area_triples(w, h),
        origin: None,
        provenance: "lattice triangles of area 1/2 with apex projecting inside a primitive non-axis-parallel side".into(),
        params: Default::default(),
        seed: None,
    };
    Ok(GeneratedSet::new(
        Geometry::Plane(grid_points(w, h)),
        Some(cert),
        params(&[("construction", json!("grid")), ("w", json!(w)), ("h", json!(h))]),
    ))
}

/// Smallest `s` with `s² ≥ log₂ n`, i.e. `⌈√(log₂ n)⌉`, in exact integer arithmetic.
fn side_for(n: usize) -> usize {
    let mut s = 1usize;
    // 2^(s²) >= n  ⇔  s² >= log₂ n
    while (s * s) < usize::BITS as usize && (1usize << (s * s)) < n {
        s += 1;
    }
    s
}

/// A `⌈√log₂ n⌉ × ⌈n/side⌉` section of the integer lattice, truncated to `n`
/// points. No certificate; the same-area class is measured by census.
pub fn gen_erdos_purdy_lattice(n: usize) -> Result<GeneratedSet> {
    if n < 4 {
        return Err(Error::TooFewPoints { need: 4, got: n });
    }
    let s = side_for(n);
    let cols = n.div_ceil(s);
    let mut pts = Vec::with_capacity(n);
    'outer: for x in 0..cols {
        for y in 0..s {
            if pts.len() == n {
                break 'outer;
            }
            pts.push(Point2::from_ints(x as i64, y as i64));
        }
    }
    Ok(GeneratedSet::new(
        Geometry::Plane(pts),
        None,
        params(&[("construction", json!("erdos-purdy")), ("n", json!(n)), ("rows", json!(s)), ("cols", json!(cols))]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn side_lengths() {
        assert_eq!(side_for(8), 2);
        assert_eq!(side_for(16), 2);
        assert_eq!(side_for(17), 3);
        assert_eq!(side_for(512), 3);
        assert_eq!(side_for(513), 4);
    }

    #[test]
    fn erdos_purdy_shapes() {
        let g = gen_erdos_purdy_lattice(8).unwrap();
        assert_eq!(g.params["rows"], json!(2));
        assert_eq!(g.params["cols"], json!(4));
        assert_eq!(g.geometry.len(), 8);
        let g = gen_erdos_purdy_lattice(16).unwrap();
        assert_eq!((g.params["rows"].clone(), g.params["cols"].clone()), (json!(2), json!(8)));
        assert!(gen_erdos_purdy_lattice(3).is_err());
    }

    #[test]
    fn grid_certificate_sizes() {
        assert_eq!(gen_grid(2, 2).unwrap().cert_len(), 4);
        // 3x3: 16 primitive non-axis segments, two triangles each
        assert_eq!(gen_grid(3, 3).unwrap().cert_len(), 32);
        assert!(gen_grid(1, 5).is_err());
    }
}

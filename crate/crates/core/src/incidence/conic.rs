//! Plane conics, the fixed-area hyperbola family of a line pair, and exact
//! tangency.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, primitive_ints, Line2, Point2, Rat};
use crate::poly::Poly;

/// `Ax² + Bxy + Cy² + Dx + Ey + F = 0` with coprime integer coefficients
/// whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conic2 {
    pub coef: [Rat; 6],
}

impl Conic2 {
    pub fn new(coef: [Rat; 6]) -> Result<Conic2> {
        if coef[..3].iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate);
        }
        let mut v = primitive_ints(&coef);
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
        let mut it = v.into_iter().map(Rat::from_integer);
        Ok(Conic2 { coef: std::array::from_fn(|_| it.next().expect("6 coefficients")) })
    }

    pub fn from_ints(c: [i64; 6]) -> Result<Conic2> {
        Conic2::new(c.map(int))
    }

    pub fn eval(&self, p: &Point2) -> Rat {
        let [a, b, c, d, e, f] = &self.coef;
        let (x, y) = (&p.x, &p.y);
        a * x * x + b * x * y + c * y * y + d * x + e * y + f
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.eval(p).is_zero()
    }

    /// Value of the quadratic part on a direction vector.
    pub fn quadratic_part(&self, v: &Point2) -> Rat {
        let [a, b, c, ..] = &self.coef;
        a * &v.x * &v.x + b * &v.x * &v.y + c * &v.y * &v.y
    }

    /// Gradient at a point.
    pub fn gradient(&self, p: &Point2) -> Point2 {
        let [a, b, c, d, e, _] = &self.coef;
        Point2::new(int(2) * a * &p.x + b * &p.y + d, b * &p.x + int(2) * c * &p.y + e)
    }

    /// Tangent line at a point of the conic (`None` at a singular point).
    pub fn tangent_at(&self, p: &Point2) -> Option<Line2> {
        let g = self.gradient(p);
        Line2::new(g.x.clone(), g.y.clone(), -(g.dot(p))).ok()
    }

    /// Determinant of the 2×2 quadratic-form matrix.
    pub fn det_quadratic(&self) -> Rat {
        let [a, b, c, ..] = &self.coef;
        a * c - b * b / int(4)
    }

    /// Determinant of the full symmetric 3×3 matrix.
    pub fn det_full(&self) -> Rat {
        let [a, b, c, d, e, f] = &self.coef;
        let h = int(2);
        let (b, d, e) = (b / &h, d / &h, e / &h);
        a * (c * f - &e * &e) - &b * (&b * f - &e * &d) + &d * (&b * &e - c * &d)
    }
}

impl fmt::Display for Conic2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = &self.coef;
        write!(f, "{a}x² + {b}xy + {c}y² + {d}x + {e}y + {g} = 0")
    }
}

fn line_product(l1: &Line2, l2: &Line2) -> [Rat; 6] {
    [
        &l1.a * &l2.a,
        &l1.a * &l2.b + &l1.b * &l2.a,
        &l1.b * &l2.b,
        &l1.a * &l2.c + &l1.c * &l2.a,
        &l1.b * &l2.c + &l1.c * &l2.b,
        &l1.c * &l2.c,
    ]
}

/// The two conics `L₁·L₂ = ±par_area·|a₁b₂ − a₂b₁|`: every point `p` on either
/// spans, with lines through `p` parallel to `l1` and `l2`, a parallelogram
/// of area `par_area` against `l1` and `l2`. Returned as `(+, −)`.
pub fn hyperbola_pair(l1: &Line2, l2: &Line2, par_area: &Rat) -> Result<(Conic2, Conic2)> {
    let det = (&l1.a * &l2.b - &l1.b * &l2.a).abs();
    if det.is_zero() {
        return Err(Error::ParallelLines);
    }
    let k = par_area * &det;
    let base = line_product(l1, l2);
    let mut plus = base.clone();
    plus[5] = &plus[5] - &k;
    let mut minus = base;
    minus[5] = &minus[5] + &k;
    Ok((Conic2::new(plus)?, Conic2::new(minus)?))
}

/// Area of the parallelogram cut by `l1`, `l2` and their parallels through `p`.
pub fn parallelogram_area(l1: &Line2, l2: &Line2, p: &Point2) -> Result<Rat> {
    let det = (&l1.a * &l2.b - &l1.b * &l2.a).abs();
    if det.is_zero() {
        return Err(Error::ParallelLines);
    }
    Ok((l1.eval(p) * l2.eval(p)).abs() / det)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LineConic {
    /// Double intersection; the point is always rational for rational data.
    Tangent {
        #[serde(skip)]
        point: Point2,
    },
    /// One or two transversal intersection points.
    Crossing { points: usize },
    Disjoint,
    /// The line lies on the (degenerate) conic.
    Contained,
}

/// Restriction of the conic to `line`, parametrized as `p₀ + t·dir`.
fn restrict(line: &Line2, conic: &Conic2) -> (Poly, Point2, Point2) {
    let p0 = line.point();
    let dir = line.direction();
    let alpha = conic.quadratic_part(&dir);
    let beta = conic.gradient(&p0).dot(&dir);
    let gamma = conic.eval(&p0);
    (Poly::new(vec![gamma, beta, alpha]), p0, dir)
}

pub fn line_conic(line: &Line2, conic: &Conic2) -> LineConic {
    let (q, p0, dir) = restrict(line, conic);
    match q.degree() {
        None => LineConic::Contained,
        Some(0) => LineConic::Disjoint,
        Some(1) => LineConic::Crossing { points: 1 },
        _ => {
            let (g, b, a) = (q.coeff(0), q.coeff(1), q.coeff(2));
            let disc = &b * &b - int(4) * &a * &g;
            if disc.is_zero() {
                let t = -b / (int(2) * a);
                LineConic::Tangent { point: p0.add(&dir.scale(&t)) }
            } else if disc.is_positive() {
                LineConic::Crossing { points: 2 }
            } else {
                LineConic::Disjoint
            }
        }
    }
}

/// True iff `line` touches `conic` in a double point.
pub fn tangent(line: &Line2, conic: &Conic2) -> bool {
    matches!(line_conic(line, conic), LineConic::Tangent { .. })
}

/// Checks the tangency law for a nondegenerate triangle: with `K` its doubled
/// area, one conic of `hyperbola_pair(top_ab, top_ac, K)` passes through `a`
/// and `top_bc` is tangent to it there.
pub fn tangency_law_holds(a: &Point2, b: &Point2, c: &Point2) -> Result<bool> {
    let t = super::top_lines(a, b, c)?;
    let k = crate::exact::double_area_2d(a, b, c).abs();
    let (h1, h2) = hyperbola_pair(&t.top[0], &t.top[1], &k)?;
    for h in [h1, h2] {
        if h.contains(a) {
            return Ok(matches!(line_conic(&t.top[2], &h), LineConic::Tangent { point } if &point == a));
        }
    }
    Ok(false)
}

/// Members of the fixed-area hyperbola family through `p` and `q` with
/// prescribed tangents there. The conics through `p`, `q` tangent to `tp`, `tq`
/// form the pencil `λ·tp·tq + μ·ℓ_pq²`; family membership is the binary sextic
/// `det(M̂)² + 4·area²·det(M)³ = 0` on that pencil.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFit {
    /// The sextic vanishes identically (a positive-dimensional solution set).
    pub identically_zero: bool,
    /// Distinct real pencil parameters satisfying the family condition.
    pub real_solutions: usize,
}

fn pencil_member(tp: &Line2, tq: &Line2, lpq: &Line2, lambda: &Rat, mu: &Rat) -> [Rat; 6] {
    let a = line_product(tp, tq);
    let b = line_product(lpq, lpq);
    std::array::from_fn(|i| lambda * &a[i] + mu * &b[i])
}

fn family_condition(coef: &[Rat; 6], area: &Rat) -> Rat {
    let [a, b, c, d, e, f] = coef;
    let h = int(2);
    let (b2, d2, e2) = (b / &h, d / &h, e / &h);
    let det_m = a * c - &b2 * &b2;
    let det_full = a * (c * f - &e2 * &e2) - &b2 * (&b2 * f - &e2 * &d2) + &d2 * (&b2 * &e2 - c * &d2);
    &det_full * &det_full + int(4) * area * area * &det_m * &det_m * &det_m
}

pub fn family_fit(p: &Point2, tp: &Line2, q: &Point2, tq: &Line2, area: &Rat) -> Result<FamilyFit> {
    if !tp.contains(p) || !tq.contains(q) {
        return Err(Error::InvalidParam("tangent lines must pass through their points".into()));
    }
    let lpq = Line2::through(p, q)?;
    // sample the sextic F(λ, 1) at 7 points and interpolate; then add μ = 0
    let samples: Vec<(Rat, Rat)> = (0..7)
        .map(|i| {
            let lam = int(i);
            let v = family_condition(&pencil_member(tp, tq, &lpq, &lam, &int(1)), area);
            (lam, v)
        })
        .collect();
    let f = interpolate(&samples);
    let at_infinity = family_condition(&pencil_member(tp, tq, &lpq, &int(1), &int(0)), area);
    if f.is_zero() && at_infinity.is_zero() {
        return Ok(FamilyFit { identically_zero: true, real_solutions: 0 });
    }
    let mut n = f.count_real_roots();
    if at_infinity.is_zero() {
        n += 1;
    }
    Ok(FamilyFit { identically_zero: false, real_solutions: n })
}

/// Whether a conic belongs to the pencil of conics through `p`, `q` with
/// tangents `tp`, `tq`, and satisfies the family condition for `area`.
pub fn in_family_pencil(conic: &Conic2, p: &Point2, tp: &Line2, q: &Point2, tq: &Line2, area: &Rat) -> Result<bool> {
    let lpq = Line2::through(p, q)?;
    let a = line_product(tp, tq);
    let b = line_product(&lpq, &lpq);
    // solve conic = λ·a + μ·b by trying coefficient pairs, then confirm all six
    for i in 0..6 {
        for j in i + 1..6 {
            let det = &a[i] * &b[j] - &a[j] * &b[i];
            if det.is_zero() {
                continue;
            }
            let c = &conic.coef;
            let lam = (&c[i] * &b[j] - &c[j] * &b[i]) / &det;
            let mu = (&a[i] * &c[j] - &a[j] * &c[i]) / &det;
            let m = pencil_member(tp, tq, &lpq, &lam, &mu);
            let same = (0..6).all(|t| m[t] == c[t]);
            return Ok(same && family_condition(&m, area).is_zero());
        }
    }
    Ok(false)
}

/// Lagrange interpolation through the given `(x, y)` samples.
fn interpolate(samples: &[(Rat, Rat)]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut term = Poly::constant(yi.clone());
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i != j {
                let lin = Poly::new(vec![-xj.clone(), int(1)]).scale(&(int(1) / (xi - xj)));
                term = term.mul(&lin);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn hyperbola_pair_examples() {
        let y0 = Line2::from_ints(0, 1, 0).unwrap();
        let yx = Line2::from_ints(1, -1, 0).unwrap();
        let (h1, h2) = hyperbola_pair(&y0, &yx, &int(2)).unwrap();
        // xy = y² + 2 and xy = y² − 2
        let want1 = Conic2::from_ints([0, 1, -1, 0, 0, -2]).unwrap();
        let want2 = Conic2::from_ints([0, 1, -1, 0, 0, 2]).unwrap();
        assert!((h1 == want1 && h2 == want2) || (h1 == want2 && h2 == want1));

        let (h1, h2) = hyperbola_pair(&Line2::from_ints(0, 1, -2).unwrap(), &Line2::from_ints(1, 0, -1).unwrap(), &int(2)).unwrap();
        // (x−1)(y−2) = ±2
        let want1 = Conic2::from_ints([0, 1, 0, -2, -1, 0]).unwrap();
        let want2 = Conic2::from_ints([0, 1, 0, -2, -1, 4]).unwrap();
        assert!((h1 == want1 && h2 == want2) || (h1 == want2 && h2 == want1));
        assert!(want1.contains(&p(0, 0)));
        assert!(matches!(hyperbola_pair(&y0, &Line2::from_ints(0, 2, 5).unwrap(), &int(1)), Err(Error::ParallelLines)));
    }

    #[test]
    fn tangency_examples() {
        let h = Conic2::from_ints([0, 1, 0, -2, -1, 0]).unwrap();
        let l = Line2::from_ints(2, 1, 0).unwrap(); // y = −2x
        assert_eq!(line_conic(&l, &h), LineConic::Tangent { point: p(0, 0) });
        let h = Conic2::from_ints([0, 1, -1, 0, 0, -2]).unwrap();
        assert!(!tangent(&Line2::from_ints(0, 1, 0).unwrap(), &h));
        assert_eq!(line_conic(&Line2::from_ints(0, 1, 0).unwrap(), &h), LineConic::Disjoint);
        let pair = Conic2::from_ints([0, 1, 0, 0, 0, 0]).unwrap(); // xy = 0
        assert_eq!(line_conic(&Line2::from_ints(1, 0, 0).unwrap(), &pair), LineConic::Contained);
    }

    #[test]
    fn points_on_the_pair_span_the_area() {
        let l1 = Line2::from_ints(1, 2, -3).unwrap();
        let l2 = Line2::from_ints(3, -1, 1).unwrap();
        let (h1, h2) = hyperbola_pair(&l1, &l2, &frac(5, 2)).unwrap();
        // walk along a line and collect rational intersection points
        for h in [h1, h2] {
            for x in -5..5 {
                let v = Line2::from_ints(1, 0, -x).unwrap();
                if let LineConic::Tangent { point } = line_conic(&v, &h) {
                    assert_eq!(parallelogram_area(&l1, &l2, &point).unwrap(), frac(5, 2));
                }
            }
        }
    }

    #[test]
    fn tangency_law_on_fixed_triangles() {
        assert!(tangency_law_holds(&p(0, 0), &p(2, 0), &p(0, 1)).unwrap());
        assert!(tangency_law_holds(&p(1, 1), &p(4, 2), &p(-1, 5)).unwrap());
    }

    #[test]
    fn family_pencil_is_finite() {
        // hyperbola x·y = 1 (area 1 against the axes), points (1,1) and (2,1/2)
        let h = Conic2::new([int(0), int(1), int(0), int(0), int(0), int(-1)]).unwrap();
        let (a, b) = (p(1, 1), Point2::new(int(2), frac(1, 2)));
        let (ta, tb) = (h.tangent_at(&a).unwrap(), h.tangent_at(&b).unwrap());
        let fit = family_fit(&a, &ta, &b, &tb, &int(1)).unwrap();
        assert!(!fit.identically_zero);
        assert!(fit.real_solutions >= 1 && fit.real_solutions <= 6);
        assert!(in_family_pencil(&h, &a, &ta, &b, &tb, &int(1)).unwrap());
        assert!(!in_family_pencil(&h, &a, &ta, &b, &tb, &int(3)).unwrap());
    }
}

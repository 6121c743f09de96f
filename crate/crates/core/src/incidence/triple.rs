//! Exact count of the common points of three cylinders with pairwise
//! nonparallel axes.
//!
//! One cylinder `C` is parametrized as `x = a₀ + p·u + q·v + s·d` with `u`, `v`
//! orthogonal to the axis, turning its equation into the ellipse
//! `U·p² + V·q² = R`. The other two cylinders become quadratics in `s` with
//! constant leading coefficient; their resultant in `s` is reduced modulo the
//! ellipse to `H₀(p) + q·H₁(p)` and the norm `V·(H₀² − w·H₁²)`, `w = (R − Up²)/V`,
//! is a univariate eliminant of degree at most 8. Every real root `p*` is
//! isolated and the points above it are counted with exact sign decisions at
//! `p*`; floating-point coordinates are only produced for reporting.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Cylinder3;
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, int, to_f64, Point3, Rat};
use crate::poly::{MPoly, Poly, RootInterval, SturmChain};

const P: usize = 0;
const Q: usize = 1;
const S: usize = 2;
const MAX_POINTS: usize = 8;
const RESIDUAL_TOL: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    /// Isolating interval of the eliminant root, as rational strings.
    pub interval: (String, String),
    /// Number of intersection points above this root.
    pub points: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleIntersection {
    pub count: usize,
    /// Which of the three cylinders served as the parametrized base.
    pub base: usize,
    pub eliminant_degree: usize,
    pub roots: Vec<RootReport>,
    /// Floating-point approximations of the intersection points.
    pub points: Vec<[f64; 3]>,
    /// Largest normalized membership residual over the reported points.
    pub max_residual: f64,
}

fn lift(p: &Point3) -> [MPoly; 3] {
    [MPoly::constant(p.x.clone()), MPoly::constant(p.y.clone()), MPoly::constant(p.z.clone())]
}

fn dot(a: &[MPoly; 3], b: &[MPoly; 3]) -> MPoly {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

/// `|d|²·|y|² − (y·d)² − r·|d|²` with `y = x − a`, the cylinder equation.
fn cylinder_poly(x: &[MPoly; 3], c: &Cylinder3) -> MPoly {
    let a = lift(&c.axis_point);
    let y: [MPoly; 3] = std::array::from_fn(|i| x[i].sub(&a[i]));
    let d = lift(&c.axis_dir);
    let dd = c.axis_dir.norm_sq();
    let yd = dot(&y, &d);
    dot(&y, &y).scale(&dd).sub(&yd.mul(&yd)).sub(&MPoly::constant(&c.radius_sq * &dd))
}

/// Sign of `a + b·√w` at the root, `w ≥ 0`.
fn sign_with_sqrt(iv: &RootInterval, f: &SturmChain, a: &Poly, b: &Poly, w: &Poly, w_sign: i32) -> i32 {
    let sa = iv.sign_of(f, a);
    if w_sign == 0 {
        return sa;
    }
    let sb = iv.sign_of(f, b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return if sa == 0 { sb } else { sa };
    }
    sa * iv.sign_of(f, &a.mul(a).sub(&b.mul(b).mul(w)))
}

fn points_from_sign(s: i32) -> usize {
    match s {
        1 => 2,
        0 => 1,
        _ => 0,
    }
}

struct Setup {
    a0: Point3,
    u: Point3,
    v: Point3,
    d: Point3,
    k: [Rat; 2],
    l: [MPoly; 2],
    m: [MPoly; 2],
    /// `R − U·p²`; the ellipse gives `q² = w_num / V`.
    w_num: Poly,
    v_norm: Rat,
}

impl Setup {
    fn point(&self, p: f64, q: f64, s: f64) -> [f64; 3] {
        let c = |a: &Point3| [to_f64(&a.x), to_f64(&a.y), to_f64(&a.z)];
        let (a0, u, v, d) = (c(&self.a0), c(&self.u), c(&self.v), c(&self.d));
        std::array::from_fn(|i| a0[i] + p * u[i] + q * v[i] + s * d[i])
    }

    /// Roots in `s` of the first quadratic at `(p, q)`, for reporting.
    fn s_values(&self, p: f64, q: f64, count: usize) -> Vec<f64> {
        let k = to_f64(&self.k[0]);
        let l = self.l[0].eval_f64([p, q, 0.0]);
        let m = self.m[0].eval_f64([p, q, 0.0]);
        let disc = (l * l - 4.0 * k * m).max(0.0).sqrt();
        match count {
            0 => vec![],
            1 => vec![-l / (2.0 * k)],
            _ => vec![(-l + disc) / (2.0 * k), (-l - disc) / (2.0 * k)],
        }
    }

    /// The single `s` shared by both quadratics when they are not proportional.
    fn s_common(&self, p: f64, q: f64) -> f64 {
        let (k1, k2) = (to_f64(&self.k[0]), to_f64(&self.k[1]));
        let lin = k2 * self.l[0].eval_f64([p, q, 0.0]) - k1 * self.l[1].eval_f64([p, q, 0.0]);
        let cst = k2 * self.m[0].eval_f64([p, q, 0.0]) - k1 * self.m[1].eval_f64([p, q, 0.0]);
        -cst / lin
    }
}

fn setup(base: &Cylinder3, c1: &Cylinder3, c2: &Cylinder3) -> Setup {
    let d = base.axis_dir.clone();
    let coords = [d.x.abs(), d.y.abs(), d.z.abs()];
    let k = (0..3).min_by(|&i, &j| coords[i].cmp(&coords[j])).unwrap_or(0);
    let e = match k {
        0 => Point3::from_ints(1, 0, 0),
        1 => Point3::from_ints(0, 1, 0),
        _ => Point3::from_ints(0, 0, 1),
    };
    let u = d.cross(&e);
    let v = d.cross(&u);
    let vars = [MPoly::var(P), MPoly::var(Q), MPoly::var(S)];
    let a0 = lift(&base.axis_point);
    let (uu, vv, dd) = (lift(&u), lift(&v), lift(&d));
    let x: [MPoly; 3] = std::array::from_fn(|i| {
        a0[i].add(&vars[0].mul(&uu[i])).add(&vars[1].mul(&vv[i])).add(&vars[2].mul(&dd[i]))
    });
    let quads = [cylinder_poly(&x, c1), cylinder_poly(&x, c2)];
    let k: [Rat; 2] = std::array::from_fn(|i| quads[i].coeff_of(S, 2).as_constant().expect("s² coefficient is constant"));
    let l: [MPoly; 2] = std::array::from_fn(|i| quads[i].coeff_of(S, 1));
    let m: [MPoly; 2] = std::array::from_fn(|i| quads[i].coeff_of(S, 0));
    // u, v, d pairwise orthogonal: squared distance to the axis is U p² + V q²
    let un = u.norm_sq();
    let vn = v.norm_sq();
    let w_num = Poly::new(vec![base.radius_sq.clone(), Rat::zero(), -un]);
    Setup { a0: base.axis_point.clone(), u, v, d, k, l, m, w_num, v_norm: vn }
}

/// Returns `None` when the eliminant vanishes identically for this base.
fn solve_with_base(base: &Cylinder3, c1: &Cylinder3, c2: &Cylinder3) -> Result<Option<(Poly, Vec<RootReport>, Vec<[f64; 3]>)>> {
    let st = setup(base, c1, c2);
    let (k1, k2) = (MPoly::constant(st.k[0].clone()), MPoly::constant(st.k[1].clone()));
    let [l1, l2] = &st.l;
    let [m1, m2] = &st.m;
    // resultant of k1 s² + l1 s + m1 and k2 s² + l2 s + m2
    let a = k1.mul(m2).sub(&k2.mul(m1));
    let b = k1.mul(l2).sub(&k2.mul(l1));
    let c = l1.mul(m2).sub(&l2.mul(m1));
    let res = a.mul(&a).sub(&b.mul(&c));
    let w = st.w_num.scale(&(int(1) / &st.v_norm));
    let (h0, h1) = res.reduce_square(&w);
    let elim = h0.mul(&h0).sub(&w.mul(&h1).mul(&h1)).scale(&st.v_norm);
    if elim.is_zero() {
        return Ok(None);
    }
    let f = SturmChain::new(&elim);
    let (b0, b1) = b.reduce_square(&w);
    let disc = l1.mul(l1).sub(&k1.mul(m1).scale(&int(4)));
    let (a0, a1) = disc.reduce_square(&w);

    let mut roots = Vec::new();
    let mut pts = Vec::new();
    let width = int(1) / Rat::from_integer(num_bigint::BigInt::from(1u8) << 64);
    for coarse in elim.isolate_roots() {
        // signs are decided on the narrow interval, where most polynomials
        // have no root left and need no gcd test
        let mut iv = coarse.clone();
        iv.refine_to(&f, &width);
        let pm = iv.midpoint();
        let pf = to_f64(&pm);
        let s1 = iv.sign_of(&f, &h1);
        let mut count = 0;
        if s1 != 0 {
            // q = −H₀/H₁ at the root
            let qf = to_f64(&(-h0.eval(&pm) / h1.eval(&pm)));
            let lin = b0.mul(&h1).sub(&b1.mul(&h0));
            if iv.sign_of(&f, &lin) != 0 {
                count = 1;
                pts.push(st.point(pf, qf, st.s_common(pf, qf)));
            } else {
                let dsign = iv.sign_of(&f, &a0.mul(&h1).sub(&a1.mul(&h0))) * s1;
                let c = points_from_sign(dsign);
                count = c;
                for s in st.s_values(pf, qf, c) {
                    pts.push(st.point(pf, qf, s));
                }
            }
        } else {
            let ws = iv.sign_of(&f, &st.w_num);
            if ws >= 0 {
                let wf = (to_f64(&st.w_num.eval(&pm)) / to_f64(&st.v_norm)).max(0.0).sqrt();
                let branches: &[i32] = if ws == 0 { &[1] } else { &[1, -1] };
                for &sigma in branches {
                    let qf = wf * sigma as f64;
                    let sb = b1.scale(&int(sigma as i64));
                    if sign_with_sqrt(&iv, &f, &b0, &sb, &w, ws) != 0 {
                        count += 1;
                        pts.push(st.point(pf, qf, st.s_common(pf, qf)));
                    } else {
                        let sa1 = a1.scale(&int(sigma as i64));
                        let c = points_from_sign(sign_with_sqrt(&iv, &f, &a0, &sa1, &w, ws));
                        count += c;
                        for s in st.s_values(pf, qf, c) {
                            pts.push(st.point(pf, qf, s));
                        }
                    }
                }
            }
        }
        roots.push(RootReport { interval: (fmt_rat(&coarse.lo), fmt_rat(&coarse.hi)), points: count });
    }
    Ok(Some((elim, roots, pts)))
}

fn residual(c: &Cylinder3, x: &[f64; 3]) -> f64 {
    let a = [to_f64(&c.axis_point.x), to_f64(&c.axis_point.y), to_f64(&c.axis_point.z)];
    let d = [to_f64(&c.axis_dir.x), to_f64(&c.axis_dir.y), to_f64(&c.axis_dir.z)];
    let y: Vec<f64> = (0..3).map(|i| x[i] - a[i]).collect();
    let dd: f64 = d.iter().map(|t| t * t).sum();
    let yy: f64 = y.iter().map(|t| t * t).sum();
    let yd: f64 = (0..3).map(|i| y[i] * d[i]).sum();
    let r = to_f64(&c.radius_sq);
    (yy - yd * yd / dd - r).abs() / (1.0 + r + yy)
}

pub fn cylinder_triple_intersection(c0: &Cylinder3, c1: &Cylinder3, c2: &Cylinder3) -> Result<TripleIntersection> {
    let cs = [c0, c1, c2];
    for i in 0..3 {
        for j in i + 1..3 {
            if cs[i].axis_dir.cross(&cs[j].axis_dir).is_zero() {
                return Err(Error::ParallelAxes);
            }
        }
    }
    for base in 0..3 {
        let (o1, o2) = (cs[(base + 1) % 3], cs[(base + 2) % 3]);
        let Some((elim, roots, points)) = solve_with_base(cs[base], o1, o2)? else {
            continue;
        };
        let count: usize = roots.iter().map(|r| r.points).sum();
        if count > MAX_POINTS {
            return Err(Error::InvariantViolated(format!("{count} common points of three cylinders exceeds {MAX_POINTS}")));
        }
        let max_residual = points.iter().flat_map(|x| cs.iter().map(move |c| residual(c, x))).fold(0.0, f64::max);
        if max_residual > RESIDUAL_TOL {
            return Err(Error::InvariantViolated(format!("intersection point fails membership check (residual {max_residual:e})")));
        }
        return Ok(TripleIntersection { count, base, eliminant_degree: elim.degree().unwrap_or(0), roots, points, max_residual });
    }
    Err(Error::InvariantViolated("eliminant vanishes identically for every base cylinder".into()))
}

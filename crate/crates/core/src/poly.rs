//! Exact polynomials over the rationals: a univariate type with Sturm-based
//! real-root counting and isolation, and a small sparse multivariate type
//! used to build elimination polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{int, Rat};

/// Dense univariate polynomial; `c[i]` is the coefficient of `x^i`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn new(mut c: Vec<Rat>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn constant(r: Rat) -> Poly {
        Poly::new(vec![r])
    }

    /// The polynomial `x`.
    pub fn x() -> Poly {
        Poly::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn lead(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + crate::exact::to_f64(a);
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> i32 {
        sign(&self.eval(x))
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.c.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::constant(Rat::one());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Euclidean division. Panics on division by the zero polynomial.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        let lead = d.lead();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let f = &r[i] / &lead;
            if f.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[i - dd + j] -= &f * b;
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Rat::one() / self.lead()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a * int(i as i64)).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Square-free part (same real roots, all simple).
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut b = IntPoly::new(&self.derivative()).to_poly();
        let mut a = self.clone();
        while !b.is_zero() {
            seq.push(b.clone());
            // positive rescaling keeps the sign pattern and the numbers small
            let r = IntPoly::new(&a.rem(&b).neg()).to_poly();
            a = b;
            b = r;
        }
        seq
    }

    /// Upper bound on the absolute value of every real root (Cauchy).
    pub fn root_bound(&self) -> Rat {
        let lead = self.lead().abs();
        let m = self.c.iter().rev().skip(1).map(|a| a.abs() / &lead).max().unwrap_or_else(Rat::zero);
        m + Rat::one()
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rat, hi: &Rat) -> usize {
        let s = self.sturm();
        count_with(&s, lo, hi)
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let b = self.root_bound();
        self.count_roots(&-b.clone(), &b)
    }

    /// Disjoint intervals `(lo, hi]`, each holding exactly one distinct real
    /// root, in increasing order.
    pub fn isolate_roots(&self) -> Vec<RootInterval> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let chain = SturmChain::new(self);
        let b = chain.poly().root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            match chain.count(&lo, &hi) {
                0 => {}
                1 => out.push(RootInterval { lo, hi }),
                _ => {
                    let mid = (&lo + &hi) / int(2);
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }
}

fn sign(r: &Rat) -> i32 {
    match r.cmp(&Rat::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn variations(seq: &[Poly], x: &Rat) -> usize {
    let mut last = 0;
    let mut v = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn count_with(seq: &[Poly], lo: &Rat, hi: &Rat) -> usize {
    variations(seq, lo).saturating_sub(variations(seq, hi))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| match i {
                0 => format!("{a}"),
                1 => format!("{a}*x"),
                _ => format!("{a}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Interval `(lo, hi]` containing exactly one real root of a square-free
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Halves the interval, keeping the half that still holds the root.
    pub fn bisect(&mut self, f: &SturmChain) {
        let mid = (&self.lo + &self.hi) / int(2);
        let sl = f.sign_at(&self.lo);
        if sl != 0 {
            // the root is simple, so f changes sign across it
            let sm = f.sign_at(&mid);
            if sm == 0 || sm != sl {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        } else if f.count(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to(&mut self, f: &SturmChain, width: &Rat) {
        while &self.width() > width {
            if f.sign_at(&self.hi) == 0 {
                self.lo = self.hi.clone() - width;
                break;
            }
            self.bisect(f);
        }
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / int(2)
    }

    /// Sign of `g` at the root of `f` isolated by `self`. If `g` has no root
    /// in the interval its sign at an endpoint decides; otherwise the sign is
    /// zero exactly when `gcd(f, g)` vanishes inside, and refining settles it.
    pub fn sign_of(&self, f: &SturmChain, g: &Poly) -> i32 {
        if g.is_zero() {
            return 0;
        }
        if g.degree() == Some(0) {
            return sign(&g.lead());
        }
        let gs = SturmChain::with_repeated_roots(g);
        if gs.count(&self.lo, &self.hi) == 0 {
            return gs.sign_at(&self.hi);
        }
        let h = f.poly().gcd(g);
        if h.degree().unwrap_or(0) > 0 && h.count_roots(&self.lo, &self.hi) > 0 {
            return 0;
        }
        let mut iv = self.clone();
        while gs.count(&iv.lo, &iv.hi) > 0 {
            iv.bisect(f);
        }
        gs.sign_at(&iv.hi)
    }
}

/// Integer coefficients, a positive multiple of a rational polynomial, so
/// signs can be evaluated without rational normalization.
#[derive(Clone, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn new(p: &Poly) -> IntPoly {
        let l = p.c.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
        let v: Vec<BigInt> = p.c.iter().map(|a| a.numer() * (&l / a.denom())).collect();
        let g = v.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
        if g.is_zero() || g.is_one() {
            return IntPoly(v);
        }
        IntPoly(v.into_iter().map(|a| a / &g).collect())
    }

    fn to_poly(&self) -> Poly {
        Poly::new(self.0.iter().map(|a| Rat::from_integer(a.clone())).collect())
    }

    /// Sign of `q^n·f(p/q)` with `q > 0`, by homogeneous Horner.
    fn sign_at(&self, x: &Rat) -> i32 {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.0.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
}

/// A polynomial's Sturm sequence in integer form, kept so repeated root
/// counts and sign queries do not rebuild it.
#[derive(Clone, Debug)]
pub struct SturmChain {
    f: Poly,
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// Chain of the square-free part; `poly()` is that part.
    pub fn new(p: &Poly) -> SturmChain {
        SturmChain::with_repeated_roots(&p.squarefree())
    }

    /// Chain of `p` itself. Counts are still of distinct roots.
    pub fn with_repeated_roots(p: &Poly) -> SturmChain {
        SturmChain { f: p.clone(), seq: p.sturm().iter().map(IntPoly::new).collect() }
    }

    pub fn poly(&self) -> &Poly {
        &self.f
    }

    pub fn sign_at(&self, x: &Rat) -> i32 {
        match self.seq.first() {
            Some(p) => p.sign_at(x),
            None => 0,
        }
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rat, hi: &Rat) -> usize {
        let var = |x: &Rat| {
            let mut last = 0;
            let mut v = 0usize;
            for p in &self.seq {
                let s = p.sign_at(x);
                if s != 0 {
                    if last != 0 && s != last {
                        v += 1;
                    }
                    last = s;
                }
            }
            v
        };
        var(lo).saturating_sub(var(hi))
    }
}

/// Sparse multivariate polynomial with up to three variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<[u32; 3], Rat>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn constant(r: Rat) -> MPoly {
        let mut m = MPoly::zero();
        m.add_term([0, 0, 0], r);
        m
    }

    /// The variable with index `i` (0, 1 or 2).
    pub fn var(i: usize) -> MPoly {
        let mut e = [0; 3];
        e[i] = 1;
        let mut m = MPoly::zero();
        m.add_term(e, Rat::one());
        m
    }

    fn add_term(&mut self, e: [u32; 3], r: Rat) {
        if r.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += r;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> MPoly {
        let mut r = MPoly::zero();
        for (e, c) in &self.terms {
            r.add_term(*e, c * s);
        }
        r
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        r
    }

    /// Coefficient of `var^k` as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: usize, k: u32) -> MPoly {
        let mut r = MPoly::zero();
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = *e;
                e2[var] = 0;
                r.add_term(e2, c.clone());
            }
        }
        r
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..3 {
                for _ in 0..e[v] {
                    t *= &x[v];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, x: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| crate::exact::to_f64(c) * x[0].powi(e[0] as i32) * x[1].powi(e[1] as i32) * x[2].powi(e[2] as i32))
            .sum()
    }

    /// Constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    /// Polynomial in variables 0 and 1 reduced by `v1² = w(v0)`, returned as
    /// `(h0, h1)` with `self ≡ h0(v0) + v1·h1(v0)`. Variable 2 must be absent.
    pub fn reduce_square(&self, w: &Poly) -> (Poly, Poly) {
        let mut h = [Poly::zero(), Poly::zero()];
        for (e, c) in &self.terms {
            assert_eq!(e[2], 0, "reduce_square expects a bivariate polynomial");
            let mut mono = vec![Rat::zero(); e[0] as usize + 1];
            mono[e[0] as usize] = c.clone();
            let term = Poly::new(mono).mul(&w.pow(e[1] / 2));
            let slot = (e[1] % 2) as usize;
            h[slot] = h[slot].add(&term);
        }
        let [h0, h1] = h;
        (h0, h1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // x² − 1
        let b = Poly::from_ints(&[1, 1]); // x + 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let c = Poly::from_ints(&[1, 2, 1]); // (x+1)²
        assert_eq!(a.gcd(&c), b);
        assert_eq!(c.squarefree(), b);
    }

    #[test]
    fn sturm_counts() {
        // (x−1)(x−2)(x+3)
        let p = Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[-2, 1])).mul(&Poly::from_ints(&[3, 1]));
        assert_eq!(p.count_real_roots(), 3);
        assert_eq!(p.count_roots(&int(0), &int(2)), 2);
        assert_eq!(p.count_roots(&int(1), &int(2)), 1);
        assert_eq!(Poly::from_ints(&[1, 0, 1]).count_real_roots(), 0);
        // repeated roots are counted once
        assert_eq!(Poly::from_ints(&[1, -2, 1]).count_real_roots(), 1);
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (x − 1/1000)(x − 2/1000)(x² − 2)
        let p = Poly::new(vec![frac(-1, 1000), int(1)])
            .mul(&Poly::new(vec![frac(-2, 1000), int(1)]))
            .mul(&Poly::from_ints(&[-2, 0, 1]));
        let iv = p.isolate_roots();
        assert_eq!(iv.len(), 4);
        for w in iv.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        let mut r = iv[3].clone();
        r.refine_to(&SturmChain::new(&p), &frac(1, 1_000_000));
        assert!((crate::exact::to_f64(&r.midpoint()) - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn sign_at_algebraic_root() {
        let f = Poly::from_ints(&[-2, 0, 1]); // roots ±√2
        let iv = f.isolate_roots();
        let pos = iv.iter().find(|r| r.lo >= int(0)).unwrap();
        let f = SturmChain::new(&f);
        assert_eq!(pos.sign_of(&f, &Poly::from_ints(&[-1, 1])), 1); // √2 − 1 > 0
        assert_eq!(pos.sign_of(&f, &Poly::from_ints(&[-3, 2])), -1); // 2√2 − 3 < 0
        assert_eq!(pos.sign_of(&f, &Poly::from_ints(&[-4, 0, 2])), 0); // 2x² − 4
        assert_eq!(pos.sign_of(&f, &f.poly().mul(&Poly::x())), 0);
    }

    #[test]
    fn multivariate_reduction() {
        let p = MPoly::var(0);
        let q = MPoly::var(1);
        // p + q³ with q² = 1 − p²  →  p + q(1 − p²)
        let e = p.add(&q.mul(&q).mul(&q));
        let (h0, h1) = e.reduce_square(&Poly::from_ints(&[1, 0, -1]));
        assert_eq!(h0, Poly::x());
        assert_eq!(h1, Poly::from_ints(&[1, 0, -1]));
        assert_eq!(q.mul(&q).coeff_of(1, 2).as_constant(), Some(int(1)));
    }
}

//! Charging schemes for minimum-area triangles, run as audits.
//!
//! Every minimum-area triangle is charged to its longest side. In the plane
//! the apex must then sit strictly inside the far side of the empty
//! rectangle over that side, so each side of a segment takes at most one
//! charge. In space the apex lies on a bounded piece of the cylinder around
//! the segment, and thin triangles are rare enough that each segment takes at
//! most two of them. Any breach is an error, never a log line.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::census::{acute_min_area_count, min_nonzero_area};
use crate::error::{Error, Result};
use crate::exact::{double_area_2d, fmt_rat, int, longest_side_with_apex, quad_sq_area_3d, AreaKey, Geom, Point2, Point3, Rat};

pub const MAX_PER_SEGMENT_2D: usize = 2;
pub const MAX_PER_SEGMENT_3D: usize = 10;
pub const MAX_THIN_PER_SEGMENT_3D: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Thickness {
    Fat,
    Thin,
}

/// Thin iff `4·height² < side²` for the longest side. The witness is
/// `(4·height², side²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FatThinTag {
    pub tag: Thickness,
    #[serde(serialize_with = "ser_pair")]
    pub ratio_witness: (Rat, Rat),
}

fn ser_pair<S: serde::Serializer>(p: &(Rat, Rat), s: S) -> std::result::Result<S::Ok, S::Error> {
    (fmt_rat(&p.0), fmt_rat(&p.1)).serialize(s)
}

impl FatThinTag {
    /// From `K = 4·area²` and `L = |ab|²` of the longest side.
    pub fn classify(k: &Rat, l: &Rat) -> FatThinTag {
        let four_h2 = int(4) * k / l;
        let tag = if &four_h2 < l { Thickness::Thin } else { Thickness::Fat };
        FatThinTag { tag, ratio_witness: (four_h2, l.clone()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Charge {
    pub triangle: [usize; 3],
    pub apex: usize,
    /// Half-plane of the apex relative to the directed canonical segment
    /// (`+1` left, `−1` right); always 0 in space.
    pub side: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<FatThinTag>,
}

/// Assignment of minimum-area triangles to their longest sides, keyed by the
/// index pair `(i, j)`, `i < j`, of the side's endpoints.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChargeMap {
    pub key: Option<AreaKey>,
    pub assignments: BTreeMap<(usize, usize), Vec<Charge>>,
}

impl ChargeMap {
    pub fn total(&self) -> usize {
        self.assignments.values().map(Vec::len).sum()
    }

    pub fn load(&self, i: usize, j: usize) -> usize {
        self.assignments.get(&(i.min(j), i.max(j))).map_or(0, Vec::len)
    }

    pub fn max_load(&self) -> usize {
        self.assignments.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_thin_load(&self) -> usize {
        self.assignments
            .values()
            .map(|v| v.iter().filter(|c| c.tag.as_ref().is_some_and(|t| t.tag == Thickness::Thin)).count())
            .max()
            .unwrap_or(0)
    }

    pub fn tags(&self) -> impl Iterator<Item = &FatThinTag> {
        self.assignments.values().flatten().filter_map(|c| c.tag.as_ref())
    }
}

/// Longest side as an index pair `(i, j)` in canonical segment order, plus the
/// apex index.
fn charged_side<P: Geom>(pts: &[P], t: [usize; 3]) -> Result<(usize, usize, usize)> {
    let (seg, k) = longest_side_with_apex(&pts[t[0]], &pts[t[1]], &pts[t[2]])?;
    let apex = t[k];
    let others: Vec<usize> = t.iter().copied().filter(|&x| x != apex).collect();
    let (i, j) = if pts[others[0]] == seg.p { (others[0], others[1]) } else { (others[1], others[0]) };
    Ok((i, j, apex))
}

fn violation(msg: String) -> Error {
    Error::ChargingInvariantViolated(msg)
}

pub fn charge_min_area_2d(pts: &[Point2]) -> Result<ChargeMap> {
    let m = min_nonzero_area(pts)?;
    let mut map = ChargeMap { key: Some(m.key.clone()), ..Default::default() };
    for t in &m.witnesses {
        let (i, j, c) = charged_side(pts, *t)?;
        let (a, b, p) = (&pts[i], &pts[j], &pts[c]);
        let ab = b.sub(a);
        let proj = p.sub(a).dot(&ab) / ab.norm_sq();
        if !(proj.is_positive() && proj < int(1)) {
            return Err(violation(format!("apex {c} of triangle {t:?} projects to {proj} outside the open side {i}-{j}")));
        }
        let side: i8 = if double_area_2d(a, b, p).is_positive() { 1 } else { -1 };
        let slot = map.assignments.entry((i.min(j), i.max(j))).or_default();
        if let Some(prev) = slot.iter().find(|x| x.side == side) {
            return Err(violation(format!(
                "segment {i}-{j} charged twice on one side: triangles {:?} and {t:?}",
                prev.triangle
            )));
        }
        slot.push(Charge { triangle: *t, apex: c, side, tag: None });
    }
    Ok(map)
}

/// Charges in space with the cylinder-portion, radius and thin/fat audits.
pub fn charge_min_area_3d(pts: &[Point3]) -> Result<ChargeMap> {
    let m = min_nonzero_area(pts)?;
    let mut map = ChargeMap { key: Some(m.key.clone()), ..Default::default() };
    for t in &m.witnesses {
        let (i, j, c) = charged_side(pts, *t)?;
        let (a, b, p) = (&pts[i], &pts[j], &pts[c]);
        let k = quad_sq_area_3d(a, b, p);
        let l = a.sq_dist(b);
        // apex on the bounded portion: projection in [0,1], both other sides ≤ ab,
        // squared distance to the axis equal to the squared height K/L
        let ab = b.sub(a);
        let ap = p.sub(a);
        let proj = ap.dot(&ab) / &l;
        let dist_sq = ap.norm_sq() - &proj * &proj * &l;
        let on_portion = !proj.is_negative() && proj <= int(1) && a.sq_dist(p) <= l && b.sq_dist(p) <= l && dist_sq == &k / &l;
        if !on_portion {
            return Err(violation(format!("apex {c} of triangle {t:?} is off the bounded cylinder portion around {i}-{j}")));
        }
        if int(4) * &k > int(3) * &l * &l {
            return Err(violation(format!("triangle {t:?}: 4r² > 3h² (K = {k}, L = {l})")));
        }
        let tag = FatThinTag::classify(&k, &l);
        if tag.tag == Thickness::Fat && !fat_side_in_range(&k, &l) {
            return Err(violation(format!("fat triangle {t:?}: longest side outside the normalized range (K = {k}, L = {l})")));
        }
        map.assignments.entry((i.min(j), i.max(j))).or_default().push(Charge { triangle: *t, apex: c, side: 0, tag: Some(tag) });
    }
    for (&(i, j), v) in &map.assignments {
        if v.len() > MAX_PER_SEGMENT_3D {
            return Err(violation(format!("segment {i}-{j} charged {} times", v.len())));
        }
        let thin = v.iter().filter(|c| c.tag.as_ref().is_some_and(|t| t.tag == Thickness::Thin)).count();
        if thin > MAX_THIN_PER_SEGMENT_3D {
            return Err(violation(format!("segment {i}-{j} has {thin} thin charges")));
        }
    }
    Ok(map)
}

/// With area normalized to 1 (`K = 4`), a fat triangle's longest side `h`
/// satisfies `16/3 ≤ h⁴ ≤ 16`; scale-free this is `4K/3 ≤ L² ≤ 4K`.
pub fn fat_side_in_range(k: &Rat, l: &Rat) -> bool {
    let l2 = l * l;
    int(4) * k <= int(3) * &l2 && l2 <= int(4) * k
}

/// `C(k₁,2) + C(k₂,2) ≥ (k₁−1)·k₂`, the counting step behind the refined
/// planar bound.
pub fn k12_inequality(k1: u64, k2: u64) -> bool {
    let c2 = |k: u64| k * k.saturating_sub(1) / 2;
    c2(k1) + c2(k2) >= k1.saturating_sub(1) * k2
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Clause {
    fn new(name: &str, pass: bool, witness: Option<String>) -> Clause {
        Clause { name: name.into(), pass, witness }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct AuditReport {
    pub clauses: Vec<Clause>,
    pub stats: BTreeMap<String, Value>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    /// `Err(AuditFailed)` naming the first failing clause.
    pub fn into_result(self) -> Result<AuditReport> {
        match self.clauses.iter().find(|c| !c.pass) {
            Some(c) => Err(Error::AuditFailed(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))),
            None => Ok(self),
        }
    }
}

fn charging_clause(r: &Result<ChargeMap>) -> Result<Clause> {
    match r {
        Ok(_) => Ok(Clause::new("charging_invariants", true, None)),
        Err(Error::ChargingInvariantViolated(w)) => Ok(Clause::new("charging_invariants", false, Some(w.clone()))),
        Err(Error::NoNonzeroTriangle) => Err(Error::NoNonzeroTriangle),
        Err(e) => Err(Error::InvalidParam(e.to_string())),
    }
}

/// Planar charging audit with the global bounds `n² − n` and `⅔(n² − n)`.
pub fn audit_charge_2d(pts: &[Point2]) -> Result<AuditReport> {
    let r = charge_min_area_2d(pts);
    let mut rep = AuditReport::default();
    rep.clauses.push(charging_clause(&r)?);
    if let Ok(map) = &r {
        let n = pts.len() as u64;
        let count = map.total() as u64;
        let load = map.max_load();
        rep.clauses.push(Clause::new("per_segment_at_most_2", load <= MAX_PER_SEGMENT_2D, Some(format!("max load {load}"))));
        rep.clauses.push(Clause::new("count_at_most_n2_minus_n", count <= n * n - n, Some(format!("{count} vs {}", n * n - n))));
        rep.clauses.push(Clause::new(
            "count_at_most_two_thirds_n2_minus_n",
            3 * count <= 2 * (n * n - n),
            Some(format!("3·{count} vs 2·{}", n * n - n)),
        ));
        rep.stats.insert("n".into(), json!(n));
        rep.stats.insert("min_area_key".into(), json!(map.key.as_ref().map(|k| fmt_rat(&k.0))));
        rep.stats.insert("min_area_count".into(), json!(count));
        rep.stats.insert("max_segment_load".into(), json!(load));
    }
    Ok(rep)
}

pub fn audit_charge_3d(pts: &[Point3]) -> Result<AuditReport> {
    let r = charge_min_area_3d(pts);
    let mut rep = AuditReport::default();
    rep.clauses.push(charging_clause(&r)?);
    if let Ok(map) = &r {
        let (load, thin) = (map.max_load(), map.max_thin_load());
        rep.clauses.push(Clause::new("per_segment_at_most_10", load <= MAX_PER_SEGMENT_3D, Some(format!("max load {load}"))));
        rep.clauses.push(Clause::new("thin_per_segment_at_most_2", thin <= MAX_THIN_PER_SEGMENT_3D, Some(format!("max thin load {thin}"))));
        let fat = map.tags().filter(|t| t.tag == Thickness::Fat).count();
        rep.stats.insert("n".into(), json!(pts.len()));
        rep.stats.insert("min_area_key".into(), json!(map.key.as_ref().map(|k| fmt_rat(&k.0))));
        rep.stats.insert("min_area_count".into(), json!(map.total()));
        rep.stats.insert("fat".into(), json!(fat));
        rep.stats.insert("thin".into(), json!(map.total() - fat));
        rep.stats.insert("max_segment_load".into(), json!(load));
        rep.stats.insert("max_thin_load".into(), json!(thin));
    }
    Ok(rep)
}

fn grid_points(w: usize, h: usize) -> Vec<Point2> {
    let mut v = Vec::with_capacity(w * h);
    for x in 0..w as i64 {
        for y in 0..h as i64 {
            v.push(Point2::from_ints(x, y));
        }
    }
    v
}

/// Visibility by brute force: no other grid point on the open segment.
fn visible(pts: &[Point2], i: usize, j: usize) -> bool {
    let (a, b) = (&pts[i], &pts[j]);
    let ab = b.sub(a);
    let l = ab.norm_sq();
    !pts.iter().enumerate().any(|(k, p)| {
        if k == i || k == j {
            return false;
        }
        let ap = p.sub(a);
        if !ab.cross(&ap).is_zero() {
            return false;
        }
        let t = ap.dot(&ab);
        t.is_positive() && t < l
    })
}

/// Exhaustive audit of the `w × h` grid: non-axis visibility segments carry
/// exactly two charges and nothing else is charged, visibility matches the
/// gcd test, the charged-segment ratio matches the gcd count, and no
/// minimum-area triangle is acute.
pub fn grid_visibility_audit(w: usize, h: usize) -> Result<AuditReport> {
    if w < 2 || h < 2 {
        return Err(Error::InvalidParam(format!("grid audit needs w, h >= 2, got {w}x{h}")));
    }
    let pts = grid_points(w, h);
    let n = pts.len();
    let map = charge_min_area_2d(&pts)?;
    let (mut bad_a, mut bad_b) = (None, None);
    let mut primitive_diag = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            let d = pts[j].sub(&pts[i]);
            let (dx, dy) = (d.x.to_integer(), d.y.to_integer());
            let axis = dx.is_zero() || dy.is_zero();
            let coprime = dx.gcd(&dy) == 1.into();
            if !axis && coprime {
                primitive_diag += 1;
            }
            let want = if !axis && coprime { 2 } else { 0 };
            let got = map.load(i, j);
            if got != want && bad_a.is_none() {
                bad_a = Some(format!("segment {}-{} charged {got}, expected {want}", pts[i], pts[j]));
            }
            if visible(&pts, i, j) != coprime && bad_b.is_none() {
                bad_b = Some(format!("segment {}-{}: visibility disagrees with gcd", pts[i], pts[j]));
            }
        }
    }
    let pairs = (n * (n - 1) / 2) as u64;
    let charged = map.assignments.len() as u64;
    let ratio = primitive_diag as f64 / pairs as f64;
    let density = 6.0 / std::f64::consts::PI.powi(2);
    let acute = acute_min_area_count(&pts)?;
    let mut rep = AuditReport::default();
    rep.clauses.push(Clause::new("a_visibility_segments_charged_twice", bad_a.is_none(), bad_a));
    rep.clauses.push(Clause::new("b_visibility_iff_gcd_one", bad_b.is_none(), bad_b));
    rep.clauses.push(Clause::new(
        "c_charged_ratio_matches_gcd_count",
        charged == primitive_diag,
        Some(format!("{charged} charged segments, {primitive_diag} primitive non-axis segments")),
    ));
    rep.clauses.push(Clause::new("d_no_acute_min_area_triangle", acute == 0, (acute > 0).then(|| format!("{acute} acute"))));
    rep.stats.insert("w".into(), json!(w));
    rep.stats.insert("h".into(), json!(h));
    rep.stats.insert("n".into(), json!(n));
    rep.stats.insert("min_area_count".into(), json!(map.total()));
    rep.stats.insert("count_over_n2".into(), json!(map.total() as f64 / (n * n) as f64));
    rep.stats.insert("visibility_ratio".into(), json!(ratio));
    rep.stats.insert("gap_to_6_over_pi2".into(), json!(ratio - density));
    Ok(rep)
}

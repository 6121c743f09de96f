//! C ABI over the triarea core.
//!
//! Point sets live behind the opaque `TaPointSet` handle. Every call returns
//! a `TaStatus`; on failure `ta_last_error()` holds a message for the calling
//! thread. Strings handed out by the library must be released with
//! `ta_string_free`, handles with `ta_pointset_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use triarea::census::{area_census, count_unit_area, max_area, min_nonzero_area, CensusOptions};
use triarea::constructions::{gen_convex_unit_seeded, gen_grid, Geometry};
use triarea::exact::{fmt_rat, Point2, Point3};
use triarea::incidence::cylinder_triple_intersection;
use triarea::io::{format_geometry, parse_cylinders, parse_geometry};
use triarea::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Degenerate = 4,
    NoNonzeroTriangle = 5,
    ConstructionFailed = 6,
    ParallelAxes = 7,
    InvariantViolated = 8,
    Panic = 9,
}

/// Opaque point set (planar, spatial or a line arrangement).
pub struct TaPointSet {
    geometry: Geometry,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TaStatus {
    match e {
        Error::Parse(_) | Error::Json(_) | Error::DuplicatePoints(..) | Error::DuplicateLines(..) => TaStatus::ParseError,
        Error::Degenerate | Error::TooFewPoints { .. } => TaStatus::Degenerate,
        Error::NoNonzeroTriangle => TaStatus::NoNonzeroTriangle,
        Error::ConstructionFailed { .. } => TaStatus::ConstructionFailed,
        Error::ParallelAxes | Error::ParallelLines => TaStatus::ParallelAxes,
        Error::InvariantViolated(_) | Error::ChargingInvariantViolated(_) | Error::AuditFailed(_) => TaStatus::InvariantViolated,
        _ => TaStatus::InvalidArgument,
    }
}

/// Runs `f`, mapping errors and panics to a status and the thread's message.
fn guard(f: impl FnOnce() -> Result<(), (TaStatus, String)>) -> TaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TaStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside triarea".into());
            TaStatus::Panic
        }
    }
}

fn core<T>(r: triarea::Result<T>) -> Result<T, (TaStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (TaStatus, String) {
    (TaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (TaStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (TaStatus::ParseError, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, v: T, what: &str) -> Result<(), (TaStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    *out = v;
    Ok(())
}

unsafe fn handle<'a>(ps: *const TaPointSet) -> Result<&'a TaPointSet, (TaStatus, String)> {
    ps.as_ref().ok_or_else(|| null("point set"))
}

fn boxed(g: Geometry) -> *mut TaPointSet {
    Box::into_raw(Box::new(TaPointSet { geometry: g }))
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn ta_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn ta_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a point file (`dim=2`, `dim=3`) or line file (`lines`).
#[no_mangle]
pub unsafe extern "C" fn ta_pointset_parse(text: *const c_char, out: *mut *mut TaPointSet) -> TaStatus {
    guard(|| {
        let t = read_str(text, "text")?;
        let g = core(parse_geometry(t))?;
        write_out(out, boxed(g), "out")
    })
}

/// Planar set from `n` integer pairs `xy[2i], xy[2i+1]`.
#[no_mangle]
pub unsafe extern "C" fn ta_pointset_new_2d(xy: *const i64, n: usize, out: *mut *mut TaPointSet) -> TaStatus {
    guard(|| {
        if xy.is_null() && n > 0 {
            return Err(null("xy"));
        }
        let v = if n == 0 { &[][..] } else { std::slice::from_raw_parts(xy, 2 * n) };
        let pts: Vec<Point2> = v.chunks(2).map(|c| Point2::from_ints(c[0], c[1])).collect();
        write_out(out, boxed(Geometry::Plane(pts)), "out")
    })
}

/// Spatial set from `n` integer triples.
#[no_mangle]
pub unsafe extern "C" fn ta_pointset_new_3d(xyz: *const i64, n: usize, out: *mut *mut TaPointSet) -> TaStatus {
    guard(|| {
        if xyz.is_null() && n > 0 {
            return Err(null("xyz"));
        }
        let v = if n == 0 { &[][..] } else { std::slice::from_raw_parts(xyz, 3 * n) };
        let pts: Vec<Point3> = v.chunks(3).map(|c| Point3::from_ints(c[0], c[1], c[2])).collect();
        write_out(out, boxed(Geometry::Space(pts)), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn ta_pointset_free(ps: *mut TaPointSet) {
    if !ps.is_null() {
        drop(Box::from_raw(ps));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ta_pointset_len(ps: *const TaPointSet, out: *mut usize) -> TaStatus {
    guard(|| write_out(out, handle(ps)?.geometry.len(), "out"))
}

/// 2 or 3 for point sets, 0 for line sets.
#[no_mangle]
pub unsafe extern "C" fn ta_pointset_dim(ps: *const TaPointSet, out: *mut u8) -> TaStatus {
    guard(|| {
        let d = match handle(ps)?.geometry {
            Geometry::Plane(_) => 2,
            Geometry::Space(_) => 3,
            Geometry::Lines(_) => 0,
        };
        write_out(out, d, "out")
    })
}

/// Canonical file text; free with `ta_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ta_pointset_to_text(ps: *const TaPointSet, out: *mut *mut c_char) -> TaStatus {
    guard(|| {
        let s = format_geometry(&handle(ps)?.geometry);
        let c = CString::new(s).map_err(|_| (TaStatus::InvalidArgument, "interior NUL".into()))?;
        write_out(out, c.into_raw(), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn ta_gen_grid(w: usize, h: usize, out: *mut *mut TaPointSet) -> TaStatus {
    guard(|| {
        let g = core(gen_grid(w, h))?;
        write_out(out, boxed(g.geometry), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn ta_gen_convex_unit(i: u32, seed: u64, out: *mut *mut TaPointSet) -> TaStatus {
    guard(|| {
        let g = core(gen_convex_unit_seeded(i, seed))?;
        write_out(out, boxed(g.geometry), "out")
    })
}

fn points_only<T>(
    ps: &TaPointSet,
    f2: impl FnOnce(&[Point2]) -> triarea::Result<T>,
    f3: impl FnOnce(&[Point3]) -> triarea::Result<T>,
) -> Result<T, (TaStatus, String)> {
    match &ps.geometry {
        Geometry::Plane(p) => core(f2(p)),
        Geometry::Space(p) => core(f3(p)),
        Geometry::Lines(_) => Err((TaStatus::InvalidArgument, "operation needs a point set".into())),
    }
}

/// Number of triples, `C(n,3)`, and of collinear triples.
#[no_mangle]
pub unsafe extern "C" fn ta_census_totals(ps: *const TaPointSet, triples: *mut u64, degenerate: *mut u64) -> TaStatus {
    guard(|| {
        let opts = CensusOptions::default();
        let c = points_only(handle(ps)?, |p| area_census(p, &opts), |p| area_census(p, &opts))?;
        write_out(triples, c.total(), "triples")?;
        write_out(degenerate, c.degenerate_count, "degenerate")
    })
}

/// Number of distinct nonzero areas.
#[no_mangle]
pub unsafe extern "C" fn ta_census_distinct(ps: *const TaPointSet, out: *mut u64) -> TaStatus {
    guard(|| {
        let opts = CensusOptions::default();
        let c = points_only(handle(ps)?, |p| area_census(p, &opts), |p| area_census(p, &opts))?;
        write_out(out, c.distinct_count() as u64, "out")
    })
}

/// Unit-area triangles (doubled area 2 in the plane, `4A²` = 4 in space).
#[no_mangle]
pub unsafe extern "C" fn ta_census_unit(ps: *const TaPointSet, out: *mut u64) -> TaStatus {
    guard(|| {
        let n = points_only(handle(ps)?, count_unit_area, count_unit_area)?;
        write_out(out, n, "out")
    })
}

unsafe fn extremal(ps: *const TaPointSet, max: bool, key: *mut *mut c_char, count: *mut u64) -> TaStatus {
    guard(|| {
        let e = if max {
            points_only(handle(ps)?, max_area, max_area)?
        } else {
            points_only(handle(ps)?, min_nonzero_area, min_nonzero_area)?
        };
        if !key.is_null() {
            *key = CString::new(fmt_rat(&e.key.0)).expect("no NUL in a rational").into_raw();
        }
        write_out(count, e.count, "count")
    })
}

/// Minimum nonzero area class: its key as a `p/q` string (optional, free with
/// `ta_string_free`) and its size.
#[no_mangle]
pub unsafe extern "C" fn ta_census_min(ps: *const TaPointSet, key: *mut *mut c_char, count: *mut u64) -> TaStatus {
    extremal(ps, false, key, count)
}

#[no_mangle]
pub unsafe extern "C" fn ta_census_max(ps: *const TaPointSet, key: *mut *mut c_char, count: *mut u64) -> TaStatus {
    extremal(ps, true, key, count)
}

/// Common points of three cylinders given as JSON (see the CLI's
/// `--cyl-triple` format).
#[no_mangle]
pub unsafe extern "C" fn ta_cylinder_triple_count(json: *const c_char, out: *mut u32) -> TaStatus {
    guard(|| {
        let cs = core(parse_cylinders(read_str(json, "json")?))?;
        if cs.len() != 3 {
            return Err((TaStatus::InvalidArgument, format!("expected 3 cylinders, got {}", cs.len())));
        }
        let t = core(cylinder_triple_intersection(&cs[0], &cs[1], &cs[2]))?;
        write_out(out, t.count as u32, "out")
    })
}

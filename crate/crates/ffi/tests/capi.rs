use std::ffi::{CStr, CString};
use std::ptr;

use triarea_ffi::*;

fn last_error() -> String {
    let p = ta_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn square_census_through_the_c_api() {
    let xy = [0i64, 0, 1, 0, 1, 1, 0, 1];
    let mut ps = ptr::null_mut();
    unsafe {
        assert_eq!(ta_pointset_new_2d(xy.as_ptr(), 4, &mut ps), TaStatus::Ok);
        let mut n = 0usize;
        assert_eq!(ta_pointset_len(ps, &mut n), TaStatus::Ok);
        assert_eq!(n, 4);
        let mut dim = 0u8;
        assert_eq!(ta_pointset_dim(ps, &mut dim), TaStatus::Ok);
        assert_eq!(dim, 2);

        let (mut triples, mut degen) = (0u64, 0u64);
        assert_eq!(ta_census_totals(ps, &mut triples, &mut degen), TaStatus::Ok);
        assert_eq!((triples, degen), (4, 0));

        let mut key = ptr::null_mut();
        let mut count = 0u64;
        assert_eq!(ta_census_min(ps, &mut key, &mut count), TaStatus::Ok);
        assert_eq!(CStr::from_ptr(key).to_str().unwrap(), "1");
        assert_eq!(count, 4);
        ta_string_free(key);

        // the key pointer is optional
        assert_eq!(ta_census_max(ps, ptr::null_mut(), &mut count), TaStatus::Ok);
        assert_eq!(count, 4);

        let mut text = ptr::null_mut();
        assert_eq!(ta_pointset_to_text(ps, &mut text), TaStatus::Ok);
        assert!(CStr::from_ptr(text).to_str().unwrap().starts_with("dim=2\n"));
        ta_string_free(text);
        ta_pointset_free(ps);
    }
}

#[test]
fn parse_and_generators() {
    let text = CString::new("dim=3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n").unwrap();
    let mut ps = ptr::null_mut();
    unsafe {
        assert_eq!(ta_pointset_parse(text.as_ptr(), &mut ps), TaStatus::Ok);
        let mut d = 0u64;
        assert_eq!(ta_census_distinct(ps, &mut d), TaStatus::Ok);
        assert_eq!(d, 2);
        ta_pointset_free(ps);

        let mut g = ptr::null_mut();
        assert_eq!(ta_gen_grid(3, 3, &mut g), TaStatus::Ok);
        let mut count = 0;
        assert_eq!(ta_census_min(g, ptr::null_mut(), &mut count), TaStatus::Ok);
        assert_eq!(count, 32);
        ta_pointset_free(g);

        let mut c = ptr::null_mut();
        assert_eq!(ta_gen_convex_unit(2, 7, &mut c), TaStatus::Ok);
        let mut n = 0usize;
        ta_pointset_len(c, &mut n);
        assert_eq!(n, 9);
        ta_pointset_free(c);
    }
}

#[test]
fn unit_count_in_space() {
    // triangle with legs 2 and 1 has area 1
    let xyz = [0i64, 0, 0, 2, 0, 0, 0, 1, 0];
    let mut ps = ptr::null_mut();
    unsafe {
        assert_eq!(ta_pointset_new_3d(xyz.as_ptr(), 3, &mut ps), TaStatus::Ok);
        let mut u = 0u64;
        assert_eq!(ta_census_unit(ps, &mut u), TaStatus::Ok);
        assert_eq!(u, 1);
        ta_pointset_free(ps);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut ps = ptr::null_mut();
        let bad = CString::new("dim=2\n0 0\n0 0\n").unwrap();
        assert_eq!(ta_pointset_parse(bad.as_ptr(), &mut ps), TaStatus::ParseError);
        assert!(last_error().contains("duplicate"));
        assert!(ps.is_null());

        assert_eq!(ta_pointset_parse(ptr::null(), &mut ps), TaStatus::NullPointer);
        let mut n = 0usize;
        assert_eq!(ta_pointset_len(ptr::null(), &mut n), TaStatus::NullPointer);

        let line = [0i64, 0, 1, 1, 2, 2];
        assert_eq!(ta_pointset_new_2d(line.as_ptr(), 3, &mut ps), TaStatus::Ok);
        let mut count = 0;
        assert_eq!(ta_census_min(ps, ptr::null_mut(), &mut count), TaStatus::NoNonzeroTriangle);
        ta_pointset_free(ps);

        let mut g = ptr::null_mut();
        assert_eq!(ta_gen_grid(1, 5, &mut g), TaStatus::InvalidArgument);
        // success clears the message
        assert_eq!(ta_gen_grid(2, 2, &mut g), TaStatus::Ok);
        assert!(ta_last_error().is_null());
        ta_pointset_free(g);
        ta_pointset_free(ptr::null_mut());
        ta_string_free(ptr::null_mut());
    }
}

#[test]
fn cylinder_triple() {
    let json = CString::new(
        r#"[{"point":["0","0","0"],"dir":["1","0","0"],"radius_sq":"1"},
            {"point":["0","0","0"],"dir":["0","1","0"],"radius_sq":"1"},
            {"point":["0","0","0"],"dir":["0","0","1"],"radius_sq":"1"}]"#,
    )
    .unwrap();
    let mut k = 0u32;
    unsafe {
        assert_eq!(ta_cylinder_triple_count(json.as_ptr(), &mut k), TaStatus::Ok);
        assert_eq!(k, 8);
        let par = CString::new(
            r#"[{"point":["0","0","0"],"dir":["1","0","0"],"radius_sq":"1"},
                {"point":["0","3","0"],"dir":["1","0","0"],"radius_sq":"1"},
                {"point":["0","0","0"],"dir":["0","0","1"],"radius_sq":"1"}]"#,
        )
        .unwrap();
        assert_eq!(ta_cylinder_triple_count(par.as_ptr(), &mut k), TaStatus::ParallelAxes);
    }
}

#[test]
fn header_is_generated() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/triarea.h")).unwrap();
    for sym in ["typedef struct TaPointSet TaPointSet;", "ta_census_min", "TaStatus_Ok = 0", "ta_last_error"] {
        assert!(h.contains(sym), "missing {sym}");
    }
}

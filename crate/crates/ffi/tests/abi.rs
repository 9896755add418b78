use std::ffi::{c_char, CStr, CString};
use std::ptr;

use riordan_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    riordan_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(riordan_last_error())
        .to_str()
        .unwrap()
        .to_owned()
}

unsafe fn catalog(id: &str, order: usize) -> *mut RiordanArray {
    let mut out = ptr::null_mut();
    assert_eq!(
        riordan_array_from_catalog(cstr(id).as_ptr(), order, &mut out),
        RiordanStatus::Ok
    );
    out
}

unsafe fn entry(a: *const RiordanArray, n: usize, k: usize) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(riordan_array_entry(a, n, k, &mut s), RiordanStatus::Ok);
    take_string(s)
}

#[test]
fn catalog_entry_and_dim() {
    unsafe {
        let a = catalog("erf", 6);
        assert_eq!(riordan_array_dim(a), 7);
        assert_eq!(entry(a, 6, 2), "532");
        assert_eq!(entry(a, 1, 1), "1");
        riordan_array_free(a);
    }
}

#[test]
fn inverse_and_multiply_give_identity() {
    unsafe {
        let a = catalog("cos_sin", 8);
        let mut inv = ptr::null_mut();
        assert_eq!(riordan_array_inverse(a, &mut inv), RiordanStatus::Ok);
        assert_eq!(entry(inv, 5, 1), "64");
        let mut prod = ptr::null_mut();
        assert_eq!(riordan_array_multiply(a, inv, &mut prod), RiordanStatus::Ok);
        for n in 0..9 {
            for k in 0..9 {
                assert_eq!(entry(prod, n, k), if n == k { "1" } else { "0" });
            }
        }
        for h in [a, inv, prod] {
            riordan_array_free(h);
        }
    }
}

#[test]
fn series_input_and_json() {
    unsafe {
        let mut a = ptr::null_mut();
        let g = cstr("1,1,1/2,1/6");
        let f = cstr("0,1");
        assert_eq!(
            riordan_array_from_series(g.as_ptr(), f.as_ptr(), 3, &mut a),
            RiordanStatus::Ok
        );
        let mut json = ptr::null_mut();
        let name = cstr("pascal");
        assert_eq!(
            riordan_array_to_json(a, name.as_ptr(), &mut json),
            RiordanStatus::Ok
        );
        let json = take_string(json);
        let (name, m) = riordan_core::format::parse_matrix_json(&json).unwrap();
        assert_eq!(name, "pascal");
        assert_eq!(
            m.row(3)[..],
            [1, 3, 3, 1].map(riordan_core::rational::int)[..]
        );

        let mut prod = ptr::null_mut();
        assert_eq!(
            riordan_array_production_json(a, &mut prod),
            RiordanStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take_string(prod)).unwrap();
        assert_eq!(v["params"]["alpha"], "1");
        assert_eq!(v["matrix"]["order"], 2);
        riordan_array_free(a);
    }
}

#[test]
fn hankel_transform_json() {
    unsafe {
        let mut out = ptr::null_mut();
        let seq = cstr("1,0,2,0,16,0,272");
        assert_eq!(
            riordan_hankel_transform(seq.as_ptr(), 3, &mut out),
            RiordanStatus::Ok
        );
        assert_eq!(take_string(out), r#"["1","2","24","3456"]"#);
        let short = cstr("1,0,2");
        assert_eq!(
            riordan_hankel_transform(short.as_ptr(), 3, &mut out),
            RiordanStatus::InsufficientData
        );
        assert!(last_error().contains("insufficient"));
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(
            riordan_array_from_catalog(cstr("logistic").as_ptr(), 4, &mut a),
            RiordanStatus::UnknownId
        );
        assert_eq!(last_error(), "unknown id `logistic`");
        assert!(a.is_null());

        assert_eq!(
            riordan_array_from_series(cstr("2").as_ptr(), cstr("0,1").as_ptr(), 3, &mut a),
            RiordanStatus::Normalization
        );
        assert_eq!(
            riordan_array_from_series(cstr("1").as_ptr(), cstr("0,q").as_ptr(), 3, &mut a),
            RiordanStatus::Parse
        );
        assert_eq!(
            riordan_array_from_catalog(ptr::null(), 4, &mut a),
            RiordanStatus::NullPointer
        );
        assert_eq!(riordan_array_dim(ptr::null()), 0);

        let small = catalog("tanh", 3);
        let big = catalog("tanh", 4);
        assert_eq!(
            riordan_array_multiply(small, big, &mut a),
            RiordanStatus::OrderMismatch
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            riordan_array_entry(small, 4, 0, &mut s),
            RiordanStatus::OutOfRange
        );
        riordan_array_free(small);
        riordan_array_free(big);
        riordan_array_free(ptr::null_mut());
        riordan_string_free(ptr::null_mut());
    }
}

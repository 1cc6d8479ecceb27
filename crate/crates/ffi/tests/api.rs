use std::ffi::{c_char, CStr, CString};
use std::ptr;

use hecke_center_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { hc_string_free(s) };
    out
}

fn last_error() -> String {
    let p = hc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn transition_matrix_entries() {
    let mut m = ptr::null_mut();
    let status = unsafe { hc_transition_matrix(5, c("h").as_ptr(), c("m").as_ptr(), &mut m) };
    assert_eq!(status, HcStatus::Ok);
    unsafe {
        assert_eq!(hc_matrix_rows(m), 7);
        assert_eq!(hc_matrix_cols(m), 7);
        let mut s = ptr::null_mut();
        assert_eq!(hc_matrix_entry(m, 6, 6, false, &mut s), HcStatus::Ok);
        assert_eq!(take(s), "120");
        assert_eq!(hc_matrix_row_label(m, 6, &mut s), HcStatus::Ok);
        assert_eq!(take(s), "11111");
        assert_eq!(
            hc_matrix_entry(m, 7, 0, false, &mut s),
            HcStatus::InvalidArgument
        );
        hc_matrix_free(m);
    }
}

#[test]
fn character_table_at_q_one() {
    let mut m = ptr::null_mut();
    let mut at1 = ptr::null_mut();
    unsafe {
        assert_eq!(
            hc_char_table(3, c("zeta").as_ptr(), c("trace").as_ptr(), &mut m),
            HcStatus::Ok
        );
        assert_eq!(
            hc_matrix_evaluate(m, c("1").as_ptr(), &mut at1),
            HcStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(hc_matrix_to_json(at1, false, &mut s), HcStatus::Ok);
        let json = take(s);
        assert!(json.contains(r#"["-1","0","2"]"#), "{json}");
        hc_matrix_free(at1);
        hc_matrix_free(m);
    }
}

#[test]
fn central_family_rows() {
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(hc_central_family(4, c("n1").as_ptr(), &mut m), HcStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hc_matrix_to_json(m, true, &mut s), HcStatus::Ok);
        assert!(take(s).contains(r#"["0","0","Q^2","2*Q","6"]"#));
        hc_matrix_free(m);
    }
}

#[test]
fn element_arithmetic() {
    unsafe {
        let (mut a, mut b, mut prod) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            hc_element_new(5, c("family:n1:32").as_ptr(), &mut a),
            HcStatus::Ok
        );
        hc_element_free(a);
        assert_eq!(
            hc_element_new(5, c("word:2.1.1.2.4.4").as_ptr(), &mut a),
            HcStatus::Ok
        );
        assert_eq!(
            hc_element_new(5, c("word:1.3").as_ptr(), &mut b),
            HcStatus::Ok
        );
        assert_eq!(hc_element_mul(a, b, &mut prod), HcStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hc_element_scalar_product(a, b, &mut s), HcStatus::Ok);
        assert!(!take(s).is_empty());
        assert_eq!(hc_element_to_json(prod, false, &mut s), HcStatus::Ok);
        assert!(take(s).starts_with('{'));
        assert_eq!(hc_element_gamma_json(b, &mut s), HcStatus::NotCentral);
        assert!(last_error().contains("not central"));
        for e in [a, b, prod] {
            hc_element_free(e);
        }
    }
}

#[test]
fn gamma_coordinates_of_central_element() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(hc_element_new(4, c("e:3").as_ptr(), &mut e), HcStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hc_element_gamma_json(e, &mut s), HcStatus::Ok);
        assert!(take(s).contains(r#""4":"1""#));
        hc_element_free(e);
    }
}

#[test]
fn mismatched_algebras() {
    unsafe {
        let (mut a, mut b, mut out) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        hc_element_new(3, c("one").as_ptr(), &mut a);
        hc_element_new(4, c("one").as_ptr(), &mut b);
        assert_eq!(hc_element_add(a, b, &mut out), HcStatus::InvalidArgument);
        assert!(out.is_null());
        hc_element_free(a);
        hc_element_free(b);
    }
}

#[test]
fn verify_reports() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hc_verify(c("n1").as_ptr(), 4, &mut s), HcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(
            hc_verify(c("nope").as_ptr(), 4, &mut s),
            HcStatus::InvalidArgument
        );
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(
            hc_transition_matrix(3, ptr::null(), c("m").as_ptr(), &mut m),
            HcStatus::NullPointer
        );
        assert!(last_error().contains("from"));
        assert_eq!(
            hc_transition_matrix(3, c("x").as_ptr(), c("m").as_ptr(), &mut m),
            HcStatus::InvalidArgument
        );
        assert_eq!(
            hc_transition_matrix(9, c("h").as_ptr(), c("m").as_ptr(), &mut m),
            HcStatus::TooLarge
        );
        assert_eq!(
            hc_transition_matrix(3, c("h").as_ptr(), c("m").as_ptr(), ptr::null_mut()),
            HcStatus::NullPointer
        );
        assert_eq!(
            hc_transition_matrix(3, c("h").as_ptr(), c("m").as_ptr(), &mut m),
            HcStatus::Ok
        );
        assert!(hc_last_error().is_null());
        let mut bad = ptr::null_mut();
        assert_eq!(
            hc_matrix_evaluate(m, c("1/0").as_ptr(), &mut bad),
            HcStatus::Arithmetic
        );
        assert_eq!(
            hc_matrix_evaluate(m, c("one").as_ptr(), &mut bad),
            HcStatus::Parse
        );
        hc_matrix_free(m);
        hc_matrix_free(ptr::null_mut());
        hc_string_free(ptr::null_mut());
        assert_eq!(hc_matrix_rows(ptr::null()), 0);
        assert_eq!(hc_max_n(), 8);
    }
}

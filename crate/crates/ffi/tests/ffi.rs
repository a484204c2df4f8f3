use std::ffi::{CStr, CString};
use std::ptr;

use loopsym_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ls_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ls_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn schur_text_and_json_round_trip() {
    let parts = [3u32, 2];
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ls_loop_schur(2, 3, parts.as_ptr(), 2, 1, &mut s) }, LsStatus::Ok);
    assert_eq!(
        take_string(unsafe { ls_poly_to_string(s) }),
        "x1^(1)*x1^(2)*x1^(3)*x2^(1)*x2^(2) + x1^(1)*x1^(3)*x2^(1)*x2^(2)^2"
    );
    let json = CString::new(take_string(unsafe { ls_poly_to_json(s) })).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { ls_poly_from_json(json.as_ptr(), &mut back) }, LsStatus::Ok);
    let mut jt = ptr::null_mut();
    assert_eq!(unsafe { ls_jacobi_trudi(2, 3, parts.as_ptr(), 2, 1, &mut jt) }, LsStatus::Ok);
    let mut eq = false;
    assert_eq!(unsafe { ls_poly_equal(s, back, &mut eq) }, LsStatus::Ok);
    assert!(eq);
    assert_eq!(unsafe { ls_poly_equal(s, jt, &mut eq) }, LsStatus::Ok);
    assert!(eq);
    unsafe {
        ls_poly_free(s);
        ls_poly_free(back);
        ls_poly_free(jt);
    }
}

#[test]
fn generators_and_invariance() {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { ls_loop_e(3, 2, 2, 1, ptr::null(), 0, &mut e) }, LsStatus::Ok);
    assert_eq!(
        take_string(unsafe { ls_poly_to_string(e) }),
        "x1^(1)*x2^(2) + x1^(1)*x3^(2) + x2^(1)*x3^(2)"
    );
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { ls_ratfn_from_poly(e, &mut f) }, LsStatus::Ok);
    let word = [1u32, 2, 1];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ls_apply_word(f, word.as_ptr(), 3, &mut g) }, LsStatus::Ok);
    let mut eq = false;
    assert_eq!(unsafe { ls_ratfn_equal(f, g, &mut eq) }, LsStatus::Ok);
    assert!(eq);

    let flows = [1u32, 3];
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { ls_loop_h(3, 2, 1, 1, flows.as_ptr(), 2, &mut h) }, LsStatus::Ok);
    assert_eq!(take_string(unsafe { ls_poly_to_string(h) }), "x1^(1) + x3^(1)");
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ls_power_sum(2, 2, 1, &mut p) }, LsStatus::Ok);
    assert_eq!(take_string(unsafe { ls_poly_to_string(p) }), "x1^(1)*x1^(2) + x2^(1)*x2^(2)");
    let mut k = ptr::null_mut();
    assert_eq!(unsafe { ls_kappa(2, 3, 1, 1, 2, &mut k) }, LsStatus::Ok);
    assert_eq!(take_string(unsafe { ls_poly_to_string(k) }), "x1^(2)*x1^(3) + x1^(3)*x2^(2) + x2^(2)*x2^(3)");
    unsafe {
        ls_poly_free(e);
        ls_poly_free(h);
        ls_poly_free(p);
        ls_poly_free(k);
        ls_ratfn_free(f);
        ls_ratfn_free(g);
    }
}

#[test]
fn alternant_and_identity_checks() {
    let alpha = [4u32, 2];
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { ls_alternant(2, 3, alpha.as_ptr(), 2, 2, &mut a) }, LsStatus::Ok);
    let json = CString::new(take_string(unsafe { ls_ratfn_to_json(a) })).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { ls_ratfn_from_json(json.as_ptr(), &mut back) }, LsStatus::Ok);
    let mut eq = false;
    assert_eq!(unsafe { ls_ratfn_equal(a, back, &mut eq) }, LsStatus::Ok);
    assert!(eq);
    assert!(take_string(unsafe { ls_ratfn_to_string(a) }).contains(" / "));
    unsafe {
        ls_ratfn_free(a);
        ls_ratfn_free(back);
    }

    let shape = [3u32, 2];
    let mut holds = false;
    assert_eq!(unsafe { ls_verify_roa(2, 3, shape.as_ptr(), 2, 2, &mut holds) }, LsStatus::Ok);
    assert!(holds);
    holds = false;
    assert_eq!(unsafe { ls_verify_roa(2, 2, ptr::null(), 0, 1, &mut holds) }, LsStatus::Ok);
    assert!(holds);

    let one = [1u32];
    holds = false;
    assert_eq!(unsafe { ls_verify_mn(3, 2, one.as_ptr(), 1, 1, 1, false, &mut holds) }, LsStatus::Ok);
    assert!(holds);
    assert_eq!(
        unsafe { ls_verify_mn(2, 2, one.as_ptr(), 1, 1, 1, false, &mut holds) },
        LsStatus::HypothesisNotMet
    );
    assert!(last_error().contains("hypothesis"));
    assert_eq!(unsafe { ls_verify_mn(2, 2, one.as_ptr(), 1, 1, 1, true, &mut holds) }, LsStatus::Ok);
}

#[test]
fn errors_are_reported() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ls_loop_e(0, 2, 1, 1, ptr::null(), 0, &mut p) }, LsStatus::InvalidArgument);
    assert!(p.is_null());
    assert!(!last_error().is_empty());

    let bad = CString::new("{\"m\":1}").unwrap();
    assert_eq!(unsafe { ls_poly_from_json(bad.as_ptr(), &mut p) }, LsStatus::Parse);
    assert_eq!(unsafe { ls_poly_from_json(ptr::null(), &mut p) }, LsStatus::NullPointer);
    assert_eq!(unsafe { ls_loop_h(2, 2, 1, 1, ptr::null(), 0, ptr::null_mut()) }, LsStatus::NullPointer);

    let not_partition = [1u32, 2];
    assert_eq!(
        unsafe { ls_loop_schur(2, 2, not_partition.as_ptr(), 2, 1, &mut p) },
        LsStatus::InvalidArgument
    );
    let zero = CString::new("{\"num\":{\"m\":1,\"n\":1,\"terms\":[]},\"den\":{\"m\":1,\"n\":1,\"terms\":[]}}").unwrap();
    let mut f = ptr::null_mut();
    assert_ne!(unsafe { ls_ratfn_from_json(zero.as_ptr(), &mut f) }, LsStatus::Ok);

    assert!(unsafe { ls_poly_to_json(ptr::null()) }.is_null());
    unsafe {
        ls_poly_free(ptr::null_mut());
        ls_ratfn_free(ptr::null_mut());
        ls_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/loopsym.h")).unwrap();
    for name in [
        "typedef struct LsPoly LsPoly;",
        "typedef struct LsRatFn LsRatFn;",
        "LS_STATUS_HYPOTHESIS_NOT_MET = 5",
        "ls_loop_schur(",
        "ls_verify_roa(",
        "ls_verify_mn(",
        "ls_last_error_message(void)",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

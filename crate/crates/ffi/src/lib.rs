//! C ABI for `loopsym`.
//!
//! Polynomials and rational functions cross the boundary as opaque handles
//! owned by the caller and released with `ls_poly_free` / `ls_ratfn_free`.
//! Every fallible call returns an `LsStatus`; on failure the message is
//! available from `ls_last_error_message` until the next failing call on the
//! same thread. Strings returned by the library are released with
//! `ls_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use loopsym::action::{PermutationWord, SubstitutionMap};
use loopsym::alternants::{verify_mn, Alternants};
use loopsym::generators::{kappa, loop_e, loop_h, power_sum, FlowSet};
use loopsym::tableaux::{jacobi_trudi, loop_schur, Partition};
use loopsym::{Ambient, Error, Poly, RatFn};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    DivideByZero = 4,
    HypothesisNotMet = 5,
    Internal = 6,
}

/// Opaque polynomial handle.
pub struct LsPoly(Poly);

/// Opaque rational function handle.
pub struct LsRatFn(RatFn);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> LsStatus {
    match e {
        Error::Parse(_) => LsStatus::Parse,
        Error::DivideByZero => LsStatus::DivideByZero,
        Error::HypothesisNotMet(_) => LsStatus::HypothesisNotMet,
        _ => LsStatus::InvalidArgument,
    }
}

enum Fail {
    Null,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Run `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LsStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument");
            LsStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal error");
            LsStatus::Internal
        }
    }
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(Fail::Null);
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Null);
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail::Lib(Error::Parse("string is not UTF-8".into())))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null)
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn usizes(v: &[u32]) -> Vec<usize> {
    v.iter().map(|&x| x as usize).collect()
}

unsafe fn flow_set(amb: Ambient, flows: *const u32, len: usize) -> Result<FlowSet, Fail> {
    if flows.is_null() {
        return Ok(FlowSet::all(amb));
    }
    Ok(FlowSet::new(amb, usizes(slice(flows, len)?))?)
}

unsafe fn shape_arg(parts: *const u32, len: usize) -> Result<Partition, Fail> {
    Ok(Partition::new(usizes(slice(parts, len)?))?)
}

/// Message of the last failing call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ls_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be NULL or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_poly_free(p: *mut LsPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `f` must be NULL or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_ratfn_free(f: *mut LsRatFn) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// `e_k^(r)` over `flows[0..flows_len]`, or over all flows when `flows` is NULL.
///
/// # Safety
/// `flows` must be NULL or point to `flows_len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_loop_e(
    m: usize,
    n: usize,
    k: usize,
    r: i64,
    flows: *const u32,
    flows_len: usize,
    out: *mut *mut LsPoly,
) -> LsStatus {
    guard(|| {
        let amb = Ambient::new(m, n)?;
        let fs = flow_set(amb, flows, flows_len)?;
        write_out(out, LsPoly(loop_e(amb, k, r, &fs)))
    })
}

/// `h_k^(r)` over `flows[0..flows_len]`, or over all flows when `flows` is NULL.
///
/// # Safety
/// As for `ls_loop_e`.
#[no_mangle]
pub unsafe extern "C" fn ls_loop_h(
    m: usize,
    n: usize,
    k: usize,
    r: i64,
    flows: *const u32,
    flows_len: usize,
    out: *mut *mut LsPoly,
) -> LsStatus {
    guard(|| {
        let amb = Ambient::new(m, n)?;
        let fs = flow_set(amb, flows, flows_len)?;
        write_out(out, LsPoly(loop_h(amb, k, r, &fs)))
    })
}

/// `p_k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_power_sum(m: usize, n: usize, k: usize, out: *mut *mut LsPoly) -> LsStatus {
    guard(|| write_out(out, LsPoly(power_sum(Ambient::new(m, n)?, k)?)))
}

/// `kappa^(r)` for flows `x != y`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_kappa(m: usize, n: usize, r: i64, x: usize, y: usize, out: *mut *mut LsPoly) -> LsStatus {
    guard(|| write_out(out, LsPoly(kappa(Ambient::new(m, n)?, r, x, y)?)))
}

/// `s_lambda^(r)` as a tableau sum, `lambda = parts[0..len]`.
///
/// # Safety
/// `parts` must point to `len` readable values (or be NULL with `len == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_loop_schur(
    m: usize,
    n: usize,
    parts: *const u32,
    len: usize,
    r: i64,
    out: *mut *mut LsPoly,
) -> LsStatus {
    guard(|| {
        let amb = Ambient::new(m, n)?;
        write_out(out, LsPoly(loop_schur(amb, &shape_arg(parts, len)?, r)))
    })
}

/// `s_lambda^(r)` as a Jacobi-Trudi determinant.
///
/// # Safety
/// As for `ls_loop_schur`.
#[no_mangle]
pub unsafe extern "C" fn ls_jacobi_trudi(
    m: usize,
    n: usize,
    parts: *const u32,
    len: usize,
    r: i64,
    out: *mut *mut LsPoly,
) -> LsStatus {
    guard(|| {
        let amb = Ambient::new(m, n)?;
        write_out(out, LsPoly(jacobi_trudi(amb, &shape_arg(parts, len)?, r)?))
    })
}

/// The alternant `a_alpha^(r)`, `alpha = alpha[0..len]` with `len == m`.
///
/// # Safety
/// `alpha` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_alternant(
    m: usize,
    n: usize,
    alpha: *const u32,
    len: usize,
    r: i64,
    out: *mut *mut LsRatFn,
) -> LsStatus {
    guard(|| {
        let alt = Alternants::new(Ambient::new(m, n)?)?;
        let a = usizes(slice(alpha, len)?);
        write_out(out, LsRatFn(alt.alternant(&a, r)?))
    })
}

/// Parse a polynomial from the JSON wire format.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_poly_from_json(json: *const c_char, out: *mut *mut LsPoly) -> LsStatus {
    guard(|| write_out(out, LsPoly(Poly::from_json(str_arg(json)?)?)))
}

/// Parse a rational function (`{"num":..,"den":..}`) from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_ratfn_from_json(json: *const c_char, out: *mut *mut LsRatFn) -> LsStatus {
    guard(|| write_out(out, LsRatFn(RatFn::from_json(str_arg(json)?)?)))
}

/// JSON wire form; NULL if `p` is NULL. Free with `ls_string_free`.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_poly_to_json(p: *const LsPoly) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| c_string(p.0.to_json()))
}

/// Canonical text form; NULL if `p` is NULL. Free with `ls_string_free`.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_poly_to_string(p: *const LsPoly) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| c_string(p.0.to_string()))
}

/// JSON wire form; NULL if `f` is NULL. Free with `ls_string_free`.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_ratfn_to_json(f: *const LsRatFn) -> *mut c_char {
    f.as_ref().map_or(ptr::null_mut(), |f| c_string(f.0.to_json()))
}

/// Text form `(num) / (den)`; NULL if `f` is NULL. Free with `ls_string_free`.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_ratfn_to_string(f: *const LsRatFn) -> *mut c_char {
    f.as_ref().map_or(ptr::null_mut(), |f| c_string(f.0.to_string()))
}

/// Wrap a polynomial as a rational function (the polynomial is not consumed).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_ratfn_from_poly(p: *const LsPoly, out: *mut *mut LsRatFn) -> LsStatus {
    guard(|| write_out(out, LsRatFn(RatFn::from_poly(&deref(p)?.0))))
}

/// Exact equality of two polynomials.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_poly_equal(a: *const LsPoly, b: *const LsPoly, out: *mut bool) -> LsStatus {
    guard(|| {
        let (a, b) = (deref(a)?, deref(b)?);
        let out = out.as_mut().ok_or(Fail::Null)?;
        *out = a.0 == b.0;
        Ok(())
    })
}

/// Equality of two rational functions by cross-multiplication.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_ratfn_equal(a: *const LsRatFn, b: *const LsRatFn, out: *mut bool) -> LsStatus {
    guard(|| {
        let (a, b) = (deref(a)?, deref(b)?);
        let out = out.as_mut().ok_or(Fail::Null)?;
        *out = a.0.eq_cross(&b.0)?;
        Ok(())
    })
}

/// Apply `s_{word[0]} ... s_{word[len-1]}` to `f`.
///
/// # Safety
/// `f` must be a live handle, `word` must point to `len` readable values,
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_apply_word(
    f: *const LsRatFn,
    word: *const u32,
    len: usize,
    out: *mut *mut LsRatFn,
) -> LsStatus {
    guard(|| {
        let f = &deref(f)?.0;
        let amb = f.ambient();
        let w = PermutationWord::new(amb, usizes(slice(word, len)?))?;
        let map = SubstitutionMap::compose(amb, &w)?;
        write_out(out, LsRatFn(map.apply(f)?))
    })
}

/// Check `s_lambda^{(r-m+1)} a_delta^(r) = a_{lambda+delta}^(r)`.
///
/// # Safety
/// `parts` must point to `len` readable values (or be NULL with `len == 0`);
/// `holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_verify_roa(
    m: usize,
    n: usize,
    parts: *const u32,
    len: usize,
    r: i64,
    holds: *mut bool,
) -> LsStatus {
    guard(|| {
        let shape = shape_arg(parts, len)?;
        let alt = Alternants::new(Ambient::new(m, n)?)?;
        let v = alt.verify_roa(&shape, r)?;
        *holds.as_mut().ok_or(Fail::Null)? = v.holds;
        Ok(())
    })
}

/// Check the loop Murnaghan-Nakayama rule for `p_k s_lambda^(r)`. Returns
/// `HypothesisNotMet` when `m < l(lambda) + k n` unless `force` is set.
///
/// # Safety
/// As for `ls_verify_roa`.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn ls_verify_mn(
    m: usize,
    n: usize,
    parts: *const u32,
    len: usize,
    k: usize,
    r: i64,
    force: bool,
    holds: *mut bool,
) -> LsStatus {
    guard(|| {
        let shape = shape_arg(parts, len)?;
        let v = verify_mn(Ambient::new(m, n)?, &shape, k, r, force)?;
        *holds.as_mut().ok_or(Fail::Null)? = v.holds;
        Ok(())
    })
}

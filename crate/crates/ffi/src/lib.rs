//! C interface.
//!
//! Every fallible function returns an [`HcStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`hc_last_error`]. Strings handed out by the library are owned by the
//! caller and released with [`hc_string_free`]; handles are released with
//! their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hecke_center::center::{decompose_central, family_transition, FamilyKind};
use hecke_center::characters::{char_table, TableFamily, TableMethod};
use hecke_center::cli::build_element;
use hecke_center::coeff::{parse_rational, pretty};
use hecke_center::combi::MAX_N;
use hecke_center::export::{element_to_json, matrix_to_json};
use hecke_center::hecke::HeckeElement;
use hecke_center::symfunc::{transition_matrix, Basis, QMatrix};
use hecke_center::verify::verify;
use hecke_center::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    Arithmetic = 5,
    TooLarge = 6,
    NotCentral = 7,
    VerificationFailed = 8,
    Internal = 9,
}

/// Opaque square or rectangular matrix over Q(q) with partition labels.
pub struct HcMatrix(QMatrix);

/// Opaque element of the Hecke algebra.
pub struct HcElement(HeckeElement);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(HcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => HcStatus::Parse,
            Error::DivisionByZero
            | Error::Pole(_)
            | Error::Singular
            | Error::RepeatedSpectralValue => HcStatus::Arithmetic,
            Error::TooLarge { .. } => HcStatus::TooLarge,
            Error::NotCentral => HcStatus::NotCentral,
            Error::InvalidArgument(_) | Error::SupportViolation(_) => HcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            HcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(&msg);
            HcStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(HcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(HcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(HcStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            HcStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library output has no nul bytes")
        .into_raw()
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 || n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N }.into());
    }
    Ok(())
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(Failure::from)
}

/// Message of the most recent failure on this thread, or null.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Largest supported n.
#[no_mangle]
pub extern "C" fn hc_max_n() -> usize {
    MAX_N
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Transition matrix between two of the bases `m`, `e`, `h`, `p`, `s`.
///
/// # Safety
/// `from` and `to` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_transition_matrix(
    n: usize,
    from: *const c_char,
    to: *const c_char,
    out: *mut *mut HcMatrix,
) -> HcStatus {
    guard(|| {
        check_n(n)?;
        let src: Basis = parse(text(from, "from")?)?;
        let dst: Basis = parse(text(to, "to")?)?;
        let m = transition_matrix(n, src, dst).as_ref().clone();
        write(out, Box::into_raw(Box::new(HcMatrix(m))))
    })
}

/// Character table of the `zeta` or `upsilon` family by `trace` or `ram`.
///
/// # Safety
/// `family` and `method` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_char_table(
    n: usize,
    family: *const c_char,
    method: *const c_char,
    out: *mut *mut HcMatrix,
) -> HcStatus {
    guard(|| {
        check_n(n)?;
        let fam: TableFamily = parse(text(family, "family")?)?;
        let how: TableMethod = parse(text(method, "method")?)?;
        write(
            out,
            Box::into_raw(Box::new(HcMatrix(char_table(n, fam, how)))),
        )
    })
}

/// Coordinates of a central family in the Gamma basis, one row per element.
///
/// # Safety
/// `kind` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_central_family(
    n: usize,
    kind: *const c_char,
    out: *mut *mut HcMatrix,
) -> HcStatus {
    guard(|| {
        check_n(n)?;
        let kind: FamilyKind = parse(text(kind, "kind")?)?;
        write(
            out,
            Box::into_raw(Box::new(HcMatrix(family_transition(n, kind)?))),
        )
    })
}

/// Specializes every entry at a rational value of q such as `2` or `-1/3`.
///
/// # Safety
/// `m` must be a live matrix handle, `q` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hc_matrix_evaluate(
    m: *const HcMatrix,
    q: *const c_char,
    out: *mut *mut HcMatrix,
) -> HcStatus {
    guard(|| {
        let m = handle(m, "matrix")?;
        let q0 = parse_rational(text(q, "q")?)?;
        write(out, Box::into_raw(Box::new(HcMatrix(m.0.evaluate(&q0)?))))
    })
}

/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn hc_matrix_free(m: *mut HcMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn hc_matrix_rows(m: *const HcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.nrows())
}

/// Number of columns, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn hc_matrix_cols(m: *const HcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.ncols())
}

/// Entry `(row, col)` as a canonical string, or in Q notation when `pretty`.
///
/// # Safety
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_matrix_entry(
    m: *const HcMatrix,
    row: usize,
    col: usize,
    pretty_form: bool,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let m = &handle(m, "matrix")?.0;
        if row >= m.nrows() || col >= m.ncols() {
            return Err(Failure(
                HcStatus::InvalidArgument,
                format!(
                    "entry ({row}, {col}) outside a {}x{} matrix",
                    m.nrows(),
                    m.ncols()
                ),
            ));
        }
        let c = m.get(row, col);
        write(
            out,
            owned_string(if pretty_form {
                pretty(c)
            } else {
                c.to_string()
            }),
        )
    })
}

/// Row label `row` as a partition string such as `211`.
///
/// # Safety
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_matrix_row_label(
    m: *const HcMatrix,
    row: usize,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let m = &handle(m, "matrix")?.0;
        let label = m
            .rows()
            .get(row)
            .ok_or_else(|| Failure(HcStatus::InvalidArgument, format!("row {row} out of range")))?;
        write(out, owned_string(label.to_string()))
    })
}

/// JSON document `{n, rows, cols, entries}`.
///
/// # Safety
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_matrix_to_json(
    m: *const HcMatrix,
    pretty_form: bool,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let m = handle(m, "matrix")?;
        write(out, owned_string(matrix_to_json(&m.0, pretty_form)))
    })
}

/// Builds an element from the same spec grammar as the `element` command,
/// for example `zeta:22`, `word:1.2.1` or `family:n1:31`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_element_new(
    n: usize,
    spec: *const c_char,
    out: *mut *mut HcElement,
) -> HcStatus {
    guard(|| {
        check_n(n)?;
        let h = build_element(n, text(spec, "spec")?)?;
        write(out, Box::into_raw(Box::new(HcElement(h))))
    })
}

/// # Safety
/// `e` must be null or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn hc_element_free(e: *mut HcElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

unsafe fn pair<'a>(
    a: *const HcElement,
    b: *const HcElement,
) -> Result<(&'a HeckeElement, &'a HeckeElement), Failure> {
    let (a, b) = (
        &handle(a, "left operand")?.0,
        &handle(b, "right operand")?.0,
    );
    if a.n() != b.n() {
        return Err(Failure(
            HcStatus::InvalidArgument,
            format!("operands live in H_{} and H_{}", a.n(), b.n()),
        ));
    }
    Ok((a, b))
}

/// # Safety
/// `a` and `b` must be live element handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_element_add(
    a: *const HcElement,
    b: *const HcElement,
    out: *mut *mut HcElement,
) -> HcStatus {
    guard(|| {
        let (a, b) = pair(a, b)?;
        write(out, Box::into_raw(Box::new(HcElement(a + b))))
    })
}

/// # Safety
/// `a` and `b` must be live element handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_element_mul(
    a: *const HcElement,
    b: *const HcElement,
    out: *mut *mut HcElement,
) -> HcStatus {
    guard(|| {
        let (a, b) = pair(a, b)?;
        write(out, Box::into_raw(Box::new(HcElement(a * b))))
    })
}

/// Symmetric bilinear form `(a, b)` as a canonical string.
///
/// # Safety
/// `a` and `b` must be live element handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_element_scalar_product(
    a: *const HcElement,
    b: *const HcElement,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let (a, b) = pair(a, b)?;
        write(out, owned_string(a.scalar_product(b).to_string()))
    })
}

/// JSON map from one-line permutations to coefficients.
///
/// # Safety
/// `e` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_element_to_json(
    e: *const HcElement,
    pretty_form: bool,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let e = handle(e, "element")?;
        write(out, owned_string(element_to_json(&e.0, pretty_form)))
    })
}

/// Gamma coordinates of a central element as a JSON map from partitions
/// to coefficients. Fails with `NOT_CENTRAL` otherwise.
///
/// # Safety
/// `e` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_element_gamma_json(
    e: *const HcElement,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let e = handle(e, "element")?;
        let coords: serde_json::Map<String, serde_json::Value> = decompose_central(&e.0)?
            .into_iter()
            .map(|(lambda, c)| (lambda.to_string(), c.to_string().into()))
            .collect();
        write(
            out,
            owned_string(serde_json::Value::Object(coords).to_string()),
        )
    })
}

/// Runs one verification and writes its JSON report. Returns
/// `VERIFICATION_FAILED` (with the report still written) when the check fails.
///
/// # Safety
/// `theorem` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_verify(
    theorem: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> HcStatus {
    let mut failed = None;
    let status = guard(|| {
        check_n(n)?;
        let id = text(theorem, "theorem")?;
        let report = verify(id, n)?;
        if !report.passed() {
            failed = Some(report.to_string());
        }
        let json = serde_json::to_string(&report).expect("serializable report");
        write(out, owned_string(json))
    });
    match (status, failed) {
        (HcStatus::Ok, Some(msg)) => {
            set_error(&msg);
            HcStatus::VerificationFailed
        }
        (s, _) => s,
    }
}

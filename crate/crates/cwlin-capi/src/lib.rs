//! C ABI over the cwlin library.
//!
//! Conventions shared by every function here:
//! - Documents are opaque handles created by `cwlin_parse` and released by
//!   `cwlin_document_free`.
//! - Strings returned through `char **out` parameters are owned by the
//!   caller and must be released with `cwlin_string_free`.
//! - On any status other than `CWLIN_STATUS_OK`, `cwlin_last_error` returns
//!   a message describing the failure; the pointer stays valid until the
//!   next failing call on the same thread.
//! - Status values 0/2/3/4 match the CLI exit codes for the same outcomes.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cwlin::betti::{betti, is_componentwise_linear, regularity};
use cwlin::criteria::{
    check_componentwise_criterion, check_cwl_plus_linear, check_hv_criterion, check_lin_plus_lin,
};
use cwlin::dim2::{cwl_ordering, fullness_checks, fullsum_verdict, OrderingFailure};
use cwlin::ideal::MonomialIdeal;
use cwlin::parse::{parse, parse_monomial, IdealDocument};
use cwlin::report::{betti_value, campaign_value, ordering_value, to_json, verdict_value};
use cwlin::verdict::Verdict;
use cwlin::verify::{run_campaign, CampaignParams};

/// Result of a call. `Ok` means the requested computation completed, whatever
/// the mathematical verdict was.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CwlinStatus {
    /// Completed.
    Ok = 0,
    /// The input text failed to lex, parse, or resolve.
    ParseError = 2,
    /// A criterion's mathematical preconditions are not met.
    Inapplicable = 3,
    /// An internal cross-check contradicted the computed answer, or a
    /// verification campaign found a violation; either is a library bug.
    CrossCheckFailed = 4,
    /// Null pointer, invalid UTF-8, unknown name, or out-of-range argument.
    InvalidArgument = 5,
    /// The library panicked; the handle is still valid but the call did
    /// nothing.
    InternalError = 6,
}

/// An opaque parsed document: a ring plus named ideals and full sets.
pub struct CwlinDocument {
    doc: IdealDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: CwlinStatus, msg: impl Into<Vec<u8>>) -> CwlinStatus {
    set_error(msg);
    status
}

/// Message for the most recent failure on this thread, or null if no call
/// has failed yet. Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cwlin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn cwlin_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Releases a string returned through a `char **out` parameter.
///
/// # Safety
/// `s` must be a pointer previously returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn cwlin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a document handle.
///
/// # Safety
/// `doc` must be a handle from `cwlin_parse` that has not been freed, or
/// null.
#[no_mangle]
pub unsafe extern "C" fn cwlin_document_free(doc: *mut CwlinDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

unsafe fn text_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, CwlinStatus> {
    if p.is_null() {
        return Err(fail(
            CwlinStatus::InvalidArgument,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(CwlinStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn doc_arg<'a>(p: *const CwlinDocument) -> Result<&'a IdealDocument, CwlinStatus> {
    if p.is_null() {
        return Err(fail(CwlinStatus::InvalidArgument, "document is null"));
    }
    Ok(&(*p).doc)
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, CwlinStatus> {
    if p.is_null() {
        return Err(fail(
            CwlinStatus::InvalidArgument,
            format!("{what} is null"),
        ));
    }
    Ok(&mut *p)
}

fn ideal_arg<'a>(doc: &'a IdealDocument, name: &str) -> Result<&'a MonomialIdeal, CwlinStatus> {
    doc.ideal(name).ok_or_else(|| {
        fail(
            CwlinStatus::InvalidArgument,
            format!("no ideal named {name}"),
        )
    })
}

fn into_out_string(s: String, out: &mut *mut c_char) -> Result<(), CwlinStatus> {
    let c = CString::new(s).map_err(|_| {
        fail(
            CwlinStatus::InternalError,
            "result contains an interior NUL",
        )
    })?;
    *out = c.into_raw();
    Ok(())
}

/// Panics must not unwind across the ABI; they become `InternalError`.
fn guarded(f: impl FnOnce() -> CwlinStatus) -> CwlinStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(CwlinStatus::InternalError, format!("internal panic: {msg}"))
        }
    }
}

/// Status for a completed verdict: a contradicted cross-check outranks
/// inapplicability. The verdict JSON is still written in both cases so the
/// caller can inspect witnesses.
fn verdict_status(v: &Verdict) -> CwlinStatus {
    if v.cross_check == Some(false) {
        fail(
            CwlinStatus::CrossCheckFailed,
            format!("{}: cross-check contradicted the conclusion", v.criterion),
        )
    } else if !v.applicable {
        fail(
            CwlinStatus::Inapplicable,
            format!("{}: preconditions not met", v.criterion),
        )
    } else {
        CwlinStatus::Ok
    }
}

fn write_verdict(v: &Verdict, out: &mut *mut c_char) -> CwlinStatus {
    match into_out_string(to_json(&verdict_value(v)), out) {
        Ok(()) => verdict_status(v),
        Err(status) => status,
    }
}

/// Parses document text; on success stores a new handle in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn cwlin_parse(
    text: *const c_char,
    out: *mut *mut CwlinDocument,
) -> CwlinStatus {
    guarded(|| {
        let (text, out) = match (text_arg(text, "text"), out_arg(out, "out")) {
            (Ok(t), Ok(o)) => (t, o),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match parse(text) {
            Ok(doc) => {
                *out = Box::into_raw(Box::new(CwlinDocument { doc }));
                CwlinStatus::Ok
            }
            Err(e) => fail(CwlinStatus::ParseError, e.to_string()),
        }
    })
}

/// Decides componentwise linearity of a named ideal.
///
/// # Safety
/// `doc` must be a live handle; `ideal` a NUL-terminated string; `out` a
/// valid location.
#[no_mangle]
pub unsafe extern "C" fn cwlin_check_cwl(
    doc: *const CwlinDocument,
    ideal: *const c_char,
    out: *mut bool,
) -> CwlinStatus {
    guarded(|| {
        let (doc, name, out) = match (doc_arg(doc), text_arg(ideal, "ideal"), out_arg(out, "out")) {
            (Ok(d), Ok(n), Ok(o)) => (d, n, o),
            (Err(s), ..) | (_, Err(s), _) | (.., Err(s)) => return s,
        };
        let i = match ideal_arg(doc, name) {
            Ok(i) => i,
            Err(s) => return s,
        };
        match is_componentwise_linear(i) {
            Ok(answer) => {
                *out = answer;
                CwlinStatus::Ok
            }
            Err(e) => fail(CwlinStatus::Inapplicable, e.to_string()),
        }
    })
}

/// Castelnuovo-Mumford regularity of a named ideal.
///
/// # Safety
/// Same contract as `cwlin_check_cwl`.
#[no_mangle]
pub unsafe extern "C" fn cwlin_regularity(
    doc: *const CwlinDocument,
    ideal: *const c_char,
    out: *mut u32,
) -> CwlinStatus {
    guarded(|| {
        let (doc, name, out) = match (doc_arg(doc), text_arg(ideal, "ideal"), out_arg(out, "out")) {
            (Ok(d), Ok(n), Ok(o)) => (d, n, o),
            (Err(s), ..) | (_, Err(s), _) | (.., Err(s)) => return s,
        };
        let i = match ideal_arg(doc, name) {
            Ok(i) => i,
            Err(s) => return s,
        };
        match regularity(i) {
            Ok(report) => {
                *out = report.regularity;
                CwlinStatus::Ok
            }
            Err(e) => fail(CwlinStatus::Inapplicable, e.to_string()),
        }
    })
}

/// Minimal graded Betti table of a named ideal, as JSON.
///
/// # Safety
/// Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
/// string.
#[no_mangle]
pub unsafe extern "C" fn cwlin_betti_json(
    doc: *const CwlinDocument,
    ideal: *const c_char,
    out: *mut *mut c_char,
) -> CwlinStatus {
    guarded(|| {
        let (doc, name, out) = match (doc_arg(doc), text_arg(ideal, "ideal"), out_arg(out, "out")) {
            (Ok(d), Ok(n), Ok(o)) => (d, n, o),
            (Err(s), ..) | (_, Err(s), _) | (.., Err(s)) => return s,
        };
        let i = match ideal_arg(doc, name) {
            Ok(i) => i,
            Err(s) => return s,
        };
        match betti(i) {
            Ok(table) => match into_out_string(to_json(&betti_value(&table)), out) {
                Ok(()) => CwlinStatus::Ok,
                Err(s) => s,
            },
            Err(e) => fail(CwlinStatus::Inapplicable, e.to_string()),
        }
    })
}

/// Binary ideal operation: `op` is one of `intersect`, `sum`, `product`,
/// `colon`. For `colon`, `b` may name an ideal or spell a single term. The
/// result is JSON `{"gens": [...]}`.
///
/// # Safety
/// `doc` must be a live handle; `op`, `a`, `b` NUL-terminated strings;
/// `out` a valid location, receiving a caller-owned string on `Ok`.
#[no_mangle]
pub unsafe extern "C" fn cwlin_binop_json(
    doc: *const CwlinDocument,
    op: *const c_char,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> CwlinStatus {
    guarded(|| {
        let doc = match doc_arg(doc) {
            Ok(d) => d,
            Err(s) => return s,
        };
        let (op, a, b, out) = match (
            text_arg(op, "op"),
            text_arg(a, "a"),
            text_arg(b, "b"),
            out_arg(out, "out"),
        ) {
            (Ok(op), Ok(a), Ok(b), Ok(o)) => (op, a, b, o),
            (Err(s), ..) | (_, Err(s), ..) | (.., Err(s), _) | (.., Err(s)) => return s,
        };
        let i = match ideal_arg(doc, a) {
            Ok(i) => i,
            Err(s) => return s,
        };
        let result = match op {
            "intersect" | "sum" | "product" => {
                let j = match ideal_arg(doc, b) {
                    Ok(j) => j,
                    Err(s) => return s,
                };
                match op {
                    "intersect" => i.intersect(j),
                    "sum" => i.sum(j),
                    _ => i.product(j),
                }
            }
            "colon" => {
                if let Some(j) = doc.ideal(b) {
                    match i.colon(j) {
                        Ok(q) => q,
                        Err(e) => return fail(CwlinStatus::Inapplicable, e.to_string()),
                    }
                } else {
                    match parse_monomial(&doc.ring, b) {
                        Ok(f) => i.colon_monomial(&f),
                        Err(e) => {
                            return fail(
                                CwlinStatus::InvalidArgument,
                                format!("{b} is neither a named ideal nor a term: {e}"),
                            )
                        }
                    }
                }
            }
            other => {
                return fail(
                    CwlinStatus::InvalidArgument,
                    format!("unknown operation {other}"),
                )
            }
        };
        let value = serde_json::json!({ "gens": result.gen_strings() });
        match into_out_string(to_json(&value), out) {
            Ok(()) => CwlinStatus::Ok,
            Err(s) => s,
        }
    })
}

/// Degree-`degree` component ideal of a named ideal, as JSON
/// `{"gens": [...]}`.
///
/// # Safety
/// Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
/// string.
#[no_mangle]
pub unsafe extern "C" fn cwlin_component_json(
    doc: *const CwlinDocument,
    ideal: *const c_char,
    degree: u32,
    out: *mut *mut c_char,
) -> CwlinStatus {
    guarded(|| {
        let (doc, name, out) = match (doc_arg(doc), text_arg(ideal, "ideal"), out_arg(out, "out")) {
            (Ok(d), Ok(n), Ok(o)) => (d, n, o),
            (Err(s), ..) | (_, Err(s), _) | (.., Err(s)) => return s,
        };
        let i = match ideal_arg(doc, name) {
            Ok(i) => i,
            Err(s) => return s,
        };
        let value = serde_json::json!({ "gens": i.component(degree).gen_strings() });
        match into_out_string(to_json(&value), out) {
            Ok(()) => CwlinStatus::Ok,
            Err(s) => s,
        }
    })
}

/// Runs one sum criterion on a pair of named ideals and writes the verdict
/// as JSON. `criterion` is one of `fullsum`, `hv`, `componentwise`,
/// `lin_plus_lin`, `cwl_plus_linear`. `t_max` and `s_max` bound the
/// componentwise and socle scans; pass 0 for the default.
///
/// The verdict JSON is written for `Ok`, `Inapplicable`, and
/// `CrossCheckFailed` alike.
///
/// # Safety
/// `doc` must be a live handle; `criterion`, `a`, `b` NUL-terminated
/// strings; `out` a valid location, receiving a caller-owned string.
#[no_mangle]
pub unsafe extern "C" fn cwlin_sum_check_json(
    doc: *const CwlinDocument,
    criterion: *const c_char,
    a: *const c_char,
    b: *const c_char,
    t_max: u32,
    s_max: u32,
    out: *mut *mut c_char,
) -> CwlinStatus {
    guarded(|| {
        let doc = match doc_arg(doc) {
            Ok(d) => d,
            Err(s) => return s,
        };
        let (criterion, a, b, out) = match (
            text_arg(criterion, "criterion"),
            text_arg(a, "a"),
            text_arg(b, "b"),
            out_arg(out, "out"),
        ) {
            (Ok(c), Ok(a), Ok(b), Ok(o)) => (c, a, b, o),
            (Err(s), ..) | (_, Err(s), ..) | (.., Err(s), _) | (.., Err(s)) => return s,
        };
        let (i, j) = match (ideal_arg(doc, a), ideal_arg(doc, b)) {
            (Ok(i), Ok(j)) => (i, j),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let t_max = (t_max > 0).then_some(t_max);
        let s_max = (s_max > 0).then_some(s_max);
        let v = match criterion {
            "fullsum" => fullsum_verdict(i, j),
            "hv" => check_hv_criterion(i, j, s_max),
            "componentwise" => check_componentwise_criterion(i, j, t_max),
            "lin_plus_lin" => {
                let t = t_max.or_else(|| i.order()).unwrap_or(1);
                check_lin_plus_lin(i, j, t)
            }
            "cwl_plus_linear" => check_cwl_plus_linear(i, j),
            other => {
                return fail(
                    CwlinStatus::InvalidArgument,
                    format!("unknown criterion {other}"),
                )
            }
        };
        write_verdict(&v, out)
    })
}

/// Greedy componentwise-linear ordering certificate for a two-variable
/// ideal, as JSON. A definite "no ordering exists" is `Ok` with
/// `{"ordered": false, ...}`.
///
/// # Safety
/// Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
/// string on `Ok`.
#[no_mangle]
pub unsafe extern "C" fn cwlin_order_json(
    doc: *const CwlinDocument,
    ideal: *const c_char,
    out: *mut *mut c_char,
) -> CwlinStatus {
    guarded(|| {
        let (doc, name, out) = match (doc_arg(doc), text_arg(ideal, "ideal"), out_arg(out, "out")) {
            (Ok(d), Ok(n), Ok(o)) => (d, n, o),
            (Err(s), ..) | (_, Err(s), _) | (.., Err(s)) => return s,
        };
        let i = match ideal_arg(doc, name) {
            Ok(i) => i,
            Err(s) => return s,
        };
        match cwl_ordering(i) {
            Ok(cert) => match into_out_string(to_json(&ordering_value(&cert)), out) {
                Ok(()) => CwlinStatus::Ok,
                Err(s) => s,
            },
            Err(f @ OrderingFailure::NotComponentwiseLinear { .. }) => {
                let value = serde_json::json!({ "ordered": false, "reason": f.to_string() });
                match into_out_string(to_json(&value), out) {
                    Ok(()) => CwlinStatus::Ok,
                    Err(s) => s,
                }
            }
            Err(f @ (OrderingFailure::NotArityTwo | OrderingFailure::Improper)) => {
                fail(CwlinStatus::Inapplicable, f.to_string())
            }
            Err(f @ OrderingFailure::Internal { .. }) => {
                fail(CwlinStatus::CrossCheckFailed, f.to_string())
            }
        }
    })
}

/// Fullness and m-fullness of a named ideal; the verdict is written as JSON
/// for `Ok`, `Inapplicable`, and `CrossCheckFailed` alike. `d_max` bounds
/// the graded tables; pass 0 for the default.
///
/// # Safety
/// Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
/// string.
#[no_mangle]
pub unsafe extern "C" fn cwlin_full_check_json(
    doc: *const CwlinDocument,
    ideal: *const c_char,
    d_max: u32,
    out: *mut *mut c_char,
) -> CwlinStatus {
    guarded(|| {
        let (doc, name, out) = match (doc_arg(doc), text_arg(ideal, "ideal"), out_arg(out, "out")) {
            (Ok(d), Ok(n), Ok(o)) => (d, n, o),
            (Err(s), ..) | (_, Err(s), _) | (.., Err(s)) => return s,
        };
        let i = match ideal_arg(doc, name) {
            Ok(i) => i,
            Err(s) => return s,
        };
        let v = fullness_checks(i, (d_max > 0).then_some(d_max));
        write_verdict(&v, out)
    })
}

/// Runs a verification campaign and writes its report as JSON. `count` and
/// `max_gen_degree` override the campaign defaults when nonzero. Violations
/// return `CrossCheckFailed` with the report still written.
///
/// # Safety
/// `theorem` must be a NUL-terminated string and `out` a valid location;
/// `*out` receives a caller-owned string on `Ok` and `CrossCheckFailed`.
#[no_mangle]
pub unsafe extern "C" fn cwlin_campaign_json(
    theorem: *const c_char,
    count: u64,
    max_gen_degree: u32,
    seed: u64,
    out: *mut *mut c_char,
) -> CwlinStatus {
    guarded(|| {
        let (theorem, out) = match (text_arg(theorem, "theorem"), out_arg(out, "out")) {
            (Ok(t), Ok(o)) => (t, o),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let params = CampaignParams {
            max_gen_degree: (max_gen_degree > 0).then_some(max_gen_degree),
            count: (count > 0).then_some(count),
            seed,
        };
        match run_campaign(theorem, &params) {
            Ok(report) => {
                if let Err(s) = into_out_string(to_json(&campaign_value(&report)), out) {
                    return s;
                }
                if report.passed() {
                    CwlinStatus::Ok
                } else {
                    fail(
                        CwlinStatus::CrossCheckFailed,
                        format!("campaign {theorem} found violations"),
                    )
                }
            }
            Err(e) => fail(CwlinStatus::InvalidArgument, e.to_string()),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    fn parse_ok(text: &str) -> *mut CwlinDocument {
        let text = c(text);
        let mut doc: *mut CwlinDocument = ptr::null_mut();
        let status = unsafe { cwlin_parse(text.as_ptr(), &mut doc) };
        assert_eq!(status, CwlinStatus::Ok);
        assert!(!doc.is_null());
        doc
    }

    fn take_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
        unsafe { cwlin_string_free(p) };
        s
    }

    fn last_error() -> String {
        let p = cwlin_last_error();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
    }

    #[test]
    fn parse_and_check_cwl() {
        let doc = parse_ok("ring x y ;\nideal I = x^3, x*y, y^3 ;\n");
        let name = c("I");
        let mut answer = false;
        let status = unsafe { cwlin_check_cwl(doc, name.as_ptr(), &mut answer) };
        assert_eq!(status, CwlinStatus::Ok);
        assert!(answer);
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn parse_error_reports_code_and_location() {
        let text = c("ideal I = x ;");
        let mut doc: *mut CwlinDocument = ptr::null_mut();
        let status = unsafe { cwlin_parse(text.as_ptr(), &mut doc) };
        assert_eq!(status, CwlinStatus::ParseError);
        assert!(doc.is_null());
        assert!(last_error().contains("E301"));
    }

    #[test]
    fn null_arguments_are_rejected() {
        let mut answer = false;
        let name = c("I");
        let status = unsafe { cwlin_check_cwl(ptr::null(), name.as_ptr(), &mut answer) };
        assert_eq!(status, CwlinStatus::InvalidArgument);
        assert!(last_error().contains("null"));

        let status = unsafe { cwlin_parse(ptr::null(), ptr::null_mut()) };
        assert_eq!(status, CwlinStatus::InvalidArgument);
    }

    #[test]
    fn unknown_ideal_name_is_invalid_argument() {
        let doc = parse_ok("ring x y ;\nideal I = x ;\n");
        let name = c("Q");
        let mut answer = false;
        let status = unsafe { cwlin_check_cwl(doc, name.as_ptr(), &mut answer) };
        assert_eq!(status, CwlinStatus::InvalidArgument);
        assert!(last_error().contains("Q"));
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn regularity_and_betti() {
        let doc = parse_ok("ring x y z ;\nideal I = x*y*z^2, x*y^2*z ;\n");
        let name = c("I");
        let mut reg = 0u32;
        let status = unsafe { cwlin_regularity(doc, name.as_ptr(), &mut reg) };
        assert_eq!(status, CwlinStatus::Ok);
        assert_eq!(reg, 4);

        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cwlin_betti_json(doc, name.as_ptr(), &mut out) };
        assert_eq!(status, CwlinStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["regularity"], 4);
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn binop_colon_accepts_terms() {
        let doc = parse_ok("ring x y ;\nideal M = x^4, x^3*y, x^2*y^2, x*y^3, y^4 ;\n");
        let (op, a, b) = (c("colon"), c("M"), c("x^3"));
        let mut out: *mut c_char = ptr::null_mut();
        let status =
            unsafe { cwlin_binop_json(doc, op.as_ptr(), a.as_ptr(), b.as_ptr(), &mut out) };
        assert_eq!(status, CwlinStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["gens"], serde_json::json!(["x", "y"]));
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn sum_check_fullsum_verdict() {
        let doc = parse_ok(
            "ring x y ;\nideal I = x^4, x^3*y, x^2*y^2, y^3 ;\nideal J = x^4, x^2*y, x*y^2, y^4 ;\n",
        );
        let (criterion, a, b) = (c("fullsum"), c("I"), c("J"));
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe {
            cwlin_sum_check_json(
                doc,
                criterion.as_ptr(),
                a.as_ptr(),
                b.as_ptr(),
                0,
                0,
                &mut out,
            )
        };
        assert_eq!(status, CwlinStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["conclusion"], true);
        assert_eq!(v["cross_check"], true);
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn inapplicable_criterion_still_writes_the_verdict() {
        // lin_plus_lin needs both ideals equigenerated with linear
        // resolutions; a mixed-degree ideal is a precondition failure.
        let doc = parse_ok("ring x y ;\nideal I = x^3, x*y, y^3 ;\nideal J = x ;\n");
        let (criterion, a, b) = (c("lin_plus_lin"), c("I"), c("J"));
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe {
            cwlin_sum_check_json(
                doc,
                criterion.as_ptr(),
                a.as_ptr(),
                b.as_ptr(),
                0,
                0,
                &mut out,
            )
        };
        assert_eq!(status, CwlinStatus::Inapplicable);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["applicable"], false);
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn ordering_certificate_and_definite_failure() {
        let doc =
            parse_ok("ring x y ;\nideal I = x^3, x*y, y^3 ;\nideal B = x^3, x^2*y^2, y^3 ;\n");
        let name = c("I");
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cwlin_order_json(doc, name.as_ptr(), &mut out) };
        assert_eq!(status, CwlinStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["order"], serde_json::json!(["x*y", "x^3", "y^3"]));

        let name = c("B");
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cwlin_order_json(doc, name.as_ptr(), &mut out) };
        assert_eq!(status, CwlinStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["ordered"], false);
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn full_check_verdict() {
        let doc = parse_ok("ring x y ;\nideal I = x^2, y^2 ;\n");
        let name = c("I");
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cwlin_full_check_json(doc, name.as_ptr(), 0, &mut out) };
        assert_eq!(status, CwlinStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["criterion"], "full_check");
        unsafe { cwlin_document_free(doc) };
    }

    #[test]
    fn campaign_passes_and_unknown_id_is_invalid() {
        let theorem = c("ord");
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cwlin_campaign_json(theorem.as_ptr(), 0, 2, 0, &mut out) };
        assert_eq!(status, CwlinStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["checked"], 121);

        let theorem = c("nonsense");
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { cwlin_campaign_json(theorem.as_ptr(), 0, 0, 0, &mut out) };
        assert_eq!(status, CwlinStatus::InvalidArgument);
        assert!(out.is_null());
    }

    #[test]
    fn version_is_a_static_string() {
        let p = cwlin_version();
        let v = unsafe { CStr::from_ptr(p) }.to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn generated_header_declares_the_api() {
        let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/cwlin.h");
        let text = std::fs::read_to_string(header).expect("header generated by build script");
        for needle in [
            "CWLIN_H",
            "CwlinStatus",
            "CwlinDocument",
            "cwlin_parse",
            "cwlin_sum_check_json",
            "cwlin_campaign_json",
            "cwlin_last_error",
            "CWLIN_STATUS_CROSS_CHECK_FAILED",
        ] {
            assert!(text.contains(needle), "header is missing {needle}");
        }
    }
}

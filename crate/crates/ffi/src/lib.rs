//! C interface to `probedf`.
//!
//! Graphs and certificates are opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! a `PdfStatus`; on failure `pdf_last_error` describes the problem for the
//! current thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use probedf::{parse_graph, recognize, verify, Certificate, Format, Graph};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdfStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidArgument = 3,
    BufferTooSmall = 4,
    Internal = 5,
}

/// Input text format for `pdf_graph_parse`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdfFormat {
    Edgelist = 0,
    Dimacs = 1,
}

/// Opaque graph handle.
pub struct PdfGraph(Graph);

/// Opaque certificate handle.
pub struct PdfCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn fail(status: PdfStatus, msg: impl Into<String>) -> PdfStatus {
    set_error(msg);
    status
}

fn guarded(f: impl FnOnce() -> PdfStatus) -> PdfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(PdfStatus::Internal, "internal panic"),
    }
}

fn copy_out(src: &[usize], buf: *mut usize, cap: usize, len: *mut usize) -> PdfStatus {
    if len.is_null() {
        return fail(PdfStatus::NullPointer, "length pointer is null");
    }
    unsafe { *len = src.len() };
    if src.is_empty() {
        return PdfStatus::Ok;
    }
    if buf.is_null() || cap < src.len() {
        return fail(
            PdfStatus::BufferTooSmall,
            format!("need room for {} entries", src.len()),
        );
    }
    unsafe { ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len()) };
    PdfStatus::Ok
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pdf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
/// consecutive endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or may be null when
/// `m == 0`), and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_graph_new(n: usize, edges: *const usize, m: usize, out: *mut *mut PdfGraph) -> PdfStatus {
    guarded(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return fail(PdfStatus::NullPointer, "null argument");
        }
        let flat: &[usize] = if m == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        match Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PdfGraph(g)));
                PdfStatus::Ok
            }
            Err(e) => fail(PdfStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parses a NUL-terminated edgelist or DIMACS text.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_graph_parse(text: *const c_char, format: PdfFormat, out: *mut *mut PdfGraph) -> PdfStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return fail(PdfStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(PdfStatus::Parse, "input is not UTF-8");
        };
        let format = match format {
            PdfFormat::Edgelist => Format::Edgelist,
            PdfFormat::Dimacs => Format::Dimacs,
        };
        match parse_graph(s, format) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PdfGraph(g)));
                PdfStatus::Ok
            }
            Err(e) => fail(PdfStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pdf_graph_free(g: *mut PdfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdf_graph_vertex_count(g: *const PdfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdf_graph_edge_count(g: *const PdfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Runs recognition and returns a new certificate handle.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_recognize(g: *const PdfGraph, out: *mut *mut PdfCertificate) -> PdfStatus {
    guarded(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(PdfStatus::NullPointer, "null argument");
        };
        *out = Box::into_raw(Box::new(PdfCertificate(recognize(&g.0))));
        PdfStatus::Ok
    })
}

/// # Safety
/// `c` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pdf_certificate_free(c: *mut PdfCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// 1 for a member, 0 for a non-member or a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdf_certificate_is_member(c: *const PdfCertificate) -> i32 {
    c.as_ref().map_or(0, |c| i32::from(c.0.is_member()))
}

/// Forbidden-subgraph indicator (1..=17), or 0 for a positive certificate
/// or a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdf_certificate_indicator(c: *const PdfCertificate) -> u8 {
    match c.as_ref().map(|c| &c.0) {
        Some(Certificate::Negative(w)) => w.indicator(),
        _ => 0,
    }
}

/// Ordered obstruction vertices of a negative certificate, or the
/// nonprobes of a positive one. `*len` always receives the full length;
/// returns `BufferTooSmall` when `cap` is short.
///
/// # Safety
/// `buf` must have room for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_certificate_vertices(
    c: *const PdfCertificate,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> PdfStatus {
    guarded(|| {
        let Some(c) = c.as_ref() else {
            return fail(PdfStatus::NullPointer, "null certificate");
        };
        match &c.0 {
            Certificate::Negative(w) => copy_out(&w.vertices, buf, cap, len),
            Certificate::Positive(p) => copy_out(&p.nonprobes, buf, cap, len),
        }
    })
}

/// Completion edges of a positive certificate as `2 * pairs` endpoints;
/// zero pairs for a negative one. Sizes count values, not pairs.
///
/// # Safety
/// `buf` must have room for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_certificate_completion(
    c: *const PdfCertificate,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> PdfStatus {
    guarded(|| {
        let Some(c) = c.as_ref() else {
            return fail(PdfStatus::NullPointer, "null certificate");
        };
        let flat: Vec<usize> = match &c.0 {
            Certificate::Positive(p) => p.completion.iter().flat_map(|&(u, v)| [u, v]).collect(),
            Certificate::Negative(_) => Vec::new(),
        };
        copy_out(&flat, buf, cap, len)
    })
}

/// Certificate as JSON; release the string with `pdf_string_free`.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_certificate_to_json(c: *const PdfCertificate, out: *mut *mut c_char) -> PdfStatus {
    guarded(|| {
        let (Some(c), false) = (c.as_ref(), out.is_null()) else {
            return fail(PdfStatus::NullPointer, "null argument");
        };
        match CString::new(c.0.to_json()) {
            Ok(s) => {
                *out = s.into_raw();
                PdfStatus::Ok
            }
            Err(e) => fail(PdfStatus::Internal, e.to_string()),
        }
    })
}

/// Parses a JSON certificate.
///
/// # Safety
/// `json` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_certificate_from_json(json: *const c_char, out: *mut *mut PdfCertificate) -> PdfStatus {
    guarded(|| {
        if json.is_null() || out.is_null() {
            return fail(PdfStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(json).to_str() else {
            return fail(PdfStatus::Parse, "input is not UTF-8");
        };
        match Certificate::from_json(s) {
            Ok(c) => {
                *out = Box::into_raw(Box::new(PdfCertificate(c)));
                PdfStatus::Ok
            }
            Err(e) => fail(PdfStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must come from `pdf_certificate_to_json`. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pdf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks `c` against `g`; `*valid` receives 1 or 0.
///
/// # Safety
/// Both handles must be live and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn pdf_verify(g: *const PdfGraph, c: *const PdfCertificate, valid: *mut i32) -> PdfStatus {
    guarded(|| {
        let (Some(g), Some(c), false) = (g.as_ref(), c.as_ref(), valid.is_null()) else {
            return fail(PdfStatus::NullPointer, "null argument");
        };
        *valid = i32::from(verify(&g.0, &c.0));
        PdfStatus::Ok
    })
}

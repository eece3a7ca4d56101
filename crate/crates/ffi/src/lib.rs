//! C interface to `alpha2-minors`.
//!
//! Every fallible call returns an [`A2Status`] and writes its result through
//! an out-pointer. On failure a message is kept per thread and can be read
//! with [`a2_last_error_message`]. Handles and strings returned here must be
//! released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use alpha2_minors::invariants::{alpha_at_most_two, chromatic_number_alpha2, clique_number};
use alpha2_minors::{
    construct_chi_minor, construct_half_minor, emit_graph6, parse_graph6, Certificate, Error, Graph,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum A2Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Precondition = 4,
    AlphaAtLeastThree = 5,
    Invariant = 6,
    OracleCap = 7,
    Timeout = 8,
    OutOfRange = 9,
    Panic = 10,
    Other = 11,
}

/// Opaque graph handle.
pub struct A2Graph {
    inner: Graph,
}

/// Opaque certificate handle.
pub struct A2Certificate {
    inner: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> A2Status {
    match e {
        Error::Graph6(_) => A2Status::Parse,
        Error::AlphaAtLeastThree(_) => A2Status::AlphaAtLeastThree,
        Error::Precondition(_) => A2Status::Precondition,
        Error::Invariant(_) => A2Status::Invariant,
        Error::OracleCap { .. } => A2Status::OracleCap,
        Error::Timeout => A2Status::Timeout,
        Error::VertexOutOfRange { .. } | Error::TooManyVertices { .. } => A2Status::OutOfRange,
        _ => A2Status::Other,
    }
}

/// Runs `f`, recording the error message and turning panics into
/// [`A2Status::Panic`].
fn guard(f: impl FnOnce() -> Result<(), (A2Status, String)>) -> A2Status {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => A2Status::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside alpha2-minors");
            A2Status::Panic
        }
    }
}

fn lib_err(e: Error) -> (A2Status, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (A2Status, String) {
    (A2Status::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const A2Graph) -> Result<&'a Graph, (A2Status, String)> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (A2Status, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> Result<*mut c_char, (A2Status, String)> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| (A2Status::Other, "string contains a NUL byte".into()))
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn a2_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn a2_status_name(status: A2Status) -> *const c_char {
    let s: &'static CStr = match status {
        A2Status::Ok => c"ok",
        A2Status::NullPointer => c"null pointer",
        A2Status::InvalidUtf8 => c"invalid utf-8",
        A2Status::Parse => c"graph6 parse error",
        A2Status::Precondition => c"precondition violated",
        A2Status::AlphaAtLeastThree => c"independence number at least 3",
        A2Status::Invariant => c"invariant violation",
        A2Status::OracleCap => c"oracle cap exceeded",
        A2Status::Timeout => c"timeout",
        A2Status::OutOfRange => c"out of range",
        A2Status::Panic => c"panic",
        A2Status::Other => c"error",
    };
    s.as_ptr()
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_graph_from_graph6(text: *const c_char, out: *mut *mut A2Graph) -> A2Status {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (A2Status::InvalidUtf8, "text is not valid UTF-8".into()))?;
        let g = parse_graph6(s).map_err(|e| lib_err(e.into()))?;
        write(out, Box::into_raw(Box::new(A2Graph { inner: g })))
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn a2_graph_free(g: *mut A2Graph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Writes a newly allocated graph6 string; free it with [`a2_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_graph_to_graph6(g: *const A2Graph, out: *mut *mut c_char) -> A2Status {
    guard(|| {
        let g = graph_ref(g)?;
        write(out, into_c_string(emit_graph6(g))?)
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_graph_vertex_count(g: *const A2Graph, out: *mut usize) -> A2Status {
    guard(|| write(out, graph_ref(g)?.n()))
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_graph_has_edge(g: *const A2Graph, u: usize, v: usize, out: *mut bool) -> A2Status {
    guard(|| {
        let g = graph_ref(g)?;
        if u >= g.n() || v >= g.n() {
            return Err((A2Status::OutOfRange, format!("vertex pair ({u}, {v}) out of range for n = {}", g.n())));
        }
        write(out, g.has_edge(u, v))
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_alpha_at_most_two(g: *const A2Graph, out: *mut bool) -> A2Status {
    guard(|| write(out, alpha_at_most_two(graph_ref(g)?)))
}

/// χ(G); fails with `ALPHA_AT_LEAST_THREE` outside the supported class.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_chromatic_number(g: *const A2Graph, out: *mut usize) -> A2Status {
    guard(|| write(out, chromatic_number_alpha2(graph_ref(g)?).map_err(lib_err)?))
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_clique_number(g: *const A2Graph, out: *mut usize) -> A2Status {
    guard(|| write(out, clique_number(graph_ref(g)?).size))
}

unsafe fn construct(
    g: *const A2Graph,
    out: *mut *mut A2Certificate,
    build: impl FnOnce(&Graph) -> alpha2_minors::Result<Certificate>,
) -> A2Status {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let c = build(g).map_err(lib_err)?;
        write(out, Box::into_raw(Box::new(A2Certificate { inner: c })))
    })
}

/// Certificate for `K^ell_{ell, ceil(n/2) - ell}`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_construct_half_minor(g: *const A2Graph, ell: usize, out: *mut *mut A2Certificate) -> A2Status {
    construct(g, out, |g| construct_half_minor(g, ell))
}

/// Certificate for `K^ell_{ell, chi - ell}`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_construct_chi_minor(g: *const A2Graph, ell: usize, out: *mut *mut A2Certificate) -> A2Status {
    construct(g, out, |g| construct_chi_minor(g, ell))
}

/// # Safety
/// `c` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn a2_certificate_free(c: *mut A2Certificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live certificate handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_certificate_validated(c: *const A2Certificate, out: *mut bool) -> A2Status {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        write(out, c.inner.validated)
    })
}

/// Writes the certificate as JSON; free it with [`a2_string_free`].
///
/// # Safety
/// `c` must be a live certificate handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn a2_certificate_to_json(c: *const A2Certificate, out: *mut *mut c_char) -> A2Status {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        write(out, into_c_string(c.inner.to_json())?)
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn a2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

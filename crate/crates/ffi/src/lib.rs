//! C ABI over `ribbonpoly`.
//!
//! Every fallible call returns an [`RpStatus`] and writes its result through
//! an out-pointer. Handles and strings returned by the library must be
//! released with the matching `*_free` function. After a non-`Ok` status,
//! [`rp_last_error_message`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ribbonpoly::duality::{apply_word, partial_dual, partial_petrial, OperatorWord};
use ribbonpoly::{vertex_polynomial, EdgeId, Error, Method, Polynomial, RibbonGraph, SubgroupTag};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownEdge = 4,
    GuardExceeded = 5,
    InvalidArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RpSubgroup {
    Delta = 0,
    Tau = 1,
    Wilson = 2,
    Triality = 3,
    Full = 4,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RpMethod {
    Brute = 0,
    Recursive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RpFormat {
    Ribbon = 0,
    /// Falls back to the ribbon format for graphs with more than one vertex.
    Bouquet = 1,
    Json = 2,
}

/// Opaque ribbon graph handle.
pub struct RpGraph(RibbonGraph);

/// Opaque integer polynomial handle.
pub struct RpPoly(Polynomial);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(RpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => RpStatus::Parse,
            Error::UnknownEdge(_) => RpStatus::UnknownEdge,
            Error::GuardExceeded { .. } => RpStatus::GuardExceeded,
            _ => RpStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guarded<F>(f: F) -> RpStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RpStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RpStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(RpStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(RpStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn graph<'a>(g: *const RpGraph) -> Result<&'a RibbonGraph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| Failure(RpStatus::NullPointer, "null graph handle".into()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(RpStatus::NullPointer, "null out-pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(RpStatus::InvalidArgument, "string contains nul".into()))?;
    write(out, c.into_raw())
}

fn edge_list(s: &str) -> Vec<EdgeId> {
    s.split(',').map(str::trim).filter(|l| !l.is_empty()).map(EdgeId::from).collect()
}

/// Parses a ribbon-file text, an inline bouquet such as `"(1,2,-1,2)"`, or
/// the JSON form.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_parse(text: *const c_char, out: *mut *mut RpGraph) -> RpStatus {
    guarded(|| {
        let s = c_str(text)?;
        let g = if s.trim_start().starts_with('{') { RibbonGraph::from_json(s)? } else { RibbonGraph::parse_any(s)? };
        write(out, Box::into_raw(Box::new(RpGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_free(g: *mut RpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex, edge and boundary component counts; any out-pointer may be null.
///
/// # Safety
/// `g` must be a valid handle; non-null out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_counts(
    g: *const RpGraph,
    vertices: *mut usize,
    edges: *mut usize,
    boundaries: *mut usize,
) -> RpStatus {
    guarded(|| {
        let g = graph(g)?;
        for (out, n) in [(vertices, g.num_vertices()), (edges, g.num_edges()), (boundaries, g.boundary_count())] {
            if !out.is_null() {
                out.write(n);
            }
        }
        Ok(())
    })
}

/// Renders a graph; free the result with [`rp_string_free`].
///
/// # Safety
/// `g` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_to_string(g: *const RpGraph, format: RpFormat, out: *mut *mut c_char) -> RpStatus {
    guarded(|| {
        let g = graph(g)?;
        let s = match format {
            RpFormat::Ribbon => g.to_ribbon_string(),
            RpFormat::Bouquet => g.to_bouquet_string().unwrap_or_else(|| g.to_ribbon_string()),
            RpFormat::Json => g.to_json(),
        };
        write_string(out, s)
    })
}

unsafe fn transform<F>(g: *const RpGraph, edges: *const c_char, out: *mut *mut RpGraph, f: F) -> RpStatus
where
    F: FnOnce(&RibbonGraph, Vec<EdgeId>) -> ribbonpoly::Result<RibbonGraph>,
{
    guarded(|| {
        let g = graph(g)?;
        let edges = edge_list(c_str(edges)?);
        let h = f(g, edges)?;
        write(out, Box::into_raw(Box::new(RpGraph(h))))
    })
}

/// Partial dual with respect to a comma-separated edge list.
///
/// # Safety
/// `g` must be a valid handle, `edges` a valid C string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_partial_dual(
    g: *const RpGraph,
    edges: *const c_char,
    out: *mut *mut RpGraph,
) -> RpStatus {
    transform(g, edges, out, partial_dual)
}

/// Partial Petrial with respect to a comma-separated edge list.
///
/// # Safety
/// `g` must be a valid handle, `edges` a valid C string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_partial_petrial(
    g: *const RpGraph,
    edges: *const c_char,
    out: *mut *mut RpGraph,
) -> RpStatus {
    transform(g, edges, out, partial_petrial)
}

/// Applies a word over `d`/`t` to an edge set; the last letter acts first.
///
/// # Safety
/// `g` must be a valid handle, `word` and `edges` valid C strings, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_apply_word(
    g: *const RpGraph,
    word: *const c_char,
    edges: *const c_char,
    out: *mut *mut RpGraph,
) -> RpStatus {
    let parsed = match guarded_word(word) {
        Ok(w) => w,
        Err(status) => return status,
    };
    transform(g, edges, out, |g, a| apply_word(g, &parsed, a))
}

unsafe fn guarded_word(word: *const c_char) -> Result<OperatorWord, RpStatus> {
    let mut parsed = None;
    let status = guarded(|| {
        parsed = Some(c_str(word)?.parse::<OperatorWord>()?);
        Ok(())
    });
    parsed.ok_or(status)
}

/// Vertex polynomial of a graph for one ribbon subgroup.
///
/// # Safety
/// `g` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_vertex_polynomial(
    g: *const RpGraph,
    subgroup: RpSubgroup,
    method: RpMethod,
    out: *mut *mut RpPoly,
) -> RpStatus {
    guarded(|| {
        let g = graph(g)?;
        let tag = match subgroup {
            RpSubgroup::Delta => SubgroupTag::Delta,
            RpSubgroup::Tau => SubgroupTag::Tau,
            RpSubgroup::Wilson => SubgroupTag::Wilson,
            RpSubgroup::Triality => SubgroupTag::Triality,
            RpSubgroup::Full => SubgroupTag::Full,
        };
        let method = match method {
            RpMethod::Brute => Method::Brute,
            RpMethod::Recursive => Method::Recursive,
        };
        let p = vertex_polynomial(g, tag, method)?;
        write(out, Box::into_raw(Box::new(RpPoly(p))))
    })
}

unsafe fn poly<'a>(p: *const RpPoly) -> Result<&'a Polynomial, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| Failure(RpStatus::NullPointer, "null polynomial handle".into()))
}

/// Text form, e.g. `3x + x^2`.
///
/// # Safety
/// `p` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_to_string(p: *const RpPoly, out: *mut *mut c_char) -> RpStatus {
    guarded(|| write_string(out, poly(p)?.to_string()))
}

/// JSON form mapping exponents to decimal coefficient strings.
///
/// # Safety
/// `p` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_to_json(p: *const RpPoly, out: *mut *mut c_char) -> RpStatus {
    guarded(|| write_string(out, poly(p)?.to_json()))
}

/// Degree of a nonzero polynomial.
///
/// # Safety
/// `p` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_degree(p: *const RpPoly, out: *mut u32) -> RpStatus {
    guarded(|| {
        let d = poly(p)?.degree().ok_or_else(|| Failure::from(Error::ZeroPolynomial))?;
        write(out, d)
    })
}

/// Coefficient of `x^exp` as a decimal string.
///
/// # Safety
/// `p` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_coefficient(p: *const RpPoly, exp: u32, out: *mut *mut c_char) -> RpStatus {
    guarded(|| write_string(out, poly(p)?.coeff(exp).to_string()))
}

/// # Safety
/// `p` must be null or a handle returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rp_poly_free(p: *mut RpPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread; empty if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn rp_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

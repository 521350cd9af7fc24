//! C ABI over the flipwide core.
//!
//! Graphs and conversion results are opaque handles released with their `*_free`
//! function. Every fallible call returns a status code: `FW_OK` (0), one of the core error
//! codes (1 to 14), or one of the ABI codes below. The message of the last failure on the
//! calling thread is available from `fw_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use flipwide::conversion::{flips_to_deletions, ConversionConfig, ConversionOutcome, Mode};
use flipwide::io::json::parse_flips;
use flipwide::io::{parse_graph6, write_graph6};
use flipwide::witness::{verify_widenable, WidenableInstance};
use flipwide::{Error, Graph, VertexSet};

pub const FW_OK: i32 = 0;
pub const FW_ERR_OUT_OF_RANGE: i32 = 1;
pub const FW_ERR_LOOP_REJECTED: i32 = 2;
pub const FW_ERR_LOOP_QUERY: i32 = 3;
pub const FW_ERR_DUPLICATE_VERTEX: i32 = 4;
pub const FW_ERR_TOO_LARGE: i32 = 5;
pub const FW_ERR_INVALID_PARAMETER: i32 = 6;
pub const FW_ERR_MISSING_WITNESS: i32 = 7;
pub const FW_ERR_PRECONDITION_FAILED: i32 = 8;
pub const FW_ERR_BOUND_VIOLATED: i32 = 9;
pub const FW_ERR_SIZE_REQUIREMENT_UNMET: i32 = 10;
pub const FW_ERR_OVERFLOW: i32 = 11;
pub const FW_ERR_INVALID_SPEC: i32 = 12;
pub const FW_ERR_INVALID_PATH: i32 = 13;
pub const FW_ERR_MALFORMED: i32 = 14;
/// A required pointer argument was null.
pub const FW_ERR_NULL_POINTER: i32 = 100;
/// A string argument was not valid UTF-8.
pub const FW_ERR_UTF8: i32 = 101;
/// The library panicked; the call had no effect.
pub const FW_ERR_PANIC: i32 = 102;

pub const FW_MODE_GUARANTEED: i32 = 0;
pub const FW_MODE_BEST_EFFORT: i32 = 1;

/// Distance reported by `fw_bfs` for unreachable vertices.
pub const FW_UNREACHABLE: u32 = u32::MAX;

/// Opaque graph handle.
pub struct FwGraph(Graph);

/// Opaque result of `fw_convert`.
pub struct FwConversion {
    success: bool,
    s_set: Vec<usize>,
    b_set: Vec<usize>,
    reason: CString,
    trace_json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Fail {
    Core(Error),
    Null,
    Utf8,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            FW_OK
        }
        Ok(Err(Fail::Core(e))) => {
            set_last_error(&e.to_string());
            e.code()
        }
        Ok(Err(Fail::Null)) => {
            set_last_error("null pointer argument");
            FW_ERR_NULL_POINTER
        }
        Ok(Err(Fail::Utf8)) => {
            set_last_error("string argument is not UTF-8");
            FW_ERR_UTF8
        }
        Err(_) => {
            set_last_error("internal panic");
            FW_ERR_PANIC
        }
    }
}

unsafe fn graph<'a>(g: *const FwGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|g| &g.0).ok_or(Fail::Null)
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Result<&'a [T], Fail> {
    if len == 0 {
        Ok(&[])
    } else if data.is_null() {
        Err(Fail::Null)
    } else {
        Ok(std::slice::from_raw_parts(data, len))
    }
}

unsafe fn string<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Null);
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail::Utf8)
}

unsafe fn vertex_set(n: usize, data: *const usize, len: usize) -> Result<VertexSet, Fail> {
    Ok(VertexSet::from_vertices(n, slice(data, len)?.iter().copied())?)
}

/// Message for the last failed call on this thread; empty after a success. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn fw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`
/// (`u0, v0, u1, v1, …`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_graph_from_edges(n: usize, edges: *const usize, edge_count: usize, out: *mut *mut FwGraph) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null);
        }
        let flat = slice(edges, edge_count.checked_mul(2).ok_or(Fail::Null)?)?;
        let g = Graph::from_edge_list(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        *out = Box::into_raw(Box::new(FwGraph(g)));
        Ok(())
    })
}

/// Decodes a NUL-terminated graph6 string.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_graph_from_graph6(text: *const c_char, out: *mut *mut FwGraph) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null);
        }
        let g = parse_graph6(string(text)?.as_bytes())?;
        *out = Box::into_raw(Box::new(FwGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fw_graph_free(g: *mut FwGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fw_graph_vertex_count(g: *const FwGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fw_graph_edge_count(g: *const FwGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Encodes as graph6; release the string with `fw_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_graph_to_graph6(g: *const FwGraph, out: *mut *mut c_char) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null);
        }
        let bytes = write_graph6(graph(g)?)?;
        *out = CString::new(bytes).expect("graph6 has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Single-source distances into `out`, which must hold `fw_graph_vertex_count(g)` values.
/// Unreachable vertices get `FW_UNREACHABLE`.
///
/// # Safety
/// `g` must be a live handle; `out` must have room for every vertex.
#[no_mangle]
pub unsafe extern "C" fn fw_bfs(g: *const FwGraph, source: usize, out: *mut u32) -> i32 {
    guard(|| {
        let g = graph(g)?;
        if out.is_null() {
            return Err(Fail::Null);
        }
        let d = g.bfs_distances(source)?;
        let out = std::slice::from_raw_parts_mut(out, g.n());
        for (slot, v) in out.iter_mut().zip(d.to_options()) {
            *slot = v.unwrap_or(FW_UNREACHABLE);
        }
        Ok(())
    })
}

/// Checks that `b ⊆ a ∖ s`, `|b| >= m`, and `b` is `r`-independent in `G ∖ s`. Writes 1 or 0
/// to `valid`.
///
/// # Safety
/// Each array must hold the stated number of values; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_verify_widenable(
    g: *const FwGraph,
    a: *const usize,
    a_len: usize,
    s: *const usize,
    s_len: usize,
    b: *const usize,
    b_len: usize,
    r: u32,
    m: usize,
    valid: *mut i32,
) -> i32 {
    guard(|| {
        let g = graph(g)?;
        if valid.is_null() {
            return Err(Fail::Null);
        }
        let inst = WidenableInstance {
            a_set: vertex_set(g.n(), a, a_len)?,
            s_set: vertex_set(g.n(), s, s_len)?,
            r,
            m,
            witness: Some(vertex_set(g.n(), b, b_len)?),
        };
        *valid = verify_widenable(g, &inst)?.is_valid() as i32;
        Ok(())
    })
}

/// Converts a flip witness `b` for the flips in `flips_json` (`[[A, B], …]`) into a deletion
/// witness. `mode` is `FW_MODE_GUARANTEED` or `FW_MODE_BEST_EFFORT`. A conversion that runs
/// but fails still returns `FW_OK`; inspect it with `fw_conversion_is_success`.
///
/// # Safety
/// `flips_json` must be a valid C string, `b` must hold `b_len` values, `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_convert(
    g: *const FwGraph,
    flips_json: *const c_char,
    b: *const usize,
    b_len: usize,
    r: u32,
    m: usize,
    t0: usize,
    mode: i32,
    out: *mut *mut FwConversion,
) -> i32 {
    guard(|| {
        let g = graph(g)?;
        if out.is_null() {
            return Err(Fail::Null);
        }
        let flips = parse_flips(string(flips_json)?, g.n())?;
        let b = vertex_set(g.n(), b, b_len)?;
        let mode = match mode {
            FW_MODE_GUARANTEED => Mode::Guaranteed,
            FW_MODE_BEST_EFFORT => Mode::BestEffort,
            other => return Err(Error::InvalidParameter(format!("unknown mode {other}")).into()),
        };
        let outcome = flips_to_deletions(g, &flips, &b, &ConversionConfig::new(r, m, t0, mode))?;
        let trace_json = CString::new(serde_json::to_string(outcome.trace()).expect("trace serialises")).unwrap_or_default();
        let conv = match outcome {
            ConversionOutcome::Success { s_set, b_final, .. } => FwConversion {
                success: true,
                s_set: s_set.to_vec(),
                b_set: b_final.to_vec(),
                reason: CString::default(),
                trace_json,
            },
            ConversionOutcome::Failure { reason, .. } => FwConversion {
                success: false,
                s_set: Vec::new(),
                b_set: Vec::new(),
                reason: CString::new(reason.replace('\0', " ")).unwrap_or_default(),
                trace_json,
            },
        };
        *out = Box::into_raw(Box::new(conv));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fw_conversion_is_success(c: *const FwConversion) -> i32 {
    c.as_ref().is_some_and(|c| c.success) as i32
}

/// Number of deleted vertices; `*data` receives a pointer valid for the handle's lifetime.
///
/// # Safety
/// `c` must be a live handle; `data` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fw_conversion_deletion(c: *const FwConversion, data: *mut *const usize) -> usize {
    let Some(c) = c.as_ref() else { return 0 };
    if !data.is_null() {
        *data = c.s_set.as_ptr();
    }
    c.s_set.len()
}

/// Size of the final witness; `*data` receives a pointer valid for the handle's lifetime.
///
/// # Safety
/// `c` must be a live handle; `data` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fw_conversion_witness(c: *const FwConversion, data: *mut *const usize) -> usize {
    let Some(c) = c.as_ref() else { return 0 };
    if !data.is_null() {
        *data = c.b_set.as_ptr();
    }
    c.b_set.len()
}

/// Failure reason, empty on success. Valid for the handle's lifetime.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fw_conversion_reason(c: *const FwConversion) -> *const c_char {
    c.as_ref().map_or(ptr::null(), |c| c.reason.as_ptr())
}

/// The conversion trace as JSON. Valid for the handle's lifetime.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fw_conversion_trace_json(c: *const FwConversion) -> *const c_char {
    c.as_ref().map_or(ptr::null(), |c| c.trace_json.as_ptr())
}

/// # Safety
/// `c` must come from `fw_convert` and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fw_conversion_free(c: *mut FwConversion) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// `R^k(m, n)` by the binomial bound, as a decimal string released with `fw_string_free`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_iterated_ramsey_upper(k: u32, m: u64, n: u64, out: *mut *mut c_char) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null);
        }
        let v = flipwide::families::iterated_ramsey_upper(k, m, n)?;
        *out = CString::new(v.to_string()).expect("digits").into_raw();
        Ok(())
    })
}

//! C ABI over `cgc-core`.
//!
//! Graphs are opaque `CgcGraph` handles created by the `cgc_graph_*` and
//! `cgc_gadget` constructors and released with `cgc_graph_free`. Every
//! fallible call returns a `CgcStatus`; the message of the most recent
//! failure on the calling thread is available from `cgc_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::time::Duration;

use cgc_core::formats::{read_graph6, write_graph6};
use cgc_core::gadgets::{edge_gadget_line, gadget_G3k, gadget_G5k, gadget_Gk, gadget_P9, gadget_line};
use cgc_core::params::{connected_chromatic_number_with, connected_grundy_number_with};
use cgc_core::{chromatic_number_with, exists_cgc_with, Error, Graph, Outcome, SearchBudget, SearchOptions, Verdict};

/// Opaque graph handle.
pub struct CgcGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CgcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Disconnected = 4,
    /// The budget ran out; any value written is a bound, not exact.
    Exhausted = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: CgcStatus, message: impl Into<String>) -> CgcStatus {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
    status
}

fn from_error(e: Error) -> CgcStatus {
    let status = match e {
        Error::Parse { .. } => CgcStatus::ParseError,
        Error::Disconnected => CgcStatus::Disconnected,
        Error::Exhausted => CgcStatus::Exhausted,
        Error::Internal(_) | Error::Io(_) => CgcStatus::Internal,
        _ => CgcStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn set_status(out: *mut CgcStatus, status: CgcStatus) {
    if !out.is_null() {
        // SAFETY: caller passes either null or a writable CgcStatus.
        unsafe { *out = status };
    }
}

fn boxed(result: cgc_core::Result<Graph>, status: *mut CgcStatus) -> *mut CgcGraph {
    match result {
        Ok(inner) => {
            set_status(status, CgcStatus::Ok);
            Box::into_raw(Box::new(CgcGraph { inner }))
        }
        Err(e) => {
            set_status(status, from_error(e));
            ptr::null_mut()
        }
    }
}

fn options(budget_nodes: u64, budget_ms: u64) -> SearchOptions {
    let mut budget = if budget_nodes == 0 { SearchBudget::unlimited() } else { SearchBudget::nodes(budget_nodes) };
    if budget_ms > 0 {
        budget = budget.with_time(Duration::from_millis(budget_ms));
    }
    SearchOptions::new(budget)
}

/// # Safety
/// `g` must be null or a live handle.
unsafe fn graph<'a>(g: *const CgcGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

/// Message of the last failure on this thread; empty if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cgc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Graph on `n` vertices from `m` edges stored as `2m` endpoint indices.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m == 0`);
/// `status` may be null.
#[no_mangle]
pub unsafe extern "C" fn cgc_graph_new(n: usize, edges: *const usize, m: usize, status: *mut CgcStatus) -> *mut CgcGraph {
    if edges.is_null() && m > 0 {
        set_status(status, fail(CgcStatus::NullPointer, "edges is null"));
        return ptr::null_mut();
    }
    let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
    let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
    boxed(Graph::new(n, &pairs), status)
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `status` may be null.
#[no_mangle]
pub unsafe extern "C" fn cgc_graph_from_graph6(text: *const c_char, status: *mut CgcStatus) -> *mut CgcGraph {
    if text.is_null() {
        set_status(status, fail(CgcStatus::NullPointer, "text is null"));
        return ptr::null_mut();
    }
    match CStr::from_ptr(text).to_str() {
        Ok(s) => boxed(read_graph6(s), status),
        Err(_) => {
            set_status(status, fail(CgcStatus::ParseError, "text is not UTF-8"));
            ptr::null_mut()
        }
    }
}

/// Generates a gadget by name: `Gk`, `G5k`, `G3k`, `edge-line`, `line` or
/// `P9` (which ignores `k`).
///
/// # Safety
/// `name` must be null or a NUL-terminated string; `status` may be null.
#[no_mangle]
pub unsafe extern "C" fn cgc_gadget(name: *const c_char, k: u32, status: *mut CgcStatus) -> *mut CgcGraph {
    if name.is_null() {
        set_status(status, fail(CgcStatus::NullPointer, "name is null"));
        return ptr::null_mut();
    }
    let art = match CStr::from_ptr(name).to_str().unwrap_or("") {
        "Gk" => gadget_Gk(k),
        "G5k" => gadget_G5k(k),
        "G3k" => gadget_G3k(k),
        "edge-line" => edge_gadget_line(k),
        "line" => gadget_line(k),
        "P9" => Ok(gadget_P9()),
        other => {
            set_status(status, fail(CgcStatus::InvalidArgument, format!("unknown gadget {other:?}")));
            return ptr::null_mut();
        }
    };
    boxed(art.map(|a| a.graph), status)
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cgc_graph_free(g: *mut CgcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cgc_graph_order(g: *const CgcGraph) -> usize {
    graph(g).map_or(0, Graph::order)
}

/// Edge count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cgc_graph_size(g: *const CgcGraph) -> usize {
    graph(g).map_or(0, Graph::size)
}

/// Writes the graph6 string with its NUL into `buf`. `needed` receives the
/// required capacity including the NUL; pass a null `buf` to query it.
///
/// # Safety
/// `buf` must be null or hold `cap` writable bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn cgc_graph_to_graph6(
    g: *const CgcGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> CgcStatus {
    let Some(g) = graph(g) else { return fail(CgcStatus::NullPointer, "graph is null") };
    let text = write_graph6(g);
    let text = text.trim_end();
    if !needed.is_null() {
        *needed = text.len() + 1;
    }
    if buf.is_null() || cap < text.len() + 1 {
        return fail(CgcStatus::BufferTooSmall, format!("need {} bytes", text.len() + 1));
    }
    ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
    *buf.add(text.len()) = 0;
    CgcStatus::Ok
}

type Param = fn(&Graph, &SearchOptions) -> cgc_core::Result<cgc_core::SearchResult>;

unsafe fn parameter(g: *const CgcGraph, budget_nodes: u64, budget_ms: u64, out: *mut u32, f: Param) -> CgcStatus {
    let Some(g) = graph(g) else { return fail(CgcStatus::NullPointer, "graph is null") };
    if out.is_null() {
        return fail(CgcStatus::NullPointer, "out is null");
    }
    match f(g, &options(budget_nodes, budget_ms)) {
        Ok(r) => {
            *out = r.value;
            match r.outcome {
                Outcome::Proved => CgcStatus::Ok,
                _ => fail(CgcStatus::Exhausted, "budget exhausted; value is a bound"),
            }
        }
        Err(e) => from_error(e),
    }
}

/// `χ(G)`. A zero budget means unlimited.
///
/// # Safety
/// `g` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cgc_chromatic_number(g: *const CgcGraph, budget_nodes: u64, budget_ms: u64, out: *mut u32) -> CgcStatus {
    parameter(g, budget_nodes, budget_ms, out, |g, o| Ok(chromatic_number_with(g, &o.budget)))
}

/// `χ_c(G)`. A zero budget means unlimited.
///
/// # Safety
/// `g` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cgc_connected_chromatic_number(
    g: *const CgcGraph,
    budget_nodes: u64,
    budget_ms: u64,
    out: *mut u32,
) -> CgcStatus {
    parameter(g, budget_nodes, budget_ms, out, connected_chromatic_number_with)
}

/// `Γ_c(G)`. A zero budget means unlimited.
///
/// # Safety
/// `g` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cgc_connected_grundy_number(
    g: *const CgcGraph,
    budget_nodes: u64,
    budget_ms: u64,
    out: *mut u32,
) -> CgcStatus {
    parameter(g, budget_nodes, budget_ms, out, connected_grundy_number_with)
}

/// Whether a connected greedy coloring with at most `k` colors exists,
/// starting at `seed_vertex` with `seed_color` when `seed_color > 0`. On
/// success `found` is 1 or 0. A zero budget means unlimited.
///
/// # Safety
/// `g` must be null or a live handle; `found` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cgc_exists_cgc(
    g: *const CgcGraph,
    k: u32,
    seed_vertex: usize,
    seed_color: u32,
    budget_nodes: u64,
    budget_ms: u64,
    found: *mut i32,
) -> CgcStatus {
    let Some(g) = graph(g) else { return fail(CgcStatus::NullPointer, "graph is null") };
    if found.is_null() {
        return fail(CgcStatus::NullPointer, "found is null");
    }
    let seed = (seed_color > 0).then_some((seed_vertex, seed_color));
    match exists_cgc_with(g, k, seed, &options(budget_nodes, budget_ms)) {
        Ok(r) => match r.verdict {
            Verdict::Present { .. } => {
                *found = 1;
                CgcStatus::Ok
            }
            Verdict::Absent => {
                *found = 0;
                CgcStatus::Ok
            }
            Verdict::Exhausted => fail(CgcStatus::Exhausted, "budget exhausted"),
        },
        Err(e) => from_error(e),
    }
}

//! C ABI for the 2-distance coloring toolkit.
//!
//! Graphs live behind an opaque [`TwodistGraph`] handle created by
//! [`twodist_graph_parse`] or [`twodist_graph_from_edges`] and released with
//! [`twodist_graph_free`]. Every fallible call returns a [`TwodistStatus`];
//! on failure [`twodist_last_error`] describes the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twodist::colorer::{constructive_color_with, exact_chi2, verify_coloring, Coloring};
use twodist::density::mad_exact;
use twodist::graph::parse_edge_list;
use twodist::{Error, Graph, Regime};

/// Opaque graph handle.
pub struct TwodistGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwodistStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    InvalidArgument = 3,
    InvalidColoring = 4,
    Irreducible = 5,
    BudgetExceeded = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwodistRegime {
    A = 0,
    B = 1,
    /// Inferred from mad and maximum degree.
    Auto = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: TwodistStatus, msg: impl Into<String>) -> TwodistStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> TwodistStatus {
    match e {
        Error::SelfLoop { .. } | Error::MalformedToken { .. } | Error::UndeclaredVertex { .. } => {
            TwodistStatus::ParseError
        }
        Error::Irreducible(_) | Error::ExtensionFailed { .. } | Error::InvalidExtension(_) => {
            TwodistStatus::Irreducible
        }
        Error::BudgetExceeded { .. } => TwodistStatus::BudgetExceeded,
        Error::ColorOutOfRange { .. } | Error::ColoringSizeMismatch { .. } | Error::Uncolored(_) => {
            TwodistStatus::InvalidColoring
        }
        _ => TwodistStatus::InvalidArgument,
    }
}

fn from_error(e: Error) -> TwodistStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning a panic into [`TwodistStatus::Panic`].
fn guard(f: impl FnOnce() -> TwodistStatus) -> TwodistStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TwodistStatus::Panic, "internal panic"),
    }
}

unsafe fn graph_ref<'a>(g: *const TwodistGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.0)
}

fn store(out: *mut *mut TwodistGraph, g: Graph) {
    unsafe { *out = Box::into_raw(Box::new(TwodistGraph(g))) };
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn twodist_status_message(status: TwodistStatus) -> *const c_char {
    let s: &'static CStr = match status {
        TwodistStatus::Ok => c"ok",
        TwodistStatus::NullPointer => c"null pointer argument",
        TwodistStatus::ParseError => c"malformed edge list",
        TwodistStatus::InvalidArgument => c"invalid argument",
        TwodistStatus::InvalidColoring => c"invalid coloring",
        TwodistStatus::Irreducible => c"irreducible graph",
        TwodistStatus::BudgetExceeded => c"search budget exceeded",
        TwodistStatus::BufferTooSmall => c"output buffer too small",
        TwodistStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn twodist_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a NUL-terminated edge list (`u v` lines, optional `n <count>`).
///
/// # Safety
/// `text` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn twodist_graph_parse(text: *const c_char, out: *mut *mut TwodistGraph) -> TwodistStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(TwodistStatus::NullPointer, "text and out must be non-null");
        }
        let bytes = unsafe { CStr::from_ptr(text) }.to_bytes();
        match parse_edge_list(bytes) {
            Ok(g) => {
                store(out, g);
                TwodistStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m` ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (may be null when `m` is 0)
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twodist_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut TwodistGraph,
) -> TwodistStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return fail(TwodistStatus::NullPointer, "edges and out must be non-null");
        }
        let flat = if m == 0 {
            &[][..]
        } else {
            unsafe { std::slice::from_raw_parts(edges, 2 * m) }
        };
        match Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))) {
            Ok(g) => {
                store(out, g);
                TwodistStatus::Ok
            }
            Err(e) => fail(TwodistStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn twodist_graph_free(g: *mut TwodistGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn twodist_graph_vertex_count(g: *const TwodistGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::n)
}

/// Edge count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn twodist_graph_edge_count(g: *const TwodistGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::edge_count)
}

/// Maximum degree, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn twodist_graph_max_degree(g: *const TwodistGraph) -> usize {
    unsafe { graph_ref(g) }.map_or(0, Graph::max_degree)
}

/// Exact maximum average degree as a reduced fraction `num/den`.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twodist_mad(g: *const TwodistGraph, num: *mut i64, den: *mut i64) -> TwodistStatus {
    guard(|| {
        let Some(g) = (unsafe { graph_ref(g) }) else {
            return fail(TwodistStatus::NullPointer, "graph is null");
        };
        if num.is_null() || den.is_null() {
            return fail(TwodistStatus::NullPointer, "num and den must be non-null");
        }
        let mad = mad_exact(g);
        unsafe {
            *num = mad.numer();
            *den = mad.denom();
        }
        TwodistStatus::Ok
    })
}

/// Length of a shortest cycle; writes 0 for a forest.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn twodist_girth(g: *const TwodistGraph, out: *mut usize) -> TwodistStatus {
    guard(|| {
        let Some(g) = (unsafe { graph_ref(g) }) else {
            return fail(TwodistStatus::NullPointer, "graph is null");
        };
        if out.is_null() {
            return fail(TwodistStatus::NullPointer, "out is null");
        }
        unsafe { *out = g.girth().unwrap_or(0) };
        TwodistStatus::Ok
    })
}

/// Constructive 2-distance coloring with `delta + 2` colors, where `delta`
/// is the declared maximum degree (0 means the graph's own). Writes one
/// color per vertex into `colors` (capacity `len`) and the palette size to
/// `k_out`.
///
/// # Safety
/// `g` must be a live handle, `colors` must hold `len` writable values and
/// `k_out` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn twodist_color(
    g: *const TwodistGraph,
    regime: TwodistRegime,
    delta: usize,
    colors: *mut usize,
    len: usize,
    k_out: *mut usize,
) -> TwodistStatus {
    guard(|| {
        let Some(g) = (unsafe { graph_ref(g) }) else {
            return fail(TwodistStatus::NullPointer, "graph is null");
        };
        if colors.is_null() && g.n() > 0 {
            return fail(TwodistStatus::NullPointer, "colors is null");
        }
        if len < g.n() {
            return fail(
                TwodistStatus::BufferTooSmall,
                format!("colors holds {len} values, graph has {} vertices", g.n()),
            );
        }
        let regime = match regime {
            TwodistRegime::A => Regime::A,
            TwodistRegime::B => Regime::B,
            TwodistRegime::Auto => match Regime::infer(mad_exact(g), g.max_degree()) {
                Some(r) => r,
                None => return fail(TwodistStatus::InvalidArgument, "no regime applies to this graph"),
            },
        };
        let d = if delta == 0 { g.max_degree() } else { delta };
        let run = match constructive_color_with(g, regime, d) {
            Ok(run) => run,
            Err(e) => return from_error(e),
        };
        let total = run.coloring.total().expect("constructive colorings are total");
        if !total.is_empty() {
            unsafe { std::slice::from_raw_parts_mut(colors, total.len()) }.copy_from_slice(&total);
        }
        if !k_out.is_null() {
            unsafe { *k_out = run.coloring.k };
        }
        TwodistStatus::Ok
    })
}

/// Checks `len` colors (one per vertex, each below `k`). Writes the number
/// of conflicting pairs to `violations`; returns `InvalidColoring` when it is
/// positive or the coloring is malformed.
///
/// # Safety
/// `g` must be a live handle, `colors` must hold `len` readable values and
/// `violations` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn twodist_verify(
    g: *const TwodistGraph,
    colors: *const usize,
    len: usize,
    k: usize,
    violations: *mut usize,
) -> TwodistStatus {
    guard(|| {
        let Some(g) = (unsafe { graph_ref(g) }) else {
            return fail(TwodistStatus::NullPointer, "graph is null");
        };
        if colors.is_null() && len > 0 {
            return fail(TwodistStatus::NullPointer, "colors is null");
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            unsafe { std::slice::from_raw_parts(colors, len) }
        };
        let coloring = Coloring::from_total(k, slice.to_vec());
        match verify_coloring(g, &coloring) {
            Ok(found) => {
                if !violations.is_null() {
                    unsafe { *violations = found.len() };
                }
                match found.first() {
                    None => TwodistStatus::Ok,
                    Some(v) => fail(
                        TwodistStatus::InvalidColoring,
                        format!(
                            "{} conflicts; vertices {} and {} share color {}",
                            found.len(),
                            v.u,
                            v.v,
                            v.color
                        ),
                    ),
                }
            }
            Err(e) => from_error(e),
        }
    })
}

/// Exact chi2 by branch and bound within `budget` search nodes. On
/// `BudgetExceeded`, `lower` and `upper` receive the bounds reached.
///
/// # Safety
/// `g` must be a live handle; the outputs must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn twodist_exact_chi2(
    g: *const TwodistGraph,
    budget: u64,
    chi2: *mut usize,
    lower: *mut usize,
    upper: *mut usize,
) -> TwodistStatus {
    guard(|| {
        let Some(g) = (unsafe { graph_ref(g) }) else {
            return fail(TwodistStatus::NullPointer, "graph is null");
        };
        let put = |p: *mut usize, v: usize| {
            if !p.is_null() {
                unsafe { *p = v };
            }
        };
        match exact_chi2(g, budget) {
            Ok((value, _)) => {
                put(chi2, value);
                put(lower, value);
                put(upper, value);
                TwodistStatus::Ok
            }
            Err(e) => {
                if let Error::BudgetExceeded {
                    lower: lo, upper: hi, ..
                } = e
                {
                    put(lower, lo);
                    put(upper, hi);
                }
                from_error(e)
            }
        }
    })
}

//! C ABI over the qmax toolkit.
//!
//! Graphs are opaque heap handles created by the constructors here and
//! released with [`qmax_graph_free`]. Every function returns a
//! [`QmaxStatus`]; results go to out-pointers, which are written only on
//! `QMAX_STATUS_OK`. Panics are caught at the boundary and surface as
//! `QMAX_STATUS_INTERNAL_ERROR`. Handles are immutable after construction
//! and may be shared across threads.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qmax::enumeration::{catalan_table, enumerate_classes};
use qmax::families::{self, FamilySpec, FamilyTag};
use qmax::graph::{CycleGraph, GeneralGraph, Graph};
use qmax::spectral::{full_spectrum, qindex};
use qmax::verify::check_theorem;
use qmax::Error;

/// Result of every call in this ABI.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum QmaxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A parameter was out of range for the requested operation.
    InvalidArgument = 2,
    /// The graph6 input could not be parsed.
    ParseError = 3,
    /// The graph is disconnected, so no Perron eigenvector exists.
    Disconnected = 4,
    /// The eigensolver hit its iteration cap.
    NoConvergence = 5,
    /// The caller's buffer is too small for the result.
    BufferTooSmall = 6,
    /// An unexpected internal failure (a caught panic).
    InternalError = 7,
}

/// Family selector for [`qmax_graph_family`].
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum QmaxFamily {
    Fan = 0,
    NearFan = 1,
    D1 = 2,
    D2 = 3,
    D3 = 4,
    Star = 5,
}

enum Inner {
    Cycle(CycleGraph),
    General(GeneralGraph),
}

/// Opaque graph handle.
pub struct QmaxGraph {
    inner: Inner,
}

impl QmaxGraph {
    fn as_graph(&self) -> &dyn Graph {
        match &self.inner {
            Inner::Cycle(g) => g,
            Inner::General(g) => g,
        }
    }
}

fn status_of(err: &Error) -> QmaxStatus {
    match err {
        Error::Graph6(_) => QmaxStatus::ParseError,
        Error::Disconnected => QmaxStatus::Disconnected,
        Error::NoConvergence { .. } => QmaxStatus::NoConvergence,
        _ => QmaxStatus::InvalidArgument,
    }
}

fn guarded(f: impl FnOnce() -> QmaxStatus) -> QmaxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => QmaxStatus::InternalError,
    }
}

/// Parses one short-form graph6 line into a new graph handle.
///
/// # Safety
/// `line` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qmax_graph_from_graph6(
    line: *const c_char,
    out: *mut *mut QmaxGraph,
) -> QmaxStatus {
    if line.is_null() || out.is_null() {
        return QmaxStatus::NullArgument;
    }
    let text = match CStr::from_ptr(line).to_str() {
        Ok(t) => t,
        Err(_) => return QmaxStatus::ParseError,
    };
    guarded(|| match qmax::graph6::decode(text) {
        Ok(g) => {
            out.write(Box::into_raw(Box::new(QmaxGraph {
                inner: Inner::General(g),
            })));
            QmaxStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Builds a named family instance. `k` is the apex parameter (ignored for
/// fan/star), `j` the gap parameter (D3 only).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qmax_graph_family(
    family: QmaxFamily,
    n: u32,
    k: u32,
    j: u32,
    out: *mut *mut QmaxGraph,
) -> QmaxStatus {
    if out.is_null() {
        return QmaxStatus::NullArgument;
    }
    let tag = match family {
        QmaxFamily::Fan => FamilyTag::Fan,
        QmaxFamily::NearFan => FamilyTag::NearFan,
        QmaxFamily::D1 => FamilyTag::D1,
        QmaxFamily::D2 => FamilyTag::D2,
        QmaxFamily::D3 => FamilyTag::D3,
        QmaxFamily::Star => FamilyTag::Star,
    };
    let spec = FamilySpec {
        tag,
        n: n as usize,
        k: Some(k as usize),
        j: Some(j as usize),
    };
    guarded(|| match spec.build() {
        Ok(families::FamilyGraph::Cycle(g)) => {
            out.write(Box::into_raw(Box::new(QmaxGraph {
                inner: Inner::Cycle(g),
            })));
            QmaxStatus::Ok
        }
        Ok(families::FamilyGraph::General(g)) => {
            out.write(Box::into_raw(Box::new(QmaxGraph {
                inner: Inner::General(g),
            })));
            QmaxStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `g` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qmax_graph_free(g: *mut QmaxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qmax_graph_order(g: *const QmaxGraph, out: *mut u32) -> QmaxStatus {
    if g.is_null() || out.is_null() {
        return QmaxStatus::NullArgument;
    }
    out.write((*g).as_graph().order() as u32);
    QmaxStatus::Ok
}

/// Number of edges.
///
/// # Safety
/// `g` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qmax_graph_size(g: *const QmaxGraph, out: *mut u32) -> QmaxStatus {
    if g.is_null() || out.is_null() {
        return QmaxStatus::NullArgument;
    }
    out.write((*g).as_graph().size() as u32);
    QmaxStatus::Ok
}

/// Maximum vertex degree.
///
/// # Safety
/// `g` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qmax_graph_max_degree(g: *const QmaxGraph, out: *mut u32) -> QmaxStatus {
    if g.is_null() || out.is_null() {
        return QmaxStatus::NullArgument;
    }
    out.write((*g).as_graph().max_degree() as u32);
    QmaxStatus::Ok
}

/// Writes the short-form graph6 encoding (NUL-terminated) into `buf`.
///
/// # Safety
/// `buf` must point to at least `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn qmax_graph_to_graph6(
    g: *const QmaxGraph,
    buf: *mut c_char,
    cap: usize,
) -> QmaxStatus {
    if g.is_null() || buf.is_null() {
        return QmaxStatus::NullArgument;
    }
    guarded(|| {
        let line = match qmax::graph6::encode((*g).as_graph()) {
            Ok(l) => l,
            Err(e) => return status_of(&e),
        };
        let bytes = line.as_bytes();
        if bytes.len() + 1 > cap {
            return QmaxStatus::BufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
        buf.add(bytes.len()).write(0);
        QmaxStatus::Ok
    })
}

/// Q-index (largest signless-Laplacian eigenvalue) by power iteration.
///
/// # Safety
/// `g` and `out_q` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qmax_qindex(
    g: *const QmaxGraph,
    tol: f64,
    out_q: *mut f64,
) -> QmaxStatus {
    if g.is_null() || out_q.is_null() {
        return QmaxStatus::NullArgument;
    }
    guarded(|| match qindex((*g).as_graph(), tol) {
        Ok(res) => {
            out_q.write(res.q);
            QmaxStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Q-index together with the unit Perron eigenvector; `vec` must hold
/// exactly `order` doubles.
///
/// # Safety
/// `g`, `out_q` and `vec` must be valid; `vec` must have space for `len`
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn qmax_perron(
    g: *const QmaxGraph,
    tol: f64,
    out_q: *mut f64,
    vec: *mut f64,
    len: usize,
) -> QmaxStatus {
    if g.is_null() || out_q.is_null() || vec.is_null() {
        return QmaxStatus::NullArgument;
    }
    guarded(|| {
        let graph = (*g).as_graph();
        if len != graph.order() {
            return QmaxStatus::BufferTooSmall;
        }
        match qindex(graph, tol) {
            Ok(res) => {
                out_q.write(res.q);
                std::ptr::copy_nonoverlapping(res.vector.as_ptr(), vec, res.vector.len());
                QmaxStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// All signless-Laplacian eigenvalues in descending order (cyclic Jacobi);
/// `out` must hold exactly `order` doubles.
///
/// # Safety
/// `g` and `out` must be valid; `out` must have space for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn qmax_spectrum(
    g: *const QmaxGraph,
    out: *mut f64,
    len: usize,
) -> QmaxStatus {
    if g.is_null() || out.is_null() {
        return QmaxStatus::NullArgument;
    }
    guarded(|| {
        let graph = (*g).as_graph();
        if len != graph.order() {
            return QmaxStatus::BufferTooSmall;
        }
        let eigs = full_spectrum(graph);
        std::ptr::copy_nonoverlapping(eigs.as_ptr(), out, eigs.len());
        QmaxStatus::Ok
    })
}

/// Number of labeled triangulations of the n-gon (the Catalan number
/// C_{n-2}); fails with `QMAX_STATUS_INVALID_ARGUMENT` when it does not fit
/// in 64 bits.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qmax_labeled_count(n: u32, out: *mut u64) -> QmaxStatus {
    if out.is_null() {
        return QmaxStatus::NullArgument;
    }
    guarded(|| {
        if n < 3 {
            return QmaxStatus::InvalidArgument;
        }
        match catalan_table(n as usize - 2) {
            Ok(table) => {
                let count = table[n as usize - 2];
                match u64::try_from(count) {
                    Ok(c) => {
                        out.write(c);
                        QmaxStatus::Ok
                    }
                    Err(_) => QmaxStatus::InvalidArgument,
                }
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Number of isomorphism classes of maximal outer-planar graphs of order n
/// (exhaustive enumeration; keep n small).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qmax_class_count(n: u32, out: *mut u64) -> QmaxStatus {
    if out.is_null() {
        return QmaxStatus::NullArgument;
    }
    guarded(|| match enumerate_classes(n as usize) {
        Ok(classes) => {
            out.write(classes.len() as u64);
            QmaxStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Runs the exhaustive extremality check at order n; writes 1 when the fan
/// is the unique Q-index maximizer, 0 otherwise.
///
/// # Safety
/// `out_holds` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qmax_theorem_check(n: u32, out_holds: *mut u8) -> QmaxStatus {
    if out_holds.is_null() {
        return QmaxStatus::NullArgument;
    }
    guarded(|| match check_theorem(n as usize) {
        Ok(report) => {
            out_holds.write(u8::from(report.passed()));
            QmaxStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qmax_version() -> *const c_char {
    static VERSION: std::sync::OnceLock<CString> = std::sync::OnceLock::new();
    VERSION
        .get_or_init(|| CString::new(env!("CARGO_PKG_VERSION")).unwrap())
        .as_ptr()
}

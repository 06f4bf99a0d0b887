//! C ABI over `brooks-color`.
//!
//! Objects cross the boundary as opaque handles created by `bc_*` functions
//! and released with the matching `*_free`. Every fallible call returns a
//! [`BcStatus`]; on failure a human-readable message is available from
//! [`bc_last_error_message`] on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use brooks_color::brooks::brooks_list_color;
use brooks_color::chordal::{chordality_certificate, ChordalityCertificate};
use brooks_color::format::{emit_instance, parse_instance};
use brooks_color::oracle::{brute_force_list_color, verify_coloring, BruteForceOutcome};
use brooks_color::{Coloring, Graph, ListAssignment, SolveError};

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    MissingList = 5,
    HypothesisViolation = 6,
    InternalError = 7,
    Defect = 8,
    Unsatisfiable = 9,
    LimitExceeded = 10,
    OutOfRange = 11,
    Panic = 12,
}

/// A graph with an optional list assignment.
pub struct BcInstance {
    graph: Graph,
    lists: Option<ListAssignment>,
}

/// A chordality verdict with its witness sequence.
pub struct BcCertificate {
    chordal: bool,
    vertices: Vec<u32>,
}

/// A vertex coloring, entries in ascending vertex order.
pub struct BcColoring {
    entries: Vec<(u32, i64)>,
}

impl BcColoring {
    fn from_coloring(c: &Coloring) -> Self {
        Self {
            entries: c.iter().collect(),
        }
    }

    fn to_coloring(&self) -> Coloring {
        self.entries.iter().copied().collect()
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: BcStatus, message: impl Into<String>) -> BcStatus {
    set_error(message);
    status
}

/// Runs `body`, converting panics into [`BcStatus::Panic`].
fn guard(body: impl FnOnce() -> BcStatus) -> BcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(BcStatus::Panic, "panic inside brooks-color"),
    }
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn lists_of(instance: &BcInstance) -> Result<&ListAssignment, BcStatus> {
    instance
        .lists
        .as_ref()
        .ok_or_else(|| fail(BcStatus::MissingList, "instance has no lists"))
}

/// Message for the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next `bc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn bc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses instance text (DIMACS edge format with optional `l` list lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_parse(text: *const c_char, out: *mut *mut BcInstance) -> BcStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(BcStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(BcStatus::InvalidUtf8, "instance text is not UTF-8");
        };
        match parse_instance(text) {
            Ok(inst) => {
                write_out(
                    out,
                    BcInstance {
                        graph: inst.graph,
                        lists: inst.lists,
                    },
                );
                BcStatus::Ok
            }
            Err(e) => fail(BcStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds an instance from `vertex_count` ids and `edge_count` pairs stored
/// flat in `edges` (`2 * edge_count` entries).
///
/// # Safety
/// The arrays must hold the stated number of elements (they may be NULL
/// when the count is zero); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_from_edges(
    vertices: *const u32,
    vertex_count: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut BcInstance,
) -> BcStatus {
    guard(|| {
        if out.is_null()
            || (vertices.is_null() && vertex_count > 0)
            || (edges.is_null() && edge_count > 0)
        {
            return fail(BcStatus::NullPointer, "null argument");
        }
        let ids: &[u32] = if vertex_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(vertices, vertex_count)
        };
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        match Graph::new(ids.iter().copied(), pairs) {
            Ok(graph) => {
                write_out(out, BcInstance { graph, lists: None });
                BcStatus::Ok
            }
            Err(e) => fail(BcStatus::InvalidGraph, e.to_string()),
        }
    })
}

/// # Safety
/// `instance` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_free(instance: *mut BcInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// # Safety
/// `instance` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_vertex_count(instance: *const BcInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.graph.vertex_count())
}

/// # Safety
/// `instance` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_edge_count(instance: *const BcInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.graph.edge_count())
}

/// # Safety
/// `instance` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_max_degree(instance: *const BcInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.graph.max_degree())
}

/// Sets the list of vertex `v`.
///
/// # Safety
/// `instance` must be a live handle; `colors` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_set_list(
    instance: *mut BcInstance,
    vertex: u32,
    colors: *const i64,
    len: usize,
) -> BcStatus {
    guard(|| {
        let Some(inst) = instance.as_mut() else {
            return fail(BcStatus::NullPointer, "null instance");
        };
        if colors.is_null() && len > 0 {
            return fail(BcStatus::NullPointer, "null colors");
        }
        if !inst.graph.contains(vertex) {
            return fail(BcStatus::OutOfRange, format!("unknown vertex {vertex}"));
        }
        let values: &[i64] = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(colors, len)
        };
        inst.lists
            .get_or_insert_with(ListAssignment::new)
            .set(vertex, values.iter().copied());
        BcStatus::Ok
    })
}

/// Replaces all lists with `{1, ..., k}`.
///
/// # Safety
/// `instance` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_set_uniform(instance: *mut BcInstance, k: usize) -> BcStatus {
    guard(|| {
        let Some(inst) = instance.as_mut() else {
            return fail(BcStatus::NullPointer, "null instance");
        };
        inst.lists = Some(ListAssignment::uniform(&inst.graph, k));
        BcStatus::Ok
    })
}

/// Serializes the instance; release the string with [`bc_string_free`].
///
/// # Safety
/// `instance` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_emit(instance: *const BcInstance, out: *mut *mut c_char) -> BcStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return fail(BcStatus::NullPointer, "null argument");
        };
        match emit_instance(&inst.graph, inst.lists.as_ref(), &[]) {
            Ok(text) => {
                *out = CString::new(text).expect("no NUL in emitted text").into_raw();
                BcStatus::Ok
            }
            Err(e) => fail(BcStatus::InvalidGraph, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes a chordality certificate.
///
/// # Safety
/// `instance` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_chordality(instance: *const BcInstance, out: *mut *mut BcCertificate) -> BcStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return fail(BcStatus::NullPointer, "null argument");
        };
        match chordality_certificate(&inst.graph) {
            Ok(ChordalityCertificate::Peo(peo)) => write_out(
                out,
                BcCertificate {
                    chordal: true,
                    vertices: peo.order().to_vec(),
                },
            ),
            Ok(ChordalityCertificate::Hole(hole)) => write_out(
                out,
                BcCertificate {
                    chordal: false,
                    vertices: hole.vertices().to_vec(),
                },
            ),
            Err(e) => return fail(BcStatus::InternalError, e.to_string()),
        }
        BcStatus::Ok
    })
}

/// True for an elimination order, false for a hole.
///
/// # Safety
/// `certificate` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_certificate_is_chordal(certificate: *const BcCertificate) -> bool {
    certificate.as_ref().is_some_and(|c| c.chordal)
}

/// # Safety
/// `certificate` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_certificate_len(certificate: *const BcCertificate) -> usize {
    certificate.as_ref().map_or(0, |c| c.vertices.len())
}

/// Copies up to `capacity` witness vertices into `buffer` and returns the
/// full length.
///
/// # Safety
/// `certificate` must be a live handle; `buffer` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn bc_certificate_vertices(
    certificate: *const BcCertificate,
    buffer: *mut u32,
    capacity: usize,
) -> usize {
    let Some(cert) = certificate.as_ref() else { return 0 };
    if !buffer.is_null() {
        let n = cert.vertices.len().min(capacity);
        ptr::copy_nonoverlapping(cert.vertices.as_ptr(), buffer, n);
    }
    cert.vertices.len()
}

/// # Safety
/// `certificate` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_certificate_free(certificate: *mut BcCertificate) {
    if !certificate.is_null() {
        drop(Box::from_raw(certificate));
    }
}

/// Colors the instance from its lists.
///
/// # Safety
/// `instance` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_color(instance: *const BcInstance, out: *mut *mut BcColoring) -> BcStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return fail(BcStatus::NullPointer, "null argument");
        };
        let lists = match lists_of(inst) {
            Ok(l) => l,
            Err(status) => return status,
        };
        match brooks_list_color(&inst.graph, lists) {
            Ok(coloring) => {
                write_out(out, BcColoring::from_coloring(&coloring));
                BcStatus::Ok
            }
            Err(SolveError::HypothesisViolation(report)) => {
                fail(BcStatus::HypothesisViolation, report.to_string())
            }
            Err(SolveError::MissingList(v)) => fail(BcStatus::MissingList, format!("vertex {v} has no list")),
            Err(e) => fail(BcStatus::InternalError, e.to_string()),
        }
    })
}

/// Exhaustive search with at most `node_limit` tentative assignments.
///
/// # Safety
/// `instance` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_oracle(
    instance: *const BcInstance,
    node_limit: u64,
    out: *mut *mut BcColoring,
) -> BcStatus {
    guard(|| {
        let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
            return fail(BcStatus::NullPointer, "null argument");
        };
        let lists = match lists_of(inst) {
            Ok(l) => l,
            Err(status) => return status,
        };
        match brute_force_list_color(&inst.graph, lists, node_limit) {
            BruteForceOutcome::Colored(c) => {
                write_out(out, BcColoring::from_coloring(&c));
                BcStatus::Ok
            }
            BruteForceOutcome::Unsatisfiable => fail(BcStatus::Unsatisfiable, "no list coloring exists"),
            BruteForceOutcome::LimitExceeded => fail(BcStatus::LimitExceeded, "node limit exceeded"),
        }
    })
}

/// Creates a coloring from parallel arrays.
///
/// # Safety
/// Both arrays must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_from_arrays(
    vertices: *const u32,
    colors: *const i64,
    len: usize,
    out: *mut *mut BcColoring,
) -> BcStatus {
    guard(|| {
        if out.is_null() || (len > 0 && (vertices.is_null() || colors.is_null())) {
            return fail(BcStatus::NullPointer, "null argument");
        }
        let mut coloring = Coloring::new();
        for i in 0..len {
            coloring.insert(*vertices.add(i), *colors.add(i));
        }
        write_out(out, BcColoring::from_coloring(&coloring));
        BcStatus::Ok
    })
}

/// # Safety
/// `coloring` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_len(coloring: *const BcColoring) -> usize {
    coloring.as_ref().map_or(0, |c| c.entries.len())
}

/// Reads entry `index` (ascending vertex order).
///
/// # Safety
/// `coloring` must be a live handle; `vertex` and `color` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_entry(
    coloring: *const BcColoring,
    index: usize,
    vertex: *mut u32,
    color: *mut i64,
) -> BcStatus {
    guard(|| {
        let Some(c) = coloring.as_ref() else {
            return fail(BcStatus::NullPointer, "null coloring");
        };
        if vertex.is_null() || color.is_null() {
            return fail(BcStatus::NullPointer, "null output");
        }
        match c.entries.get(index) {
            Some(&(v, col)) => {
                *vertex = v;
                *color = col;
                BcStatus::Ok
            }
            None => fail(BcStatus::OutOfRange, format!("index {index} out of range")),
        }
    })
}

/// # Safety
/// `coloring` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_coloring_free(coloring: *mut BcColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}

/// Checks properness and list membership.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn bc_verify(instance: *const BcInstance, coloring: *const BcColoring) -> BcStatus {
    guard(|| {
        let (Some(inst), Some(col)) = (instance.as_ref(), coloring.as_ref()) else {
            return fail(BcStatus::NullPointer, "null argument");
        };
        let lists = match lists_of(inst) {
            Ok(l) => l,
            Err(status) => return status,
        };
        match verify_coloring(&inst.graph, lists, &col.to_coloring()) {
            Ok(()) => BcStatus::Ok,
            Err(defect) => fail(BcStatus::Defect, defect.to_string()),
        }
    })
}

//! C ABI over `qatlas`.
//!
//! Every fallible function returns a [`QatlasStatus`]; on failure the
//! message is available from [`qatlas_last_error_message`] on the same
//! thread. Handles are opaque and must be released with their `_free`
//! function. Strings returned through `char **` are owned by the caller and
//! released with [`qatlas_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use qatlas::cohomology::{self, DataSet, IntPolynomial};
use qatlas::sp6::{self, RealizedAction, Sp6Group};
use qatlas::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QatlasStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Precondition = 4,
    Budget = 5,
    Invariant = 6,
    Load = 7,
    UnknownStructure = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// An Sp(6,2) closure.
pub struct QatlasGroup {
    group: Sp6Group,
}

/// A validated set of cohomology tables.
pub struct QatlasTables {
    data: DataSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: QatlasStatus, msg: impl Into<String>) -> QatlasStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> QatlasStatus {
    let status = match &e {
        Error::Dimension(_) | Error::Domain(_) => QatlasStatus::Domain,
        Error::Precondition(_) => QatlasStatus::Precondition,
        Error::Budget { .. } => QatlasStatus::Budget,
        Error::Invariant(_) => QatlasStatus::Invariant,
        Error::Load { .. } => QatlasStatus::Load,
        Error::UnknownStructure(_) => QatlasStatus::UnknownStructure,
    };
    fail(status, e.to_string())
}

/// Runs `f`, clearing the last error first and turning panics into
/// [`QatlasStatus::Panic`].
fn guard(f: impl FnOnce() -> QatlasStatus) -> QatlasStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(QatlasStatus::Panic, "panic inside qatlas"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, QatlasStatus> {
    if s.is_null() {
        return Err(fail(QatlasStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(QatlasStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(QatlasStatus::NullPointer, concat!(stringify!($p), " is null"));
        })+
    };
}

/// Message for the last failure on this thread, or null. Valid until the
/// next qatlas call on this thread.
#[no_mangle]
pub extern "C" fn qatlas_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qatlas_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qatlas_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn count_of(kind: &str) -> Option<u64> {
    use qatlas::{structures as st, study};
    Some(match kind {
        "bitangent" => st::odd_thetas().len(),
        "octad" => st::even_thetas().len(),
        "steiner" => st::steiner_complexes().len(),
        "gopel" => st::gopel_subsets().len(),
        "syzygetic" => st::syzygetic_tetrads().len(),
        "azygetic" => st::azygetic_triads().len(),
        "aronhold" => st::aronhold_heptads().len(),
        "ennead" => study::enneads().len(),
        "quadric_points" => study::quadric_points().len(),
        _ => return None,
    } as u64)
}

/// Number of structures of `kind`, computed by enumeration.
///
/// # Safety
/// `kind` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_count(kind: *const c_char, out: *mut u64) -> QatlasStatus {
    guard(|| {
        non_null!(out);
        let kind = try_ffi!(read_str(kind, "kind"));
        match count_of(kind) {
            Some(n) => {
                *out = n;
                QatlasStatus::Ok
            }
            None => fail(QatlasStatus::UnknownStructure, format!("unknown kind `{kind}`")),
        }
    })
}

/// Enumerates `kind` as a JSON array of sorted code tuples. The result is
/// written to `*out` and must be released with [`qatlas_string_free`].
///
/// # Safety
/// `kind` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_enumerate_json(kind: *const c_char, out: *mut *mut c_char) -> QatlasStatus {
    guard(|| {
        non_null!(out);
        *out = ptr::null_mut();
        let kind = try_ffi!(read_str(kind, "kind"));
        let text = match qatlas::cli::enumerate_rendered(kind, qatlas::cli::Format::Json) {
            Ok(t) => t,
            Err(e) => return from_error(e),
        };
        *out = CString::new(text).expect("JSON has no nul").into_raw();
        QatlasStatus::Ok
    })
}

/// Builds Sp(6,2) by closure, failing with [`QatlasStatus::Budget`] if more
/// than `budget` elements appear.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_group_new(budget: usize, out: *mut *mut QatlasGroup) -> QatlasStatus {
    guard(|| {
        non_null!(out);
        *out = ptr::null_mut();
        match sp6::group_closure(budget) {
            Ok(group) => {
                *out = Box::into_raw(Box::new(QatlasGroup { group }));
                QatlasStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `group` must come from [`qatlas_group_new`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_group_order(group: *const QatlasGroup, out: *mut u64) -> QatlasStatus {
    guard(|| {
        non_null!(group, out);
        *out = (*group).group.order();
        QatlasStatus::Ok
    })
}

/// Null is ignored.
///
/// # Safety
/// `group` must come from [`qatlas_group_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qatlas_group_free(group: *mut QatlasGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

fn realized(structure: &str) -> Option<RealizedAction> {
    RealizedAction::ALL.into_iter().find(|a| a.structure() == structure)
}

/// Orbit size and stabilizer order of a realized structure (`bitangent`,
/// `octad`, `steiner`, `gopel`, `aronhold`, `syzygetic`, `azygetic`).
///
/// # Safety
/// `group` must come from [`qatlas_group_new`]; `structure` must be a
/// nul-terminated string; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_orbit(
    group: *const QatlasGroup,
    structure: *const c_char,
    orbit_size: *mut u64,
    stabilizer_order: *mut u64,
) -> QatlasStatus {
    guard(|| {
        non_null!(group, orbit_size, stabilizer_order);
        let name = try_ffi!(read_str(structure, "structure"));
        let Some(action) = realized(name) else {
            return fail(QatlasStatus::UnknownStructure, format!("no group action for `{name}`"));
        };
        let rep = action.representative();
        match sp6::orbit_and_stabilizer_order(action.kind(), &rep, (*group).group.order()) {
            Ok((size, stab)) => {
                *orbit_size = size;
                *stabilizer_order = stab;
                QatlasStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of orbits on ordered pairs for a realized structure.
///
/// # Safety
/// `structure` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_pair_rank(structure: *const c_char, out: *mut u64) -> QatlasStatus {
    guard(|| {
        non_null!(out);
        let name = try_ffi!(read_str(structure, "structure"));
        let Some(action) = realized(name) else {
            return fail(QatlasStatus::UnknownStructure, format!("no group action for `{name}`"));
        };
        match sp6::pair_rank(&action.representative()) {
            Ok(r) => {
                *out = r as u64;
                QatlasStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Loads the cohomology tables. With `data_dir` null the built-in copies
/// are used; otherwise documents present in the directory replace them.
///
/// # Safety
/// `data_dir` must be null or a nul-terminated string; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_tables_load(data_dir: *const c_char, out: *mut *mut QatlasTables) -> QatlasStatus {
    guard(|| {
        non_null!(out);
        *out = ptr::null_mut();
        let loaded = if data_dir.is_null() {
            DataSet::embedded()
        } else {
            DataSet::from_dir(Path::new(try_ffi!(read_str(data_dir, "data_dir"))))
        };
        match loaded {
            Ok(data) => {
                *out = Box::into_raw(Box::new(QatlasTables { data }));
                QatlasStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Null is ignored.
///
/// # Safety
/// `tables` must come from [`qatlas_tables_load`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qatlas_tables_free(tables: *mut QatlasTables) {
    if !tables.is_null() {
        drop(Box::from_raw(tables));
    }
}

unsafe fn write_coefficients(p: &IntPolynomial, coeffs: *mut i64, capacity: usize, len: *mut usize) -> QatlasStatus {
    let c = p.coefficients();
    *len = c.len();
    if c.len() > capacity {
        return fail(
            QatlasStatus::BufferTooSmall,
            format!("{} coefficients, buffer holds {capacity}", c.len()),
        );
    }
    if !c.is_empty() {
        non_null!(coeffs);
        ptr::copy_nonoverlapping(c.as_ptr(), coeffs, c.len());
    }
    QatlasStatus::Ok
}

/// Poincaré polynomial of a structure quotient, coefficients in ascending
/// degree. `*len` receives the coefficient count even when the buffer is
/// too small.
///
/// # Safety
/// `tables` must come from [`qatlas_tables_load`]; `structure` must be a
/// nul-terminated string; `coeffs` must hold `capacity` values; `len` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_poincare(
    tables: *const QatlasTables,
    structure: *const c_char,
    coeffs: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> QatlasStatus {
    guard(|| {
        non_null!(tables, len);
        let name = try_ffi!(read_str(structure, "structure"));
        match cohomology::poincare(&(*tables).data, name) {
            Ok(p) => write_coefficients(&p, coeffs, capacity, len),
            Err(e) => from_error(e),
        }
    })
}

/// Point-count polynomial in `q`, coefficients in ascending degree.
///
/// # Safety
/// As for [`qatlas_poincare`].
#[no_mangle]
pub unsafe extern "C" fn qatlas_point_count(
    tables: *const QatlasTables,
    structure: *const c_char,
    coeffs: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> QatlasStatus {
    guard(|| {
        non_null!(tables, len);
        let name = try_ffi!(read_str(structure, "structure"));
        match cohomology::point_count_for(&(*tables).data, name) {
            Ok(p) => write_coefficients(&p, coeffs, capacity, len),
            Err(e) => from_error(e),
        }
    })
}

/// Number of audit findings, and how many of them are documented ones.
///
/// # Safety
/// `tables` must come from [`qatlas_tables_load`]; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_audit(tables: *const QatlasTables, findings: *mut u64, known: *mut u64) -> QatlasStatus {
    guard(|| {
        non_null!(tables, findings, known);
        match cohomology::audit(&(*tables).data) {
            Ok(r) => {
                *findings = r.findings.len() as u64;
                *known = r.findings.iter().filter(|f| f.known).count() as u64;
                QatlasStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// `e_x · e_y = sign · e_label` for labels `0..8`.
///
/// # Safety
/// `sign` and `label` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qatlas_octonion_multiply(x: u8, y: u8, sign: *mut i8, label: *mut u8) -> QatlasStatus {
    guard(|| {
        non_null!(sign, label);
        if x > 7 || y > 7 {
            return fail(QatlasStatus::InvalidArgument, format!("labels must be below 8, got {x} and {y}"));
        }
        let p = qatlas::octonions::multiply(x, y);
        *sign = p.sign;
        *label = p.label;
        QatlasStatus::Ok
    })
}

//! C ABI over the `toricube` library.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json` or
//! by an operation, and released with the matching `*_free`. Every fallible
//! function returns a [`TcStatus`]; on failure a description is available
//! from [`tc_last_error_message`] on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and released
//! with [`tc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toricube::cli::{cw_json, parse_problem, poset_dot, Problem};
use toricube::cw::{build_cw, CWComplex};
use toricube::toric::{
    cubify, implicitize, is_cube, parametrize, BinomialSystem, MonomialMap, ToricCube,
};
use toricube::ToricError;

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Problem JSON did not match the schema; the message names the field.
    Malformed = 3,
    /// Arguments were well formed but inconsistent, e.g. mismatched dimensions.
    InvalidInput = 4,
    /// The ambient dimension or an exponent exceeds a supported bound.
    LimitExceeded = 5,
    /// An internal invariant failed. Please report it.
    ContractViolation = 6,
    /// The caller's buffer is too short; the required length was written.
    BufferTooSmall = 7,
    /// A panic was caught at the boundary.
    Panic = 8,
}

/// A binomial system `x^u <= x^v` over `[0,1]^n`.
pub struct TcSystem(BinomialSystem);

/// A monomial map `[0,1]^d -> [0,1]^n`.
pub struct TcMap(MonomialMap);

/// A CW decomposition of a toric cube.
pub struct TcComplex(CWComplex);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure {
    status: TcStatus,
    message: String,
}

impl Failure {
    fn new(status: TcStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<ToricError> for Failure {
    fn from(e: ToricError) -> Self {
        let status = match e {
            ToricError::Malformed { .. } => TcStatus::Malformed,
            ToricError::SupportCapExceeded { .. } | ToricError::ExponentTooLarge(_) => {
                TcStatus::LimitExceeded
            }
            ToricError::ContractViolation(_) => TcStatus::ContractViolation,
            _ => TcStatus::InvalidInput,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_last_error(message: &str) {
    // Interior NULs cannot occur in our messages, but never fail here.
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TcStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let what = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        Err(Failure::new(TcStatus::Panic, format!("panic: {what}")))
    });
    match outcome {
        Ok(()) => {
            set_last_error("");
            TcStatus::Ok
        }
        Err(f) => {
            set_last_error(&f.message);
            f.status
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(TcStatus::NullArgument, format!("`{name}` is null")))
}

fn check_out<T>(p: *mut T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(Failure::new(
            TcStatus::NullArgument,
            format!("`{name}` is null"),
        ));
    }
    Ok(())
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(
            TcStatus::NullArgument,
            format!("`{name}` is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::new(TcStatus::InvalidUtf8, format!("`{name}`: {e}")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s)
        .map_err(|_| Failure::new(TcStatus::ContractViolation, "output contains a NUL byte"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize")
}

/// Description of the last failure on this thread, or an empty string after
/// a success. The pointer stays valid until the next call into this library
/// on the same thread.
#[no_mangle]
pub extern "C" fn tc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a `binomial_system` problem document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_system_from_json(
    json: *const c_char,
    out: *mut *mut TcSystem,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        match parse_problem(read_str(json, "json")?)? {
            Problem::System(s) => write_handle(out, TcSystem(s)),
            Problem::Map(_) => {
                return Err(ToricError::Malformed {
                    field: "kind".into(),
                    message: "expected `binomial_system`".into(),
                }
                .into())
            }
        }
        Ok(())
    })
}

/// Parses a `monomial_map` problem document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_map_from_json(json: *const c_char, out: *mut *mut TcMap) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        match parse_problem(read_str(json, "json")?)? {
            Problem::Map(m) => write_handle(out, TcMap(m)),
            Problem::System(_) => {
                return Err(ToricError::Malformed {
                    field: "kind".into(),
                    message: "expected `monomial_map`".into(),
                }
                .into())
            }
        }
        Ok(())
    })
}

/// Serializes a system in the problem-file schema.
///
/// # Safety
/// `system` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_system_to_json(
    system: *const TcSystem,
    out: *mut *mut c_char,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let s = deref(system, "system")?;
        write_string(out, pretty(&Problem::System(s.0.clone()).to_json()))
    })
}

/// Serializes a map in the problem-file schema.
///
/// # Safety
/// `map` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_map_to_json(map: *const TcMap, out: *mut *mut c_char) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let m = deref(map, "map")?;
        write_string(out, pretty(&Problem::Map(m.0.clone()).to_json()))
    })
}

/// Binomial system cutting out the closure of the image of `map`.
///
/// # Safety
/// `map` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_implicitize(map: *const TcMap, out: *mut *mut TcSystem) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let s = implicitize(&deref(map, "map")?.0)?;
        write_handle(out, TcSystem(s));
        Ok(())
    })
}

/// Monomial map whose image closure is the cube of `system`.
///
/// # Safety
/// `system` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_parametrize(system: *const TcSystem, out: *mut *mut TcMap) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let m = parametrize(&deref(system, "system")?.0);
        write_handle(out, TcMap(m));
        Ok(())
    })
}

/// System cutting out the closure of the positive part of `system`.
///
/// # Safety
/// `system` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_cubify(system: *const TcSystem, out: *mut *mut TcSystem) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let s = cubify(&deref(system, "system")?.0)?;
        write_handle(out, TcSystem(s));
        Ok(())
    })
}

/// Whether `system` already cuts out a toric cube.
///
/// # Safety
/// `system` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_is_cube(system: *const TcSystem, out: *mut bool) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = is_cube(&deref(system, "system")?.0)?;
        Ok(())
    })
}

/// CW decomposition of the closure of the image of `map`.
///
/// # Safety
/// `map` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_from_map(
    map: *const TcMap,
    out: *mut *mut TcComplex,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let cube = ToricCube::from_map(&deref(map, "map")?.0)?;
        write_handle(out, TcComplex(build_cw(&cube)));
        Ok(())
    })
}

/// CW decomposition of the cube of `system`.
///
/// # Safety
/// `system` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_from_system(
    system: *const TcSystem,
    out: *mut *mut TcComplex,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let cube = ToricCube::from_system(&deref(system, "system")?.0)?;
        write_handle(out, TcComplex(build_cw(&cube)));
        Ok(())
    })
}

/// Number of cells.
///
/// # Safety
/// `complex` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_cell_count(
    complex: *const TcComplex,
    out: *mut usize,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = deref(complex, "complex")?.0.len();
        Ok(())
    })
}

/// Cell counts by dimension. `*len` receives the vector's length; entries
/// are written to `buf` only when `cap` is large enough.
///
/// # Safety
/// `complex` must be a live handle, `len` valid for a write, and `buf` valid
/// for `cap` writes (it may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn tc_complex_f_vector(
    complex: *const TcComplex,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TcStatus {
    guard(|| {
        check_out(len, "len")?;
        let f = deref(complex, "complex")?.0.f_vector();
        *len = f.len();
        if cap < f.len() {
            return Err(Failure::new(
                TcStatus::BufferTooSmall,
                format!("f-vector has {} entries, buffer holds {cap}", f.len()),
            ));
        }
        if !f.is_empty() {
            check_out(buf, "buf")?;
            ptr::copy_nonoverlapping(f.as_ptr(), buf, f.len());
        }
        Ok(())
    })
}

/// Euler characteristic of the whole complex.
///
/// # Safety
/// `complex` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_euler(complex: *const TcComplex, out: *mut i64) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = deref(complex, "complex")?.0.euler();
        Ok(())
    })
}

/// Number of fan refinements needed to make boundaries subcomplexes.
///
/// # Safety
/// `complex` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_refinements(
    complex: *const TcComplex,
    out: *mut usize,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = deref(complex, "complex")?.0.refinements();
        Ok(())
    })
}

/// The complex as the JSON document printed by `toricube cw`.
///
/// # Safety
/// `complex` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_to_json(
    complex: *const TcComplex,
    char_domains: bool,
    scaled_rays: bool,
    out: *mut *mut c_char,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        let x = &deref(complex, "complex")?.0;
        write_string(out, pretty(&cw_json(x, char_domains, scaled_rays)?))
    })
}

/// Graphviz Hasse diagram of the closure poset.
///
/// # Safety
/// `complex` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_poset_dot(
    complex: *const TcComplex,
    out: *mut *mut c_char,
) -> TcStatus {
    guard(|| {
        check_out(out, "out")?;
        write_string(out, poset_dot(&deref(complex, "complex")?.0))
    })
}

/// Releases a system handle. Null is ignored.
///
/// # Safety
/// `system` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_system_free(system: *mut TcSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Releases a map handle. Null is ignored.
///
/// # Safety
/// `map` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_map_free(map: *mut TcMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Releases a complex handle. Null is ignored.
///
/// # Safety
/// `complex` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_complex_free(complex: *mut TcComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

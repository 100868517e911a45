//! C ABI for the `mldeg` toolkit.
//!
//! Models are opaque handles created from JSON model specs. Every function
//! returns an [`MldStatus`]; on failure a message is available from
//! [`mld_last_error`] on the same thread. Reports come back as JSON strings
//! owned by the caller and released with [`mld_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mldeg::cli::{exit_code, ModelSpec, EXIT_INCONCLUSIVE, EXIT_NON_REGULAR};
use mldeg::engines::{ml_degree, reciprocal_degree, zero_test, MlConfig, MlValue, ReciprocalMethod};
use mldeg::exactmath::random_prime;
use mldeg::spaces::LinearMatrixSpace;
use mldeg::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Result of every call. The first four values match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MldStatus {
    Ok = 0,
    InputError = 1,
    NonRegular = 2,
    Inconclusive = 3,
    NullPointer = 4,
    Panic = 5,
}

/// How the reciprocal degree is computed.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MldReciprocalMethod {
    Slice = 0,
    Implicitize = 1,
}

/// Opaque model handle.
pub struct MldModel {
    space: LinearMatrixSpace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> MldStatus {
    match exit_code(e) {
        EXIT_NON_REGULAR => MldStatus::NonRegular,
        EXIT_INCONCLUSIVE => MldStatus::Inconclusive,
        _ => MldStatus::InputError,
    }
}

/// Runs `f`, converting errors and panics into a status plus a message.
fn guard(f: impl FnOnce() -> Result<MldStatus, (MldStatus, String)>) -> MldStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MldStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (MldStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (MldStatus, String) {
    (MldStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `model` is null or a live handle from [`mld_model_from_json`].
unsafe fn model_ref<'a>(model: *const MldModel) -> Result<&'a MldModel, (MldStatus, String)> {
    model.as_ref().ok_or_else(|| null("model"))
}

/// # Safety
/// `out` is null or valid for a pointer write.
unsafe fn write_json(out: *mut *mut c_char, json: String) -> Result<(), (MldStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(json).expect("JSON has no nul").into_raw();
    Ok(())
}

fn config(seed: u64, trials: u32) -> MlConfig {
    let trials = (trials as usize).max(1);
    MlConfig { seed, trials, max_trials: trials.max(5).max(trials + 2), ..MlConfig::default() }
}

fn value_status(value: MlValue) -> MldStatus {
    match value {
        MlValue::Count(_) => MldStatus::Ok,
        MlValue::Inconclusive => MldStatus::Inconclusive,
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn mld_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn mld_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a JSON model spec into a new handle stored in `*out`.
///
/// # Safety
/// `json` is a nul-terminated UTF-8 string; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mld_model_from_json(json: *const c_char, out: *mut *mut MldModel) -> MldStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| (MldStatus::InputError, e.to_string()))?;
        let space = ModelSpec::from_json(text).and_then(|m| m.to_space()).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(MldModel { space }));
        Ok(MldStatus::Ok)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `model` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mld_model_free(model: *mut MldModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Matrix size `n` and dimension of the space.
///
/// # Safety
/// `model` is a live handle; `n` and `dim` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mld_model_shape(model: *const MldModel, n: *mut usize, dim: *mut usize) -> MldStatus {
    guard(|| {
        let m = model_ref(model)?;
        if n.is_null() || dim.is_null() {
            return Err(null("output pointer"));
        }
        *n = m.space.n();
        *dim = m.space.dim();
        Ok(MldStatus::Ok)
    })
}

/// ML degree report as JSON. Returns `Inconclusive` (with the report still
/// written) when the trials reach no majority.
///
/// # Safety
/// `model` is a live handle; `out_json` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mld_ml_degree(
    model: *const MldModel,
    seed: u64,
    trials: u32,
    out_json: *mut *mut c_char,
) -> MldStatus {
    guard(|| {
        let m = model_ref(model)?;
        let report = ml_degree(&m.space, &config(seed, trials)).map_err(lib_err)?;
        let status = value_status(report.value);
        write_json(out_json, serde_json::to_string(&report).expect("serializable"))?;
        Ok(status)
    })
}

/// Reciprocal degree report as JSON.
///
/// # Safety
/// `model` is a live handle; `out_json` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mld_reciprocal_degree(
    model: *const MldModel,
    method: MldReciprocalMethod,
    seed: u64,
    out_json: *mut *mut c_char,
) -> MldStatus {
    guard(|| {
        let m = model_ref(model)?;
        let method = match method {
            MldReciprocalMethod::Slice => ReciprocalMethod::Slice,
            MldReciprocalMethod::Implicitize => ReciprocalMethod::Implicitize,
        };
        let report = reciprocal_degree(&m.space, method, &config(seed, 3)).map_err(lib_err)?;
        let status = value_status(report.value);
        write_json(out_json, serde_json::to_string(&report).expect("serializable"))?;
        Ok(status)
    })
}

/// Zero-test report as JSON, over a random 31-bit prime drawn from `seed`.
///
/// # Safety
/// `model` is a live handle; `out_json` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn mld_zero_test(model: *const MldModel, seed: u64, out_json: *mut *mut c_char) -> MldStatus {
    guard(|| {
        let m = model_ref(model)?;
        let prime = random_prime(&mut ChaCha8Rng::seed_from_u64(seed), 31).map_err(lib_err)?;
        let report = zero_test(&m.space, prime, 3, seed).map_err(lib_err)?;
        write_json(out_json, serde_json::to_string(&report).expect("serializable"))?;
        Ok(MldStatus::Ok)
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mld_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

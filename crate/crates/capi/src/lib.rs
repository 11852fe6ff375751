//! C ABI over the core library: opaque handles, integer error codes, and a
//! thread-local last-error message.
//!
//! Handles returned by the constructors own their objects and must be
//! released with the matching `_free` function. All functions are safe to
//! call from any thread as long as a handle is not used concurrently with
//! its `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::path::Path;
use std::ptr;

use ntlab::catalog::CodeFamily;
use ntlab::code::Code;
use ntlab::coset;
use ntlab::error::Error;
use ntlab::fileio;
use ntlab::perm::PermGroup;
use ntlab::verify;

/// Success.
pub const NTLAB_OK: c_int = 0;
/// Malformed file or argument string.
pub const NTLAB_ERR_PARSE: c_int = -1;
/// Parameters outside the supported range of a construction.
pub const NTLAB_ERR_UNSUPPORTED: c_int = -2;
/// An enumeration budget would be exceeded.
pub const NTLAB_ERR_BUDGET: c_int = -3;
/// A required data file is absent.
pub const NTLAB_ERR_MISSING_DATA: c_int = -4;
/// Any other failure; consult `ntlab_last_error`.
pub const NTLAB_ERR_OTHER: c_int = -5;
/// A null handle or output pointer was passed.
pub const NTLAB_ERR_NULL: c_int = -6;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(e: &Error) -> c_int {
    let code = match e {
        Error::Parse { .. } => NTLAB_ERR_PARSE,
        Error::UnsupportedParameters { .. } => NTLAB_ERR_UNSUPPORTED,
        Error::Budget { .. } => NTLAB_ERR_BUDGET,
        Error::MissingData { .. } => NTLAB_ERR_MISSING_DATA,
        _ => NTLAB_ERR_OTHER,
    };
    let message = CString::new(e.to_string()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
    code
}

/// Message for the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn ntlab_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Opaque code handle.
pub struct NtlabCode {
    inner: Code,
}

/// Opaque permutation-group handle.
pub struct NtlabGroup {
    inner: PermGroup,
}

unsafe fn cstr<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        return None;
    }
    unsafe { CStr::from_ptr(s) }.to_str().ok()
}

/// Read a code file (`LINEAR`/`SET` format). Returns null on failure; see
/// `ntlab_last_error`.
///
/// # Safety
/// `path` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_read(path: *const c_char) -> *mut NtlabCode {
    let Some(path) = (unsafe { cstr(path) }) else {
        return ptr::null_mut();
    };
    match fileio::read_code(Path::new(path)) {
        Ok(inner) => Box::into_raw(Box::new(NtlabCode { inner })),
        Err(e) => {
            set_error(&e);
            ptr::null_mut()
        }
    }
}

/// Construct a catalog code by family name (the CLI names: `golay24`,
/// `rm1`, `qr`, `sp_quadric`, ...). Unused integer parameters are passed
/// as -1; `plus` selects the quadric type (1 = plus, 0 = minus).
///
/// # Safety
/// `family` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_construct(
    family: *const c_char,
    m: c_int,
    t: c_int,
    k: c_int,
    r: c_int,
    plus: c_int,
) -> *mut NtlabCode {
    let Some(name) = (unsafe { cstr(family) }) else {
        return ptr::null_mut();
    };
    let opt = |v: c_int| if v < 0 { None } else { Some(v as usize) };
    let spec = match family_from_name(name, opt(m), opt(t), opt(k), opt(r), plus == 1) {
        Ok(spec) => spec,
        Err(e) => {
            set_error(&e);
            return ptr::null_mut();
        }
    };
    match spec.construct() {
        Ok(inner) => Box::into_raw(Box::new(NtlabCode { inner })),
        Err(e) => {
            set_error(&e);
            ptr::null_mut()
        }
    }
}

fn family_from_name(
    name: &str,
    m: Option<usize>,
    t: Option<usize>,
    k: Option<usize>,
    r: Option<usize>,
    plus: bool,
) -> Result<CodeFamily, Error> {
    let need = |value: Option<usize>, what: &str| -> Result<usize, Error> {
        value.ok_or_else(|| Error::UnsupportedParameters {
            family: name.into(),
            constraint: format!("parameter {what} is required"),
        })
    };
    Ok(match name {
        "repetition" => CodeFamily::Repetition { m: need(m, "m")? },
        "even_weight" => CodeFamily::EvenWeight { m: need(m, "m")? },
        "rm1" => CodeFamily::Rm1 { t: need(t, "t")? },
        "hamming" => CodeFamily::Hamming { t: need(t, "t")? },
        "pg_hyperplane" => CodeFamily::PgHyperplane { t: need(t, "t")?, k: need(k, "k")? },
        "pg_complement" => CodeFamily::PgComplement { t: need(t, "t")?, k: need(k, "k")? },
        "qr" => CodeFamily::Qr { r: need(r, "r")? },
        "qr_even" => CodeFamily::QrEven { r: need(r, "r")? },
        "eqr" => CodeFamily::Eqr { r: need(r, "r")? },
        "golay23" => CodeFamily::Golay23,
        "golay24" => CodeFamily::Golay24,
        "golay23_even" => CodeFamily::Golay23Even,
        "m22_code" => CodeFamily::M22Code,
        "hadamard12" => CodeFamily::Hadamard12,
        "punct_hadamard11" => CodeFamily::PunctHadamard11,
        "punct_hadamard11_even" => CodeFamily::PunctHadamard11Even,
        "sp_quadric" => CodeFamily::SpQuadric { t: need(t, "t")?, plus },
        "hermitian_unital_code" => CodeFamily::HermitianUnital { r: need(r, "r")? },
        other => {
            return Err(Error::UnsupportedParameters {
                family: other.into(),
                constraint: "unknown family".into(),
            })
        }
    })
}

/// # Safety
/// `code` must come from a constructor of this library and not already be
/// freed.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_free(code: *mut NtlabCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// Code length m, or NTLAB_ERR_NULL.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_length(code: *const NtlabCode) -> c_int {
    match unsafe { code.as_ref() } {
        Some(c) => c.inner.length() as c_int,
        None => NTLAB_ERR_NULL,
    }
}

/// Dimension of a linear code; -1 for explicit word sets.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_dimension(code: *const NtlabCode) -> c_int {
    match unsafe { code.as_ref() } {
        Some(c) => match &c.inner {
            Code::Linear(l) => l.dimension() as c_int,
            Code::Words(_) => -1,
        },
        None => NTLAB_ERR_NULL,
    }
}

/// Number of codewords (valid while it fits 64 bits).
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_word_count(code: *const NtlabCode) -> u64 {
    match unsafe { code.as_ref() } {
        Some(c) => c.inner.size() as u64,
        None => 0,
    }
}

/// Exact minimum distance, or a negative error code.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_min_distance(code: *const NtlabCode) -> i64 {
    let Some(c) = (unsafe { code.as_ref() }) else {
        return NTLAB_ERR_NULL as i64;
    };
    match c.inner.minimum_distance() {
        Ok(d) => d as i64,
        Err(e) => set_error(&e) as i64,
    }
}

/// Number of codewords of the given weight, or a negative error code.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_weight_count(code: *const NtlabCode, weight: c_int) -> i64 {
    let Some(c) = (unsafe { code.as_ref() }) else {
        return NTLAB_ERR_NULL as i64;
    };
    if weight < 0 {
        return NTLAB_ERR_UNSUPPORTED as i64;
    }
    match c.inner.weight_distribution() {
        Ok(wd) => wd.count(weight as usize) as i64,
        Err(e) => set_error(&e) as i64,
    }
}

/// Covering radius, or a negative error code.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_code_covering_radius(code: *const NtlabCode) -> i64 {
    let Some(c) = (unsafe { code.as_ref() }) else {
        return NTLAB_ERR_NULL as i64;
    };
    match coset::distance_partition(&c.inner) {
        Ok(p) => p.covering_radius() as i64,
        Err(e) => set_error(&e) as i64,
    }
}

/// Read a permutation-group file (`PERM` format). Returns null on failure.
///
/// # Safety
/// `path` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ntlab_group_read(path: *const c_char) -> *mut NtlabGroup {
    let Some(path) = (unsafe { cstr(path) }) else {
        return ptr::null_mut();
    };
    match fileio::read_group(Path::new(path)) {
        Ok(inner) => Box::into_raw(Box::new(NtlabGroup { inner })),
        Err(e) => {
            set_error(&e);
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `group` must come from this library and not already be freed.
#[no_mangle]
pub unsafe extern "C" fn ntlab_group_free(group: *mut NtlabGroup) {
    if !group.is_null() {
        drop(unsafe { Box::from_raw(group) });
    }
}

/// Number of points the group acts on.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_group_degree(group: *const NtlabGroup) -> c_int {
    match unsafe { group.as_ref() } {
        Some(g) => g.inner.degree() as c_int,
        None => NTLAB_ERR_NULL,
    }
}

/// Group order as a decimal string; free with `ntlab_string_free`.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_group_order(group: *const NtlabGroup) -> *mut c_char {
    match unsafe { group.as_ref() } {
        Some(g) => CString::new(g.inner.order().to_string())
            .map(CString::into_raw)
            .unwrap_or(ptr::null_mut()),
        None => ptr::null_mut(),
    }
}

/// 1 when the group is 2-homogeneous on its points, 0 otherwise.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_group_is_2_homogeneous(group: *const NtlabGroup) -> c_int {
    match unsafe { group.as_ref() } {
        Some(g) => g.inner.transitivity_profile().is_2_homogeneous as c_int,
        None => NTLAB_ERR_NULL,
    }
}

/// 1 when the group is 2-transitive on its points, 0 otherwise.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntlab_group_is_2_transitive(group: *const NtlabGroup) -> c_int {
    match unsafe { group.as_ref() } {
        Some(g) => g.inner.transitivity_profile().is_2_transitive as c_int,
        None => NTLAB_ERR_NULL,
    }
}

/// Certify 2-neighbour-transitivity. With `use_oracle` nonzero the
/// brute-force orbit oracle must agree with the criterion (linear codes) or
/// is used alone (word sets). Returns 1 for pass, 0 for fail, a negative
/// error code on failure to decide.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn ntlab_check_2nt(
    code: *const NtlabCode,
    group: *const NtlabGroup,
    use_oracle: c_int,
) -> c_int {
    let (Some(c), Some(g)) = (unsafe { code.as_ref() }, unsafe { group.as_ref() }) else {
        return NTLAB_ERR_NULL;
    };
    let criterion = match &c.inner {
        Code::Linear(linear) => match verify::certify_2nt_criterion(linear, &g.inner) {
            Ok(cert) => Some(cert.pass),
            Err(e) => return set_error(&e),
        },
        Code::Words(_) => None,
    };
    if use_oracle != 0 || criterion.is_none() {
        let oracle = match verify::oracle_2nt(&c.inner, &g.inner) {
            Ok(cert) => cert.pass,
            Err(e) => return set_error(&e),
        };
        if let Some(pass) = criterion {
            if pass != oracle {
                let message = CString::new("criterion and oracle disagree").unwrap();
                LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
                return NTLAB_ERR_OTHER;
            }
        }
        return oracle as c_int;
    }
    criterion.unwrap() as c_int
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must come from `ntlab_group_order` (or another string-returning
/// function here) and not already be freed.
#[no_mangle]
pub unsafe extern "C" fn ntlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn construct(name: &str, m: i32, t: i32, k: i32, r: i32, plus: i32) -> *mut NtlabCode {
        let name = CString::new(name).unwrap();
        unsafe { ntlab_code_construct(name.as_ptr(), m, t, k, r, plus) }
    }

    #[test]
    fn golay_round_trip_through_the_abi() {
        let code = construct("golay24", -1, -1, -1, -1, -1);
        assert!(!code.is_null());
        unsafe {
            assert_eq!(ntlab_code_length(code), 24);
            assert_eq!(ntlab_code_dimension(code), 12);
            assert_eq!(ntlab_code_word_count(code), 4096);
            assert_eq!(ntlab_code_min_distance(code), 8);
            assert_eq!(ntlab_code_weight_count(code, 8), 759);
            ntlab_code_free(code);
        }
    }

    #[test]
    fn unknown_family_sets_the_error() {
        let code = construct("nonsense", -1, -1, -1, -1, -1);
        assert!(code.is_null());
        let message = unsafe { CStr::from_ptr(ntlab_last_error()) };
        assert!(message.to_str().unwrap().contains("unknown family"));
    }

    #[test]
    fn check_2nt_through_the_abi() {
        let code = construct("rm1", -1, 4, -1, -1, -1);
        let group = ntlab::catalog::GroupFamily::Agl { t: 4 }.construct().unwrap();
        let path = std::env::temp_dir().join("ntlab_capi_agl4.perm");
        ntlab::fileio::write_group(&path, &group).unwrap();
        let cpath = CString::new(path.display().to_string()).unwrap();
        let group = unsafe { ntlab_group_read(cpath.as_ptr()) };
        assert!(!group.is_null());
        unsafe {
            assert_eq!(ntlab_group_degree(group), 16);
            assert_eq!(ntlab_group_is_2_transitive(group), 1);
            let order = ntlab_group_order(group);
            assert_eq!(CStr::from_ptr(order).to_str().unwrap(), "322560");
            ntlab_string_free(order);
            assert_eq!(ntlab_check_2nt(code, group, 1), 1);
            ntlab_code_free(code);
            ntlab_group_free(group);
        }
        let _ = std::fs::remove_file(&path);
    }

    #[test]
    fn hamming_fails_2nt() {
        let code = construct("hamming", -1, 3, -1, -1, -1);
        let group = ntlab::catalog::GroupFamily::Psl { t: 3, k: 1 }.construct().unwrap();
        let path = std::env::temp_dir().join("ntlab_capi_psl32.perm");
        ntlab::fileio::write_group(&path, &group).unwrap();
        let cpath = CString::new(path.display().to_string()).unwrap();
        let group = unsafe { ntlab_group_read(cpath.as_ptr()) };
        unsafe {
            assert_eq!(ntlab_check_2nt(code, group, 0), 0);
            ntlab_code_free(code);
            ntlab_group_free(group);
        }
        let _ = std::fs::remove_file(&path);
    }
}

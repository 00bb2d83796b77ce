//! C ABI over `sd-core`.
//!
//! Every function returns an [`SdStatus`]; results come back through out
//! parameters. Objects are opaque handles owned by the caller and released
//! with the matching `*_free`. Strings returned by the library are
//! NUL-terminated and freed with [`sd_string_free`]. After a non-`Ok`
//! status, [`sd_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use num_traits::ToPrimitive;

use sd_core::catalog::{verify_all, Catalog};
use sd_core::coxeter::{charpoly_pi, charpoly_s, GabrielovQuadruple};
use sd_core::invertible::ExponentMatrix;
use sd_core::orbits::{dolgachev_pair, CStarAction};
use sd_core::poly::{parse_poly, parse_term_list, parse_var_list, Polynomial};
use sd_core::series::{FrameProduct, WeightSystem};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Math = 4,
    NotFound = 5,
    Io = 6,
    Panic = 7,
}

/// A polynomial in `x, y, z, w` with rational coefficients.
pub struct SdPolynomial(Polynomial);

/// A frame product `prod (1 - t^l)^{a_l}`.
pub struct SdFrame(FrameProduct);

/// A loaded, validated catalog.
pub struct SdCatalog(Catalog);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SdShape {
    #[default]
    S = 0,
    Pi = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Error(SdStatus, String);

type Res<T> = Result<T, Error>;

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Res<()>) -> SdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SdStatus::Ok,
        Ok(Err(Error(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SdStatus::Panic
        }
    }
}

fn err(status: SdStatus) -> impl FnOnce(String) -> Error {
    move |m| Error(status, m)
}

unsafe fn cstr<'a>(p: *const c_char, what: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err(Error(SdStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Error(SdStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn obj<'a, T>(p: *const T, what: &str) -> Res<&'a T> {
    p.as_ref()
        .ok_or_else(|| Error(SdStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Res<()> {
    if out.is_null() {
        return Err(Error(SdStatus::NullPointer, format!("{what} is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Res<()> {
    let c = CString::new(s).map_err(|e| Error(SdStatus::Math, e.to_string()))?;
    if out.is_null() {
        return Err(Error(SdStatus::NullPointer, "out is null".into()));
    }
    out.write(c.into_raw());
    Ok(())
}

/// Message for the last failure on this thread, or null. Valid until the
/// next library call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `data` must be an array returned by this library with its length, or null.
#[no_mangle]
pub unsafe extern "C" fn sd_i64_array_free(data: *mut i64, len: usize) {
    if !data.is_null() {
        drop(Vec::from_raw_parts(data, len, len));
    }
}

// ---- polynomials -----------------------------------------------------------

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_poly_parse(text: *const c_char, out: *mut *mut SdPolynomial) -> SdStatus {
    guard(|| {
        let p = parse_poly(cstr(text, "text")?).map_err(|e| Error(SdStatus::Parse, e.to_string()))?;
        put(out, Box::into_raw(Box::new(SdPolynomial(p))), "out")
    })
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sd_poly_free(p: *mut SdPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_poly_to_string(p: *const SdPolynomial, out: *mut *mut c_char) -> SdStatus {
    guard(|| put_string(out, obj(p, "p")?.0.to_string()))
}

unsafe fn binary(
    a: *const SdPolynomial,
    b: *const SdPolynomial,
    out: *mut *mut SdPolynomial,
    op: impl FnOnce(&Polynomial, &Polynomial) -> Polynomial,
) -> SdStatus {
    guard(|| {
        let r = op(&obj(a, "a")?.0, &obj(b, "b")?.0);
        put(out, Box::into_raw(Box::new(SdPolynomial(r))), "out")
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_poly_add(a: *const SdPolynomial, b: *const SdPolynomial, out: *mut *mut SdPolynomial) -> SdStatus {
    binary(a, b, out, |x, y| x + y)
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_poly_sub(a: *const SdPolynomial, b: *const SdPolynomial, out: *mut *mut SdPolynomial) -> SdStatus {
    binary(a, b, out, |x, y| x - y)
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_poly_mul(a: *const SdPolynomial, b: *const SdPolynomial, out: *mut *mut SdPolynomial) -> SdStatus {
    binary(a, b, out, |x, y| x * y)
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_poly_equal(a: *const SdPolynomial, b: *const SdPolynomial, out: *mut bool) -> SdStatus {
    guard(|| {
        let eq = obj(a, "a")?.0 == obj(b, "b")?.0;
        put(out, eq, "out")
    })
}

/// Berglund-Hubsch transpose of an invertible polynomial over the
/// comma-separated variable list `vars`. Matrix rows follow the terms in
/// the order written, so `x^2 + x*y^3` and `x*y^3 + x^2` transpose to
/// polynomials that differ by a swap of variables.
///
/// # Safety
/// `text` and `vars` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_bh_transpose(
    text: *const c_char,
    vars: *const c_char,
    out: *mut *mut SdPolynomial,
) -> SdStatus {
    guard(|| {
        let vars = parse_var_list(cstr(vars, "vars")?).map_err(|e| Error(SdStatus::Parse, e.to_string()))?;
        let terms = parse_term_list(cstr(text, "text")?).map_err(|e| Error(SdStatus::Parse, e.to_string()))?;
        let e = ExponentMatrix::from_terms(&terms, &vars).map_err(|e| Error(SdStatus::Math, e.to_string()))?;
        let t = e.bh_transpose().to_polynomial(&vars);
        put(out, Box::into_raw(Box::new(SdPolynomial(t))), "out")
    })
}

// ---- frames ----------------------------------------------------------------

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_frame_parse(text: *const c_char, out: *mut *mut SdFrame) -> SdStatus {
    guard(|| {
        let f: FrameProduct = cstr(text, "text")?.parse().map_err(|e: sd_core::series::SeriesError| Error(SdStatus::Parse, e.to_string()))?;
        put(out, Box::into_raw(Box::new(SdFrame(f))), "out")
    })
}

/// # Safety
/// `f` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sd_frame_free(f: *mut SdFrame) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_frame_to_string(f: *const SdFrame, out: *mut *mut c_char) -> SdStatus {
    guard(|| put_string(out, obj(f, "f")?.0.to_string()))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_frame_mul(a: *const SdFrame, b: *const SdFrame, out: *mut *mut SdFrame) -> SdStatus {
    guard(|| {
        let r = obj(a, "a")?.0.mul(&obj(b, "b")?.0);
        put(out, Box::into_raw(Box::new(SdFrame(r))), "out")
    })
}

/// Poincare series of a weight system written `"w1,w2,w3,w4;d1,d2"`.
///
/// # Safety
/// `weights` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_poincare(weights: *const c_char, out: *mut *mut SdFrame) -> SdStatus {
    guard(|| {
        let ws: WeightSystem = cstr(weights, "weights")?
            .parse()
            .map_err(|e: sd_core::series::SeriesError| Error(SdStatus::Parse, e.to_string()))?;
        put(out, Box::into_raw(Box::new(SdFrame(ws.poincare()))), "out")
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_saito_dual(f: *const SdFrame, degree: u64, out: *mut *mut SdFrame) -> SdStatus {
    guard(|| {
        let d = obj(f, "f")?.0.saito_dual(degree).map_err(|e| Error(SdStatus::Math, e.to_string()))?;
        put(out, Box::into_raw(Box::new(SdFrame(d))), "out")
    })
}

/// Coefficients of the frame as a polynomial, ascending powers. Free with
/// [`sd_i64_array_free`].
///
/// # Safety
/// `f` must be a live handle; `out_data`, `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_frame_to_polynomial(f: *const SdFrame, out_data: *mut *mut i64, out_len: *mut usize) -> SdStatus {
    guard(|| {
        let p = obj(f, "f")?.0.to_polynomial().map_err(|e| Error(SdStatus::Math, e.to_string()))?;
        put_coefficients(p.coefficients(), out_data, out_len)
    })
}

unsafe fn put_coefficients(c: &[num_bigint::BigInt], out_data: *mut *mut i64, out_len: *mut usize) -> Res<()> {
    let v: Vec<i64> = c
        .iter()
        .map(|x| x.to_i64().ok_or_else(|| format!("coefficient {x} does not fit in 64 bits")))
        .collect::<Result<_, _>>()
        .map_err(err(SdStatus::Math))?;
    if out_data.is_null() || out_len.is_null() {
        return Err(Error(SdStatus::NullPointer, "out is null".into()));
    }
    let mut b = v.into_boxed_slice();
    out_len.write(b.len());
    out_data.write(b.as_mut_ptr());
    std::mem::forget(b);
    Ok(())
}

/// Characteristic polynomial of the Coxeter element for `g[0..4]`,
/// ascending powers. Free with [`sd_i64_array_free`].
///
/// # Safety
/// `g` must point to four integers; `out_data`, `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_charpoly(g: *const u64, shape: SdShape, out_data: *mut *mut i64, out_len: *mut usize) -> SdStatus {
    guard(|| {
        if g.is_null() {
            return Err(Error(SdStatus::NullPointer, "g is null".into()));
        }
        let g: [u64; 4] = std::slice::from_raw_parts(g, 4).try_into().expect("four");
        let q = GabrielovQuadruple::new(g).map_err(|e| Error(SdStatus::Math, e.to_string()))?;
        let p = match shape {
            SdShape::S => charpoly_s(&q),
            SdShape::Pi => charpoly_pi(&q),
        };
        put_coefficients(p.coefficients(), out_data, out_len)
    })
}

// ---- orbits ----------------------------------------------------------------

/// Dolgachev pair of `(h1, h2)` under the weights `w[0..4]`, ascending.
///
/// # Safety
/// `h1`, `h2` must be live handles, `w` four integers, `out` two writable
/// integers.
#[no_mangle]
pub unsafe extern "C" fn sd_dolgachev(
    h1: *const SdPolynomial,
    h2: *const SdPolynomial,
    w: *const u64,
    out: *mut u64,
) -> SdStatus {
    guard(|| {
        if w.is_null() || out.is_null() {
            return Err(Error(SdStatus::NullPointer, "w or out is null".into()));
        }
        let w: [u64; 4] = std::slice::from_raw_parts(w, 4).try_into().expect("four");
        let action = CStarAction::new(w).map_err(|e| Error(SdStatus::Math, e.to_string()))?;
        let d = dolgachev_pair(&obj(h1, "h1")?.0, &obj(h2, "h2")?.0, &action)
            .map_err(|e| Error(SdStatus::Math, e.to_string()))?;
        out.write(d.orders.0);
        out.add(1).write(d.orders.1);
        Ok(())
    })
}

// ---- catalog ---------------------------------------------------------------

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_catalog_shipped(out: *mut *mut SdCatalog) -> SdStatus {
    guard(|| put(out, Box::into_raw(Box::new(SdCatalog(Catalog::shipped()))), "out"))
}

/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_catalog_load(path: *const c_char, out: *mut *mut SdCatalog) -> SdStatus {
    guard(|| {
        let c = Catalog::load(Path::new(cstr(path, "path")?)).map_err(|e| {
            let status = match e {
                sd_core::catalog::CatalogError::Io { .. } => SdStatus::Io,
                _ => SdStatus::Parse,
            };
            Error(status, e.to_string())
        })?;
        put(out, Box::into_raw(Box::new(SdCatalog(c))), "out")
    })
}

/// # Safety
/// `c` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn sd_catalog_free(c: *mut SdCatalog) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_catalog_len(c: *const SdCatalog, out: *mut usize) -> SdStatus {
    guard(|| put(out, obj(c, "c")?.0.entries.len(), "out"))
}

/// Runs every check. `report_json` may be null; otherwise it receives the
/// full report as JSON.
///
/// # Safety
/// `c` must be a live handle; `passed`, `total` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_catalog_verify(
    c: *const SdCatalog,
    passed: *mut usize,
    total: *mut usize,
    report_json: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let r = verify_all(&obj(c, "c")?.0);
        put(passed, r.passed, "passed")?;
        put(total, r.total, "total")?;
        if !report_json.is_null() {
            let json = serde_json::to_string(&r).map_err(|e| Error(SdStatus::Math, e.to_string()))?;
            put_string(report_json, json)?;
        }
        Ok(())
    })
}

/// Text description of one entry, looked up by id or name.
///
/// # Safety
/// `c` must be a live handle, `name` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_catalog_show(c: *const SdCatalog, name: *const c_char, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let cat = &obj(c, "c")?.0;
        let e = cat
            .get(cstr(name, "name")?)
            .map_err(|e| Error(SdStatus::NotFound, e.to_string()))?;
        put_string(out, e.to_string())
    })
}

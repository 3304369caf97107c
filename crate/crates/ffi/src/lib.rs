//! C ABI for the `g3` crate.
//!
//! Every fallible function returns a [`G3Status`]; on failure a message is
//! available from [`g3_last_error`] on the same thread. Values cross the
//! boundary as plain `#[repr(C)]` structs. Parsed expressions and evolution
//! trajectories are opaque handles that must be released with their
//! `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use g3::cartan::{cartan_inverse, cartan_null, spinor_operator};
use g3::expr::{self, Expr, ExprError};
use g3::matrix::{from_matrix, to_matrix};
use g3::qm::{evolve, neutrino_oscillation, transition_probability};
use g3::spinor::{a_hat_from_ket, canonical_form, inverse_stereographic};
use g3::verify::{self, VerifyConfig};
use g3::{ComplexScalar, EvolutionConfig, GaError, KetSpinor, Matrix2C, Multivector, NullVector, Observable, Vector3};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Syntax = 3,
    UnknownSymbol = 4,
    NonInvertible = 5,
    NoConvergence = 6,
    GradeOutOfRange = 7,
    NotUnit = 8,
    ZeroAlpha0 = 9,
    ZeroSpinor = 10,
    SouthPole = 11,
    NotNormalized = 12,
    NotNull = 13,
    DegenerateObservable = 14,
    NotTransverse = 15,
    ConstraintViolated = 16,
    OutOfRange = 17,
    Panic = 99,
}

/// Coefficients over `[1, e1, e2, e3, e23, e13, e12, e123]`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct G3Multivector {
    pub c: [f64; 8],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct G3Complex {
    pub re: f64,
    pub im: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct G3Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// The Pauli column `(a0, a1)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct G3Ket {
    pub a0: G3Complex,
    pub a1: G3Complex,
}

/// Row-major 2×2 complex matrix.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct G3Matrix2 {
    pub m: [G3Complex; 4],
}

/// One row of an evolution trajectory. `has_flavor` is 0 when the
/// Hamiltonian is not transverse to e3, in which case `p_e` and `p_mu` are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct G3Sample {
    pub t: f64,
    pub ket: G3Ket,
    pub a_hat: G3Vector3,
    pub has_flavor: i32,
    pub p_e: f64,
    pub p_mu: f64,
}

/// Parsed expression handle.
pub struct G3Expr {
    tree: Expr,
}

/// Evolution trajectory handle.
pub struct G3Trajectory {
    rows: Vec<G3Sample>,
}

impl From<Multivector> for G3Multivector {
    fn from(g: Multivector) -> Self {
        Self { c: g.c }
    }
}

impl From<G3Multivector> for Multivector {
    fn from(g: G3Multivector) -> Self {
        Multivector::new(g.c)
    }
}

impl From<ComplexScalar> for G3Complex {
    fn from(z: ComplexScalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<G3Complex> for ComplexScalar {
    fn from(z: G3Complex) -> Self {
        ComplexScalar::new(z.re, z.im)
    }
}

impl From<Vector3> for G3Vector3 {
    fn from(v: Vector3) -> Self {
        Self { x: v.x, y: v.y, z: v.z }
    }
}

impl From<G3Vector3> for Vector3 {
    fn from(v: G3Vector3) -> Self {
        Vector3::new(v.x, v.y, v.z)
    }
}

impl From<KetSpinor> for G3Ket {
    fn from(k: KetSpinor) -> Self {
        Self { a0: k.a0.into(), a1: k.a1.into() }
    }
}

impl From<G3Ket> for KetSpinor {
    fn from(k: G3Ket) -> Self {
        KetSpinor::new(k.a0.into(), k.a1.into())
    }
}

impl From<Matrix2C> for G3Matrix2 {
    fn from(m: Matrix2C) -> Self {
        let [[a, b], [c, d]] = m.m;
        Self { m: [a.into(), b.into(), c.into(), d.into()] }
    }
}

impl From<G3Matrix2> for Matrix2C {
    fn from(m: G3Matrix2) -> Self {
        let [a, b, c, d] = m.m.map(ComplexScalar::from);
        Matrix2C::new([[a, b], [c, d]])
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &GaError) -> G3Status {
    match e {
        GaError::GradeOutOfRange(_) => G3Status::GradeOutOfRange,
        GaError::NonInvertible { .. } => G3Status::NonInvertible,
        GaError::NoConvergence { .. } => G3Status::NoConvergence,
        GaError::BadTolerance(_) | GaError::InvalidConfig(_) => G3Status::InvalidArgument,
        GaError::ConstraintViolated { .. } | GaError::DegenerateX => G3Status::ConstraintViolated,
        GaError::NotUnit { .. } => G3Status::NotUnit,
        GaError::ZeroAlpha0 => G3Status::ZeroAlpha0,
        GaError::ZeroSpinor => G3Status::ZeroSpinor,
        GaError::SouthPole => G3Status::SouthPole,
        GaError::NotNormalized { .. } => G3Status::NotNormalized,
        GaError::NotNull { .. } => G3Status::NotNull,
        GaError::DegenerateObservable => G3Status::DegenerateObservable,
        GaError::NotTransverse { .. } => G3Status::NotTransverse,
    }
}

struct Failure(G3Status, String);

impl From<GaError> for Failure {
    fn from(e: GaError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        let status = match &e {
            ExprError::Syntax { .. } => G3Status::Syntax,
            ExprError::UnknownSymbol { .. } => G3Status::UnknownSymbol,
            ExprError::Eval { source, .. } => status_of(source),
        };
        Failure(status, e.to_string())
    }
}

fn null() -> Failure {
    Failure(G3Status::NullPointer, "null pointer argument".into())
}

/// Runs `f`, converting errors and panics into a status and last-error message.
fn guard<F>(f: F) -> G3Status
where
    F: FnOnce() -> Result<(), Failure> + UnwindSafe,
{
    clear_error();
    match catch_unwind(f) {
        Ok(Ok(())) => G3Status::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            G3Status::Panic
        }
    }
}

/// # Safety
/// `p` must be null or valid for reads of `T`.
unsafe fn read<T: Copy>(p: *const T) -> Result<T, Failure> {
    p.as_ref().copied().ok_or_else(null)
}

/// # Safety
/// `p` must be null or valid for writes of `T`.
unsafe fn write<T>(p: *mut T, v: T) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null());
    }
    p.write(v);
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn g3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Geometric product `a b`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_mul(a: *const G3Multivector, b: *const G3Multivector, out: *mut G3Multivector) -> G3Status {
    guard(|| {
        let g = Multivector::from(read(a)?) * Multivector::from(read(b)?);
        write(out, g.into())
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_add(a: *const G3Multivector, b: *const G3Multivector, out: *mut G3Multivector) -> G3Status {
    guard(|| {
        let g = Multivector::from(read(a)?) + Multivector::from(read(b)?);
        write(out, g.into())
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_reverse(a: *const G3Multivector, out: *mut G3Multivector) -> G3Status {
    guard(|| write(out, Multivector::from(read(a)?).reverse().into()))
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_inverse(a: *const G3Multivector, out: *mut G3Multivector) -> G3Status {
    guard(|| write(out, Multivector::from(read(a)?).inverse()?.into()))
}

/// Exponential accurate to `tol`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_exp(a: *const G3Multivector, tol: f64, out: *mut G3Multivector) -> G3Status {
    guard(|| write(out, Multivector::from(read(a)?).exp(tol)?.into()))
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_to_matrix(a: *const G3Multivector, out: *mut G3Matrix2) -> G3Status {
    guard(|| write(out, to_matrix(&read(a)?.into()).into()))
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_from_matrix(m: *const G3Matrix2, out: *mut G3Multivector) -> G3Status {
    guard(|| write(out, from_matrix(&read(m)?.into()).into()))
}

/// Ket as the ideal element `sqrt2 (a0 + a1 e1) u+`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_ket_embed(k: *const G3Ket, out: *mut G3Multivector) -> G3Status {
    guard(|| write(out, KetSpinor::from(read(k)?).embed().into()))
}

/// Point on the unit sphere for a non-zero ket.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_ket_a_hat(k: *const G3Ket, out: *mut G3Vector3) -> G3Status {
    guard(|| write(out, a_hat_from_ket(&read(k)?.into())?.into()))
}

/// Canonical parameters `rho, theta, phi, omega` of a non-zero ket.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_ket_canonical(k: *const G3Ket, out_params: *mut f64, out_m_hat: *mut G3Vector3) -> G3Status {
    guard(|| {
        let f = canonical_form(&read(k)?.into())?;
        if out_params.is_null() {
            return Err(null());
        }
        for (i, x) in [f.rho, f.theta, f.phi, f.omega].into_iter().enumerate() {
            out_params.add(i).write(x);
        }
        write(out_m_hat, f.m_hat.into())
    })
}

/// `z = (a1 + i a2) / (1 + a3)` for a unit vector other than `-e3`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_inverse_stereographic(a_hat: *const G3Vector3, out: *mut G3Complex) -> G3Status {
    guard(|| write(out, inverse_stereographic(read(a_hat)?.into())?.into()))
}

/// `|<a|b>|^2` for normalized kets.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_transition_probability(a: *const G3Ket, b: *const G3Ket, out: *mut f64) -> G3Status {
    guard(|| write(out, transition_probability(&read(a)?.into(), &read(b)?.into())?))
}

/// Null vector components `z1, z2, z3` written to `out[0..3]`.
///
/// # Safety
/// `k` must be valid and `out` must point to three writable `G3Complex`.
#[no_mangle]
pub unsafe extern "C" fn g3_cartan_null(k: *const G3Ket, out: *mut G3Complex) -> G3Status {
    guard(|| {
        let n = cartan_null(&read(k)?.into());
        if out.is_null() {
            return Err(null());
        }
        for (i, z) in n.z.into_iter().enumerate() {
            out.add(i).write(z.into());
        }
        Ok(())
    })
}

/// One of the two spinors `±k` with null vector `z[0..3]`; the other is its negative.
///
/// # Safety
/// `z` must point to three readable `G3Complex`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_cartan_inverse(z: *const G3Complex, out: *mut G3Ket) -> G3Status {
    guard(|| {
        if z.is_null() {
            return Err(null());
        }
        let zs = [0, 1, 2].map(|i| ComplexScalar::from(z.add(i).read()));
        let (k, _) = cartan_inverse(&NullVector::new(zs)?)?;
        write(out, k.into())
    })
}

/// Spinor operator `psi` of a ket.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_spinor_operator(k: *const G3Ket, out: *mut G3Multivector) -> G3Status {
    guard(|| write(out, spinor_operator(&read(k)?.into()).psi.into()))
}

/// Parses a NUL-terminated UTF-8 expression into a new handle.
///
/// # Safety
/// `src` must be a valid C string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn g3_expr_parse(src: *const c_char, out: *mut *mut G3Expr) -> G3Status {
    guard(|| {
        if src.is_null() || out.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(src)
            .to_str()
            .map_err(|_| Failure(G3Status::InvalidArgument, "expression is not UTF-8".into()))?;
        let tree = expr::parse(text)?;
        out.write(Box::into_raw(Box::new(G3Expr { tree })));
        Ok(())
    })
}

/// # Safety
/// `e` must come from [`g3_expr_parse`] and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn g3_expr_eval(e: *const G3Expr, out: *mut G3Multivector) -> G3Status {
    guard(|| {
        let e = e.as_ref().ok_or_else(null)?;
        write(out, expr::evaluate(&e.tree)?.into())
    })
}

/// Releases a handle from [`g3_expr_parse`]. NULL is ignored.
///
/// # Safety
/// `e` must be NULL or an unreleased handle.
#[no_mangle]
pub unsafe extern "C" fn g3_expr_free(e: *mut G3Expr) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Evolves `|0>` under `h[0] + h[1] e1 + h[2] e2 + h[3] e3` on `steps` equally
/// spaced times in `[0, t_max]`.
///
/// # Safety
/// `h` must point to four readable doubles and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn g3_evolve(h: *const f64, hbar: f64, t_max: f64, steps: usize, out: *mut *mut G3Trajectory) -> G3Status {
    guard(|| {
        if h.is_null() || out.is_null() {
            return Err(null());
        }
        let ham = Observable::from_array([0, 1, 2, 3].map(|i| h.add(i).read()));
        let cfg = EvolutionConfig::uniform(hbar, t_max, steps)?;
        let flavors = neutrino_oscillation(&ham, &cfg).ok();
        let rows = evolve(&ham, &cfg)
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                let f = flavors.as_ref().map(|v| v[i]);
                G3Sample {
                    t: s.t,
                    ket: s.ket.into(),
                    a_hat: s.a_hat.into(),
                    has_flavor: i32::from(f.is_some()),
                    p_e: f.map_or(f64::NAN, |f| f.p_electron),
                    p_mu: f.map_or(f64::NAN, |f| f.p_muon),
                }
            })
            .collect();
        out.write(Box::into_raw(Box::new(G3Trajectory { rows })));
        Ok(())
    })
}

/// Number of rows, or 0 for NULL.
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn g3_trajectory_len(t: *const G3Trajectory) -> usize {
    t.as_ref().map_or(0, |t| t.rows.len())
}

/// # Safety
/// `t` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn g3_trajectory_get(t: *const G3Trajectory, index: usize, out: *mut G3Sample) -> G3Status {
    guard(|| {
        let t = t.as_ref().ok_or_else(null)?;
        let row = t.rows.get(index).copied().ok_or_else(|| {
            Failure(G3Status::OutOfRange, format!("index {index} out of range for {} rows", t.rows.len()))
        })?;
        write(out, row)
    })
}

/// Releases a handle from [`g3_evolve`]. NULL is ignored.
///
/// # Safety
/// `t` must be NULL or an unreleased handle.
#[no_mangle]
pub unsafe extern "C" fn g3_trajectory_free(t: *mut G3Trajectory) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Runs the property suites; writes 1 to `passed` when every suite passes.
///
/// # Safety
/// `passed` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn g3_verify(seed: u64, trials: usize, passed: *mut i32) -> G3Status {
    guard(|| {
        let report = verify::run(&VerifyConfig::new(seed, trials))?;
        write(passed, i32::from(report.passed()))
    })
}

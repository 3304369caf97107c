//! Idempotents, ket-spinors and their geometry on the Riemann sphere.
//!
//! A ket-spinor is the element `|a> = sqrt2 (a0 + a1 e1) u+` of the minimal
//! left ideal `G3 u+`; it corresponds to the Pauli column `(a0, a1)`. When
//! `a0 != 0` it factors as `sqrt2 a0 m u+` with `m = x e1 + y e2 + e3`,
//! `x + iy = a1/a0`, and the unit vector `a = m e3 m / m^2` is the point on
//! the sphere whose stereographic image from the south pole is `x + iy`.

use std::f64::consts::{SQRT_2, TAU};

use serde::{Deserialize, Serialize};

use crate::complex::ComplexScalar;
use crate::error::{GaError, Result};
use crate::matrix::to_matrix;
use crate::multivector::Multivector;
use crate::tol;
use crate::vector::Vector3;

/// `s = (1 + m + i n) / 2` with `m^2 - n^2 = 1` and `m . n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Idempotent {
    m: Vector3,
    n: Vector3,
}

impl Idempotent {
    pub fn m(&self) -> Vector3 {
        self.m
    }

    pub fn n(&self) -> Vector3 {
        self.n
    }

    pub fn embed(&self) -> Multivector {
        (Multivector::ONE + self.m.embed() + Multivector::I * self.n.embed()) * 0.5
    }
}

/// Checks the idempotent conditions and returns the validated element.
pub fn make_idempotent(m: Vector3, n: Vector3) -> Result<Idempotent> {
    let norm_residual = m.norm_sqr() - n.norm_sqr() - 1.0;
    if norm_residual.abs() > tol::CONSTRAINT {
        return Err(GaError::ConstraintViolated {
            what: "m^2 - n^2 = 1",
            residual: norm_residual,
        });
    }
    let dot = m.dot(n);
    if dot.abs() > tol::CONSTRAINT {
        return Err(GaError::ConstraintViolated {
            what: "m . n = 0",
            residual: dot,
        });
    }
    Ok(Idempotent { m, n })
}

/// `a+ = (1 + a) / 2` for a unit vector `a`.
pub fn simple_idempotent(a_hat: Vector3) -> Result<Idempotent> {
    let a_hat = a_hat.require_unit()?;
    Ok(Idempotent {
        m: a_hat,
        n: Vector3::ZERO,
    })
}

/// `s = msq * a+ * b+`, the factorization of a general idempotent into a
/// product of simple ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Factorization {
    /// `m^2`, which also equals `2 / (1 + a.b)`.
    pub msq: f64,
    pub a_hat: Vector3,
    pub b_hat: Vector3,
}

impl Factorization {
    pub fn product(&self) -> Multivector {
        let a = (Multivector::ONE + self.a_hat.embed()) * 0.5;
        let b = (Multivector::ONE + self.b_hat.embed()) * 0.5;
        a * b * self.msq
    }
}

pub fn factor_idempotent(s: &Idempotent) -> Factorization {
    let msq = s.m.norm_sqr();
    let len = msq.sqrt();
    let m_hat = s.m.scale(1.0 / len);
    // b = (m + i m n) / |m|, and i m n = -(m x n) because m is orthogonal to n.
    let b_hat = (m_hat - m_hat.cross(s.n)).scale(1.0 / len);
    // a = m b m, the reflection of b through the line of m.
    let a_hat = m_hat.scale(2.0 * m_hat.dot(b_hat)) - b_hat;
    Factorization { msq, a_hat, b_hat }
}

/// `m + i n = m_hat cosh(phi) + i n_hat sinh(phi)`, a boost of `m_hat`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Boost {
    pub phi: f64,
    pub m_hat: Vector3,
    pub n_hat: Vector3,
    /// Set when `n = 0`; `n_hat` is then an arbitrary unit vector orthogonal to `m_hat`.
    pub n_hat_arbitrary: bool,
}

impl Boost {
    /// Spin velocity `v/c = -(m_hat x n_hat) tanh(phi)`.
    pub fn spin_velocity(&self) -> Vector3 {
        -self.m_hat.cross(self.n_hat).scale(self.phi.tanh())
    }

    /// `exp(-phi/2 i m n) m exp(phi/2 i m n)`, which equals `m + i n`.
    pub fn reconstruct(&self) -> Result<Multivector> {
        let gen = Multivector::I * self.m_hat.embed() * self.n_hat.embed() * (0.5 * self.phi);
        let left = (-gen).exp(1e-16)?;
        let right = gen.exp(1e-16)?;
        Ok(left * self.m_hat.embed() * right)
    }
}

pub fn boost_decomposition(s: &Idempotent) -> Boost {
    let m_hat = s.m.normalized().expect("idempotent m has |m| >= 1");
    let n_len = s.n.norm();
    if n_len <= tol::ZERO {
        return Boost {
            phi: 0.0,
            m_hat,
            n_hat: any_perpendicular(m_hat),
            n_hat_arbitrary: true,
        };
    }
    Boost {
        phi: n_len.asinh(),
        m_hat,
        n_hat: s.n.scale(1.0 / n_len),
        n_hat_arbitrary: false,
    }
}

fn any_perpendicular(u: Vector3) -> Vector3 {
    let axis = if u.x.abs() <= u.y.abs() && u.x.abs() <= u.z.abs() {
        Vector3::E1
    } else if u.y.abs() <= u.z.abs() {
        Vector3::E2
    } else {
        Vector3::E3
    };
    u.cross(axis).normalized().expect("axis chosen away from u")
}

/// Pauli column `(a0, a1)`, standing for `sqrt2 (a0 + a1 e1) u+`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct KetSpinor {
    pub a0: ComplexScalar,
    pub a1: ComplexScalar,
}

impl KetSpinor {
    pub const fn new(a0: ComplexScalar, a1: ComplexScalar) -> Self {
        Self { a0, a1 }
    }

    /// `|0> = sqrt2 u+`.
    pub const fn zero_state() -> Self {
        Self::new(ComplexScalar::ONE, ComplexScalar::ZERO)
    }

    /// `|1> = sqrt2 e1 u+`.
    pub const fn one_state() -> Self {
        Self::new(ComplexScalar::ZERO, ComplexScalar::ONE)
    }

    pub fn from_parts(re0: f64, im0: f64, re1: f64, im1: f64) -> Self {
        Self::new(ComplexScalar::new(re0, im0), ComplexScalar::new(re1, im1))
    }

    /// The ideal element `sqrt2 (a0 + a1 e1) u+`.
    pub fn embed(&self) -> Multivector {
        let body = Multivector::from_complex(self.a0) + Multivector::e1() * self.a1;
        body * Multivector::u_plus() * SQRT_2
    }

    /// Reads a left-ideal element back as a ket: the first column of its
    /// matrix, divided by `sqrt2`.
    pub fn from_ideal(g: &Multivector) -> Self {
        let [a0, a1] = to_matrix(g).column(0);
        Self::new(a0 / SQRT_2, a1 / SQRT_2)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a0.norm_sqr() + self.a1.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, z: ComplexScalar) -> Self {
        Self::new(self.a0 * z, self.a1 * z)
    }

    pub fn normalized(&self) -> Result<Self> {
        let rho = self.norm();
        if rho <= tol::ZERO {
            return Err(GaError::ZeroSpinor);
        }
        Ok(self.scale(ComplexScalar::real(1.0 / rho)))
    }

    pub fn require_normalized(&self) -> Result<()> {
        let norm = self.norm();
        if (norm - 1.0).abs() < tol::CONSTRAINT {
            Ok(())
        } else {
            Err(GaError::NotNormalized { norm })
        }
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let d0 = self.a0 - rhs.a0;
        let d1 = self.a1 - rhs.a1;
        [d0.re, d0.im, d1.re, d1.im]
            .iter()
            .fold(0.0, |m: f64, x| m.max(x.abs()))
    }

    pub fn components(&self) -> [f64; 4] {
        [self.a0.re, self.a0.im, self.a1.re, self.a1.im]
    }
}

pub fn ket_from_complex(a0: ComplexScalar, a1: ComplexScalar) -> KetSpinor {
    KetSpinor::new(a0, a1)
}

/// `m = x e1 + y e2 + e3` with `x + iy = a1 / a0`.
pub fn m_from_ket(k: &KetSpinor) -> Result<Vector3> {
    if k.a0.abs() <= tol::ZERO {
        return Err(GaError::ZeroAlpha0);
    }
    let z = k.a1 / k.a0;
    Ok(Vector3::new(z.re, z.im, 1.0))
}

/// The idempotent `s = (1 + z e1) u+`, i.e. `m = x e1 + y e2 + e3` and
/// `i n = m ^ e3`.
pub fn idempotent_from_ket(k: &KetSpinor) -> Result<Idempotent> {
    let m = m_from_ket(k)?;
    Ok(Idempotent {
        m,
        n: m.cross(Vector3::E3),
    })
}

/// The point `a = m e3 m / m^2` on the unit sphere, in the closed form
/// `((conj(a0) a1 + a0 conj(a1)) e1 + 2 Im(a1 conj(a0)) e2 + (|a0|^2 - |a1|^2) e3) / rho^2`.
pub fn a_hat_from_ket(k: &KetSpinor) -> Result<Vector3> {
    let rho2 = k.norm_sqr();
    if rho2.sqrt() <= tol::ZERO {
        return Err(GaError::ZeroSpinor);
    }
    let cross = k.a1 * k.a0.conj();
    Ok(Vector3::new(
        2.0 * cross.re,
        2.0 * cross.im,
        k.a0.norm_sqr() - k.a1.norm_sqr(),
    )
    .scale(1.0 / rho2))
}

/// Orthogonal projection of `m` onto the e1e2-plane.
pub fn stereographic_project(m: Vector3) -> (f64, f64) {
    (m.x, m.y)
}

/// `z = (a1 + i a2) / (1 + a3)`, the stereographic image from the south pole.
pub fn inverse_stereographic(a_hat: Vector3) -> Result<ComplexScalar> {
    let denom = 1.0 + a_hat.z;
    if denom <= tol::ZERO {
        return Err(GaError::SouthPole);
    }
    Ok(ComplexScalar::new(a_hat.x / denom, a_hat.y / denom))
}

/// For `m = x + e3`, the vector `m_perp = -1/x + e3`, which is orthogonal to `m`.
pub fn perp_vector(m: Vector3) -> Result<Vector3> {
    let off = m.z - 1.0;
    if off.abs() > tol::CONSTRAINT {
        return Err(GaError::ConstraintViolated {
            what: "m = x + e3",
            residual: off,
        });
    }
    let x = Vector3::new(m.x, m.y, 0.0);
    let x2 = x.norm_sqr();
    if x2.sqrt() <= tol::ZERO {
        return Err(GaError::DegenerateX);
    }
    Ok(x.scale(-1.0 / x2) + Vector3::E3)
}

/// Sesquilinear product `conj(a0) b0 + conj(a1) b1`.
pub fn inner_product(a: &KetSpinor, b: &KetSpinor) -> ComplexScalar {
    a.a0.conj() * b.a0 + a.a1.conj() * b.a1
}

pub fn norm(a: &KetSpinor) -> f64 {
    a.norm()
}

/// `|a><a| / 2` for a normalized ket, computed as a geometric product; it
/// equals the simple idempotent of `a_hat_from_ket(k)`.
pub fn ket_bra(k: &KetSpinor) -> Result<Multivector> {
    k.require_normalized()?;
    let ket = k.embed();
    Ok(ket * ket.reverse() * 0.5)
}

/// Parameters of `|a> = sqrt2 rho e^{i theta} m u+ = sqrt2 rho e^{i c omega} u+`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub rho: f64,
    /// In `[0, 2pi)`.
    pub theta: f64,
    pub m_hat: Vector3,
    pub a_hat: Vector3,
    /// Angle between `m_hat` and `e3`; `e^{i v phi} = m_hat e3`.
    pub phi: f64,
    pub v_hat: Vector3,
    /// In `[0, pi]`, with `cos(omega)` equal to the real part of the normalized `a0`.
    pub omega: f64,
    pub c_hat: Vector3,
    /// `a0 = 0`: theta is undefined and reported as 0.
    pub theta_degenerate: bool,
    /// `m_hat = e3`: `v_hat` is arbitrary (reported as `e1`) since `sin(phi) = 0`.
    pub v_hat_degenerate: bool,
    /// `sin(omega) = 0`: `c_hat` is arbitrary (reported as `e3`).
    pub c_hat_degenerate: bool,
}

impl CanonicalForm {
    /// The four equivalent expressions
    /// `sqrt2 rho e^{i theta} m u+`, `sqrt2 rho e^{i(theta + v phi)} u+`,
    /// `sqrt2 rho e^{i v phi} e^{i e3 theta} u+` and `sqrt2 rho e^{i c omega} u+`.
    pub fn reconstructions(&self) -> Result<[Multivector; 4]> {
        let i = Multivector::I;
        let up = Multivector::u_plus();
        let k = SQRT_2 * self.rho;
        let phase = ComplexScalar::cis(self.theta);
        let v_phi = i * self.v_hat.embed() * self.phi;
        let e3_theta = i * Multivector::e3() * self.theta;
        let first = Multivector::from_complex(phase) * self.m_hat.embed() * up * k;
        let second = (Multivector::from_complex(ComplexScalar::new(0.0, self.theta)) + v_phi)
            .exp(1e-16)?
            * up
            * k;
        let third = v_phi.exp(1e-16)? * e3_theta.exp(1e-16)? * up * k;
        let fourth = (i * self.c_hat.embed() * self.omega).exp(1e-16)? * up * k;
        Ok([first, second, third, fourth])
    }

    /// The unit spinor operator `e^{i c omega}`.
    pub fn rotor(&self) -> Multivector {
        Multivector::scalar(self.omega.cos()) + Multivector::I * self.c_hat.embed() * self.omega.sin()
    }
}

pub fn canonical_form(k: &KetSpinor) -> Result<CanonicalForm> {
    let rho = k.norm();
    if rho <= tol::ZERO {
        return Err(GaError::ZeroSpinor);
    }
    let [x0, y0, x1, y1] = k.normalized()?.components();
    let r0 = x0.hypot(y0);

    let theta_degenerate = r0 <= tol::ZERO;
    let theta = if theta_degenerate {
        0.0
    } else {
        let t = y0.atan2(x0).rem_euclid(TAU);
        // rem_euclid can round a tiny negative angle up to exactly TAU
        if t >= TAU {
            0.0
        } else {
            t
        }
    };
    let (sin_t, cos_t) = theta.sin_cos();
    // With a0 = r0 e^{i theta} this is ((x0 x1 + y0 y1)/r0, (x0 y1 - x1 y0)/r0, r0),
    // and it stays valid on the equator where a0 = 0.
    let m_hat = Vector3::new(x1 * cos_t + y1 * sin_t, y1 * cos_t - x1 * sin_t, r0);
    let a_hat = m_hat.scale(2.0 * m_hat.z) - Vector3::E3;

    let m_cross = m_hat.cross(Vector3::E3);
    let sin_phi = m_cross.norm();
    let phi = sin_phi.atan2(m_hat.z.clamp(-1.0, 1.0));
    let v_hat_degenerate = sin_phi <= tol::ZERO;
    let v_hat = if v_hat_degenerate {
        Vector3::E1
    } else {
        m_cross.scale(1.0 / sin_phi)
    };

    let c_raw = Vector3::new(y1, -x1, y0);
    let sin_omega = c_raw.norm();
    let omega = sin_omega.atan2(x0);
    let c_hat_degenerate = sin_omega <= tol::ZERO;
    let c_hat = if c_hat_degenerate {
        Vector3::E3
    } else {
        c_raw.scale(1.0 / sin_omega)
    };

    Ok(CanonicalForm {
        rho,
        theta,
        m_hat,
        a_hat,
        phi,
        v_hat,
        omega,
        c_hat,
        theta_degenerate,
        v_hat_degenerate,
        c_hat_degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn u_plus_from_e3() {
        let s = make_idempotent(Vector3::E3, Vector3::ZERO).unwrap();
        assert_eq!(s.embed(), Multivector::u_plus());
    }

    #[test]
    fn boosted_idempotent_squares_to_itself() {
        let s = make_idempotent(Vector3::E3.scale(1f64.cosh()), Vector3::E1.scale(1f64.sinh())).unwrap();
        let g = s.embed();
        assert!((g * g).max_abs_diff(&g) < 1e-12);
    }

    #[test]
    fn constraint_violations() {
        let err = make_idempotent(Vector3::E3, Vector3::E1).unwrap_err();
        assert!(matches!(err, GaError::ConstraintViolated { what: "m^2 - n^2 = 1", .. }));
        let err = make_idempotent(Vector3::new(1.0, 0.0, 1.0), Vector3::new(1.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, GaError::ConstraintViolated { what: "m . n = 0", .. }));
    }

    #[test]
    fn factor_u_plus() {
        let f = factor_idempotent(&make_idempotent(Vector3::E3, Vector3::ZERO).unwrap());
        assert_eq!(f.msq, 1.0);
        assert_eq!(f.a_hat, Vector3::E3);
        assert_eq!(f.b_hat, Vector3::E3);
    }

    #[test]
    fn factor_of_z_one_spinor() {
        let s = idempotent_from_ket(&KetSpinor::from_parts(1.0, 0.0, 1.0, 0.0)).unwrap();
        assert_eq!(s.m(), Vector3::new(1.0, 0.0, 1.0));
        let f = factor_idempotent(&s);
        assert!((f.msq - 2.0).abs() < 1e-15);
        assert!(f.a_hat.max_abs_diff(Vector3::E1) < 1e-15);
        // ket-derived idempotents are m u+ = m^2 a+ u+, so b = e3
        assert!(f.b_hat.max_abs_diff(Vector3::E3) < 1e-15);
        assert!(f.product().max_abs_diff(&s.embed()) < 1e-10);
    }

    #[test]
    fn simple_idempotent_requires_unit() {
        assert_eq!(simple_idempotent(Vector3::E3).unwrap().embed(), Multivector::u_plus());
        assert!(matches!(simple_idempotent(Vector3::new(1.0, 1.0, 0.0)), Err(GaError::NotUnit { .. })));
    }

    #[test]
    fn boost_of_u_plus_is_at_rest() {
        let b = boost_decomposition(&make_idempotent(Vector3::E3, Vector3::ZERO).unwrap());
        assert_eq!(b.phi, 0.0);
        assert!(b.n_hat_arbitrary);
        assert_eq!(b.spin_velocity().norm(), 0.0);
        assert!(b.n_hat.dot(b.m_hat).abs() < 1e-15);
    }

    #[test]
    fn boost_rapidity_one() {
        let s = make_idempotent(Vector3::E3.scale(1f64.cosh()), Vector3::E1.scale(1f64.sinh())).unwrap();
        let b = boost_decomposition(&s);
        assert!((b.phi - 1.0).abs() < 1e-14);
        assert!((b.spin_velocity().norm() - 0.761_594_155_955_764_9).abs() < 1e-14);
        let want = s.m().embed() + Multivector::I * s.n().embed();
        assert!(b.reconstruct().unwrap().max_abs_diff(&want) < 1e-10);
    }

    #[test]
    fn idempotent_from_basic_kets() {
        let s = idempotent_from_ket(&KetSpinor::zero_state()).unwrap();
        assert_eq!(s.m(), Vector3::E3);
        assert_eq!(s.embed(), Multivector::u_plus());
        let s = idempotent_from_ket(&KetSpinor::from_parts(1.0, 0.0, 2.5, 0.0)).unwrap();
        assert_eq!(s.m(), Vector3::new(2.5, 0.0, 1.0));
        assert_eq!(idempotent_from_ket(&KetSpinor::one_state()), Err(GaError::ZeroAlpha0));
    }

    #[test]
    fn a_hat_examples() {
        assert_eq!(a_hat_from_ket(&KetSpinor::zero_state()).unwrap(), Vector3::E3);
        assert_eq!(a_hat_from_ket(&KetSpinor::from_parts(1.0, 0.0, 1.0, 0.0)).unwrap(), Vector3::E1);
        assert_eq!(a_hat_from_ket(&KetSpinor::default()), Err(GaError::ZeroSpinor));
    }

    #[test]
    fn a_hat_on_the_xz_great_circle() {
        let x1 = 0.7;
        let a = a_hat_from_ket(&KetSpinor::from_parts(1.0, 0.0, x1, 0.0)).unwrap();
        let want = Vector3::new(2.0 * x1, 0.0, 1.0 - x1 * x1).scale(1.0 / (1.0 + x1 * x1));
        assert!(a.max_abs_diff(want) < 1e-15);
    }

    #[test]
    fn stereographic_examples() {
        assert_eq!(inverse_stereographic(Vector3::E3).unwrap(), ComplexScalar::ZERO);
        assert_eq!(inverse_stereographic(Vector3::E1).unwrap(), ComplexScalar::ONE);
        assert_eq!(inverse_stereographic(-Vector3::E3), Err(GaError::SouthPole));
        assert_eq!(stereographic_project(Vector3::new(0.3, -0.4, 1.0)), (0.3, -0.4));
    }

    #[test]
    fn projection_point_lies_on_ray_from_south_pole() {
        let k = KetSpinor::from_parts(0.6, 0.2, -0.3, 0.9);
        let m = m_from_ket(&k).unwrap();
        let a = a_hat_from_ket(&k).unwrap();
        let (x, y) = stereographic_project(m);
        let t = m.norm_sqr() / 2.0;
        let on_ray = (a + Vector3::E3).scale(t) - Vector3::E3;
        assert!(on_ray.max_abs_diff(Vector3::new(x, y, 0.0)) < 1e-14);
    }

    #[test]
    fn perp_vector_cases() {
        let x1 = 1.7;
        let p = perp_vector(Vector3::new(x1, 0.0, 1.0)).unwrap();
        assert!(p.max_abs_diff(Vector3::new(-1.0 / x1, 0.0, 1.0)) < 1e-15);
        let m = Vector3::new(0.4, -1.3, 1.0);
        assert!(m.dot(perp_vector(m).unwrap()).abs() < 1e-14);
        assert_eq!(perp_vector(Vector3::E3), Err(GaError::DegenerateX));
        assert!(matches!(perp_vector(Vector3::new(1.0, 0.0, 2.0)), Err(GaError::ConstraintViolated { .. })));
    }

    #[test]
    fn inner_product_of_zero_state() {
        let z = KetSpinor::zero_state();
        assert_eq!(inner_product(&z, &z), ComplexScalar::ONE);
        assert_eq!(inner_product(&z, &KetSpinor::one_state()), ComplexScalar::ZERO);
        assert_eq!(z.embed(), Multivector::u_plus() * SQRT_2);
    }

    #[test]
    fn canonical_form_of_zero_state() {
        let f = canonical_form(&KetSpinor::zero_state()).unwrap();
        assert_eq!(f.rho, 1.0);
        assert_eq!(f.theta, 0.0);
        assert_eq!(f.m_hat, Vector3::E3);
        assert_eq!(f.omega, 0.0);
        assert!(f.c_hat_degenerate && f.v_hat_degenerate && !f.theta_degenerate);
        for r in f.reconstructions().unwrap() {
            assert!(r.max_abs_diff(&KetSpinor::zero_state().embed()) < 1e-12);
        }
    }

    #[test]
    fn canonical_form_with_vanishing_a0() {
        let k = KetSpinor::new(c(0.0, 0.0), c(0.6, 0.8));
        let f = canonical_form(&k).unwrap();
        assert!(f.theta_degenerate);
        assert_eq!(f.theta, 0.0);
        assert!((f.phi - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(f.a_hat.max_abs_diff(-Vector3::E3) < 1e-15);
        for r in f.reconstructions().unwrap() {
            assert!(r.max_abs_diff(&k.embed()) < 1e-12);
        }
        assert_eq!(canonical_form(&KetSpinor::default()), Err(GaError::ZeroSpinor));
    }

    #[test]
    fn canonical_form_of_unnormalized_ket() {
        let k = KetSpinor::new(c(-1.2, 0.4), c(0.3, -2.0));
        let f = canonical_form(&k).unwrap();
        assert!((f.rho - k.norm()).abs() < 1e-15);
        assert!(f.theta >= 0.0 && f.theta < TAU);
        for r in f.reconstructions().unwrap() {
            assert!(r.max_abs_diff(&k.embed()) < 1e-12);
        }
    }

    #[test]
    fn ket_bra_examples() {
        let k = KetSpinor::zero_state();
        assert!(ket_bra(&k).unwrap().max_abs_diff(&Multivector::u_plus()) < 1e-15);
        let k = KetSpinor::from_parts(FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0);
        let want = (Multivector::ONE + Multivector::e1()) * 0.5;
        assert!(ket_bra(&k).unwrap().max_abs_diff(&want) < 1e-15);
        assert!(matches!(
            ket_bra(&KetSpinor::from_parts(1.0, 0.0, 1.0, 0.0)),
            Err(GaError::NotNormalized { .. })
        ));
    }

    #[test]
    fn from_ideal_inverts_embed() {
        let k = KetSpinor::from_parts(0.1, -0.7, 1.3, 0.25);
        assert!(KetSpinor::from_ideal(&k.embed()).max_abs_diff(&k) < 1e-15);
        let g = k.embed();
        assert!((g * Multivector::u_plus()).max_abs_diff(&g) < 1e-15);
    }
}

//! Cartan's null complex vectors and spinor operators.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::complex::ComplexScalar;
use crate::error::{GaError, Result};
use crate::matrix::{to_matrix, Matrix2C};
use crate::multivector::Multivector;
use crate::spinor::{canonical_form, KetSpinor};
use crate::tol;

/// `N = z1 e1 + z2 e2 + z3 e3` with `z1^2 + z2^2 + z3^2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NullVector {
    pub z: [ComplexScalar; 3],
}

impl NullVector {
    /// Validates the null condition (absolute or relative to `|z|^2`).
    pub fn new(z: [ComplexScalar; 3]) -> Result<Self> {
        let n = Self { z };
        let residual = n.quadratic_residual();
        let scale = z.iter().map(|c| c.norm_sqr()).sum::<f64>().max(1.0);
        if residual > tol::CONSTRAINT * scale {
            return Err(GaError::NotNull { residual });
        }
        Ok(n)
    }

    /// `|z1^2 + z2^2 + z3^2|`.
    pub fn quadratic_residual(&self) -> f64 {
        self.z
            .iter()
            .fold(ComplexScalar::ZERO, |acc, &c| acc + c * c)
            .abs()
    }

    pub fn embed(&self) -> Multivector {
        Multivector::complex_vector(self.z)
    }

    /// Reads the complex vector part of a multivector.
    pub fn from_multivector(g: &Multivector) -> Result<Self> {
        let [_, z1, z2, z3] = g.complex_coords();
        Self::new([z1, z2, z3])
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.embed().max_abs_diff(&rhs.embed())
    }
}

/// `N = (a0^2 - a1^2) e1 + (a0^2 + a1^2) i e2 - 2 a0 a1 e3`.
pub fn cartan_null(k: &KetSpinor) -> NullVector {
    let (a0, a1) = (k.a0, k.a1);
    let (p, q) = (a0 * a0, a1 * a1);
    NullVector {
        z: [p - q, ComplexScalar::I * (p + q), -(a0 * a1) * 2.0],
    }
}

/// The same vector computed as the product `|a> e1 |a>*` with Clifford conjugation.
pub fn cartan_null_product(k: &KetSpinor) -> Multivector {
    let ket = k.embed();
    ket * Multivector::e1() * ket.clifford_conjugation()
}

/// Both spinors `±(a0, a1)` whose null vector is `n`:
/// `a0 = sqrt((z1 - i z2)/2)`, `a1 = ±i sqrt((z1 + i z2)/2)` with the sign
/// of `a1` fixed by `-2 a0 a1 = z3`.
pub fn cartan_inverse(n: &NullVector) -> Result<(KetSpinor, KetSpinor)> {
    let n = NullVector::new(n.z)?;
    let [z1, z2, z3] = n.z;
    let i = ComplexScalar::I;
    let a0 = ((z1 - i * z2) / 2.0).sqrt();
    let a1 = i * ((z1 + i * z2) / 2.0).sqrt();
    let miss = |a1: ComplexScalar| (-(a0 * a1) * 2.0 - z3).abs();
    let a1 = if miss(a1) <= miss(-a1) { a1 } else { -a1 };
    let k = KetSpinor::new(a0, a1);
    Ok((k, k.scale(-ComplexScalar::ONE)))
}

/// The null vector written through the canonical parameters of `k`:
/// `-2 rho^2 e^{2i theta} a+ m e1 m` and `-rho^2 e^{2i theta} m (e1 + i e2) m`.
pub fn null_canonical_forms(k: &KetSpinor) -> Result<(Multivector, Multivector)> {
    if k.a0.abs() <= tol::ZERO {
        return Err(GaError::ZeroAlpha0);
    }
    let f = canonical_form(k)?;
    let phase = ComplexScalar::cis(2.0 * f.theta) * (-f.rho * f.rho);
    let m = f.m_hat.embed();
    let e1 = Multivector::e1();
    let a_plus = (Multivector::ONE + f.a_hat.embed()) * 0.5;
    let form_a = a_plus * m * e1 * m * phase * 2.0;
    let null_e1 = e1 + Multivector::I * Multivector::e2();
    let form_b = m * null_e1 * m * phase;
    Ok((form_a, form_b))
}

/// `psi = (|a> + grade_involution(|a>)) / sqrt2 = (a0 + a1 e1) u+ + (conj a0 - conj a1 e1) u-`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinorOperator {
    pub psi: Multivector,
}

impl SpinorOperator {
    /// `[[a0, -conj a1], [a1, conj a0]]`.
    pub fn matrix(&self) -> Matrix2C {
        to_matrix(&self.psi)
    }

    pub fn det(&self) -> ComplexScalar {
        self.matrix().det()
    }

    /// `psi psi^dagger`; equal to `rho^2` for a ket of norm `rho`.
    pub fn norm_product(&self) -> Multivector {
        self.psi * self.psi.reverse()
    }

    /// Two-sided action `psi g psi^dagger`.
    pub fn act(&self, g: &Multivector) -> Multivector {
        self.psi * *g * self.psi.reverse()
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self {
            psi: self.psi * rhs.psi,
        }
    }

    /// `psi sqrt2 u+`, which recovers the ket as an ideal element.
    pub fn ket(&self) -> KetSpinor {
        KetSpinor::from_ideal(&(self.psi * Multivector::u_plus() * std::f64::consts::SQRT_2))
    }
}

pub fn spinor_operator(k: &KetSpinor) -> SpinorOperator {
    let ket = k.embed();
    SpinorOperator {
        psi: (ket + ket.grade_involution()) * FRAC_1_SQRT_2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::a_hat_from_ket;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn e1_plus_ie2() -> NullVector {
        NullVector::new([ComplexScalar::ONE, ComplexScalar::I, ComplexScalar::ZERO]).unwrap()
    }

    #[test]
    fn null_of_zero_state() {
        let n = cartan_null(&KetSpinor::zero_state());
        assert_eq!(n, e1_plus_ie2());
        assert!(cartan_null_product(&KetSpinor::zero_state()).max_abs_diff(&n.embed()) < 1e-15);
    }

    #[test]
    fn product_path_matches_closed_form() {
        let k = KetSpinor::new(c(0.3, -1.1), c(0.8, 0.45));
        let n = cartan_null(&k);
        assert!(n.quadratic_residual() < 1e-14);
        assert!(cartan_null_product(&k).max_abs_diff(&n.embed()) < 1e-14);
    }

    #[test]
    fn inverse_of_e1_plus_ie2() {
        let (p, m) = cartan_inverse(&e1_plus_ie2()).unwrap();
        assert!(p.max_abs_diff(&KetSpinor::zero_state()) < 1e-15);
        assert!(m.max_abs_diff(&KetSpinor::zero_state().scale(-ComplexScalar::ONE)) < 1e-15);
    }

    #[test]
    fn inverse_when_a0_vanishes() {
        let k = KetSpinor::new(ComplexScalar::ZERO, c(0.6, -0.8));
        let n = cartan_null(&k);
        // z1 = i z2 on this branch
        assert!((n.z[0] - ComplexScalar::I * n.z[1]).abs() < 1e-15);
        let (p, m) = cartan_inverse(&n).unwrap();
        let ok = p.max_abs_diff(&k) < 1e-12 || m.max_abs_diff(&k) < 1e-12;
        assert!(ok, "{p:?} {m:?}");
        assert!(cartan_null(&p).max_abs_diff(&n) < 1e-12);
    }

    #[test]
    fn inverse_rejects_non_null() {
        let n = NullVector { z: [ComplexScalar::ONE, ComplexScalar::ZERO, ComplexScalar::ZERO] };
        assert!(matches!(cartan_inverse(&n), Err(GaError::NotNull { .. })));
    }

    #[test]
    fn canonical_forms_of_zero_state() {
        let (a, b) = null_canonical_forms(&KetSpinor::zero_state()).unwrap();
        let want = e1_plus_ie2().embed();
        assert!(a.max_abs_diff(&want) < 1e-15);
        assert!(b.max_abs_diff(&want) < 1e-15);
        assert_eq!(null_canonical_forms(&KetSpinor::one_state()), Err(GaError::ZeroAlpha0));
    }

    #[test]
    fn null_vector_scales_with_rho_squared() {
        let rho = 1.7;
        let (a, _) = null_canonical_forms(&KetSpinor::from_parts(rho, 0.0, 0.0, 0.0)).unwrap();
        assert!(a.max_abs_diff(&(e1_plus_ie2().embed() * (rho * rho))) < 1e-14);
    }

    #[test]
    fn remaining_null_forms_agree() {
        let k = KetSpinor::new(c(0.5, 0.5), c(-0.1, 0.7)).normalized().unwrap();
        let f = canonical_form(&k).unwrap();
        let n = cartan_null(&k).embed();
        let m = f.m_hat.embed();
        let e1 = Multivector::e1();
        let rho2 = f.rho * f.rho;
        let a_minus = (Multivector::ONE - f.a_hat.embed()) * 0.5;
        let a_plus = (Multivector::ONE + f.a_hat.embed()) * 0.5;
        let phase = ComplexScalar::cis(2.0 * f.theta);
        let right = m * e1 * m * a_minus * phase * (-2.0 * rho2);
        assert!(right.max_abs_diff(&n) < 1e-12);
        let rot = (Multivector::basis(6) * (2.0 * f.theta)).exp(1e-16).unwrap();
        let reflected = a_plus * m * rot * e1 * m * (-2.0 * rho2);
        assert!(reflected.max_abs_diff(&n) < 1e-12);
    }

    #[test]
    fn spinor_operator_of_zero_state_is_one() {
        let op = spinor_operator(&KetSpinor::zero_state());
        assert!(op.psi.max_abs_diff(&Multivector::ONE) < 1e-15);
    }

    #[test]
    fn spinor_operator_matrix_shape() {
        let k = KetSpinor::new(c(0.2, 0.9), c(-0.4, 0.1));
        let op = spinor_operator(&k);
        let want = Matrix2C::new([[k.a0, -k.a1.conj()], [k.a1, k.a0.conj()]]);
        assert!(op.matrix().max_abs_diff(&want) < 1e-15);
        assert!(op.det().approx_eq(ComplexScalar::real(k.norm_sqr()), 1e-15));
        assert!(op.ket().max_abs_diff(&k) < 1e-15);
    }

    #[test]
    fn spinor_operator_rotates_e3_to_a_hat() {
        let k = KetSpinor::new(c(0.2, 0.9), c(-0.4, 0.1)).normalized().unwrap();
        let op = spinor_operator(&k);
        let a = a_hat_from_ket(&k).unwrap();
        assert!(op.act(&Multivector::e3()).max_abs_diff(&a.embed()) < 1e-14);
        assert!(op.psi.max_abs_diff(&canonical_form(&k).unwrap().rotor()) < 1e-14);
    }
}

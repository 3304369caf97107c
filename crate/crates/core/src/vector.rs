//! Grade-1 elements `x e1 + y e2 + z e3`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GaError, Result};
use crate::multivector::Multivector;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    pub const E1: Self = Self::new(1.0, 0.0, 0.0);
    pub const E2: Self = Self::new(0.0, 1.0, 0.0);
    pub const E3: Self = Self::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, rhs: Self) -> f64 {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    /// Gibbs cross product.
    pub fn cross(self, rhs: Self) -> Self {
        Self::new(
            self.y * rhs.z - self.z * rhs.y,
            self.z * rhs.x - self.x * rhs.z,
            self.x * rhs.y - self.y * rhs.x,
        )
    }

    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }

    /// Unit vector along `self`; fails on the zero vector.
    pub fn normalized(self) -> Result<Self> {
        let n = self.norm();
        if n <= tol::ZERO {
            return Err(GaError::NotUnit { norm: n });
        }
        Ok(self.scale(1.0 / n))
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Errors with `NotUnit` unless `|self| = 1` within the constraint tolerance.
    pub fn require_unit(self) -> Result<Self> {
        if self.is_unit(tol::CONSTRAINT) {
            Ok(self)
        } else {
            Err(GaError::NotUnit { norm: self.norm() })
        }
    }

    pub fn max_abs_diff(self, rhs: Self) -> f64 {
        (self.x - rhs.x)
            .abs()
            .max((self.y - rhs.y).abs())
            .max((self.z - rhs.z).abs())
    }

    /// Embedding as a multivector.
    pub fn embed(self) -> Multivector {
        Multivector::vector(self.x, self.y, self.z)
    }
}

/// Symmetric inner product `(ab + ba) / 2`.
pub fn inner(a: Vector3, b: Vector3) -> f64 {
    a.dot(b)
}

/// Antisymmetric outer product `(ab - ba) / 2`, a bivector.
pub fn outer(a: Vector3, b: Vector3) -> Multivector {
    let ab = a.embed() * b.embed();
    let ba = b.embed() * a.embed();
    (ab - ba) * 0.5
}

pub fn cross(a: Vector3, b: Vector3) -> Vector3 {
    a.cross(b)
}

/// `a ^ b ^ c`, the trivector `(a . (b x c)) i`.
pub fn triple_wedge(a: Vector3, b: Vector3, c: Vector3) -> Multivector {
    outer(a, b).wedge(&c.embed())
}

impl Add for Vector3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vector3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vector3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Vector3> for f64 {
    type Output = Vector3;
    fn mul(self, rhs: Vector3) -> Vector3 {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_of_basis_vectors() {
        assert_eq!(inner(Vector3::E1, Vector3::E2), 0.0);
        assert_eq!(inner(Vector3::E1, Vector3::E1), 1.0);
    }

    #[test]
    fn outer_is_dual_to_cross() {
        let w = outer(Vector3::E1, Vector3::E2);
        assert_eq!(w, Multivector::basis(6));
        let dual = Multivector::I * Vector3::E3.embed();
        assert!(w.approx_eq(&dual, tol::EQ));
    }

    #[test]
    fn triple_wedge_cases() {
        assert!(triple_wedge(Vector3::E1, Vector3::E2, Vector3::E3).approx_eq(&Multivector::I, 0.0));
        assert!(triple_wedge(Vector3::E1, Vector3::E1, Vector3::E2).is_zero(0.0));
        assert!(triple_wedge(Vector3::E2, Vector3::E1, Vector3::E3).approx_eq(&-Multivector::I, 0.0));
    }

    #[test]
    fn cross_is_right_handed() {
        assert_eq!(Vector3::E1.cross(Vector3::E2), Vector3::E3);
        assert_eq!(Vector3::E2.cross(Vector3::E3), Vector3::E1);
        assert_eq!(Vector3::E3.cross(Vector3::E1), Vector3::E2);
    }

    #[test]
    fn normalized_rejects_zero() {
        assert!(matches!(Vector3::ZERO.normalized(), Err(GaError::NotUnit { .. })));
    }
}

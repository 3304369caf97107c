//! The spectral-basis isomorphism between G3 and 2×2 complex matrices.
//!
//! With `u± = (1 ± e3)/2`, every multivector is
//! `g = m00 u+ + m01 e1 u- + m10 e1 u+ + m11 u-`
//! for a unique matrix `[g] = (m_rc)` with entries in the centre `span{1, e123}`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::complex::ComplexScalar;
use crate::multivector::Multivector;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Matrix2C {
    pub m: [[ComplexScalar; 2]; 2],
}

impl Matrix2C {
    pub const fn new(m: [[ComplexScalar; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::diag(ComplexScalar::ONE, ComplexScalar::ONE)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn diag(a: ComplexScalar, d: ComplexScalar) -> Self {
        Self::new([[a, ComplexScalar::ZERO], [ComplexScalar::ZERO, d]])
    }

    /// Builds a matrix from real-valued rows, convenient for the Pauli set.
    pub fn from_parts(re: [[f64; 2]; 2], im: [[f64; 2]; 2]) -> Self {
        let mut m = [[ComplexScalar::ZERO; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                m[r][c] = ComplexScalar::new(re[r][c], im[r][c]);
            }
        }
        Self { m }
    }

    pub fn det(&self) -> ComplexScalar {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> ComplexScalar {
        self.m[0][0] + self.m[1][1]
    }

    /// Entrywise conjugate, transposed.
    pub fn conjugate_transpose(&self) -> Self {
        let m = &self.m;
        Self::new([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.conjugate_transpose()) <= tol
    }

    pub fn apply(&self, v: [ComplexScalar; 2]) -> [ComplexScalar; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    pub fn column(&self, c: usize) -> [ComplexScalar; 2] {
        [self.m[0][c], self.m[1][c]]
    }

    pub fn scale(&self, z: ComplexScalar) -> Self {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for x in row.iter_mut() {
                *x = *x * z;
            }
        }
        out
    }

    /// Largest absolute difference over the real and imaginary parts of all entries.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let e = self.m[r][c] - rhs.m[r][c];
                d = d.max(e.re.abs()).max(e.im.abs());
            }
        }
        d
    }
}

impl Add for Matrix2C {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for r in 0..2 {
            for c in 0..2 {
                out.m[r][c] += rhs.m[r][c];
            }
        }
        out
    }
}

impl Sub for Matrix2C {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Matrix2C {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ComplexScalar::ONE)
    }
}

impl Mul for Matrix2C {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.m[r][c] = self.m[r][0] * rhs.m[0][c] + self.m[r][1] * rhs.m[1][c];
            }
        }
        out
    }
}

/// `[g]`: with `g = a0 + a1 e1 + a2 e2 + a3 e3` over complex `a_k`,
/// `[g] = a0 I + a1 σ1 + a2 σ2 + a3 σ3`.
pub fn to_matrix(g: &Multivector) -> Matrix2C {
    let [a0, a1, a2, a3] = g.complex_coords();
    let i = ComplexScalar::I;
    Matrix2C::new([[a0 + a3, a1 - i * a2], [a1 + i * a2, a0 - a3]])
}

/// Inverse of [`to_matrix`], read off the spectral expansion
/// `m00 u+ + m01 e1 u- + m10 e1 u+ + m11 u-`.
pub fn from_matrix(mat: &Matrix2C) -> Multivector {
    let [[m00, m01], [m10, m11]] = mat.m;
    let up = Multivector::u_plus();
    let um = Multivector::u_minus();
    let e1 = Multivector::e1();
    up * m00 + (e1 * um) * m01 + (e1 * up) * m10 + um * m11
}

pub fn conjugate_transpose(mat: &Matrix2C) -> Matrix2C {
    mat.conjugate_transpose()
}

/// The Pauli matrices `[e1], [e2], [e3]`.
pub fn pauli() -> [Matrix2C; 3] {
    [
        Matrix2C::from_parts([[0.0, 1.0], [1.0, 0.0]], [[0.0; 2]; 2]),
        Matrix2C::from_parts([[0.0; 2]; 2], [[0.0, -1.0], [1.0, 0.0]]),
        Matrix2C::from_parts([[1.0, 0.0], [0.0, -1.0]], [[0.0; 2]; 2]),
    ]
}

/// Spectral basis `[u+, e1 u+, e1 u-, u-]`, the column on the right of
/// [`basis_change_table`].
pub fn spectral_basis() -> [Multivector; 4] {
    let up = Multivector::u_plus();
    let um = Multivector::u_minus();
    let e1 = Multivector::e1();
    [up, e1 * up, e1 * um, um]
}

/// Rows express `1, e1, e2, e3` over the spectral column `[u+, e1 u+, e1 u-, u-]`.
pub fn basis_change_table() -> [[ComplexScalar; 4]; 4] {
    let o = ComplexScalar::ZERO;
    let l = ComplexScalar::ONE;
    let i = ComplexScalar::I;
    [[l, o, o, l], [o, l, l, o], [o, i, -i, o], [l, o, o, -l]]
}

//! Multivectors of G3 and their products, involutions and exponential.
//!
//! Coefficients are stored over the standard basis in the fixed order
//! `[1, e1, e2, e3, e23, e13, e12, e123]`. The geometric product is driven by
//! an 8×8 `(index, sign)` table computed at compile time from `e_k^2 = 1` and
//! `e_j e_k = -e_k e_j`.

use std::fmt;
use std::ops::{Add, AddAssign, BitOr, BitXor, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::complex::ComplexScalar;
use crate::error::{GaError, Result};
use crate::tol;
use crate::vector::Vector3;

/// Display names of the basis blades in storage order.
pub const BASIS_NAMES: [&str; 8] = ["1", "e1", "e2", "e3", "e23", "e13", "e12", "e123"];

/// Grade of each storage slot.
pub const GRADE_OF: [usize; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

// Storage slot -> blade bitmask (bit k-1 set when e_k is a factor), and back.
const MASK_OF: [usize; 8] = [0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111];
const SLOT_OF: [usize; 8] = {
    let mut inv = [0usize; 8];
    let mut k = 0;
    while k < 8 {
        inv[MASK_OF[k]] = k;
        k += 1;
    }
    inv
};

/// Sign picked up when sorting the concatenated factors of two canonical
/// blades into canonical order. Every generator squares to +1, so no metric
/// factor enters.
const fn reorder_sign(a: usize, b: usize) -> i8 {
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `PRODUCT[j][k] = (slot, sign)` with `basis_j * basis_k = sign * basis_slot`.
pub const PRODUCT: [[(usize, i8); 8]; 8] = {
    let mut table = [[(0usize, 0i8); 8]; 8];
    let mut j = 0;
    while j < 8 {
        let mut k = 0;
        while k < 8 {
            let (a, b) = (MASK_OF[j], MASK_OF[k]);
            table[j][k] = (SLOT_OF[a ^ b], reorder_sign(a, b));
            k += 1;
        }
        j += 1;
    }
    table
};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Multivector {
    pub c: [f64; 8],
}

impl Multivector {
    pub const ZERO: Self = Self { c: [0.0; 8] };
    pub const ONE: Self = Self::scalar(1.0);
    /// The unit pseudoscalar `e123`.
    pub const I: Self = Self {
        c: [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    };

    pub const fn new(c: [f64; 8]) -> Self {
        Self { c }
    }

    pub const fn scalar(s: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = s;
        Self { c }
    }

    pub const fn vector(x: f64, y: f64, z: f64) -> Self {
        Self {
            c: [0.0, x, y, z, 0.0, 0.0, 0.0, 0.0],
        }
    }

    /// The basis blade stored in `slot` (see [`BASIS_NAMES`]).
    ///
    /// # Panics
    /// If `slot >= 8`.
    pub fn basis(slot: usize) -> Self {
        let mut c = [0.0; 8];
        c[slot] = 1.0;
        Self { c }
    }

    pub fn e1() -> Self {
        Self::basis(1)
    }
    pub fn e2() -> Self {
        Self::basis(2)
    }
    pub fn e3() -> Self {
        Self::basis(3)
    }

    /// `u+ = (1 + e3) / 2`.
    pub fn u_plus() -> Self {
        Self::new([0.5, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0])
    }

    /// `u- = (1 - e3) / 2`.
    pub fn u_minus() -> Self {
        Self::new([0.5, 0.0, 0.0, -0.5, 0.0, 0.0, 0.0, 0.0])
    }

    pub fn from_complex(z: ComplexScalar) -> Self {
        let mut c = [0.0; 8];
        c[0] = z.re;
        c[7] = z.im;
        Self { c }
    }

    /// `z1 e1 + z2 e2 + z3 e3` for complex coefficients; the imaginary parts
    /// land in the bivector slots through `i e1 = e23`, `i e2 = -e13`, `i e3 = e12`.
    pub fn complex_vector(z: [ComplexScalar; 3]) -> Self {
        Self::new([0.0, z[0].re, z[1].re, z[2].re, z[0].im, -z[1].im, z[2].im, 0.0])
    }

    /// Coefficients `[a0, a1, a2, a3]` with `self = sum a_k e_k`, `e0 = 1`,
    /// and complex `a_k`.
    pub fn complex_coords(&self) -> [ComplexScalar; 4] {
        let c = &self.c;
        [
            ComplexScalar::new(c[0], c[7]),
            ComplexScalar::new(c[1], c[4]),
            ComplexScalar::new(c[2], -c[5]),
            ComplexScalar::new(c[3], c[6]),
        ]
    }

    pub fn from_complex_coords(a: [ComplexScalar; 4]) -> Self {
        Self::new([a[0].re, a[1].re, a[2].re, a[3].re, a[1].im, -a[2].im, a[3].im, a[0].im])
    }

    /// The grade-0 plus grade-3 part, read as a complex scalar.
    pub fn complex_part(&self) -> ComplexScalar {
        ComplexScalar::new(self.c[0], self.c[7])
    }

    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    pub fn vector_part(&self) -> Vector3 {
        Vector3::new(self.c[1], self.c[2], self.c[3])
    }

    /// Vector `w` with bivector part `i w`.
    pub fn bivector_dual(&self) -> Vector3 {
        Vector3::new(self.c[4], -self.c[5], self.c[6])
    }

    /// Projection onto grade `k`; errors unless `0 <= k <= 3`.
    pub fn grade(&self, k: i64) -> Result<Self> {
        if !(0..=3).contains(&k) {
            return Err(GaError::GradeOutOfRange(k));
        }
        Ok(self.grade_part(k as usize))
    }

    pub(crate) fn grade_part(&self, k: usize) -> Self {
        let mut out = Self::ZERO;
        for (slot, g) in GRADE_OF.iter().enumerate() {
            if *g == k {
                out.c[slot] = self.c[slot];
            }
        }
        out
    }

    fn map_signs(&self, sign_by_grade: [f64; 4]) -> Self {
        let mut out = *self;
        for (slot, g) in GRADE_OF.iter().enumerate() {
            out.c[slot] *= sign_by_grade[*g];
        }
        out
    }

    /// Reverse `s + v + B + T -> s + v - B - T`.
    pub fn reverse(&self) -> Self {
        self.map_signs([1.0, 1.0, -1.0, -1.0])
    }

    /// Grade involution `s + v + B + T -> s - v + B - T`.
    pub fn grade_involution(&self) -> Self {
        self.map_signs([1.0, -1.0, 1.0, -1.0])
    }

    /// Clifford conjugation `s + v + B + T -> s - v - B + T`.
    pub fn clifford_conjugation(&self) -> Self {
        self.map_signs([1.0, -1.0, -1.0, 1.0])
    }

    pub fn geometric_product(&self, rhs: &Self) -> Self {
        let mut out = [0.0; 8];
        for (j, &a) in self.c.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (k, &b) in rhs.c.iter().enumerate() {
                let (slot, sign) = PRODUCT[j][k];
                out[slot] += f64::from(sign) * a * b;
            }
        }
        Self { c: out }
    }

    /// Sum over grade pairs of `<A_r B_s>_|r-s|`.
    ///
    /// For vectors this is the symmetric inner product `(ab + ba) / 2`, and
    /// `a . B` is the vector part of `aB` for a bivector `B`.
    pub fn dot(&self, rhs: &Self) -> Self {
        self.graded_product(rhs, |r, s| Some(r.abs_diff(s)))
    }

    /// Sum over grade pairs of `<A_r B_s>_(r+s)`.
    pub fn wedge(&self, rhs: &Self) -> Self {
        self.graded_product(rhs, |r, s| (r + s <= 3).then_some(r + s))
    }

    fn graded_product(&self, rhs: &Self, keep: impl Fn(usize, usize) -> Option<usize>) -> Self {
        let mut out = Self::ZERO;
        for r in 0..4 {
            let a = self.grade_part(r);
            if a.is_exactly_zero() {
                continue;
            }
            for s in 0..4 {
                let b = rhs.grade_part(s);
                if let Some(g) = keep(r, s) {
                    out += (a * b).grade_part(g);
                }
            }
        }
        out
    }

    fn is_exactly_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0.0)
    }

    pub fn max_norm(&self) -> f64 {
        self.c.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        (*self - *rhs).max_norm()
    }

    /// Equality up to `tol`, either absolute or relative to the larger max-norm.
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        let d = self.max_abs_diff(rhs);
        d <= tol || d <= tol * self.max_norm().max(rhs.max_norm())
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_norm() <= tol
    }

    /// True when only the scalar and pseudoscalar slots are non-zero.
    pub fn is_complex_scalar(&self, tol: f64) -> bool {
        self.c[1..7].iter().all(|x| x.abs() <= tol)
    }

    /// `self^{-1} = self* / (self self*)`, where `self self*` is always central.
    pub fn inverse(&self) -> Result<Self> {
        let cc = self.clifford_conjugation();
        let n = (*self * cc).complex_part();
        let scale = self.max_norm();
        let modulus = n.abs();
        if modulus <= tol::ZERO * scale * scale || modulus == 0.0 {
            return Err(GaError::NonInvertible { modulus });
        }
        Ok(cc * n.recip())
    }

    /// Exponential, accurate to `tol` in max-norm.
    ///
    /// Writing `self = alpha + V` with `alpha` central and `V` a complex
    /// vector, `V^2` is a complex scalar. When it is real the closed form
    /// `e^alpha (cos|cosh)(r) + V (sin|sinh)(r)/r` is used; otherwise the
    /// power series is summed until a term drops below `tol`.
    pub fn exp(&self, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(GaError::BadTolerance(tol));
        }
        let alpha = self.complex_part();
        let v = *self - Self::from_complex(alpha);
        let v2 = (v * v).complex_part();
        let scale = v.max_norm().powi(2).max(f64::MIN_POSITIVE);
        if v2.im.abs() <= 1e-15 * scale {
            let lambda = v2.re;
            let (even, odd) = cos_sinc(lambda);
            let body = Self::scalar(even) + v * odd;
            return Ok(body * alpha.exp());
        }
        self.exp_series(tol)
    }

    /// `sum self^n / n!` until the max-norm of a term falls below `tol`.
    pub fn exp_series(&self, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(GaError::BadTolerance(tol));
        }
        let mut sum = Self::ONE;
        let mut term = Self::ONE;
        for n in 1..tol::EXP_MAX_TERMS {
            term = (term * *self) / n as f64;
            sum += term;
            if term.max_norm() < tol {
                return Ok(sum);
            }
        }
        Err(GaError::NoConvergence {
            terms: tol::EXP_MAX_TERMS,
            tol,
            last: term.max_norm(),
        })
    }
}

/// `(even, odd)` parts of `exp` for an element `V` with real square `lambda`:
/// `exp(V) = even + V * odd`.
fn cos_sinc(lambda: f64) -> (f64, f64) {
    if lambda.abs() < 1e-8 {
        // Taylor tails beyond lambda^2 are below 1e-24.
        let even = 1.0 + lambda / 2.0 + lambda * lambda / 24.0;
        let odd = 1.0 + lambda / 6.0 + lambda * lambda / 120.0;
        (even, odd)
    } else if lambda > 0.0 {
        let r = lambda.sqrt();
        (r.cosh(), r.sinh() / r)
    } else {
        let r = (-lambda).sqrt();
        (r.cos(), r.sin() / r)
    }
}

impl From<f64> for Multivector {
    fn from(s: f64) -> Self {
        Self::scalar(s)
    }
}

impl From<ComplexScalar> for Multivector {
    fn from(z: ComplexScalar) -> Self {
        Self::from_complex(z)
    }
}

impl From<Vector3> for Multivector {
    fn from(v: Vector3) -> Self {
        v.embed()
    }
}

impl Add for Multivector {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.c.iter_mut().zip(rhs.c) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (a, b) in self.c.iter_mut().zip(rhs.c) {
            *a -= b;
        }
        self
    }
}

impl Neg for Multivector {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

impl Mul for Multivector {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.geometric_product(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Self;
    fn mul(mut self, rhs: f64) -> Self {
        for a in self.c.iter_mut() {
            *a *= rhs;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

impl Mul<ComplexScalar> for Multivector {
    type Output = Self;
    fn mul(self, z: ComplexScalar) -> Self {
        self * z.re + (self * Self::I) * z.im
    }
}

impl Mul<Multivector> for ComplexScalar {
    type Output = Multivector;
    fn mul(self, g: Multivector) -> Multivector {
        g * self
    }
}

impl Div<f64> for Multivector {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self * (1.0 / rhs)
    }
}

impl BitXor for Multivector {
    type Output = Self;
    fn bitxor(self, rhs: Self) -> Self {
        self.wedge(&rhs)
    }
}

impl BitOr for Multivector {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        self.dot(&rhs)
    }
}

/// Writes terms like `1 - 2e12 + 0.5e123`; coefficients whose magnitude is
/// at most `tol::EQ` times the largest coefficient (or absolute when that is
/// below one) are dropped.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cutoff = tol::EQ * self.max_norm().max(1.0);
        let mut first = true;
        for (slot, &x) in self.c.iter().enumerate() {
            if x.abs() <= cutoff {
                continue;
            }
            let mag = x.abs();
            let sign = if x < 0.0 { "-" } else { "+" };
            if first {
                if x < 0.0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (slot, mag == 1.0) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(BASIS_NAMES[slot])?,
                (_, false) => write!(f, "{mag}{}", BASIS_NAMES[slot])?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

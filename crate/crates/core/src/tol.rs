//! Numerical tolerances shared by the library, the verify suites and the tests.

/// Coefficient-wise equality of multivectors after a handful of products.
pub const EQ: f64 = 1e-12;

/// Validation of algebraic constraints (idempotent conditions, normalization,
/// unit length) on user-supplied inputs.
pub const CONSTRAINT: f64 = 1e-10;

/// Threshold below which a modulus is treated as zero.
pub const ZERO: f64 = 1e-12;

/// Window for clamping dot products into `[-1, 1]` before `acos`.
pub const CLAMP: f64 = 1e-12;

/// Maximum number of terms summed by the exponential series.
pub const EXP_MAX_TERMS: usize = 200;

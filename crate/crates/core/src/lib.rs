//! Geometric algebra of three-dimensional space.
//!
//! The crate is organised bottom-up:
//!
//! * [`multivector`], [`complex`], [`vector`]: the eight-dimensional algebra
//!   generated by three anticommuting unit vectors, with the pseudoscalar
//!   `i = e123` as the imaginary unit.
//! * [`matrix`]: the spectral-basis isomorphism onto 2×2 complex matrices.
//! * [`spinor`]: idempotents, ket-spinors as elements of the left ideal
//!   `G3 u+`, canonical forms and the Riemann sphere.
//! * [`cartan`]: null complex vectors and spinor operators.
//! * [`qm`]: observables, uncertainty, transition probabilities and closed-form
//!   unitary evolution of two-level systems.
//! * [`expr`]: a small expression language over multivectors.
//! * [`verify`] and [`cli`]: the seeded property suites and command-line front end.

pub mod cartan;
pub mod cli;
pub mod complex;
pub mod error;
pub mod expr;
pub mod matrix;
pub mod multivector;
pub mod qm;
pub mod sample;
pub mod spinor;
pub mod tol;
pub mod vector;
pub mod verify;

pub use cartan::{NullVector, SpinorOperator};
pub use complex::ComplexScalar;
pub use error::{GaError, Result};
pub use matrix::Matrix2C;
pub use multivector::Multivector;
pub use qm::{EvolutionConfig, Observable};
pub use spinor::{CanonicalForm, Idempotent, KetSpinor};
pub use vector::Vector3;

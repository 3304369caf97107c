//! Seeded random inputs for property suites and benchmarks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::ComplexScalar;
use crate::multivector::Multivector;
use crate::qm::Observable;
use crate::spinor::{make_idempotent, Idempotent, KetSpinor};
use crate::vector::Vector3;

/// Deterministic generator for a seed and a stream label.
pub fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    // FNV-1a keeps stream derivation stable across toolchains
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

pub fn multivector<R: Rng>(rng: &mut R) -> Multivector {
    let mut c = [0.0; 8];
    for x in c.iter_mut() {
        *x = rng.random_range(-1.0..=1.0);
    }
    Multivector::new(c)
}

pub fn vector<R: Rng>(rng: &mut R) -> Vector3 {
    Vector3::new(
        rng.random_range(-1.0..=1.0),
        rng.random_range(-1.0..=1.0),
        rng.random_range(-1.0..=1.0),
    )
}

/// Uniform on the unit sphere by rejection from the cube.
pub fn unit_vector<R: Rng>(rng: &mut R) -> Vector3 {
    loop {
        let v = vector(rng);
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v.scale(1.0 / n);
        }
    }
}

pub fn complex<R: Rng>(rng: &mut R) -> ComplexScalar {
    ComplexScalar::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

pub fn ket<R: Rng>(rng: &mut R) -> KetSpinor {
    loop {
        let k = KetSpinor::new(complex(rng), complex(rng));
        if k.norm() > 1e-3 {
            return k;
        }
    }
}

pub fn normalized_ket<R: Rng>(rng: &mut R) -> KetSpinor {
    ket(rng).normalized().expect("non-zero by construction")
}

/// A normalized ket with `|a0| > floor`.
pub fn ket_away_from_south<R: Rng>(rng: &mut R, floor: f64) -> KetSpinor {
    loop {
        let k = normalized_ket(rng);
        if k.a0.abs() > floor {
            return k;
        }
    }
}

/// `m = cosh(phi) m_hat`, `n = sinh(phi) n_hat` with `phi` in `[0, 2]`.
pub fn idempotent<R: Rng>(rng: &mut R) -> Idempotent {
    let phi: f64 = rng.random_range(0.0..=2.0);
    let m_hat = unit_vector(rng);
    let n_hat = loop {
        let p = unit_vector(rng).cross(m_hat);
        if p.norm() > 1e-3 {
            break p.normalized().expect("non-zero");
        }
    };
    make_idempotent(m_hat.scale(phi.cosh()), n_hat.scale(phi.sinh())).expect("valid by construction")
}

pub fn observable<R: Rng>(rng: &mut R) -> Observable {
    Observable::new(rng.random_range(-1.0..=1.0), vector(rng))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = multivector(&mut rng_for(7, "x"));
        let b = multivector(&mut rng_for(7, "x"));
        let c = multivector(&mut rng_for(7, "y"));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn samples_satisfy_their_contracts() {
        let mut rng = rng_for(1, "contracts");
        for _ in 0..200 {
            assert!(unit_vector(&mut rng).is_unit(1e-14));
            assert!((normalized_ket(&mut rng).norm() - 1.0).abs() < 1e-14);
            assert!(ket_away_from_south(&mut rng, 0.1).a0.abs() > 0.1);
            let s = idempotent(&mut rng).embed();
            assert!((s * s).max_abs_diff(&s) < 1e-10);
        }
    }
}

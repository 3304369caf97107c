//! Two-level quantum mechanics on the ideal `G3 u+`.
//!
//! An observable is a self-reverse element `S = s0 + s`. Its eigenvalues are
//! `s0 ± |s|` with projectors `(1 ± s_hat)/2`; expectation values and
//! deviations in a state with sphere point `a_hat` are `s0 + s.a_hat` and
//! `|s x a_hat|`. A time-independent Hamiltonian evolves `|0>` as
//! `sqrt2 e^{-i s0 t/hbar} (cos(|s|t/hbar) - i s_hat sin(|s|t/hbar)) u+`.

use serde::{Deserialize, Serialize};

use crate::complex::ComplexScalar;
use crate::error::{GaError, Result};
use crate::matrix::{to_matrix, Matrix2C};
use crate::multivector::Multivector;
use crate::spinor::{a_hat_from_ket, inner_product, Idempotent, KetSpinor};
use crate::tol;
use crate::vector::Vector3;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Observable {
    pub s0: f64,
    pub s: Vector3,
}

impl Observable {
    pub const fn new(s0: f64, s: Vector3) -> Self {
        Self { s0, s }
    }

    pub fn from_array(h: [f64; 4]) -> Self {
        Self::new(h[0], Vector3::new(h[1], h[2], h[3]))
    }

    pub fn embed(&self) -> Multivector {
        Multivector::scalar(self.s0) + self.s.embed()
    }

    /// Accepts a multivector only if it is self-reverse.
    pub fn from_multivector(g: &Multivector) -> Result<Self> {
        let skew = (*g - g.reverse()).max_norm();
        if skew > tol::CONSTRAINT {
            return Err(GaError::ConstraintViolated {
                what: "S = reverse(S)",
                residual: skew,
            });
        }
        Ok(Self::new(g.scalar_part(), g.vector_part()))
    }

    /// `S|a>` as a (non-normalized) ket.
    pub fn apply(&self, k: &KetSpinor) -> KetSpinor {
        let [a0, a1] = to_hermitian(self).apply([k.a0, k.a1]);
        KetSpinor::new(a0, a1)
    }
}

/// `[[s0 + s3, s1 - i s2], [s1 + i s2, s0 - s3]]`.
pub fn to_hermitian(obs: &Observable) -> Matrix2C {
    let Vector3 { x, y, z } = obs.s;
    Matrix2C::new([
        [ComplexScalar::real(obs.s0 + z), ComplexScalar::new(x, -y)],
        [ComplexScalar::new(x, y), ComplexScalar::real(obs.s0 - z)],
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spectral {
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub p_plus: Idempotent,
    pub p_minus: Idempotent,
    /// `s = 0`: both eigenvalues equal `s0` and the projectors are built on `e3`.
    pub degenerate: bool,
}

impl Spectral {
    pub fn reconstruct(&self) -> Multivector {
        self.p_plus.embed() * self.lambda_plus + self.p_minus.embed() * self.lambda_minus
    }
}

fn unit_axis(obs: &Observable) -> Option<(f64, Vector3)> {
    let len = obs.s.norm();
    (len > tol::ZERO).then(|| (len, obs.s.scale(1.0 / len)))
}

pub fn spectral_decompose(obs: &Observable) -> Spectral {
    let (len, axis, degenerate) = match unit_axis(obs) {
        Some((len, axis)) => (len, axis, false),
        None => (0.0, Vector3::E3, true),
    };
    let p_plus = crate::spinor::simple_idempotent(axis).expect("unit axis");
    let p_minus = crate::spinor::simple_idempotent(-axis).expect("unit axis");
    Spectral {
        lambda_plus: obs.s0 + len,
        lambda_minus: obs.s0 - len,
        p_plus,
        p_minus,
        degenerate,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenket {
    pub eigenvalue: f64,
    pub ket: KetSpinor,
}

/// Normalized eigenkets for `s0 + |s|` and `s0 - |s|`, each read from the
/// larger non-zero column of the projector matrix `[(1 ± s_hat)/2]`.
pub fn eigenkets(obs: &Observable) -> Result<[Eigenket; 2]> {
    let spectrum = spectral_decompose(obs);
    if spectrum.degenerate {
        return Err(GaError::DegenerateObservable);
    }
    let pick = |p: &Idempotent, eigenvalue: f64| -> Result<Eigenket> {
        let mat = to_matrix(&p.embed());
        let norm = |c: [ComplexScalar; 2]| c[0].norm_sqr() + c[1].norm_sqr();
        let (c0, c1) = (mat.column(0), mat.column(1));
        let col = if norm(c0) >= norm(c1) { c0 } else { c1 };
        let ket = KetSpinor::new(col[0], col[1]).normalized()?;
        Ok(Eigenket { eigenvalue, ket })
    };
    Ok([
        pick(&spectrum.p_plus, spectrum.lambda_plus)?,
        pick(&spectrum.p_minus, spectrum.lambda_minus)?,
    ])
}

/// `<S> = s0 + s . a_hat`.
pub fn expectation(obs: &Observable, k: &KetSpinor) -> Result<f64> {
    k.require_normalized()?;
    let a = a_hat_from_ket(k)?;
    Ok(obs.s0 + obs.s.dot(a))
}

/// `sigma_S = |s x a_hat|`.
pub fn std_deviation(obs: &Observable, k: &KetSpinor) -> Result<f64> {
    k.require_normalized()?;
    let a = a_hat_from_ket(k)?;
    Ok(obs.s.cross(a).norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyCheck {
    /// `(s x a)^2 (t x a)^2`.
    pub lhs: f64,
    /// `((s x a).(t x a))^2 + ((s x t).a)^2`.
    pub rhs: f64,
    pub residual: f64,
}

impl UncertaintyCheck {
    /// `((s x t).a)^2`, the lower bound on `sigma_S^2 sigma_T^2`.
    pub fn commutator_term(&self, s: Vector3, t: Vector3, a_hat: Vector3) -> f64 {
        s.cross(t).dot(a_hat).powi(2)
    }
}

pub fn uncertainty_identity(s: Vector3, t: Vector3, a_hat: Vector3) -> Result<UncertaintyCheck> {
    let a = a_hat.require_unit()?;
    let sa = s.cross(a);
    let ta = t.cross(a);
    let lhs = sa.norm_sqr() * ta.norm_sqr();
    let rhs = sa.dot(ta).powi(2) + s.cross(t).dot(a).powi(2);
    Ok(UncertaintyCheck {
        lhs,
        rhs,
        residual: (lhs - rhs).abs(),
    })
}

/// `|<a|b>|^2`, which equals `(1 + a_hat . b_hat) / 2`.
pub fn transition_probability(a: &KetSpinor, b: &KetSpinor) -> Result<f64> {
    a.require_normalized()?;
    b.require_normalized()?;
    Ok(inner_product(a, b).norm_sqr())
}

/// `(1 + a_hat . b_hat) / 2` from the sphere points of two normalized kets.
pub fn transition_probability_geometric(a: &KetSpinor, b: &KetSpinor) -> Result<f64> {
    a.require_normalized()?;
    b.require_normalized()?;
    Ok(0.5 * (1.0 + a_hat_from_ket(a)?.dot(a_hat_from_ket(b)?)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvolutionConfig {
    pub hbar: f64,
    pub t_grid: Vec<f64>,
    /// Global phase of the initial state `e^{i theta0} |0>`.
    pub theta0: f64,
}

impl EvolutionConfig {
    pub fn new(hbar: f64, t_grid: Vec<f64>, theta0: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(GaError::InvalidConfig(format!("hbar must be positive, got {hbar}")));
        }
        if t_grid.iter().any(|t| !t.is_finite()) {
            return Err(GaError::InvalidConfig("time grid contains non-finite values".into()));
        }
        if t_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(GaError::InvalidConfig("time grid must be strictly increasing".into()));
        }
        Ok(Self { hbar, t_grid, theta0 })
    }

    /// `steps` equally spaced times from 0 to `t_max` inclusive.
    pub fn uniform(hbar: f64, t_max: f64, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(GaError::InvalidConfig(format!("steps must be at least 2, got {steps}")));
        }
        if !(t_max.is_finite() && t_max > 0.0) {
            return Err(GaError::InvalidConfig(format!("t_max must be positive, got {t_max}")));
        }
        let last = (steps - 1) as f64;
        let grid = (0..steps)
            .map(|k| if k == steps - 1 { t_max } else { t_max * k as f64 / last })
            .collect();
        Self::new(hbar, grid, 0.0)
    }
}

/// Closed-form state at time `t` for a time-independent Hamiltonian,
/// starting from `e^{i theta0} |0>`.
pub fn state_at(h: &Observable, hbar: f64, t: f64, theta0: f64) -> KetSpinor {
    let phase = ComplexScalar::cis(theta0 - h.s0 * t / hbar);
    let Some((len, axis)) = unit_axis(h) else {
        return KetSpinor::new(phase, ComplexScalar::ZERO);
    };
    let (sin_w, cos_w) = (len * t / hbar).sin_cos();
    // (cos w - i sin w [s_hat]) applied to the column (1, 0)
    let a0 = ComplexScalar::new(cos_w, -sin_w * axis.z);
    let a1 = ComplexScalar::new(sin_w * axis.y, -sin_w * axis.x);
    KetSpinor::new(phase * a0, phase * a1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvolutionSample {
    pub t: f64,
    pub ket: KetSpinor,
    pub a_hat: Vector3,
}

pub fn evolve(h: &Observable, cfg: &EvolutionConfig) -> Vec<EvolutionSample> {
    cfg.t_grid
        .iter()
        .map(|&t| {
            let ket = state_at(h, cfg.hbar, t, cfg.theta0);
            let a_hat = a_hat_from_ket(&ket).expect("evolution preserves the norm");
            EvolutionSample { t, ket, a_hat }
        })
        .collect()
}

/// `|| i hbar (a_{k+1} - a_{k-1}) / (t_{k+1} - t_{k-1}) - H a_k ||` at every
/// interior grid point, as `(t_k, residual)`.
pub fn schrodinger_residuals(h: &Observable, cfg: &EvolutionConfig) -> Vec<(f64, f64)> {
    let states: Vec<KetSpinor> = cfg
        .t_grid
        .iter()
        .map(|&t| state_at(h, cfg.hbar, t, cfg.theta0))
        .collect();
    let i_hbar = ComplexScalar::new(0.0, cfg.hbar);
    (1..states.len().saturating_sub(1))
        .map(|k| {
            let dt = cfg.t_grid[k + 1] - cfg.t_grid[k - 1];
            let d0 = (states[k + 1].a0 - states[k - 1].a0) / dt;
            let d1 = (states[k + 1].a1 - states[k - 1].a1) / dt;
            let hk = h.apply(&states[k]);
            let r0 = i_hbar * d0 - hk.a0;
            let r1 = i_hbar * d1 - hk.a1;
            (cfg.t_grid[k], (r0.norm_sqr() + r1.norm_sqr()).sqrt())
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlavorSample {
    pub t: f64,
    pub p_electron: f64,
    pub p_muon: f64,
}

/// The electron state `|e3> = |0>` and the muon state
/// `e^{-i s0 pi/(2|s|)} sqrt2 x_hat u+` with `x_hat = s_hat x e3`, for a
/// Hamiltonian whose vector part lies in the e1e2-plane.
pub fn flavor_states(h: &Observable) -> Result<(KetSpinor, KetSpinor)> {
    let Some((len, axis)) = unit_axis(h) else {
        return Err(GaError::DegenerateObservable);
    };
    if h.s.z.abs() > tol::CONSTRAINT * len.max(1.0) {
        return Err(GaError::NotTransverse { s3: h.s.z });
    }
    let x_hat = axis.cross(Vector3::E3).normalized()?;
    let phase = ComplexScalar::cis(-h.s0 * std::f64::consts::PI / (2.0 * len));
    // x_hat u+ = (x1 + i x2) e1 u+
    let muon = KetSpinor::new(ComplexScalar::ZERO, phase * ComplexScalar::new(x_hat.x, x_hat.y));
    Ok((KetSpinor::zero_state(), muon))
}

pub fn neutrino_oscillation(h: &Observable, cfg: &EvolutionConfig) -> Result<Vec<FlavorSample>> {
    let (electron, muon) = flavor_states(h)?;
    Ok(cfg
        .t_grid
        .iter()
        .map(|&t| {
            let ket = state_at(h, cfg.hbar, t, cfg.theta0);
            FlavorSample {
                t,
                p_electron: inner_product(&electron, &ket).norm_sqr(),
                p_muon: inner_product(&muon, &ket).norm_sqr(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    #[test]
    fn hermitian_matrices() {
        let e3 = Observable::new(0.0, Vector3::E3);
        assert_eq!(
            to_hermitian(&e3),
            Matrix2C::diag(ComplexScalar::ONE, -ComplexScalar::ONE)
        );
        assert_eq!(to_hermitian(&Observable::new(1.0, Vector3::ZERO)), Matrix2C::identity());
        let s = Observable::new(0.4, Vector3::new(-1.0, 2.0, 0.3));
        assert!(to_hermitian(&s).max_abs_diff(&to_matrix(&s.embed())) < 1e-15);
        assert!(to_hermitian(&s).is_hermitian(0.0));
    }

    #[test]
    fn spectral_of_e3() {
        let spectrum = spectral_decompose(&Observable::new(0.0, Vector3::E3));
        assert_eq!((spectrum.lambda_plus, spectrum.lambda_minus), (1.0, -1.0));
        assert_eq!(spectrum.p_plus.embed(), Multivector::u_plus());
        assert_eq!(spectrum.p_minus.embed(), Multivector::u_minus());
    }

    #[test]
    fn spectral_of_two_plus_three_e1() {
        let s = Observable::new(2.0, Vector3::new(3.0, 0.0, 0.0));
        let spectrum = spectral_decompose(&s);
        assert_eq!((spectrum.lambda_plus, spectrum.lambda_minus), (5.0, -1.0));
        let p = spectrum.p_plus.embed();
        assert_eq!(p, (Multivector::ONE + Multivector::e1()) * 0.5);
        assert!((s.embed() * p).max_abs_diff(&(p * 5.0)) < 1e-15);
        assert!(spectrum.reconstruct().max_abs_diff(&s.embed()) < 1e-15);
    }

    #[test]
    fn degenerate_spectrum_is_flagged() {
        let spectrum = spectral_decompose(&Observable::new(1.5, Vector3::ZERO));
        assert!(spectrum.degenerate);
        assert_eq!((spectrum.lambda_plus, spectrum.lambda_minus), (1.5, 1.5));
        assert_eq!(eigenkets(&Observable::new(1.5, Vector3::ZERO)), Err(GaError::DegenerateObservable));
    }

    #[test]
    fn eigenkets_of_e3_and_e1() {
        let [up, down] = eigenkets(&Observable::new(0.0, Vector3::E3)).unwrap();
        assert_eq!(up.eigenvalue, 1.0);
        assert!(up.ket.max_abs_diff(&KetSpinor::zero_state()) < 1e-15);
        assert_eq!(down.eigenvalue, -1.0);
        assert!(down.ket.max_abs_diff(&KetSpinor::one_state()) < 1e-15);

        let [p, m] = eigenkets(&Observable::new(0.0, Vector3::E1)).unwrap();
        let h = FRAC_1_SQRT_2;
        assert!(p.ket.max_abs_diff(&KetSpinor::from_parts(h, 0.0, h, 0.0)) < 1e-15);
        assert!(m.ket.max_abs_diff(&KetSpinor::from_parts(h, 0.0, -h, 0.0)) < 1e-15);
    }

    #[test]
    fn eigenkets_satisfy_ideal_eigen_equation() {
        let s = Observable::new(-0.3, Vector3::new(0.2, -0.9, -1.4));
        for e in eigenkets(&s).unwrap() {
            let lhs = s.embed() * e.ket.embed();
            assert!(lhs.max_abs_diff(&(e.ket.embed() * e.eigenvalue)) < 1e-14);
            assert!((expectation(&s, &e.ket).unwrap() - e.eigenvalue).abs() < 1e-14);
        }
    }

    #[test]
    fn expectation_and_deviation_examples() {
        let e3 = Observable::new(0.0, Vector3::E3);
        let up = KetSpinor::zero_state();
        let right = KetSpinor::from_parts(FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0);
        assert_eq!(expectation(&e3, &up).unwrap(), 1.0);
        assert!(expectation(&e3, &right).unwrap().abs() < 1e-15);
        assert_eq!(std_deviation(&e3, &up).unwrap(), 0.0);
        assert!((std_deviation(&e3, &right).unwrap() - 1.0).abs() < 1e-15);
        assert!(matches!(
            expectation(&e3, &KetSpinor::from_parts(2.0, 0.0, 0.0, 0.0)),
            Err(GaError::NotNormalized { .. })
        ));
    }

    #[test]
    fn uncertainty_examples() {
        let c = uncertainty_identity(Vector3::E1, Vector3::E2, Vector3::E3).unwrap();
        assert_eq!((c.lhs, c.rhs), (1.0, 1.0));
        let s = Vector3::new(0.3, -1.2, 0.5);
        let a = Vector3::new(0.0, 0.6, 0.8);
        let c = uncertainty_identity(s, s, a).unwrap();
        let sa = s.cross(a);
        assert!((c.lhs - sa.dot(sa).powi(2)).abs() < 1e-14);
        assert!(matches!(uncertainty_identity(s, s, s), Err(GaError::NotUnit { .. })));
    }

    #[test]
    fn commuting_observables_can_be_uncertain() {
        let s = Vector3::new(0.5, 0.0, 0.2);
        let (big_s, big_t) = (Observable::new(1.0, s), Observable::new(-2.0, s));
        let (a, b) = (big_s.embed(), big_t.embed());
        assert!((a * b).max_abs_diff(&(b * a)) < 1e-15);
        let k = KetSpinor::from_parts(FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0);
        let prod = std_deviation(&big_s, &k).unwrap() * std_deviation(&big_t, &k).unwrap();
        let sa = s.cross(Vector3::E1);
        assert!((prod - sa.norm_sqr()).abs() < 1e-15);
        assert!(prod > 0.0);
    }

    #[test]
    fn transition_probability_extremes() {
        let k = KetSpinor::from_parts(0.6, 0.0, 0.0, 0.8);
        assert!((transition_probability(&k, &k).unwrap() - 1.0).abs() < 1e-15);
        // the antipodal state of (a0, a1) is (-conj a1, conj a0)
        let anti = KetSpinor::new(-k.a1.conj(), k.a0.conj());
        assert!(transition_probability(&k, &anti).unwrap() < 1e-15);
        assert!(transition_probability_geometric(&k, &anti).unwrap() < 1e-15);
    }

    #[test]
    fn evolution_starts_at_zero_state() {
        let h = Observable::new(0.7, Vector3::new(0.1, -0.4, 0.9));
        let cfg = EvolutionConfig::uniform(1.0, 1.0, 5).unwrap();
        let traj = evolve(&h, &cfg);
        assert_eq!(traj[0].ket, KetSpinor::zero_state());
        assert_eq!(traj.len(), 5);
        assert_eq!(traj[4].t, 1.0);
    }

    #[test]
    fn e3_hamiltonian_is_stationary() {
        let h = Observable::new(0.0, Vector3::E3);
        let cfg = EvolutionConfig::uniform(1.0, 10.0, 50).unwrap();
        for s in evolve(&h, &cfg) {
            assert!(s.a_hat.max_abs_diff(Vector3::E3) < 1e-15);
            assert!((s.ket.a0 - ComplexScalar::cis(-s.t)).abs() < 1e-14);
        }
    }

    #[test]
    fn e1_hamiltonian_flips_at_quarter_period() {
        let h = Observable::new(0.0, Vector3::E1);
        let k = state_at(&h, 1.0, FRAC_PI_2, 0.0);
        // e^{-i e1 pi/2} u+ = -i e1 u+
        assert!(k.max_abs_diff(&KetSpinor::from_parts(0.0, 0.0, 0.0, -1.0)) < 1e-15);
        let a = a_hat_from_ket(&k).unwrap();
        assert!(a.max_abs_diff(-Vector3::E3) < 1e-15);
    }

    #[test]
    fn hbar_rescales_time() {
        let h = Observable::new(0.3, Vector3::new(0.2, 0.5, -0.1));
        let a = state_at(&h, 2.0, 3.0, 0.0);
        let b = state_at(&h, 1.0, 1.5, 0.0);
        assert!(a.max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn config_validation() {
        assert!(EvolutionConfig::uniform(1.0, 1.0, 1).is_err());
        assert!(EvolutionConfig::uniform(1.0, 0.0, 3).is_err());
        assert!(EvolutionConfig::uniform(0.0, 1.0, 3).is_err());
        assert!(EvolutionConfig::new(1.0, vec![0.0, 1.0, 1.0], 0.0).is_err());
        let two = EvolutionConfig::uniform(1.0, 7.5, 2).unwrap();
        assert_eq!(two.t_grid, vec![0.0, 7.5]);
    }

    #[test]
    fn neutrino_flip_and_return() {
        let h = Observable::new(0.4, Vector3::new(0.6, -0.8, 0.0));
        let flip = PI / 2.0;
        let cfg = EvolutionConfig::new(1.0, vec![0.0, flip, 2.0 * flip], 0.0).unwrap();
        let p = neutrino_oscillation(&h, &cfg).unwrap();
        assert!((p[0].p_electron - 1.0).abs() < 1e-15 && p[0].p_muon.abs() < 1e-15);
        assert!(p[1].p_electron < 1e-15 && (p[1].p_muon - 1.0).abs() < 1e-15);
        assert!((p[2].p_electron - 1.0).abs() < 1e-15);
    }

    #[test]
    fn neutrino_requires_transverse_hamiltonian() {
        let cfg = EvolutionConfig::uniform(1.0, 1.0, 3).unwrap();
        let h = Observable::new(0.0, Vector3::new(1.0, 0.0, 0.5));
        assert_eq!(neutrino_oscillation(&h, &cfg), Err(GaError::NotTransverse { s3: 0.5 }));
        assert_eq!(
            neutrino_oscillation(&Observable::new(1.0, Vector3::ZERO), &cfg),
            Err(GaError::DegenerateObservable)
        );
    }
}

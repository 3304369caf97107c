//! Seeded property suites over every module.
//!
//! Each suite draws its own stream from the seed and its name, so adding a
//! suite never perturbs the others. Reports are ordered by suite name and
//! contain no timing, which makes them byte-identical for a given seed.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rand_chacha::ChaCha8Rng;

use crate::cartan::{cartan_inverse, cartan_null, cartan_null_product, null_canonical_forms, spinor_operator};
use crate::error::{GaError, Result};
use crate::matrix::{from_matrix, to_matrix};
use crate::multivector::Multivector;
use crate::qm::{state_at, transition_probability, uncertainty_identity};
use crate::sample;
use crate::spinor::{
    a_hat_from_ket, canonical_form, factor_idempotent, inverse_stereographic, simple_idempotent,
};

/// One trial's worst residual and a description of its inputs.
type Trial = (f64, String);

struct Suite {
    name: &'static str,
    tol: f64,
    run: fn(&mut ChaCha8Rng) -> Trial,
}

const SUITES: &[Suite] = &[
    Suite { name: "canonical_cos_omega", tol: 1e-12, run: canonical_cos_omega },
    Suite { name: "canonical_reconstruction", tol: 1e-9, run: canonical_reconstruction },
    Suite { name: "cartan_forms", tol: 1e-9, run: cartan_forms },
    Suite { name: "cartan_null", tol: 1e-10, run: cartan_null_suite },
    Suite { name: "cartan_round_trip", tol: 1e-9, run: cartan_round_trip },
    Suite { name: "double_cover", tol: 1e-12, run: double_cover },
    Suite { name: "idempotent_factorization", tol: 1e-10, run: idempotent_factorization },
    Suite { name: "idempotent_square", tol: 1e-12, run: idempotent_square },
    Suite { name: "isomorphism", tol: 1e-12, run: isomorphism },
    Suite { name: "simple_idempotent_products", tol: 1e-12, run: simple_idempotent_products },
    Suite { name: "spinor_operator", tol: 1e-10, run: spinor_operator_suite },
    Suite { name: "stereographic", tol: 1e-10, run: stereographic },
    Suite { name: "transition", tol: 1e-12, run: transition },
    Suite { name: "uncertainty", tol: 1e-10, run: uncertainty },
    Suite { name: "unitarity", tol: 1e-10, run: unitarity },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    /// Multiplies every suite tolerance; values below 1 tighten the checks.
    pub tol_scale: f64,
}

impl VerifyConfig {
    pub fn new(seed: u64, trials: usize) -> Self {
        Self { seed, trials, tol_scale: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub trial: usize,
    pub residual: f64,
    pub input: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub tol: f64,
    pub max_residual: f64,
    pub failure: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failure.is_none())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verify seed={} trials={}", self.seed, self.trials);
        let width = self.suites.iter().map(|s| s.name.len()).max().unwrap_or(0);
        for s in &self.suites {
            let status = if s.failure.is_none() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<width$}  max_residual={:.3e}  tol={:.1e}  {status}",
                s.name, s.max_residual, s.tol
            );
        }
        for s in &self.suites {
            if let Some(f) = &s.failure {
                let _ = writeln!(
                    out,
                    "counterexample suite={} seed={} trial={} residual={:.3e} input={}",
                    s.name, self.seed, f.trial, f.residual, f.input
                );
            }
        }
        let passed = self.suites.iter().filter(|s| s.failure.is_none()).count();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "result: {verdict} ({passed}/{} suites)", self.suites.len());
        out
    }
}

pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.trials == 0 {
        return Err(GaError::InvalidConfig("trials must be at least 1".into()));
    }
    if !(cfg.tol_scale.is_finite() && cfg.tol_scale > 0.0) {
        return Err(GaError::InvalidConfig(format!(
            "tolerance scale must be positive, got {}",
            cfg.tol_scale
        )));
    }
    let suites = SUITES
        .iter()
        .map(|suite| {
            let mut rng = sample::rng_for(cfg.seed, suite.name);
            let tol = suite.tol * cfg.tol_scale;
            let mut max_residual: f64 = 0.0;
            let mut failure = None;
            for trial in 0..cfg.trials {
                let (residual, input) = (suite.run)(&mut rng);
                max_residual = max_residual.max(residual);
                if failure.is_none() && (residual.is_nan() || residual >= tol) {
                    failure = Some(Counterexample { trial, residual, input });
                }
            }
            SuiteReport { name: suite.name, tol, max_residual, failure }
        })
        .collect();
    Ok(VerifyReport { seed: cfg.seed, trials: cfg.trials, suites })
}

fn worst(xs: impl IntoIterator<Item = f64>) -> f64 {
    // NaN must surface as a failure rather than vanish in `max`
    xs.into_iter()
        .fold(0.0, |m: f64, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

fn isomorphism(rng: &mut ChaCha8Rng) -> Trial {
    let g = sample::multivector(rng);
    let h = sample::multivector(rng);
    let hom = to_matrix(&(g * h)).max_abs_diff(&(to_matrix(&g) * to_matrix(&h)));
    let back = from_matrix(&to_matrix(&g)).max_abs_diff(&g);
    (worst([hom, back]), format!("g={:?} h={:?}", g.c, h.c))
}

fn idempotent_square(rng: &mut ChaCha8Rng) -> Trial {
    let s = sample::idempotent(rng);
    let e = s.embed();
    ((e * e).max_abs_diff(&e), format!("m={:?} n={:?}", s.m(), s.n()))
}

fn idempotent_factorization(rng: &mut ChaCha8Rng) -> Trial {
    let s = sample::idempotent(rng);
    let f = factor_idempotent(&s);
    let law = (f.msq * (1.0 + f.a_hat.dot(f.b_hat)) - 2.0).abs();
    let product = f.product().max_abs_diff(&s.embed());
    (worst([law, product]), format!("m={:?} n={:?}", s.m(), s.n()))
}

fn simple_idempotent_products(rng: &mut ChaCha8Rng) -> Trial {
    let a = sample::unit_vector(rng);
    let b = sample::unit_vector(rng);
    let ap = simple_idempotent(a).expect("unit").embed();
    let bp = simple_idempotent(b).expect("unit").embed();
    let ab = a.dot(b);
    let sandwich = (ap * bp * ap).max_abs_diff(&(ap * (0.5 * (1.0 + ab))));
    let vector = (ap * b.embed() * ap).max_abs_diff(&(ap * ab));
    (worst([sandwich, vector]), format!("a={a:?} b={b:?}"))
}

fn canonical_reconstruction(rng: &mut ChaCha8Rng) -> Trial {
    let k = sample::normalized_ket(rng);
    let ket = k.embed();
    let r = match canonical_form(&k).and_then(|f| f.reconstructions()) {
        Ok(forms) => worst(forms.iter().map(|g| g.max_abs_diff(&ket))),
        Err(_) => f64::INFINITY,
    };
    (r, format!("ket={:?}", k.components()))
}

fn canonical_cos_omega(rng: &mut ChaCha8Rng) -> Trial {
    let k = sample::normalized_ket(rng);
    let r = match canonical_form(&k) {
        Ok(f) => (f.omega.cos() - k.a0.re).abs(),
        Err(_) => f64::INFINITY,
    };
    (r, format!("ket={:?}", k.components()))
}

fn stereographic(rng: &mut ChaCha8Rng) -> Trial {
    let k = sample::ket_away_from_south(rng, 0.1);
    let z = k.a1 / k.a0;
    let r = match a_hat_from_ket(&k).and_then(inverse_stereographic) {
        Ok(w) => (w - z).abs(),
        Err(_) => f64::INFINITY,
    };
    (r, format!("ket={:?}", k.components()))
}

fn cartan_null_suite(rng: &mut ChaCha8Rng) -> Trial {
    let k = sample::ket(rng);
    let n = cartan_null(&k);
    let product = cartan_null_product(&k).max_abs_diff(&n.embed());
    (worst([n.quadratic_residual(), product]), format!("ket={:?}", k.components()))
}

fn cartan_round_trip(rng: &mut ChaCha8Rng) -> Trial {
    let k = sample::ket(rng);
    let r = match cartan_inverse(&cartan_null(&k)) {
        Ok((p, m)) => p.max_abs_diff(&k).min(m.max_abs_diff(&k)),
        Err(_) => f64::INFINITY,
    };
    (r, format!("ket={:?}", k.components()))
}

fn cartan_forms(rng: &mut ChaCha8Rng) -> Trial {
    let k = sample::ket_away_from_south(rng, 0.1);
    let n = cartan_null(&k).embed();
    let r = match null_canonical_forms(&k) {
        Ok((a, b)) => worst([a.max_abs_diff(&n), b.max_abs_diff(&n), a.max_abs_diff(&b)]),
        Err(_) => f64::INFINITY,
    };
    (r, format!("ket={:?}", k.components()))
}

fn spinor_operator_suite(rng: &mut ChaCha8Rng) -> Trial {
    let k = sample::normalized_ket(rng);
    let op = spinor_operator(&k);
    let r = match a_hat_from_ket(&k) {
        Ok(a) => {
            let det = (op.det() - 1.0.into()).abs();
            let rot = op.act(&Multivector::e3()).max_abs_diff(&a.embed());
            let a_plus = (Multivector::ONE + a.embed()) * 0.5;
            let proj = op.act(&Multivector::u_plus()).max_abs_diff(&a_plus);
            worst([det, rot, proj])
        }
        Err(_) => f64::INFINITY,
    };
    (r, format!("ket={:?}", k.components()))
}

fn double_cover(rng: &mut ChaCha8Rng) -> Trial {
    let n = sample::unit_vector(rng);
    let r = match (Multivector::I * n.embed() * PI).exp(1e-16) {
        Ok(g) => g.max_abs_diff(&-Multivector::ONE),
        Err(_) => f64::INFINITY,
    };
    (r, format!("n={n:?}"))
}

fn uncertainty(rng: &mut ChaCha8Rng) -> Trial {
    let s = sample::vector(rng);
    let t = sample::vector(rng);
    let a = sample::unit_vector(rng);
    let r = match uncertainty_identity(s, t, a) {
        Ok(c) => {
            let relative = c.residual / c.lhs.max(1.0);
            let bound = c.commutator_term(s, t, a);
            // the inequality is checked to rounding, never loosened by the suite tolerance
            let violated = c.lhs < bound - 4.0 * f64::EPSILON * bound;
            if violated { f64::INFINITY } else { relative }
        }
        Err(_) => f64::INFINITY,
    };
    (r, format!("s={s:?} t={t:?} a={a:?}"))
}

fn transition(rng: &mut ChaCha8Rng) -> Trial {
    let a = sample::normalized_ket(rng);
    let b = sample::normalized_ket(rng);
    let r = match (transition_probability(&a, &b), a_hat_from_ket(&a), a_hat_from_ket(&b)) {
        (Ok(p), Ok(x), Ok(y)) => (p - 0.5 * (1.0 + x.dot(y))).abs(),
        _ => f64::INFINITY,
    };
    (r, format!("a={:?} b={:?}", a.components(), b.components()))
}

fn unitarity(rng: &mut ChaCha8Rng) -> Trial {
    use rand::Rng;
    let h = sample::observable(rng);
    let t: f64 = rng.random_range(0.0..=100.0);
    let k = state_at(&h, 1.0, t, 0.0);
    let ket = k.embed();
    // |a>^dagger |a> = 2 rho^2 u+, whose scalar part is rho^2
    let gram = (ket.reverse() * ket).scalar_part();
    let r = worst([(k.norm() - 1.0).abs(), (gram - 1.0).abs()]);
    (r, format!("h={:?} t={t:?}", [h.s0, h.s.x, h.s.y, h.s.z]))
}

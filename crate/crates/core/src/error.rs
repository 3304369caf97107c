use thiserror::Error;

pub type Result<T> = std::result::Result<T, GaError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaError {
    #[error("grade {0} is out of range 0..=3")]
    GradeOutOfRange(i64),

    #[error("element is not invertible (|g g*| = {modulus:e})")]
    NonInvertible { modulus: f64 },

    #[error("exponential series did not reach tolerance {tol:e} after {terms} terms (last term {last:e})")]
    NoConvergence { terms: usize, tol: f64, last: f64 },

    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),

    #[error("constraint `{what}` violated (residual {residual:e})")]
    ConstraintViolated { what: &'static str, residual: f64 },

    #[error("expected a unit vector, got norm {norm}")]
    NotUnit { norm: f64 },

    #[error("alpha0 vanishes; the idempotent of this spinor is undefined")]
    ZeroAlpha0,

    #[error("spinor is zero")]
    ZeroSpinor,

    #[error("point is the south pole -e3 and has no stereographic image")]
    SouthPole,

    #[error("m has no component in the e1e2-plane; its perpendicular is undefined")]
    DegenerateX,

    #[error("spinor is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("vector is not null (z1^2 + z2^2 + z3^2 residual {residual:e})")]
    NotNull { residual: f64 },

    #[error("observable has no vector part; its spectrum is degenerate")]
    DegenerateObservable,

    #[error("hamiltonian vector part is not transverse to e3 (s.e3 = {s3})")]
    NotTransverse { s3: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

use std::f64::consts::PI;

use super::{BinOp, Expr, ExprError, ExprKind, Func};
use crate::error::GaError;
use crate::multivector::Multivector;

/// Series tolerance for `exp` when no closed form applies.
const EXP_TOL: f64 = 1e-16;

pub fn evaluate(e: &Expr) -> Result<Multivector, ExprError> {
    let at = |source: GaError| ExprError::Eval {
        position: e.pos,
        source,
    };
    Ok(match &e.kind {
        ExprKind::Number(x) => Multivector::scalar(*x),
        ExprKind::Symbol(s) => s.value(),
        ExprKind::Pi => Multivector::scalar(PI),
        ExprKind::Group(inner) => evaluate(inner)?,
        ExprKind::Neg(inner) => -evaluate(inner)?,
        ExprKind::Call(f, arg) => {
            let g = evaluate(arg)?;
            match f {
                Func::Rev => g.reverse(),
                Func::Gi => g.grade_involution(),
                Func::Cc => g.clifford_conjugation(),
                Func::Inv => g.inverse().map_err(at)?,
                Func::Exp => g.exp(EXP_TOL).map_err(at)?,
            }
        }
        ExprKind::Grade(arg, k) => evaluate(arg)?.grade(*k).map_err(at)?,
        ExprKind::Binary(op, l, r) => {
            let (a, b) = (evaluate(l)?, evaluate(r)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Inner => a | b,
                BinOp::Outer => a ^ b,
                BinOp::Div => a * b.inverse().map_err(at)?,
            }
        }
    })
}

//! A small expression language over multivectors.
//!
//! ```text
//! expr    = term , { ( "+" | "-" ) , term } ;
//! term    = unary , { ( "*" | "|" | "^" | "/" ) , unary } ;
//! unary   = "-" , unary | primary ;
//! primary = number | symbol | "pi"
//!         | func , "(" , expr , ")"
//!         | "grade" , "(" , expr , "," , [ "-" ] , digits , ")"
//!         | "(" , expr , ")" ;
//! func    = "rev" | "inv" | "gi" | "cc" | "exp" ;
//! symbol  = "e1" | "e2" | "e3" | "e12" | "e13" | "e23" | "e123" | "i"
//!         | "u+" | "u-" ;
//! number  = digits , [ "." , digits ] ;
//! ```
//!
//! `*` is the geometric product, `|` the inner product, `^` the outer
//! product and `/` right division by the inverse. All four share one tier
//! and associate to the left, so `a*b|c` is `(a*b)|c`. `u+` and `u-` are
//! single tokens. Numbers have no exponent form.

mod eval;
mod lexer;
mod parser;
mod print;

use std::fmt;

use thiserror::Error;

use crate::error::GaError;
use crate::multivector::Multivector;

pub use eval::evaluate;
pub use parser::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    E1,
    E2,
    E3,
    E12,
    E13,
    E23,
    E123,
    I,
    UPlus,
    UMinus,
}

impl Symbol {
    pub const ALL: [Symbol; 10] = [
        Symbol::E1,
        Symbol::E2,
        Symbol::E3,
        Symbol::E12,
        Symbol::E13,
        Symbol::E23,
        Symbol::E123,
        Symbol::I,
        Symbol::UPlus,
        Symbol::UMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::E1 => "e1",
            Symbol::E2 => "e2",
            Symbol::E3 => "e3",
            Symbol::E12 => "e12",
            Symbol::E13 => "e13",
            Symbol::E23 => "e23",
            Symbol::E123 => "e123",
            Symbol::I => "i",
            Symbol::UPlus => "u+",
            Symbol::UMinus => "u-",
        }
    }

    fn from_ident(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|sym| sym.name() == s)
    }

    pub fn value(self) -> Multivector {
        match self {
            Symbol::E1 => Multivector::e1(),
            Symbol::E2 => Multivector::e2(),
            Symbol::E3 => Multivector::e3(),
            Symbol::E23 => Multivector::basis(4),
            Symbol::E13 => Multivector::basis(5),
            Symbol::E12 => Multivector::basis(6),
            Symbol::E123 | Symbol::I => Multivector::I,
            Symbol::UPlus => Multivector::u_plus(),
            Symbol::UMinus => Multivector::u_minus(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Rev,
    Inv,
    Gi,
    Cc,
    Exp,
}

impl Func {
    pub const ALL: [Func; 5] = [Func::Rev, Func::Inv, Func::Gi, Func::Cc, Func::Exp];

    pub fn name(self) -> &'static str {
        match self {
            Func::Rev => "rev",
            Func::Inv => "inv",
            Func::Gi => "gi",
            Func::Cc => "cc",
            Func::Exp => "exp",
        }
    }

    fn from_ident(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Inner,
    Outer,
    Div,
}

impl BinOp {
    pub fn token(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Inner => "|",
            BinOp::Outer => "^",
            BinOp::Div => "/",
        }
    }

    /// 1 for `+ -`, 2 for `* | ^ /`.
    pub fn tier(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    /// Non-negative literal; negation is always a `Neg` node.
    Number(f64),
    Symbol(Symbol),
    Pi,
    Neg(Box<Expr>),
    Call(Func, Box<Expr>),
    Grade(Box<Expr>, i64),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    /// Explicit parentheses, kept so diagnostics can point at them.
    Group(Box<Expr>),
}

/// Syntax tree node. `pos` is the 0-based character offset of the node's
/// operator or first token and is ignored by equality.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: usize,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Number(a), Number(b)) => a.to_bits() == b.to_bits(),
            (Symbol(a), Symbol(b)) => a == b,
            (Pi, Pi) => true,
            (Neg(a), Neg(b)) | (Group(a), Group(b)) => a == b,
            (Call(f, a), Call(g, b)) => f == g && a == b,
            (Grade(a, j), Grade(b, k)) => j == k && a == b,
            (Binary(o, a, b), Binary(p, c, d)) => o == p && a == c && b == d,
            _ => false,
        }
    }
}

impl Expr {
    pub fn new(kind: ExprKind) -> Self {
        Self { kind, pos: 0 }
    }

    pub fn number(x: f64) -> Self {
        Self::new(ExprKind::Number(x))
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::new(ExprKind::Symbol(s))
    }

    pub fn negate(e: Expr) -> Self {
        Self::new(ExprKind::Neg(Box::new(e)))
    }

    pub fn call(f: Func, e: Expr) -> Self {
        Self::new(ExprKind::Call(f, Box::new(e)))
    }

    pub fn grade(e: Expr, k: i64) -> Self {
        Self::new(ExprKind::Grade(Box::new(e), k))
    }

    pub fn binary(op: BinOp, l: Expr, r: Expr) -> Self {
        Self::new(ExprKind::Binary(op, Box::new(l), Box::new(r)))
    }

    /// The same tree with every `Group` node replaced by its contents.
    pub fn strip_groups(&self) -> Expr {
        use ExprKind::*;
        let kind = match &self.kind {
            Group(e) => return e.strip_groups(),
            Number(x) => Number(*x),
            Symbol(s) => Symbol(*s),
            Pi => Pi,
            Neg(e) => Neg(Box::new(e.strip_groups())),
            Call(f, e) => Call(*f, Box::new(e.strip_groups())),
            Grade(e, k) => Grade(Box::new(e.strip_groups()), *k),
            Binary(op, l, r) => Binary(*op, Box::new(l.strip_groups()), Box::new(r.strip_groups())),
        };
        Expr { kind, pos: self.pos }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::to_source(self))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("unknown symbol `{name}` at position {position}")]
    UnknownSymbol { name: String, position: usize },
    #[error("evaluation error at position {position}: {source}")]
    Eval { position: usize, source: GaError },
}

impl ExprError {
    pub fn position(&self) -> usize {
        match self {
            ExprError::Syntax { position, .. }
            | ExprError::UnknownSymbol { position, .. }
            | ExprError::Eval { position, .. } => *position,
        }
    }

    pub fn is_syntax(&self) -> bool {
        !matches!(self, ExprError::Eval { .. })
    }

    /// The source line followed by a caret under the error position.
    pub fn caret(&self, src: &str) -> String {
        let line: String = src.chars().map(|c| if c == '\n' { ' ' } else { c }).collect();
        format!("{line}\n{}^", " ".repeat(self.position()))
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str) -> Result<Multivector, ExprError> {
    evaluate(&parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> Multivector {
        eval_str(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn basic_products() {
        assert_eq!(eval("e1*e2"), Multivector::basis(6));
        assert_eq!(eval("rev(e1*e2*e3)"), -Multivector::I);
        assert!(eval("exp(pi/2 * e12)").approx_eq(&Multivector::basis(6), 1e-12));
        assert_eq!(eval("u+ * u-"), Multivector::ZERO);
        assert_eq!(eval("(e1|e2) + (e1^e2)"), Multivector::basis(6));
    }

    #[test]
    fn division_by_idempotent_fails_with_position() {
        let err = eval_str("1/u+").unwrap_err();
        assert!(matches!(err, ExprError::Eval { position: 1, source: GaError::NonInvertible { .. } }));
    }

    #[test]
    fn grade_range_is_an_eval_error() {
        let err = eval_str("grade(e1, 4)").unwrap_err();
        assert!(matches!(err, ExprError::Eval { source: GaError::GradeOutOfRange(4), .. }));
        assert_eq!(eval("grade(1 + e1 + e12, 2)"), Multivector::basis(6));
        assert!(matches!(
            eval_str("grade(e1, -1)").unwrap_err(),
            ExprError::Eval { source: GaError::GradeOutOfRange(-1), .. }
        ));
    }

    #[test]
    fn caret_points_at_error() {
        let src = "e1 + foo";
        let err = parse(src).unwrap_err();
        assert_eq!(err, ExprError::UnknownSymbol { name: "foo".into(), position: 5 });
        assert_eq!(err.caret(src), "e1 + foo\n     ^");
    }

    #[test]
    fn functions() {
        let g = "1 + 2*e1 + 3*e12 + 4*e123";
        let m = eval(g);
        assert_eq!(eval(&format!("rev({g})")), m.reverse());
        assert_eq!(eval(&format!("gi({g})")), m.grade_involution());
        assert_eq!(eval(&format!("cc({g})")), m.clifford_conjugation());
        assert!(eval(&format!("inv({g}) * ({g})")).approx_eq(&Multivector::ONE, 1e-12));
        assert!(eval(&format!("({g}) / ({g})")).approx_eq(&Multivector::ONE, 1e-12));
        assert_eq!(eval("i"), Multivector::I);
        assert_eq!(eval("i*i"), -Multivector::ONE);
    }
}

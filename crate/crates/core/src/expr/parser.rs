use super::lexer::{tokenize, Tok, Token};
use super::{BinOp, Expr, ExprError, ExprKind, Func, Symbol};

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, at: 0 };
    let e = p.expr()?;
    p.expect(Tok::End, "an operator or end of input")?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ExprError {
        let t = self.peek();
        ExprError::Syntax {
            position: t.pos,
            expected: expected.into(),
            found: t.tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Token, ExprError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let pos = self.bump().pos;
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Pipe => BinOp::Inner,
                Tok::Caret => BinOp::Outer,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            let pos = self.bump().pos;
            let rhs = self.unary()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek().tok == Tok::Minus {
            let pos = self.bump().pos;
            let inner = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                pos,
            });
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let Token { tok, pos } = self.peek().clone();
        let kind = match tok {
            Tok::Num(x) => {
                self.bump();
                ExprKind::Number(x)
            }
            Tok::UPlus => {
                self.bump();
                ExprKind::Symbol(Symbol::UPlus)
            }
            Tok::UMinus => {
                self.bump();
                ExprKind::Symbol(Symbol::UMinus)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                ExprKind::Group(Box::new(inner))
            }
            Tok::Ident(name) => {
                self.bump();
                self.ident(name, pos)?
            }
            _ => return Err(self.error("an expression")),
        };
        Ok(Expr { kind, pos })
    }

    fn ident(&mut self, name: String, pos: usize) -> Result<ExprKind, ExprError> {
        if let Some(sym) = Symbol::from_ident(&name) {
            return Ok(ExprKind::Symbol(sym));
        }
        if name == "pi" {
            return Ok(ExprKind::Pi);
        }
        if let Some(f) = Func::from_ident(&name) {
            self.expect(Tok::LParen, "`(`")?;
            let arg = self.expr()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(ExprKind::Call(f, Box::new(arg)));
        }
        if name == "grade" {
            self.expect(Tok::LParen, "`(`")?;
            let arg = self.expr()?;
            self.expect(Tok::Comma, "`,`")?;
            let k = self.integer()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(ExprKind::Grade(Box::new(arg), k));
        }
        Err(ExprError::UnknownSymbol { name, position: pos })
    }

    fn integer(&mut self) -> Result<i64, ExprError> {
        let negative = self.peek().tok == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.peek().tok {
            Tok::Num(x) if x.fract() == 0.0 && x <= i64::MAX as f64 => {
                self.bump();
                let k = x as i64;
                Ok(if negative { -k } else { k })
            }
            _ => Err(self.error("an integer grade")),
        }
    }
}

fn binary(op: BinOp, l: Expr, r: Expr, pos: usize) -> Expr {
    Expr {
        kind: ExprKind::Binary(op, Box::new(l), Box::new(r)),
        pos,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Symbol::*;

    fn sym(s: Symbol) -> Expr {
        Expr::symbol(s)
    }

    #[test]
    fn same_tier_is_left_associative() {
        let got = parse("e1*e2|e3").unwrap();
        let want = Expr::binary(BinOp::Inner, Expr::binary(BinOp::Mul, sym(E1), sym(E2)), sym(E3));
        assert_eq!(got, want);
        let got = parse("e1^e2/e3*e1").unwrap();
        let want = Expr::binary(
            BinOp::Mul,
            Expr::binary(BinOp::Div, Expr::binary(BinOp::Outer, sym(E1), sym(E2)), sym(E3)),
            sym(E1),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn additive_tier_is_lower() {
        let got = parse("e1 - e2 * e3 + 1").unwrap();
        let want = Expr::binary(
            BinOp::Add,
            Expr::binary(BinOp::Sub, sym(E1), Expr::binary(BinOp::Mul, sym(E2), sym(E3))),
            Expr::number(1.0),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn unary_binds_tightest() {
        let got = parse("-e1*e2").unwrap();
        let want = Expr::binary(BinOp::Mul, Expr::negate(sym(E1)), sym(E2));
        assert_eq!(got, want);
    }

    #[test]
    fn calls_and_groups() {
        let got = parse("grade(exp((e12)), 2)").unwrap().strip_groups();
        assert_eq!(got, Expr::grade(Expr::call(Func::Exp, sym(E12)), 2));
    }

    #[test]
    fn syntax_errors_report_position_and_expectation() {
        let err = parse("e1 + ").unwrap_err();
        assert!(matches!(&err, ExprError::Syntax { position: 5, expected, .. } if expected == "an expression"));
        let err = parse("(e1").unwrap_err();
        assert!(matches!(&err, ExprError::Syntax { position: 3, expected, .. } if expected == "`)`"));
        let err = parse("e1 e2").unwrap_err();
        assert_eq!(err.position(), 3);
        let err = parse("grade(e1, 1.5)").unwrap_err();
        assert!(matches!(&err, ExprError::Syntax { position: 10, .. }));
        let err = parse("rev e1").unwrap_err();
        assert_eq!(err.position(), 4);
    }

    #[test]
    fn unknown_identifiers_are_rejected() {
        assert_eq!(
            parse("2 * e4").unwrap_err(),
            ExprError::UnknownSymbol { name: "e4".into(), position: 4 }
        );
        assert!(matches!(parse("u").unwrap_err(), ExprError::UnknownSymbol { .. }));
    }
}

use super::{Expr, ExprKind};

const ATOM: u8 = 4;
const UNARY: u8 = 3;

fn tier(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Binary(op, ..) => op.tier(),
        ExprKind::Neg(_) => UNARY,
        _ => ATOM,
    }
}

/// Source text that parses back to the same tree, with the fewest
/// parentheses the grammar needs.
pub(super) fn to_source(e: &Expr) -> String {
    let mut out = String::new();
    write(e, &mut out);
    out
}

fn write_wrapped(e: &Expr, wrap: bool, out: &mut String) {
    if wrap {
        out.push('(');
        write(e, out);
        out.push(')');
    } else {
        write(e, out);
    }
}

fn write(e: &Expr, out: &mut String) {
    match &e.kind {
        ExprKind::Number(x) => out.push_str(&format!("{x}")),
        ExprKind::Symbol(s) => out.push_str(s.name()),
        ExprKind::Pi => out.push_str("pi"),
        ExprKind::Group(inner) => write_wrapped(inner, true, out),
        ExprKind::Neg(inner) => {
            out.push('-');
            write_wrapped(inner, tier(inner) < UNARY, out);
        }
        ExprKind::Call(f, arg) => {
            out.push_str(f.name());
            write_wrapped(arg, true, out);
        }
        ExprKind::Grade(arg, k) => {
            out.push_str("grade(");
            write(arg, out);
            out.push_str(&format!(", {k})"));
        }
        ExprKind::Binary(op, l, r) => {
            let t = op.tier();
            write_wrapped(l, tier(l) < t, out);
            out.push(' ');
            out.push_str(op.token());
            out.push(' ');
            write_wrapped(r, tier(r) <= t, out);
        }
    }
}

use super::ExprError;

#[derive(Debug, Clone, PartialEq)]
pub(super) enum Tok {
    Num(f64),
    Ident(String),
    UPlus,
    UMinus,
    Plus,
    Minus,
    Star,
    Slash,
    Pipe,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Num(x) => format!("number `{x}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::UPlus => "`u+`".into(),
            Tok::UMinus => "`u-`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(super) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub(super) fn tokenize(src: &str) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '|' => Some(Tok::Pipe),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, pos: start });
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                let frac = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == frac {
                    return Err(syntax(i, "digits after `.`", &chars));
                }
            }
            let text: String = chars[start..i].iter().collect();
            let x = text.parse::<f64>().map_err(|_| syntax(start, "a number", &chars))?;
            out.push(Token { tok: Tok::Num(x), pos: start });
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let sign = chars.get(i).copied();
            if text == "u" && matches!(sign, Some('+') | Some('-')) {
                let tok = if sign == Some('+') { Tok::UPlus } else { Tok::UMinus };
                out.push(Token { tok, pos: start });
                i += 1;
            } else {
                out.push(Token { tok: Tok::Ident(text), pos: start });
            }
        } else {
            return Err(ExprError::Syntax {
                position: start,
                expected: "an expression".into(),
                found: format!("`{c}`"),
            });
        }
    }
    out.push(Token { tok: Tok::End, pos: chars.len() });
    Ok(out)
}

fn syntax(pos: usize, expected: &str, chars: &[char]) -> ExprError {
    let found = chars
        .get(pos)
        .map(|c| format!("`{c}`"))
        .unwrap_or_else(|| "end of input".into());
    ExprError::Syntax {
        position: pos,
        expected: expected.into(),
        found,
    }
}

//! Polynomial text: coefficient lists and bivariate expressions in `a`, `b`.

use std::fmt;
use std::fs;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use galoisdraw_core::exact::{BiPoly, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TextError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for TextError {}

fn text_err(column: usize, message: impl Into<String>) -> TextError {
    TextError {
        column,
        message: message.into(),
    }
}

/// `"162,-432,504,-299,60,1"`, low degree first, or `file:PATH` holding the
/// same list (newlines count as separators).
pub fn parse_coeffs(s: &str) -> Result<ZPoly, TextError> {
    if let Some(path) = s.strip_prefix("file:") {
        let text = fs::read_to_string(path)
            .map_err(|e| text_err(6, format!("cannot read {}: {}", path, e)))?;
        return parse_coeff_list(&text.replace('\n', ","), true);
    }
    parse_coeff_list(s, false)
}

fn parse_coeff_list(s: &str, skip_empty: bool) -> Result<ZPoly, TextError> {
    let mut coeffs = Vec::new();
    let mut column = 1;
    for tok in s.split(',') {
        let t = tok.trim();
        let lead = tok.len() - tok.trim_start().len();
        if t.is_empty() {
            if !skip_empty {
                return Err(text_err(column, "empty coefficient"));
            }
        } else {
            let v: BigInt = t
                .parse()
                .map_err(|_| text_err(column + lead, format!("'{}' is not an integer", t)))?;
            coeffs.push(v);
        }
        column += tok.len() + 1;
    }
    if coeffs.is_empty() {
        return Err(text_err(1, "no coefficients"));
    }
    Ok(ZPoly::new(coeffs))
}

pub fn format_coeffs(f: &ZPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Tokens of the expression grammar
/// `expr := term (("+"|"-") term)*`, `term := unary ("*" unary | power)*`,
/// `unary := "-" unary | power`, `power := atom ("^" INT)?`,
/// `atom := INT | "a" | "b" | "(" expr ")"`.
#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    A,
    B,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

const MAX_EXPONENT: u32 = 256;

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, TextError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((col, Tok::Int(s[start..i].parse().expect("digits"))));
            continue;
        }
        let t = match c {
            'a' => Tok::A,
            'b' => Tok::B,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            _ => return Err(text_err(col, format!("unexpected character '{}'", c))),
        };
        out.push((col, t));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

fn constant(c: BigInt) -> BiPoly {
    BiPoly::constant(ZPoly::constant(c))
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn expr(&mut self) -> Result<BiPoly, TextError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, TextError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Int(_) | Tok::A | Tok::B | Tok::Open) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<BiPoly, TextError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(e)) => {
                self.pos += 1;
                let e: u32 = u32::try_from(&e)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| text_err(col, format!("exponent above {}", MAX_EXPONENT)))?;
                Ok(base.pow(e))
            }
            _ => Err(text_err(col, "expected an exponent")),
        }
    }

    fn unary(&mut self) -> Result<BiPoly, TextError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn atom(&mut self) -> Result<BiPoly, TextError> {
        let col = self.column();
        let Some(t) = self.peek().cloned() else {
            return Err(text_err(col, "unexpected end of expression"));
        };
        self.pos += 1;
        match t {
            Tok::Int(v) => Ok(constant(v)),
            Tok::A => Ok(BiPoly::x()),
            Tok::B => Ok(BiPoly::constant(ZPoly::x())),
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(text_err(self.column(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(text_err(col, "expected a number, a variable or '('")),
        }
    }
}

/// Integer polynomial in `a` (outer variable) and `b`.
pub fn parse_bivariate(s: &str) -> Result<BiPoly, TextError> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len() + 1,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(text_err(p.column(), "unexpected trailing input"));
    }
    Ok(out)
}

/// Terms by descending degree in `a`, then in `b`.
pub fn format_bivariate(p: &BiPoly) -> String {
    let mut out = String::new();
    for (i, cb) in p.coeffs().iter().enumerate().rev() {
        for (j, c) in cb.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("a", i), ("b", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.into()),
                    _ => factors.push(format!("{}^{}", var, e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_lists() {
        let h = parse_coeffs("162,-432,504,-299,60,1").unwrap();
        assert_eq!(h, ZPoly::from_i64s(&[162, -432, 504, -299, 60, 1]));
        assert_eq!(format_coeffs(&h), "162,-432,504,-299,60,1");
        assert_eq!(parse_coeffs(" 1 , 2 ").unwrap(), ZPoly::from_i64s(&[1, 2]));
        let e = parse_coeffs("1,,2").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_coeffs("1, x").unwrap_err();
        assert_eq!(e.column, 4);
    }

    #[test]
    fn expressions() {
        let p = parse_bivariate("2a^2b - 3(a - b)^2 + 7").unwrap();
        assert_eq!(format_bivariate(&p), "2*a^2*b - 3*a^2 + 6*a*b - 3*b^2 + 7");
        let q = parse_bivariate(&format_bivariate(&p)).unwrap();
        assert_eq!(p, q);
        assert_eq!(format_bivariate(&parse_bivariate("-a").unwrap()), "-a");
        assert_eq!(format_bivariate(&parse_bivariate("a - a").unwrap()), "0");
        assert_eq!(
            format_bivariate(&parse_bivariate("-a^4b").unwrap()),
            "-a^4*b"
        );
        assert_eq!(
            format_bivariate(&parse_bivariate("(-a)^2 + a*-b").unwrap()),
            "a^2 - a*b"
        );
    }

    #[test]
    fn expression_errors() {
        assert_eq!(parse_bivariate("a + c").unwrap_err().column, 5);
        assert_eq!(parse_bivariate("(a + b").unwrap_err().column, 7);
        assert_eq!(parse_bivariate("a^").unwrap_err().column, 3);
        assert_eq!(parse_bivariate("a )").unwrap_err().column, 3);
        assert!(parse_bivariate("a^1000").is_err());
    }
}

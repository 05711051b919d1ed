//! Polynomials in `x` and `y` over Q.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := NUM | 'x' | 'y' | '(' expr ')'
//! NUM    := INT ('/' INT)?
//! ```
//!
//! Juxtaposition is rejected, so `2x` and `x y` are syntax errors.

use num::{BigInt, One, Zero};
use realnf_core::{BiPoly, Rational};
use thiserror::Error;

/// Exponents above this are rejected to keep expansion bounded.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("unknown variable {name:?} at column {col}")]
    UnknownVariable { col: usize, name: String },
    #[error("bad exponent at column {col}: {msg}")]
    BadExponent { col: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedInput {
    pub polynomial: BiPoly<Rational>,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { col, msg: msg.into() }
}

/// Tokens paired with 1-based columns.
fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let cs: Vec<char> = src.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    let digits = |i: &mut usize| {
        let s = *i;
        while *i < cs.len() && cs[*i].is_ascii_digit() {
            *i += 1;
        }
        cs[s..*i].iter().collect::<String>()
    };
    while i < cs.len() {
        let c = cs[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let n: BigInt = digits(&mut i).parse().expect("digits");
                let mut d = BigInt::one();
                if i < cs.len() && cs[i] == '/' {
                    i += 1;
                    let ds = digits(&mut i);
                    if ds.is_empty() {
                        return Err(syntax(i + 1, "expected denominator after '/'"));
                    }
                    d = ds.parse().expect("digits");
                    if d.is_zero() {
                        return Err(syntax(col, "zero denominator"));
                    }
                }
                out.push((Tok::Num(Rational::new(n, d)), col));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let s = i;
                while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(cs[s..i].iter().collect()), col));
                continue;
            }
            '/' => return Err(syntax(col, "'/' is only allowed inside a rational literal")),
            c => return Err(syntax(col, format!("unexpected character {c:?}"))),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, cs.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiPoly<Rational>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly<Rational>, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly<Rational>, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly<Rational>, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, col) = self.bump();
        let bad = |msg: &str| ParseError::BadExponent { col, msg: msg.into() };
        let e = match tok {
            Tok::Num(q) if q.is_integer() => q.to_integer(),
            Tok::Num(_) => return Err(bad("exponent must be an integer")),
            Tok::Minus => return Err(bad("exponent must be non-negative")),
            _ => return Err(bad("expected a non-negative integer")),
        };
        let e: u32 = e.try_into().ok().filter(|e| *e <= MAX_EXPONENT).ok_or_else(|| bad("exponent too large"))?;
        if *self.peek() == Tok::Caret {
            return Err(syntax(self.col(), "chained '^' needs parentheses"));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<BiPoly<Rational>, ParseError> {
        let (tok, col) = self.bump();
        let p = match tok {
            Tok::Num(q) => BiPoly::constant(q),
            Tok::Ident(v) if v == "x" => BiPoly::x(),
            Tok::Ident(v) if v == "y" => BiPoly::y(),
            Tok::Ident(name) => return Err(ParseError::UnknownVariable { col, name }),
            Tok::LParen => {
                let p = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => p,
                    (_, c) => return Err(syntax(c, "expected ')'")),
                }
            }
            Tok::End => return Err(syntax(col, "unexpected end of input")),
            t => return Err(syntax(col, format!("unexpected {}", describe(&t)))),
        };
        if matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::LParen) {
            return Err(syntax(self.col(), "missing operator (write '*' explicitly)"));
        }
        Ok(p)
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        _ => "token",
    }
}

pub fn parse_polynomial(text: &str) -> Result<ParsedInput, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let polynomial = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.col(), format!("unexpected {}", describe(p.peek()))));
    }
    Ok(ParsedInput { polynomial, source: text.to_string() })
}

/// Text that parses back to `p`.
pub fn render(p: &BiPoly<Rational>) -> String {
    p.to_string()
}

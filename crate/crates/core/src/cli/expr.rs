//! Pointwise expressions for `hypercx eval`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' unary)?
//! atom  := number | 'h' | '(' number ',' number ')' | func '(' expr ')' | '(' expr ')'
//! func  := exp | log | cos | sin | cosh | sinh
//! ```
//!
//! `h` is the unit `δ`, so `3+4*h` reads the same as the literal `(3,4)`.

use crate::algebra::TwoComplex;
use crate::functions;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Func {
    Exp,
    Log,
    Cos,
    Sin,
    Cosh,
    Sinh,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Value(TwoComplex),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(FuncName, Box<Expr>),
}

/// Opaque wrapper so the function set stays private.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FuncName(Func);

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => { out.push(Token::LParen); i += 1 }
            ')' => { out.push(Token::RParen); i += 1 }
            ',' => { out.push(Token::Comma); i += 1 }
            '+' => { out.push(Token::Plus); i += 1 }
            '-' => { out.push(Token::Minus); i += 1 }
            '*' => { out.push(Token::Star); i += 1 }
            '/' => { out.push(Token::Slash); i += 1 }
            '^' => { out.push(Token::Caret); i += 1 }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                if i < chars.len() && matches!(chars[i], 'e' | 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && matches!(chars[j], '+' | '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let v: f64 = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number {text:?}")))?;
                out.push(Token::Num(v));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_at(&self, k: usize) -> Option<&Token> {
        self.tokens.get(self.pos + k)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::Parse(format!("expected {want:?}, found {t:?}"))),
            None => Err(Error::Parse(format!("expected {want:?}, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exponent = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    /// `( [sign] number , [sign] number )` starting at the current `(`.
    fn try_literal(&mut self) -> Option<TwoComplex> {
        let mut k = 1;
        let read = |k: &mut usize| -> Option<f64> {
            let sign = match self.peek_at(*k) {
                Some(Token::Minus) => {
                    *k += 1;
                    -1.0
                }
                Some(Token::Plus) => {
                    *k += 1;
                    1.0
                }
                _ => 1.0,
            };
            match self.peek_at(*k) {
                Some(Token::Num(v)) => {
                    *k += 1;
                    Some(sign * v)
                }
                _ => None,
            }
        };
        let x = read(&mut k)?;
        if self.peek_at(k) != Some(&Token::Comma) {
            return None;
        }
        k += 1;
        let y = read(&mut k)?;
        if self.peek_at(k) != Some(&Token::RParen) {
            return None;
        }
        self.pos += k + 1;
        Some(TwoComplex::new_unchecked(x, y))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(Expr::Value(TwoComplex::from_real(v)))
            }
            Some(Token::LParen) => {
                if let Some(u) = self.try_literal() {
                    return Ok(Expr::Value(u));
                }
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if name == "h" {
                    return Ok(Expr::Value(TwoComplex::DELTA));
                }
                let func = match name.as_str() {
                    "exp" => Func::Exp,
                    "log" | "ln" => Func::Log,
                    "cos" => Func::Cos,
                    "sin" => Func::Sin,
                    "cosh" => Func::Cosh,
                    "sinh" => Func::Sinh,
                    _ => return Err(Error::Parse(format!("unknown name {name:?}"))),
                };
                self.expect(Token::LParen)?;
                let arg = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(Expr::Call(FuncName(func), Box::new(arg)))
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::Parse(format!("trailing input at {t:?}")));
    }
    Ok(e)
}

fn power(base: TwoComplex, exponent: TwoComplex) -> Result<TwoComplex> {
    if exponent.y() != 0.0 {
        return Err(Error::Domain(format!("exponent {exponent} is not real")));
    }
    let n = exponent.x();
    if n.fract() == 0.0 && n.abs() <= i64::MAX as f64 / 2.0 {
        functions::pow_int(base, n as i64)
    } else {
        functions::pow_real(base, n)
    }
}

impl Expr {
    pub fn eval(&self) -> Result<TwoComplex> {
        let v = match self {
            Expr::Value(u) => *u,
            Expr::Neg(a) => -a.eval()?,
            Expr::Add(a, b) => a.eval()? + b.eval()?,
            Expr::Sub(a, b) => a.eval()? - b.eval()?,
            Expr::Mul(a, b) => a.eval()? * b.eval()?,
            Expr::Div(a, b) => a.eval()?.checked_div(b.eval()?)?,
            Expr::Pow(a, b) => power(a.eval()?, b.eval()?)?,
            Expr::Call(FuncName(f), a) => {
                let u = a.eval()?;
                match f {
                    Func::Exp => functions::exp(u)?,
                    Func::Log => functions::log(u)?,
                    Func::Cos => functions::cos(u),
                    Func::Sin => functions::sin(u),
                    Func::Cosh => functions::cosh(u)?,
                    Func::Sinh => functions::sinh(u)?,
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Overflow("expression"))
        }
    }
}

/// Parses and evaluates in one go.
pub fn evaluate(src: &str) -> Result<TwoComplex> {
    parse(src)?.eval()
}

//! Parser for exact series expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := number | ident | '(' expr ')'
//! number := digits ['/' digits] ['i']     e.g. 3, 3/2, 2i, 1/2i
//! ```
//!
//! `i` is the imaginary unit and is reserved; identifiers name variables of
//! the target algebra. Errors carry 1-based line and column positions.

use crate::algebra::GradedArtinAlgebra;
use crate::error::AlgebraError;
use crate::scalar::ExactScalar;
use crate::series::SeriesElement;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

/// A syntax or semantic error with its source position.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number { value: BigRational, imaginary: bool },
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

fn tokenize(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = input.chars().collect();
    let mut pos = 0usize;
    while pos < chars.len() {
        let c = chars[pos];
        let (tline, tcol) = (line, col);
        let advance = |pos: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*pos] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *pos += 1;
        };
        if c.is_whitespace() {
            advance(&mut pos, &mut line, &mut col);
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Spanned { tok, line: tline, col: tcol });
            advance(&mut pos, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let mut num = String::new();
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                num.push(chars[pos]);
                advance(&mut pos, &mut line, &mut col);
            }
            let mut den = String::new();
            if pos < chars.len() && chars[pos] == '/' {
                let save = (pos, line, col);
                advance(&mut pos, &mut line, &mut col);
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    den.push(chars[pos]);
                    advance(&mut pos, &mut line, &mut col);
                }
                if den.is_empty() {
                    (pos, line, col) = save;
                }
            }
            let imaginary = if pos < chars.len() && chars[pos] == 'i' {
                let next_is_word = pos + 1 < chars.len()
                    && (chars[pos + 1].is_alphanumeric() || chars[pos + 1] == '_');
                if !next_is_word {
                    advance(&mut pos, &mut line, &mut col);
                    true
                } else {
                    false
                }
            } else {
                false
            };
            let numer = BigInt::from_str(&num)
                .map_err(|_| err(tline, tcol, format!("bad integer {:?}", num)))?;
            let value = if den.is_empty() {
                BigRational::from_integer(numer)
            } else {
                let d = BigInt::from_str(&den)
                    .map_err(|_| err(tline, tcol, format!("bad integer {:?}", den)))?;
                if d.is_zero() {
                    return Err(err(tline, tcol, "zero denominator"));
                }
                BigRational::new(numer, d)
            };
            out.push(Spanned { tok: Tok::Number { value, imaginary }, line: tline, col: tcol });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while pos < chars.len() && (chars[pos].is_alphanumeric() || chars[pos] == '_') {
                name.push(chars[pos]);
                advance(&mut pos, &mut line, &mut col);
            }
            out.push(Spanned { tok: Tok::Ident(name), line: tline, col: tcol });
            continue;
        }
        return Err(err(tline, tcol, format!("unexpected character {:?}", c)));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    algebra: &'a Arc<GradedArtinAlgebra>,
    end_line: usize,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|s| (s.line, s.col)).unwrap_or((self.end_line, self.end_col))
    }

    fn expr(&mut self) -> Result<SeriesElement, ParseError> {
        let mut negate = false;
        if let Some(s) = self.peek() {
            match s.tok {
                Tok::Plus => {
                    self.pos += 1;
                }
                Tok::Minus => {
                    self.pos += 1;
                    negate = true;
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(s) = self.peek() {
            let minus = match s.tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            acc = if minus { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SeriesElement, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek().map(|s| &s.tok), Some(Tok::Star)) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SeriesElement, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
            self.pos += 1;
            let (line, col) = self.here();
            match self.next() {
                Some(Spanned { tok: Tok::Number { value, imaginary: false }, .. }) => {
                    if !value.is_integer() || value < BigRational::zero() {
                        return Err(err(line, col, "expected a nonnegative integer exponent"));
                    }
                    let exp: u32 = value
                        .to_integer()
                        .try_into()
                        .map_err(|_| err(line, col, "exponent too large"))?;
                    Ok(base.pow(exp))
                }
                _ => Err(err(line, col, "expected a nonnegative integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SeriesElement, ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Number { value, imaginary }, .. }) => {
                let c = if imaginary {
                    ExactScalar::new(BigRational::zero(), value)
                } else {
                    ExactScalar::new(value, BigRational::zero())
                };
                Ok(SeriesElement::from_scalar(self.algebra, c))
            }
            Some(Spanned { tok: Tok::Ident(name), .. }) => {
                if name == "i" {
                    return Ok(SeriesElement::from_scalar(self.algebra, ExactScalar::i()));
                }
                SeriesElement::variable(self.algebra, &name).map_err(|e| match e {
                    AlgebraError::UnknownVariable { name } => {
                        err(line, col, format!("unknown variable {:?}", name))
                    }
                    other => err(line, col, other.to_string()),
                })
            }
            Some(Spanned { tok: Tok::Minus, .. }) => Ok(self.atom()?.neg()),
            Some(Spanned { tok: Tok::LParen, .. }) => {
                let inner = self.expr()?;
                let (l2, c2) = self.here();
                match self.next() {
                    Some(Spanned { tok: Tok::RParen, .. }) => Ok(inner),
                    _ => Err(err(l2, c2, "expected ')'")),
                }
            }
            Some(s) => Err(err(s.line, s.col, format!("unexpected token {:?}", s.tok))),
            None => Err(err(line, col, "unexpected end of input")),
        }
    }
}

/// Parse an expression into an element of the given algebra.
pub fn parse_series(
    algebra: &Arc<GradedArtinAlgebra>,
    input: &str,
) -> Result<SeriesElement, ParseError> {
    let toks = tokenize(input)?;
    let lines = input.lines().count().max(1);
    let last_len = input.lines().last().map(|l| l.chars().count()).unwrap_or(0);
    let mut p = Parser { toks, pos: 0, algebra, end_line: lines, end_col: last_len + 1 };
    let e = p.expr()?;
    if let Some(s) = p.peek() {
        return Err(err(s.line, s.col, format!("trailing input starting at {:?}", s.tok)));
    }
    Ok(e)
}

/// Parse a constant expression (no variables) into an exact scalar.
pub fn parse_scalar(input: &str) -> Result<ExactScalar, ParseError> {
    let algebra = Arc::new(GradedArtinAlgebra::scalars());
    let e = parse_series(&algebra, input)?;
    Ok(e.constant_term())
}

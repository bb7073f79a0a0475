//! The polynomial expression language of the command line.
//!
//! Grammar: `expr := term (('+'|'-') term)*` and
//! `term := [sign] [integer ['*']] ('x' ['^' positive-integer] | integer)`.
//! Whitespace is insignificant
//! except that it separates nothing: offsets in error messages index the
//! original source bytes. Repeated terms of the same degree accumulate.
//! Coefficient-adjacent products like "2x" are accepted; any other implicit
//! product ("xx") is rejected.

use crate::polyring::IntPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// Parse failures, carrying the byte offset of the first invalid token.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("syntax error at offset {0}")]
    Syntax(usize),
}

/// Degrees beyond this are refused outright; they would only allocate.
const MAX_DEGREE: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    X,
    Int(String),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'x' => {
                toks.push((Tok::X, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(src[start..i].to_string()), start));
            }
            _ => return Err(ParseError::Syntax(i)),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// 'x' ['^' positive-integer], the x already consumed. Returns the degree.
    fn finish_x_part(&mut self) -> Result<usize, ParseError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        let off = self.offset();
        match self.bump() {
            Some(Tok::Int(digits)) => {
                let e: usize = digits.parse().map_err(|_| ParseError::Syntax(off))?;
                if e == 0 || e > MAX_DEGREE {
                    return Err(ParseError::Syntax(off));
                }
                Ok(e)
            }
            _ => Err(ParseError::Syntax(off)),
        }
    }

    /// One term: [sign] [integer ['*']] ('x' ['^' int] | integer).
    /// Returns (degree, signed coefficient).
    fn term(&mut self) -> Result<(usize, BigInt), ParseError> {
        let mut sign = BigInt::from(1);
        if matches!(self.peek(), Some(Tok::Plus) | Some(Tok::Minus))
            && self.bump() == Some(Tok::Minus)
        {
            sign = -sign;
        }
        let off = self.offset();
        match self.bump() {
            Some(Tok::Int(digits)) => {
                let coeff: BigInt = digits.parse().expect("lexer produced digits");
                match self.peek() {
                    Some(Tok::Star) => {
                        self.bump();
                        let off = self.offset();
                        match self.bump() {
                            Some(Tok::X) => Ok((self.finish_x_part()?, sign * coeff)),
                            _ => Err(ParseError::Syntax(off)),
                        }
                    }
                    Some(Tok::X) => {
                        self.bump();
                        Ok((self.finish_x_part()?, sign * coeff))
                    }
                    _ => Ok((0, sign * coeff)),
                }
            }
            Some(Tok::X) => Ok((self.finish_x_part()?, sign)),
            _ => Err(ParseError::Syntax(off)),
        }
    }
}

/// Parse a polynomial expression into an [`IntPoly`].
pub fn parse_poly(source: &str) -> Result<IntPoly, ParseError> {
    let toks = lex(source)?;
    if toks.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: source.len(),
    };
    let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut first = true;
    loop {
        let mut separator = BigInt::from(1);
        if !first {
            let off = parser.offset();
            match parser.bump() {
                Some(Tok::Plus) => {}
                Some(Tok::Minus) => separator = -separator,
                _ => return Err(ParseError::Syntax(off)),
            }
        }
        first = false;
        let (deg, coeff) = parser.term()?;
        *acc.entry(deg).or_insert_with(BigInt::zero) += separator * coeff;
        if parser.peek().is_none() {
            break;
        }
    }
    let top = *acc.keys().next_back().expect("at least one term");
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (deg, c) in acc {
        coeffs[deg] = c;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Canonical rendering; `parse_poly(render(p))` reproduces `p` exactly.
pub fn render(p: &IntPoly) -> String {
    p.to_string()
}

/// A parsed expression alongside its source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub parsed: IntPoly,
}

impl PolyExpr {
    pub fn parse(source: &str) -> Result<Self, ParseError> {
        Ok(PolyExpr {
            source: source.to_string(),
            parsed: parse_poly(source)?,
        })
    }

    /// The canonical text form of the parsed polynomial.
    pub fn canonical(&self) -> String {
        render(&self.parsed)
    }
}

//! Parser for the polynomial text grammar.
//!
//! Grammar: variables `x`, `y`; cyclotomic generator `z`; integer and
//! rational literals `n` and `p/q`; operators `+ - * ^`; parentheses.
//! Juxtaposition is not multiplication — an explicit `*` is required.
//! The canonical printer in [`crate::poly`] emits exactly this grammar, so
//! parsing printed output always round-trips.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::field::{Coeff, FieldSpec};
use crate::poly::BiPoly;
use crate::ypoly::YPoly;

/// A syntax or field error, with the byte offset where it occurred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }

    /// One-based column for diagnostics.
    pub fn column(&self) -> usize {
        self.pos + 1
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at column {}: {}", self.column(), self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parse a polynomial in `x` and `y` over the given field.
pub fn parse_poly(text: &str, field: &FieldSpec) -> Result<BiPoly, ParseError> {
    let tokens = lex(text, field)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        field: field.clone(),
        end: text.len(),
    };
    let poly = parser.expr()?;
    parser.expect_end()?;
    Ok(poly)
}

/// Parse a constant of the field (a polynomial with empty variable support).
pub fn parse_coeff(text: &str, field: &FieldSpec) -> Result<Coeff, ParseError> {
    let poly = parse_poly(text, field)?;
    if !poly.is_constant() {
        return Err(ParseError::new(0, "expected a constant, found variables"));
    }
    Ok(poly.constant_coeff())
}

/// Parse a univariate polynomial in `y`.
pub fn parse_ypoly(text: &str, field: &FieldSpec) -> Result<YPoly, ParseError> {
    let poly = parse_poly(text, field)?;
    poly.to_ypoly()
        .ok_or_else(|| ParseError::new(0, "expected a polynomial in y only, found x"))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(BigRational),
    VarX,
    VarY,
    Zeta,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str, field: &FieldSpec) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                out.push(Token { tok: Tok::Plus, pos });
                i += 1;
            }
            b'-' => {
                out.push(Token { tok: Tok::Minus, pos });
                i += 1;
            }
            b'*' => {
                out.push(Token { tok: Tok::Star, pos });
                i += 1;
            }
            b'^' => {
                out.push(Token { tok: Tok::Caret, pos });
                i += 1;
            }
            b'(' => {
                out.push(Token { tok: Tok::LParen, pos });
                i += 1;
            }
            b')' => {
                out.push(Token { tok: Tok::RParen, pos });
                i += 1;
            }
            b'x' => {
                out.push(Token { tok: Tok::VarX, pos });
                i += 1;
            }
            b'y' => {
                out.push(Token { tok: Tok::VarY, pos });
                i += 1;
            }
            b'z' => {
                if field.conductor() == 1 {
                    return Err(ParseError::new(
                        pos,
                        "generator z is not in the declared field (conductor 1)",
                    ));
                }
                out.push(Token { tok: Tok::Zeta, pos });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = text[start..i].parse().expect("digits");
                // a slash directly after an integer forms a rational literal
                let value = if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(ParseError::new(slash, "expected digits after '/'"));
                    }
                    let denom: BigInt = text[dstart..i].parse().expect("digits");
                    if denom.is_zero() {
                        return Err(ParseError::new(dstart, "zero denominator"));
                    }
                    BigRational::new(numer, denom)
                } else {
                    BigRational::from_integer(numer)
                };
                out.push(Token {
                    tok: Tok::Number(value),
                    pos,
                });
            }
            _ => {
                return Err(ParseError::new(
                    pos,
                    format!("unexpected character '{}'", &text[pos..pos + 1]),
                ));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    field: FieldSpec,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.index).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.index)
            .map(|t| t.pos)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.tokens.get(self.index).map(|t| &t.tok);
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.index == self.tokens.len() {
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), "unexpected trailing input"))
        }
    }

    // expr := ['+'|'-'] term { ('+'|'-') term }
    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.index += 1;
            }
            Some(Tok::Plus) => {
                self.index += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.index += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                Some(Tok::Minus) => {
                    self.index += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor { '*' factor }
    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.index += 1;
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    // factor := primary [ '^' nat ]
    fn factor(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.index += 1;
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Number(q)) if q.is_integer() => {
                    // the lexer only emits unsigned literals
                    let exp: u64 = q
                        .to_integer()
                        .try_into()
                        .map_err(|_| ParseError::new(pos, "exponent too large"))?;
                    Ok(base.pow(exp))
                }
                _ => Err(ParseError::new(pos, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    // primary := number | 'x' | 'y' | 'z' | '(' expr ')'
    fn primary(&mut self) -> Result<BiPoly, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Number(q)) => Ok(BiPoly::constant(Coeff::from_rational(
                q.clone(),
                self.field.clone(),
            ))),
            Some(Tok::VarX) => Ok(BiPoly::var_x(self.field.clone())),
            Some(Tok::VarY) => Ok(BiPoly::var_y(self.field.clone())),
            Some(Tok::Zeta) => Ok(BiPoly::constant(Coeff::zeta(self.field.clone()))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let pos = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::new(pos, "expected ')'")),
                }
            }
            _ => Err(ParseError::new(pos, "expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn reads_terms_directly() {
        let f = parse_poly("x^2*y - 3", &q()).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert!(f.coeff(&Monomial::new(2, 1)).unwrap().is_one());
        assert_eq!(
            *f.coeff(&Monomial::new(0, 0)).unwrap(),
            Coeff::from_integer(-3, q())
        );
    }

    #[test]
    fn zero_has_empty_support() {
        let f = parse_poly("0", &q()).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.support().count(), 0);
    }

    #[test]
    fn expands_parenthesized_powers() {
        let f = parse_poly("(x+y)^2", &q()).unwrap();
        assert_eq!(f, parse_poly("x^2 + 2*x*y + y^2", &q()).unwrap());
    }

    #[test]
    fn syntax_error_reports_column() {
        let err = parse_poly("x+*y", &q()).unwrap_err();
        assert_eq!(err.column(), 3);
    }

    #[test]
    fn zeta_requires_cyclotomic_field() {
        let err = parse_poly("z + 1", &q()).unwrap_err();
        assert!(err.message.contains("not in the declared field"));
        let ok = parse_poly("z + 1", &FieldSpec::cyclotomic(4)).unwrap();
        assert_eq!(ok.num_terms(), 1); // single constant term z + 1
    }

    #[test]
    fn rational_literals() {
        let f = parse_poly("1/2*x - 3/4", &q()).unwrap();
        assert_eq!(f.to_string(), "1/2*x - 3/4");
    }

    #[test]
    fn juxtaposition_is_rejecteduntil_star() {
        assert!(parse_poly("2x", &q()).is_err());
        assert!(parse_poly("x y", &q()).is_err());
    }

    #[test]
    fn print_then_parse_is_identity() {
        let texts = [
            "2*x - y^3 - y",
            "x^2 + 2*x*y + y^2",
            "1/2*x - 3/4",
            "0",
            "-x + y",
        ];
        for t in texts {
            let f = parse_poly(t, &q()).unwrap();
            assert_eq!(parse_poly(&f.to_string(), &q()).unwrap(), f, "{t}");
        }
    }

    #[test]
    fn cyclotomic_coefficients_round_trip() {
        let spec = FieldSpec::cyclotomic(3);
        let f = parse_poly("(z + 1)*x*y^2 - 2*y + (-z)", &spec).unwrap();
        let printed = f.to_string();
        assert_eq!(parse_poly(&printed, &spec).unwrap(), f);
    }
}

//! Text formats: integer polynomial expressions in one variable `x`, and
//! row-major matrices like `0 -1 ; 1 0`.

use num_bigint::BigInt;
use thiserror::Error;

use ivpoly_core::{IntMatrix, IntPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("invalid integer {0:?}")]
    BadInteger(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let v = digits
                    .parse::<BigInt>()
                    .map_err(|_| ParseError::BadInteger(digits))?;
                tokens.push(Token::Int(v));
            }
            'x' => {
                chars.next();
                tokens.push(Token::X);
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            other => return Err(ParseError::UnexpectedChar(other)),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += usize::from(t.is_some());
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                Token::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor ('*'? factor)*   (adjacency like 2x is implicit product)
    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = &acc * &self.factor()?;
                }
                Some(Token::X) | Some(Token::LParen) | Some(Token::Int(_)) => {
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // factor := atom ('^' uint)?
    fn factor(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Token::Int(e)) => {
                    let e = usize::try_from(e).map_err(|_| ParseError::ExponentTooLarge)?;
                    if e > 1 << 20 {
                        return Err(ParseError::ExponentTooLarge);
                    }
                    return Ok(base.pow(e));
                }
                Some(_) => return Err(ParseError::Expected("exponent")),
                None => return Err(ParseError::UnexpectedEnd),
            }
        }
        Ok(base)
    }

    // atom := int | 'x' | '(' expr ')' | '-' factor
    fn atom(&mut self) -> Result<IntPoly, ParseError> {
        match self.next().cloned() {
            Some(Token::Int(v)) => Ok(IntPoly::constant(v)),
            Some(Token::X) => Ok(IntPoly::x()),
            Some(Token::Minus) => Ok(&IntPoly::zero() - &self.factor()?),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    Some(_) => Err(ParseError::Expected("closing parenthesis")),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(_) => Err(ParseError::Expected("integer, x, or parenthesized expression")),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parses an integer-coefficient polynomial expression, expanding it exactly.
pub fn parse_poly(input: &str) -> Result<IntPoly, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
    };
    let p = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(ParseError::Expected("end of input"));
    }
    Ok(p)
}

/// Parses a big integer, allowing a leading sign.
pub fn parse_bigint(input: &str) -> Result<BigInt, ParseError> {
    input
        .trim()
        .parse::<BigInt>()
        .map_err(|_| ParseError::BadInteger(input.to_string()))
}

/// Parses a row-major matrix in `a b ; c d` form.
pub fn parse_matrix(input: &str) -> Result<IntMatrix, ParseError> {
    let rows: Vec<Vec<BigInt>> = input
        .split(';')
        .map(|row| {
            row.split_whitespace()
                .map(parse_bigint)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(ParseError::RaggedMatrix);
    }
    IntMatrix::from_rows(&rows).map_err(|_| ParseError::RaggedMatrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_polynomials() {
        assert_eq!(parse_poly("x^2+x+1").unwrap(), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(parse_poly("x^2-x").unwrap(), IntPoly::from_i64s(&[0, -1, 1]));
        assert_eq!(parse_poly("0").unwrap(), IntPoly::zero());
    }

    #[test]
    fn expands_products() {
        // (x⁴ − x)(x² − x) = x⁶ − x⁵ − x³ + x²
        assert_eq!(
            parse_poly("(x^4-x)*(x^2-x)").unwrap(),
            IntPoly::from_i64s(&[0, 0, 1, -1, 0, -1, 1])
        );
        assert_eq!(
            parse_poly("(x+1)^3").unwrap(),
            IntPoly::from_i64s(&[1, 3, 3, 1])
        );
        assert_eq!(parse_poly("2x").unwrap(), IntPoly::from_i64s(&[0, 2]));
        assert_eq!(parse_poly("-3*x^2").unwrap(), IntPoly::from_i64s(&[0, 0, -3]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("y+1").is_err());
        assert!(parse_poly("(x+1").is_err());
        assert!(parse_poly("x+1)").is_err());
    }

    #[test]
    fn parses_matrices() {
        let m = parse_matrix("0 -1 ; 1 0").unwrap();
        assert_eq!(m, IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).unwrap());
        assert!(parse_matrix("1 2 ; 3").is_err());
    }
}

//! Scalar literal grammar shared by every text format.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are only valid in rational function fields; integers are
//! reduced into the field, so `7` in `F 5` is the residue `2`.

use num_bigint::BigInt;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Parses a literal; errors carry a 1-based column within `text`.
pub fn parse_scalar(field: &Field, text: &str) -> Result<Scalar> {
    parse_scalar_at(field, text, 1, 1)
}

/// Same as [`parse_scalar`] but reports positions relative to a file location.
pub fn parse_scalar_at(field: &Field, text: &str, line: usize, column: usize) -> Result<Scalar> {
    let mut p = Parser {
        field,
        bytes: text.as_bytes(),
        pos: 0,
        line,
        column,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty scalar literal"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected character {:?}", p.peek().unwrap() as char)));
    }
    Ok(v)
}

struct Parser<'a> {
    field: &'a Field,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column + self.pos, msg)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let start = self.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).ok_or_else(|| Error::parse(
                    self.line,
                    self.column + start,
                    "division by zero",
                ))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let negative = self.eat(b'-');
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            let e: i64 = e
                .try_into()
                .ok()
                .filter(|e: &i64| *e <= 1000)
                .ok_or_else(|| Error::parse(self.line, self.column + start, "exponent too large"))?;
            let e = if negative { -e } else { e };
            return base
                .pow(e)
                .ok_or_else(|| Error::parse(self.line, self.column + start, "zero to a negative power"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Scalar> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(b'0'..=b'9') => Ok(self.field.from_bigint(&self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                self.field.var(name).ok_or_else(|| {
                    Error::parse(
                        self.line,
                        self.column + start,
                        format!("unknown variable {name:?} for field {}", self.field),
                    )
                })
            }
            Some(c) => Err(self.error(format!("unexpected character {:?}", c as char))),
            None => Err(self.error("unexpected end of literal")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let q = Field::Rationals;
        assert_eq!(parse_scalar(&q, "3/6").unwrap(), parse_scalar(&q, "1/2").unwrap());
        assert_eq!(parse_scalar(&q, "-4").unwrap(), q.from_i64(-4));
        assert!(parse_scalar(&q, "1/0").is_err());
    }

    #[test]
    fn prime_field_reduces() {
        let f = Field::prime(5).unwrap();
        assert_eq!(parse_scalar(&f, "7").unwrap(), f.from_i64(2));
        assert_eq!(parse_scalar(&f, "-1").unwrap(), f.from_i64(4));
        assert_eq!(parse_scalar(&f, "1/2").unwrap(), f.from_i64(3));
    }

    #[test]
    fn functions() {
        let f = Field::functions(&["a", "b", "c"]).unwrap();
        let s = parse_scalar(&f, "a*b - 2*c").unwrap();
        assert_eq!(s.display(&f).to_string(), "a*b - 2*c");
        let q = Field::functions(&["q"]).unwrap();
        let s = parse_scalar(&q, "q - q^-1").unwrap();
        assert_eq!(parse_scalar(&q, &s.display(&q).to_string()).unwrap(), s);
    }

    #[test]
    fn errors_carry_columns() {
        let f = Field::functions(&["a"]).unwrap();
        match parse_scalar_at(&f, "a + z", 3, 10) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!((line, column), (3, 14));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar(&Field::Rationals, "a").is_err());
        assert!(parse_scalar(&Field::Rationals, "(1").is_err());
        assert!(parse_scalar(&Field::Rationals, "").is_err());
    }
}

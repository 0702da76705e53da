//! Textual polynomial / element syntax.
//!
//! Grammar: `+ - * / ^` with juxtaposition as multiplication (`3x1y1`),
//! parentheses, integer and rational coefficients, and integer exponents.
//! Negative exponents and division are allowed exactly when the base (or
//! divisor) is a recognized unit of the ambient ring.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarDomain};
use crate::tower::RingTower;
use num_bigint::BigInt;
use std::sync::Arc;

pub fn parse_element(text: &str, tower: &Arc<RingTower>) -> Result<Element> {
    let mut p = Parser::new(text, tower.clone());
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse over an explicit name list (used while the tower itself is being
/// built, e.g. for `f`). The names must cover all `nvars` variables.
pub fn parse_in_names(
    text: &str,
    names: &[String],
    domain: ScalarDomain,
    nvars: usize,
) -> Result<Element> {
    assert_eq!(names.len(), nvars);
    // a throwaway tower with f = t gives the parser a variable context;
    // denominators are rejected by the caller when a polynomial is required
    let probe = RingTower::bootstrap(names.to_vec(), domain);
    let mut p = Parser::new(text, probe);
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

impl RingTower {
    /// Internal: a tower used only as a parsing context over given names.
    pub(crate) fn bootstrap(names: Vec<String>, domain: ScalarDomain) -> Arc<RingTower> {
        let nvars = names.len();
        let f = crate::poly::Polynomial::var(nvars, domain, nvars - 1);
        Arc::new(RingTower::raw(0, 0, nvars - 1, f, domain, names))
    }
}

struct Parser {
    bytes: Vec<u8>,
    pos: usize,
    tower: Arc<RingTower>,
}

impl Parser {
    fn new(text: &str, tower: Arc<RingTower>) -> Parser {
        Parser { bytes: text.as_bytes().to_vec(), pos: 0, tower }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect_end(&mut self) -> Result<()> {
        if let Some(c) = self.peek() {
            return Err(self.err(format!("unexpected `{}`", c as char)));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                self.term()?.neg()
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.bump();
                    let rhs = self.factor()?;
                    let inv = rhs
                        .inverse()
                        .map_err(|e| self.err(format!("divisor is not a unit: {e}")))?;
                    acc = acc.mul(&inv);
                }
                // juxtaposition: a digit, a letter, or an opening paren
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let neg = if self.peek() == Some(b'-') {
                self.bump();
                true
            } else {
                false
            };
            let n = self.integer()?;
            let n: i64 = n
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            let n = if neg { -n } else { n };
            return base
                .pow_i64(n)
                .map_err(|e| self.err(format!("negative power of a non-unit: {e}")));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Element> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Element::scalar(
                    self.tower.clone(),
                    Scalar::from_bigint(self.tower.domain, &n),
                ))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let name = self.ident();
                match self.tower.names().iter().position(|v| *v == name) {
                    Some(idx) => Ok(Element::var(self.tower.clone(), idx)),
                    None => Err(self.err(format!("unknown variable `{name}`"))),
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|e| self.err(format!("bad integer: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower() -> Arc<RingTower> {
        RingTower::new(0, 1, 1, "t", ScalarDomain::Q).unwrap()
    }

    #[test]
    fn parses_spec_example() {
        let tw = RingTower::new(0, 1, 1, "t-2", ScalarDomain::Q).unwrap();
        let e = parse_element("t^2 + 3*x1*y1 - 1/2", &tw).unwrap();
        assert_eq!(e.render(), "t^2 + 3*x1*y1 - 1/2");
    }

    #[test]
    fn juxtaposition_and_parens() {
        let tw = tower();
        let a = parse_element("3x1y1", &tw).unwrap();
        let b = parse_element("3*x1*y1", &tw).unwrap();
        assert_eq!(a, b);
        let c = parse_element("(x1+1)(x1-1)", &tw).unwrap();
        let d = parse_element("x1^2 - 1", &tw).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn laurent_and_f_denominators() {
        let tw = tower();
        let e = parse_element("x1/y1 + t^-1", &tw).unwrap();
        assert_eq!(e.ypow(), 1);
        assert_eq!(e.fpow(), 1);
        // render/parse round trip
        let back = parse_element(&e.render(), &tw).unwrap();
        assert_eq!(back, e);
        assert!(parse_element("1/x1", &tw).is_err());
        assert!(parse_element("1/0", &tw).is_err());
    }

    #[test]
    fn unknown_variable_rejected() {
        let tw = tower();
        let err = parse_element("x2 + 1", &tw).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}

//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expression := term (('+'|'-') term)*
//! term       := factor ('*'? factor)*
//! factor     := rational | ident | factor '^' nat | '(' expression ')'
//! rational   := int ('/' nat)?
//! ```
//!
//! A leading sign on an expression is also accepted, so `-x^2 + y` parses.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{is_identifier, MultiPoly, Rational, Ring};
use crate::{Error, Result};

/// Parses `text` as a polynomial over `ring`. Errors carry byte offsets.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), text, pos: 0, ring };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.syntax("empty expression"));
    }
    let out = p.expression()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("unexpected character"));
    }
    Ok(out)
}

/// Variable names in order of first appearance.
pub fn infer_variables(text: &str) -> Vec<String> {
    let b = text.as_bytes();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
        } else if b[i].is_ascii_alphabetic() {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            if !out.iter().any(|n| n == name) {
                out.push(name.to_string());
            }
        } else {
            i += 1;
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> Error {
        Error::Syntax { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expression(&mut self) -> Result<MultiPoly> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(c: u8) -> bool {
        c.is_ascii_alphanumeric() || c == b'('
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                Some(c) if Self::starts_factor(c) => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.syntax("expected a natural exponent after '^'"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                position: start,
                message: "exponent too large".to_string(),
            })?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(b'.') => Err(self.non_rational(self.pos)),
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            Some(_) => Err(self.syntax("expected a number, variable or '('")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn non_rational(&mut self, start: usize) -> Error {
        // swallow the rest of the literal so it can be reported whole
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || matches!(self.src[self.pos], b'.' | b'/'))
        {
            self.pos += 1;
        }
        Error::NonRationalLiteral { position: start, literal: self.text[start..self.pos].to_string() }
    }

    fn rational(&mut self) -> Result<MultiPoly> {
        let start = self.pos;
        let num: BigInt = self.digits().parse().expect("digits");
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(self.non_rational(start));
        }
        let mut value = Rational::from_integer(num);
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits();
            if d.is_empty() {
                self.pos = save;
                return Err(self.syntax("expected a natural denominator after '/'"));
            }
            let den: BigInt = d.parse().expect("digits");
            if self.src.get(self.pos) == Some(&b'.') {
                return Err(self.non_rational(start));
            }
            if den.is_zero() {
                return Err(Error::NonRationalLiteral {
                    position: start,
                    literal: self.text[start..self.pos].to_string(),
                });
            }
            value /= Rational::from_integer(den);
        }
        Ok(MultiPoly::constant(self.ring, value))
    }

    fn identifier(&mut self) -> Result<MultiPoly> {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = &self.text[start..self.pos];
        debug_assert!(is_identifier(name));
        match self.ring.index_of(name) {
            Some(i) => Ok(MultiPoly::variable(self.ring, i)),
            None => Err(Error::UnknownVariable { position: start, name: String::from(name) }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat, Monomial};

    fn r3() -> Ring {
        Ring::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn variables_in_order_of_appearance() {
        assert_eq!(infer_variables("x^2 - z^2 - y^3 + w^3 + 2x z"), ["x", "z", "y", "w"]);
        assert_eq!(infer_variables("3/4 a1_b*a1_b + 2q"), ["a1_b", "q"]);
        assert!(infer_variables("1 + 2").is_empty());
    }

    #[test]
    fn implicit_multiplication_and_powers() {
        let r = r3();
        let a = parse_poly("2x^2y", &r).unwrap();
        let b = parse_poly("2*x^2*y", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coefficient(&Monomial::new(std::vec![2, 1, 0])), int(2));
        let c = parse_poly("(x+y)^2", &r).unwrap();
        assert_eq!(c, parse_poly("x^2 + 2 x y + y^2", &r).unwrap());
    }

    #[test]
    fn rationals() {
        let r = r3();
        let p = parse_poly("3/4 z - 1/2", &r).unwrap();
        assert_eq!(p.constant_term(), rat(-1, 2));
        assert_eq!(p.coefficient(&Monomial::var(3, 2, 1)), rat(3, 4));
    }

    #[test]
    fn decimal_is_rejected_with_offset() {
        let r = r3();
        match parse_poly("x + 1.5", &r) {
            Err(Error::NonRationalLiteral { position, literal }) => {
                assert_eq!(position, 4);
                assert_eq!(literal, "1.5");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("x + 1/0", &r), Err(Error::NonRationalLiteral { position: 4, .. })));
    }

    #[test]
    fn unknown_variable_reports_position() {
        let r = r3();
        match parse_poly("x + w^2", &r) {
            Err(Error::UnknownVariable { position, name }) => {
                assert_eq!(position, 4);
                assert_eq!(name, "w");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors() {
        let r = r3();
        for bad in ["", "x +", "x^", "(x", "x)", "x ^ y", "x / 2", "x ** 2"] {
            assert!(matches!(parse_poly(bad, &r), Err(Error::Syntax { .. })), "{bad}");
        }
    }

    #[test]
    fn leading_sign() {
        let r = r3();
        assert_eq!(parse_poly("-x + y", &r).unwrap(), parse_poly("y - x", &r).unwrap());
        assert_eq!(parse_poly("-(x)^2", &r).unwrap(), parse_poly("0 - x^2", &r).unwrap());
    }
}

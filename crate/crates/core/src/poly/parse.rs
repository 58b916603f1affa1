//! Reader for plain polynomial expressions such as `x^2*y - 3/2*(y+z)^3`.
//!
//! Identifiers must be ring variables or the generator name of the
//! coefficient field. Division is allowed only by nonzero scalars.

use crate::coeff::{FieldElement, Rational};

use super::{PolyError, Polynomial, Ring};

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

fn bad(msg: impl Into<String>) -> PolyError {
    PolyError::Parse(msg.into())
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let scalar = match d.terms() {
                        [(m, c)] if m.is_one() => c.clone(),
                        _ => return Err(bad("division by a non-constant")),
                    };
                    let inv = scalar.inv().map_err(PolyError::Coeff)?;
                    acc = acc.scalar_mul(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| bad("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| bad(format!("expected an integer at offset {start}")))
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(bad("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let r: Rational = text.parse().map_err(|_| bad("bad number"))?;
                Ok(Polynomial::constant(self.ring, FieldElement::from(r)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Ok(i) = self.ring.var_index(name) {
                    return Ok(Polynomial::var_at(self.ring, i));
                }
                let field = self.ring.field();
                match (field.generator(), field.generator_name()) {
                    (Some(g), Some(n)) if n == name => Ok(Polynomial::constant(self.ring, g)),
                    _ => Err(PolyError::UnknownVariable(name.to_string())),
                }
            }
            Some(c) => Err(bad(format!("unexpected `{}`", c as char))),
            None => Err(bad("unexpected end of input")),
        }
    }
}

impl Polynomial {
    /// Parses an expression over `ring`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
        let mut r = Reader {
            src: text.as_bytes(),
            pos: 0,
            ring,
        };
        let p = r.expr()?;
        if r.peek().is_some() {
            return Err(bad(format!("trailing input at offset {}", r.pos)));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ExtField, Field};
    use crate::poly::{MonomialOrder, RingContext};

    #[test]
    fn reads_and_renders() {
        let r = RingContext::new(["x", "y", "z"], MonomialOrder::Grevlex, Field::Rational).unwrap();
        let p = Polynomial::parse(&r, "(x+y)^2 - 2*x*y").unwrap();
        assert_eq!(p.render(), "x^2+y^2");
        let q = Polynomial::parse(&r, "-x/2 + 3").unwrap();
        assert_eq!(q.render(), "-1/2*x+3");
        assert!(Polynomial::parse(&r, "x/y").is_err());
        assert!(Polynomial::parse(&r, "q").is_err());
        assert!(Polynomial::parse(&r, "x +").is_err());
    }

    #[test]
    fn reads_field_generator() {
        let f = ExtField::new(crate::coeff::ratpoly::from_ints(&[1, -1, 1]), "a").unwrap();
        let r = RingContext::new(["x"], MonomialOrder::Grevlex, Field::Ext(f)).unwrap();
        let p = Polynomial::parse(&r, "a^2*x").unwrap();
        assert_eq!(p.render(), "(a-1)*x");
    }
}

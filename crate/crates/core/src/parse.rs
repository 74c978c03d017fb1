//! Text syntax for ring elements and skew polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power (['*'] power)*
//! power  := atom ['^' integer]
//! atom   := integer | '[' integer (',' integer)* ']' | 'u' | 'x' | '(' expr ')'
//! ```
//!
//! `[c0,c1,...]` is a field element given by its coefficients in the power
//! basis. Products are skew products, so `x*2` and `2*x` may differ.

use crate::chainring::{ChainRing, RingElement};
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::quotcode::CodeContext;
use crate::skewpoly::Poly;

/// Exponents above this are rejected rather than expanded.
const MAX_EXPONENT: u64 = 4096;

pub fn parse_poly(ctx: &CodeContext, text: &str) -> Result<Poly> {
    let mut p = Parser {
        ctx,
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// A constant expression such as `1+2*u`.
pub fn parse_element(ctx: &CodeContext, text: &str) -> Result<RingElement> {
    let f = parse_poly(ctx, text)?;
    match f.degree() {
        None => Ok(ctx.ring().zero()),
        Some(0) => Ok(f.coeffs()[0]),
        Some(_) => Err(Error::Parse {
            pos: 0,
            msg: format!("expected a constant, got {text:?}"),
        }),
    }
}

/// A constant with zero u-part.
pub fn parse_field_element(ctx: &CodeContext, text: &str) -> Result<FieldElement> {
    let e = parse_element(ctx, text)?;
    if e.b.is_zero() {
        Ok(e.a)
    } else {
        Err(Error::Parse {
            pos: 0,
            msg: format!("expected a field element, got {text:?}"),
        })
    }
}

struct Parser<'a> {
    ctx: &'a CodeContext,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let sk = self.ctx.skew();
        let mut acc = if self.eat(b'-') {
            sk.neg(&self.term()?)
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = sk.add(&acc, &self.term()?);
            } else if self.eat(b'-') {
                acc = sk.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let sk = self.ctx.skew();
        let mut acc = self.power()?;
        loop {
            // `*` is optional between factors
            if self.eat(b'*')
                || matches!(self.peek(), Some(c) if c.is_ascii_digit() || b"[ux(".contains(&c))
            {
                acc = sk.mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            if e > MAX_EXPONENT {
                self.pos = start;
                return Err(self.error(&format!("exponent exceeds {MAX_EXPONENT}")));
            }
            return Ok(self.ctx.skew().pow(&base, e as u32));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer too large".to_string(),
            })
    }

    fn atom(&mut self) -> Result<Poly> {
        let sk = self.ctx.skew();
        let ring = self.ctx.ring();
        let field = self.ctx.field();
        let p = field.p() as u64;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(sk.constant(ring.from_int((k % p) as i64)))
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(sk.u_poly())
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(sk.x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'[') => {
                let start = self.pos;
                self.pos += 1;
                let mut coeffs = vec![(self.integer()? % p) as i64];
                while self.eat(b',') {
                    coeffs.push((self.integer()? % p) as i64);
                }
                if !self.eat(b']') {
                    return Err(self.error("expected ']'"));
                }
                let e = field.from_coeffs(&coeffs).map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("field elements have at most {} coefficients", field.m()),
                })?;
                Ok(sk.constant(RingElement::constant(e)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

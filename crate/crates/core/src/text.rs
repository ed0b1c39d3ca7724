//! Text syntax: `<ring>:[c0,...,cd]` with rings `Z`, `Q`, `Fp(p)`,
//! `Zloc(p)` (and `Zmod(m)` on output), and `ORD:[a0,...,ad]` for ordinary
//! polynomials over `Q`. Coefficients are integers or fractions `n/d`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hurwitz::HurwitzPoly;
use crate::modular::ModulusRing;
use crate::ordinary::OrdinaryPoly;
use crate::ring::RingId;

type Hurwitz = HurwitzPoly<RingId>;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(self.pos, format!("expected `{token}`"))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err(self.pos, "expected digits");
        }
        let n = self.rest()[..len].parse().expect("ascii digits");
        self.pos += len;
        Ok(n)
    }

    fn rational(&mut self) -> Result<BigRational> {
        self.skip_ws();
        let start = self.pos;
        let negative = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        let num = self.digits()?;
        let den = if self.eat("/") { self.digits()? } else { BigInt::from(1) };
        if den.is_zero() {
            return self.err(start, "zero denominator");
        }
        let q = BigRational::new(num, den);
        Ok(if negative { -q } else { q })
    }

    fn small(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        let at = self.pos;
        let n = self.digits()?;
        match u64::try_from(&n) {
            Ok(v) => Ok((at, v)),
            Err(_) => self.err(at, "number too large"),
        }
    }

    fn list(&mut self) -> Result<Vec<(usize, BigRational)>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            let at = self.pos;
            out.push((at, self.rational()?));
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos != self.text.len() {
            return self.err(self.pos, "unexpected trailing input");
        }
        Ok(())
    }
}

fn ring_at(c: &mut Cursor) -> Result<RingId> {
    c.skip_ws();
    let start = c.pos;
    let with_prime = |c: &mut Cursor, build: fn(u64) -> Result<RingId>| -> Result<RingId> {
        c.expect("(")?;
        let (at, p) = c.small()?;
        c.expect(")")?;
        build(p).or_else(|_| c.err(at, format!("{p} is not a prime below 2^31")))
    };
    if c.eat("Zloc") {
        with_prime(c, RingId::localized)
    } else if c.eat("Fp") {
        with_prime(c, RingId::prime_field)
    } else if c.eat("Z") {
        Ok(RingId::Integers)
    } else if c.eat("Q") {
        Ok(RingId::Rationals)
    } else {
        c.err(start, "expected a ring: Z, Q, Fp(p) or Zloc(p)")
    }
}

pub fn parse_ring(text: &str) -> Result<RingId> {
    let mut c = Cursor::new(text);
    let ring = ring_at(&mut c)?;
    c.finish()?;
    Ok(ring)
}

fn describe_rejection(ring: RingId, q: &BigRational) -> String {
    match ring {
        RingId::Integers => format!("{q} is not an integer"),
        RingId::PrimeField(p) | RingId::LocalizedAtP(p) => format!("denominator of {q} is not coprime to {p}"),
        RingId::Rationals => unreachable!("every rational lies in Q"),
    }
}

/// Parses `<ring>:[c0,...,cd]`.
pub fn parse_poly(text: &str) -> Result<Hurwitz> {
    let mut c = Cursor::new(text);
    let ring = ring_at(&mut c)?;
    c.expect(":")?;
    let coeffs = c.list()?;
    c.finish()?;
    coeffs_in(ring, coeffs)
}

/// Parses a bare list `[c0,...,cd]` over a given ring.
pub fn parse_coeffs(text: &str, ring: RingId) -> Result<Hurwitz> {
    let mut c = Cursor::new(text);
    let coeffs = c.list()?;
    c.finish()?;
    coeffs_in(ring, coeffs)
}

fn coeffs_in(ring: RingId, coeffs: Vec<(usize, BigRational)>) -> Result<Hurwitz> {
    let mut values = Vec::with_capacity(coeffs.len());
    for (at, q) in coeffs {
        if !ring.contains(&q) {
            return Err(Error::Syntax { position: at, message: describe_rejection(ring, &q) });
        }
        values.push(ring.canonical(q)?);
    }
    Ok(Hurwitz::new(ring, values))
}

/// Parses `ORD:[a0,...,ad]`.
pub fn parse_ordinary(text: &str) -> Result<OrdinaryPoly> {
    let mut c = Cursor::new(text);
    c.expect("ORD")?;
    c.expect(":")?;
    let coeffs = c.list()?;
    c.finish()?;
    Ok(OrdinaryPoly::new(coeffs.into_iter().map(|(_, q)| q).collect()))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// `[c0,...,cd]`; the zero polynomial is `[0]`.
pub fn format_coeffs(f: &Hurwitz) -> String {
    if f.is_zero() {
        return "[0]".into();
    }
    join(f.coeffs())
}

pub fn format_poly(f: &Hurwitz) -> String {
    format!("{}:{}", f.ring_id(), format_coeffs(f))
}

pub fn format_mod_poly(f: &HurwitzPoly<ModulusRing>) -> String {
    if f.is_zero() {
        return format!("{}:[0]", f.ring());
    }
    format!("{}:{}", f.ring(), join(f.coeffs()))
}

pub fn format_ordinary(q: &OrdinaryPoly) -> String {
    if q.is_zero() {
        return "ORD:[0]".into();
    }
    format!("ORD:{}", join(q.coeffs()))
}

/// Rendering in the `h_n` basis, e.g. `h_1 - 2*h_3`.
pub fn format_basis(f: &Hurwitz) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        if mag == BigRational::from_integer(1.into()) {
            out.push_str(&format!("h_{}", i + 1));
        } else {
            out.push_str(&format!("{mag}*h_{}", i + 1));
        }
    }
    out
}

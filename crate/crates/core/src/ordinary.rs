//! Ordinary polynomials over `Q` and the divided-factorial transform
//! `f ↦ Σ f(n)/n! · xⁿ`, a ring isomorphism from `hF` onto `F[x]` in
//! characteristic 0.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::binomial::factorial;
use crate::error::{Error, Result};
use crate::hurwitz::HurwitzPoly;
use crate::ring::RingId;

/// A polynomial `a_0 + a_1 x + ... + a_d x^d` over `Q`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrdinaryPoly {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for OrdinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrdinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl OrdinaryPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        OrdinaryPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn from_integers(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn zero() -> Self {
        OrdinaryPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * point + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] * &lc_inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &c * d;
                }
                quot[top - dd] = c;
            }
            rem.pop();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.divrem(self)?.1.is_zero())
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("non-zero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The primitive integer polynomial with the same roots: denominators
    /// cleared, content removed, positive leading coefficient.
    pub fn primitive_integer_form(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &OrdinaryPoly {
    type Output = OrdinaryPoly;
    fn add(self, rhs: &OrdinaryPoly) -> OrdinaryPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        OrdinaryPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &OrdinaryPoly {
    type Output = OrdinaryPoly;
    fn sub(self, rhs: &OrdinaryPoly) -> OrdinaryPoly {
        self + &(-rhs)
    }
}

impl Neg for &OrdinaryPoly {
    type Output = OrdinaryPoly;
    fn neg(self) -> OrdinaryPoly {
        OrdinaryPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &OrdinaryPoly {
    type Output = OrdinaryPoly;
    fn mul(self, rhs: &OrdinaryPoly) -> OrdinaryPoly {
        if self.is_zero() || rhs.is_zero() {
            return OrdinaryPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        OrdinaryPoly::new(out)
    }
}

/// The divided-factorial transform `a_n = f(n) / n!`.
pub fn to_ordinary(f: &HurwitzPoly<RingId>) -> Result<OrdinaryPoly> {
    let ring = f.ring_id();
    if !ring.has_characteristic_zero() {
        return Err(Error::CharPUnsupported(ring));
    }
    let mut fact = BigInt::one();
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    for (n, c) in f.coeffs().iter().enumerate() {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        coeffs.push(c / BigRational::from_integer(fact.clone()));
    }
    Ok(OrdinaryPoly::new(coeffs))
}

/// Inverse transform `f(n) = n! a_n`, checking that every value lies in `target`.
pub fn from_ordinary(q: &OrdinaryPoly, target: RingId) -> Result<HurwitzPoly<RingId>> {
    if !target.has_characteristic_zero() {
        return Err(Error::CharPUnsupported(target));
    }
    let mut coeffs = Vec::with_capacity(q.coeffs.len());
    for (n, a) in q.coeffs.iter().enumerate() {
        let v = a * BigRational::from_integer(factorial(n));
        if !target.contains(&v) {
            return Err(Error::NotInTargetRing { index: n, ring: target });
        }
        coeffs.push(v);
    }
    Ok(HurwitzPoly::new(target, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn z(c: &[i64]) -> HurwitzPoly<RingId> {
        HurwitzPoly::from_ints(RingId::Integers, c)
    }

    #[test]
    fn transform_examples() {
        assert_eq!(to_ordinary(&z(&[1, 2, 2])).unwrap(), OrdinaryPoly::from_ints(&[1, 2, 1]));
        assert_eq!(to_ordinary(&z(&[1, 5])).unwrap(), OrdinaryPoly::from_ints(&[1, 5]));
        assert_eq!(to_ordinary(&z(&[1])).unwrap(), OrdinaryPoly::one());
        let f3 = RingId::prime_field(3).unwrap();
        assert!(matches!(
            to_ordinary(&HurwitzPoly::from_ints(f3, &[1, 1])),
            Err(Error::CharPUnsupported(_))
        ));
    }

    #[test]
    fn inverse_transform_examples() {
        let p = OrdinaryPoly::new(vec![q(0, 1), q(1, 1), q(1, 2)]);
        assert_eq!(from_ordinary(&p, RingId::Integers).unwrap(), z(&[0, 1, 1]));
        let p = OrdinaryPoly::new(vec![q(1, 1), q(1, 3)]);
        assert!(matches!(
            from_ordinary(&p, RingId::Integers),
            Err(Error::NotInTargetRing { index: 1, .. })
        ));
        let loc = RingId::localized(3).unwrap();
        assert!(from_ordinary(&p, loc).is_err());
        assert!(from_ordinary(&p, RingId::localized(5).unwrap()).is_ok());
    }

    #[test]
    fn euclidean_arithmetic() {
        let a = OrdinaryPoly::from_ints(&[2, 3, 1]);
        let b = OrdinaryPoly::from_ints(&[1, 1]);
        let (quot, rem) = a.divrem(&b).unwrap();
        assert_eq!(quot, OrdinaryPoly::from_ints(&[2, 1]));
        assert!(rem.is_zero());

        let g = OrdinaryPoly::from_ints(&[-1, 0, 1]).gcd(&OrdinaryPoly::from_ints(&[1, 2, 1]));
        assert_eq!(g, OrdinaryPoly::from_ints(&[1, 1]));

        assert!(OrdinaryPoly::from_ints(&[1, 2, 1]).eval(&q(-1, 1)).is_zero());
        assert!(matches!(a.divrem(&OrdinaryPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn divrem_reconstructs() {
        let a = OrdinaryPoly::new(vec![q(3, 2), q(-1, 1), q(0, 1), q(5, 7), q(2, 1)]);
        let b = OrdinaryPoly::new(vec![q(1, 3), q(4, 1), q(-2, 5)]);
        let (quot, rem) = a.divrem(&b).unwrap();
        assert_eq!(&(&quot * &b) + &rem, a);
        assert!(rem.degree().unwrap() < b.degree().unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(OrdinaryPoly::from_ints(&[1, 2, 1]).to_string(), "1 + 2*x + x^2");
        assert_eq!(OrdinaryPoly::from_ints(&[0, -1, 0, 3]).to_string(), "-x + 3*x^3");
        assert_eq!(OrdinaryPoly::new(vec![q(1, 5), q(1, 1)]).to_string(), "1/5 + x");
        assert_eq!(OrdinaryPoly::zero().to_string(), "0");
    }

    #[test]
    fn primitive_integer_form() {
        let p = OrdinaryPoly::new(vec![q(1, 5), q(1, 1)]);
        assert_eq!(p.primitive_integer_form(), vec![BigInt::from(1), BigInt::from(5)]);
        let p = OrdinaryPoly::from_ints(&[-4, 0, -2]);
        assert_eq!(p.primitive_integer_form(), vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)]);
    }
}

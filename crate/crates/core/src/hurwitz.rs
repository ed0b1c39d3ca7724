//! Hurwitz polynomials: finitely supported sequences `f: N -> R` with the
//! binomial-convolution product
//!
//! ```text
//! (f g)(n) = sum_{k=0}^{n} C(n, k) f(k) g(n - k)
//! ```
//!
//! Index `n` of the coefficient vector holds `f(n)`. `h_n` is the sequence with
//! a single `1` at index `n - 1`; `h_1` is the multiplicative identity.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::binomial::binomial_row;
use crate::error::{Error, Result};
use crate::ring::{CoeffRing, RingElem, RingId};

/// A Hurwitz polynomial over the coefficient ring `R`.
///
/// Coefficients are dense with trailing zeros stripped, so equality is
/// structural and the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq)]
pub struct HurwitzPoly<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Support statistics of a Hurwitz polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    pub support: BTreeSet<usize>,
    /// Greatest support index (the Hurwitz degree); `None` for zero.
    pub delta: Option<usize>,
    /// Least support index; `None` for zero.
    pub pi: Option<usize>,
}

impl<R: CoeffRing> fmt::Debug for HurwitzPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.ring, self.coeffs)
    }
}

impl<R: CoeffRing> HurwitzPoly<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut p = HurwitzPoly { ring, coeffs };
        p.normalize();
        p
    }

    pub fn zero(ring: R) -> Self {
        HurwitzPoly { ring, coeffs: Vec::new() }
    }

    /// `h_1`, the unity.
    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    /// `h_n`: coefficient 1 at index `n - 1`.
    pub fn basis(ring: R, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(n));
        }
        let mut coeffs = vec![ring.zero(); n];
        coeffs[n - 1] = ring.one();
        Ok(Self::new(ring, coeffs))
    }

    /// `h'_r`: the constant `r` at index 0.
    pub fn constant(ring: R, r: R::Elem) -> Self {
        Self::new(ring, vec![r])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// `f(n)`, zero past the end.
    pub fn coeff(&self, n: usize) -> R::Elem {
        self.coeffs.get(n).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Hurwitz degree `Δ(f)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn stats(&self) -> Stats {
        let support: BTreeSet<usize> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(i, _)| i)
            .collect();
        Stats {
            delta: support.last().copied(),
            pi: support.first().copied(),
            support,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Self::new(self.ring.clone(), coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// The Hurwitz (binomial-convolution) product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        let (df, dg) = (self.coeffs.len() - 1, other.coeffs.len() - 1);
        let ring = &self.ring;
        let mut coeffs = Vec::with_capacity(df + dg + 1);
        for n in 0..=df + dg {
            let row = binomial_row(n);
            let mut acc = ring.zero();
            for k in n.saturating_sub(dg)..=n.min(df) {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if ring.is_zero(a) || ring.is_zero(b) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul_integer(&row[k], &ring.mul(a, b)));
            }
            coeffs.push(acc);
        }
        Ok(Self::new(ring.clone(), coeffs))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.ring.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplication by the constant `h'_c`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(c, a)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    pub fn scale_integer(&self, n: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul_integer(n, a)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// The derivation `(∂f)(n) = f(n + 1)`.
    pub fn derivation(&self) -> Self {
        Self::new(self.ring.clone(), self.coeffs.iter().skip(1).cloned().collect())
    }

    /// Maps coefficients into another ring.
    pub fn map_ring<S: CoeffRing>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> HurwitzPoly<S> {
        HurwitzPoly::new(ring, self.coeffs.iter().map(f).collect())
    }
}

impl HurwitzPoly<RingId> {
    /// Builds a polynomial over one of the supported rings from tagged elements.
    pub fn from_elems(ring: RingId, coeffs: &[RingElem]) -> Result<Self> {
        let mut values = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.ring() != ring {
                return Err(Error::RingMismatch(ring.to_string(), c.ring().to_string()));
            }
            values.push(c.value().clone());
        }
        Ok(Self::new(ring, values))
    }

    pub fn from_ints(ring: RingId, coeffs: &[i64]) -> Self {
        let values = coeffs.iter().map(|&c| ring.int(c).into_value()).collect();
        Self::new(ring, values)
    }

    pub fn elem(&self, n: usize) -> RingElem {
        self.ring.elem(self.coeff(n)).expect("coefficients are canonical")
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<R: CoeffRing> $tr<&HurwitzPoly<R>> for &HurwitzPoly<R> {
            type Output = HurwitzPoly<R>;

            /// Panics if the operands live over different rings; use the
            /// `try_` method to get an error instead.
            fn $method(self, rhs: &HurwitzPoly<R>) -> HurwitzPoly<R> {
                self.$inner(rhs).expect("operands over the same ring")
            }
        }

        impl<R: CoeffRing> $tr for HurwitzPoly<R> {
            type Output = HurwitzPoly<R>;

            fn $method(self, rhs: HurwitzPoly<R>) -> HurwitzPoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<R: CoeffRing> Neg for &HurwitzPoly<R> {
    type Output = HurwitzPoly<R>;

    fn neg(self) -> HurwitzPoly<R> {
        HurwitzPoly::neg(self)
    }
}

impl<R: CoeffRing> Neg for HurwitzPoly<R> {
    type Output = HurwitzPoly<R>;

    fn neg(self) -> HurwitzPoly<R> {
        HurwitzPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial;
    use crate::ring::Exact;

    type P = HurwitzPoly<RingId>;

    fn z(c: &[i64]) -> P {
        P::from_ints(RingId::Integers, c)
    }

    #[test]
    fn construction() {
        assert_eq!(P::basis(RingId::Integers, 2).unwrap(), z(&[0, 1]));
        assert_eq!(P::constant(RingId::Integers, RingId::Integers.int(7).into_value()), z(&[7]));
        assert_eq!(z(&[1, 0, 0]), z(&[1]));
        assert!(matches!(P::basis(RingId::Integers, 0), Err(Error::InvalidIndex(0))));
        let bad = P::from_elems(RingId::Integers, &[RingId::Rationals.int(1)]);
        assert!(matches!(bad, Err(Error::RingMismatch(..))));
    }

    #[test]
    fn addition() {
        assert_eq!(&z(&[1, 2]) + &z(&[0, -2]), z(&[1]));
        assert_eq!(&z(&[3, 1, 4]) + &P::zero(RingId::Integers), z(&[3, 1, 4]));
        let f2 = RingId::prime_field(2).unwrap();
        let f = P::from_ints(f2, &[1, 1]);
        assert!((&f + &f).is_zero());
        assert!(z(&[1]).try_add(&P::from_ints(RingId::Rationals, &[1])).is_err());
    }

    #[test]
    fn products() {
        let h2 = z(&[0, 1]);
        assert_eq!(&h2 * &h2, z(&[0, 0, 2]));
        assert_eq!(&z(&[1, 1]) * &z(&[1, 1]), z(&[1, 2, 2]));
        let f2 = RingId::prime_field(2).unwrap();
        let h2 = P::basis(f2, 2).unwrap();
        assert!((&h2 * &h2).is_zero());
        let f = z(&[3, -1, 4, 1, -5]);
        assert_eq!(&P::one(RingId::Integers) * &f, f);
    }

    #[test]
    fn powers() {
        assert_eq!(z(&[0, 1]).pow(2), z(&[0, 0, 2]));
        assert_eq!(z(&[5, 7]).pow(0), P::one(RingId::Integers));
        for p in [2u64, 3, 5] {
            let fp = RingId::prime_field(p).unwrap();
            assert!(P::basis(fp, 2).unwrap().pow(p as u32).is_zero(), "p = {p}");
            assert!(!P::basis(fp, 2).unwrap().pow(p as u32 - 1).is_zero());
        }
    }

    #[test]
    fn basis_products_pick_up_binomials() {
        for n in 1..=12 {
            for m in 1..=12 {
                let lhs = &P::basis(RingId::Integers, n + 1).unwrap() * &P::basis(RingId::Integers, m + 1).unwrap();
                let rhs = P::basis(RingId::Integers, n + m + 1)
                    .unwrap()
                    .scale_integer(&binomial(n + m, n).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn stats() {
        let s = z(&[0, 0, 3]).stats();
        assert_eq!(s.support, BTreeSet::from([2]));
        assert_eq!((s.delta, s.pi), (Some(2), Some(2)));
        let s = z(&[1, 0, 5]).stats();
        assert_eq!(s.support, BTreeSet::from([0, 2]));
        assert_eq!((s.delta, s.pi), (Some(2), Some(0)));
        let s = P::zero(RingId::Integers).stats();
        assert!(s.support.is_empty());
        assert_eq!((s.delta, s.pi), (None, None));
    }

    #[test]
    fn derivation_shifts() {
        assert_eq!(z(&[0, 1]).derivation(), z(&[1]));
        assert_eq!(z(&[0, 0, 2]).derivation(), z(&[0, 2]));
        let f = z(&[2, -1, 3]);
        let g = z(&[1, 4]);
        let lhs = (&f * &g).derivation();
        let rhs = &(&f.derivation() * &g) + &(&f * &g.derivation());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generic_scalars_agree_with_tagged_rings() {
        let ints = Exact::<BigInt>::new();
        let f = HurwitzPoly::new(ints, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(5)]);
        let g = HurwitzPoly::new(ints, vec![BigInt::from(1), BigInt::from(4)]);
        let prod = &f * &g;
        let tagged = &z(&[2, -3, 5]) * &z(&[1, 4]);
        let as_ints: Vec<BigInt> = tagged.coeffs().iter().map(|c| c.to_integer()).collect();
        assert_eq!(prod.coeffs(), &as_ints[..]);
    }
}

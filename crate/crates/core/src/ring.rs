//! Coefficient rings.
//!
//! Four concrete commutative rings are supported, selected at runtime through
//! [`RingId`]: the integers, the rationals, a prime field `F_p` and the
//! localization `Z_(p)`. Every element is stored as a reduced [`BigRational`];
//! prime-field residues are kept as integers in `[0, p)`.
//!
//! The [`CoeffRing`] trait is the scalar abstraction the Hurwitz arithmetic is
//! written against. It is implemented by [`RingId`], by [`Exact`] (any
//! characteristic-0 `num_traits::Num` scalar such as `BigInt` or
//! `BigRational`) and by [`crate::modular::ModulusRing`].

use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Scalar arithmetic a Hurwitz polynomial needs from its coefficient ring.
///
/// The ring is a value (it may carry a modulus), elements are plain data.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Image of an integer under the canonical map `Z -> R`.
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, n: &BigInt) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn mul_integer(&self, n: &BigInt, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_integer(n), a)
    }
}

/// Any exact `num_traits` scalar of characteristic 0 (e.g. `BigInt`,
/// `BigRational`) viewed as a coefficient ring.
pub struct Exact<T>(PhantomData<T>);

impl<T> Exact<T> {
    pub const fn new() -> Self {
        Exact(PhantomData)
    }
}

impl<T> Default for Exact<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Exact<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for Exact<T> {}

impl<T> PartialEq for Exact<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> fmt::Debug for Exact<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Exact<{}>", std::any::type_name::<T>())
    }
}

impl<T> fmt::Display for Exact<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", std::any::type_name::<T>())
    }
}

impl<T> CoeffRing for Exact<T>
where
    T: num_traits::Num + Clone + fmt::Debug + From<BigInt>,
{
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn neg(&self, a: &T) -> T {
        T::zero() - a.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn from_integer(&self, n: &BigInt) -> T {
        T::from(n.clone())
    }
}

/// A prime below `2^31`, checked by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub const MAX: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Prime> {
        if p >= Self::MAX || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The supported coefficient rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingId {
    Integers,
    Rationals,
    PrimeField(Prime),
    LocalizedAtP(Prime),
}

/// Intersection of all non-zero prime ideals of a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoRadical {
    ZeroIdeal,
    /// Fields have no non-zero primes; the empty intersection is the whole ring.
    WholeRing,
    Principal(RingElem),
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingId::Integers => write!(f, "Z"),
            RingId::Rationals => write!(f, "Q"),
            RingId::PrimeField(p) => write!(f, "Fp({p})"),
            RingId::LocalizedAtP(p) => write!(f, "Zloc({p})"),
        }
    }
}

impl RingId {
    pub fn prime_field(p: u64) -> Result<RingId> {
        Ok(RingId::PrimeField(Prime::new(p)?))
    }

    pub fn localized(p: u64) -> Result<RingId> {
        Ok(RingId::LocalizedAtP(Prime::new(p)?))
    }

    pub fn is_field(self) -> bool {
        matches!(self, RingId::Rationals | RingId::PrimeField(_))
    }

    pub fn has_characteristic_zero(self) -> bool {
        !matches!(self, RingId::PrimeField(_))
    }

    /// The prime of `F_p` or `Z_(p)`.
    pub fn prime(self) -> Option<Prime> {
        match self {
            RingId::PrimeField(p) | RingId::LocalizedAtP(p) => Some(p),
            _ => None,
        }
    }

    pub fn frac_field(self) -> RingId {
        match self {
            RingId::Integers | RingId::LocalizedAtP(_) => RingId::Rationals,
            field => field,
        }
    }

    pub fn pseudo_radical(self) -> PseudoRadical {
        match self {
            RingId::Integers => PseudoRadical::ZeroIdeal,
            RingId::Rationals | RingId::PrimeField(_) => PseudoRadical::WholeRing,
            RingId::LocalizedAtP(p) => {
                PseudoRadical::Principal(self.int(i64::from(p.get())))
            }
        }
    }

    /// Validates and canonicalizes a rational value as an element of this ring.
    pub fn elem(self, value: BigRational) -> Result<RingElem> {
        let value = self.canonical(value)?;
        Ok(RingElem { ring: self, value })
    }

    pub fn int(self, n: i64) -> RingElem {
        RingElem {
            ring: self,
            value: self.reduce(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn contains(self, value: &BigRational) -> bool {
        match self {
            RingId::Integers => value.is_integer(),
            RingId::Rationals => true,
            RingId::PrimeField(p) => !(value.denom() % p.to_bigint()).is_zero(),
            RingId::LocalizedAtP(p) => !(value.denom() % p.to_bigint()).is_zero(),
        }
    }

    pub(crate) fn canonical(self, value: BigRational) -> Result<BigRational> {
        if !self.contains(&value) {
            return Err(Error::NotInRing {
                value: value.to_string(),
                ring: self,
            });
        }
        Ok(match self {
            RingId::PrimeField(p) => {
                let p = p.to_bigint();
                let inv = mod_inverse(value.denom(), &p).expect("denominator coprime to p");
                BigRational::from_integer((value.numer() * inv).mod_floor(&p))
            }
            _ => value,
        })
    }

    /// Reduction of an already-valid value (only prime fields need work).
    fn reduce(self, value: BigRational) -> BigRational {
        match self {
            RingId::PrimeField(p) => {
                if value.is_integer() {
                    BigRational::from_integer(value.numer().mod_floor(&p.to_bigint()))
                } else {
                    self.canonical(value).expect("valid prime-field value")
                }
            }
            _ => value,
        }
    }

    pub(crate) fn is_unit_value(self, value: &BigRational) -> bool {
        match self {
            RingId::Integers => value.abs().is_one(),
            RingId::Rationals | RingId::PrimeField(_) => !value.is_zero(),
            RingId::LocalizedAtP(p) => {
                !value.is_zero() && !(value.numer() % p.to_bigint()).is_zero()
            }
        }
    }
}

impl CoeffRing for RingId {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a + b)
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        self.reduce(-a)
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a - b)
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a * b)
    }
    fn from_integer(&self, n: &BigInt) -> BigRational {
        self.reduce(BigRational::from_integer(n.clone()))
    }
    fn mul_integer(&self, n: &BigInt, a: &BigRational) -> BigRational {
        self.reduce(a * n)
    }
}

/// An element of one of the supported rings, tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: RingId,
    value: BigRational,
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl RingElem {
    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn into_value(self) -> BigRational {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_ring(&self, other: &RingElem) -> Result<RingId> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(self.ring)
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        let ring = self.same_ring(other)?;
        Ok(RingElem { ring, value: ring.add(&self.value, &other.value) })
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem> {
        let ring = self.same_ring(other)?;
        Ok(RingElem { ring, value: ring.sub(&self.value, &other.value) })
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem> {
        let ring = self.same_ring(other)?;
        Ok(RingElem { ring, value: ring.mul(&self.value, &other.value) })
    }

    pub fn neg(&self) -> RingElem {
        RingElem { ring: self.ring, value: self.ring.neg(&self.value) }
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit_value(&self.value)
    }

    pub fn invert(&self) -> Result<RingElem> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(format!("{} in {}", self.value, self.ring)));
        }
        let inv = match self.ring {
            RingId::PrimeField(p) => {
                let p = p.to_bigint();
                BigRational::from_integer(
                    mod_inverse(self.value.numer(), &p).expect("non-zero residue"),
                )
            }
            _ => self.value.recip(),
        };
        Ok(RingElem { ring: self.ring, value: inv })
    }

    /// Greatest common divisor, defined for the UFDs `Z` and `Z_(p)`.
    ///
    /// Over `Z_(p)` every element is a unit times `p^v`, so the gcd is
    /// `p^min(v(a), v(b))` (and `0` when both arguments vanish).
    pub fn gcd(&self, other: &RingElem) -> Result<RingElem> {
        let ring = self.same_ring(other)?;
        let value = match ring {
            RingId::Integers => BigRational::from_integer(self.value.numer().gcd(other.value.numer())),
            RingId::LocalizedAtP(p) => {
                match (p_valuation(&self.value, p), p_valuation(&other.value, p)) {
                    (None, None) => BigRational::zero(),
                    (Some(v), None) | (None, Some(v)) => p_power(p, v),
                    (Some(a), Some(b)) => p_power(p, a.min(b)),
                }
            }
            _ => return Err(Error::UnsupportedRing { op: "gcd", ring }),
        };
        Ok(RingElem { ring, value })
    }

    /// Whether `self` divides `other` in the ring.
    pub fn divides(&self, other: &RingElem) -> Result<bool> {
        let ring = self.same_ring(other)?;
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(ring.contains(&(&other.value / &self.value)))
    }
}

/// `p`-adic valuation of a non-zero rational; `None` for zero.
pub fn p_valuation(value: &BigRational, p: Prime) -> Option<i64> {
    if value.is_zero() {
        return None;
    }
    let p = p.to_bigint();
    Some(int_valuation(value.numer(), &p) as i64 - int_valuation(value.denom(), &p) as i64)
}

pub(crate) fn int_valuation(n: &BigInt, p: &BigInt) -> u64 {
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

fn p_power(p: Prime, v: i64) -> BigRational {
    let p = BigRational::from_integer(p.to_bigint());
    if v >= 0 {
        num_traits::pow(p, v as usize)
    } else {
        num_traits::pow(p, (-v) as usize).recip()
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        let z = RingId::Integers;
        assert_eq!(z.int(2).add(&z.int(3)).unwrap(), z.int(5));

        let loc = RingId::localized(5).unwrap();
        let a = loc.elem(q(1, 2)).unwrap();
        let b = loc.elem(q(2, 3)).unwrap();
        assert_eq!(a.mul(&b).unwrap(), loc.elem(q(1, 3)).unwrap());

        let f3 = RingId::prime_field(3).unwrap();
        assert_eq!(f3.int(2).add(&f3.int(2)).unwrap(), f3.int(1));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let err = RingId::Integers.int(1).add(&RingId::Rationals.int(1)).unwrap_err();
        assert!(matches!(err, Error::RingMismatch(..)));
    }

    #[test]
    fn units() {
        assert!(RingId::Integers.int(-1).is_unit());
        let loc = RingId::localized(5).unwrap();
        assert!(!loc.int(5).is_unit());
        let a = loc.elem(q(2, 3)).unwrap();
        assert!(a.is_unit());
        assert_eq!(a.invert().unwrap(), loc.elem(q(3, 2)).unwrap());
        assert!(matches!(loc.int(10).invert(), Err(Error::NotAUnit(_))));
        let f7 = RingId::prime_field(7).unwrap();
        assert_eq!(f7.int(3).invert().unwrap(), f7.int(5));
    }

    #[test]
    fn gcd_examples() {
        let z = RingId::Integers;
        assert_eq!(z.int(4).gcd(&z.int(6)).unwrap(), z.int(2));
        assert_eq!(z.int(0).gcd(&z.int(7)).unwrap(), z.int(7));
        let loc = RingId::localized(2).unwrap();
        assert_eq!(loc.int(4).gcd(&loc.int(6)).unwrap(), loc.int(2));
        assert!(matches!(
            RingId::Rationals.int(1).gcd(&RingId::Rationals.int(2)),
            Err(Error::UnsupportedRing { .. })
        ));
    }

    #[test]
    fn pseudo_radicals_and_fraction_fields() {
        assert_eq!(RingId::Integers.pseudo_radical(), PseudoRadical::ZeroIdeal);
        assert_eq!(RingId::Rationals.pseudo_radical(), PseudoRadical::WholeRing);
        let loc = RingId::localized(5).unwrap();
        assert_eq!(loc.pseudo_radical(), PseudoRadical::Principal(loc.int(5)));

        assert_eq!(RingId::Integers.frac_field(), RingId::Rationals);
        let f3 = RingId::prime_field(3).unwrap();
        assert_eq!(f3.frac_field(), f3);
        assert_eq!(RingId::localized(7).unwrap().frac_field(), RingId::Rationals);
    }

    #[test]
    fn pseudo_radical_of_z_is_trivial_on_finite_prime_sets() {
        // A non-zero integer lies in only finitely many pZ.
        let primes = [2u64, 3, 5, 7, 11, 13];
        let product: i64 = primes.iter().map(|&p| p as i64).product();
        for n in 1..=product {
            let in_all = primes.iter().all(|&p| n % p as i64 == 0);
            assert_eq!(in_all, n == product);
        }
        // the unique non-zero prime of Z_(5) is (5): every non-unit is a multiple of 5
        let loc = RingId::localized(5).unwrap();
        for n in 1..60 {
            let e = loc.int(n);
            assert_eq!(!e.is_unit(), loc.int(5).divides(&e).unwrap());
        }
    }

    #[test]
    fn element_validation() {
        assert!(RingId::Integers.elem(q(1, 2)).is_err());
        let loc = RingId::localized(5).unwrap();
        assert!(loc.elem(q(1, 5)).is_err());
        assert!(loc.elem(q(3, 10)).is_err());
        let f5 = RingId::prime_field(5).unwrap();
        assert_eq!(f5.elem(q(1, 2)).unwrap(), f5.int(3));
        assert_eq!(f5.int(-1), f5.int(4));
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(91).is_err());
        assert!(Prime::new(Prime::MAX + 11).is_err());
        assert_eq!(Prime::new(2_147_483_647).unwrap().get(), 2_147_483_647);
    }
}

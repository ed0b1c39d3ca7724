//! Reductions `hR -> h(Z/m)` and arithmetic in `h(Z/m)`.
//!
//! In `h(Z/m)` every element with zero constant term is nilpotent, so an
//! element is a unit exactly when its constant term is a unit mod `m`. The
//! inverse is a finite geometric series.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hurwitz::HurwitzPoly;
use crate::ring::{int_valuation, mod_inverse, CoeffRing, RingId};

/// Iteration cap for [`invert_mod`] and [`nilpotency_index`].
pub const DEFAULT_NILPOTENCY_CAP: usize = 512;

/// The residue ring `Z/m`, `m >= 2`; residues are canonical in `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModulusRing {
    modulus: BigInt,
}

impl ModulusRing {
    pub fn new(m: impl Into<BigInt>) -> Result<Self> {
        let modulus = m.into();
        if modulus < BigInt::from(2) {
            return Err(Error::BadModulus {
                modulus: modulus.to_string(),
                reason: "modulus must be at least 2".into(),
            });
        }
        Ok(ModulusRing { modulus })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn residue(&self, n: &BigInt) -> BigInt {
        n.mod_floor(&self.modulus)
    }

    pub fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        mod_inverse(a, &self.modulus)
    }

    /// `a` is nilpotent mod `m` iff every prime factor of `m` divides `a`,
    /// i.e. iff `a^e ≡ 0` for `e` the largest exponent in `m`.
    pub fn is_nilpotent(&self, a: &BigInt) -> bool {
        let bits = self.modulus.bits() as u32;
        num_traits::pow(self.residue(a), bits as usize)
            .mod_floor(&self.modulus)
            .is_zero()
    }
}

impl fmt::Display for ModulusRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Zmod({})", self.modulus)
    }
}

impl CoeffRing for ModulusRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.residue(&(a + b))
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        self.residue(&-a)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.residue(&(a * b))
    }
    fn from_integer(&self, n: &BigInt) -> BigInt {
        self.residue(n)
    }
}

/// Coefficient-wise reduction of a polynomial over `Z` or `Z_(p)` modulo `m`.
///
/// Over `Z_(p)` the modulus must be a power of `p`, so every denominator is
/// invertible.
pub fn reduce_mod(f: &HurwitzPoly<RingId>, m: &BigInt) -> Result<HurwitzPoly<ModulusRing>> {
    let target = ModulusRing::new(m.clone())?;
    match f.ring_id() {
        RingId::Integers => {}
        RingId::LocalizedAtP(p) => {
            let pb = p.to_bigint();
            let v = int_valuation(m, &pb);
            if num_traits::pow(pb, v as usize) != *m {
                return Err(Error::BadModulus {
                    modulus: m.to_string(),
                    reason: format!("must be a power of {p} over {}", f.ring_id()),
                });
            }
        }
        ring => return Err(Error::UnsupportedRing { op: "reduce_mod", ring }),
    }
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        let inv = target.inverse(c.denom()).ok_or_else(|| Error::BadModulus {
            modulus: m.to_string(),
            reason: format!("denominator of {c} is not invertible"),
        })?;
        coeffs.push(target.mul(&target.residue(c.numer()), &inv));
    }
    Ok(HurwitzPoly::new(target, coeffs))
}

/// Lifts residues (taken in `[0, m)`) back to a characteristic-0 ring.
pub fn lift(f: &HurwitzPoly<ModulusRing>, ring: RingId) -> HurwitzPoly<RingId> {
    f.map_ring(ring, |c| ring.from_integer(c))
}

/// Inverse of `fbar` in `h(Z/m)` with the default iteration cap.
pub fn invert_mod(fbar: &HurwitzPoly<ModulusRing>) -> Result<HurwitzPoly<ModulusRing>> {
    invert_mod_with_cap(fbar, DEFAULT_NILPOTENCY_CAP)
}

/// Writes `fbar = c (h_1 + u)` with `u(0) = 0` and returns
/// `c^{-1} * sum_k (-u)^k`, stopping when the power vanishes.
pub fn invert_mod_with_cap(
    fbar: &HurwitzPoly<ModulusRing>,
    cap: usize,
) -> Result<HurwitzPoly<ModulusRing>> {
    let ring = fbar.ring().clone();
    let c = fbar.coeff(0);
    let c_inv = ring
        .inverse(&c)
        .ok_or_else(|| Error::NotAUnit(format!("{fbar:?} (constant term {c} mod {})", ring.modulus())))?;
    let one = HurwitzPoly::one(ring.clone());
    let minus_u = &one - &fbar.scale(&c_inv);
    let mut sum = one.clone();
    let mut term = one;
    for _ in 0..cap {
        term = &term * &minus_u;
        if term.is_zero() {
            return Ok(sum.scale(&c_inv));
        }
        sum = &sum + &term;
    }
    Err(Error::NilpotencyBudgetExceeded(cap))
}

/// Smallest `N <= cap` with `fbar^N = 0`.
pub fn nilpotency_index(fbar: &HurwitzPoly<ModulusRing>, cap: usize) -> Option<usize> {
    if fbar.is_zero() {
        return Some(1);
    }
    // the constant term of fbar^N is fbar(0)^N
    if !fbar.ring().is_nilpotent(&fbar.coeff(0)) {
        return None;
    }
    let mut power = fbar.clone();
    for n in 1..=cap {
        if power.is_zero() {
            return Some(n);
        }
        if n < cap {
            power = &power * fbar;
        }
    }
    None
}

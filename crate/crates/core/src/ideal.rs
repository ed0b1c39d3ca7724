//! Principal closed ideals `[f]` of `hR` for `R = Z`, `Q` or `Z_(p)`.
//!
//! Over a characteristic-0 domain `[f] = hF·f0 ∩ hR`, where `f0` is the
//! monic associate of the transform of `f`. So `g ∈ [f]` iff `f0` divides the
//! transform of `g`.
//!
//! The members of Hurwitz degree `<= k` form a lattice `M_k` in `R^{k+1}`
//! (coordinates are Hurwitz coefficients). It is the integer kernel of the
//! linear map `x ↦ Σ x_m x^m/m! mod f0`, and it drives the constant-term
//! and leading-coefficient computations.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hurwitz::HurwitzPoly;
use crate::irreducible::{content_primitive, factor_ordinary, is_irreducible_ordinary, lattice_scale, DEFAULT_DEGREE_CAP};
use crate::lattice::{coordinate_generator, integer_kernel};
use crate::ordinary::{from_ordinary, to_ordinary, OrdinaryPoly};
use crate::ring::{int_valuation, RingElem, RingId};

type Hurwitz = HurwitzPoly<RingId>;

/// Largest Hurwitz degree for which member lattices are built.
pub const LATTICE_DEGREE_LIMIT: usize = 256;

type Basis = Arc<Vec<Vec<BigInt>>>;

pub struct ClosedIdeal {
    ring: RingId,
    generator: Hurwitz,
    primitive: Hurwitz,
    f0: OrdinaryPoly,
    degree_cap: usize,
    lattices: RwLock<BTreeMap<usize, Basis>>,
}

impl Clone for ClosedIdeal {
    fn clone(&self) -> Self {
        let cache = self.lattices.read().expect("lattice cache poisoned").clone();
        ClosedIdeal {
            ring: self.ring,
            generator: self.generator.clone(),
            primitive: self.primitive.clone(),
            f0: self.f0.clone(),
            degree_cap: self.degree_cap,
            lattices: RwLock::new(cache),
        }
    }
}

/// Equality of ideals: same ring, same `f0`.
impl PartialEq for ClosedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.f0 == other.f0
    }
}

impl fmt::Debug for ClosedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] over {} (f0 = {})", self.generator.coeffs(), self.ring, self.f0)
    }
}

/// `[f]` with the default degree cap.
pub fn mk_closed(f: &Hurwitz) -> Result<ClosedIdeal> {
    ClosedIdeal::new(f, DEFAULT_DEGREE_CAP)
}

impl ClosedIdeal {
    pub fn new(f: &Hurwitz, degree_cap: usize) -> Result<Self> {
        let ring = f.ring_id();
        if !matches!(ring, RingId::Integers | RingId::Rationals | RingId::LocalizedAtP(_)) {
            return Err(Error::UnsupportedRing { op: "mk_closed", ring });
        }
        if f.degree().is_none_or(|d| d == 0) {
            return Err(Error::NotInGamma);
        }
        let f0 = to_ordinary(f)?.monic();
        let primitive = match ring {
            RingId::Rationals => from_ordinary(&f0, ring)?,
            _ => content_primitive(f)?.1,
        };
        Ok(ClosedIdeal {
            ring,
            generator: f.clone(),
            primitive,
            f0,
            degree_cap,
            lattices: RwLock::new(BTreeMap::new()),
        })
    }

    /// The ideal generated (as a closed ideal) by a monic `q`, using the
    /// lattice-primitive Hurwitz representative of `q`.
    pub fn from_monic(q: &OrdinaryPoly, ring: RingId, degree_cap: usize) -> Result<Self> {
        let g = from_ordinary(&q.monic().scale(&lattice_scale(q, ring)), ring)?;
        ClosedIdeal::new(&g, degree_cap)
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn generator(&self) -> &Hurwitz {
        &self.generator
    }

    /// Content-free generator; for `Q` the Hurwitz form of `f0`.
    pub fn primitive_generator(&self) -> &Hurwitz {
        &self.primitive
    }

    pub fn f0(&self) -> &OrdinaryPoly {
        &self.f0
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn min_degree(&self) -> usize {
        self.f0.degree().expect("nonconstant")
    }

    fn check_cap(&self) -> Result<()> {
        let d = self.min_degree();
        if d > self.degree_cap {
            return Err(Error::DegreeTooLarge { degree: d, cap: self.degree_cap });
        }
        Ok(())
    }

    pub fn contains(&self, g: &Hurwitz) -> Result<bool> {
        if g.ring_id() != self.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), g.ring_id().to_string()));
        }
        if g.is_zero() {
            return Ok(true);
        }
        self.f0.divides(&to_ordinary(g)?)
    }

    /// Integer basis (Hermite normal form) of the members of Hurwitz degree
    /// `<= k`, as vectors of Hurwitz coefficients. Over `Z_(p)` the lattice
    /// of members is this basis tensored with `Z_(p)`.
    pub fn member_lattice(&self, k: usize) -> Result<Basis> {
        if self.ring == RingId::Rationals {
            return Err(Error::UnsupportedRing { op: "member_lattice", ring: self.ring });
        }
        if k > LATTICE_DEGREE_LIMIT {
            return Err(Error::BudgetExceeded(format!("member lattice of degree {k}")));
        }
        if let Some(b) = self.lattices.read().expect("lattice cache poisoned").get(&k) {
            return Ok(b.clone());
        }
        let basis = Arc::new(self.compute_lattice(k));
        let mut cache = self.lattices.write().expect("lattice cache poisoned");
        Ok(cache.entry(k).or_insert(basis).clone())
    }

    fn compute_lattice(&self, k: usize) -> Vec<Vec<BigInt>> {
        let d = self.min_degree();
        let f0 = self.f0.coeffs();
        // columns: x^m/m! mod f0, as coefficient vectors of length d
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(k + 1);
        let mut r = vec![BigRational::zero(); d];
        r[0] = BigRational::one();
        if d == 0 {
            r.clear();
        }
        for m in 0..=k {
            if m > 0 {
                // r <- x r / m mod f0
                let top = r.last().cloned().unwrap_or_else(BigRational::zero);
                let mut next = vec![BigRational::zero(); d];
                next[1..d].clone_from_slice(&r[..d - 1]);
                for i in 0..d {
                    next[i] -= &top * &f0[i];
                }
                let mm = BigRational::from_integer(m.into());
                r = next.into_iter().map(|c| c / &mm).collect();
            }
            cols.push(r.clone());
        }
        let rows: Vec<Vec<BigInt>> = (0..d)
            .map(|i| {
                let den = cols.iter().fold(BigInt::one(), |acc, c| acc.lcm(c[i].denom()));
                cols.iter()
                    .map(|c| (&c[i] * BigRational::from_integer(den.clone())).to_integer())
                    .collect()
            })
            .collect();
        integer_kernel(&rows, k + 1)
    }

    fn to_member(&self, v: &[BigInt]) -> Hurwitz {
        Hurwitz::new(self.ring, v.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Generator of the ideal of `col`-th coefficients over `M_k` together
    /// with a member attaining it.
    fn coordinate_ideal(&self, k: usize, col: usize) -> Result<(RingElem, Option<Hurwitz>)> {
        let basis = self.member_lattice(k)?;
        let Some((gcd, v)) = coordinate_generator(&basis, col) else {
            return Ok((self.ring.int(0), None));
        };
        match self.ring {
            RingId::LocalizedAtP(p) => {
                let pb = p.to_bigint();
                let pv = num_traits::pow(pb.clone(), int_valuation(&gcd, &pb) as usize);
                let unit = BigRational::new(gcd / &pv, BigInt::one());
                let member = self.to_member(&v).scale(&unit.recip());
                Ok((self.ring.elem(BigRational::from_integer(pv))?, Some(member)))
            }
            _ => Ok((self.ring.elem(BigRational::from_integer(gcd))?, Some(self.to_member(&v)))),
        }
    }

    /// `C_k`: the ideal of constant terms of members of degree `<= k`.
    pub fn constant_ideal(&self, k: usize) -> Result<RingElem> {
        Ok(self.constant_member(k)?.0)
    }

    /// `C_k` together with a member whose constant term is the generator.
    pub fn constant_member(&self, k: usize) -> Result<(RingElem, Option<Hurwitz>)> {
        self.require_lattice_ring("constant_ideal")?;
        if k < self.min_degree() {
            return Ok((self.ring.int(0), None));
        }
        self.coordinate_ideal(k, 0)
    }

    /// Leading coefficients of members of Hurwitz degree exactly `k`
    /// (together with `0`), with a member attaining the generator.
    pub fn leading_member(&self, k: usize) -> Result<(RingElem, Option<Hurwitz>)> {
        self.require_lattice_ring("leading_ideal")?;
        if k < self.min_degree() {
            return Ok((self.ring.int(0), None));
        }
        self.coordinate_ideal(k, k)
    }

    fn require_lattice_ring(&self, op: &'static str) -> Result<()> {
        match self.ring {
            RingId::Integers | RingId::LocalizedAtP(_) => Ok(()),
            ring => Err(Error::UnsupportedRing { op, ring }),
        }
    }

    /// `Min`, `τ` and the leading-coefficient ideal truncated to degrees
    /// `<= Min + window`. `τ` and `ρ` are reported as Hurwitz leading
    /// coefficients.
    pub fn min_tau_rho(&self, window: usize) -> Result<TauRho> {
        self.require_lattice_ring("min_tau_rho")?;
        let min = self.min_degree();
        let tau = self.leading_member(min)?.0;
        let mut rho = tau.clone();
        let mut history = vec![rho.clone()];
        for k in min + 1..=min + window {
            let (lead, _) = self.leading_member(k)?;
            rho = rho.gcd(&lead)?;
            history.push(rho.clone());
        }
        let stabilized = history.len() >= 3 && history[history.len() - 3..].iter().all(|r| r == &rho);
        Ok(TauRho { min, tau, rho_truncated: rho, stabilized })
    }

    pub fn is_prime(&self) -> Result<bool> {
        self.check_cap()?;
        is_irreducible_ordinary(&self.f0, self.degree_cap)
    }

    /// Prime closed ideals `[p_i]` with multiplicities `e_i`, `f0 = Π p_i^{e_i}`.
    pub fn factor_closed(&self) -> Result<Vec<(ClosedIdeal, u32)>> {
        self.check_cap()?;
        factor_ordinary(&self.f0, self.degree_cap)?
            .factors
            .into_iter()
            .map(|(p, e)| Ok((ClosedIdeal::from_monic(&p, self.ring, self.degree_cap)?, e)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TauRho {
    pub min: usize,
    pub tau: RingElem,
    pub rho_truncated: RingElem,
    pub stabilized: bool,
}

/// Membership through an explicit factor list: `Π p_i^{e_i}` divides the
/// transform of `g`.
pub fn contained_in_factors(factors: &[(ClosedIdeal, u32)], g: &Hurwitz) -> Result<bool> {
    if g.is_zero() {
        return Ok(true);
    }
    let t = to_ordinary(g)?;
    for (p, e) in factors {
        if !p.f0().pow(*e).divides(&t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `true` if the coefficients of `g` lie in the ideal generated by `c`.
pub(crate) fn all_coefficients_in(g: &Hurwitz, c: &RingElem, from: usize) -> bool {
    (from..g.coeffs().len()).all(|i| c.divides(&g.elem(i)).unwrap_or(false))
}

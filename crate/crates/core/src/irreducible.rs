//! Content and primitive parts, factorization over `Q`, complete
//! irreducibility, and exact irreducibility in `hZ`.
//!
//! Factorization over `Q` uses the rational-root test followed by Kronecker's
//! interpolation search, which is deterministic and exact for the small
//! degrees handled here (default cap 8).
//!
//! Irreducibility in `hZ` is not the same as irreducibility of the transform
//! over `Q`: `hZ` sits inside `Q[x]` as the lattice of polynomials with
//! `n! a_n ∈ Z`, and Gauss's lemma fails for that lattice. For example
//! `(0,1,1) ↔ x + x²/2 = x(x + 2)/2` is irreducible in `hZ` although its
//! transform splits. [`hr_factorization`] decides the question exactly by
//! running over all divisors of the transform.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binomial::{binomial_row, factorial};
use crate::error::{Error, Result};
use crate::hurwitz::HurwitzPoly;
use crate::ordinary::{from_ordinary, to_ordinary, OrdinaryPoly};
use crate::ring::{p_valuation, RingElem, RingId};

type Hurwitz = HurwitzPoly<RingId>;

pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Largest absolute value whose divisors we enumerate by trial division.
const DIVISOR_LIMIT: u64 = 1 << 40;

/// `unit · Π factor^multiplicity`, factors monic irreducible over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub unit: BigRational,
    pub factors: Vec<(OrdinaryPoly, u32)>,
}

impl FactorizationResult {
    pub fn product(&self) -> OrdinaryPoly {
        self.factors
            .iter()
            .fold(OrdinaryPoly::constant(self.unit.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }
}

/// Evidence that `f` is not completely irreducible: `f ⊛ h'_b = h ⊛ g` with
/// `g ∈ Γ` and `Δ(g) < Δ(f)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeDropWitness {
    pub b: BigInt,
    pub h: Hurwitz,
    pub g: Hurwitz,
}

impl DegreeDropWitness {
    pub fn verify(&self, f: &Hurwitz) -> bool {
        let (Some(df), Some(dg)) = (f.degree(), self.g.degree()) else {
            return false;
        };
        let lhs = f.scale_integer(&self.b);
        !lhs.is_zero() && dg >= 1 && dg < df && lhs == &self.h * &self.g
    }
}

/// Outcome of comparing complete irreducibility with irreducibility in `hZ`.
#[derive(Clone, Debug, PartialEq)]
pub enum Remark16Outcome {
    Agrees { irreducible: bool },
    Disagrees(Remark16Witness),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Remark16Witness {
    /// Completely irreducible, yet `f = left ⊛ right` with both non-units of `hZ`.
    ReducibleInHr { left: Hurwitz, right: Hurwitz },
    /// Irreducible in `hZ` (no divisor of the transform splits over the
    /// lattice), yet not completely irreducible.
    NotCompletelyIrreducible(DegreeDropWitness),
}

/// `f = h'_d ⊛ g` with `g` primitive; `d` is the content.
pub fn content_primitive(f: &Hurwitz) -> Result<(RingElem, Hurwitz)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = f.ring_id();
    let d = match ring {
        RingId::Integers | RingId::LocalizedAtP(_) => {
            let mut d = f.elem(0);
            for i in 1..f.coeffs().len() {
                d = d.gcd(&f.elem(i))?;
            }
            d
        }
        _ => return Err(Error::UnsupportedRing { op: "content_primitive", ring }),
    };
    let inv = d.value().recip();
    Ok((d, f.scale(&inv)))
}

/// Membership in `Γ`; over a commutative ring this is just `Δ(f) >= 1`.
pub fn in_gamma(f: &Hurwitz) -> bool {
    f.degree().is_some_and(|d| d >= 1)
}

fn check_degree(q: &OrdinaryPoly, cap: usize) -> Result<usize> {
    let d = q.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if d > cap {
        return Err(Error::DegreeTooLarge { degree: d, cap });
    }
    Ok(d)
}

pub fn is_irreducible_ordinary(q: &OrdinaryPoly, cap: usize) -> Result<bool> {
    check_degree(q, cap)?;
    Ok(find_factor(&q.primitive_integer_form())?.is_none())
}

pub fn factor_ordinary(q: &OrdinaryPoly, cap: usize) -> Result<FactorizationResult> {
    check_degree(q, cap)?;
    let unit = q.leading().expect("non-zero").clone();
    let mut pending = vec![q.primitive_integer_form()];
    let mut irreducible = Vec::new();
    while let Some(p) = pending.pop() {
        match find_factor(&p)? {
            None => irreducible.push(p),
            Some(g) => {
                let (quot, rem) = OrdinaryPoly::from_integers(&p)
                    .divrem(&OrdinaryPoly::from_integers(&g))
                    .expect("non-zero factor");
                debug_assert!(rem.is_zero());
                pending.push(quot.primitive_integer_form());
                pending.push(g);
            }
        }
    }
    let mut counts: BTreeMap<Vec<BigRational>, u32> = BTreeMap::new();
    for p in irreducible {
        let monic = OrdinaryPoly::from_integers(&p).monic();
        *counts.entry(monic.coeffs().to_vec()).or_default() += 1;
    }
    let mut factors: Vec<(OrdinaryPoly, u32)> = counts
        .into_iter()
        .map(|(c, e)| (OrdinaryPoly::new(c), e))
        .collect();
    factors.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    let result = FactorizationResult { unit, factors };
    debug_assert_eq!(&result.product(), q);
    Ok(result)
}

/// Complete irreducibility of `f ∈ Γ`, decided by irreducibility of the
/// transform of its primitive part over the fraction field. Content is
/// ignored: constants are units over the fraction field.
pub fn is_completely_irreducible(f: &Hurwitz, cap: usize) -> Result<bool> {
    let ring = f.ring_id();
    if !ring.has_characteristic_zero() {
        return Err(Error::UnsupportedRing { op: "is_completely_irreducible", ring });
    }
    if !in_gamma(f) {
        return Err(Error::NotInGamma);
    }
    is_irreducible_ordinary(&to_ordinary(f)?, cap)
}

/// A nonconstant `f ∈ hR` that is not completely irreducible, with the
/// explicit degree-dropping relation. `None` when `f` is completely irreducible.
pub fn degree_drop_witness(f: &Hurwitz, cap: usize) -> Result<Option<DegreeDropWitness>> {
    let ring = f.ring_id();
    if !matches!(ring, RingId::Integers | RingId::Rationals | RingId::LocalizedAtP(_)) {
        return Err(Error::UnsupportedRing { op: "degree_drop_witness", ring });
    }
    if !in_gamma(f) {
        return Err(Error::NotInGamma);
    }
    let q = to_ordinary(f)?;
    let fac = factor_ordinary(&q, cap)?;
    if fac.factors.len() == 1 && fac.factors[0].1 == 1 {
        return Ok(None);
    }
    let d = fac.factors[0].0.clone();
    let e = q.divrem(&d)?.0.monic();
    let (td, te) = (lattice_scale(&d, ring), lattice_scale(&e, ring));
    // f h'_b = (n te E)(td D) with b = n td te / u
    let ratio = &td * &te / &fac.unit;
    let n = ratio.denom().clone();
    let b = (ratio * BigRational::from_integer(n.clone())).to_integer();
    let g = from_ordinary(&d.scale(&td), ring)?;
    let h = from_ordinary(&e.scale(&(te * BigRational::from_integer(n))), ring)?;
    let w = DegreeDropWitness { b, h, g };
    debug_assert!(w.verify(f));
    Ok(Some(w))
}

/// Generator of `{λ ∈ Q : from_ordinary(λ·q) ∈ hR}` as a fractional ideal
/// (positive for `Z`, a power of `p` for `Z_(p)`, `1` for `Q`).
pub(crate) fn lattice_scale(q: &OrdinaryPoly, ring: RingId) -> BigRational {
    let hurwitz: Vec<BigRational> = q
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| c * BigRational::from_integer(factorial(n)))
        .collect();
    match ring {
        RingId::LocalizedAtP(p) => {
            let v = hurwitz
                .iter()
                .filter_map(|c| p_valuation(c, p))
                .min()
                .unwrap_or(0);
            let pr = BigRational::from_integer(p.to_bigint());
            if v <= 0 {
                num_traits::pow(pr, (-v) as usize)
            } else {
                num_traits::pow(pr, v as usize).recip()
            }
        }
        RingId::Integers => {
            let num = hurwitz.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
            let den = hurwitz.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            BigRational::new(den, num)
        }
        _ => BigRational::one(),
    }
}

/// An explicit factorization `f = left ⊛ right` into non-units of `hZ`, or
/// `None` if `f` is irreducible in `hZ`.
///
/// A nonconstant `f` with transform `u·D·E` (`D`, `E` monic) factors as
/// `(λD)(u/λ·E)` inside `hZ` iff `u / (t_D t_E) ∈ Z`, where `t_Q` generates
/// the scalars carrying `Q` into `hZ`; running over all divisors `D` of the
/// transform therefore decides irreducibility.
pub fn hr_factorization(f: &Hurwitz, cap: usize) -> Result<Option<(Hurwitz, Hurwitz)>> {
    let ring = f.ring_id();
    if ring != RingId::Integers {
        return Err(Error::UnsupportedRing { op: "is_irreducible_hR", ring });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) && f.elem(0).is_unit() {
        return Err(Error::UnitInput);
    }
    let (d, g) = content_primitive(f)?;
    let d = d.value().to_integer();
    if f.degree() == Some(0) {
        return Ok(smallest_factor(&d.abs()).map(|a| {
            let b = f.coeff(0).to_integer() / &a;
            (constant_int(a), constant_int(b))
        }));
    }
    if !d.is_one() {
        return Ok(Some((constant_int(d), g)));
    }
    let q = to_ordinary(f)?;
    let fac = factor_ordinary(&q, cap)?;
    let exps: Vec<u32> = fac.factors.iter().map(|(_, e)| *e).collect();
    let total: Vec<u32> = exps.clone();
    let mut choice = vec![0u32; exps.len()];
    loop {
        // next multi-index in the box [0, e_i]
        let mut i = 0;
        while i < choice.len() && choice[i] == total[i] {
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
        choice[i] += 1;
        if choice == total {
            continue;
        }
        let pick = |sel: &dyn Fn(usize) -> u32| {
            fac.factors
                .iter()
                .enumerate()
                .fold(OrdinaryPoly::one(), |acc, (j, (p, _))| &acc * &p.pow(sel(j)))
        };
        let dpart = pick(&|j| choice[j]);
        let epart = pick(&|j| total[j] - choice[j]);
        let (td, te) = (lattice_scale(&dpart, ring), lattice_scale(&epart, ring));
        let n = &fac.unit / (&td * &te);
        if n.is_integer() {
            let left = from_ordinary(&dpart.scale(&td), ring)?;
            let right = from_ordinary(&epart.scale(&(n * te)), ring)?;
            debug_assert_eq!(&(&left * &right), f);
            return Ok(Some((left, right)));
        }
    }
    Ok(None)
}

fn constant_int(n: BigInt) -> Hurwitz {
    Hurwitz::new(RingId::Integers, vec![BigRational::from_integer(n)])
}

fn smallest_factor(n: &BigInt) -> Option<BigInt> {
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return Some(d);
        }
        d += 1;
    }
    None
}

pub fn is_irreducible_hr(f: &Hurwitz, cap: usize) -> Result<bool> {
    Ok(hr_factorization(f, cap)?.is_none())
}

/// Compares complete irreducibility with irreducibility in `hZ`.
pub fn remark16_check(f: &Hurwitz, cap: usize) -> Result<Remark16Outcome> {
    if f.ring_id() != RingId::Integers {
        return Err(Error::UnsupportedRing { op: "remark16_check", ring: f.ring_id() });
    }
    let complete = is_completely_irreducible(f, cap)?;
    let split = hr_factorization(f, cap)?;
    Ok(match (complete, split) {
        (true, Some((left, right))) => Remark16Outcome::Disagrees(Remark16Witness::ReducibleInHr { left, right }),
        (false, None) => {
            let w = degree_drop_witness(f, cap)?.expect("not completely irreducible");
            Remark16Outcome::Disagrees(Remark16Witness::NotCompletelyIrreducible(w))
        }
        (c, _) => Remark16Outcome::Agrees { irreducible: c },
    })
}

/// Brute-force search for `f ⊛ h'_b = h ⊛ g` with `g ∈ Γ`, `Δ(g) < Δ(f)`,
/// `Δ(g) <= degcap`, `0 < b <= height` and all coefficients of `g`, `h`
/// bounded by `height` in absolute value.
///
/// Quotients are computed by solving the convolution triangle directly, so
/// this never goes through the transform.
pub fn factor_witness_search(f: &Hurwitz, height: u32, degcap: usize) -> Option<DegreeDropWitness> {
    bounded_search(f, height, degcap, height as i64)
}

/// Brute-force search for `f = h ⊛ g` with `1 <= Δ(g) < Δ(f)`, `Δ(g) <= degcap`
/// and coefficients bounded by `height`; the `b = 1` case of
/// [`factor_witness_search`]. Independent of the transform.
pub fn hurwitz_factor_search(f: &Hurwitz, height: u32, degcap: usize) -> Option<(Hurwitz, Hurwitz)> {
    bounded_search(f, height, degcap, 1).map(|w| (w.h, w.g))
}

fn bounded_search(f: &Hurwitz, height: u32, degcap: usize, b_max: i64) -> Option<DegreeDropWitness> {
    let df = f.degree()?;
    if f.ring_id() != RingId::Integers || df < 1 || height == 0 {
        return None;
    }
    let target: Vec<BigInt> = f.coeffs().iter().map(|c| c.to_integer()).collect();
    let height = height as i64;
    for bound in 1..=height {
        for dg in 1..df.min(degcap + 1) {
            let mut g = vec![-bound; dg + 1];
            loop {
                let gmax = g.iter().map(|x| x.abs()).max().unwrap_or(0);
                if g[dg] > 0 {
                    for b in 1..=bound.min(b_max) {
                        if gmax.max(b) != bound {
                            continue;
                        }
                        let fb: Vec<BigInt> = target.iter().map(|c| c * b).collect();
                        let gi: Vec<BigInt> = g.iter().map(|&x| BigInt::from(x)).collect();
                        if let Some(h) = convolution_quotient(&fb, &gi) {
                            if h.iter().all(|x| x.abs() <= BigInt::from(height)) {
                                let to_poly = |v: &[BigInt]| {
                                    Hurwitz::new(
                                        RingId::Integers,
                                        v.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
                                    )
                                };
                                return Some(DegreeDropWitness { b: b.into(), h: to_poly(&h), g: to_poly(&gi) });
                            }
                        }
                    }
                }
                if !next_tuple(&mut g, bound) {
                    break;
                }
            }
        }
    }
    None
}

fn next_tuple(v: &mut [i64], bound: i64) -> bool {
    for x in v.iter_mut() {
        if *x < bound {
            *x += 1;
            return true;
        }
        *x = -bound;
    }
    false
}

/// Solves `t = h ⊛ g` for integer `h`, top coefficient first.
fn convolution_quotient(t: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let dt = t.len().checked_sub(1)?;
    let dg = g.len() - 1;
    let dh = dt.checked_sub(dg)?;
    let mut h = vec![BigInt::zero(); dh + 1];
    for j in (0..=dh).rev() {
        let n = dg + j;
        let row = binomial_row(n);
        let mut acc = t[n].clone();
        for k in j + 1..=dh {
            if k <= n && n - k <= dg {
                acc -= &row[k] * &h[k] * &g[n - k];
            }
        }
        let den = &row[j] * &g[dg];
        if !(&acc % &den).is_zero() {
            return None;
        }
        h[j] = acc / den;
    }
    // remaining equations below index dg
    for n in 0..dg.min(dt + 1) {
        let row = binomial_row(n);
        let mut acc = BigInt::zero();
        for k in 0..=n.min(dh) {
            acc += &row[k] * &h[k] * &g[n - k];
        }
        if acc != t[n] {
            return None;
        }
    }
    Some(h)
}

fn int_eval(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let Some(m) = n.to_u64().filter(|&m| m <= DIVISOR_LIMIT) else {
        return Err(Error::BudgetExceeded(format!("divisor enumeration of {n}")));
    };
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(BigInt::from(d));
            if d * d != m {
                large.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// A primitive factor of `f` of degree in `1..=deg f / 2`, if `f` is
/// reducible over `Q`. `f` is a primitive integer polynomial.
fn find_factor(f: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let deg = f.len().saturating_sub(1);
    if deg <= 1 {
        return Ok(None);
    }
    if f[0].is_zero() {
        return Ok(Some(vec![BigInt::zero(), BigInt::one()]));
    }
    // rational roots r/s: r | f(0), s | lc
    let lead = &f[deg];
    for s in positive_divisors(lead)? {
        for r in positive_divisors(&f[0])? {
            for r in [r.clone(), -r] {
                if !r.gcd(&s).is_one() {
                    continue;
                }
                let root = BigRational::new(r.clone(), s.clone());
                if OrdinaryPoly::from_integers(f).eval(&root).is_zero() {
                    return Ok(Some(vec![-r, s.clone()]));
                }
            }
        }
    }
    for target in 2..=deg / 2 {
        if let Some(g) = kronecker_search(f, target)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Kronecker's method for a factor of exact degree `target`.
fn kronecker_search(f: &[BigInt], target: usize) -> Result<Option<Vec<BigInt>>> {
    let npts = target + 1;
    let mut candidates: Vec<(BigInt, BigInt, usize)> = Vec::new();
    let mut step = 0i64;
    while candidates.len() < 2 * npts + 4 {
        let x = if step % 2 == 0 { -(step / 2) } else { step / 2 + 1 };
        step += 1;
        let x = BigInt::from(x);
        let v = int_eval(f, &x);
        if v.is_zero() {
            continue;
        }
        let ndiv = match v.abs().to_u64().filter(|&m| m <= DIVISOR_LIMIT) {
            Some(_) => positive_divisors(&v)?.len(),
            None => usize::MAX,
        };
        candidates.push((x, v, ndiv));
    }
    candidates.sort_by(|a, b| a.2.cmp(&b.2).then_with(|| a.1.abs().cmp(&b.1.abs())));
    let points: Vec<(BigInt, BigInt)> = candidates
        .into_iter()
        .take(npts)
        .map(|(x, v, _)| (x, v))
        .collect();
    let mut options: Vec<Vec<BigInt>> = Vec::with_capacity(npts);
    for (i, (_, v)) in points.iter().enumerate() {
        let pos = positive_divisors(v)?;
        options.push(if i == 0 {
            pos
        } else {
            pos.iter().flat_map(|d| [d.clone(), -d]).collect()
        });
    }
    let xs: Vec<BigInt> = points.iter().map(|(x, _)| x.clone()).collect();
    let fpoly = OrdinaryPoly::from_integers(f);
    let lead = f.last().expect("non-zero").clone();
    let mut idx = vec![0usize; npts];
    loop {
        let ys: Vec<BigInt> = idx.iter().enumerate().map(|(i, &j)| options[i][j].clone()).collect();
        if let Some(g) = interpolate_integer(&xs, &ys) {
            if g.len() == target + 1 && (&lead % &g[target]).is_zero() {
                let gpoly = OrdinaryPoly::from_integers(&g);
                if gpoly.divides(&fpoly)? {
                    return Ok(Some(gpoly.primitive_integer_form()));
                }
            }
        }
        let mut i = 0;
        while i < npts {
            idx[i] += 1;
            if idx[i] < options[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == npts {
            return Ok(None);
        }
    }
}

/// Newton interpolation through integer nodes; `None` as soon as a divided
/// difference is not integral (an integer polynomial has integral ones).
fn interpolate_integer(xs: &[BigInt], ys: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            if !(&num % &den).is_zero() {
                return None;
            }
            dd[i] = num / den;
        }
    }
    // expand the Newton form
    let mut poly = vec![BigInt::zero(); n];
    for k in (0..n).rev() {
        // poly = poly * (x - xs[k]) + dd[k]
        let mut next = vec![BigInt::zero(); n];
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += c;
            }
            next[i] -= c * &xs[k];
        }
        next[0] += &dd[k];
        poly = next;
    }
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    Some(poly)
}

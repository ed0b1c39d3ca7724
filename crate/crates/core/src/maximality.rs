//! Maximality of closed prime ideals, with certificates.
//!
//! Every verdict other than `Unknown` carries evidence that
//! [`verify_certificate`] re-checks by direct arithmetic. Positive verdicts
//! rest on members with unit constant term: if `g ∈ M` has `g(0)` a unit and
//! `M ⊊ I`, then `I` meets `R` in some `c ≠ 0` and `g` is invertible in
//! `h(R/c)`, so `h_1 ∈ I`. Negative verdicts rest on p-adic obstructions
//! forcing every constant term into `(p)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hurwitz::HurwitzPoly;
use crate::ideal::{all_coefficients_in, ClosedIdeal};
use crate::modular::{invert_mod, lift, reduce_mod};
use crate::ordinary::OrdinaryPoly;
use crate::ring::{is_prime_u64, PseudoRadical, RingElem, RingId};

type Hurwitz = HurwitzPoly<RingId>;

/// `F(0) ≡ 0`, `F'(0) ≢ 0 (mod p)` for the primitive integer form `F` of
/// `f0`. Hensel's lemma then gives a root `α` with `v_p(α) >= 1`, and since
/// `v_p(α^n/n!) >= 1` for `n >= 1`, every member `g` has
/// `g(0) = -Σ g(n) α^n/n! ∈ (p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HenselCertificate {
    pub p: BigInt,
    pub poly: Vec<BigInt>,
    pub value_at_zero: BigInt,
    pub derivative_at_zero: BigInt,
}

impl HenselCertificate {
    pub fn verify(&self, ideal: &ClosedIdeal) -> bool {
        hensel_condition(ideal, &self.p).as_ref() == Some(self)
    }
}

/// The reversed polynomial satisfies the Hensel condition: `lead(F) ≡ 0` and
/// `F_{d-1} ≢ 0 (mod p)`. This gives a root `α = 1/β` with `v_p(β) >= 1`. For a
/// member `g` of degree `k`, `g(k) = -Σ_{n<k} g(n) β^{k-n} k!/n!` lies in `(p)`.
/// So the whole leading-coefficient ideal lies in `(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingCertificate {
    pub p: BigInt,
    pub poly: Vec<BigInt>,
    pub leading: BigInt,
    pub subleading: BigInt,
}

impl LeadingCertificate {
    pub fn verify(&self, ideal: &ClosedIdeal) -> bool {
        leading_condition(ideal, &self.p).as_ref() == Some(self)
    }
}

fn hensel_condition(ideal: &ClosedIdeal, p: &BigInt) -> Option<HenselCertificate> {
    let poly = ideal.f0().primitive_integer_form();
    let value_at_zero = poly[0].clone();
    let derivative_at_zero = poly.get(1).cloned().unwrap_or_default();
    ((&value_at_zero % p).is_zero() && !(&derivative_at_zero % p).is_zero()).then(|| HenselCertificate {
        p: p.clone(),
        poly,
        value_at_zero,
        derivative_at_zero,
    })
}

fn leading_condition(ideal: &ClosedIdeal, p: &BigInt) -> Option<LeadingCertificate> {
    let poly = ideal.f0().primitive_integer_form();
    let d = poly.len() - 1;
    let leading = poly[d].clone();
    let subleading = poly[d - 1].clone();
    ((&leading % p).is_zero() && !(&subleading % p).is_zero()).then(|| LeadingCertificate {
        p: p.clone(),
        poly,
        leading,
        subleading,
    })
}

fn check_prime_for(ideal: &ClosedIdeal, p: &BigInt, op: &'static str) -> Result<()> {
    match ideal.ring() {
        RingId::Integers => {
            let ok = p.is_positive() && p.to_u64().is_some_and(is_prime_u64);
            if !ok {
                return Err(Error::NotPrime(p.to_u64().unwrap_or(0)));
            }
            Ok(())
        }
        RingId::LocalizedAtP(q) if q.to_bigint() == *p => Ok(()),
        RingId::LocalizedAtP(q) => Err(Error::BadModulus {
            modulus: p.to_string(),
            reason: format!("the only non-zero prime of Zloc({q}) is ({q})"),
        }),
        ring => Err(Error::UnsupportedRing { op, ring }),
    }
}

pub fn hensel_obstruction(ideal: &ClosedIdeal, p: &BigInt) -> Result<Option<HenselCertificate>> {
    check_prime_for(ideal, p, "hensel_obstruction")?;
    Ok(hensel_condition(ideal, p))
}

pub fn leading_obstruction(ideal: &ClosedIdeal, p: &BigInt) -> Result<Option<LeadingCertificate>> {
    check_prime_for(ideal, p, "leading_obstruction")?;
    Ok(leading_condition(ideal, p))
}

#[derive(Clone, Debug, PartialEq)]
pub enum MaximalEvidence {
    /// Member with `g(0) = 1` and `g(i) ∈ ps(R)` for `i >= 1`.
    Cor25Witness(Hurwitz),
    /// Member whose constant term is a unit.
    UnitConstantLattice(Hurwitz),
    /// `hQ/[f] ≅ Q[x]/(f0)` is a field.
    FieldQuotient,
    /// `R` is a field and `M = h_2·hR`.
    SimpleRingH2,
}

#[derive(Clone, Debug, PartialEq)]
pub enum NonMaximalEvidence {
    /// A proper factor of `f0` over `Q`.
    NotPrime(OrdinaryPoly),
    /// `f0 = x` over a ring that is not a field: all constant terms vanish.
    XGenerator,
    PadicObstruction(HenselCertificate),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknownNote {
    /// `ps(R) = 0`, so no member of the form `h_1 + h_2·h·ps(R)` can exist.
    PsRadicalZeroInapplicable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnknownReport {
    pub budget: usize,
    pub constant_ideals: Vec<(usize, RingElem)>,
    pub note: Option<UnknownNote>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MaximalityVerdict {
    MaximalCertified(MaximalEvidence),
    NotMaximalCertified(NonMaximalEvidence),
    Unknown(UnknownReport),
}

impl MaximalityVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            MaximalityVerdict::MaximalCertified(e) => match e {
                MaximalEvidence::Cor25Witness(_) => "Cor25Witness",
                MaximalEvidence::UnitConstantLattice(_) => "UnitConstantLattice",
                MaximalEvidence::FieldQuotient => "FieldQuotient",
                MaximalEvidence::SimpleRingH2 => "SimpleRing_h2",
            },
            MaximalityVerdict::NotMaximalCertified(e) => match e {
                NonMaximalEvidence::NotPrime(_) => "NotPrime",
                NonMaximalEvidence::XGenerator => "XGenerator",
                NonMaximalEvidence::PadicObstruction(_) => "PadicObstruction",
            },
            MaximalityVerdict::Unknown(r) => match r.note {
                Some(UnknownNote::PsRadicalZeroInapplicable) => "PsRadicalZeroInapplicable",
                None => "Unknown",
            },
        }
    }

    pub fn witness(&self) -> Option<&Hurwitz> {
        match self {
            MaximalityVerdict::MaximalCertified(
                MaximalEvidence::Cor25Witness(g) | MaximalEvidence::UnitConstantLattice(g),
            ) => Some(g),
            _ => None,
        }
    }

    pub fn is_maximal_certified(&self) -> bool {
        matches!(self, MaximalityVerdict::MaximalCertified(_))
    }
}

/// Default lattice window `2·deg f0 + 8`.
pub fn default_budget(ideal: &ClosedIdeal) -> usize {
    2 * ideal.min_degree() + 8
}

fn small_prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1u64 << 20);
    while &d * &d <= n && d < limit {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            while (&n % &d).is_zero() {
                n /= &d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() && &d * &d > n {
        out.push(n);
    }
    out
}

pub fn is_maximal(ideal: &ClosedIdeal, budget: usize) -> Result<MaximalityVerdict> {
    use MaximalityVerdict::*;
    if !ideal.is_prime()? {
        let fac = crate::irreducible::factor_ordinary(ideal.f0(), ideal.degree_cap())?;
        return Ok(NotMaximalCertified(NonMaximalEvidence::NotPrime(fac.factors[0].0.clone())));
    }
    let ring = ideal.ring();
    let is_x = *ideal.f0() == OrdinaryPoly::x();
    if ring == RingId::Rationals {
        return Ok(MaximalCertified(if is_x {
            MaximalEvidence::SimpleRingH2
        } else {
            MaximalEvidence::FieldQuotient
        }));
    }
    if is_x {
        return Ok(NotMaximalCertified(NonMaximalEvidence::XGenerator));
    }
    let primes = match ring {
        RingId::LocalizedAtP(p) => vec![p.to_bigint()],
        _ => small_prime_factors(&ideal.f0().primitive_integer_form()[0]),
    };
    for p in &primes {
        if let Some(cert) = hensel_obstruction(ideal, p)? {
            return Ok(NotMaximalCertified(NonMaximalEvidence::PadicObstruction(cert)));
        }
    }
    let d = ideal.min_degree();
    let mut constant_ideals = Vec::new();
    for k in d..=d + budget {
        let (c, member) = ideal.constant_member(k)?;
        if c.is_unit() {
            let g = member.expect("non-zero constant ideal has a member");
            let g = g.scale(&c.value().recip());
            if let RingId::LocalizedAtP(_) = ring {
                if let Some(w) = cor25_witness(ideal)? {
                    return Ok(MaximalCertified(MaximalEvidence::Cor25Witness(w)));
                }
            }
            return Ok(MaximalCertified(MaximalEvidence::UnitConstantLattice(g)));
        }
        constant_ideals.push((k, c));
    }
    let note = (ring.pseudo_radical() == PseudoRadical::ZeroIdeal).then_some(UnknownNote::PsRadicalZeroInapplicable);
    Ok(Unknown(UnknownReport { budget, constant_ideals, note }))
}

/// Re-checks a maximality verdict against the ideal by direct arithmetic.
/// `Unknown` carries no certificate and never verifies.
pub fn verify_certificate(ideal: &ClosedIdeal, verdict: &MaximalityVerdict) -> bool {
    verify_inner(ideal, verdict).unwrap_or(false)
}

fn in_ring(g: &Hurwitz) -> bool {
    g.coeffs().iter().all(|c| g.ring_id().contains(c))
}

fn verify_inner(ideal: &ClosedIdeal, verdict: &MaximalityVerdict) -> Result<bool> {
    let ring = ideal.ring();
    Ok(match verdict {
        MaximalityVerdict::MaximalCertified(e) => {
            ideal.is_prime()?
                && match e {
                    MaximalEvidence::Cor25Witness(g) => {
                        let Some(p) = ring.prime() else { return Ok(false) };
                        let pe = ring.int(p.get() as i64);
                        g.ring_id() == ring
                            && in_ring(g)
                            && ideal.contains(g)?
                            && g.coeff(0).is_one()
                            && all_coefficients_in(g, &pe, 1)
                    }
                    MaximalEvidence::UnitConstantLattice(g) => {
                        g.ring_id() == ring
                            && !ring.is_field()
                            && in_ring(g)
                            && ideal.contains(g)?
                            && g.elem(0).is_unit()
                    }
                    MaximalEvidence::FieldQuotient => ring.is_field(),
                    MaximalEvidence::SimpleRingH2 => ring.is_field() && *ideal.f0() == OrdinaryPoly::x(),
                }
        }
        MaximalityVerdict::NotMaximalCertified(e) => match e {
            NonMaximalEvidence::NotPrime(q) => {
                let (dq, d0) = (q.degree().unwrap_or(0), ideal.min_degree());
                dq >= 1 && dq < d0 && q.divides(ideal.f0())?
            }
            NonMaximalEvidence::XGenerator => !ring.is_field() && *ideal.f0() == OrdinaryPoly::x(),
            NonMaximalEvidence::PadicObstruction(cert) => !ring.is_field() && cert.verify(ideal),
        },
        MaximalityVerdict::Unknown(_) => false,
    })
}

/// A member `g` with `g(0) = 1` and `g(i) ∈ (p)` for `i >= 1`, built by
/// inverting the generator in `h(Z/p)`.
pub fn cor25_witness(ideal: &ClosedIdeal) -> Result<Option<Hurwitz>> {
    let ring = ideal.ring();
    let RingId::LocalizedAtP(p) = ring else {
        return Err(Error::UnsupportedRing { op: "cor25_witness", ring });
    };
    let Some(g) = unit_congruent_member(ideal, ideal.primitive_generator(), &p.to_bigint())? else {
        return Ok(None);
    };
    let g = g.scale(&g.coeff(0).recip());
    debug_assert!(all_coefficients_in(&g, &ring.int(p.get() as i64), 1));
    Ok(Some(g))
}

/// For a member `g` whose constant term is a unit mod `m`, the member
/// `g ⊛ lift(ḡ^{-1}) ≡ h_1 (mod m)`; `None` if `g(0)` is not a unit mod `m`.
pub fn unit_congruent_member(ideal: &ClosedIdeal, g: &Hurwitz, m: &BigInt) -> Result<Option<Hurwitz>> {
    let gbar = reduce_mod(g, m)?;
    if gbar.ring().inverse(&gbar.coeff(0)).is_none() {
        return Ok(None);
    }
    let s = invert_mod(&gbar)?;
    let member = g * &lift(&s, ideal.ring());
    debug_assert!(ideal.contains(&member)?);
    Ok(Some(member))
}

/// `true` if `g` reduces to `h_1` modulo `m`.
pub fn congruent_to_one(g: &Hurwitz, m: &BigInt) -> Result<bool> {
    let r = reduce_mod(g, m)?;
    Ok(r == HurwitzPoly::one(r.ring().clone()))
}

/// Spot check of `h_1 ∈ M + h(mR)`: returns the member congruent to `h_1`.
pub fn cosimplicity_witness(ideal: &ClosedIdeal, g: &Hurwitz, m: &BigInt) -> Result<Option<Hurwitz>> {
    if !ideal.contains(g)? {
        return Ok(None);
    }
    let w = unit_congruent_member(ideal, g, m)?;
    Ok(match w {
        Some(w) if ideal.contains(&w)? && congruent_to_one(&w, m)? => Some(w),
        _ => None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Lemma21Outcome {
    /// `g ∈ P` with `g ≡ h_1 (mod hL)`, so `(P + hL) ∩ R' = R' ≠ L'`.
    ViolatedWitness(Hurwitz),
    /// Every constant term of `P` lies in `L`.
    HoldsCertified(HenselCertificate),
    /// The truncated leading ideal already lies in `L`.
    Inapplicable { rho_truncated: RingElem, stabilized: bool },
    Unknown { budget: usize },
}

impl Lemma21Outcome {
    pub fn kind(&self) -> &'static str {
        match self {
            Lemma21Outcome::ViolatedWitness(_) => "ViolatedWitness",
            Lemma21Outcome::HoldsCertified(_) => "HoldsCertified",
            Lemma21Outcome::Inapplicable { .. } => "Inapplicable",
            Lemma21Outcome::Unknown { .. } => "Unknown",
        }
    }
}

/// Instance check of "`ρ(P) ⊄ L` implies `(P + hL) ∩ R' = L'`" for the
/// prime `L = (q)`.
pub fn lemma21_check(ideal: &ClosedIdeal, q: &BigInt, budget: usize) -> Result<Lemma21Outcome> {
    check_prime_for(ideal, q, "lemma21_check")?;
    if !ideal.is_prime()? {
        return Err(Error::NotPrimeIdeal);
    }
    let ring = ideal.ring();
    let l = ring.elem(BigRational::from_integer(q.clone()))?;
    let tr = ideal.min_tau_rho(budget)?;
    if l.divides(&tr.rho_truncated)? {
        return Ok(Lemma21Outcome::Inapplicable { rho_truncated: tr.rho_truncated, stabilized: tr.stabilized });
    }
    if let Some(g) = unit_congruent_member(ideal, ideal.primitive_generator(), q)? {
        return Ok(Lemma21Outcome::ViolatedWitness(g));
    }
    let d = ideal.min_degree();
    for k in d..=d + budget {
        let (c, member) = ideal.constant_member(k)?;
        if !l.divides(&c)? {
            let g = member.expect("non-zero constant ideal has a member");
            if let Some(w) = unit_congruent_member(ideal, &g, q)? {
                return Ok(Lemma21Outcome::ViolatedWitness(w));
            }
        }
    }
    if let Some(cert) = hensel_condition(ideal, q) {
        return Ok(Lemma21Outcome::HoldsCertified(cert));
    }
    Ok(Lemma21Outcome::Unknown { budget })
}

pub fn verify_lemma21(ideal: &ClosedIdeal, q: &BigInt, outcome: &Lemma21Outcome) -> bool {
    let check = || -> Result<bool> {
        Ok(match outcome {
            Lemma21Outcome::ViolatedWitness(g) => {
                g.ring_id() == ideal.ring() && in_ring(g) && ideal.contains(g)? && congruent_to_one(g, q)?
            }
            Lemma21Outcome::HoldsCertified(cert) => cert.p == *q && cert.verify(ideal),
            Lemma21Outcome::Inapplicable { rho_truncated, .. } => {
                ideal.ring().elem(BigRational::from_integer(q.clone()))?.divides(rho_truncated)?
            }
            Lemma21Outcome::Unknown { .. } => false,
        })
    };
    check().unwrap_or(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Holds,
    Violated,
    Unknown,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClaimLine {
    pub label: &'static str,
    pub status: ClaimStatus,
    pub detail: String,
    pub witnesses: Vec<Hurwitz>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClaimReport {
    pub verdict: MaximalityVerdict,
    pub lines: Vec<ClaimLine>,
}

pub const CLAIM_MAXIMAL: &str = "ideal is maximal";
pub const CLAIM_LEADING_IN_PS: &str = "leading ideal of a maximal R-disjoint ideal lies in ps(R)";
pub const CLAIM_DICHOTOMY: &str = "maximal R-disjoint ideal is h_2·hR over a simple ring or meets h_1 + h_2·h·ps(R)";
pub const CLAIM_PS_CRITERION: &str = "prime R-disjoint ideal over a non-simple ring is maximal iff it meets h_1 + h_2·h·ps(R)";
pub const CLAIM_EXISTENCE: &str = "a maximal R-disjoint ideal exists only if R is simple or some f in h_1 + h_2·ps(R) has [f] proper";

fn line(label: &'static str, status: ClaimStatus, detail: impl Into<String>, witnesses: Vec<Hurwitz>, verified: bool) -> ClaimLine {
    // a claim is never asserted or refuted on unverified evidence
    let status = if verified { status } else { ClaimStatus::Unknown };
    ClaimLine { label, status, detail: detail.into(), witnesses, verified }
}

/// Member of `h_1 + h_2·h·ps(R)`, if one can be exhibited.
fn pseudo_unit_member(ideal: &ClosedIdeal) -> Result<Option<Hurwitz>> {
    Ok(match ideal.ring() {
        RingId::Rationals => {
            let f = ideal.primitive_generator();
            (!f.coeff(0).is_zero()).then(|| f.scale(&f.coeff(0).recip()))
        }
        RingId::LocalizedAtP(_) => cor25_witness(ideal)?,
        _ => None,
    })
}

fn has_pseudo_unit_shape(ideal: &ClosedIdeal, g: &Hurwitz) -> Result<bool> {
    let ring = ideal.ring();
    let shape = match ring.pseudo_radical() {
        PseudoRadical::WholeRing => true,
        PseudoRadical::Principal(c) => all_coefficients_in(g, &c, 1),
        PseudoRadical::ZeroIdeal => g.coeffs().len() <= 1,
    };
    Ok(shape && g.coeff(0).is_one() && in_ring(g) && ideal.contains(g)?)
}

/// Evaluates the maximality-related claims on one ideal. Each line is
/// backed by re-verified evidence or reported as `Unknown`.
pub fn paper_claim_report(ideal: &ClosedIdeal, budget: usize) -> Result<ClaimReport> {
    use ClaimStatus::*;
    let verdict = is_maximal(ideal, budget)?;
    let verdict_ok = verify_certificate(ideal, &verdict);
    let ring = ideal.ring();
    let maximal = verdict.is_maximal_certified() && verdict_ok;
    let not_maximal = matches!(verdict, MaximalityVerdict::NotMaximalCertified(_)) && verdict_ok;
    let verdict_witness: Vec<Hurwitz> = verdict.witness().cloned().into_iter().collect();
    let mut lines = Vec::new();

    lines.push(match &verdict {
        MaximalityVerdict::MaximalCertified(_) => line(CLAIM_MAXIMAL, Holds, verdict.kind(), verdict_witness.clone(), verdict_ok),
        MaximalityVerdict::NotMaximalCertified(_) => line(CLAIM_MAXIMAL, Violated, verdict.kind(), vec![], verdict_ok),
        MaximalityVerdict::Unknown(r) => line(CLAIM_MAXIMAL, Unknown, format!("{} (window {})", verdict.kind(), r.budget), vec![], false),
    });

    // leading ideal inside the pseudo-radical
    lines.push(if not_maximal {
        line(CLAIM_LEADING_IN_PS, Holds, "hypothesis not met: ideal certified non-maximal", vec![], true)
    } else if !maximal {
        line(CLAIM_LEADING_IN_PS, Unknown, "maximality not certified", vec![], false)
    } else {
        match ring.pseudo_radical() {
            PseudoRadical::WholeRing => line(CLAIM_LEADING_IN_PS, Holds, "ps(R) = R", vec![], true),
            PseudoRadical::ZeroIdeal => {
                let f = ideal.primitive_generator().clone();
                let ok = ideal.contains(&f)? && f.leading().is_some_and(|c| !c.is_zero());
                let detail = format!("ps(R) = 0 but the member has leading coefficient {}", f.leading().cloned().unwrap_or_default());
                line(CLAIM_LEADING_IN_PS, Violated, detail, vec![f], ok)
            }
            PseudoRadical::Principal(c) => {
                let p = c.value().to_integer();
                if let Some(cert) = leading_obstruction(ideal, &p)? {
                    let ok = cert.verify(ideal);
                    line(CLAIM_LEADING_IN_PS, Holds, format!("every leading coefficient lies in ({p}): reversed Hensel root"), vec![], ok)
                } else {
                    let d = ideal.min_degree();
                    let mut found = None;
                    for k in d..=d + budget {
                        let (lead, member) = ideal.leading_member(k)?;
                        if !c.divides(&lead)? {
                            found = member;
                            break;
                        }
                    }
                    match found {
                        Some(g) => {
                            let ok = ideal.contains(&g)? && !c.divides(&g.elem(g.degree().unwrap_or(0)))?;
                            line(CLAIM_LEADING_IN_PS, Violated, format!("member with leading coefficient outside ({p})"), vec![g], ok)
                        }
                        None => line(CLAIM_LEADING_IN_PS, Unknown, format!("truncated leading ideal lies in ({p}) up to degree {}", d + budget), vec![], false),
                    }
                }
            }
        }
    });

    let is_x = *ideal.f0() == OrdinaryPoly::x();
    let member = pseudo_unit_member(ideal)?;
    let member_ok = match &member {
        Some(g) => has_pseudo_unit_shape(ideal, g)?,
        None => false,
    };
    let ps_zero = ring.pseudo_radical() == PseudoRadical::ZeroIdeal;
    // with ps(R) = 0 the set h_1 + h_2·h·ps(R) is {h_1}, never in a proper ideal
    let h1 = Hurwitz::one(ring);
    let h1_outside = !ideal.contains(&h1)?;

    lines.push(if not_maximal {
        line(CLAIM_DICHOTOMY, Holds, "hypothesis not met: ideal certified non-maximal", vec![], true)
    } else if !maximal {
        line(CLAIM_DICHOTOMY, Unknown, "maximality not certified", vec![], false)
    } else if is_x {
        line(CLAIM_DICHOTOMY, Holds, "branch (i): h_2 in M, R simple, M = h_2·hR", vec![], ring.is_field())
    } else if member_ok {
        line(CLAIM_DICHOTOMY, Holds, "branch (ii): member in h_1 + h_2·h·ps(R)", member.clone().into_iter().collect(), true)
    } else if ps_zero {
        line(CLAIM_DICHOTOMY, Violated, "h_2 not in M, R not simple, and ps(R) = 0 leaves only h_1, which is not in M", verdict_witness.clone(), h1_outside)
    } else {
        line(CLAIM_DICHOTOMY, Unknown, "no member in h_1 + h_2·h·ps(R) found", vec![], false)
    });

    lines.push(if ring.is_field() {
        line(CLAIM_PS_CRITERION, Holds, "hypothesis not met: R is simple", vec![], true)
    } else if member_ok {
        let status = if not_maximal { Violated } else { Holds };
        line(CLAIM_PS_CRITERION, status, "member in h_1 + h_2·h·ps(R)", member.clone().into_iter().collect(), true)
    } else if maximal && ps_zero {
        line(CLAIM_PS_CRITERION, Violated, "certified maximal, yet ps(R) = 0 leaves only h_1, which is not in M", verdict_witness.clone(), h1_outside)
    } else if not_maximal && ps_zero {
        line(CLAIM_PS_CRITERION, Holds, "certified non-maximal and no member of h_1 + h_2·h·ps(R) can exist", vec![], h1_outside)
    } else {
        line(CLAIM_PS_CRITERION, Unknown, "no member in h_1 + h_2·h·ps(R) found", vec![], false)
    });

    lines.push(if !maximal {
        line(CLAIM_EXISTENCE, Unknown, "no certified maximal R-disjoint ideal at hand", vec![], false)
    } else if ring.is_field() {
        line(CLAIM_EXISTENCE, Holds, "R is simple", vec![], true)
    } else if member_ok {
        line(CLAIM_EXISTENCE, Holds, "[g] lies in the maximal ideal, so it is proper", member.into_iter().collect(), true)
    } else if ps_zero {
        line(CLAIM_EXISTENCE, Violated, "certified maximal R-disjoint ideal, R not simple, and ps(R) = 0 leaves only h_1 with [h_1] = hR", verdict_witness, h1_outside)
    } else {
        line(CLAIM_EXISTENCE, Unknown, "no member in h_1 + h_2·ps(R) found", vec![], false)
    });

    Ok(ClaimReport { verdict, lines })
}

/// `[c·h_2 + h_1]` for `ps(R) = (c)`, `[h_2]` over a field other than `F_p`,
/// and nothing when `ps(R) = 0`.
pub fn prop23_construct(ring: RingId) -> Option<ClosedIdeal> {
    let f = match ring {
        RingId::LocalizedAtP(p) => Hurwitz::from_ints(ring, &[1, p.get() as i64]),
        RingId::Rationals => Hurwitz::from_ints(ring, &[0, 1]),
        _ => return None,
    };
    crate::ideal::mk_closed(&f).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::mk_closed;

    fn over(ring: RingId, c: &[i64]) -> ClosedIdeal {
        mk_closed(&Hurwitz::from_ints(ring, c)).unwrap()
    }

    fn zi(c: &[i64]) -> ClosedIdeal {
        over(RingId::Integers, c)
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn hensel_examples() {
        let cert = hensel_obstruction(&zi(&[2, 1]), &b(2)).unwrap().unwrap();
        assert_eq!((cert.value_at_zero.clone(), cert.derivative_at_zero.clone()), (b(2), b(1)));
        assert!(cert.verify(&zi(&[2, 1])));
        assert!(hensel_obstruction(&zi(&[1, 1]), &b(2)).unwrap().is_none());
        // F = x^2 + 4 ↔ (4, 0, 2)
        assert!(hensel_obstruction(&zi(&[4, 0, 2]), &b(2)).unwrap().is_none());
        assert!(matches!(hensel_obstruction(&zi(&[2, 1]), &b(4)), Err(Error::NotPrime(4))));
    }

    #[test]
    fn hensel_soundness_on_lattices() {
        for (f, p) in [([2i64, 1], 2), ([6, 1], 3), ([10, 1], 5)] {
            let i = zi(&f);
            assert!(hensel_obstruction(&i, &b(p)).unwrap().is_some());
            for k in 1..=8 {
                let c = i.constant_ideal(k).unwrap().value().to_integer();
                assert!((c % p).is_zero());
            }
        }
    }

    #[test]
    fn maximality_examples() {
        let loc5 = RingId::localized(5).unwrap();
        let i = over(loc5, &[1, 5]);
        let v = is_maximal(&i, default_budget(&i)).unwrap();
        assert_eq!(v, MaximalityVerdict::MaximalCertified(MaximalEvidence::Cor25Witness(Hurwitz::from_ints(loc5, &[1, 5]))));
        assert!(verify_certificate(&i, &v));

        let i = zi(&[2, 1]);
        let v = is_maximal(&i, default_budget(&i)).unwrap();
        assert_eq!(v.kind(), "PadicObstruction");
        assert!(verify_certificate(&i, &v));

        let i = zi(&[1, 1]);
        let v = is_maximal(&i, default_budget(&i)).unwrap();
        assert_eq!(v.kind(), "UnitConstantLattice");
        assert_eq!(v.witness().unwrap().coeff(0), BigRational::one());
        assert!(verify_certificate(&i, &v));
        for m in 2..=50 {
            assert!(cosimplicity_witness(&i, v.witness().unwrap(), &b(m)).unwrap().is_some());
        }

        let i = over(RingId::Rationals, &[1, 0, 2]);
        assert_eq!(is_maximal(&i, 8).unwrap(), MaximalityVerdict::MaximalCertified(MaximalEvidence::FieldQuotient));
        let i = over(RingId::Rationals, &[0, 1]);
        assert_eq!(is_maximal(&i, 8).unwrap().kind(), "SimpleRing_h2");
        assert_eq!(is_maximal(&zi(&[0, 1]), 8).unwrap().kind(), "XGenerator");
        let v = is_maximal(&zi(&[1, 2, 2]), 8).unwrap();
        assert_eq!(v.kind(), "NotPrime");
        assert!(verify_certificate(&zi(&[1, 2, 2]), &v));
    }

    #[test]
    fn tampered_certificates_fail() {
        let loc2 = RingId::localized(2).unwrap();
        let i = over(loc2, &[1, 1]);
        let good = MaximalityVerdict::MaximalCertified(MaximalEvidence::Cor25Witness(Hurwitz::from_ints(loc2, &[1, 2, 2])));
        assert!(verify_certificate(&i, &good));
        let bad = MaximalityVerdict::MaximalCertified(MaximalEvidence::Cor25Witness(Hurwitz::from_ints(loc2, &[1, 2, 3])));
        assert!(!verify_certificate(&i, &bad));
        let i = zi(&[1, 1]);
        let bad = MaximalityVerdict::NotMaximalCertified(NonMaximalEvidence::PadicObstruction(HenselCertificate {
            p: b(2),
            poly: vec![b(2), b(1)],
            value_at_zero: b(2),
            derivative_at_zero: b(1),
        }));
        assert!(!verify_certificate(&i, &bad));
    }

    #[test]
    fn cor25_examples() {
        let loc5 = RingId::localized(5).unwrap();
        let loc2 = RingId::localized(2).unwrap();
        assert_eq!(cor25_witness(&over(loc5, &[1, 5])).unwrap(), Some(Hurwitz::from_ints(loc5, &[1, 5])));
        assert_eq!(cor25_witness(&over(loc2, &[1, 1])).unwrap(), Some(Hurwitz::from_ints(loc2, &[1, 2, 2])));
        assert_eq!(cor25_witness(&over(loc2, &[0, 1])).unwrap(), None);
        assert!(cor25_witness(&zi(&[1, 1])).is_err());
    }

    #[test]
    fn lemma21_examples() {
        let i = zi(&[2, 1]);
        let out = lemma21_check(&i, &b(3), 8).unwrap();
        assert_eq!(out, Lemma21Outcome::ViolatedWitness(Hurwitz::from_ints(RingId::Integers, &[4, 6, 6, 3])));
        assert!(verify_lemma21(&i, &b(3), &out));

        let loc2 = RingId::localized(2).unwrap();
        let j = over(loc2, &[1, 1]);
        let out = lemma21_check(&j, &b(2), 8).unwrap();
        assert_eq!(out, Lemma21Outcome::ViolatedWitness(Hurwitz::from_ints(loc2, &[1, 2, 2])));
        assert!(verify_lemma21(&j, &b(2), &out));

        let out = lemma21_check(&i, &b(2), 8).unwrap();
        assert_eq!(out.kind(), "HoldsCertified");
        assert!(verify_lemma21(&i, &b(2), &out));

        let k = over(RingId::localized(5).unwrap(), &[1, 5]);
        assert_eq!(lemma21_check(&k, &b(5), 8).unwrap().kind(), "Inapplicable");
        assert!(lemma21_check(&j, &b(3), 8).is_err());
    }

    #[test]
    fn claim_reports() {
        let r = paper_claim_report(&zi(&[1, 1]), 10).unwrap();
        assert!(r.verdict.is_maximal_certified());
        let l = r.lines.iter().find(|l| l.label == CLAIM_LEADING_IN_PS).unwrap();
        assert_eq!((l.status, l.verified), (ClaimStatus::Violated, true));

        let loc5 = RingId::localized(5).unwrap();
        let r = paper_claim_report(&over(loc5, &[1, 5]), 10).unwrap();
        for l in &r.lines {
            assert_eq!(l.status, ClaimStatus::Holds, "{l:?}");
        }

        let r = paper_claim_report(&over(RingId::Rationals, &[0, 1]), 10).unwrap();
        let l = r.lines.iter().find(|l| l.label == CLAIM_DICHOTOMY).unwrap();
        assert_eq!(l.status, ClaimStatus::Holds);
        assert!(l.detail.starts_with("branch (i)"));
    }

    #[test]
    fn prop23() {
        let loc5 = RingId::localized(5).unwrap();
        let i = prop23_construct(loc5).unwrap();
        assert_eq!(i.generator(), &Hurwitz::from_ints(loc5, &[1, 5]));
        assert!(i.is_prime().unwrap());
        assert_eq!(prop23_construct(RingId::Rationals).unwrap().generator(), &Hurwitz::from_ints(RingId::Rationals, &[0, 1]));
        assert!(prop23_construct(RingId::Integers).is_none());
    }
}

use ::hurwitz::ideal::contained_in_factors;
use ::hurwitz::maximality::{
    cosimplicity_witness, default_budget, is_maximal, lemma21_check, verify_certificate, verify_lemma21,
    Lemma21Outcome,
};
use ::hurwitz::ordinary::to_ordinary;
use ::hurwitz::{mk_closed, ClosedIdeal, Hurwitz, RingId};
use num_bigint::BigInt;
use proptest::prelude::*;

fn z(c: &[i64]) -> Hurwitz {
    Hurwitz::from_ints(RingId::Integers, c)
}

fn generators() -> Vec<Hurwitz> {
    let loc2 = RingId::localized(2).unwrap();
    let loc5 = RingId::localized(5).unwrap();
    vec![
        z(&[1, 1]),
        z(&[2, 1]),
        z(&[1, 5]),
        z(&[3, 0, 1]),
        z(&[1, 2, 2]),
        z(&[0, 1, 2]),
        z(&[6, 1]),
        z(&[1, 0, 2]),
        Hurwitz::from_ints(loc2, &[1, 1]),
        Hurwitz::from_ints(loc5, &[1, 5]),
        Hurwitz::from_ints(loc5, &[10, 1]),
        Hurwitz::from_ints(RingId::Rationals, &[1, 0, 2]),
    ]
}

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-12i64..=12, 0..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiples_are_members(idx in 0usize..12, r in small_poly()) {
        let f = &generators()[idx];
        let i = mk_closed(f).unwrap();
        prop_assert!(i.contains(&(f * &Hurwitz::from_ints(f.ring_id(), &r))).unwrap());
    }

    #[test]
    fn membership_is_divisibility(idx in 0usize..12, g in small_poly()) {
        let f = &generators()[idx];
        let i = mk_closed(f).unwrap();
        let g = Hurwitz::from_ints(f.ring_id(), &g);
        let divides = g.is_zero() || i.f0().divides(&to_ordinary(&g).unwrap()).unwrap();
        prop_assert_eq!(i.contains(&g).unwrap(), divides);
        let factors = i.factor_closed().unwrap();
        prop_assert_eq!(contained_in_factors(&factors, &g).unwrap(), divides);
    }
}

#[test]
fn closure_strictly_contains_multiples() {
    let i = mk_closed(&z(&[2, 1])).unwrap();
    let g = z(&[0, 1, 1]);
    assert!(i.contains(&g).unwrap());
    // g = (2,1) ⊛ h forces h(1) = 1/2
    let t = to_ordinary(&g).unwrap().divrem(&to_ordinary(&z(&[2, 1])).unwrap()).unwrap().0;
    assert!(::hurwitz::ordinary::from_ordinary(&t, RingId::Integers).is_err());
}

#[test]
fn constant_ideals_are_monotone() {
    for f in generators() {
        if f.ring_id() == RingId::Rationals {
            continue;
        }
        let i = mk_closed(&f).unwrap();
        let d = i.min_degree();
        let mut prev = i.constant_ideal(d).unwrap();
        for k in d + 1..=d + 8 {
            let c = i.constant_ideal(k).unwrap();
            assert!(c.divides(&prev).unwrap(), "{i:?}: C_{k} = {c} does not contain {prev}");
            prev = c;
        }
    }
}

#[test]
fn lattice_members_reproduce_constant_ideals() {
    for f in generators() {
        if f.ring_id() == RingId::Rationals {
            continue;
        }
        let i = mk_closed(&f).unwrap();
        for k in i.min_degree()..=i.min_degree() + 4 {
            let (c, g) = i.constant_member(k).unwrap();
            if let Some(g) = g {
                assert!(i.contains(&g).unwrap());
                assert_eq!(g.elem(0), c);
                assert!(g.degree().unwrap() <= k);
            }
        }
    }
}

#[test]
fn verdicts_carry_valid_certificates() {
    for f in generators() {
        let i = mk_closed(&f).unwrap();
        let v = is_maximal(&i, default_budget(&i)).unwrap();
        if !matches!(v, ::hurwitz::MaximalityVerdict::Unknown(_)) {
            assert!(verify_certificate(&i, &v), "{i:?}: {v:?}");
        }
        if let Some(g) = v.witness() {
            if f.ring_id() == RingId::Integers {
                for m in 2..=50 {
                    assert!(cosimplicity_witness(&i, g, &BigInt::from(m)).unwrap().is_some(), "{i:?} m = {m}");
                }
            }
        }
    }
}

#[test]
fn lemma21_witnesses_are_congruent_to_one() {
    for f in generators() {
        let i: ClosedIdeal = mk_closed(&f).unwrap();
        if f.ring_id() == RingId::Rationals || !i.is_prime().unwrap() {
            continue;
        }
        let primes: Vec<u64> = match f.ring_id() {
            RingId::LocalizedAtP(p) => vec![p.get() as u64],
            _ => vec![2, 3, 5, 7],
        };
        for q in primes {
            let q = BigInt::from(q);
            let out = lemma21_check(&i, &q, 8).unwrap();
            if matches!(out, Lemma21Outcome::ViolatedWitness(_) | Lemma21Outcome::HoldsCertified(_)) {
                assert!(verify_lemma21(&i, &q, &out), "{i:?} L = ({q}): {out:?}");
            }
        }
    }
}

//! Acceptance run: one PASS/FAIL line per criterion, each with its time
//! limit. Exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use hurwitz::binomial::binomial;
use hurwitz::ideal::contained_in_factors;
use hurwitz::irreducible::{
    is_completely_irreducible, is_irreducible_hr, remark16_check, Remark16Outcome, Remark16Witness,
};
use hurwitz::maximality::{
    cosimplicity_witness, default_budget, is_maximal, lemma21_check, paper_claim_report, prop23_construct,
    verify_certificate, verify_lemma21, ClaimStatus, Lemma21Outcome, MaximalEvidence, MaximalityVerdict,
    NonMaximalEvidence, CLAIM_LEADING_IN_PS,
};
use hurwitz::modular::nilpotency_index;
use hurwitz::ordinary::{from_ordinary, to_ordinary};
use hurwitz::text::format_poly;
use hurwitz::{mk_closed, Hurwitz, HurwitzMod, ModulusRing, RingId, DEFAULT_DEGREE_CAP as CAP};
use hurwitz_cli::verify::{axiom_rings, small_primitive_inputs, Gen};
use num_bigint::BigInt;
use num_traits::One;

type Check = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn z(c: &[i64]) -> Hurwitz {
    Hurwitz::from_ints(RingId::Integers, c)
}

fn ring_axioms() -> Check {
    let mut gen = Gen::new(101, 6, 20);
    for ring in axiom_rings() {
        let one = Hurwitz::one(ring);
        for _ in 0..500 {
            let (f, g, h) = (gen.poly(ring), gen.poly(ring), gen.poly(ring));
            let show = || format!("over {ring}: {} {} {}", format_poly(&f), format_poly(&g), format_poly(&h));
            ensure(&(&f * &g) * &h == &f * &(&g * &h), || format!("associativity {}", show()))?;
            ensure(&f * &g == &g * &f, || format!("commutativity {}", show()))?;
            ensure(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), || format!("distributivity {}", show()))?;
            ensure(&f * &one == f, || format!("unity {}", show()))?;
        }
    }
    Ok(())
}

fn basis_identity() -> Check {
    for n in 1..=12 {
        for m in 1..=12 {
            let a = Hurwitz::basis(RingId::Integers, n + 1).unwrap();
            let b = Hurwitz::basis(RingId::Integers, m + 1).unwrap();
            let want = Hurwitz::basis(RingId::Integers, n + m + 1).unwrap().scale_integer(&binomial(n + m, n).unwrap());
            ensure(&a * &b == want, || format!("n = {n}, m = {m}"))?;
        }
    }
    Ok(())
}

fn transform_isomorphism() -> Check {
    let mut gen = Gen::new(303, 6, 20);
    for ring in [RingId::Integers, RingId::Rationals] {
        for _ in 0..500 {
            let (f, g) = (gen.poly(ring), gen.poly(ring));
            let show = || format!("{} {}", format_poly(&f), format_poly(&g));
            let (tf, tg) = (to_ordinary(&f).unwrap(), to_ordinary(&g).unwrap());
            ensure(to_ordinary(&(&f * &g)).unwrap() == &tf * &tg, || format!("product {}", show()))?;
            ensure(from_ordinary(&tf, ring).unwrap() == f, || format!("round trip {}", show()))?;
        }
    }
    Ok(())
}

fn product_rule() -> Check {
    let mut gen = Gen::new(404, 6, 20);
    for ring in axiom_rings() {
        for _ in 0..500 {
            let (f, g) = (gen.poly(ring), gen.poly(ring));
            let lhs = (&f * &g).derivation();
            let rhs = &(&f.derivation() * &g) + &(&f * &g.derivation());
            ensure(lhs == rhs, || format!("{} {}", format_poly(&f), format_poly(&g)))?;
        }
    }
    Ok(())
}

fn char_p_collapse() -> Check {
    for p in [2u64, 3, 5] {
        let h2 = Hurwitz::basis(RingId::prime_field(p).unwrap(), 2).unwrap();
        ensure(h2.pow(p as u32).is_zero(), || format!("h_2^{p} != 0"))?;
        ensure(!h2.pow(p as u32 - 1).is_zero(), || format!("h_2^{} = 0", p - 1))?;
        let h2m = HurwitzMod::new(ModulusRing::new(p).unwrap(), vec![BigInt::from(0), BigInt::from(1)]);
        let idx = nilpotency_index(&h2m, 512);
        ensure(idx == Some(p as usize), || format!("nilpotency index of h_2 mod {p} is {idx:?}"))?;
    }
    Ok(())
}

fn primitive_agreement() -> Check {
    let mut disagreements = Vec::new();
    let inputs = small_primitive_inputs();
    for f in &inputs {
        let complete = is_completely_irreducible(f, CAP).map_err(|e| format!("{}: {e}", format_poly(f)))?;
        let hr = is_irreducible_hr(f, CAP).map_err(|e| format!("{}: {e}", format_poly(f)))?;
        if complete != hr {
            disagreements.push(format_poly(f));
        }
    }
    let want = Remark16Outcome::Disagrees(Remark16Witness::ReducibleInHr { left: z(&[2]), right: z(&[1, 1]) });
    let got = remark16_check(&z(&[2, 2]), CAP).map_err(|e| e.to_string())?;
    ensure(got == want, || format!("(2,2) gives {got:?}"))?;
    ensure(disagreements.is_empty(), || {
        format!(
            "{} of {} primitive inputs disagree, e.g. {}",
            disagreements.len(),
            inputs.len(),
            disagreements.iter().take(3).cloned().collect::<Vec<_>>().join(", ")
        )
    })
}

fn closed_membership() -> Check {
    let i = mk_closed(&z(&[2, 1])).unwrap();
    let g = z(&[0, 1, 1]);
    ensure(i.contains(&g).unwrap(), || "(0,1,1) not in [(2,1)]".into())?;
    // the only candidate cofactor over Q is not integral
    let (q, r) = to_ordinary(&g).unwrap().divrem(&to_ordinary(&z(&[2, 1])).unwrap()).unwrap();
    ensure(r.is_zero() && from_ordinary(&q, RingId::Integers).is_err(), || "(0,1,1) is a multiple of (2,1) in hZ".into())?;

    let p = mk_closed(&z(&[1, 2, 2])).unwrap();
    let factors = p.factor_closed().unwrap();
    let want = vec![(mk_closed(&z(&[1, 1])).unwrap(), 2u32)];
    ensure(factors == want, || format!("factor_closed gives {factors:?}"))?;

    let mut gen = Gen::new(707, 6, 20);
    for ideal in [&i, &p] {
        let fs = ideal.factor_closed().unwrap();
        for n in 0..200 {
            let r = gen.poly(RingId::Integers);
            // every other input is a multiple of the generator, so both answers occur
            let g = if n % 2 == 0 { r } else { ideal.generator() * &r };
            let divides = g.is_zero() || ideal.f0().divides(&to_ordinary(&g).unwrap()).unwrap();
            let member = ideal.contains(&g).unwrap();
            let via = contained_in_factors(&fs, &g).unwrap();
            ensure(member == divides && via == divides, || format!("{ideal:?} and {}", format_poly(&g)))?;
        }
    }
    Ok(())
}

fn localized_construction() -> Check {
    let loc5 = RingId::localized(5).unwrap();
    let i = prop23_construct(loc5).ok_or("no construction over Zloc(5)")?;
    let f = Hurwitz::from_ints(loc5, &[1, 5]);
    ensure(i.generator() == &f, || format!("constructed {i:?}"))?;
    ensure(i.is_prime().unwrap(), || "not prime".into())?;
    let v = is_maximal(&i, default_budget(&i)).unwrap();
    ensure(v == MaximalityVerdict::MaximalCertified(MaximalEvidence::Cor25Witness(f)), || format!("{v:?}"))?;
    ensure(verify_certificate(&i, &v), || "certificate does not verify".into())
}

fn integer_maximality() -> Check {
    let m = mk_closed(&z(&[1, 1])).unwrap();
    let v = is_maximal(&m, default_budget(&m)).unwrap();
    ensure(v.is_maximal_certified() && verify_certificate(&m, &v), || format!("[(1,1)]: {v:?}"))?;
    let g = v.witness().ok_or("no witness")?;
    ensure(g.coeff(0).is_one(), || format!("witness {}", format_poly(g)))?;
    for k in 2..=50 {
        let w = cosimplicity_witness(&m, g, &BigInt::from(k)).unwrap();
        ensure(w.is_some(), || format!("h_1 not in M + h({k})"))?;
    }
    let n = mk_closed(&z(&[2, 1])).unwrap();
    let v = is_maximal(&n, default_budget(&n)).unwrap();
    let padic_2 = matches!(&v, MaximalityVerdict::NotMaximalCertified(NonMaximalEvidence::PadicObstruction(c)) if c.p == BigInt::from(2));
    ensure(padic_2 && verify_certificate(&n, &v), || format!("[(2,1)]: {v:?}"))
}

fn claim_fixtures() -> Check {
    let (two, three) = (BigInt::from(2), BigInt::from(3));
    let p = mk_closed(&z(&[2, 1])).unwrap();
    let out = lemma21_check(&p, &three, 8).unwrap();
    let g = z(&[4, 6, 6, 3]);
    ensure(out == Lemma21Outcome::ViolatedWitness(g.clone()), || format!("L = (3): {out:?}"))?;
    ensure(&z(&[2, 1]) * &z(&[2, 2, 1]) == g, || "(2,1)⊛(2,2,1) != (4,6,6,3)".into())?;
    ensure(hurwitz::maximality::congruent_to_one(&g, &three).unwrap(), || "(4,6,6,3) not ≡ h_1 mod 3".into())?;
    ensure(verify_lemma21(&p, &three, &out), || "L = (3) witness does not verify".into())?;

    let loc2 = RingId::localized(2).unwrap();
    let q = mk_closed(&Hurwitz::from_ints(loc2, &[1, 1])).unwrap();
    let out = lemma21_check(&q, &two, 8).unwrap();
    let want = Lemma21Outcome::ViolatedWitness(Hurwitz::from_ints(loc2, &[1, 2, 2]));
    ensure(out == want && verify_lemma21(&q, &two, &out), || format!("Zloc(2): {out:?}"))?;

    let out = lemma21_check(&p, &two, 8).unwrap();
    ensure(matches!(out, Lemma21Outcome::HoldsCertified(_)) && verify_lemma21(&p, &two, &out), || format!("L = (2): {out:?}"))?;

    let m = mk_closed(&z(&[1, 1])).unwrap();
    let report = paper_claim_report(&m, default_budget(&m)).unwrap();
    let line = report.lines.iter().find(|l| l.label == CLAIM_LEADING_IN_PS).ok_or("leading-ideal line missing")?;
    ensure(line.status == ClaimStatus::Violated && line.verified, || format!("{line:?}"))
}

fn full_verify() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["verify", "--suite", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || {
        let failing: Vec<&str> = stdout.lines().filter(|l| l.starts_with("FAIL")).collect();
        format!("exit {:?}: {}", out.status.code(), failing.join("; "))
    })
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("ring axioms on 500 random triples per ring", 10, ring_axioms),
        ("basis identity for 1 <= n, m <= 12", 1, basis_identity),
        ("transform is a ring isomorphism over Z and Q", 5, transform_isomorphism),
        ("derivation product rule", 5, product_rule),
        ("h_2 nilpotent of index p in characteristic p", 1, char_p_collapse),
        ("irreducibility notions agree on primitive inputs", 60, primitive_agreement),
        ("closed-ideal membership and factorization", 10, closed_membership),
        ("maximal ideal construction over Zloc(5)", 1, localized_construction),
        ("maximality certificates over Z", 5, integer_maximality),
        ("claim checker fixtures", 5, claim_fixtures),
        ("full verify run exits 0", 120, full_verify),
    ];
    let mut failed = 0;
    for (n, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let result = result.and_then(|()| {
            ensure(elapsed < limit, || format!("took {:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()))
        });
        match &result {
            Ok(()) => println!("PASS {:>2} {name} ({:.2} s, limit {} s)", n + 1, elapsed.as_secs_f64(), limit.as_secs()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2} s, limit {} s): {why}", n + 1, elapsed.as_secs_f64(), limit.as_secs());
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

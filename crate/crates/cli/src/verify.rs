//! Seeded property suites over every module, run by `hurwitz verify`.
//!
//! Random inputs come from SplitMix64. Each suite gets its own stream,
//! seeded with `seed + i * 0x9E3779B97F4A7C15` where `i` is the suite's
//! position in [`SUITES`]. Suites run on separate threads, and the report is
//! assembled in suite order, so output depends only on the arguments.

use std::time::{Duration, Instant};

use hurwitz::binomial::binomial;
use hurwitz::irreducible::{
    content_primitive, factor_ordinary, factor_witness_search, in_gamma, is_completely_irreducible,
    is_irreducible_hr, is_irreducible_ordinary, remark16_check, Remark16Outcome, Remark16Witness,
};
use hurwitz::maximality::{
    cosimplicity_witness, default_budget, is_maximal, lemma21_check, paper_claim_report, prop23_construct,
    verify_certificate, verify_lemma21, ClaimStatus, Lemma21Outcome, MaximalityVerdict, CLAIM_DICHOTOMY,
    CLAIM_LEADING_IN_PS,
};
use hurwitz::modular::{invert_mod, nilpotency_index, reduce_mod};
use hurwitz::ordinary::{from_ordinary, to_ordinary};
use hurwitz::text::format_poly;
use hurwitz::{mk_closed, ClosedIdeal, Error, Hurwitz, HurwitzMod, ModulusRing, OrdinaryPoly, RingId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

pub const SUITES: [&str; 6] = ["axioms", "transform", "charp", "irreducibility", "ideals", "claims"];

/// At most this many failures are listed per check.
const LISTED_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub cases: usize,
    pub seed: u64,
    pub degree: usize,
    pub height: i64,
    pub degree_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { cases: 200, seed: 0, degree: 6, height: 20, degree_cap: hurwitz::DEFAULT_DEGREE_CAP }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub check: String,
    pub counterexample: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub checks: usize,
    pub failed_checks: usize,
    pub failures: Vec<Failure>,
    pub wall: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed_checks == 0
    }
}

/// SplitMix64-driven generator of bounded random polynomials.
pub struct Gen {
    rng: SplitMix64,
    pub degree: usize,
    pub height: i64,
}

impl Gen {
    pub fn new(seed: u64, degree: usize, height: i64) -> Self {
        Gen { rng: SplitMix64::seed_from_u64(seed), degree, height }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.rng.next_u64() % span) as i64
    }

    fn denominator(&mut self, ring: RingId) -> i64 {
        match ring {
            RingId::Rationals => self.range(1, 6),
            RingId::LocalizedAtP(p) => loop {
                let d = self.range(1, 6);
                if d % p.get() as i64 != 0 {
                    break d;
                }
            },
            _ => 1,
        }
    }

    /// Degree `<= self.degree`, numerators in `[-height, height]`, small
    /// denominators where the ring allows them.
    pub fn poly(&mut self, ring: RingId) -> Hurwitz {
        let len = self.range(0, self.degree as i64 + 1) as usize;
        let coeffs = (0..len)
            .map(|_| {
                let n = self.range(-self.height, self.height);
                let d = self.denominator(ring);
                ring.elem(BigRational::new(n.into(), d.into())).expect("generated in ring").into_value()
            })
            .collect();
        Hurwitz::new(ring, coeffs)
    }

    pub fn nonconstant_poly(&mut self, ring: RingId, max_degree: usize) -> Hurwitz {
        loop {
            let saved = self.degree;
            self.degree = max_degree;
            let f = self.poly(ring);
            self.degree = saved;
            if f.degree().is_some_and(|d| d >= 1) {
                return f;
            }
        }
    }
}

struct Suite {
    name: &'static str,
    checks: usize,
    failed: Vec<usize>,
    labels: Vec<String>,
    failures: Vec<Failure>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, checks: 0, failed: Vec::new(), labels: Vec::new(), failures: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool, counterexample: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if ok {
            return;
        }
        let idx = match self.labels.iter().position(|l| l == label) {
            Some(i) => i,
            None => {
                self.labels.push(label.to_string());
                self.failed.push(0);
                self.labels.len() - 1
            }
        };
        self.failed[idx] += 1;
        if self.failed[idx] <= LISTED_FAILURES {
            self.failures.push(Failure { check: label.into(), counterexample: counterexample(), detail: detail() });
        }
    }

    fn finish(self, cases: usize, wall: Duration) -> SuiteReport {
        SuiteReport {
            name: self.name,
            cases,
            checks: self.checks,
            failed_checks: self.failed.iter().sum(),
            failures: self.failures,
            wall,
        }
    }
}

fn show(polys: &[Hurwitz]) -> String {
    polys.iter().map(format_poly).collect::<Vec<_>>().join(" ")
}

fn simpler(f: &Hurwitz) -> Vec<Hurwitz> {
    let ring = f.ring_id();
    let c = f.coeffs();
    let mut out = Vec::new();
    if !c.is_empty() {
        out.push(Hurwitz::new(ring, c[..c.len() - 1].to_vec()));
    }
    for i in 0..c.len() {
        if c[i].is_zero() {
            continue;
        }
        let mut z = c.to_vec();
        z[i] = BigRational::zero();
        out.push(Hurwitz::new(ring, z));
        let half = BigRational::new(c[i].numer() / 2, c[i].denom().clone());
        if !half.is_zero() {
            if let Ok(e) = ring.elem(half) {
                let mut h = c.to_vec();
                h[i] = e.into_value();
                out.push(Hurwitz::new(ring, h));
            }
        }
    }
    out
}

fn size(polys: &[Hurwitz]) -> BigInt {
    polys
        .iter()
        .flat_map(|p| p.coeffs().iter().map(|c| c.numer().abs() + 1))
        .sum()
}

/// Greedy shrinking: replace one input by a simpler one while the failure persists.
pub fn shrink(mut inputs: Vec<Hurwitz>, fails: impl Fn(&[Hurwitz]) -> bool) -> Vec<Hurwitz> {
    loop {
        let mut improved = false;
        'search: for i in 0..inputs.len() {
            for candidate in simpler(&inputs[i]) {
                let mut trial = inputs.clone();
                trial[i] = candidate;
                if size(&trial) < size(&inputs) && fails(&trial) {
                    inputs = trial;
                    improved = true;
                    break 'search;
                }
            }
        }
        if !improved {
            return inputs;
        }
    }
}

/// Checks a property on random inputs, shrinking any counterexample.
fn random_check(suite: &mut Suite, label: &str, inputs: Vec<Hurwitz>, prop: impl Fn(&[Hurwitz]) -> bool) {
    let ok = prop(&inputs);
    suite.check(label, ok, || show(&shrink(inputs.clone(), |x| !prop(x))), || "property fails".into());
}

pub fn run_suites(selection: &[&'static str], settings: Settings) -> Vec<SuiteReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = selection
            .iter()
            .map(|&name| {
                let idx = SUITES.iter().position(|&n| n == name).expect("known suite") as u64;
                let seed = settings.seed.wrapping_add(idx.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                s.spawn(move || run_suite(name, Settings { seed, ..settings }))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

pub fn run_suite(name: &'static str, settings: Settings) -> SuiteReport {
    let start = Instant::now();
    let mut suite = Suite::new(name);
    let mut gen = Gen::new(settings.seed, settings.degree, settings.height);
    match name {
        "axioms" => axioms(&mut suite, &mut gen, settings),
        "transform" => transform(&mut suite, &mut gen, settings),
        "charp" => charp(&mut suite, &mut gen, settings),
        "irreducibility" => irreducibility(&mut suite, &mut gen, settings),
        "ideals" => ideals(&mut suite, &mut gen, settings),
        "claims" => claims(&mut suite),
        _ => unreachable!("unknown suite {name}"),
    }
    suite.finish(settings.cases, start.elapsed())
}

pub fn axiom_rings() -> Vec<RingId> {
    vec![
        RingId::Integers,
        RingId::Rationals,
        RingId::prime_field(2).expect("prime"),
        RingId::prime_field(3).expect("prime"),
        RingId::prime_field(5).expect("prime"),
        RingId::localized(3).expect("prime"),
    ]
}

fn axioms(suite: &mut Suite, gen: &mut Gen, settings: Settings) {
    for ring in axiom_rings() {
        for _ in 0..settings.cases {
            let t = vec![gen.poly(ring), gen.poly(ring), gen.poly(ring)];
            random_check(suite, &format!("associativity over {ring}"), t.clone(), |x| {
                &(&x[0] * &x[1]) * &x[2] == &x[0] * &(&x[1] * &x[2])
            });
            random_check(suite, &format!("commutativity over {ring}"), t.clone(), |x| &x[0] * &x[1] == &x[1] * &x[0]);
            random_check(suite, &format!("distributivity over {ring}"), t.clone(), |x| {
                &x[0] * &(&x[1] + &x[2]) == &(&x[0] * &x[1]) + &(&x[0] * &x[2])
            });
            random_check(suite, &format!("h_1 is the unit over {ring}"), t.clone(), |x| {
                &x[0] * &Hurwitz::one(x[0].ring_id()) == x[0]
            });
            random_check(suite, &format!("additive inverse over {ring}"), t, |x| (&x[0] + &(-&x[0])).is_zero());
        }
    }
}

fn transform(suite: &mut Suite, gen: &mut Gen, settings: Settings) {
    for n in 1..=12usize {
        for m in 1..=12usize {
            let a = Hurwitz::basis(RingId::Integers, n + 1).expect("index >= 1");
            let b = Hurwitz::basis(RingId::Integers, m + 1).expect("index >= 1");
            let want = Hurwitz::basis(RingId::Integers, n + m + 1)
                .expect("index >= 1")
                .scale_integer(&binomial(n + m, n).expect("k <= n"));
            suite.check("basis identity", &a * &b == want, || format!("n = {n}, m = {m}"), || show(&[&a * &b, want.clone()]));
        }
    }
    for ring in [RingId::Integers, RingId::Rationals] {
        for _ in 0..settings.cases {
            let pair = vec![gen.poly(ring), gen.poly(ring)];
            random_check(suite, &format!("transform is multiplicative over {ring}"), pair.clone(), |x| {
                let (Ok(a), Ok(b), Ok(ab)) = (to_ordinary(&x[0]), to_ordinary(&x[1]), to_ordinary(&(&x[0] * &x[1]))) else {
                    return false;
                };
                ab == &a * &b
            });
            random_check(suite, &format!("transform round trip over {ring}"), pair.clone(), |x| {
                to_ordinary(&x[0]).and_then(|t| from_ordinary(&t, ring)).is_ok_and(|back| back == x[0])
            });
        }
    }
    for ring in axiom_rings() {
        for _ in 0..settings.cases {
            let pair = vec![gen.poly(ring), gen.poly(ring)];
            random_check(suite, &format!("derivation product rule over {ring}"), pair, |x| {
                (&x[0] * &x[1]).derivation() == &(&x[0].derivation() * &x[1]) + &(&x[0] * &x[1].derivation())
            });
        }
    }
}

fn charp(suite: &mut Suite, gen: &mut Gen, settings: Settings) {
    for p in [2u64, 3, 5] {
        let ring = RingId::prime_field(p).expect("prime");
        let h2 = Hurwitz::basis(ring, 2).expect("index >= 1");
        suite.check(&format!("h_2^{p} = 0 over {ring}"), h2.pow(p as u32).is_zero(), || format!("p = {p}"), || format_poly(&h2.pow(p as u32)));
        suite.check(&format!("h_2^{} != 0 over {ring}", p - 1), !h2.pow(p as u32 - 1).is_zero(), || format!("p = {p}"), String::new);
        let m = ModulusRing::new(p).expect("modulus >= 2");
        let h2m = HurwitzMod::new(m, vec![BigInt::zero(), BigInt::one()]);
        let idx = nilpotency_index(&h2m, 512);
        suite.check("nilpotency index of h_2 is p", idx == Some(p as usize), || format!("p = {p}"), || format!("{idx:?}"));
    }
    for case in 0..settings.cases {
        let m = BigInt::from(2 + (case % 49) as i64);
        let f = gen.poly(RingId::Integers);
        let g = gen.poly(RingId::Integers);
        let (Ok(fr), Ok(gr), Ok(fgr)) = (reduce_mod(&f, &m), reduce_mod(&g, &m), reduce_mod(&(&f * &g), &m)) else {
            suite.check("reduction succeeds", false, || show(&[f.clone(), g.clone()]), || format!("m = {m}"));
            continue;
        };
        suite.check("reduction is multiplicative", fgr == &fr * &gr, || format!("{} mod {m}", show(&[f.clone(), g.clone()])), String::new);
        match invert_mod(&fr) {
            Ok(s) => suite.check(
                "modular inverse",
                &fr * &s == HurwitzMod::one(fr.ring().clone()),
                || format!("{} mod {m}", format_poly(&f)),
                String::new,
            ),
            Err(Error::NotAUnit(_)) => suite.check(
                "non-units have non-unit constant term",
                fr.ring().inverse(&fr.coeff(0)).is_none(),
                || format!("{} mod {m}", format_poly(&f)),
                String::new,
            ),
            Err(e) => suite.check("modular inverse", false, || format!("{} mod {m}", format_poly(&f)), || e.to_string()),
        }
        if fr.ring().is_nilpotent(&fr.coeff(0)) {
            suite.check(
                "nilpotent constant term gives a nilpotent element",
                nilpotency_index(&fr, 512).is_some(),
                || format!("{} mod {m}", format_poly(&f)),
                String::new,
            );
        }
    }
}

/// Primitive `f` over `Z` with `1 <= Δ(f) <= 3` and coefficients in
/// `[-3, 3]`, ordered by height then degree so the first failure is small.
pub fn small_primitive_inputs() -> Vec<Hurwitz> {
    let mut out = Vec::new();
    for height in 1..=3i64 {
        for len in 2..=4usize {
            let width = (2 * height + 1) as usize;
            for mut code in 0..width.pow(len as u32) {
                let mut c = Vec::with_capacity(len);
                for _ in 0..len {
                    c.push((code % width) as i64 - height);
                    code /= width;
                }
                let max = c.iter().map(|x| x.abs()).max().unwrap_or(0);
                if max != height || c[len - 1] == 0 {
                    continue;
                }
                let f = Hurwitz::from_ints(RingId::Integers, &c);
                if content_primitive(&f).is_ok_and(|(d, _)| d.is_unit()) {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn irreducibility(suite: &mut Suite, gen: &mut Gen, settings: Settings) {
    let cap = settings.degree_cap;
    for f in small_primitive_inputs() {
        let complete = is_completely_irreducible(&f, cap);
        let hr = is_irreducible_hr(&f, cap);
        match (&complete, &hr) {
            (Ok(c), Ok(h)) => suite.check(
                "complete irreducibility agrees with irreducibility in hZ on primitive inputs",
                c == h,
                || format_poly(&f),
                || format!("completely irreducible = {c}, irreducible in hZ = {h}"),
            ),
            _ => suite.check("irreducibility decisions succeed", false, || format_poly(&f), || format!("{complete:?} {hr:?}")),
        }
        if complete == Ok(false) {
            let w = factor_witness_search(&f, 6, 3);
            suite.check(
                "witness search at height 6 finds a degree-dropping factorization",
                w.as_ref().is_some_and(|w| w.verify(&f)),
                || format_poly(&f),
                || "no witness with coefficients bounded by 6".into(),
            );
        }
    }
    let two_two = Hurwitz::from_ints(RingId::Integers, &[2, 2]);
    let expected = Remark16Outcome::Disagrees(Remark16Witness::ReducibleInHr {
        left: Hurwitz::from_ints(RingId::Integers, &[2]),
        right: Hurwitz::from_ints(RingId::Integers, &[1, 1]),
    });
    let got = remark16_check(&two_two, cap);
    suite.check("(2,2) is completely irreducible yet reducible in hZ", got.as_ref() == Ok(&expected), || format_poly(&two_two), || format!("{got:?}"));
    for _ in 0..settings.cases {
        let f = gen.nonconstant_poly(RingId::Integers, 3);
        let g = gen.nonconstant_poly(RingId::Integers, 3);
        let q = to_ordinary(&(&f * &g)).expect("characteristic 0");
        match factor_ordinary(&q, cap) {
            Ok(fac) => {
                let irreducible = fac.factors.iter().all(|(p, _)| is_irreducible_ordinary(p, cap).unwrap_or(false));
                suite.check("factorization reconstructs", fac.product() == q, || show(&[f.clone(), g.clone()]), String::new);
                suite.check("factors are irreducible", irreducible, || show(&[f.clone(), g.clone()]), String::new);
                suite.check(
                    "products are reducible",
                    fac.factors.iter().map(|(_, e)| *e as usize).sum::<usize>() >= 2,
                    || show(&[f.clone(), g.clone()]),
                    String::new,
                );
            }
            Err(e) => suite.check("factorization succeeds", false, || show(&[f.clone(), g.clone()]), || e.to_string()),
        }
        if let Ok((d, p)) = content_primitive(&f) {
            suite.check("content reconstructs", p.scale(d.value()) == f, || format_poly(&f), String::new);
        }
    }
}

pub fn fixture_ideals() -> Vec<ClosedIdeal> {
    let z = |c: &[i64]| Hurwitz::from_ints(RingId::Integers, c);
    let loc2 = RingId::localized(2).expect("prime");
    let loc5 = RingId::localized(5).expect("prime");
    [
        z(&[1, 1]),
        z(&[2, 1]),
        z(&[1, 5]),
        z(&[0, 1]),
        z(&[3, 0, 1]),
        z(&[1, 2, 2]),
        z(&[1, 0, 2]),
        Hurwitz::from_ints(loc2, &[1, 1]),
        Hurwitz::from_ints(loc5, &[1, 5]),
        Hurwitz::from_ints(loc5, &[10, 1]),
        Hurwitz::from_ints(RingId::Rationals, &[1, 0, 2]),
        Hurwitz::from_ints(RingId::Rationals, &[0, 1]),
    ]
    .iter()
    .map(|f| mk_closed(f).expect("fixture generators lie in Γ"))
    .collect()
}

fn check_ideal(suite: &mut Suite, gen: &mut Gen, ideal: &ClosedIdeal, cases: usize) {
    let ring = ideal.ring();
    let f = ideal.generator().clone();
    let name = format!("[{}]", format_poly(&f));
    for _ in 0..cases {
        let r = gen.poly(ring);
        random_check(suite, "multiples are members", vec![f.clone(), r], |x| {
            mk_closed(&x[0]).and_then(|i| i.contains(&(&x[0] * &x[1]))).unwrap_or(false)
        });
    }
    let factors = ideal.factor_closed();
    for _ in 0..cases {
        let g = gen.poly(ring);
        let divides = g.is_zero() || to_ordinary(&g).and_then(|t| ideal.f0().divides(&t)).unwrap_or(false);
        let member = ideal.contains(&g);
        suite.check("membership is divisibility by f0", member.as_ref() == Ok(&divides), || format!("{name} {}", format_poly(&g)), || format!("{member:?}"));
        if let Ok(fs) = &factors {
            let via = hurwitz::ideal::contained_in_factors(fs, &g);
            suite.check("membership agrees with the prime factorization", via.as_ref() == Ok(&divides), || format!("{name} {}", format_poly(&g)), String::new);
        }
    }
    if ring != RingId::Rationals {
        let d = ideal.min_degree();
        let mut prev: Option<hurwitz::RingElem> = None;
        for k in d..=d + 8 {
            match ideal.constant_member(k) {
                Ok((c, g)) => {
                    if let Some(p) = &prev {
                        suite.check("constant ideals grow with the degree", c.divides(p).unwrap_or(false), || format!("{name} k = {k}"), || format!("C_k = {c}, previous {p}"));
                    }
                    if let Some(g) = g {
                        let ok = ideal.contains(&g).unwrap_or(false) && g.elem(0) == c && g.degree().is_some_and(|dg| dg <= k);
                        suite.check("constant ideal generator is attained by a member", ok, || format!("{name} k = {k}"), || format_poly(&g));
                    }
                    prev = Some(c);
                }
                Err(e) => suite.check("constant ideal computation", false, || format!("{name} k = {k}"), || e.to_string()),
            }
        }
    }
    match is_maximal(ideal, default_budget(ideal)) {
        Ok(v) => {
            if !matches!(v, MaximalityVerdict::Unknown(_)) {
                suite.check("maximality certificates verify", verify_certificate(ideal, &v), || name.clone(), || format!("{v:?}"));
            }
            if let (Some(g), RingId::Integers) = (v.witness(), ring) {
                for m in 2..=50 {
                    let ok = cosimplicity_witness(ideal, g, &BigInt::from(m)).is_ok_and(|w| w.is_some());
                    suite.check("h_1 lies in M + h(mZ)", ok, || format!("{name} m = {m}"), String::new);
                }
            }
        }
        Err(e) => suite.check("maximality decision", false, || name.clone(), || e.to_string()),
    }
    if ring != RingId::Rationals && ideal.is_prime().unwrap_or(false) {
        let primes: Vec<u64> = match ring {
            RingId::LocalizedAtP(p) => vec![p.get() as u64],
            _ => vec![2, 3, 5, 7],
        };
        for q in primes {
            let q = BigInt::from(q);
            if let Ok(out) = lemma21_check(ideal, &q, 8) {
                if matches!(out, Lemma21Outcome::ViolatedWitness(_) | Lemma21Outcome::HoldsCertified(_)) {
                    suite.check("lemma checks carry verified evidence", verify_lemma21(ideal, &q, &out), || format!("{name} L = ({q})"), || format!("{out:?}"));
                }
            }
        }
    }
}

fn ideals(suite: &mut Suite, gen: &mut Gen, settings: Settings) {
    let per_ideal = settings.cases.div_ceil(8);
    for ideal in fixture_ideals() {
        check_ideal(suite, gen, &ideal, per_ideal);
    }
    let random = settings.cases.div_ceil(25);
    for _ in 0..random {
        let ring = if gen.range(0, 1) == 0 { RingId::Integers } else { RingId::localized(3).expect("prime") };
        let f = gen.nonconstant_poly(ring, 2);
        if !in_gamma(&f) {
            continue;
        }
        let ideal = mk_closed(&f).expect("nonconstant over a supported ring");
        check_ideal(suite, gen, &ideal, per_ideal);
    }
}

fn claims(suite: &mut Suite) {
    let z = |c: &[i64]| Hurwitz::from_ints(RingId::Integers, c);
    let loc2 = RingId::localized(2).expect("prime");
    let loc5 = RingId::localized(5).expect("prime");
    let three = BigInt::from(3);
    let two = BigInt::from(2);

    let p = mk_closed(&z(&[2, 1])).expect("in Γ");
    let out = lemma21_check(&p, &three, 8);
    let want = Lemma21Outcome::ViolatedWitness(z(&[4, 6, 6, 3]));
    suite.check("[(2,1)] over Z, L = (3): violated by (4,6,6,3)", out.as_ref() == Ok(&want) && verify_lemma21(&p, &three, &want), || "Z:[2,1] L=3".into(), || format!("{out:?}"));
    suite.check("(2,1)⊛(2,2,1) = (4,6,6,3)", &z(&[2, 1]) * &z(&[2, 2, 1]) == z(&[4, 6, 6, 3]), || "Z:[2,1] Z:[2,2,1]".into(), String::new);

    let out = lemma21_check(&p, &two, 8);
    let ok = matches!(&out, Ok(o @ Lemma21Outcome::HoldsCertified(_)) if verify_lemma21(&p, &two, o));
    suite.check("[(2,1)] over Z, L = (2): holds by a p-adic certificate", ok, || "Z:[2,1] L=2".into(), || format!("{out:?}"));

    let q = mk_closed(&Hurwitz::from_ints(loc2, &[1, 1])).expect("in Γ");
    let out = lemma21_check(&q, &two, 8);
    let want = Lemma21Outcome::ViolatedWitness(Hurwitz::from_ints(loc2, &[1, 2, 2]));
    suite.check("[(1,1)] over Zloc(2), L = (2): violated by (1,2,2)", out.as_ref() == Ok(&want) && verify_lemma21(&q, &two, &want), || "Zloc(2):[1,1] L=2".into(), || format!("{out:?}"));

    let built = prop23_construct(loc5);
    let ok = built.as_ref().is_some_and(|i| {
        let v = is_maximal(i, default_budget(i));
        i.generator() == &Hurwitz::from_ints(loc5, &[1, 5])
            && i.is_prime().unwrap_or(false)
            && v.as_ref().is_ok_and(|v| v.kind() == "Cor25Witness" && v.witness() == Some(i.generator()) && verify_certificate(i, v))
    });
    suite.check("construction over Zloc(5) gives a certified maximal [(1,5)]", ok, || "Zloc(5)".into(), || format!("{built:?}"));
    suite.check("construction over Q gives [h_2]", prop23_construct(RingId::Rationals).is_some_and(|i| i.f0() == &OrdinaryPoly::x()), || "Q".into(), String::new);
    suite.check("construction over Z is unavailable", prop23_construct(RingId::Integers).is_none(), || "Z".into(), String::new);

    let m = mk_closed(&z(&[1, 1])).expect("in Γ");
    let v = is_maximal(&m, default_budget(&m));
    let ok = v.as_ref().is_ok_and(|v| v.kind() == "UnitConstantLattice" && verify_certificate(&m, v));
    suite.check("[(1,1)] over Z is certified maximal", ok, || "Z:[1,1]".into(), || format!("{v:?}"));
    let v = is_maximal(&p, default_budget(&p));
    let ok = v.as_ref().is_ok_and(|v| v.kind() == "PadicObstruction" && verify_certificate(&p, v));
    suite.check("[(2,1)] over Z is certified non-maximal", ok, || "Z:[2,1]".into(), || format!("{v:?}"));

    let report = paper_claim_report(&m, default_budget(&m));
    let ok = report.as_ref().is_ok_and(|r| {
        r.lines.iter().any(|l| l.label == CLAIM_LEADING_IN_PS && l.status == ClaimStatus::Violated && l.verified)
    });
    suite.check("report over Z marks the leading-ideal claim violated", ok, || "Z:[1,1]".into(), || format!("{report:?}"));

    let r5 = mk_closed(&Hurwitz::from_ints(loc5, &[1, 5])).expect("in Γ");
    let report = paper_claim_report(&r5, default_budget(&r5));
    let ok = report.as_ref().is_ok_and(|r| r.lines.iter().all(|l| l.status == ClaimStatus::Holds && l.verified));
    suite.check("report over Zloc(5) confirms every claim", ok, || "Zloc(5):[1,5]".into(), || format!("{report:?}"));

    let qx = mk_closed(&Hurwitz::from_ints(RingId::Rationals, &[0, 1])).expect("in Γ");
    let report = paper_claim_report(&qx, 8);
    let ok = report.as_ref().is_ok_and(|r| {
        r.lines.iter().any(|l| l.label == CLAIM_DICHOTOMY && l.status == ClaimStatus::Holds && l.detail.starts_with("branch (i)"))
    });
    suite.check("report over Q for [h_2] takes the simple-ring branch", ok, || "Q:[0,1]".into(), || format!("{report:?}"));

    for ideal in fixture_ideals() {
        if let Ok(r) = paper_claim_report(&ideal, default_budget(&ideal)) {
            for l in &r.lines {
                let ok = l.status == ClaimStatus::Unknown || l.verified;
                suite.check("claim statuses rest on verified evidence", ok, || format!("{ideal:?}"), || l.label.to_string());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic() {
        let mut a = Gen::new(7, 6, 20);
        let mut b = Gen::new(7, 6, 20);
        for _ in 0..20 {
            assert_eq!(a.poly(RingId::Rationals), b.poly(RingId::Rationals));
        }
        let f = Gen::new(1, 6, 20).poly(RingId::localized(3).unwrap());
        assert!(f.coeffs().iter().all(|c| RingId::localized(3).unwrap().contains(c)));
    }

    #[test]
    fn shrinking_finds_small_counterexamples() {
        let f = Hurwitz::from_ints(RingId::Integers, &[17, -9, 4, 12]);
        // "no coefficient above 3 in absolute value"
        let small = shrink(vec![f], |x| x[0].coeffs().iter().any(|c| c.numer().abs() > BigInt::from(3)));
        assert_eq!(small[0].coeffs().len(), 1);
        assert!(small[0].coeff(0).numer().abs() <= BigInt::from(7));
    }

    #[test]
    fn zero_cases_pass_vacuously() {
        let r = run_suite("axioms", Settings { cases: 0, ..Settings::default() });
        assert!(r.passed());
        assert_eq!(r.checks, 0);
    }

    #[test]
    fn enumerated_inputs_are_primitive() {
        let inputs = small_primitive_inputs();
        assert!(inputs.iter().all(|f| (1..=3).contains(&f.degree().unwrap())));
        assert_eq!(inputs[0].coeffs().iter().map(|c| c.numer().abs()).max().unwrap(), BigInt::one());
    }
}

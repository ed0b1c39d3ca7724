//! Command-line front end for the `hurwitz` crate.
//!
//! [`run`] takes the argument vector and returns the exit code together with
//! everything that would be written to stdout and stderr, so the binary is a
//! thin wrapper and the whole interface can be tested in-process.

pub mod verify;

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use hurwitz::irreducible::{
    content_primitive, degree_drop_witness, factor_ordinary, hr_factorization, is_completely_irreducible,
    is_irreducible_hr, is_irreducible_ordinary, remark16_check, DegreeDropWitness, Remark16Outcome, Remark16Witness,
};
use hurwitz::maximality::{
    default_budget, is_maximal, lemma21_check, paper_claim_report, prop23_construct, verify_certificate,
    verify_lemma21, ClaimStatus, HenselCertificate, MaximalEvidence, NonMaximalEvidence,
};
use hurwitz::modular::{invert_mod, reduce_mod};
use hurwitz::ordinary::{from_ordinary, to_ordinary};
use hurwitz::text::{format_coeffs, format_mod_poly, format_ordinary, parse_coeffs, parse_ordinary, parse_ring};
use hurwitz::{
    format_poly, parse_poly, ClosedIdeal, Error, Hurwitz, HurwitzMod, Lemma21Outcome, MaximalityVerdict,
    ModulusRing, RingId, DEFAULT_DEGREE_CAP,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// Default window for `tau` and `lemma21`.
pub const DEFAULT_WINDOW: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Exact arithmetic and ideal theory in Hurwitz polynomial rings")]
pub struct Cli {
    /// Coefficient ring: Z, Q, Fp(p) or Zloc(p). Allows bare `[c0,...]` arguments.
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Degree cap for factorization (default 8); for `verify`, the degree of random inputs (default 6).
    #[arg(long = "degree-bound", global = true, value_name = "K")]
    pub degree_bound: Option<usize>,
    /// Degree window for lattice searches.
    #[arg(long, global = true, value_name = "K")]
    pub budget: Option<usize>,
    /// Emit one JSON object instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Random cases per property in `verify`.
    #[arg(long, global = true, value_name = "N", default_value_t = 200)]
    pub cases: usize,
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    pub seed: u64,
    /// Suite for `verify`: a suite name or `all`.
    #[arg(long, global = true, value_name = "NAME", default_value = "all")]
    pub suite: String,
    /// Coefficient height of random inputs in `verify`.
    #[arg(long, global = true, value_name = "H", default_value_t = 20)]
    pub height: i64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hurwitz product of two polynomials.
    Mul { a: String, b: String },
    Add { a: String, b: String },
    Pow { f: String, e: u32 },
    /// `ORD:[..]` to the Hurwitz side (over `--ring`, default Q), or a Hurwitz polynomial to `ORD:[..]`.
    Transform { f: String },
    /// Inverse in `h(Z/m)`.
    InverseMod {
        f: String,
        #[arg(long, value_name = "M")]
        modulus: String,
    },
    Irreducible { f: String },
    Factor { f: String },
    /// Compare complete irreducibility with irreducibility in `hZ`.
    Remark16 { f: String },
    /// Closed principal ideals `[f]`.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Check `(P + hL) ∩ R = L` for `P = [f]` and `L = (q)`.
    Lemma21 {
        f: String,
        #[arg(long = "L", value_name = "Q")]
        l: String,
    },
    /// Build the maximal R-disjoint ideal for `--ring`.
    Prop23,
    /// Run the property suites.
    Verify,
}

#[derive(Subcommand, Debug)]
pub enum IdealOp {
    Contains { f: String, g: String },
    Prime { f: String },
    Maximal { f: String },
    Factor { f: String },
    Tau { f: String },
    Constants { f: String },
    Claims { f: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    text: String,
    data: Map<String, Value>,
    code: i32,
    note: String,
}

impl Reply {
    fn new(text: impl Into<String>, data: Value) -> Self {
        let data = match data {
            Value::Object(m) => m,
            other => Map::from_iter([("result".to_string(), other)]),
        };
        Reply { text: text.into(), data, code: 0, note: String::new() }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion
                | clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    Output { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Output { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(&cli) {
        Ok(reply) => {
            let stdout = if cli.json {
                let mut obj = Map::new();
                obj.insert("schema_version".into(), json!(1));
                obj.insert("command".into(), json!(name));
                obj.extend(reply.data);
                format!("{}\n", Value::Object(obj))
            } else {
                reply.text
            };
            Output { code: reply.code, stdout, stderr: reply.note }
        }
        Err(failure) => {
            let (kind, message) = match &failure {
                Failure::Usage(m) => ("UsageError", m.clone()),
                Failure::Domain(e) => (error_kind(e), e.to_string()),
            };
            let stdout = if cli.json {
                let v = json!({
                    "schema_version": 1,
                    "command": name,
                    "error": { "kind": kind, "message": message },
                });
                format!("{v}\n")
            } else {
                String::new()
            };
            Output { code: 2, stdout, stderr: format!("error: {name}: {message}\n") }
        }
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Mul { .. } => "mul".into(),
        Command::Add { .. } => "add".into(),
        Command::Pow { .. } => "pow".into(),
        Command::Transform { .. } => "transform".into(),
        Command::InverseMod { .. } => "inverse-mod".into(),
        Command::Irreducible { .. } => "irreducible".into(),
        Command::Factor { .. } => "factor".into(),
        Command::Remark16 { .. } => "remark16".into(),
        Command::Ideal { op } => format!(
            "ideal {}",
            match op {
                IdealOp::Contains { .. } => "contains",
                IdealOp::Prime { .. } => "prime",
                IdealOp::Maximal { .. } => "maximal",
                IdealOp::Factor { .. } => "factor",
                IdealOp::Tau { .. } => "tau",
                IdealOp::Constants { .. } => "constants",
                IdealOp::Claims { .. } => "claims",
            }
        ),
        Command::Lemma21 { .. } => "lemma21".into(),
        Command::Prop23 => "prop23".into(),
        Command::Verify => "verify".into(),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::RingMismatch(..) => "RingMismatch",
        Error::NotAUnit(_) => "NotAUnit",
        Error::UnsupportedRing { .. } => "UnsupportedRing",
        Error::NotPrime(_) => "NotPrime",
        Error::InvalidIndex(_) => "InvalidIndex",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::BadModulus { .. } => "BadModulus",
        Error::NilpotencyBudgetExceeded(_) => "NilpotencyBudgetExceeded",
        Error::CharPUnsupported(_) => "CharPUnsupported",
        Error::NotInRing { .. } => "NotInRing",
        Error::NotInTargetRing { .. } => "NotInTargetRing",
        Error::DivisionByZero => "DivisionByZero",
        Error::DegreeTooLarge { .. } => "DegreeTooLarge",
        Error::ConstantPolynomial => "ConstantPolynomial",
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::NotInGamma => "NotInGamma",
        Error::UnitInput => "UnitInput",
        Error::NotPrimeIdeal => "NotPrimeIdeal",
        Error::BudgetExceeded(_) => "BudgetExceeded",
        Error::Syntax { .. } => "SyntaxError",
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    ring: Option<RingId>,
}

impl Ctx<'_> {
    fn poly(&self, text: &str) -> Res<Hurwitz> {
        if text.trim_start().starts_with('[') {
            let ring = self.ring.ok_or_else(|| Failure::Usage(format!("`{text}` has no ring prefix; pass --ring")))?;
            return Ok(parse_coeffs(text, ring)?);
        }
        let f = parse_poly(text)?;
        if let Some(r) = self.ring {
            if r != f.ring_id() {
                return Err(Error::RingMismatch(r.to_string(), f.ring_id().to_string()).into());
            }
        }
        Ok(f)
    }

    fn cap(&self) -> usize {
        self.cli.degree_bound.unwrap_or(DEFAULT_DEGREE_CAP)
    }

    fn ideal(&self, text: &str) -> Res<ClosedIdeal> {
        Ok(ClosedIdeal::new(&self.poly(text)?, self.cap())?)
    }
}

fn integer(text: &str, what: &str) -> Res<BigInt> {
    text.trim().parse().map_err(|_| Failure::Usage(format!("{what} must be an integer, got `{text}`")))
}

fn dispatch(cli: &Cli) -> Res<Reply> {
    let ring = cli.ring.as_deref().map(parse_ring).transpose()?;
    let ctx = Ctx { cli, ring };
    match &cli.command {
        Command::Mul { a, b } => {
            let p = ctx.poly(a)?.try_mul(&ctx.poly(b)?)?;
            Ok(poly_reply(&p))
        }
        Command::Add { a, b } => {
            let p = ctx.poly(a)?.try_add(&ctx.poly(b)?)?;
            Ok(poly_reply(&p))
        }
        Command::Pow { f, e } => Ok(poly_reply(&ctx.poly(f)?.pow(*e))),
        Command::Transform { f } => transform(&ctx, f),
        Command::InverseMod { f, modulus } => inverse_mod(&ctx, f, modulus),
        Command::Irreducible { f } => irreducible(&ctx, f),
        Command::Factor { f } => factor(&ctx, f),
        Command::Remark16 { f } => remark16(&ctx, f),
        Command::Ideal { op } => ideal(&ctx, op),
        Command::Lemma21 { f, l } => lemma21(&ctx, f, l),
        Command::Prop23 => prop23(&ctx),
        Command::Verify => run_verify(cli),
    }
}

fn poly_reply(p: &Hurwitz) -> Reply {
    let s = format_poly(p);
    Reply::new(format!("{s}\n"), json!({ "result": s }))
}

fn transform(ctx: &Ctx, text: &str) -> Res<Reply> {
    if text.trim_start().starts_with("ORD") {
        let q = parse_ordinary(text)?;
        let target = ctx.ring.unwrap_or(RingId::Rationals);
        let f = from_ordinary(&q, target)?;
        return Ok(poly_reply(&f));
    }
    let q = to_ordinary(&ctx.poly(text)?)?;
    let s = format_ordinary(&q);
    Ok(Reply::new(format!("{s}\n"), json!({ "result": s })))
}

fn inverse_mod(ctx: &Ctx, text: &str, modulus: &str) -> Res<Reply> {
    let m = integer(modulus, "--modulus")?;
    let f = ctx.poly(text)?;
    let fbar = reduce_mod(&f, &m)?;
    let inv = invert_mod(&fbar)?;
    let verified = &fbar * &inv == HurwitzMod::one(ModulusRing::new(m)?);
    let s = format_mod_poly(&inv);
    Ok(Reply::new(
        format!("{s}\nverified: {verified}\n"),
        json!({ "result": s, "witness": format_mod_list(&inv), "verified": verified }),
    ))
}

fn format_mod_list(f: &HurwitzMod) -> String {
    let s = format_mod_poly(f);
    s[s.find(':').map_or(0, |i| i + 1)..].to_string()
}

fn irreducible(ctx: &Ctx, text: &str) -> Res<Reply> {
    let f = ctx.poly(text)?;
    let cap = ctx.cap();
    let complete = is_completely_irreducible(&f, cap)?;
    let ordinary = is_irreducible_ordinary(&to_ordinary(&f)?, cap)?;
    let hr = if f.ring_id() == RingId::Integers {
        match is_irreducible_hr(&f, cap) {
            Ok(b) => Some(b),
            Err(Error::UnitInput) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let witness = degree_drop_witness(&f, cap)?;
    let mut text = format!("completely irreducible: {complete}\ntransform irreducible over Q: {ordinary}\n");
    if let Some(b) = hr {
        text.push_str(&format!("irreducible in hZ: {b}\n"));
    }
    if let Some(w) = &witness {
        text.push_str(&degree_drop_text(w));
    }
    let verified = witness.as_ref().is_none_or(|w| w.verify(&f));
    Ok(Reply::new(
        text,
        json!({
            "kind": if complete { "CompletelyIrreducible" } else { "NotCompletelyIrreducible" },
            "completely_irreducible": complete,
            "transform_irreducible": ordinary,
            "irreducible_in_hz": hr,
            "witness": witness.as_ref().map(degree_drop_json),
            "verified": verified,
        }),
    ))
}

fn degree_drop_text(w: &DegreeDropWitness) -> String {
    format!(
        "degree-drop witness: f * h'_{} = h * g\n  h = {}\n  g = {}\n",
        w.b,
        format_poly(&w.h),
        format_poly(&w.g)
    )
}

fn degree_drop_json(w: &DegreeDropWitness) -> Value {
    json!({ "b": w.b.to_string(), "h": format_coeffs(&w.h), "g": format_coeffs(&w.g) })
}

fn factor(ctx: &Ctx, text: &str) -> Res<Reply> {
    let f = ctx.poly(text)?;
    let cap = ctx.cap();
    let q = to_ordinary(&f)?;
    let fac = factor_ordinary(&q, cap)?;
    let mut out = format!("transform: {}\nunit: {}\n", format_ordinary(&q), fac.unit);
    let mut factors = Vec::new();
    for (p, e) in &fac.factors {
        out.push_str(&format!("factor: {} ^ {e}\n", format_ordinary(p)));
        factors.push(json!({ "factor": format_ordinary(p), "multiplicity": e }));
    }
    let mut data = json!({
        "transform": format_ordinary(&q),
        "unit": fac.unit.to_string(),
        "factors": factors,
        "verified": fac.product() == q,
    });
    if matches!(f.ring_id(), RingId::Integers | RingId::LocalizedAtP(_)) && !f.is_zero() {
        let (c, g) = content_primitive(&f)?;
        out.push_str(&format!("content: {c}\nprimitive part: {}\n", format_poly(&g)));
        data["content"] = json!(c.to_string());
        data["primitive_part"] = json!(format_coeffs(&g));
    }
    if f.ring_id() == RingId::Integers {
        match hr_factorization(&f, cap) {
            Ok(Some((l, r))) => {
                out.push_str(&format!("split in hZ: {} * {}\n", format_poly(&l), format_poly(&r)));
                data["hz_split"] = json!({ "left": format_coeffs(&l), "right": format_coeffs(&r), "verified": &l * &r == f });
            }
            Ok(None) => {
                out.push_str("split in hZ: none\n");
                data["hz_split"] = Value::Null;
            }
            Err(Error::UnitInput) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if f.degree().is_some_and(|d| d >= 1) {
        if let Some(w) = degree_drop_witness(&f, cap)? {
            out.push_str(&degree_drop_text(&w));
            data["degree_drop"] = degree_drop_json(&w);
        }
    }
    Ok(Reply::new(out, data))
}

fn remark16(ctx: &Ctx, text: &str) -> Res<Reply> {
    let f = ctx.poly(text)?;
    let outcome = remark16_check(&f, ctx.cap())?;
    Ok(match outcome {
        Remark16Outcome::Agrees { irreducible } => Reply::new(
            format!("Agrees (irreducible: {irreducible})\n"),
            json!({ "kind": "Agrees", "irreducible": irreducible, "witness": null, "verified": true }),
        ),
        Remark16Outcome::Disagrees(Remark16Witness::ReducibleInHr { left, right }) => {
            let verified = &left * &right == f;
            Reply::new(
                format!(
                    "Disagrees: completely irreducible but reducible in hZ\n  {} = {} * {}\nverified: {verified}\n",
                    format_poly(&f),
                    format_poly(&left),
                    format_poly(&right)
                ),
                json!({
                    "kind": "Disagrees",
                    "reason": "ReducibleInHr",
                    "witness": { "left": format_coeffs(&left), "right": format_coeffs(&right) },
                    "verified": verified,
                }),
            )
        }
        Remark16Outcome::Disagrees(Remark16Witness::NotCompletelyIrreducible(w)) => {
            let verified = w.verify(&f);
            Reply::new(
                format!(
                    "Disagrees: irreducible in hZ but not completely irreducible\n{}verified: {verified}\n",
                    degree_drop_text(&w)
                ),
                json!({
                    "kind": "Disagrees",
                    "reason": "NotCompletelyIrreducible",
                    "witness": degree_drop_json(&w),
                    "verified": verified,
                }),
            )
        }
    })
}

fn hensel_json(c: &HenselCertificate) -> Value {
    json!({
        "p": c.p.to_string(),
        "poly": c.poly.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "value_at_zero": c.value_at_zero.to_string(),
        "derivative_at_zero": c.derivative_at_zero.to_string(),
    })
}

fn verdict_parts(ideal: &ClosedIdeal, v: &MaximalityVerdict) -> (String, Value) {
    let status = match v {
        MaximalityVerdict::MaximalCertified(_) => "MaximalCertified",
        MaximalityVerdict::NotMaximalCertified(_) => "NotMaximalCertified",
        MaximalityVerdict::Unknown(_) => "Unknown",
    };
    let verified = verify_certificate(ideal, v);
    let witness = v.witness().map(format_coeffs);
    let mut text = format!("{status} ({})\n", v.kind());
    let mut data = json!({
        "status": status,
        "kind": v.kind(),
        "witness": witness,
        "verified": verified,
    });
    if let Some(w) = &witness {
        text.push_str(&format!("witness: {w}\n"));
    }
    match v {
        MaximalityVerdict::NotMaximalCertified(NonMaximalEvidence::PadicObstruction(c)) => {
            text.push_str(&format!(
                "certificate: p = {}, F(0) = {}, F'(0) = {}\n",
                c.p, c.value_at_zero, c.derivative_at_zero
            ));
            data["certificate"] = hensel_json(c);
        }
        MaximalityVerdict::NotMaximalCertified(NonMaximalEvidence::NotPrime(p)) => {
            text.push_str(&format!("proper factor: {}\n", format_ordinary(p)));
            data["factor"] = json!(format_ordinary(p));
        }
        MaximalityVerdict::MaximalCertified(MaximalEvidence::FieldQuotient | MaximalEvidence::SimpleRingH2)
        | MaximalityVerdict::MaximalCertified(_)
        | MaximalityVerdict::NotMaximalCertified(NonMaximalEvidence::XGenerator) => {}
        MaximalityVerdict::Unknown(r) => {
            text.push_str(&format!("window: {}\n", r.budget));
            data["budget"] = json!(r.budget);
            data["constant_ideals"] =
                json!(r.constant_ideals.iter().map(|(k, c)| json!({ "k": k, "c": c.to_string() })).collect::<Vec<_>>());
        }
    }
    text.push_str(&format!("verified: {verified}\n"));
    (text, data)
}

fn ideal(ctx: &Ctx, op: &IdealOp) -> Res<Reply> {
    match op {
        IdealOp::Contains { f, g } => {
            let i = ctx.ideal(f)?;
            let g = ctx.poly(g)?;
            let member = i.contains(&g)?;
            Ok(Reply::new(format!("{member}\n"), json!({ "result": member })))
        }
        IdealOp::Prime { f } => {
            let i = ctx.ideal(f)?;
            let prime = i.is_prime()?;
            Ok(Reply::new(
                format!("{prime}\nf0 = {}\n", format_ordinary(i.f0())),
                json!({ "result": prime, "f0": format_ordinary(i.f0()) }),
            ))
        }
        IdealOp::Maximal { f } => {
            let i = ctx.ideal(f)?;
            let budget = ctx.cli.budget.unwrap_or_else(|| default_budget(&i));
            let v = is_maximal(&i, budget)?;
            let (text, data) = verdict_parts(&i, &v);
            Ok(Reply::new(text, data))
        }
        IdealOp::Factor { f } => {
            let i = ctx.ideal(f)?;
            let factors = i.factor_closed()?;
            let mut text = String::new();
            let mut list = Vec::new();
            for (p, e) in &factors {
                text.push_str(&format!("[{}] ^ {e}  (f0 = {})\n", format_poly(p.generator()), format_ordinary(p.f0())));
                list.push(json!({
                    "generator": format_coeffs(p.generator()),
                    "f0": format_ordinary(p.f0()),
                    "multiplicity": e,
                }));
            }
            Ok(Reply::new(text, json!({ "factors": list })))
        }
        IdealOp::Tau { f } => {
            let i = ctx.ideal(f)?;
            let window = ctx.cli.budget.unwrap_or(DEFAULT_WINDOW);
            let t = i.min_tau_rho(window)?;
            Ok(Reply::new(
                format!(
                    "Min = {}\ntau = ({})\nrho (truncated to window {window}) = ({})\nstabilized: {}\n",
                    t.min, t.tau, t.rho_truncated, t.stabilized
                ),
                json!({
                    "min": t.min,
                    "tau": t.tau.to_string(),
                    "rho_truncated": t.rho_truncated.to_string(),
                    "window": window,
                    "stabilized": t.stabilized,
                    "exact_rho": false,
                }),
            ))
        }
        IdealOp::Constants { f } => {
            let i = ctx.ideal(f)?;
            let budget = ctx.cli.budget.unwrap_or_else(|| default_budget(&i));
            let d = i.min_degree();
            let mut text = String::new();
            let mut list = Vec::new();
            for k in d..=d + budget {
                let (c, member) = i.constant_member(k)?;
                let verified = member.as_ref().is_none_or(|g| i.contains(g).unwrap_or(false) && g.elem(0) == c);
                let shown = member.as_ref().map(format_coeffs);
                text.push_str(&format!("C_{k} = ({c})"));
                if let Some(s) = &shown {
                    text.push_str(&format!("  member {s}"));
                }
                text.push('\n');
                list.push(json!({ "k": k, "c": c.to_string(), "witness": shown, "verified": verified }));
            }
            Ok(Reply::new(text, json!({ "constants": list })))
        }
        IdealOp::Claims { f } => {
            let i = ctx.ideal(f)?;
            let budget = ctx.cli.budget.unwrap_or_else(|| default_budget(&i));
            let report = paper_claim_report(&i, budget)?;
            let (mut text, verdict) = verdict_parts(&i, &report.verdict);
            let mut lines = Vec::new();
            for l in &report.lines {
                let status = match l.status {
                    ClaimStatus::Holds => "Holds",
                    ClaimStatus::Violated => "Violated",
                    ClaimStatus::Unknown => "Unknown",
                };
                text.push_str(&format!("{status:<8} {}: {}", l.label, l.detail));
                if !l.witnesses.is_empty() {
                    let ws: Vec<String> = l.witnesses.iter().map(format_coeffs).collect();
                    text.push_str(&format!(" [witness {}]", ws.join(", ")));
                }
                text.push('\n');
                lines.push(json!({
                    "claim": l.label,
                    "status": status,
                    "detail": l.detail,
                    "witnesses": l.witnesses.iter().map(format_coeffs).collect::<Vec<_>>(),
                    "verified": l.verified,
                }));
            }
            Ok(Reply::new(text, json!({ "verdict": verdict, "claims": lines })))
        }
    }
}

fn lemma21(ctx: &Ctx, text: &str, l: &str) -> Res<Reply> {
    let i = ctx.ideal(text)?;
    let q = integer(l, "--L")?;
    let budget = ctx.cli.budget.unwrap_or(DEFAULT_WINDOW);
    let out = lemma21_check(&i, &q, budget)?;
    let verified = verify_lemma21(&i, &q, &out);
    let mut text = format!("{}\n", out.kind());
    let mut data = json!({ "kind": out.kind(), "L": q.to_string(), "witness": null, "verified": verified });
    match &out {
        Lemma21Outcome::ViolatedWitness(g) => {
            text.push_str(&format!("witness: {} (member congruent to h_1 mod {q})\n", format_coeffs(g)));
            data["witness"] = json!(format_coeffs(g));
        }
        Lemma21Outcome::HoldsCertified(c) => {
            text.push_str(&format!("certificate: p = {}, F(0) = {}, F'(0) = {}\n", c.p, c.value_at_zero, c.derivative_at_zero));
            data["certificate"] = hensel_json(c);
        }
        Lemma21Outcome::Inapplicable { rho_truncated, stabilized } => {
            text.push_str(&format!("rho (truncated) = ({rho_truncated}), stabilized: {stabilized}\n"));
            data["rho_truncated"] = json!(rho_truncated.to_string());
            data["stabilized"] = json!(stabilized);
        }
        Lemma21Outcome::Unknown { budget } => {
            text.push_str(&format!("window: {budget}\n"));
            data["budget"] = json!(budget);
        }
    }
    text.push_str(&format!("verified: {verified}\n"));
    Ok(Reply::new(text, data))
}

fn prop23(ctx: &Ctx) -> Res<Reply> {
    let ring = ctx.ring.ok_or_else(|| Failure::Usage("prop23 needs --ring".into()))?;
    let Some(i) = prop23_construct(ring) else {
        return Ok(Reply::new(
            format!("Unavailable: no construction over {ring} (ps(R) = 0 and R is not a field)\n"),
            json!({ "kind": "Unavailable", "ring": ring.to_string(), "witness": null, "verified": true }),
        ));
    };
    let prime = i.is_prime()?;
    let budget = ctx.cli.budget.unwrap_or_else(|| default_budget(&i));
    let v = is_maximal(&i, budget)?;
    let (vtext, verdict) = verdict_parts(&i, &v);
    Ok(Reply::new(
        format!("ideal: [{}]\nprime: {prime}\n{vtext}", format_poly(i.generator())),
        json!({
            "kind": "Constructed",
            "ring": ring.to_string(),
            "generator": format_coeffs(i.generator()),
            "prime": prime,
            "verdict": verdict,
            "verified": verify_certificate(&i, &v),
        }),
    ))
}

fn run_verify(cli: &Cli) -> Res<Reply> {
    let selection: Vec<&'static str> = if cli.suite == "all" {
        verify::SUITES.to_vec()
    } else {
        match verify::SUITES.iter().find(|&&s| s == cli.suite) {
            Some(&s) => vec![s],
            None => {
                return Err(Failure::Usage(format!(
                    "unknown suite `{}`; expected one of {} or all",
                    cli.suite,
                    verify::SUITES.join(", ")
                )))
            }
        }
    };
    let settings = verify::Settings {
        cases: cli.cases,
        seed: cli.seed,
        degree: cli.degree_bound.unwrap_or(6),
        height: cli.height,
        degree_cap: DEFAULT_DEGREE_CAP,
    };
    let reports = verify::run_suites(&selection, settings);
    let mut text = String::new();
    let mut timing = String::new();
    let mut suites = Vec::new();
    for r in &reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let secs = r.wall.as_secs_f64();
        text.push_str(&format!(
            "{verdict} {:<15} cases {:>4}  checks {:>7}  failed {:>4}  {secs:.2} s\n",
            r.name, r.cases, r.checks, r.failed_checks
        ));
        timing.push_str(&format!("{}: {secs:.3} s\n", r.name));
        for f in &r.failures {
            text.push_str(&format!("    {}: {} ({})\n", f.check, f.counterexample, f.detail));
        }
        suites.push(json!({
            "suite": r.name,
            "cases": r.cases,
            "checks": r.checks,
            "failed_checks": r.failed_checks,
            "passed": r.passed(),
            "failures": r.failures.iter().map(|f| json!({
                "check": f.check,
                "counterexample": f.counterexample,
                "detail": f.detail,
            })).collect::<Vec<_>>(),
        }));
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let all = passed == reports.len();
    text.push_str(&format!("{passed}/{} suites passed (seed {}, {} cases)\n", reports.len(), cli.seed, cli.cases));
    let mut reply = Reply::new(
        text,
        json!({ "seed": cli.seed, "cases": cli.cases, "passed": all, "suites": suites }),
    );
    reply.code = if all { 0 } else { 1 };
    if cli.json {
        // wall times vary run to run, so they stay off stdout
        reply.note = timing;
    }
    Ok(reply)
}

use std::collections::BTreeMap;
use std::io::{self, Write};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rees_quot_core::finoracle::{crosscheck, full_sweep, search_localization_question, Comparison, QuestionReport, DEFAULT_CAP};
use rees_quot_core::polyalg::{Field, MonomialOrder, Poly, PolyRing};
use rees_quot_core::reesfam::{make_rab, RabRing, RootData};
use rees_quot_core::ringcore::{flags, Assumptions, IdealHandle, RingElement, RingHandle};
use rees_quot_core::spectool::{
    fiber_over_prime, is_domain_rab, is_reduced_rab, localization_class, minimal_primes_rab, recognize_special,
    FiberResult, LocalizationCase, SearchBounds, SpecialMap,
};
use rees_quot_core::truth::{Truth, TriState};
use rees_quot_core::AlgebraError;
use serde_json::{json, Value};

use crate::ast::*;

#[derive(Clone, Debug)]
pub enum Binding {
    Ring(RingHandle),
    Ideal(IdealHandle),
    Rab(RabRing),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub cap: usize,
    pub seed: u64,
    /// Suppress the human-readable rendering.
    pub json_only: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { cap: DEFAULT_CAP, seed: 0, json_only: false }
    }
}

#[derive(Debug)]
pub enum CliError {
    Name(String),
    Type(String),
    Algebra(AlgebraError),
}

impl CliError {
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Name(_) => "NameError",
            CliError::Type(_) => "TypeError",
            CliError::Algebra(e) => e.tag(),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Name(m) | CliError::Type(m) => m.clone(),
            CliError::Algebra(e) => e.to_string(),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Unknown,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Unknown => "unknown",
            Status::Error => "error",
        }
    }
}

/// Outcome of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Reply {
    pub status: Status,
    pub result: Value,
    pub witness: Option<String>,
    pub text: String,
}

impl Reply {
    fn ok(result: Value, text: impl Into<String>) -> Self {
        Reply { status: Status::Ok, result, witness: None, text: text.into() }
    }

    fn error(e: &CliError) -> Self {
        Reply {
            status: Status::Error,
            result: json!({ "error": e.tag(), "message": e.message() }),
            witness: None,
            text: format!("error [{}]: {}", e.tag(), e.message()),
        }
    }

    /// The JSON line for `cmd`.
    pub fn to_json(&self, cmd: &Command) -> Value {
        json!({
            "cmd": cmd.to_string(),
            "status": self.status.as_str(),
            "result": self.result,
            "witness": self.witness,
        })
    }
}

type Res<T> = Result<T, CliError>;

#[derive(Debug, Default)]
pub struct Session {
    symbols: BTreeMap<String, Binding>,
    pub config: Config,
}

impl Session {
    pub fn new(config: Config) -> Self {
        Session { symbols: BTreeMap::new(), config }
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.symbols.get(name)
    }

    /// Runs commands in order, writing one JSON line each to `out` and the text rendering
    /// to `text` unless `json_only`. Returns 0, or 1 if any command failed.
    pub fn run(&mut self, commands: &[Command], out: &mut dyn Write, text: &mut dyn Write) -> io::Result<i32> {
        let mut code = 0;
        for cmd in commands {
            let reply = self.execute(cmd);
            if reply.status == Status::Error {
                code = 1;
            }
            writeln!(out, "{}", reply.to_json(cmd))?;
            if !self.config.json_only {
                writeln!(text, "{cmd}\n  {}", reply.text.replace('\n', "\n  "))?;
            }
        }
        Ok(code)
    }

    pub fn execute(&mut self, cmd: &Command) -> Reply {
        match self.dispatch(cmd) {
            Ok(r) => r,
            Err(e) => Reply::error(&e),
        }
    }

    fn dispatch(&mut self, cmd: &Command) -> Res<Reply> {
        match cmd {
            Command::DefineRing { name, spec } => {
                self.fresh(name)?;
                let ring = build_ring(spec)?;
                let reply = Reply::ok(json!({ "defined": name, "ring": ring.to_string() }), format!("{name} = {ring}"));
                self.symbols.insert(name.clone(), Binding::Ring(ring));
                Ok(reply)
            }
            Command::DefineIdeal { name, ring, gens } => {
                self.fresh(name)?;
                let r = self.ring(ring)?;
                let gens = gens.iter().map(|g| eval(&r, g)).collect::<Res<Vec<_>>>()?;
                let ideal = IdealHandle::new(&r, &gens)?;
                let reply = Reply::ok(json!({ "defined": name, "ideal": ideal.to_string() }), format!("{name} = {ideal}"));
                self.symbols.insert(name.clone(), Binding::Ideal(ideal));
                Ok(reply)
            }
            Command::DefineRab { name, ring, ideal, a, b } => {
                self.fresh(name)?;
                let r = self.ring(ring)?;
                let i = self.ideal(ideal)?;
                let rr = make_rab(&r, &i, &eval(&r, a)?, &eval(&r, b)?)?;
                let reply = Reply::ok(json!({ "defined": name, "rab": rr.to_string() }), format!("{name} = {rr}"));
                self.symbols.insert(name.clone(), Binding::Rab(rr));
                Ok(reply)
            }
            Command::AttachRoots { target, alpha, beta } => {
                let rr = self.rab(target)?;
                let base = rr.base().clone();
                let rd = RootData::global(eval(&base, alpha)?, eval(&base, beta)?);
                let rr = rr.verify_factorization(&rd)?;
                let text = format!("t^2 + ({})t + ({}) = (t - ({}))(t - ({}))", rr.a(), rr.b(), rd.alpha, rd.beta);
                self.symbols.insert(target.clone(), Binding::Rab(rr));
                Ok(Reply::ok(json!({ "roots": [rd.alpha.to_string(), rd.beta.to_string()] }), text))
            }
            Command::Query { kind, target, prime, roots } => self.query(*kind, target, prime.as_deref(), roots.as_ref()),
            Command::OracleCheck { target } => {
                let rr = self.rab(target)?;
                let report = crosscheck(&rr, self.config.cap)?;
                let checks: Vec<Value> = report
                    .checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "performed": c.performed, "detail": c.detail }))
                    .collect();
                let text = format!(
                    "{} elements, {} primes over {} base primes: {}",
                    report.size,
                    report.primes,
                    report.base_primes,
                    report.checks.iter().map(|c| format!("{} {}", c.name, c.detail)).collect::<Vec<_>>().join("; ")
                );
                Ok(Reply::ok(
                    json!({ "agree": true, "size": report.size, "primes": report.primes, "base_primes": report.base_primes, "checks": checks }),
                    text,
                ))
            }
            Command::Search { n_min, n_max, pairs } => self.search(*n_min, *n_max, *pairs),
            Command::SetConfig { key, value } => {
                match key {
                    ConfigKey::Cap => self.config.cap = *value as usize,
                    ConfigKey::Seed => self.config.seed = *value,
                }
                Ok(Reply::ok(json!({ "cap": self.config.cap, "seed": self.config.seed }), "config updated"))
            }
        }
    }

    fn fresh(&self, name: &str) -> Res<()> {
        if self.symbols.contains_key(name) {
            return Err(CliError::Name(format!("{name} is already bound")));
        }
        Ok(())
    }

    fn lookup(&self, name: &str) -> Res<&Binding> {
        self.symbols.get(name).ok_or_else(|| CliError::Name(format!("{name} is not defined")))
    }

    fn ring(&self, name: &str) -> Res<RingHandle> {
        match self.lookup(name)? {
            Binding::Ring(r) => Ok(r.clone()),
            _ => Err(CliError::Type(format!("{name} is not a ring"))),
        }
    }

    fn ideal(&self, name: &str) -> Res<IdealHandle> {
        match self.lookup(name)? {
            Binding::Ideal(i) => Ok(i.clone()),
            _ => Err(CliError::Type(format!("{name} is not an ideal"))),
        }
    }

    fn rab(&self, name: &str) -> Res<RabRing> {
        match self.lookup(name)? {
            Binding::Rab(r) => Ok(r.clone()),
            _ => Err(CliError::Type(format!("{name} is not a rab ring"))),
        }
    }

    fn query(&self, kind: QueryKind, target: &str, prime: Option<&[Expr]>, roots: Option<&RootArgs>) -> Res<Reply> {
        // ring-level flags
        if let (QueryKind::IsReduced | QueryKind::IsDomain, Binding::Ring(r)) = (kind, self.lookup(target)?) {
            let f = flags(r);
            return Ok(tristate_reply(if kind == QueryKind::IsReduced { &f.reduced } else { &f.domain }));
        }
        let rr = self.rab(target)?;
        let base = rr.base().clone();
        let prime_ideal = match prime {
            Some(gens) => {
                let gens = gens.iter().map(|g| eval(&base, g)).collect::<Res<Vec<_>>>()?;
                Some(IdealHandle::new(&base, &gens)?)
            }
            None => None,
        };
        let root_data = match (roots, &prime_ideal) {
            (Some(args), Some(p)) => {
                let gamma = match &args.gamma {
                    Some(g) => eval(&base, g)?,
                    None => base.one(),
                };
                Some(RootData::relative(&rr, eval(&base, &args.alpha)?, eval(&base, &args.beta)?, gamma, p.clone()))
            }
            (Some(_), None) => return Err(CliError::Type("roots in a query need 'over prime=[...]'".into())),
            _ => None,
        };
        let need_prime = || prime_ideal.clone().ok_or_else(|| CliError::Type(format!("{} needs 'over prime=[...]'", kind.keyword())));
        match kind {
            QueryKind::IsReduced => Ok(tristate_reply(&is_reduced_rab(&rr)?)),
            QueryKind::IsDomain => Ok(tristate_reply(&is_domain_rab(&rr)?)),
            QueryKind::Fiber => {
                let p = need_prime()?;
                let fiber = fiber_over_prime(&rr, &p, root_data.as_ref())?;
                let primes: Vec<String> = fiber.primes().iter().map(|d| d.to_string()).collect();
                let (kind, merged) = match &fiber {
                    FiberResult::Irreducible(_) => ("irreducible", false),
                    FiberResult::Reducible { merged, .. } => ("reducible", *merged),
                };
                let roots = match &fiber {
                    FiberResult::Reducible { p1, .. } => p1.roots.as_ref().map(roots_json),
                    _ => None,
                };
                let witness = fiber.separating_element(&rr).map(|x| x.to_string());
                let text = format!("{kind}{}: {}", if merged { ", merged" } else { "" }, primes.join("; "));
                Ok(Reply {
                    status: Status::Ok,
                    result: json!({ "fiber": kind, "merged": merged, "primes": primes, "roots": roots }),
                    witness,
                    text,
                })
            }
            QueryKind::MinimalPrimes => match minimal_primes_rab(&rr, None)? {
                Some(ps) => {
                    let primes: Vec<String> = ps.iter().map(|d| d.to_string()).collect();
                    let text = primes.join("\n");
                    Ok(Reply::ok(json!({ "count": primes.len(), "primes": primes }), text))
                }
                None => Ok(Reply {
                    status: Status::Unknown,
                    result: json!({ "reason": "the minimal primes of R are not computed" }),
                    witness: None,
                    text: "unknown: the minimal primes of R are not computed".into(),
                }),
            },
            QueryKind::Localization => {
                let p = need_prime()?;
                let report = localization_class(&rr, &p, root_data.as_ref(), SearchBounds::default())?;
                let (case, status, lambda, roots) = match &report.case {
                    LocalizationCase::Case1 => ("Case1_IrreducibleIsoRabLocal", Status::Ok, None, None),
                    LocalizationCase::Case2a => ("Case2a_MergedIsoRabLocal", Status::Ok, None, None),
                    LocalizationCase::Case2b { lambda, roots, .. } => {
                        ("Case2b_IsoBaseLocal", Status::Ok, Some(lambda.to_string()), Some(roots_json(roots)))
                    }
                    LocalizationCase::OpenQuestion { lambda } => {
                        ("CaseOpenQuestion", Status::Unknown, Some(lambda.to_string()), None)
                    }
                };
                let p_corr_ok = matches!(report.case, LocalizationCase::Case2b { p_corr_ok: true, .. });
                Ok(Reply {
                    status,
                    result: json!({ "case": case, "lambda": lambda, "p_corr_ok": p_corr_ok, "roots": roots, "notes": report.notes }),
                    witness: lambda.clone(),
                    text: format!("{case}: {}", report.notes),
                })
            }
            QueryKind::Recognize => {
                let report = recognize_special(&rr)?;
                let map_json = |m: &Option<SpecialMap>| m.as_ref().map(|m| map_text(m));
                let status = if report.idealization.is_unknown() || report.duplication.is_unknown() {
                    Status::Unknown
                } else {
                    Status::Ok
                };
                let witness = [&report.idealization, &report.duplication]
                    .iter()
                    .filter_map(|t| t.witness.as_ref().map(|w| w.to_string()))
                    .collect::<Vec<_>>()
                    .join("; ");
                let text = format!(
                    "idealization: {}; duplication: {}{}{}",
                    report.idealization.value,
                    report.duplication.value,
                    map_json(&report.idealization_map).map(|m| format!("\nidealization map {m}")).unwrap_or_default(),
                    map_json(&report.duplication_map).map(|m| format!("\nduplication map {m}")).unwrap_or_default(),
                );
                Ok(Reply {
                    status,
                    result: json!({
                        "idealization": tristate_json(&report.idealization),
                        "duplication": tristate_json(&report.duplication),
                        "idealization_map": map_json(&report.idealization_map),
                        "duplication_map": map_json(&report.duplication_map),
                        "notes": report.notes,
                    }),
                    witness: (!witness.is_empty()).then_some(witness),
                    text,
                })
            }
        }
    }

    fn search(&self, n_min: u64, n_max: u64, pairs: PairSpec) -> Res<Reply> {
        let largest = (n_min..=n_max)
            .filter_map(|n| (2..n).find(|d| n % d == 0).map(|d| n * (n / d)))
            .max()
            .unwrap_or(0);
        if largest as usize > self.config.cap {
            return Err(AlgebraError::TooLarge { size: largest as u128, cap: self.config.cap }.into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        let mut pick = |n: u64, d: u64| -> Vec<(u64, u64)> {
            match pairs {
                PairSpec::All => full_sweep(n, d),
                PairSpec::Sample(k) => {
                    let total = (n * n) as usize;
                    let mut idx = sample(&mut rng, total, (k as usize).min(total)).into_vec();
                    idx.sort_unstable();
                    idx.into_iter().map(|j| (j as u64 / n, j as u64 % n)).collect()
                }
            }
        };
        let report = search_localization_question(n_min..=n_max, &mut pick)?;
        Ok(Reply {
            status: Status::Ok,
            witness: report.counterexamples.first().map(|(i, why)| format!("{i:?}: {why}")),
            text: report.summary(),
            result: report_json(&report),
        })
    }
}

fn build_ring(spec: &RingSpec) -> Res<RingHandle> {
    match spec {
        RingSpec::ZMod(n) => Ok(RingHandle::zmod(*n)?),
        RingSpec::Quotient { field, vars, relations, order, assume } => {
            let field = match field {
                FieldSpec::Prime(p) => Field::prime(*p)?,
                FieldSpec::Rationals => Field::Rationals,
            };
            let order = match order {
                Some(OrderSpec::Lex) => MonomialOrder::Lex,
                _ => MonomialOrder::DegRevLex,
            };
            for (k, v) in vars.iter().enumerate() {
                if vars[..k].contains(v) {
                    return Err(CliError::Name(format!("variable {v} repeated")));
                }
            }
            let poly = PolyRing::new(field, vars.clone(), order);
            let rels = relations.iter().map(|e| eval_poly(&poly, e)).collect::<Res<Vec<_>>>()?;
            let ring = RingHandle::quotient(poly, &rels)?;
            if assume.is_empty() {
                return Ok(ring);
            }
            let assumptions = Assumptions {
                reduced: assume.contains(&Flag::Reduced).then_some(true),
                domain: assume.contains(&Flag::Domain).then_some(true),
            };
            Ok(ring.with_assumptions(assumptions)?)
        }
    }
}

fn int_value(v: u64) -> Res<i64> {
    i64::try_from(v).map_err(|_| CliError::Type(format!("integer {v} too large")))
}

fn eval_poly(poly: &PolyRing, e: &Expr) -> Res<Poly> {
    Ok(match e {
        Expr::Int(v) => poly.from_int(int_value(*v)?),
        Expr::Var(name) => {
            poly.var(poly.var_index(name).ok_or_else(|| CliError::Name(format!("unknown variable {name}")))?)
        }
        Expr::Neg(x) => poly.neg(&eval_poly(poly, x)?),
        Expr::Add(l, r) => poly.add(&eval_poly(poly, l)?, &eval_poly(poly, r)?),
        Expr::Sub(l, r) => poly.sub(&eval_poly(poly, l)?, &eval_poly(poly, r)?),
        Expr::Mul(l, r) => poly.mul(&eval_poly(poly, l)?, &eval_poly(poly, r)?),
        Expr::Pow(b, k) => poly.pow(&eval_poly(poly, b)?, *k as u64),
    })
}

/// Evaluates `e` in `ring`.
pub fn eval(ring: &RingHandle, e: &Expr) -> Res<RingElement> {
    if let Some(poly) = ring.poly_ring() {
        return Ok(ring.from_poly(&eval_poly(poly, e)?)?);
    }
    Ok(match e {
        Expr::Int(v) => ring.from_int((*v % ring.modulus().unwrap()) as i64),
        Expr::Var(name) => return Err(CliError::Name(format!("unknown variable {name} in {ring}"))),
        Expr::Neg(x) => -&eval(ring, x)?,
        Expr::Add(l, r) => &eval(ring, l)? + &eval(ring, r)?,
        Expr::Sub(l, r) => &eval(ring, l)? - &eval(ring, r)?,
        Expr::Mul(l, r) => &eval(ring, l)? * &eval(ring, r)?,
        Expr::Pow(b, k) => eval(ring, b)?.pow(*k as u64),
    })
}

fn tristate_json(t: &TriState) -> Value {
    json!({ "value": t.value.to_string(), "provenance": t.provenance.to_string(), "reason": t.reason })
}

fn tristate_reply(t: &TriState) -> Reply {
    let status = if t.value == Truth::Unknown { Status::Unknown } else { Status::Ok };
    let witness = t.witness.as_ref().map(|w| w.to_string());
    let mut text = t.value.to_string();
    if !t.reason.is_empty() {
        text.push_str(&format!(" ({})", t.reason));
    }
    if let Some(w) = &witness {
        text.push_str(&format!("; witness {w}"));
    }
    Reply { status, result: tristate_json(t), witness, text }
}

fn roots_json(rd: &RootData) -> Value {
    json!({
        "alpha": rd.alpha.to_string(),
        "beta": rd.beta.to_string(),
        "gamma": rd.gamma.to_string(),
        "p": rd.p_corr.to_string(),
    })
}

fn map_text(m: &SpecialMap) -> String {
    format!("(r, i) -> (r + ({})i, ({})i) into {}", m.shift, m.scale, m.target)
}

fn report_json(r: &QuestionReport) -> Value {
    let comparison = |c: &Comparison| match c {
        Comparison::Isomorphic => "isomorphic".to_string(),
        Comparison::InvariantsOnly => "invariants-only".to_string(),
        Comparison::Mismatch(why) => format!("mismatch: {why}"),
    };
    let candidates: Vec<Value> = r
        .candidates
        .iter()
        .map(|c| {
            let i = c.instance;
            json!({ "n": i.n, "d": i.d, "a": i.a, "b": i.b, "p": i.p,
                    "comparisons": c.comparisons.iter().map(comparison).collect::<Vec<_>>() })
        })
        .collect();
    let counterexamples: Vec<Value> = r
        .counterexamples
        .iter()
        .map(|(i, why)| json!({ "n": i.n, "d": i.d, "a": i.a, "b": i.b, "p": i.p, "case": i.case.label(), "detail": why }))
        .collect();
    json!({
        "instances": r.instances,
        "cases": { "Case1": r.case_counts[0], "Case2a": r.case_counts[1], "Case2b": r.case_counts[2], "OpenQuestion": r.case_counts[3] },
        "candidates": candidates,
        "isomorphic": r.isomorphic,
        "invariants_only": r.invariants_only,
        "counterexamples": counterexamples,
        "verdict": if r.counterexamples.is_empty() { "no counterexample" } else { "counterexample found" },
    })
}

use std::fmt::Write as _;

use freeab::adelman::{cokernel, hom_group, image_factorization, is_zero_object, kernel};
use freeab::definable::{
    dual_chain, dual_fp, dual_pair, family_member, from_pair, omega_member, pair_member, to_pair,
};
use freeab::fpfunctor::{evaluate_chain, evaluate_fp, functor_k, functor_k_inv};
use freeab::json::{
    chain_to_json, components_to_json, invariant_factors_to_json, matrix_to_json, pair_to_json,
    scalar_to_json, square_to_json,
};
use freeab::selftest::run_all;
use freeab::{
    snf, standard_battery, BigChainMorphism, BigChainObject, BigDefinableFamily, BigDefinablePair,
    BigFpModule, BigFpSquare, BigMatrix, BigWorkspace, PairConvention,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

/// A command result in both output formats.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
        }
    }
}

pub enum Item<'a> {
    Matrix(&'a BigMatrix),
    Chain(&'a BigChainObject),
    Morphism(&'a BigChainMorphism),
    Square(&'a BigFpSquare),
    Module(&'a BigFpModule),
    Pair(&'a BigDefinablePair),
    Family(&'a BigDefinableFamily),
}

impl Item<'_> {
    fn kind(&self) -> &'static str {
        match self {
            Item::Matrix(_) => "matrix",
            Item::Chain(_) => "chain",
            Item::Morphism(_) => "morphism",
            Item::Square(_) => "square",
            Item::Module(_) => "module",
            Item::Pair(_) => "pair",
            Item::Family(_) => "family",
        }
    }
}

const KINDS: [&str; 7] = ["matrix", "chain", "morphism", "square", "module", "pair", "family"];

/// Resolves `kind:name`, or a bare `name` (names are unique across kinds).
pub fn resolve<'a>(ws: &'a BigWorkspace, reference: &str) -> CliResult<Item<'a>> {
    let (kind, name) = match reference.split_once(':') {
        Some((k, n)) if KINDS.contains(&k) => (Some(k), n),
        _ => (None, reference),
    };
    let candidates = [
        ws.matrices.get(name).map(Item::Matrix),
        ws.chains.get(name).map(Item::Chain),
        ws.morphisms.get(name).map(|m| Item::Morphism(&m.morphism)),
        ws.squares.get(name).map(Item::Square),
        ws.modules.get(name).map(Item::Module),
        ws.pairs.get(name).map(Item::Pair),
        ws.families.get(name).map(Item::Family),
    ];
    let found = candidates
        .into_iter()
        .flatten()
        .find(|item| kind.is_none_or(|k| item.kind() == k));
    match found {
        Some(item) => Ok(item),
        None => Err(CliError::Core(freeab::Error::Parse {
            path: reference.to_string(),
            message: match kind {
                Some(k) => format!("no {k} named \"{name}\" in the workspace"),
                None => format!("nothing named \"{name}\" in the workspace"),
            },
        })),
    }
}

fn wrong_kind(command: &str, expected: &str, item: &Item<'_>) -> CliError {
    CliError::Usage(format!(
        "{command} expects {expected}, got a {}",
        item.kind()
    ))
}

fn chain<'a>(ws: &'a BigWorkspace, command: &str, reference: &str) -> CliResult<&'a BigChainObject> {
    match resolve(ws, reference)? {
        Item::Chain(x) => Ok(x),
        other => Err(wrong_kind(command, "a chain", &other)),
    }
}

/// Modules named on the command line: a single module, or a battery list.
/// `B` in a battery list stands for the built-in battery of the workspace ring.
pub fn modules(
    ws: &BigWorkspace,
    module: Option<&str>,
    battery: Option<&str>,
) -> CliResult<(bool, Vec<(String, BigFpModule)>)> {
    let lookup = |r: &str| match resolve(ws, r)? {
        Item::Module(m) => Ok(m.clone()),
        other => Err(wrong_kind("a module argument", "a module", &other)),
    };
    match (module, battery) {
        (Some(m), None) => Ok((false, vec![(m.to_string(), lookup(m)?)])),
        (None, Some(list)) => {
            let mut out = Vec::new();
            for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                if name == "B" {
                    out.extend(standard_battery(&ws.ring).members().iter().cloned());
                } else {
                    out.push((name.to_string(), lookup(name)?));
                }
            }
            Ok((true, out))
        }
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give either a module or --battery, not both".into(),
        )),
        (None, None) => Err(CliError::Usage("a module or --battery is required".into())),
    }
}

fn per_module<R>(
    targets: &[(String, BigFpModule)],
    battery: bool,
    compute: impl Fn(&BigFpModule) -> freeab::Result<R>,
    text_of: impl Fn(&R) -> String,
    json_of: impl Fn(&R) -> Value,
    key: &str,
) -> CliResult<Output> {
    let results = targets
        .iter()
        .map(|(_, m)| compute(m))
        .collect::<freeab::Result<Vec<R>>>()?;
    if !battery {
        let r = &results[0];
        return Ok(Output::new(text_of(r), json_of(r)));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for ((name, _), r) in targets.iter().zip(&results) {
        writeln!(text, "{name}: {}", text_of(r)).expect("string write");
        let mut row = json!({ "module": name });
        match json_of(r) {
            Value::Object(o) => row.as_object_mut().expect("object").extend(o),
            v => {
                row.as_object_mut().expect("object").insert(key.into(), v);
            }
        }
        rows.push(row);
    }
    Ok(Output::new(text.trim_end(), json!({ "results": rows })))
}

pub fn eval(ws: &BigWorkspace, target: &str, targets: &[(String, BigFpModule)], battery: bool) -> CliResult<Output> {
    let item = resolve(ws, target)?;
    let compute = |m: &BigFpModule| match &item {
        Item::Chain(x) => evaluate_chain(x, m),
        Item::Square(s) => evaluate_fp(s, m),
        _ => unreachable!("checked below"),
    };
    if !matches!(item, Item::Chain(_) | Item::Square(_)) {
        return Err(wrong_kind("eval", "a chain or a square", &item));
    }
    per_module(
        targets,
        battery,
        compute,
        |r| r.to_string(),
        invariant_factors_to_json,
        "invariant_factors",
    )
}

pub fn member(ws: &BigWorkspace, target: &str, targets: &[(String, BigFpModule)], battery: bool) -> CliResult<Output> {
    let item = resolve(ws, target)?;
    if !matches!(item, Item::Chain(_) | Item::Family(_) | Item::Pair(_)) {
        return Err(wrong_kind("member", "a chain, family or pair", &item));
    }
    let compute = |m: &BigFpModule| match &item {
        Item::Chain(x) => omega_member(x, m),
        Item::Family(d) => family_member(d, m),
        Item::Pair(p) => pair_member(p, m),
        _ => unreachable!("checked above"),
    };
    per_module(
        targets,
        battery,
        compute,
        |b| b.to_string(),
        |b| json!({ "member": b }),
        "member",
    )
}

fn morphism_text(object: &BigChainObject, parts: &[(&str, &BigChainMorphism)]) -> String {
    let mut text = format!("object: {object}");
    for (label, u) in parts {
        let [a1, a2, a3] = u.components();
        write!(text, "\n{label}: a1 = {a1}, a2 = {a2}, a3 = {a3}").expect("string write");
    }
    text
}

pub fn structure(ws: &BigWorkspace, which: &str, target: &str) -> CliResult<Output> {
    let u = match resolve(ws, target)? {
        Item::Morphism(u) => u,
        other => return Err(wrong_kind(which, "a morphism", &other)),
    };
    Ok(match which {
        "kernel" => {
            let k = kernel(u);
            Output::new(
                morphism_text(k.src(), &[("morphism", &k)]),
                json!({ "object": chain_to_json(k.src()), "morphism": components_to_json(&k) }),
            )
        }
        "cokernel" => {
            let c = cokernel(u);
            Output::new(
                morphism_text(c.dst(), &[("morphism", &c)]),
                json!({ "object": chain_to_json(c.dst()), "morphism": components_to_json(&c) }),
            )
        }
        _ => {
            let f = image_factorization(u)?;
            Output::new(
                morphism_text(&f.image, &[("epi", &f.epi), ("mono", &f.mono)]),
                json!({
                    "object": chain_to_json(&f.image),
                    "epi": components_to_json(&f.epi),
                    "mono": components_to_json(&f.mono),
                }),
            )
        }
    })
}

pub fn homgroup(ws: &BigWorkspace, a: &str, b: &str) -> CliResult<Output> {
    let h = hom_group(chain(ws, "homgroup", a)?, chain(ws, "homgroup", b)?)?;
    Ok(Output::new(h.to_string(), invariant_factors_to_json(&h)))
}

pub fn iszero(ws: &BigWorkspace, target: &str) -> CliResult<Output> {
    let z = is_zero_object(chain(ws, "iszero", target)?);
    Ok(Output::new(z.to_string(), json!({ "zero": z })))
}

fn chain_output(x: &BigChainObject) -> Output {
    Output::new(
        format!("m1 = {}\nm2 = {}", x.m1(), x.m2()),
        chain_to_json(x),
    )
}

fn pair_output(p: &BigDefinablePair) -> Output {
    Output::new(
        format!("convention: {}\nU = {}\nV = {}", p.convention(), p.u(), p.v()),
        pair_to_json(p),
    )
}

fn square_output(s: &BigFpSquare) -> Output {
    Output::new(
        format!("f = {}\na = {}\nb = {}\ng = {}", s.f(), s.a(), s.b(), s.g()),
        square_to_json(s),
    )
}

pub fn dual(ws: &BigWorkspace, target: &str) -> CliResult<Output> {
    match resolve(ws, target)? {
        Item::Chain(x) => Ok(chain_output(&dual_chain(x))),
        Item::Pair(p) => Ok(pair_output(&dual_pair(p)?)),
        Item::Square(s) => Ok(square_output(&dual_fp(s))),
        other => Err(wrong_kind("dual", "a chain, pair or square", &other)),
    }
}

pub fn convert(
    ws: &BigWorkspace,
    target: &str,
    to: &str,
    convention: Option<PairConvention>,
) -> CliResult<Output> {
    let source = match resolve(ws, target)? {
        Item::Chain(x) => x.clone(),
        Item::Square(s) => functor_k(s),
        Item::Pair(p) => {
            if to != "pair" {
                if let Some(c) = convention.filter(|&c| c != p.convention()) {
                    return Err(freeab::Error::Convention {
                        expected: p.convention().name().into(),
                        found: c.name().into(),
                    }
                    .into());
                }
            }
            from_pair(p)
        }
        other => return Err(wrong_kind("convert", "a chain, pair or square", &other)),
    };
    match to {
        "chain" => Ok(chain_output(&source)),
        "square" => Ok(square_output(&functor_k_inv(&source))),
        "pair" => {
            let c = convention.ok_or_else(|| {
                CliError::Usage("--convention paper|column is required for --to pair".into())
            })?;
            Ok(pair_output(&to_pair(&source, c)))
        }
        _ => Err(CliError::Usage(format!("unknown target kind \"{to}\""))),
    }
}

pub fn snf_command(ws: &BigWorkspace, target: &str) -> CliResult<Output> {
    let m = match resolve(ws, target)? {
        Item::Matrix(m) => m,
        other => return Err(wrong_kind("snf", "a matrix", &other)),
    };
    let res = snf(m);
    let diag: Vec<Value> = res.diagonal().iter().map(scalar_to_json).collect();
    let text = format!(
        "diagonal: {}\nrank: {}\nS = {}\nP = {}\nQ = {}",
        res.diagonal()
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        res.rank,
        res.s,
        res.p,
        res.q
    );
    Ok(Output::new(
        text,
        json!({
            "diagonal": diag,
            "rank": res.rank,
            "S": matrix_to_json(&res.s),
            "P": matrix_to_json(&res.p),
            "Q": matrix_to_json(&res.q),
        }),
    ))
}

/// Runs every property suite; the second value is false if any case failed.
pub fn selftest(seed: u64, count: usize) -> (Output, bool) {
    let reports = run_all::<BigInt>(seed, count);
    let mut text = String::new();
    let mut suites = Vec::new();
    for r in &reports {
        if r.passed() {
            writeln!(text, "PASS {} ({} checks)", r.name, r.cases).expect("string write");
        } else {
            writeln!(
                text,
                "FAIL {} ({} of {} checks): {}",
                r.name,
                r.failures.len(),
                r.cases,
                r.failures[0]
            )
            .expect("string write");
        }
        suites.push(json!({ "name": r.name, "cases": r.cases, "failures": r.failures }));
    }
    let ok = reports.iter().all(|r| r.passed());
    (
        Output::new(text.trim_end(), json!({ "passed": ok, "suites": suites })),
        ok,
    )
}

//! JSON reading and writing for every data type, and the named workspace.
//!
//! Matrices are arrays of rows. A matrix with no rows cannot carry its column
//! count that way, so it is written `{"rows": 0, "cols": c}`; the object form
//! `{"rows", "cols", "entries"}` (entries row-major) is accepted for any shape.
//! Integers outside the `i64` range are written as decimal strings.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Map, Value};

use crate::adelman::{ChainMorphism, ChainObject};
use crate::definable::{from_pair, DefinableFamily, DefinablePair, PairConvention};
use crate::error::{Error, Result};
use crate::fpfunctor::FpSquare;
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::scalar::Scalar;

fn err<X>(path: &str, message: impl Into<String>) -> Result<X> {
    Err(Error::parse(path, message))
}

fn child(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    match v.as_object() {
        Some(o) => Ok(o),
        None => err(path, "expected an object"),
    }
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    match o.get(key) {
        Some(v) => Ok(v),
        None => err(path, format!("missing field \"{key}\"")),
    }
}

fn only_keys(o: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    for k in o.keys() {
        if !allowed.contains(&k.as_str()) {
            return err(path, format!("unknown field \"{k}\""));
        }
    }
    Ok(())
}

pub fn scalar_from_json<T: Scalar>(v: &Value, path: &str) -> Result<T> {
    let parsed = match v {
        Value::Number(n) => n
            .as_i64()
            .and_then(T::from_i64)
            .or_else(|| n.as_u64().and_then(T::from_u64)),
        Value::String(s) => T::from_str_radix(s.trim(), 10).ok(),
        _ => None,
    };
    match parsed {
        Some(t) => Ok(t),
        None => err(path, "expected an integer"),
    }
}

pub fn scalar_to_json<T: Scalar>(t: &T) -> Value {
    match t.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(t.to_string()),
    }
}

fn usize_from_json(v: &Value, path: &str) -> Result<usize> {
    match v.as_u64() {
        Some(n) => Ok(n as usize),
        None => err(path, "expected a non-negative integer"),
    }
}

pub fn ring_from_json<T: Scalar>(v: &Value, path: &str) -> Result<RingSpec<T>> {
    match v {
        Value::String(s) if s == "Z" => Ok(RingSpec::Integers),
        Value::Object(o) if o.len() == 1 && o.contains_key("Zmod") => {
            let p = child(path, "Zmod");
            let n: T = scalar_from_json(&o["Zmod"], &p)?;
            RingSpec::modulo(n).map_err(|e| e.at(p))
        }
        _ => err(path, "expected \"Z\" or {\"Zmod\": n}"),
    }
}

pub fn ring_to_json<T: Scalar>(r: &RingSpec<T>) -> Value {
    match r {
        RingSpec::Integers => Value::from("Z"),
        RingSpec::Modulo(n) => json!({ "Zmod": scalar_to_json(n) }),
    }
}

pub fn matrix_from_json<T: Scalar>(v: &Value, ring: &RingSpec<T>, path: &str) -> Result<Matrix<T>> {
    match v {
        Value::Array(rows) => {
            let mut out = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let rp = format!("{path}[{i}]");
                let Some(cells) = row.as_array() else {
                    return err(&rp, "expected an array of integers");
                };
                let mut r = Vec::with_capacity(cells.len());
                for (j, c) in cells.iter().enumerate() {
                    r.push(scalar_from_json(c, &format!("{rp}[{j}]"))?);
                }
                out.push(r);
            }
            if rows.is_empty() {
                return err(path, "a matrix with no rows must be written {\"rows\": 0, \"cols\": c}");
            }
            Matrix::from_rows(ring.clone(), out).map_err(|e| e.at(path))
        }
        Value::Object(o) => {
            only_keys(o, &["rows", "cols", "entries"], path)?;
            let rows = usize_from_json(field(o, "rows", path)?, &child(path, "rows"))?;
            let cols = usize_from_json(field(o, "cols", path)?, &child(path, "cols"))?;
            let ep = child(path, "entries");
            let entries = match o.get("entries") {
                None if rows * cols == 0 => Vec::new(),
                None => return err(path, "missing field \"entries\""),
                Some(Value::Array(es)) => es
                    .iter()
                    .enumerate()
                    .map(|(k, e)| scalar_from_json(e, &format!("{ep}[{k}]")))
                    .collect::<Result<Vec<T>>>()?,
                Some(_) => return err(&ep, "expected an array of integers"),
            };
            Matrix::new(ring.clone(), rows, cols, entries).map_err(|e| e.at(path))
        }
        _ => err(path, "expected a matrix"),
    }
}

pub fn matrix_to_json<T: Scalar>(m: &Matrix<T>) -> Value {
    if m.rows() == 0 {
        return json!({ "rows": 0, "cols": m.cols() });
    }
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

/// An optional `"ring"` field must agree with the surrounding ring.
fn check_ring<T: Scalar>(o: &Map<String, Value>, ring: &RingSpec<T>, path: &str) -> Result<()> {
    if let Some(v) = o.get("ring") {
        let p = child(path, "ring");
        let r: RingSpec<T> = ring_from_json(v, &p)?;
        if &r != ring {
            return Err(Error::RingMismatch {
                left: r.to_string(),
                right: ring.to_string(),
            }
            .at(p));
        }
    }
    Ok(())
}

pub fn chain_from_json<T: Scalar>(v: &Value, ring: &RingSpec<T>, path: &str) -> Result<ChainObject<T>> {
    let o = object(v, path)?;
    only_keys(o, &["ring", "m1", "m2"], path)?;
    check_ring(o, ring, path)?;
    let m1 = matrix_from_json(field(o, "m1", path)?, ring, &child(path, "m1"))?;
    let m2 = matrix_from_json(field(o, "m2", path)?, ring, &child(path, "m2"))?;
    ChainObject::new(m1, m2).map_err(|e| e.at(path))
}

pub fn chain_to_json<T: Scalar>(x: &ChainObject<T>) -> Value {
    json!({
        "ring": ring_to_json(x.ring()),
        "m1": matrix_to_json(x.m1()),
        "m2": matrix_to_json(x.m2()),
    })
}

/// The three components `{"a1", "a2", "a3"}`.
pub fn components_to_json<T: Scalar>(u: &ChainMorphism<T>) -> Value {
    let [a1, a2, a3] = u.components();
    json!({
        "a1": matrix_to_json(a1),
        "a2": matrix_to_json(a2),
        "a3": matrix_to_json(a3),
    })
}

pub fn square_from_json<T: Scalar>(v: &Value, ring: &RingSpec<T>, path: &str) -> Result<FpSquare<T>> {
    let o = object(v, path)?;
    only_keys(o, &["ring", "f", "a", "b", "g"], path)?;
    check_ring(o, ring, path)?;
    let get = |k: &str| matrix_from_json(field(o, k, path)?, ring, &child(path, k));
    FpSquare::new(get("f")?, get("a")?, get("b")?, get("g")?)
        .map_err(|e| e.at(path))
}

pub fn square_to_json<T: Scalar>(s: &FpSquare<T>) -> Value {
    json!({
        "ring": ring_to_json(s.ring()),
        "f": matrix_to_json(s.f()),
        "a": matrix_to_json(s.a()),
        "b": matrix_to_json(s.b()),
        "g": matrix_to_json(s.g()),
    })
}

/// `{"invariant_factors": [...]}` or `{"relations": matrix}`.
pub fn module_from_json<T: Scalar>(v: &Value, ring: &RingSpec<T>, path: &str) -> Result<FpModule<T>> {
    let o = object(v, path)?;
    only_keys(o, &["ring", "invariant_factors", "relations"], path)?;
    check_ring(o, ring, path)?;
    match (o.get("invariant_factors"), o.get("relations")) {
        (Some(Value::Array(fs)), None) => {
            let fp = child(path, "invariant_factors");
            let factors = fs
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let p = format!("{fp}[{i}]");
                    let d: T = scalar_from_json(f, &p)?;
                    if d.is_negative() {
                        return err(&p, "invariant factors are non-negative");
                    }
                    Ok(d)
                })
                .collect::<Result<Vec<T>>>()?;
            Ok(FpModule::from_invariant_factors(ring.clone(), &factors))
        }
        (Some(_), None) => err(&child(path, "invariant_factors"), "expected an array"),
        (None, Some(r)) => Ok(FpModule::presented(matrix_from_json(
            r,
            ring,
            &child(path, "relations"),
        )?)),
        _ => err(path, "expected exactly one of \"invariant_factors\" or \"relations\""),
    }
}

/// Diagonal presentations are written as invariant factors, others as relations.
pub fn module_to_json<T: Scalar>(m: &FpModule<T>) -> Value {
    let canonical = FpModule::from_invariant_factors(m.ring().clone(), m.invariant_factors());
    if &canonical == m {
        invariant_factors_to_json(m)
    } else {
        json!({ "relations": matrix_to_json(m.relations()) })
    }
}

pub fn invariant_factors_to_json<T: Scalar>(m: &FpModule<T>) -> Value {
    let fs: Vec<Value> = m.invariant_factors().iter().map(scalar_to_json).collect();
    json!({ "invariant_factors": fs })
}

pub fn convention_from_json(v: &Value, path: &str) -> Result<PairConvention> {
    match v.as_str() {
        Some("paper-row") | Some("paper") => Ok(PairConvention::PaperRow),
        Some("column") => Ok(PairConvention::Column),
        _ => err(path, "expected \"paper-row\" or \"column\""),
    }
}

pub fn pair_from_json<T: Scalar>(v: &Value, ring: &RingSpec<T>, path: &str) -> Result<DefinablePair<T>> {
    let o = object(v, path)?;
    only_keys(o, &["ring", "U", "V", "convention"], path)?;
    check_ring(o, ring, path)?;
    let u = matrix_from_json(field(o, "U", path)?, ring, &child(path, "U"))?;
    let v = matrix_from_json(field(o, "V", path)?, ring, &child(path, "V"))?;
    let c = convention_from_json(field(o, "convention", path)?, &child(path, "convention"))?;
    DefinablePair::new(u, v, c).map_err(|e| e.at(path))
}

pub fn pair_to_json<T: Scalar>(p: &DefinablePair<T>) -> Value {
    json!({
        "ring": ring_to_json(p.ring()),
        "U": matrix_to_json(p.u()),
        "V": matrix_to_json(p.v()),
        "convention": p.convention().name(),
    })
}

/// Family members may be inline objects or names of workspace chains/pairs.
fn family_from_json<T: Scalar>(
    v: &Value,
    ring: &RingSpec<T>,
    chains: &BTreeMap<String, ChainObject<T>>,
    pairs: &BTreeMap<String, DefinablePair<T>>,
    path: &str,
) -> Result<DefinableFamily<T>> {
    let o = object(v, path)?;
    only_keys(o, &["ring", "chains", "pairs"], path)?;
    check_ring(o, ring, path)?;
    let mut members = Vec::new();
    for key in ["chains", "pairs"] {
        let Some(list) = o.get(key) else { continue };
        let lp = child(path, key);
        let Some(list) = list.as_array() else {
            return err(&lp, "expected an array");
        };
        for (i, item) in list.iter().enumerate() {
            let ip = format!("{lp}[{i}]");
            let x = match (key, item) {
                ("chains", Value::String(name)) => match chains.get(name) {
                    Some(x) => x.clone(),
                    None => return err(&ip, format!("no chain named \"{name}\"")),
                },
                ("chains", _) => chain_from_json(item, ring, &ip)?,
                (_, Value::String(name)) => match pairs.get(name) {
                    Some(p) => from_pair(p),
                    None => return err(&ip, format!("no pair named \"{name}\"")),
                },
                _ => from_pair(&pair_from_json(item, ring, &ip)?),
            };
            members.push(x);
        }
    }
    DefinableFamily::new(ring.clone(), members).map_err(|e| e.at(path))
}

/// Members are written as inline chains.
pub fn family_to_json<T: Scalar>(d: &DefinableFamily<T>) -> Value {
    json!({
        "ring": ring_to_json(d.ring()),
        "chains": d.members().iter().map(chain_to_json).collect::<Vec<_>>(),
    })
}

/// A morphism together with the workspace names of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMorphism<T> {
    pub src: String,
    pub dst: String,
    pub morphism: ChainMorphism<T>,
}

/// One ring and named collections of objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace<T> {
    pub ring: RingSpec<T>,
    pub matrices: BTreeMap<String, Matrix<T>>,
    pub chains: BTreeMap<String, ChainObject<T>>,
    pub morphisms: BTreeMap<String, NamedMorphism<T>>,
    pub squares: BTreeMap<String, FpSquare<T>>,
    pub modules: BTreeMap<String, FpModule<T>>,
    pub pairs: BTreeMap<String, DefinablePair<T>>,
    pub families: BTreeMap<String, DefinableFamily<T>>,
}

const SECTIONS: [&str; 7] = [
    "matrices", "chains", "morphisms", "squares", "modules", "pairs", "families",
];

fn section<'a>(o: &'a Map<String, Value>, key: &str) -> Result<Option<&'a Map<String, Value>>> {
    match o.get(key) {
        None => Ok(None),
        Some(Value::Object(m)) => Ok(Some(m)),
        Some(_) => err(key, "expected an object of named entries"),
    }
}

fn lookup<'a, X>(map: &'a BTreeMap<String, X>, kind: &str, name: &str) -> Result<&'a X> {
    match map.get(name) {
        Some(x) => Ok(x),
        None => err(&format!("{kind}:{name}"), format!("no {kind} named \"{name}\"")),
    }
}

impl<T: Scalar> Workspace<T> {
    pub fn new(ring: RingSpec<T>) -> Self {
        Workspace {
            ring,
            matrices: BTreeMap::new(),
            chains: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            squares: BTreeMap::new(),
            modules: BTreeMap::new(),
            pairs: BTreeMap::new(),
            families: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let o = object(v, "")?;
        let mut allowed = vec!["ring"];
        allowed.extend(SECTIONS);
        only_keys(o, &allowed, "")?;
        let ring = ring_from_json(field(o, "ring", "")?, "ring")?;
        let mut ws = Workspace::new(ring);
        let ring = ws.ring.clone();

        let mut seen = BTreeSet::new();
        for key in SECTIONS {
            if let Some(entries) = section(o, key)? {
                for name in entries.keys() {
                    if !seen.insert(name.clone()) {
                        return err(&child(key, name), "name is used more than once");
                    }
                }
            }
        }

        if let Some(s) = section(o, "matrices")? {
            for (name, v) in s {
                let m = matrix_from_json(v, &ring, &child("matrices", name))?;
                ws.matrices.insert(name.clone(), m);
            }
        }
        if let Some(s) = section(o, "chains")? {
            for (name, v) in s {
                let x = chain_from_json(v, &ring, &child("chains", name))?;
                ws.chains.insert(name.clone(), x);
            }
        }
        if let Some(s) = section(o, "morphisms")? {
            for (name, v) in s {
                let path = child("morphisms", name);
                let m = ws.morphism_from_json(v, &path)?;
                ws.morphisms.insert(name.clone(), m);
            }
        }
        if let Some(s) = section(o, "squares")? {
            for (name, v) in s {
                let sq = square_from_json(v, &ring, &child("squares", name))?;
                ws.squares.insert(name.clone(), sq);
            }
        }
        if let Some(s) = section(o, "modules")? {
            for (name, v) in s {
                let m = module_from_json(v, &ring, &child("modules", name))?;
                ws.modules.insert(name.clone(), m);
            }
        }
        if let Some(s) = section(o, "pairs")? {
            for (name, v) in s {
                let p = pair_from_json(v, &ring, &child("pairs", name))?;
                ws.pairs.insert(name.clone(), p);
            }
        }
        if let Some(s) = section(o, "families")? {
            for (name, v) in s {
                let path = child("families", name);
                let d = family_from_json(v, &ring, &ws.chains, &ws.pairs, &path)?;
                ws.families.insert(name.clone(), d);
            }
        }
        Ok(ws)
    }

    fn morphism_from_json(&self, v: &Value, path: &str) -> Result<NamedMorphism<T>> {
        let o = object(v, path)?;
        only_keys(o, &["ring", "src", "dst", "a1", "a2", "a3"], path)?;
        check_ring(o, &self.ring, path)?;
        let mut ends = Vec::new();
        for key in ["src", "dst"] {
            let p = child(path, key);
            let Some(name) = field(o, key, path)?.as_str() else {
                return err(&p, "expected the name of a chain");
            };
            match self.chains.get(name) {
                Some(x) => ends.push((name.to_string(), x.clone())),
                None => return err(&p, format!("no chain named \"{name}\"")),
            }
        }
        let get = |k: &str| matrix_from_json(field(o, k, path)?, &self.ring, &child(path, k));
        let components = [get("a1")?, get("a2")?, get("a3")?];
        let (dst, dst_x) = ends.pop().expect("two endpoints");
        let (src, src_x) = ends.pop().expect("two endpoints");
        let morphism = ChainMorphism::new(src_x, dst_x, components)
            .map_err(|e| e.at(path))?;
        Ok(NamedMorphism { src, dst, morphism })
    }

    pub fn to_json(&self) -> Value {
        let mut o = Map::new();
        o.insert("ring".into(), ring_to_json(&self.ring));
        fn put<X>(o: &mut Map<String, Value>, key: &str, map: &BTreeMap<String, X>, f: impl Fn(&X) -> Value) {
            if !map.is_empty() {
                let inner: Map<String, Value> = map.iter().map(|(k, x)| (k.clone(), f(x))).collect();
                o.insert(key.into(), Value::Object(inner));
            }
        }
        put(&mut o, "matrices", &self.matrices, matrix_to_json);
        put(&mut o, "chains", &self.chains, chain_to_json);
        put(&mut o, "morphisms", &self.morphisms, |m| {
            let mut v = components_to_json(&m.morphism);
            let obj = v.as_object_mut().expect("object");
            obj.insert("src".into(), Value::from(m.src.clone()));
            obj.insert("dst".into(), Value::from(m.dst.clone()));
            v
        });
        put(&mut o, "squares", &self.squares, square_to_json);
        put(&mut o, "modules", &self.modules, module_to_json);
        put(&mut o, "pairs", &self.pairs, pair_to_json);
        put(&mut o, "families", &self.families, family_to_json);
        Value::Object(o)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("values serialize")
    }

    pub fn matrix(&self, name: &str) -> Result<&Matrix<T>> {
        lookup(&self.matrices, "matrix", name)
    }

    pub fn chain(&self, name: &str) -> Result<&ChainObject<T>> {
        lookup(&self.chains, "chain", name)
    }

    pub fn morphism(&self, name: &str) -> Result<&NamedMorphism<T>> {
        lookup(&self.morphisms, "morphism", name)
    }

    pub fn square(&self, name: &str) -> Result<&FpSquare<T>> {
        lookup(&self.squares, "square", name)
    }

    pub fn module(&self, name: &str) -> Result<&FpModule<T>> {
        lookup(&self.modules, "module", name)
    }

    pub fn pair(&self, name: &str) -> Result<&DefinablePair<T>> {
        lookup(&self.pairs, "pair", name)
    }

    pub fn family(&self, name: &str) -> Result<&DefinableFamily<T>> {
        lookup(&self.families, "family", name)
    }
}

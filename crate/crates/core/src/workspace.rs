//! JSON workspace documents: named quantaloids, semicategories,
//! semidistributors and semifunctors that refer to each other by name.
//!
//! ```json
//! {
//!   "quantaloids": { "Q": "3" },
//!   "semicategories": {
//!     "A": { "base": "Q", "objects": [{ "name": "a", "type": "*" }], "hom": [["a", "a", 1]] }
//!   },
//!   "semidistributors": { "P": { "dom": "A", "cod": "A", "entries": [["a", "a", 1]] } },
//!   "semifunctors": { "F": { "dom": "A", "cod": "A", "map": { "a": "a" } } }
//! }
//! ```
//!
//! A quantaloid is a built-in name or a table with `objects`, `homs`
//! (`"X>Y": {"size": n, "leq": [[i, j], ...]}`), `compose`
//! (`"X>Y>Z": rows indexed by hom(Y,Z), columns by hom(X,Y)`) and `id`.
//! Missing hom and matrix entries are bottom. Unknown names are parse
//! errors; objects that fail their own validation are reported per object.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lattice::{Elem, SupLattice};
use crate::quantaloid::{Quantaloid, RawQuantaloid};
use crate::semicat::{SemiCategory, SemiDistributor, SemiFunctor, TypedSet};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default)]
    quantaloids: BTreeMap<String, QuantaloidSpec>,
    #[serde(default)]
    semicategories: BTreeMap<String, SemiCategorySpec>,
    #[serde(default)]
    semidistributors: BTreeMap<String, SemiDistributorSpec>,
    #[serde(default)]
    semifunctors: BTreeMap<String, SemiFunctorSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum QuantaloidSpec {
    Builtin(String),
    Table(TableSpec),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableSpec {
    objects: Vec<String>,
    homs: BTreeMap<String, LatticeSpec>,
    compose: BTreeMap<String, Vec<Vec<Elem>>>,
    id: BTreeMap<String, Elem>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeSpec {
    size: usize,
    #[serde(default)]
    leq: Vec<(Elem, Elem)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectSpec {
    name: String,
    #[serde(rename = "type", default)]
    ty: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemiCategorySpec {
    base: String,
    objects: Vec<ObjectSpec>,
    #[serde(default)]
    hom: Vec<(String, String, Elem)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemiDistributorSpec {
    dom: String,
    cod: String,
    #[serde(default)]
    entries: Vec<(String, String, Elem)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemiFunctorSpec {
    dom: String,
    cod: String,
    map: BTreeMap<String, String>,
}

/// Why a named object is unavailable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// The object itself failed validation.
    Invalid(Error),
    /// It refers to an object that failed validation.
    Dependency(String),
}

pub type Entry<T> = std::result::Result<Arc<T>, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Quantaloid,
    SemiCategory,
    SemiDistributor,
    SemiFunctor,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Quantaloid => "quantaloid",
            Kind::SemiCategory => "semicategory",
            Kind::SemiDistributor => "semidistributor",
            Kind::SemiFunctor => "semifunctor",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub quantaloids: BTreeMap<String, Entry<Quantaloid>>,
    pub semicategories: BTreeMap<String, Entry<SemiCategory>>,
    pub semidistributors: BTreeMap<String, Entry<SemiDistributor>>,
    pub semifunctors: BTreeMap<String, Entry<SemiFunctor>>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn split_key(key: &str, parts: usize) -> Result<Vec<&str>> {
    let v: Vec<&str> = key.split('>').collect();
    if v.len() != parts {
        return Err(parse_err(format!("malformed key {key:?}")));
    }
    Ok(v)
}

fn build_table(name: &str, t: &TableSpec) -> Result<std::result::Result<Quantaloid, Error>> {
    let n = t.objects.len();
    let idx = |o: &str| {
        t.objects
            .iter()
            .position(|x| x == o)
            .ok_or_else(|| parse_err(format!("quantaloid {name}: unknown object {o:?}")))
    };
    let mut homs: Vec<Option<&LatticeSpec>> = vec![None; n * n];
    for (k, l) in &t.homs {
        let p = split_key(k, 2)?;
        homs[idx(p[0])? * n + idx(p[1])?] = Some(l);
    }
    let mut compose: Vec<Option<Vec<Elem>>> = vec![None; n * n * n];
    for (k, rows) in &t.compose {
        let p = split_key(k, 3)?;
        compose[(idx(p[0])? * n + idx(p[1])?) * n + idx(p[2])?] = Some(rows.concat());
    }
    let mut identity = vec![None; n];
    for (k, &e) in &t.id {
        identity[idx(k)?] = Some(e);
    }
    let mut lattices = Vec::with_capacity(n * n);
    for (i, h) in homs.into_iter().enumerate() {
        let h = h.ok_or_else(|| {
            parse_err(format!("quantaloid {name}: missing hom {}>{}", t.objects[i / n], t.objects[i % n]))
        })?;
        if h.leq.iter().any(|&(a, b)| a >= h.size || b >= h.size) {
            return Ok(Err(Error::TypeMismatch(format!("order pair outside a lattice of size {}", h.size))));
        }
        match SupLattice::from_pairs(h.size, &h.leq) {
            Ok(l) => lattices.push(l),
            Err(e) => return Ok(Err(e)),
        }
    }
    let compose = compose
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| {
                let (x, y, z) = (i / (n * n), i / n % n, i % n);
                parse_err(format!(
                    "quantaloid {name}: missing compose {}>{}>{}",
                    t.objects[x], t.objects[y], t.objects[z]
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let identity = identity
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| parse_err(format!("quantaloid {name}: missing id {}", t.objects[i]))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Quantaloid::validate(RawQuantaloid {
        objects: t.objects.clone(),
        homs: lattices,
        compose,
        identity,
    }))
}

fn lookup<'a, T>(map: &'a BTreeMap<String, Entry<T>>, kind: &str, name: &str) -> Result<&'a Entry<T>> {
    map.get(name)
        .ok_or_else(|| parse_err(format!("unknown {kind} {name:?}")))
}

fn dep<T>(e: &Entry<T>, name: &str) -> std::result::Result<Arc<T>, Failure> {
    e.clone().map_err(|_| Failure::Dependency(name.to_string()))
}

fn object_index(s: &SemiCategory, who: &str, name: &str) -> Result<usize> {
    s.objects()
        .index_of(name)
        .ok_or_else(|| parse_err(format!("{who}: unknown object {name:?}")))
}

impl Workspace {
    pub fn from_json(text: &str) -> Result<Workspace> {
        let doc: Document = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        let mut ws = Workspace::default();

        for (name, def) in &doc.quantaloids {
            let q = match def {
                QuantaloidSpec::Builtin(b) => Quantaloid::builtin(b),
                QuantaloidSpec::Table(t) => build_table(name, t)?,
            };
            ws.quantaloids
                .insert(name.clone(), q.map(Arc::new).map_err(Failure::Invalid));
        }

        for (name, def) in &doc.semicategories {
            let base = lookup(&ws.quantaloids, "quantaloid", &def.base)?;
            let entry = match dep(base, &def.base) {
                Err(f) => Err(f),
                Ok(q) => {
                    let mut elems = Vec::with_capacity(def.objects.len());
                    for o in &def.objects {
                        let ty = match &o.ty {
                            Some(t) => q
                                .object_id(t)
                                .ok_or_else(|| parse_err(format!("semicategory {name}: unknown type {t:?}")))?,
                            None if q.len() == 1 => 0,
                            None => {
                                return Err(parse_err(format!("semicategory {name}: object {:?} needs a type", o.name)))
                            }
                        };
                        elems.push((o.name.clone(), ty));
                    }
                    let objects = TypedSet::new(elems)?;
                    let mut entries = Vec::with_capacity(def.hom.len());
                    for (a2, a, e) in &def.hom {
                        let pos = |x: &str| {
                            objects
                                .index_of(x)
                                .ok_or_else(|| parse_err(format!("semicategory {name}: unknown object {x:?}")))
                        };
                        entries.push((pos(a2)?, pos(a)?, *e));
                    }
                    SemiCategory::from_entries(q, objects, &entries)
                        .map(Arc::new)
                        .map_err(Failure::Invalid)
                }
            };
            ws.semicategories.insert(name.clone(), entry);
        }

        for (name, def) in &doc.semidistributors {
            let d = lookup(&ws.semicategories, "semicategory", &def.dom)?;
            let c = lookup(&ws.semicategories, "semicategory", &def.cod)?;
            let entry = match (dep(d, &def.dom), dep(c, &def.cod)) {
                (Err(f), _) | (_, Err(f)) => Err(f),
                (Ok(d), Ok(c)) => {
                    let who = format!("semidistributor {name}");
                    let mut entries = Vec::with_capacity(def.entries.len());
                    for (b, a, e) in &def.entries {
                        entries.push((object_index(&c, &who, b)?, object_index(&d, &who, a)?, *e));
                    }
                    SemiDistributor::from_entries(d, c, &entries)
                        .map(Arc::new)
                        .map_err(Failure::Invalid)
                }
            };
            ws.semidistributors.insert(name.clone(), entry);
        }

        for (name, def) in &doc.semifunctors {
            let d = lookup(&ws.semicategories, "semicategory", &def.dom)?;
            let c = lookup(&ws.semicategories, "semicategory", &def.cod)?;
            let entry = match (dep(d, &def.dom), dep(c, &def.cod)) {
                (Err(f), _) | (_, Err(f)) => Err(f),
                (Ok(d), Ok(c)) => {
                    let who = format!("semifunctor {name}");
                    let mut map = vec![None; d.len()];
                    for (a, b) in &def.map {
                        map[object_index(&d, &who, a)?] = Some(object_index(&c, &who, b)?);
                    }
                    let map = map
                        .into_iter()
                        .enumerate()
                        .map(|(i, m)| m.ok_or_else(|| parse_err(format!("{who}: no image for {:?}", d.name(i)))))
                        .collect::<Result<Vec<_>>>()?;
                    SemiFunctor::new(d, c, map).map(Arc::new).map_err(Failure::Invalid)
                }
            };
            ws.semifunctors.insert(name.clone(), entry);
        }
        Ok(ws)
    }

    pub fn load(path: &std::path::Path) -> Result<Workspace> {
        let text = std::fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Every object with its verdict, by kind then name.
    pub fn verdicts(&self) -> Vec<(Kind, &str, Option<&Failure>)> {
        let mut out = Vec::new();
        fn push<'a, T>(out: &mut Vec<(Kind, &'a str, Option<&'a Failure>)>, k: Kind, m: &'a BTreeMap<String, Entry<T>>) {
            for (n, e) in m {
                out.push((k, n.as_str(), e.as_ref().err()));
            }
        }
        push(&mut out, Kind::Quantaloid, &self.quantaloids);
        push(&mut out, Kind::SemiCategory, &self.semicategories);
        push(&mut out, Kind::SemiDistributor, &self.semidistributors);
        push(&mut out, Kind::SemiFunctor, &self.semifunctors);
        out
    }

    pub fn all_valid(&self) -> bool {
        self.verdicts().iter().all(|v| v.2.is_none())
    }

    /// The first failure, as an error.
    pub fn first_failure(&self) -> Option<Error> {
        self.verdicts().into_iter().find_map(|(_, _, f)| match f {
            Some(Failure::Invalid(e)) => Some(e.clone()),
            _ => None,
        })
    }

    fn get<T>(map: &BTreeMap<String, Entry<T>>, kind: &str, name: &str) -> Result<Arc<T>> {
        match lookup(map, kind, name)? {
            Ok(v) => Ok(v.clone()),
            Err(Failure::Invalid(e)) => Err(e.clone()),
            Err(Failure::Dependency(d)) => Err(Error::TypeMismatch(format!("{kind} {name} depends on invalid {d}"))),
        }
    }

    pub fn quantaloid(&self, name: &str) -> Result<Arc<Quantaloid>> {
        Self::get(&self.quantaloids, "quantaloid", name)
    }

    pub fn semicategory(&self, name: &str) -> Result<Arc<SemiCategory>> {
        Self::get(&self.semicategories, "semicategory", name)
    }

    pub fn semidistributor(&self, name: &str) -> Result<Arc<SemiDistributor>> {
        Self::get(&self.semidistributors, "semidistributor", name)
    }

    pub fn semifunctor(&self, name: &str) -> Result<Arc<SemiFunctor>> {
        Self::get(&self.semifunctors, "semifunctor", name)
    }
}

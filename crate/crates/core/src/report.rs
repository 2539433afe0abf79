//! Reports shared by the command line and the C interface: a JSON value
//! (with `"schema": 1`), a plain-text rendering and a verdict.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::completion;
use crate::error::{Error, Result};
use crate::morita;
use crate::presheaf::{enumerate_presheaves, Presheaf, Variance};
use crate::semicat::{SemiCategory, SemiDistributor};
use crate::workspace::{Failure, Workspace};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
    /// Valid, equivalent or true.
    pub ok: bool,
}

/// `{"kind", "message", "detail"}` for an error.
pub fn error_json(e: &Error) -> Value {
    let detail = serde_json::to_value(e).unwrap_or(Value::Null);
    let kind = match &detail {
        Value::String(s) => s.clone(),
        Value::Object(m) => m.keys().next().cloned().unwrap_or_default(),
        _ => String::new(),
    };
    json!({ "kind": kind, "message": e.to_string(), "detail": detail })
}

pub fn validate(ws: &Workspace) -> Report {
    let mut objects = Vec::new();
    let mut text = String::new();
    for (kind, name, failure) in ws.verdicts() {
        let (v, line) = match failure {
            None => (json!({"kind": kind.as_str(), "name": name, "valid": true}), "ok".to_string()),
            Some(Failure::Invalid(e)) => (
                json!({"kind": kind.as_str(), "name": name, "valid": false, "error": error_json(e)}),
                format!("INVALID: {e}"),
            ),
            Some(Failure::Dependency(d)) => (
                json!({"kind": kind.as_str(), "name": name, "valid": false, "depends_on_invalid": d}),
                format!("INVALID: depends on invalid {d}"),
            ),
        };
        objects.push(v);
        let _ = writeln!(text, "{} {name}: {line}", kind.as_str());
    }
    let ok = ws.all_valid();
    let _ = writeln!(text, "{}", if ok { "all valid" } else { "some objects are invalid" });
    Report {
        json: json!({"schema": SCHEMA, "command": "validate", "valid": ok, "objects": objects}),
        text,
        ok,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresheafClass {
    All,
    Regular,
    Yoneda,
}

impl PresheafClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PresheafClass::All => "all",
            PresheafClass::Regular => "regular",
            PresheafClass::Yoneda => "yoneda",
        }
    }

    pub fn keeps(self, p: &Presheaf) -> bool {
        match self {
            PresheafClass::All => true,
            PresheafClass::Regular => p.is_regular(),
            PresheafClass::Yoneda => p.is_yoneda(),
        }
    }
}

fn require_regular(name: &str, s: &SemiCategory) -> Result<()> {
    if !s.is_regular() {
        return Err(Error::NotRegular(format!("{name} is not a regular semicategory")));
    }
    Ok(())
}

fn require_valid(ws: &Workspace) -> Result<()> {
    match ws.first_failure() {
        Some(e) => Err(e),
        None if ws.all_valid() => Ok(()),
        None => Err(Error::TypeMismatch("workspace has invalid objects".into())),
    }
}

/// Presheaves of one type (or of every type) in the requested class.
pub fn presheaves(
    ws: &Workspace,
    name: &str,
    ty: Option<&str>,
    class: PresheafClass,
    variance: Variance,
    cap: u128,
) -> Result<Report> {
    let a = ws.semicategory(name)?;
    require_valid(ws)?;
    let q = a.base().clone();
    let types: Vec<usize> = match ty {
        Some(t) => vec![q
            .object_id(t)
            .ok_or_else(|| Error::Parse(format!("unknown type {t:?}")))?],
        None => (0..q.len()).collect(),
    };
    let mut listed = Vec::new();
    let mut counts = serde_json::Map::new();
    let mut text = String::new();
    for t in types {
        let ps: Vec<Presheaf> = enumerate_presheaves(&a, t, variance, cap)?
            .into_iter()
            .filter(|p| class.keeps(p))
            .collect();
        counts.insert(q.object_name(t).to_string(), json!(ps.len()));
        let _ = writeln!(text, "type {}: {} {} presheaves", q.object_name(t), ps.len(), class.as_str());
        for p in ps {
            let _ = writeln!(text, "  {}", values_text(&a, &p));
            listed.push(json!({"type": q.object_name(t), "values": values_json(&a, &p)}));
        }
    }
    Ok(Report {
        json: json!({
            "schema": SCHEMA,
            "command": "presheaves",
            "semicategory": name,
            "variance": variance.to_string(),
            "class": class.as_str(),
            "counts": counts,
            "presheaves": listed,
        }),
        text,
        ok: true,
    })
}

fn values_json(a: &SemiCategory, p: &Presheaf) -> Value {
    let m: serde_json::Map<String, Value> = (0..a.len())
        .map(|i| (a.name(i).to_string(), json!(p.value(i))))
        .collect();
    Value::Object(m)
}

fn values_text(a: &SemiCategory, p: &Presheaf) -> String {
    let parts: Vec<String> = (0..a.len()).map(|i| format!("{}={}", a.name(i), p.value(i))).collect();
    format!("({})", parts.join(", "))
}

/// Rows, columns and entries of a semidistributor.
pub fn semidist_json(d: &SemiDistributor) -> Value {
    let (dom, cod) = (d.dom(), d.cod());
    let data: Vec<Vec<usize>> = (0..cod.len())
        .map(|b| (0..dom.len()).map(|a| d.get(b, a)).collect())
        .collect();
    json!({
        "rows": cod.objects().names(),
        "cols": dom.objects().names(),
        "data": data,
    })
}

pub fn morita(ws: &Workspace, a: &str, b: &str, cap: u128) -> Result<Report> {
    let (sa, sb) = (ws.semicategory(a)?, ws.semicategory(b)?);
    require_valid(ws)?;
    require_regular(a, &sa)?;
    require_regular(b, &sb)?;
    let v = morita::morita_equivalent(&sa, &sb, cap)?;
    let certificate = v
        .certificate
        .as_ref()
        .map(|(phi, psi)| json!({"phi": semidist_json(phi), "psi": semidist_json(psi)}));
    let mut text = format!(
        "{a} and {b} are {}Morita equivalent\nskeleton sizes: {} and {}\n",
        if v.equivalent { "" } else { "not " },
        v.skeleton_sizes[0],
        v.skeleton_sizes[1]
    );
    let route = |r: Option<bool>| r.map_or("cap reached".to_string(), |b| b.to_string());
    let _ = writeln!(text, "semidistributor route: {}", route(v.rsdist_route));
    let _ = writeln!(text, "covariant route: {}", route(v.covariant_route));
    let _ = writeln!(text, "routes agree: {}", v.routes_agree());
    Ok(Report {
        json: json!({
            "schema": SCHEMA,
            "command": "morita",
            "morita": v.equivalent,
            "skeleton_sizes": v.skeleton_sizes,
            "certificate": certificate,
            "routes_agree": v.routes_agree(),
            "rsdist_route": v.rsdist_route,
            "covariant_route": v.covariant_route,
        }),
        text,
        ok: v.equivalent,
    })
}

pub fn completion_idm(ws: &Workspace, name: &str) -> Result<Report> {
    let q = ws.quantaloid(name)?;
    require_valid(ws)?;
    let idm = completion::build_idm(q.clone())?;
    let n = idm.len();
    let objects: Vec<Value> = idm
        .objects()
        .iter()
        .map(|e| json!({"object": q.object_name(e.dom), "idempotent": e.elem}))
        .collect();
    let mut homs = Vec::new();
    let mut text = format!("Idm({name}): {n} objects\n");
    for (i, e) in idm.objects().iter().enumerate() {
        let _ = writeln!(text, "  [{i}] {}:{}", q.object_name(e.dom), e.elem);
    }
    for i in 0..n {
        for j in 0..n {
            let elems = idm.hom_elems(i, j);
            homs.push(json!({"dom": i, "cod": j, "elements": elems}));
            let _ = writeln!(text, "  hom({i}, {j}) = {elems:?}");
        }
    }
    Ok(Report {
        json: json!({
            "schema": SCHEMA,
            "command": "completion idm",
            "quantaloid": name,
            "objects": objects,
            "homs": homs,
            "embedding_full": idm.embedding_is_full(),
        }),
        text,
        ok: true,
    })
}

pub fn completion_verify(ws: &Workspace, a: &str, b: &str, cap: u128) -> Result<Report> {
    let (sa, sb) = (ws.semicategory(a)?, ws.semicategory(b)?);
    require_valid(ws)?;
    require_regular(a, &sa)?;
    require_regular(b, &sb)?;
    let r = completion::verify_rsdist_is_idm_matr(&sa, &sb, cap)?;
    let text = format!(
        "regular semidistributors {a} => {b}: {}\nfixed matrices: {}\nidempotent: {}\nsets equal: {}\ncomposition agrees: {}\nholds: {}\n",
        r.regular, r.fixed, r.idempotent, r.sets_equal, r.composition_agrees, r.holds()
    );
    Ok(Report {
        json: json!({
            "schema": SCHEMA,
            "command": "completion verify",
            "holds": r.holds(),
            "idempotent": r.idempotent,
            "regular": r.regular,
            "fixed": r.fixed,
            "sets_equal": r.sets_equal,
            "composition_agrees": r.composition_agrees,
        }),
        text,
        ok: r.holds(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_CAP;

    const DOC: &str = r#"{"quantaloids":{"Q":"3"},
        "semicategories":{
            "A":{"base":"Q","objects":[{"name":"a"}],"hom":[["a","a",1]]},
            "C":{"base":"Q","objects":[{"name":"c"}],"hom":[["c","c",2]]}}}"#;

    #[test]
    fn presheaf_counts() {
        let ws = Workspace::from_json(DOC).unwrap();
        let count = |class| {
            presheaves(&ws, "A", Some("*"), class, Variance::Contravariant, DEFAULT_CAP)
                .unwrap()
                .json["counts"]["*"]
                .as_u64()
                .unwrap()
        };
        assert_eq!(count(PresheafClass::All), 3);
        assert_eq!(count(PresheafClass::Regular), 2);
        assert_eq!(count(PresheafClass::Yoneda), 2);
    }

    #[test]
    fn morita_verdicts() {
        let ws = Workspace::from_json(DOC).unwrap();
        let r = morita(&ws, "A", "C", DEFAULT_CAP).unwrap();
        assert!(!r.ok);
        assert_eq!(r.json["skeleton_sizes"], json!([2, 3]));
        assert_eq!(r.json["certificate"], Value::Null);
        assert_eq!(r.json["routes_agree"], json!(true));
        assert!(morita(&ws, "A", "A", DEFAULT_CAP).unwrap().ok);
    }

    #[test]
    fn error_kind_names() {
        assert_eq!(error_json(&Error::NotIdempotent)["kind"], json!("NotIdempotent"));
        let e = Error::SearchCapExceeded { cap: 3 };
        assert_eq!(error_json(&e)["kind"], json!("SearchCapExceeded"));
        assert_eq!(error_json(&e)["detail"]["SearchCapExceeded"]["cap"], json!(3));
    }
}

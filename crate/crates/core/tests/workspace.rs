use qsemicat::report;
use qsemicat::workspace::Failure;
use qsemicat::{Error, Workspace};

const DOC: &str = r#"{
  "quantaloids": {
    "Q": "3",
    "P": {
      "objects": ["*"],
      "homs": { "*>*": { "size": 2, "leq": [[0, 1]] } },
      "compose": { "*>*>*": [[0, 0], [0, 1]] },
      "id": { "*": 1 }
    }
  },
  "semicategories": {
    "A": { "base": "Q", "objects": [{ "name": "a" }], "hom": [["a", "a", 1]] },
    "C": { "base": "Q", "objects": [{ "name": "c" }], "hom": [["c", "c", 2]] },
    "Lt": { "base": "P", "objects": [{ "name": "x" }, { "name": "y" }], "hom": [["x", "y", 1]] }
  },
  "semidistributors": {
    "AC": { "dom": "A", "cod": "C", "entries": [["c", "a", 1]] },
    "Big": { "dom": "A", "cod": "C", "entries": [["c", "a", 2]] }
  },
  "semifunctors": {
    "Swap": { "dom": "Lt", "cod": "Lt", "map": { "x": "y", "y": "x" } },
    "Id": { "dom": "A", "cod": "A", "map": { "a": "a" } }
  }
}"#;

#[test]
fn every_kind_is_validated() {
    let ws = Workspace::from_json(DOC).unwrap();
    let invalid: Vec<&str> = ws.verdicts().into_iter().filter(|v| v.2.is_some()).map(|v| v.1).collect();
    // Swapping x and y reverses x < y.
    assert_eq!(invalid, vec!["Swap"]);
    // The top matrix is a semidistributor, but composing with A(a,a) = e
    // brings it down to e, so it is not regular.
    assert!(!ws.semidistributor("Big").unwrap().is_regular());
    assert!(ws.semidistributor("AC").unwrap().is_regular());
    assert!(ws.semifunctor("Id").unwrap().is_regular());
    let r = report::validate(&ws);
    assert!(!r.ok);
    assert_eq!(r.json["objects"].as_array().unwrap().len(), 9);
}

#[test]
fn dependents_of_invalid_objects_are_reported() {
    let doc = r#"{
      "quantaloids": { "Q": "3" },
      "semicategories": {
        "Bad": { "base": "Q", "objects": [{ "name": "a" }], "hom": [["a", "a", 2]] },
        "A": { "base": "Q", "objects": [{ "name": "a" }], "hom": [["a", "a", 1]] }
      },
      "semidistributors": { "D": { "dom": "Bad", "cod": "A", "entries": [] } }
    }"#;
    let ws = Workspace::from_json(doc).unwrap();
    assert!(ws.all_valid(), "A(a,a)=1 is a valid hom over 3");
    let doc = doc.replace(r#"[["a", "a", 2]]"#, r#"[["a", "a", 7]]"#);
    let ws = Workspace::from_json(&doc).unwrap();
    let failures: Vec<_> = ws.verdicts().into_iter().filter_map(|v| v.2.map(|f| (v.1, f))).collect();
    assert_eq!(failures.len(), 2);
    assert!(matches!(failures[0], ("Bad", Failure::Invalid(_))));
    assert!(matches!(failures[1], ("D", Failure::Dependency(d)) if d.contains("Bad")));
}

#[test]
fn malformed_documents_are_parse_errors() {
    for doc in [
        "{",
        r#"{"quantaloids": {"Q": "nope"}}"#,
        r#"{"extra": 1}"#,
        r#"{"quantaloids": {"Q": "3"}, "semicategories": {"A": {"base": "R", "objects": []}}}"#,
    ] {
        match Workspace::from_json(doc) {
            Err(Error::Parse(_)) => {}
            Ok(ws) => assert!(!ws.all_valid(), "{doc}"),
            Err(e) => panic!("{doc}: {e}"),
        }
    }
}

use thiserror::Error;

use crate::lattice::Elem;
use crate::quantaloid::ObjId;

/// Which side of a two-sided law failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, serde::Serialize)]
pub enum Error {
    #[error("not a partial order: {axiom} fails at {witness:?}")]
    NotAPartialOrder {
        axiom: &'static str,
        witness: Vec<Elem>,
    },
    #[error("subset {subset:?} has no least upper bound")]
    MissingJoin { subset: Vec<Elem> },
    #[error("composition not associative on objects {objects:?} at arrows (h,g,f) = {arrows:?}")]
    AssocFailure {
        objects: [ObjId; 4],
        arrows: [Elem; 3],
    },
    #[error("{side} unit law fails for arrow {arrow} : {dom} -> {cod}")]
    UnitFailure {
        side: Side,
        dom: ObjId,
        cod: ObjId,
        arrow: Elem,
    },
    #[error("composition on objects {objects:?} does not preserve joins in the {side} argument: {detail}")]
    NotSupPreserving {
        objects: [ObjId; 3],
        side: Side,
        detail: String,
    },
    #[error("meet does not distribute over join: {a} /\\ ({b} \\/ {c})")]
    NotAFrame { a: Elem, b: Elem, c: Elem },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("composition-inequality fails at objects (a'', a', a) = {0:?}")]
    CompositionFailure([usize; 3]),
    #[error("{side} action-inequality fails at (row, col, via) = {witness:?}")]
    ActionFailure { side: Side, witness: [usize; 3] },
    #[error("not regular: {0}")]
    NotRegular(String),
    #[error("enumeration needs {bound} candidates, cap is {cap}")]
    EnumerationCapExceeded { bound: u128, cap: u128 },
    #[error("search exceeded cap {cap}")]
    SearchCapExceeded { cap: u128 },
    #[error("not a category: unit-inequality fails at object {0}")]
    NotACategory(usize),
    #[error("arrow is not idempotent")]
    NotIdempotent,
    #[error("relation not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
    #[error("directed subset {subset:?} has no join")]
    MissingDirectedJoin { subset: Vec<usize> },
    #[error("equality not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("equality not transitive at ({0}, {1}, {2})")]
    NotTransitiveEq(usize, usize, usize),
    #[error("functor does not preserve the colimit of regular presheaf #{witness}")]
    NotCocontinuous { witness: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

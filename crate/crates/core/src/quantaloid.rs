//! Finite quantaloids: categories enriched in finite sup-lattices.
//!
//! A quantaloid is stored as a dense family of hom lattices `hom(X, Y)`
//! (arrows `X -> Y`), a composition table per composable triple, and an
//! identity per object. Validation checks associativity, the unit laws and
//! that composition preserves the empty join and binary joins in each
//! argument; liftings and extensions are then tabulated by exhaustive
//! maximization.

use std::fmt;

use crate::error::{Error, Result, Side};
use crate::lattice::{Elem, SupLattice};

/// Index of an object of a [`Quantaloid`].
pub type ObjId = usize;

/// An arrow `dom -> cod` of a quantaloid, as an element of `hom(dom, cod)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QArrow {
    pub dom: ObjId,
    pub cod: ObjId,
    pub elem: Elem,
}

impl QArrow {
    pub fn new(dom: ObjId, cod: ObjId, elem: Elem) -> Self {
        QArrow { dom, cod, elem }
    }
}

impl fmt::Display for QArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}->{}", self.elem, self.dom, self.cod)
    }
}

/// Unvalidated quantaloid data.
///
/// `homs[x * n + y]` is `hom(X, Y)`. `compose[(x * n + y) * n + z]` is the
/// table for `hom(Y, Z) x hom(X, Y) -> hom(X, Z)`, row-major with the
/// `hom(Y, Z)` argument selecting the row.
#[derive(Debug, Clone)]
pub struct RawQuantaloid {
    pub objects: Vec<String>,
    pub homs: Vec<SupLattice>,
    pub compose: Vec<Vec<Elem>>,
    pub identity: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantaloid {
    objects: Vec<String>,
    homs: Vec<SupLattice>,
    compose: Vec<Vec<Elem>>,
    identity: Vec<Elem>,
    lift: Vec<Vec<Elem>>,
    extend: Vec<Vec<Elem>>,
}

impl Quantaloid {
    pub fn validate(raw: RawQuantaloid) -> Result<Self> {
        let n = raw.objects.len();
        if raw.homs.len() != n * n {
            return Err(Error::Parse(format!(
                "expected {} hom lattices, got {}",
                n * n,
                raw.homs.len()
            )));
        }
        if raw.compose.len() != n * n * n {
            return Err(Error::Parse(format!(
                "expected {} composition tables, got {}",
                n * n * n,
                raw.compose.len()
            )));
        }
        if raw.identity.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} identities, got {}",
                raw.identity.len()
            )));
        }
        for (name_idx, name) in raw.objects.iter().enumerate() {
            if raw.objects[..name_idx].contains(name) {
                return Err(Error::Parse(format!("duplicate object name {name:?}")));
            }
        }
        for x in 0..n {
            if raw.identity[x] >= raw.homs[x * n + x].size() {
                return Err(Error::TypeMismatch(format!(
                    "identity of {} out of range",
                    raw.objects[x]
                )));
            }
            for y in 0..n {
                for z in 0..n {
                    let t = &raw.compose[(x * n + y) * n + z];
                    let rows = raw.homs[y * n + z].size();
                    let cols = raw.homs[x * n + y].size();
                    if t.len() != rows * cols {
                        return Err(Error::TypeMismatch(format!(
                            "composition table {}>{}>{} has {} entries, expected {}",
                            raw.objects[x],
                            raw.objects[y],
                            raw.objects[z],
                            t.len(),
                            rows * cols
                        )));
                    }
                    let target = raw.homs[x * n + z].size();
                    if let Some(bad) = t.iter().find(|&&k| k >= target) {
                        return Err(Error::TypeMismatch(format!(
                            "composition table {}>{}>{} contains {bad}, outside hom({}, {})",
                            raw.objects[x], raw.objects[y], raw.objects[z], raw.objects[x],
                            raw.objects[z]
                        )));
                    }
                }
            }
        }

        let mut q = Quantaloid {
            objects: raw.objects,
            homs: raw.homs,
            compose: raw.compose,
            identity: raw.identity,
            lift: Vec::new(),
            extend: Vec::new(),
        };
        q.check_associativity()?;
        q.check_units()?;
        q.check_sup_preservation()?;
        q.tabulate_residuals();
        Ok(q)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.len();
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for h in self.hom(y, z).elements() {
                            for g in self.hom(x, y).elements() {
                                for f in self.hom(w, x).elements() {
                                    let left = self.comp(w, y, z, h, self.comp(w, x, y, g, f));
                                    let right = self.comp(w, x, z, self.comp(x, y, z, h, g), f);
                                    if left != right {
                                        return Err(Error::AssocFailure {
                                            objects: [w, x, y, z],
                                            arrows: [h, g, f],
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_units(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for f in self.hom(x, y).elements() {
                    if self.comp(x, y, y, self.identity[y], f) != f {
                        return Err(Error::UnitFailure {
                            side: Side::Left,
                            dom: x,
                            cod: y,
                            arrow: f,
                        });
                    }
                    if self.comp(x, x, y, f, self.identity[x]) != f {
                        return Err(Error::UnitFailure {
                            side: Side::Right,
                            dom: x,
                            cod: y,
                            arrow: f,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_sup_preservation(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (hyz, hxy, hxz) = (self.hom(y, z), self.hom(x, y), self.hom(x, z));
                    for g in hyz.elements() {
                        if self.comp(x, y, z, g, hxy.bottom()) != hxz.bottom() {
                            return Err(Error::NotSupPreserving {
                                objects: [x, y, z],
                                side: Side::Right,
                                detail: format!("{g} o bottom is not bottom"),
                            });
                        }
                        for f1 in hxy.elements() {
                            for f2 in hxy.elements() {
                                let lhs = self.comp(x, y, z, g, hxy.join(f1, f2));
                                let rhs = hxz.join(
                                    self.comp(x, y, z, g, f1),
                                    self.comp(x, y, z, g, f2),
                                );
                                if lhs != rhs {
                                    return Err(Error::NotSupPreserving {
                                        objects: [x, y, z],
                                        side: Side::Right,
                                        detail: format!("{g} o ({f1} v {f2})"),
                                    });
                                }
                            }
                        }
                    }
                    for f in hxy.elements() {
                        if self.comp(x, y, z, hyz.bottom(), f) != hxz.bottom() {
                            return Err(Error::NotSupPreserving {
                                objects: [x, y, z],
                                side: Side::Left,
                                detail: format!("bottom o {f} is not bottom"),
                            });
                        }
                        for g1 in hyz.elements() {
                            for g2 in hyz.elements() {
                                let lhs = self.comp(x, y, z, hyz.join(g1, g2), f);
                                let rhs = hxz.join(
                                    self.comp(x, y, z, g1, f),
                                    self.comp(x, y, z, g2, f),
                                );
                                if lhs != rhs {
                                    return Err(Error::NotSupPreserving {
                                        objects: [x, y, z],
                                        side: Side::Left,
                                        detail: format!("({g1} v {g2}) o {f}"),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    // Residuals by exhaustive maximization: the set {d | c o d <= b} is
    // join-closed once composition preserves joins, so its join is its
    // maximum.
    fn tabulate_residuals(&mut self) {
        let n = self.len();
        let mut lift = Vec::with_capacity(n * n * n);
        let mut extend = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // lift: c in hom(Y,Z), b in hom(X,Z) -> hom(X,Y)
                    let (hyz, hxz, hxy) = (self.hom(y, z), self.hom(x, z), self.hom(x, y));
                    let mut t = Vec::with_capacity(hyz.size() * hxz.size());
                    for c in hyz.elements() {
                        for b in hxz.elements() {
                            let best = hxy.join_all(
                                hxy.elements()
                                    .filter(|&d| hxz.leq(self.comp(x, y, z, c, d), b)),
                            );
                            t.push(best);
                        }
                    }
                    lift.push(t);
                    // extend: c in hom(X,Y), b in hom(X,Z) -> hom(Y,Z)
                    let mut t = Vec::with_capacity(hxy.size() * hxz.size());
                    for c in hxy.elements() {
                        for b in hxz.elements() {
                            let best = hyz.join_all(
                                hyz.elements()
                                    .filter(|&d| hxz.leq(self.comp(x, y, z, d, c), b)),
                            );
                            t.push(best);
                        }
                    }
                    extend.push(t);
                }
            }
        }
        self.lift = lift;
        self.extend = extend;
    }

    /// One-object quantaloid from a quantale `(L, mult, unit)`, where
    /// `mult(g, f)` is the composite `g o f`.
    pub fn from_quantale(
        lattice: SupLattice,
        mult: impl Fn(Elem, Elem) -> Elem,
        unit: Elem,
    ) -> Result<Self> {
        let n = lattice.size();
        let mut table = Vec::with_capacity(n * n);
        for g in 0..n {
            for f in 0..n {
                table.push(mult(g, f));
            }
        }
        Self::validate(RawQuantaloid {
            objects: vec!["*".to_string()],
            homs: vec![lattice],
            compose: vec![table],
            identity: vec![unit],
        })
    }

    /// One-object quantaloid of a frame: composition is meet, identity top.
    pub fn from_frame(lattice: SupLattice) -> Result<Self> {
        for a in lattice.elements() {
            for b in lattice.elements() {
                for c in lattice.elements() {
                    let lhs = lattice.meet(a, lattice.join(b, c));
                    let rhs = lattice.join(lattice.meet(a, b), lattice.meet(a, c));
                    if lhs != rhs {
                        return Err(Error::NotAFrame { a, b, c });
                    }
                }
            }
        }
        let top = lattice.top();
        let l2 = lattice.clone();
        Self::from_quantale(lattice, move |g, f| l2.meet(g, f), top)
    }

    /// The two-element Boolean algebra as a one-object quantaloid.
    pub fn two() -> Self {
        Self::from_frame(SupLattice::chain(2)).expect("2 is a frame")
    }

    /// The chain `0 < e < 1` (indices 0, 1, 2) with meet as composition.
    pub fn three() -> Self {
        Self::from_frame(SupLattice::chain(3)).expect("3 is a frame")
    }

    /// Built-in named quantaloids: `"2"`, `"3"`, `"frame:chainN"`,
    /// `"frame:boolK"`, `"frame:m3"`, `"frame:n5"`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "2" => return Ok(Self::two()),
            "3" => return Ok(Self::three()),
            _ => {}
        }
        let Some(lat) = name.strip_prefix("frame:") else {
            return Err(Error::Parse(format!("unknown built-in quantaloid {name:?}")));
        };
        let lattice = if let Some(k) = lat.strip_prefix("chain") {
            let k: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad chain length in {name:?}")))?;
            if k == 0 || k > 64 {
                return Err(Error::Parse(format!("chain length out of range in {name:?}")));
            }
            SupLattice::chain(k)
        } else if let Some(k) = lat.strip_prefix("bool") {
            let k: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad atom count in {name:?}")))?;
            if k > 5 {
                return Err(Error::Parse(format!("atom count out of range in {name:?}")));
            }
            SupLattice::powerset(k)
        } else if lat == "m3" {
            SupLattice::diamond_m3()
        } else if lat == "n5" {
            SupLattice::pentagon_n5()
        } else {
            return Err(Error::Parse(format!("unknown frame lattice {lat:?}")));
        };
        Self::from_frame(lattice)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn object_id(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &SupLattice {
        &self.homs[x * self.len() + y]
    }

    pub fn identity(&self, x: ObjId) -> Elem {
        self.identity[x]
    }

    /// `g o f` for `f: X -> Y`, `g: Y -> Z`.
    pub fn comp(&self, x: ObjId, y: ObjId, z: ObjId, g: Elem, f: Elem) -> Elem {
        let n = self.len();
        let cols = self.homs[x * n + y].size();
        self.compose[(x * n + y) * n + z][g * cols + f]
    }

    /// Lifting `[c, b]` for `c: Y -> Z`, `b: X -> Z`; the largest
    /// `d: X -> Y` with `c o d <= b`.
    pub fn lift(&self, x: ObjId, y: ObjId, z: ObjId, c: Elem, b: Elem) -> Elem {
        let n = self.len();
        let cols = self.homs[x * n + z].size();
        self.lift[(x * n + y) * n + z][c * cols + b]
    }

    /// Extension `{c, b}` for `c: X -> Y`, `b: X -> Z`; the largest
    /// `d: Y -> Z` with `d o c <= b`.
    pub fn extend(&self, x: ObjId, y: ObjId, z: ObjId, c: Elem, b: Elem) -> Elem {
        let n = self.len();
        let cols = self.homs[x * n + z].size();
        self.extend[(x * n + y) * n + z][c * cols + b]
    }

    pub fn compose(&self, g: QArrow, f: QArrow) -> Result<QArrow> {
        if f.cod != g.dom {
            return Err(Error::TypeMismatch(format!("cannot compose {g} after {f}")));
        }
        Ok(QArrow::new(f.dom, g.cod, self.comp(f.dom, f.cod, g.cod, g.elem, f.elem)))
    }

    pub fn lifting(&self, c: QArrow, b: QArrow) -> Result<QArrow> {
        if c.cod != b.cod {
            return Err(Error::TypeMismatch(format!(
                "lifting needs a common codomain, got {c} and {b}"
            )));
        }
        Ok(QArrow::new(
            b.dom,
            c.dom,
            self.lift(b.dom, c.dom, c.cod, c.elem, b.elem),
        ))
    }

    pub fn extension(&self, c: QArrow, b: QArrow) -> Result<QArrow> {
        if c.dom != b.dom {
            return Err(Error::TypeMismatch(format!(
                "extension needs a common domain, got {c} and {b}"
            )));
        }
        Ok(QArrow::new(
            c.cod,
            b.cod,
            self.extend(c.dom, c.cod, b.cod, c.elem, b.elem),
        ))
    }

    pub fn identity_arrow(&self, x: ObjId) -> QArrow {
        QArrow::new(x, x, self.identity[x])
    }

    pub fn arrow_leq(&self, a: QArrow, b: QArrow) -> bool {
        a.dom == b.dom && a.cod == b.cod && self.hom(a.dom, a.cod).leq(a.elem, b.elem)
    }

    /// Raw view for exporting or re-validating.
    pub fn to_raw(&self) -> RawQuantaloid {
        RawQuantaloid {
            objects: self.objects.clone(),
            homs: self.homs.clone(),
            compose: self.compose.clone(),
            identity: self.identity.clone(),
        }
    }
}

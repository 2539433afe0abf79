//! Splitting idempotents.
//!
//! `Idm(Q)` has the idempotent arrows of `Q` as objects; an arrow `e -> f`
//! is a `b` with `b o e = b = f o b`, and `e` is its own identity. Regular
//! semicategories are idempotents in the matrix quantaloid, and regular
//! semidistributors are exactly the arrows between them there.

use std::sync::Arc;

use crate::enumerate::{check_cap, for_each_assignment};
use crate::error::{Error, Result};
use crate::lattice::{Elem, SupLattice};
use crate::quantaloid::{ObjId, QArrow, Quantaloid, RawQuantaloid};
use crate::semicat::{all_regular_semidistributors, SemiCategory, SemiDistributor};

/// All endo-arrows `e` with `e o e = e`, by object then element.
pub fn idempotents(q: &Quantaloid) -> Vec<QArrow> {
    let mut out = Vec::new();
    for x in 0..q.len() {
        for e in q.hom(x, x).elements() {
            if q.comp(x, x, x, e, e) == e {
                out.push(QArrow::new(x, x, e));
            }
        }
    }
    out
}

/// `Idm(Q)`, materialized as a validated quantaloid whose hom lattices are
/// the fixed sub-lattices of the base homs.
#[derive(Debug, Clone)]
pub struct IdmQuantaloid {
    base: Arc<Quantaloid>,
    objects: Vec<QArrow>,
    quantaloid: Quantaloid,
    /// `elems[i * n + j][k]` is the base element of the `k`-th arrow `i -> j`.
    elems: Vec<Vec<Elem>>,
}

pub fn build_idm(base: Arc<Quantaloid>) -> Result<IdmQuantaloid> {
    let objects = idempotents(&base);
    let n = objects.len();
    let mut elems = Vec::with_capacity(n * n);
    let mut homs = Vec::with_capacity(n * n);
    for e in &objects {
        for f in &objects {
            let (x, y) = (e.dom, f.dom);
            let l = base.hom(x, y);
            let fixed: Vec<Elem> = l
                .elements()
                .filter(|&b| base.comp(x, x, y, b, e.elem) == b && base.comp(x, y, y, f.elem, b) == b)
                .collect();
            let k = fixed.len();
            let mut leq = vec![false; k * k];
            for i in 0..k {
                for j in 0..k {
                    leq[i * k + j] = l.leq(fixed[i], fixed[j]);
                }
            }
            let sub = SupLattice::from_relation(k, leq)?;
            // The induced order must have the base joins.
            for i in 0..k {
                for j in 0..k {
                    if fixed[sub.join(i, j)] != l.join(fixed[i], fixed[j]) {
                        return Err(Error::MissingJoin { subset: vec![i, j] });
                    }
                }
            }
            homs.push(sub);
            elems.push(fixed);
        }
    }
    let index = |i: usize, j: usize, b: Elem| elems[i * n + j].iter().position(|&v| v == b);
    let mut compose = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (objects[i].dom, objects[j].dom, objects[k].dom);
                let (ij, jk) = (&elems[i * n + j], &elems[j * n + k]);
                let mut table = Vec::with_capacity(ij.len() * jk.len());
                for &g in jk {
                    for &f in ij {
                        let c = base.comp(x, y, z, g, f);
                        table.push(index(i, k, c).expect("composite of fixed arrows is fixed"));
                    }
                }
                compose.push(table);
            }
        }
    }
    let identity = (0..n)
        .map(|i| index(i, i, objects[i].elem).expect("an idempotent fixes itself"))
        .collect();
    let names = objects
        .iter()
        .map(|e| format!("{}:{}", base.object_name(e.dom), e.elem))
        .collect();
    let quantaloid = Quantaloid::validate(RawQuantaloid {
        objects: names,
        homs,
        compose,
        identity,
    })?;
    Ok(IdmQuantaloid {
        base,
        objects,
        quantaloid,
        elems,
    })
}

impl IdmQuantaloid {
    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.base
    }

    pub fn objects(&self) -> &[QArrow] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn quantaloid(&self) -> &Quantaloid {
        &self.quantaloid
    }

    pub fn object_of(&self, e: QArrow) -> Option<ObjId> {
        self.objects.iter().position(|&o| o == e)
    }

    /// Base elements of the arrows `i -> j`, in the order of the hom lattice.
    pub fn hom_elems(&self, i: ObjId, j: ObjId) -> &[Elem] {
        &self.elems[i * self.len() + j]
    }

    pub fn to_base(&self, i: ObjId, j: ObjId, k: Elem) -> Elem {
        self.hom_elems(i, j)[k]
    }

    pub fn from_base(&self, i: ObjId, j: ObjId, b: Elem) -> Option<Elem> {
        self.hom_elems(i, j).iter().position(|&v| v == b)
    }

    /// The identities of `Q` are objects and their homs are the full base homs.
    pub fn embedding_is_full(&self) -> bool {
        let q = &*self.base;
        (0..q.len()).all(|x| {
            (0..q.len()).all(|y| {
                let (i, j) = (
                    self.object_of(q.identity_arrow(x)),
                    self.object_of(q.identity_arrow(y)),
                );
                match (i, j) {
                    (Some(i), Some(j)) => self.hom_elems(i, j).iter().copied().eq(q.hom(x, y).elements()),
                    _ => false,
                }
            })
        })
    }
}

/// The lifting `[c, b]` in `Idm(Q)` two ways: `g o [c, b] o e` from the
/// base, and the join of all `d: e -> g` with `c o d <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdmLifting {
    pub formula: Elem,
    pub exhaustive: Elem,
}

impl IdmLifting {
    pub fn agrees(&self) -> bool {
        self.formula == self.exhaustive
    }
}

/// For `b: e -> f` and `c: g -> f` in `Idm(Q)` (given as base elements).
pub fn idm_lifting(idm: &IdmQuantaloid, e: ObjId, f: ObjId, g: ObjId, b: Elem, c: Elem) -> Result<IdmLifting> {
    let n = idm.len();
    if e >= n || f >= n || g >= n {
        return Err(Error::TypeMismatch("idempotent index out of range".into()));
    }
    if idm.from_base(e, f, b).is_none() || idm.from_base(g, f, c).is_none() {
        return Err(Error::TypeMismatch("arrows are not fixed by the idempotents".into()));
    }
    let q = &*idm.base;
    let (ea, fa, ga) = (idm.objects[e], idm.objects[f], idm.objects[g]);
    let (x, z, y) = (ea.dom, fa.dom, ga.dom);
    let l = q.lift(x, y, z, c, b);
    let formula = q.comp(x, y, y, ga.elem, q.comp(x, x, y, l, ea.elem));
    let hom = q.hom(x, y);
    let exhaustive = idm
        .hom_elems(e, g)
        .iter()
        .copied()
        .filter(|&d| q.hom(x, z).leq(q.comp(x, y, z, c, d), b))
        .fold(hom.bottom(), |acc, d| hom.join(acc, d));
    Ok(IdmLifting { formula, exhaustive })
}

/// A splitting of an idempotent `t: e -> e` of `Idm(Q)` through the object
/// `t`: `retraction o section = t` and `section o retraction = 1_t = t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Splitting {
    pub object: ObjId,
    pub section: Elem,
    pub retraction: Elem,
}

pub fn split_idempotent_in_idm(idm: &IdmQuantaloid, e: ObjId, t: Elem) -> Result<Splitting> {
    if e >= idm.len() || idm.from_base(e, e, t).is_none() {
        return Err(Error::TypeMismatch("not an endo-arrow of the object in Idm".into()));
    }
    let q = &*idm.base;
    let x = idm.objects[e].dom;
    if q.comp(x, x, x, t, t) != t {
        return Err(Error::NotIdempotent);
    }
    let object = idm.object_of(QArrow::new(x, x, t)).ok_or(Error::NotIdempotent)?;
    let (section, retraction) = (t, t);
    let ok = idm.from_base(e, object, section).is_some()
        && idm.from_base(object, e, retraction).is_some()
        && q.comp(x, x, x, retraction, section) == t
        && q.comp(x, x, x, section, retraction) == t;
    if !ok {
        return Err(Error::NotIdempotent);
    }
    Ok(Splitting {
        object,
        section,
        retraction,
    })
}

/// Findings of [`verify_rsdist_is_idm_matr`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsdistIdmReport {
    /// `A (x) A = A` and `B (x) B = B`.
    pub idempotent: bool,
    /// Regular semidistributors `A => B`.
    pub regular: usize,
    /// Matrices `M` with `M (x) A = M = B (x) M`.
    pub fixed: usize,
    /// The two sets coincide.
    pub sets_equal: bool,
    /// Composites of regular semidistributors agree with the matrix product
    /// and stay fixed; the identities are the hom matrices.
    pub composition_agrees: bool,
}

impl RsdistIdmReport {
    pub fn holds(&self) -> bool {
        self.idempotent && self.sets_equal && self.composition_agrees
    }
}

/// Plain matrix product over the base, `(M N)(r, c) = V_k M(r, k) o N(k, c)`,
/// kept independent of the library's matrix code.
fn product(q: &Quantaloid, rows: &[ObjId], mid: &[ObjId], cols: &[ObjId], m: &[Elem], n: &[Elem]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for (r, &tr) in rows.iter().enumerate() {
        for (c, &tc) in cols.iter().enumerate() {
            let mut acc = q.hom(tc, tr).bottom();
            for (k, &tk) in mid.iter().enumerate() {
                let v = q.comp(tc, tk, tr, m[r * mid.len() + k], n[k * cols.len() + c]);
                acc = q.hom(tc, tr).join(acc, v);
            }
            out.push(acc);
        }
    }
    out
}

pub fn verify_rsdist_is_idm_matr(a: &Arc<SemiCategory>, b: &Arc<SemiCategory>, cap: u128) -> Result<RsdistIdmReport> {
    for (name, s) in [("A", a), ("B", b)] {
        if !s.is_regular() {
            return Err(Error::NotRegular(format!("{name} is not a regular semicategory")));
        }
    }
    let q = a.base().clone();
    let (ta, tb) = (a.types(), b.types());
    let (ha, hb) = (a.hom_matrix().data(), b.hom_matrix().data());
    let idempotent = product(&q, ta, ta, ta, ha, ha) == ha && product(&q, tb, tb, tb, hb, hb) == hb;

    let sizes: Vec<usize> = tb
        .iter()
        .flat_map(|&y| ta.iter().map(move |&x| (x, y)))
        .map(|(x, y)| q.hom(x, y).size())
        .collect();
    check_cap(&sizes, cap)?;
    let mut fixed = Vec::new();
    for_each_assignment(&sizes, |m| {
        if product(&q, tb, ta, ta, m, ha) == m && product(&q, tb, tb, ta, hb, m) == m {
            fixed.push(m.to_vec());
        }
        true
    });
    let fwd = all_regular_semidistributors(a, b, cap)?;
    let regular: Vec<Vec<Elem>> = fwd.iter().map(|d| d.matrix().data().to_vec()).collect();
    let sets_equal = regular == fixed;

    let bwd = all_regular_semidistributors(b, a, cap)?;
    if (fwd.len() as u128).saturating_mul(bwd.len() as u128) > cap {
        return Err(Error::EnumerationCapExceeded {
            bound: (fwd.len() as u128) * (bwd.len() as u128),
            cap,
        });
    }
    let mut composition_agrees = a.identity_semidist().matrix().data() == ha && b.identity_semidist().matrix().data() == hb;
    for phi in &fwd {
        let (m, ia) = (phi.matrix().data(), a.identity_semidist());
        composition_agrees &= SemiDistributor::compose(phi, &ia)? == *phi;
        for psi in &bwd {
            let c = SemiDistributor::compose(psi, phi)?;
            let naive = product(&q, ta, tb, ta, psi.matrix().data(), m);
            composition_agrees &= c.matrix().data() == naive.as_slice()
                && product(&q, ta, ta, ta, &naive, ha) == naive
                && product(&q, ta, ta, ta, ha, &naive) == naive;
        }
    }
    Ok(RsdistIdmReport {
        idempotent,
        regular: regular.len(),
        fixed: fixed.len(),
        sets_equal,
        composition_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_CAP;
    use crate::semicat::TypedSet;

    const E: Elem = 1;
    const ONE: Elem = 2;

    #[test]
    fn idempotents_of_small_quantales() {
        let three = Quantaloid::three();
        let elems: Vec<Elem> = idempotents(&three).iter().map(|a| a.elem).collect();
        assert_eq!(elems, vec![0, E, ONE]);
        assert_eq!(idempotents(&Quantaloid::two()).len(), 2);
        // A zero multiplication has no unit and is rejected; with e o e = 0
        // only 0 and the unit are idempotent.
        assert!(Quantaloid::from_quantale(crate::lattice::SupLattice::chain(3), |_, _| 0, 2).is_err());
        let elems: Vec<Elem> = idempotents(&nilpotent()).iter().map(|a| a.elem).collect();
        assert_eq!(elems, vec![0, ONE]);
    }

    fn nilpotent() -> Quantaloid {
        let mult = |g: Elem, f: Elem| match (g, f) {
            (0, _) | (_, 0) => 0,
            (2, x) | (x, 2) => x,
            _ => 0,
        };
        Quantaloid::from_quantale(crate::lattice::SupLattice::chain(3), mult, 2).unwrap()
    }

    #[test]
    fn idm_of_three_chain() {
        let idm = build_idm(Arc::new(Quantaloid::three())).unwrap();
        assert_eq!(idm.len(), 3);
        let (zero, e, one) = (0, 1, 2);
        assert_eq!(idm.hom_elems(e, e), &[0, E]);
        assert_eq!(idm.hom_elems(one, one), &[0, E, ONE]);
        assert_eq!(idm.hom_elems(zero, zero), &[0]);
        assert!(idm.embedding_is_full());
        assert_eq!(idm.quantaloid().identity(e), 1);
    }

    #[test]
    fn idm_lifting_examples() {
        let idm = build_idm(Arc::new(Quantaloid::three())).unwrap();
        let r = idm_lifting(&idm, 1, 1, 1, E, E).unwrap();
        assert_eq!(r, IdmLifting { formula: E, exhaustive: E });
        for b in [0, E, ONE] {
            for c in [0, E, ONE] {
                let r = idm_lifting(&idm, 2, 2, 2, b, c).unwrap();
                assert_eq!(r.formula, Quantaloid::three().lift(0, 0, 0, c, b));
                assert!(r.agrees());
            }
        }
        assert_eq!(idm_lifting(&idm, 1, 1, 1, 0, E).unwrap().formula, 0);
        assert!(matches!(idm_lifting(&idm, 1, 1, 1, ONE, E), Err(Error::TypeMismatch(_))));
    }

    #[test]
    fn splitting() {
        let idm = build_idm(Arc::new(Quantaloid::three())).unwrap();
        let s = split_idempotent_in_idm(&idm, 1, E).unwrap();
        assert_eq!(s, Splitting { object: 1, section: E, retraction: E });
        assert_eq!(split_idempotent_in_idm(&idm, 1, 0).unwrap().object, 0);
        assert_eq!(split_idempotent_in_idm(&idm, 2, ONE).unwrap().object, 2);
    }

    #[test]
    fn non_idempotent_does_not_split() {
        let idm = build_idm(Arc::new(nilpotent())).unwrap();
        let one = idm.object_of(QArrow::new(0, 0, 2)).unwrap();
        assert_eq!(split_idempotent_in_idm(&idm, one, 1), Err(Error::NotIdempotent));
    }

    #[test]
    fn rsdist_on_three_chain() {
        let q = Arc::new(Quantaloid::three());
        let a = Arc::new(SemiCategory::new(q.clone(), TypedSet::numbered(1, 0), vec![E]).unwrap());
        let r = verify_rsdist_is_idm_matr(&a, &a, DEFAULT_CAP).unwrap();
        assert!(r.holds());
        assert_eq!((r.regular, r.fixed), (2, 2));
        let s = Arc::new(
            SemiCategory::from_entries(Arc::new(Quantaloid::two()), TypedSet::numbered(2, 0), &[(0, 1, 1)]).unwrap(),
        );
        assert!(matches!(verify_rsdist_is_idm_matr(&s, &s, DEFAULT_CAP), Err(Error::NotRegular(_))));
    }
}

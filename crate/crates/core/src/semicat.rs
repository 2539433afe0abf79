//! Semicategories, semidistributors and semifunctors over a finite
//! quantaloid.
//!
//! A semicategory is a typed object set with a hom matrix `A(a', a): ta ->
//! ta'` satisfying the composition-inequalities, but not necessarily the
//! unit-inequalities `1_ta <= A(a, a)`. Over the two-element quantaloid a
//! semicategory is a transitive relation, read as `a < b` iff `A(a, b)` is
//! top.
//!
//! Semidistributors compose by the matrix formula; the composite is only
//! unital on regular semicategories, which is what makes regular
//! semicategories and regular semidistributors a quantaloid.

use std::sync::Arc;

use crate::enumerate::{self, for_each_assignment};
use crate::error::{Error, Result, Side};
use crate::lattice::Elem;
use crate::matrix::Matrix;
use crate::quantaloid::{ObjId, QArrow, Quantaloid};

/// A set of named elements, each typed by an object of the base quantaloid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypedSet {
    names: Vec<String>,
    types: Vec<ObjId>,
}

impl TypedSet {
    pub fn new(elements: Vec<(String, ObjId)>) -> Result<Self> {
        let (names, types): (Vec<_>, Vec<_>) = elements.into_iter().unzip();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate element name {n:?}")));
            }
        }
        Ok(TypedSet { names, types })
    }

    /// Elements named `"0"`, `"1"`, ... all of type `ty`.
    pub fn numbered(n: usize, ty: ObjId) -> Self {
        TypedSet {
            names: (0..n).map(|i| i.to_string()).collect(),
            types: vec![ty; n],
        }
    }

    /// Elements named `"0"`, `"1"`, ... with the given types.
    pub fn numbered_typed(types: &[ObjId]) -> Self {
        TypedSet {
            names: (0..types.len()).map(|i| i.to_string()).collect(),
            types: types.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn types(&self) -> &[ObjId] {
        &self.types
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn same_base(a: &Arc<Quantaloid>, b: &Arc<Quantaloid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug, Clone)]
pub struct SemiCategory {
    base: Arc<Quantaloid>,
    objects: TypedSet,
    hom: Matrix,
}

impl PartialEq for SemiCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects && self.hom == other.hom && same_base(&self.base, &other.base)
    }
}

impl Eq for SemiCategory {}

impl SemiCategory {
    /// Validates the composition-inequalities
    /// `A(a'', a') o A(a', a) <= A(a'', a)`.
    pub fn new(base: Arc<Quantaloid>, objects: TypedSet, hom: Vec<Elem>) -> Result<Self> {
        let types = objects.types().to_vec();
        for &t in &types {
            if t >= base.len() {
                return Err(Error::TypeMismatch(format!("object type {t} not in base")));
            }
        }
        let hom = Matrix::checked(&base, types.clone(), types, hom)?;
        let sc = SemiCategory { base, objects, hom };
        if let Some(w) = sc.composition_failure() {
            return Err(Error::CompositionFailure(w));
        }
        Ok(sc)
    }

    /// Builds from sparse `(a', a, elem)` entries; missing entries are bottom.
    pub fn from_entries(
        base: Arc<Quantaloid>,
        objects: TypedSet,
        entries: &[(usize, usize, Elem)],
    ) -> Result<Self> {
        let n = objects.len();
        let mut m = Matrix::bottom(&base, objects.types().to_vec(), objects.types().to_vec());
        for &(r, c, e) in entries {
            if r >= n || c >= n {
                return Err(Error::Parse(format!("hom entry ({r}, {c}) out of range")));
            }
            m.set(r, c, e);
        }
        Self::new(base, objects, m.data().to_vec())
    }

    pub(crate) fn from_matrix_unchecked(base: Arc<Quantaloid>, objects: TypedSet, hom: Matrix) -> Self {
        SemiCategory { base, objects, hom }
    }

    fn composition_failure(&self) -> Option<[usize; 3]> {
        let q = &*self.base;
        let n = self.len();
        for a2 in 0..n {
            for a1 in 0..n {
                for a0 in 0..n {
                    let (t2, t1, t0) = (self.ty(a2), self.ty(a1), self.ty(a0));
                    let c = q.comp(t0, t1, t2, self.hom(a2, a1), self.hom(a1, a0));
                    if !q.hom(t0, t2).leq(c, self.hom(a2, a0)) {
                        return Some([a2, a1, a0]);
                    }
                }
            }
        }
        None
    }

    /// The one-object category `*_X` with hom `1_X`.
    pub fn unit(base: Arc<Quantaloid>, x: ObjId) -> Self {
        let id = base.identity(x);
        let objects = TypedSet {
            names: vec!["*".to_string()],
            types: vec![x],
        };
        SemiCategory {
            hom: Matrix::new(vec![x], vec![x], vec![id]),
            base,
            objects,
        }
    }

    /// The empty semicategory.
    pub fn empty(base: Arc<Quantaloid>) -> Self {
        SemiCategory {
            hom: Matrix::new(vec![], vec![], vec![]),
            base,
            objects: TypedSet {
                names: vec![],
                types: vec![],
            },
        }
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.base
    }

    pub fn objects(&self) -> &TypedSet {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn ty(&self, a: usize) -> ObjId {
        self.objects.types[a]
    }

    pub fn types(&self) -> &[ObjId] {
        &self.objects.types
    }

    pub fn name(&self, a: usize) -> &str {
        &self.objects.names[a]
    }

    /// The element of `A(a', a)`.
    pub fn hom(&self, a_prime: usize, a: usize) -> Elem {
        self.hom.get(a_prime, a)
    }

    pub fn hom_arrow(&self, a_prime: usize, a: usize) -> QArrow {
        self.hom.arrow(a_prime, a)
    }

    pub fn hom_matrix(&self) -> &Matrix {
        &self.hom
    }

    /// Unit-inequalities `1_ta <= A(a, a)` for every object.
    pub fn is_category(&self) -> bool {
        self.first_non_unital().is_none()
    }

    pub fn first_non_unital(&self) -> Option<usize> {
        (0..self.len()).find(|&a| {
            let t = self.ty(a);
            !self.base.hom(t, t).leq(self.base.identity(t), self.hom(a, a))
        })
    }

    /// The free category: `A(a, a) v 1_ta` on the diagonal.
    pub fn free_category(&self) -> SemiCategory {
        let mut hom = self.hom.clone();
        for a in 0..self.len() {
            let t = self.ty(a);
            let l = self.base.hom(t, t);
            hom.set(a, a, l.join(self.hom(a, a), self.base.identity(t)));
        }
        SemiCategory {
            base: self.base.clone(),
            objects: self.objects.clone(),
            hom,
        }
    }

    /// `A . A = A`: every hom interpolates.
    pub fn is_regular(&self) -> bool {
        Matrix::compose(&self.base, &self.hom, &self.hom).expect("square") == self.hom
    }

    /// The semicategory as an endo-semidistributor on itself.
    pub fn identity_semidist(self: &Arc<Self>) -> SemiDistributor {
        SemiDistributor {
            dom: self.clone(),
            cod: self.clone(),
            mat: self.hom.clone(),
        }
    }

    /// A copy with objects permuted: new object `i` is old object `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SemiCategory {
        let n = self.len();
        let objects = TypedSet {
            names: perm.iter().map(|&p| self.objects.names[p].clone()).collect(),
            types: perm.iter().map(|&p| self.objects.types[p]).collect(),
        };
        let mut data = Vec::with_capacity(n * n);
        for &r in perm {
            for &c in perm {
                data.push(self.hom(r, c));
            }
        }
        SemiCategory {
            base: self.base.clone(),
            hom: Matrix::new(objects.types.clone(), objects.types.clone(), data),
            objects,
        }
    }
}

/// A typed matrix `Phi(b, a): ta -> tb` between semicategories satisfying
/// both action-inequalities.
#[derive(Debug, Clone)]
pub struct SemiDistributor {
    dom: Arc<SemiCategory>,
    cod: Arc<SemiCategory>,
    mat: Matrix,
}

impl PartialEq for SemiDistributor {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
            && (Arc::ptr_eq(&self.dom, &other.dom) || self.dom == other.dom)
            && (Arc::ptr_eq(&self.cod, &other.cod) || self.cod == other.cod)
    }
}

impl Eq for SemiDistributor {}

fn check_same_base(a: &SemiCategory, b: &SemiCategory) -> Result<()> {
    if !same_base(&a.base, &b.base) {
        return Err(Error::TypeMismatch("semicategories over different bases".into()));
    }
    Ok(())
}

fn require_regular(what: &str, a: &SemiCategory) -> Result<()> {
    if !a.is_regular() {
        return Err(Error::NotRegular(format!("{what} is not a regular semicategory")));
    }
    Ok(())
}

impl SemiDistributor {
    pub fn new(dom: Arc<SemiCategory>, cod: Arc<SemiCategory>, data: Vec<Elem>) -> Result<Self> {
        check_same_base(&dom, &cod)?;
        let mat = Matrix::checked(&dom.base, cod.types().to_vec(), dom.types().to_vec(), data)?;
        let d = SemiDistributor { dom, cod, mat };
        d.check_actions()?;
        Ok(d)
    }

    pub fn from_matrix(dom: Arc<SemiCategory>, cod: Arc<SemiCategory>, mat: Matrix) -> Result<Self> {
        if mat.rows() != cod.types() || mat.cols() != dom.types() {
            return Err(Error::TypeMismatch("matrix shape does not match endpoints".into()));
        }
        Self::new(dom, cod, mat.data().to_vec())
    }

    /// Sparse `(b, a, elem)` entries; the rest is bottom.
    pub fn from_entries(
        dom: Arc<SemiCategory>,
        cod: Arc<SemiCategory>,
        entries: &[(usize, usize, Elem)],
    ) -> Result<Self> {
        check_same_base(&dom, &cod)?;
        let mut m = Matrix::bottom(&dom.base, cod.types().to_vec(), dom.types().to_vec());
        for &(r, c, e) in entries {
            if r >= cod.len() || c >= dom.len() {
                return Err(Error::Parse(format!("entry ({r}, {c}) out of range")));
            }
            m.set(r, c, e);
        }
        Self::new(dom, cod, m.data().to_vec())
    }

    pub(crate) fn from_matrix_unchecked(dom: Arc<SemiCategory>, cod: Arc<SemiCategory>, mat: Matrix) -> Self {
        debug_assert_eq!(mat.rows(), cod.types());
        debug_assert_eq!(mat.cols(), dom.types());
        SemiDistributor { dom, cod, mat }
    }

    fn check_actions(&self) -> Result<()> {
        let q = self.base();
        let (a, b) = (&*self.dom, &*self.cod);
        for bi in 0..b.len() {
            for ai in 0..a.len() {
                let (tb, ta) = (b.ty(bi), a.ty(ai));
                let target = self.get(bi, ai);
                let l = q.hom(ta, tb);
                for a1 in 0..a.len() {
                    let v = q.comp(ta, a.ty(a1), tb, self.get(bi, a1), a.hom(a1, ai));
                    if !l.leq(v, target) {
                        return Err(Error::ActionFailure {
                            side: Side::Right,
                            witness: [bi, ai, a1],
                        });
                    }
                }
                for b1 in 0..b.len() {
                    let v = q.comp(ta, b.ty(b1), tb, b.hom(bi, b1), self.get(b1, ai));
                    if !l.leq(v, target) {
                        return Err(Error::ActionFailure {
                            side: Side::Left,
                            witness: [bi, ai, b1],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn bottom(dom: Arc<SemiCategory>, cod: Arc<SemiCategory>) -> Result<Self> {
        check_same_base(&dom, &cod)?;
        let mat = Matrix::bottom(&dom.base, cod.types().to_vec(), dom.types().to_vec());
        Ok(SemiDistributor { dom, cod, mat })
    }

    pub fn base(&self) -> &Quantaloid {
        &self.dom.base
    }

    pub fn dom(&self) -> &Arc<SemiCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<SemiCategory> {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    /// `Phi(b, a)`.
    pub fn get(&self, b: usize, a: usize) -> Elem {
        self.mat.get(b, a)
    }

    /// `(psi (x) phi)(c, a) = V_b psi(c, b) o phi(b, a)`.
    pub fn compose(psi: &SemiDistributor, phi: &SemiDistributor) -> Result<SemiDistributor> {
        if !(Arc::ptr_eq(&psi.dom, &phi.cod) || psi.dom == phi.cod) {
            return Err(Error::TypeMismatch(
                "composite needs cod(phi) = dom(psi)".into(),
            ));
        }
        let mat = Matrix::compose(phi.base(), &psi.mat, &phi.mat)?;
        Ok(SemiDistributor {
            dom: phi.dom.clone(),
            cod: psi.cod.clone(),
            mat,
        })
    }

    /// Entrywise join; the empty family gives the all-bottom matrix.
    pub fn sup(
        dom: Arc<SemiCategory>,
        cod: Arc<SemiCategory>,
        family: &[SemiDistributor],
    ) -> Result<SemiDistributor> {
        let mut acc = Self::bottom(dom, cod)?;
        for phi in family {
            if !acc.parallel(phi) {
                return Err(Error::TypeMismatch("supremum of non-parallel semidistributors".into()));
            }
            acc.mat = Matrix::join(phi.base(), &acc.mat, &phi.mat)?;
        }
        Ok(acc)
    }

    pub fn parallel(&self, other: &SemiDistributor) -> bool {
        (Arc::ptr_eq(&self.dom, &other.dom) || self.dom == other.dom)
            && (Arc::ptr_eq(&self.cod, &other.cod) || self.cod == other.cod)
    }

    /// Entrywise order between parallel semidistributors.
    pub fn leq(&self, other: &SemiDistributor) -> bool {
        self.parallel(other) && Matrix::leq(self.base(), &self.mat, &other.mat)
    }

    /// Lifting in distributors between the free categories:
    /// `[psi, phi](c, a) = /\_b [psi(b, c), phi(b, a)]` for `psi: C => B`,
    /// `phi: A => B`; the result is `A => C`.
    pub fn lifting_dist(psi: &SemiDistributor, phi: &SemiDistributor) -> Result<SemiDistributor> {
        if !(Arc::ptr_eq(&psi.cod, &phi.cod) || psi.cod == phi.cod) {
            return Err(Error::TypeMismatch("lifting needs a common codomain".into()));
        }
        let mat = Matrix::lift(phi.base(), &psi.mat, &phi.mat)?;
        Ok(SemiDistributor {
            dom: phi.dom.clone(),
            cod: psi.dom.clone(),
            mat,
        })
    }

    /// Lifting in regular semidistributors: `C (x) [psi, phi] (x) A`.
    pub fn lifting_rsdist(psi: &SemiDistributor, phi: &SemiDistributor) -> Result<SemiDistributor> {
        require_regular("domain of phi", &phi.dom)?;
        require_regular("codomain", &phi.cod)?;
        require_regular("domain of psi", &psi.dom)?;
        if !psi.is_regular() || !phi.is_regular() {
            return Err(Error::NotRegular("lifting_rsdist needs regular semidistributors".into()));
        }
        let l = Self::lifting_dist(psi, phi)?;
        let left = Self::compose(&psi.dom.identity_semidist(), &l)?;
        Self::compose(&left, &phi.dom.identity_semidist())
    }

    /// Extension `{psi, phi}` between free categories, for `psi: A => C`,
    /// `phi: A => B`; the result is `C => B`.
    pub fn extension_dist(psi: &SemiDistributor, phi: &SemiDistributor) -> Result<SemiDistributor> {
        if !(Arc::ptr_eq(&psi.dom, &phi.dom) || psi.dom == phi.dom) {
            return Err(Error::TypeMismatch("extension needs a common domain".into()));
        }
        let mat = Matrix::extend(phi.base(), &psi.mat, &phi.mat)?;
        Ok(SemiDistributor {
            dom: psi.cod.clone(),
            cod: phi.cod.clone(),
            mat,
        })
    }

    /// `Phi (x) A = Phi = B (x) Phi`.
    pub fn is_regular(&self) -> bool {
        let q = self.base();
        Matrix::compose(q, &self.mat, &self.dom.hom).expect("typed") == self.mat
            && Matrix::compose(q, &self.cod.hom, &self.mat).expect("typed") == self.mat
    }

    /// `phi -| psi` in regular semidistributors: `psi (x) phi >= A` and
    /// `phi (x) psi <= B`.
    pub fn is_adjoint_pair(phi: &SemiDistributor, psi: &SemiDistributor) -> Result<bool> {
        require_regular("domain", &phi.dom)?;
        require_regular("codomain", &phi.cod)?;
        if !phi.is_regular() || !psi.is_regular() {
            return Err(Error::NotRegular("adjoint pairs live among regular semidistributors".into()));
        }
        let unit = Self::compose(psi, phi)?;
        let counit = Self::compose(phi, psi)?;
        let q = phi.base();
        Ok(Matrix::leq(q, &phi.dom.hom, &unit.mat) && Matrix::leq(q, &counit.mat, &phi.cod.hom))
    }

    /// The right adjoint of `phi: A => B`, if any: the largest `psi` with
    /// `phi (x) psi <= B`, kept only if `psi (x) phi >= A`.
    pub fn right_adjoint(&self) -> Result<Option<SemiDistributor>> {
        let candidate = Self::lifting_rsdist(self, &self.cod.identity_semidist())?;
        let unit = Self::compose(&candidate, self)?;
        if Matrix::leq(self.base(), &self.dom.hom, &unit.mat) {
            Ok(Some(candidate))
        } else {
            Ok(None)
        }
    }
}

/// Every semidistributor `dom => cod`, in lexicographic order of entries.
pub fn all_semidistributors(
    dom: &Arc<SemiCategory>,
    cod: &Arc<SemiCategory>,
    cap: u128,
) -> Result<Vec<SemiDistributor>> {
    enumerate_matrices(dom, cod, cap, |_| true)
}

/// Every regular semidistributor `dom => cod`, in lexicographic order.
pub fn all_regular_semidistributors(
    dom: &Arc<SemiCategory>,
    cod: &Arc<SemiCategory>,
    cap: u128,
) -> Result<Vec<SemiDistributor>> {
    enumerate_matrices(dom, cod, cap, |d| d.is_regular())
}

fn enumerate_matrices(
    dom: &Arc<SemiCategory>,
    cod: &Arc<SemiCategory>,
    cap: u128,
    keep: impl Fn(&SemiDistributor) -> bool,
) -> Result<Vec<SemiDistributor>> {
    check_same_base(dom, cod)?;
    let q = dom.base.clone();
    let sizes: Vec<usize> = cod
        .types()
        .iter()
        .flat_map(|&tb| dom.types().iter().map(move |&ta| (ta, tb)))
        .map(|(ta, tb)| q.hom(ta, tb).size())
        .collect();
    enumerate::check_cap(&sizes, cap)?;
    let mut out = Vec::new();
    for_each_assignment(&sizes, |v| {
        let d = SemiDistributor {
            dom: dom.clone(),
            cod: cod.clone(),
            mat: Matrix::new(cod.types().to_vec(), dom.types().to_vec(), v.to_vec()),
        };
        if d.check_actions().is_ok() && keep(&d) {
            out.push(d);
        }
        true
    });
    Ok(out)
}

/// A type-preserving object map with `A(a', a) <= B(Fa', Fa)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiFunctor {
    dom: Arc<SemiCategory>,
    cod: Arc<SemiCategory>,
    map: Vec<usize>,
}

impl SemiFunctor {
    pub fn new(dom: Arc<SemiCategory>, cod: Arc<SemiCategory>, map: Vec<usize>) -> Result<Self> {
        check_same_base(&dom, &cod)?;
        if map.len() != dom.len() {
            return Err(Error::TypeMismatch("object map has the wrong length".into()));
        }
        for (a, &fa) in map.iter().enumerate() {
            if fa >= cod.len() {
                return Err(Error::TypeMismatch(format!("object {a} mapped out of range")));
            }
            if dom.ty(a) != cod.ty(fa) {
                return Err(Error::TypeMismatch(format!(
                    "object {} of type {} mapped to {} of type {}",
                    dom.name(a),
                    dom.ty(a),
                    cod.name(fa),
                    cod.ty(fa)
                )));
            }
        }
        let q = dom.base.clone();
        for a1 in 0..dom.len() {
            for a0 in 0..dom.len() {
                let l = q.hom(dom.ty(a0), dom.ty(a1));
                if !l.leq(dom.hom(a1, a0), cod.hom(map[a1], map[a0])) {
                    return Err(Error::ActionFailure {
                        side: Side::Left,
                        witness: [a1, a0, 0],
                    });
                }
            }
        }
        Ok(SemiFunctor { dom, cod, map })
    }

    pub fn identity(a: &Arc<SemiCategory>) -> Self {
        SemiFunctor {
            dom: a.clone(),
            cod: a.clone(),
            map: (0..a.len()).collect(),
        }
    }

    pub fn dom(&self) -> &Arc<SemiCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<SemiCategory> {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `G o F`.
    pub fn then(&self, g: &SemiFunctor) -> Result<SemiFunctor> {
        if !(Arc::ptr_eq(&self.cod, &g.dom) || *self.cod == *g.dom) {
            return Err(Error::TypeMismatch("semifunctors not composable".into()));
        }
        Ok(SemiFunctor {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            map: self.map.iter().map(|&b| g.map[b]).collect(),
        })
    }

    /// `(B(-, F-): A => B, B(F-, -): B => A)`.
    pub fn graph_semidists(&self) -> (SemiDistributor, SemiDistributor) {
        let (a, b) = (&self.dom, &self.cod);
        let mut fwd = Vec::with_capacity(a.len() * b.len());
        for bi in 0..b.len() {
            for ai in 0..a.len() {
                fwd.push(b.hom(bi, self.map[ai]));
            }
        }
        let mut bwd = Vec::with_capacity(a.len() * b.len());
        for ai in 0..a.len() {
            for bi in 0..b.len() {
                bwd.push(b.hom(self.map[ai], bi));
            }
        }
        (
            SemiDistributor {
                dom: a.clone(),
                cod: b.clone(),
                mat: Matrix::new(b.types().to_vec(), a.types().to_vec(), fwd),
            },
            SemiDistributor {
                dom: b.clone(),
                cod: a.clone(),
                mat: Matrix::new(a.types().to_vec(), b.types().to_vec(), bwd),
            },
        )
    }

    /// Both graph semidistributors are regular.
    pub fn is_regular(&self) -> bool {
        let (fwd, bwd) = self.graph_semidists();
        fwd.is_regular() && bwd.is_regular()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: Elem = 1;
    const ONE: Elem = 2;

    fn three() -> Arc<Quantaloid> {
        Arc::new(Quantaloid::three())
    }

    fn two() -> Arc<Quantaloid> {
        Arc::new(Quantaloid::two())
    }

    fn point(q: &Arc<Quantaloid>, e: Elem) -> Arc<SemiCategory> {
        Arc::new(SemiCategory::new(q.clone(), TypedSet::numbered(1, 0), vec![e]).unwrap())
    }

    /// Strict order `0 < 1` over 2, with `A(a, b) = 1` iff `a < b`.
    fn strict_pair() -> Arc<SemiCategory> {
        Arc::new(SemiCategory::from_entries(two(), TypedSet::numbered(2, 0), &[(0, 1, 1)]).unwrap())
    }

    #[test]
    fn semicategory_examples() {
        let q = three();
        let a = point(&q, E);
        assert!(!a.is_category());
        assert!(a.is_regular());
        assert!(point(&q, ONE).is_category());
        let s = strict_pair();
        assert!(!s.is_category());
        assert!(!s.is_regular());
        let pre = SemiCategory::from_entries(
            two(),
            TypedSet::numbered(2, 0),
            &[(0, 0, 1), (1, 1, 1), (0, 1, 1)],
        )
        .unwrap();
        assert!(pre.is_category());
    }

    #[test]
    fn composition_failure_has_witness() {
        // 0 < 1 < 2 without 0 < 2.
        let err = SemiCategory::from_entries(two(), TypedSet::numbered(3, 0), &[(0, 1, 1), (1, 2, 1)])
            .unwrap_err();
        assert_eq!(err, Error::CompositionFailure([0, 1, 2]));
    }

    #[test]
    fn free_category_examples() {
        let q = three();
        assert_eq!(point(&q, E).free_category().hom(0, 0), ONE);
        let s = strict_pair().free_category();
        assert_eq!(s.hom_matrix().data(), &[1, 1, 0, 1]);
        let c = point(&q, ONE);
        assert_eq!(c.free_category(), *c);
    }

    #[test]
    fn compose_and_sup_on_three_chain() {
        let q = three();
        let a = point(&q, E);
        let e = SemiDistributor::new(a.clone(), a.clone(), vec![E]).unwrap();
        assert_eq!(SemiDistributor::compose(&e, &e).unwrap().get(0, 0), E);
        let zero = SemiDistributor::bottom(a.clone(), a.clone()).unwrap();
        assert_eq!(SemiDistributor::compose(&zero, &e).unwrap(), zero);
        let s = SemiDistributor::sup(a.clone(), a.clone(), &[zero.clone(), e.clone()]).unwrap();
        assert_eq!(s, e);
        assert_eq!(SemiDistributor::sup(a.clone(), a.clone(), &[]).unwrap(), zero);
        assert_eq!(SemiDistributor::sup(a.clone(), a.clone(), std::slice::from_ref(&e)).unwrap(), e);
        assert_eq!(a.identity_semidist(), e);
    }

    #[test]
    fn action_failure_detected() {
        let q = three();
        let a = point(&q, ONE);
        let b = point(&q, E);
        assert!(SemiDistributor::new(a.clone(), b.clone(), vec![ONE]).is_ok());
        let s = strict_pair();
        // B(0,1) o Phi(1,0) <= Phi(0,0) fails first.
        let err = SemiDistributor::from_entries(s.clone(), s.clone(), &[(1, 0, 1)]).unwrap_err();
        assert_eq!(
            err,
            Error::ActionFailure {
                side: Side::Left,
                witness: [0, 0, 1]
            }
        );
        // Phi(1,0) o A(0,1) <= Phi(1,1) fails when the left side holds.
        let err = SemiDistributor::from_entries(s.clone(), s.clone(), &[(0, 0, 1), (1, 0, 1)]).unwrap_err();
        assert_eq!(
            err,
            Error::ActionFailure {
                side: Side::Right,
                witness: [0, 1, 0]
            }
        );
    }

    #[test]
    fn lifting_dist_three_chain() {
        let q = three();
        let a = point(&q, E);
        let psi = SemiDistributor::new(a.clone(), a.clone(), vec![E]).unwrap();
        let phi = SemiDistributor::bottom(a.clone(), a.clone()).unwrap();
        assert_eq!(SemiDistributor::lifting_dist(&psi, &phi).unwrap().get(0, 0), 0);
    }

    #[test]
    fn lifting_rsdist_on_unit_categories() {
        let q = three();
        let unit = Arc::new(SemiCategory::unit(q.clone(), 0));
        let b = point(&q, E);
        let psi = SemiDistributor::new(unit.clone(), b.clone(), vec![E]).unwrap();
        let phi = SemiDistributor::new(unit.clone(), b.clone(), vec![0]).unwrap();
        let rs = SemiDistributor::lifting_rsdist(&psi, &phi).unwrap();
        assert_eq!(rs, SemiDistributor::lifting_dist(&psi, &phi).unwrap());
        assert_eq!(rs.get(0, 0), 0);
    }

    #[test]
    fn regular_semidistributors() {
        let q = three();
        let a = point(&q, E);
        assert!(a.identity_semidist().is_regular());
        let unit = Arc::new(SemiCategory::unit(q.clone(), 0));
        let one = SemiDistributor::new(unit.clone(), a.clone(), vec![ONE]).unwrap();
        assert!(!one.is_regular());
        assert!(SemiDistributor::bottom(unit, a).unwrap().is_regular());
    }

    #[test]
    fn adjoints_three_chain() {
        let q = three();
        let a = point(&q, E);
        let e = a.identity_semidist();
        assert!(SemiDistributor::is_adjoint_pair(&e, &e).unwrap());
        let zero = SemiDistributor::bottom(a.clone(), a.clone()).unwrap();
        assert!(!SemiDistributor::is_adjoint_pair(&zero, &zero).unwrap());
        assert_eq!(e.right_adjoint().unwrap(), Some(e.clone()));
        assert_eq!(zero.right_adjoint().unwrap(), None);
    }

    #[test]
    fn not_regular_inputs_rejected() {
        let s = strict_pair();
        let id = s.identity_semidist();
        assert!(matches!(id.right_adjoint(), Err(Error::NotRegular(_))));
    }

    #[test]
    fn identity_semifunctor_regular_iff_semicategory_regular() {
        let q = three();
        let a = point(&q, E);
        assert!(SemiFunctor::identity(&a).is_regular());
        let s = strict_pair();
        assert!(!SemiFunctor::identity(&s).is_regular());
    }

    #[test]
    fn inclusion_into_free_category_not_regular() {
        let q = three();
        let a = point(&q, E);
        let free = Arc::new(a.free_category());
        let i = SemiFunctor::new(a.clone(), free.clone(), vec![0]).unwrap();
        assert!(!i.is_regular());
        let (fwd, bwd) = i.graph_semidists();
        assert!(!fwd.is_regular());
        assert!(!bwd.is_regular());
    }

    #[test]
    fn graph_of_order_embedding() {
        // {0} into the 2-chain 0 <= 1 (reflexive), at 1.
        let q = two();
        let a = Arc::new(SemiCategory::from_entries(q.clone(), TypedSet::numbered(1, 0), &[(0, 0, 1)]).unwrap());
        let b = Arc::new(
            SemiCategory::from_entries(q.clone(), TypedSet::numbered(2, 0), &[(0, 0, 1), (1, 1, 1), (0, 1, 1)])
                .unwrap(),
        );
        let f = SemiFunctor::new(a, b, vec![1]).unwrap();
        let (fwd, bwd) = f.graph_semidists();
        // b <= F0 = 1 for both b; F0 = 1 <= b only for b = 1.
        assert_eq!(fwd.matrix().data(), &[1, 1]);
        assert_eq!(bwd.matrix().data(), &[0, 1]);
        assert!(SemiDistributor::is_adjoint_pair(&fwd, &bwd).unwrap());
    }

    #[test]
    fn semifunctor_errors() {
        let s = strict_pair();
        // Swapping the two points breaks 0 < 1.
        assert!(matches!(
            SemiFunctor::new(s.clone(), s.clone(), vec![1, 0]),
            Err(Error::ActionFailure { .. })
        ));
        assert!(matches!(
            SemiFunctor::new(s.clone(), s.clone(), vec![0]),
            Err(Error::TypeMismatch(_))
        ));
    }
}

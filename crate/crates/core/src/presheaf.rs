//! Presheaves on a semicategory and the Q-categories they form.
//!
//! A contravariant presheaf of type `X` on `A` is a semidistributor
//! `*_X => A`, i.e. values `phi(a): X -> ta` with
//! `A(a, a') o phi(a') <= phi(a)`. Covariant presheaves are semidistributors
//! `A => *_X`. All presheaves form a Q-category `PA`; the regular ones
//! (`A (x) phi = phi`) form `RA` and the Yoneda ones (`[A, phi] = phi`)
//! form `YA`. For regular `A` the maps `i: RA -> PA`, `j = A (x) -`,
//! `k = [A, -]` are adjoint, `i -| j -| k`.

use std::fmt;
use std::sync::Arc;

use crate::enumerate::{self, for_each_assignment};
use crate::error::{Error, Result};
use crate::lattice::Elem;
use crate::matrix::Matrix;
use crate::quantaloid::{ObjId, QArrow, Quantaloid};
use crate::semicat::{SemiCategory, SemiDistributor, SemiFunctor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variance {
    Contravariant,
    Covariant,
}

impl fmt::Display for Variance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variance::Contravariant => f.write_str("contra"),
            Variance::Covariant => f.write_str("co"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Presheaf {
    carrier: Arc<SemiCategory>,
    ty: ObjId,
    variance: Variance,
    values: Vec<Elem>,
}

impl PartialEq for Presheaf {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
            && self.variance == other.variance
            && self.values == other.values
            && (Arc::ptr_eq(&self.carrier, &other.carrier) || self.carrier == other.carrier)
    }
}

impl Eq for Presheaf {}

impl Presheaf {
    pub fn new(
        carrier: Arc<SemiCategory>,
        ty: ObjId,
        variance: Variance,
        values: Vec<Elem>,
    ) -> Result<Self> {
        if ty >= carrier.base().len() {
            return Err(Error::TypeMismatch(format!("presheaf type {ty} not in base")));
        }
        if values.len() != carrier.len() {
            return Err(Error::TypeMismatch("one value per object expected".into()));
        }
        let p = Presheaf {
            carrier,
            ty,
            variance,
            values,
        };
        let q = p.carrier.base().clone();
        for a in 0..p.values.len() {
            if p.values[a] >= p.value_hom_size(&q, a) {
                return Err(Error::TypeMismatch(format!("value at object {a} out of range")));
            }
        }
        if let Some(w) = p.action_failure() {
            return Err(Error::ActionFailure {
                side: match variance {
                    Variance::Contravariant => crate::error::Side::Left,
                    Variance::Covariant => crate::error::Side::Right,
                },
                witness: [w.0, w.1, 0],
            });
        }
        Ok(p)
    }

    fn value_hom_size(&self, q: &Quantaloid, a: usize) -> usize {
        let ta = self.carrier.ty(a);
        match self.variance {
            Variance::Contravariant => q.hom(self.ty, ta).size(),
            Variance::Covariant => q.hom(ta, self.ty).size(),
        }
    }

    fn action_failure(&self) -> Option<(usize, usize)> {
        let a = &*self.carrier;
        let q = a.base();
        let x = self.ty;
        for i in 0..a.len() {
            for j in 0..a.len() {
                let (ti, tj) = (a.ty(i), a.ty(j));
                let ok = match self.variance {
                    // A(i, j) o phi(j) <= phi(i)
                    Variance::Contravariant => q
                        .hom(x, ti)
                        .leq(q.comp(x, tj, ti, a.hom(i, j), self.values[j]), self.values[i]),
                    // phi(j) o A(j, i) <= phi(i)
                    Variance::Covariant => q
                        .hom(ti, x)
                        .leq(q.comp(ti, tj, x, self.values[j], a.hom(j, i)), self.values[i]),
                };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub(crate) fn from_matrix_unchecked(carrier: Arc<SemiCategory>, variance: Variance, m: &Matrix) -> Self {
        let (ty, values) = match variance {
            Variance::Contravariant => (m.cols()[0], m.column(0).data().to_vec()),
            Variance::Covariant => (m.rows()[0], m.row(0).data().to_vec()),
        };
        Presheaf {
            carrier,
            ty,
            variance,
            values,
        }
    }

    /// The representable `A(-, a)` (contravariant) or `A(a, -)` (covariant).
    pub fn representable(carrier: &Arc<SemiCategory>, a: usize, variance: Variance) -> Self {
        let values = (0..carrier.len())
            .map(|x| match variance {
                Variance::Contravariant => carrier.hom(x, a),
                Variance::Covariant => carrier.hom(a, x),
            })
            .collect();
        Presheaf {
            carrier: carrier.clone(),
            ty: carrier.ty(a),
            variance,
            values,
        }
    }

    pub fn carrier(&self) -> &Arc<SemiCategory> {
        &self.carrier
    }

    pub fn ty(&self) -> ObjId {
        self.ty
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn value(&self, a: usize) -> Elem {
        self.values[a]
    }

    pub fn value_arrow(&self, a: usize) -> QArrow {
        let ta = self.carrier.ty(a);
        match self.variance {
            Variance::Contravariant => QArrow::new(self.ty, ta, self.values[a]),
            Variance::Covariant => QArrow::new(ta, self.ty, self.values[a]),
        }
    }

    /// Column matrix `*_X => A` or row matrix `A => *_X`.
    pub fn to_matrix(&self) -> Matrix {
        let types = self.carrier.types().to_vec();
        match self.variance {
            Variance::Contravariant => Matrix::new(types, vec![self.ty], self.values.clone()),
            Variance::Covariant => Matrix::new(vec![self.ty], types, self.values.clone()),
        }
    }

    pub fn unit_category(&self) -> Arc<SemiCategory> {
        Arc::new(SemiCategory::unit(self.carrier.base().clone(), self.ty))
    }

    /// The presheaf as a semidistributor `*_X => A` or `A => *_X`.
    pub fn as_semidist(&self) -> SemiDistributor {
        let unit = self.unit_category();
        match self.variance {
            Variance::Contravariant => {
                SemiDistributor::from_matrix_unchecked(unit, self.carrier.clone(), self.to_matrix())
            }
            Variance::Covariant => {
                SemiDistributor::from_matrix_unchecked(self.carrier.clone(), unit, self.to_matrix())
            }
        }
    }

    /// `A (x) phi = phi` (contravariant) or `phi (x) A = phi` (covariant).
    pub fn is_regular(&self) -> bool {
        apply_j(self) == self.values
    }

    /// `[A, phi] = phi` (contravariant) or `{A, phi} = phi` (covariant):
    /// `phi(a)` is recovered by homming out of the representable at `a`.
    pub fn is_yoneda(&self) -> bool {
        apply_k(self) == self.values
    }

    /// Entrywise order; only meaningful for presheaves of one type.
    pub fn leq(&self, other: &Presheaf) -> bool {
        self.ty == other.ty
            && self.variance == other.variance
            && (0..self.values.len()).all(|a| {
                let t = self.value_arrow(a);
                self.carrier.base().hom(t.dom, t.cod).leq(self.values[a], other.values[a])
            })
    }

    /// Short tag: type name and values, e.g. `*(0,1)`.
    pub fn tag(&self) -> String {
        let q = self.carrier.base();
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("{}({})", q.object_name(self.ty), vals.join(","))
    }
}

fn apply_j(p: &Presheaf) -> Vec<Elem> {
    let a = &p.carrier;
    let q = a.base();
    let m = p.to_matrix();
    let out = match p.variance {
        Variance::Contravariant => Matrix::compose(q, a.hom_matrix(), &m),
        Variance::Covariant => Matrix::compose(q, &m, a.hom_matrix()),
    }
    .expect("typed");
    out.data().to_vec()
}

fn apply_k(p: &Presheaf) -> Vec<Elem> {
    let a = &p.carrier;
    let q = a.base();
    let m = p.to_matrix();
    let out = match p.variance {
        Variance::Contravariant => Matrix::lift(q, a.hom_matrix(), &m),
        Variance::Covariant => Matrix::extend(q, a.hom_matrix(), &m),
    }
    .expect("typed");
    out.data().to_vec()
}

/// `yoneda(A, a) = A(-, a)`.
pub fn yoneda(a: &Arc<SemiCategory>, obj: usize) -> Presheaf {
    Presheaf::representable(a, obj, Variance::Contravariant)
}

/// `A(a, -)`.
pub fn coyoneda(a: &Arc<SemiCategory>, obj: usize) -> Presheaf {
    Presheaf::representable(a, obj, Variance::Covariant)
}

/// All presheaves of type `ty`, in lexicographic order of their values.
pub fn enumerate_presheaves(
    a: &Arc<SemiCategory>,
    ty: ObjId,
    variance: Variance,
    cap: u128,
) -> Result<Vec<Presheaf>> {
    let q = a.base().clone();
    if ty >= q.len() {
        return Err(Error::TypeMismatch(format!("presheaf type {ty} not in base")));
    }
    let sizes: Vec<usize> = a
        .types()
        .iter()
        .map(|&t| match variance {
            Variance::Contravariant => q.hom(ty, t).size(),
            Variance::Covariant => q.hom(t, ty).size(),
        })
        .collect();
    enumerate::check_cap(&sizes, cap)?;
    let mut out = Vec::new();
    for_each_assignment(&sizes, |v| {
        let p = Presheaf {
            carrier: a.clone(),
            ty,
            variance,
            values: v.to_vec(),
        };
        if p.action_failure().is_none() {
            out.push(p);
        }
        true
    });
    Ok(out)
}

/// Presheaves of every type, grouped by type in object order.
pub fn enumerate_all(a: &Arc<SemiCategory>, variance: Variance, cap: u128) -> Result<Vec<Presheaf>> {
    let mut out = Vec::new();
    for ty in 0..a.base().len() {
        out.extend(enumerate_presheaves(a, ty, variance, cap)?);
    }
    Ok(out)
}

/// The hom of `PA` (or `P+A`) from `q` to `p`, an arrow `tq -> tp`.
///
/// Contravariant: `/\_a [p(a), q(a)]`. Covariant: `/\_a {q(a), p(a)}`.
pub fn presheaf_hom(p: &Presheaf, q: &Presheaf) -> Elem {
    debug_assert_eq!(p.variance, q.variance);
    let a = &p.carrier;
    let base = a.base();
    let (tp, tq) = (p.ty, q.ty);
    let l = base.hom(tq, tp);
    let mut acc = l.top();
    for x in 0..a.len() {
        let tx = a.ty(x);
        let v = match p.variance {
            Variance::Contravariant => base.lift(tq, tp, tx, p.values[x], q.values[x]),
            Variance::Covariant => base.extend(tx, tq, tp, q.values[x], p.values[x]),
        };
        acc = l.meet(acc, v);
    }
    acc
}

/// Regularity through the hom characterization: for every `psi` in `all`,
/// `PA(phi, psi) = /\_a [phi(a), PA(Y a, psi)]` (contravariant), dually
/// `P+A(psi, phi) = /\_a {phi(a), P+A(psi, Y+ a)}`.
pub fn is_regular_via_liftings(phi: &Presheaf, all: &[Presheaf]) -> bool {
    let a = &phi.carrier;
    let base = a.base();
    let reps: Vec<Presheaf> = (0..a.len())
        .map(|x| Presheaf::representable(a, x, phi.variance))
        .collect();
    let tphi = phi.ty;
    all.iter().all(|psi| {
        let tpsi = psi.ty;
        match phi.variance {
            Variance::Contravariant => {
                let l = base.hom(tpsi, tphi);
                let rhs = (0..a.len()).fold(l.top(), |acc, x| {
                    let via = presheaf_hom(&reps[x], psi);
                    l.meet(acc, base.lift(tpsi, tphi, a.ty(x), phi.values[x], via))
                });
                presheaf_hom(phi, psi) == rhs
            }
            Variance::Covariant => {
                let l = base.hom(tphi, tpsi);
                let rhs = (0..a.len()).fold(l.top(), |acc, x| {
                    let via = presheaf_hom(psi, &reps[x]);
                    l.meet(acc, base.extend(a.ty(x), tphi, tpsi, phi.values[x], via))
                });
                presheaf_hom(psi, phi) == rhs
            }
        }
    })
}

/// Same as [`is_regular_via_liftings`], enumerating all presheaves itself.
pub fn is_regular_via_liftings_enumerated(phi: &Presheaf, cap: u128) -> Result<bool> {
    let all = enumerate_all(&phi.carrier, phi.variance, cap)?;
    Ok(is_regular_via_liftings(phi, &all))
}

fn require_regular(a: &SemiCategory) -> Result<()> {
    if !a.is_regular() {
        return Err(Error::NotRegular("carrier semicategory is not regular".into()));
    }
    Ok(())
}

/// `j(psi) = A (x) psi` (dually `psi (x) A`); needs `A` regular.
pub fn map_j(psi: &Presheaf) -> Result<Presheaf> {
    require_regular(&psi.carrier)?;
    Ok(Presheaf {
        values: apply_j(psi),
        ..psi.clone()
    })
}

/// `k(theta) = [A, theta]` (dually `{A, theta}`); needs `A` and `theta`
/// regular.
pub fn map_k(theta: &Presheaf) -> Result<Presheaf> {
    require_regular(&theta.carrier)?;
    if !theta.is_regular() {
        return Err(Error::NotRegular("k is defined on regular presheaves".into()));
    }
    Ok(Presheaf {
        values: apply_k(theta),
        ..theta.clone()
    })
}

/// An object of a [`QCategoryView`].
#[derive(Debug, Clone)]
pub struct ViewObject {
    pub tag: String,
    pub ty: ObjId,
    pub payload: Option<Presheaf>,
}

/// A finite Q-category with an explicit hom table; `hom(i, j)` is an arrow
/// `t_j -> t_i`.
#[derive(Debug, Clone)]
pub struct QCategoryView {
    base: Arc<Quantaloid>,
    objects: Vec<ViewObject>,
    hom: Vec<Elem>,
}

impl QCategoryView {
    pub fn new(base: Arc<Quantaloid>, objects: Vec<ViewObject>, hom: Vec<Elem>) -> Self {
        assert_eq!(hom.len(), objects.len() * objects.len());
        QCategoryView { base, objects, hom }
    }

    fn from_presheaves(base: Arc<Quantaloid>, ps: Vec<Presheaf>, hom_of: impl Fn(&Presheaf, &Presheaf) -> Elem) -> Self {
        let n = ps.len();
        let mut hom = Vec::with_capacity(n * n);
        for p in &ps {
            for q in &ps {
                hom.push(hom_of(p, q));
            }
        }
        let objects = ps
            .into_iter()
            .map(|p| ViewObject {
                tag: p.tag(),
                ty: p.ty,
                payload: Some(p),
            })
            .collect();
        QCategoryView { base, objects, hom }
    }

    /// The semicategory's own objects and homs.
    pub fn from_semicategory(a: &SemiCategory) -> Self {
        let n = a.len();
        let objects = (0..n)
            .map(|i| ViewObject {
                tag: a.name(i).to_string(),
                ty: a.ty(i),
                payload: None,
            })
            .collect();
        QCategoryView {
            base: a.base().clone(),
            objects,
            hom: a.hom_matrix().data().to_vec(),
        }
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[ViewObject] {
        &self.objects
    }

    pub fn ty(&self, i: usize) -> ObjId {
        self.objects[i].ty
    }

    pub fn hom(&self, i: usize, j: usize) -> Elem {
        self.hom[i * self.objects.len() + j]
    }

    pub fn hom_arrow(&self, i: usize, j: usize) -> QArrow {
        QArrow::new(self.ty(j), self.ty(i), self.hom(i, j))
    }

    pub fn payload(&self, i: usize) -> Option<&Presheaf> {
        self.objects[i].payload.as_ref()
    }

    pub fn index_of(&self, p: &Presheaf) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| o.payload.as_ref() == Some(p))
    }

    /// Composition- and unit-inequalities of the hom table.
    pub fn is_q_category(&self) -> bool {
        let q = &*self.base;
        let n = self.len();
        for i in 0..n {
            let t = self.ty(i);
            if !q.hom(t, t).leq(q.identity(t), self.hom(i, i)) {
                return false;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ti, tj, tk) = (self.ty(i), self.ty(j), self.ty(k));
                    let c = q.comp(tk, tj, ti, self.hom(i, j), self.hom(j, k));
                    if !q.hom(tk, ti).leq(c, self.hom(i, k)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Full subcategory on the given objects, in the given order.
    pub fn full_subview(&self, keep: &[usize]) -> QCategoryView {
        let mut hom = Vec::with_capacity(keep.len() * keep.len());
        for &i in keep {
            for &j in keep {
                hom.push(self.hom(i, j));
            }
        }
        QCategoryView {
            base: self.base.clone(),
            objects: keep.iter().map(|&i| self.objects[i].clone()).collect(),
            hom,
        }
    }

    /// The view as a semicategory over the same base (a category when the
    /// view is one).
    pub fn to_semicategory(&self) -> SemiCategory {
        let mut names = Vec::with_capacity(self.len());
        for (i, o) in self.objects.iter().enumerate() {
            // Tags may repeat only in hand-built views; disambiguate.
            if names.contains(&o.tag) {
                names.push(format!("{}#{i}", o.tag));
            } else {
                names.push(o.tag.clone());
            }
        }
        let types: Vec<ObjId> = self.objects.iter().map(|o| o.ty).collect();
        let objects = crate::semicat::TypedSet::new(names.into_iter().zip(types.iter().copied()).collect())
            .expect("names made unique");
        SemiCategory::from_matrix_unchecked(
            self.base.clone(),
            objects,
            Matrix::new(types.clone(), types, self.hom.clone()),
        )
    }
}

/// `PA` (or `P+A`): every presheaf of every type.
pub fn build_pa(a: &Arc<SemiCategory>, variance: Variance, cap: u128) -> Result<QCategoryView> {
    let ps = enumerate_all(a, variance, cap)?;
    Ok(QCategoryView::from_presheaves(a.base().clone(), ps, presheaf_hom))
}

/// `RA` (or `R+A`): the full subcategory of regular presheaves.
pub fn build_ra(a: &Arc<SemiCategory>, variance: Variance, cap: u128) -> Result<QCategoryView> {
    let ps: Vec<Presheaf> = enumerate_all(a, variance, cap)?
        .into_iter()
        .filter(Presheaf::is_regular)
        .collect();
    Ok(QCategoryView::from_presheaves(a.base().clone(), ps, presheaf_hom))
}

/// `YA` (or `Y+A`): the full subcategory of Yoneda presheaves.
pub fn build_ya(a: &Arc<SemiCategory>, variance: Variance, cap: u128) -> Result<QCategoryView> {
    let ps: Vec<Presheaf> = enumerate_all(a, variance, cap)?
        .into_iter()
        .filter(Presheaf::is_yoneda)
        .collect();
    Ok(QCategoryView::from_presheaves(a.base().clone(), ps, presheaf_hom))
}

/// `RA` with homs computed as liftings among regular semidistributors,
/// `RA(psi, phi) = [psi, phi]` in the quantaloid of regular
/// semidistributors. Needs `A` regular.
pub fn build_ra_via_rsdist(a: &Arc<SemiCategory>, variance: Variance, cap: u128) -> Result<QCategoryView> {
    require_regular(a)?;
    let ps: Vec<Presheaf> = enumerate_all(a, variance, cap)?
        .into_iter()
        .filter(Presheaf::is_regular)
        .collect();
    let dists: Vec<SemiDistributor> = ps.iter().map(Presheaf::as_semidist).collect();
    let n = ps.len();
    let mut hom = Vec::with_capacity(n * n);
    for p in &dists {
        for q in &dists {
            let h = match variance {
                // [p, q]: *_tq => *_tp
                Variance::Contravariant => SemiDistributor::lifting_rsdist(p, q)?,
                // {p, q} among regular semidistributors: *_tp => *_tq; the
                // hom tq -> tp is the extension of p through q.
                Variance::Covariant => {
                    let e = SemiDistributor::extension_dist(q, p)?;
                    let left = SemiDistributor::compose(&p.cod().identity_semidist(), &e)?;
                    SemiDistributor::compose(&left, &q.cod().identity_semidist())?
                }
            };
            hom.push(h.get(0, 0));
        }
    }
    let objects = ps
        .into_iter()
        .map(|p| ViewObject {
            tag: p.tag(),
            ty: p.ty,
            payload: Some(p),
        })
        .collect();
    Ok(QCategoryView::new(a.base().clone(), objects, hom))
}

/// The `Theta`-weighted colimit of `F: C -> RA`, for `Theta: D => C`.
///
/// `f[c]` is the regular presheaf `F(c)`, of type `tc`. The result sends
/// `d` to `Phi_F (x) Theta(-, d)` where `Phi_F(a, c) = F(c)(a)`.
pub fn weighted_colimit_ra(
    a: &Arc<SemiCategory>,
    theta: &SemiDistributor,
    f: &[Presheaf],
) -> Result<Vec<Presheaf>> {
    require_regular(a)?;
    let c = theta.cod();
    if f.len() != c.len() {
        return Err(Error::TypeMismatch("F must give one presheaf per object of C".into()));
    }
    for (ci, p) in f.iter().enumerate() {
        if p.variance != Variance::Contravariant || p.ty != c.ty(ci) || !(Arc::ptr_eq(&p.carrier, a) || *p.carrier == **a) {
            return Err(Error::TypeMismatch(format!(
                "F({}) is not a contravariant presheaf of type {} on A",
                c.name(ci),
                c.ty(ci)
            )));
        }
        if !p.is_regular() {
            return Err(Error::NotRegular(format!("F({}) is not a regular presheaf", c.name(ci))));
        }
    }
    let columns: Vec<Matrix> = f.iter().map(Presheaf::to_matrix).collect();
    let graph = Matrix::from_columns(a.types().to_vec(), &columns);
    // Phi_F must be a semidistributor C => A.
    let graph = SemiDistributor::from_matrix(c.clone(), a.clone(), graph)?;
    let composite = SemiDistributor::compose(&graph, theta)?;
    let d = theta.dom();
    let mut out = Vec::with_capacity(d.len());
    for di in 0..d.len() {
        let p = Presheaf::from_matrix_unchecked(a.clone(), Variance::Contravariant, &composite.matrix().column(di));
        if !p.is_regular() {
            return Err(Error::NotRegular("colimit left RA".into()));
        }
        out.push(p);
    }
    Ok(out)
}

/// Whether `G: A -> C` is the `Phi`-weighted colimit of `F: B -> C`, for
/// `Phi: A => B` and `C` a category:
/// `C(Ga, c) = /\_b [Phi(b, a), C(Fb, c)]` for all `a`, `c`.
pub fn is_colimit(g: &SemiFunctor, phi: &SemiDistributor, f: &SemiFunctor) -> Result<bool> {
    let c = g.cod();
    if let Some(bad) = c.first_non_unital() {
        return Err(Error::NotACategory(bad));
    }
    let same = |x: &Arc<SemiCategory>, y: &Arc<SemiCategory>| Arc::ptr_eq(x, y) || **x == **y;
    if !same(g.dom(), phi.dom()) || !same(phi.cod(), f.dom()) || !same(f.cod(), c) {
        return Err(Error::TypeMismatch("colimit diagram does not line up".into()));
    }
    let q = c.base();
    let (a, b) = (phi.dom(), phi.cod());
    for ai in 0..a.len() {
        let ta = a.ty(ai);
        for ci in 0..c.len() {
            let tc = c.ty(ci);
            let l = q.hom(tc, ta);
            let rhs = (0..b.len()).fold(l.top(), |acc, bi| {
                let tb = b.ty(bi);
                l.meet(acc, q.lift(tc, ta, tb, phi.get(bi, ai), c.hom(f.apply(bi), ci)))
            });
            if c.hom(g.apply(ai), ci) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_CAP;
    use crate::semicat::TypedSet;

    const E: Elem = 1;
    const ONE: Elem = 2;

    fn point(e: Elem) -> Arc<SemiCategory> {
        let q = Arc::new(Quantaloid::three());
        Arc::new(SemiCategory::new(q, TypedSet::numbered(1, 0), vec![e]).unwrap())
    }

    fn strict_chain(n: usize) -> Arc<SemiCategory> {
        let q = Arc::new(Quantaloid::two());
        let entries: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j, 1))).collect();
        Arc::new(SemiCategory::from_entries(q, TypedSet::numbered(n, 0), &entries).unwrap())
    }

    fn values(ps: &[Presheaf]) -> Vec<Vec<Elem>> {
        ps.iter().map(|p| p.values().to_vec()).collect()
    }

    #[test]
    fn three_presheaves_on_e() {
        let a = point(E);
        let ps = enumerate_presheaves(&a, 0, Variance::Contravariant, DEFAULT_CAP).unwrap();
        assert_eq!(values(&ps), vec![vec![0], vec![E], vec![ONE]]);
        let regular: Vec<_> = ps.iter().filter(|p| p.is_regular()).cloned().collect();
        assert_eq!(values(&regular), vec![vec![0], vec![E]]);
        let yon: Vec<_> = ps.iter().filter(|p| p.is_yoneda()).cloned().collect();
        assert_eq!(values(&yon), vec![vec![0], vec![ONE]]);
    }

    #[test]
    fn presheaves_on_strict_order_are_downsets() {
        let a = strict_chain(3);
        let ps = enumerate_presheaves(&a, 0, Variance::Contravariant, DEFAULT_CAP).unwrap();
        // Downsets of the 3-chain: {}, {0}, {0,1}, {0,1,2}.
        assert_eq!(
            values(&ps),
            vec![vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]
        );
        assert_eq!(yoneda(&a, 2).values(), &[1, 1, 0]);
        assert_eq!(yoneda(&a, 0).values(), &[0, 0, 0]);
    }

    #[test]
    fn empty_semicategory_has_one_presheaf() {
        let q = Arc::new(Quantaloid::three());
        let a = Arc::new(SemiCategory::empty(q));
        let ps = enumerate_presheaves(&a, 0, Variance::Contravariant, DEFAULT_CAP).unwrap();
        assert_eq!(ps.len(), 1);
        assert!(ps[0].values().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let a = strict_chain(4);
        assert!(matches!(
            enumerate_presheaves(&a, 0, Variance::Contravariant, 15),
            Err(Error::EnumerationCapExceeded { bound: 16, cap: 15 })
        ));
    }

    #[test]
    fn yoneda_presheaves_on_strict_order() {
        // D is Yoneda iff (a in D <=> strict downset of a inside D).
        let a = strict_chain(3);
        for p in enumerate_presheaves(&a, 0, Variance::Contravariant, DEFAULT_CAP).unwrap() {
            let inside = |x: usize| p.value(x) == 1;
            let expect = (0..3).all(|x| inside(x) == (0..x).all(inside));
            assert_eq!(p.is_yoneda(), expect, "{:?}", p.values());
        }
    }

    #[test]
    fn regular_presheaves_on_strict_order() {
        // D is regular iff every d in D has d' in D with d < d'.
        let a = strict_chain(3);
        for p in enumerate_presheaves(&a, 0, Variance::Contravariant, DEFAULT_CAP).unwrap() {
            let expect = (0..3).all(|d| p.value(d) == 0 || (d + 1..3).any(|d2| p.value(d2) == 1));
            assert_eq!(p.is_regular(), expect, "{:?}", p.values());
        }
    }

    #[test]
    fn regular_via_liftings_three_chain() {
        let a = point(E);
        let all = enumerate_all(&a, Variance::Contravariant, DEFAULT_CAP).unwrap();
        assert!(is_regular_via_liftings(&all[1], &all));
        assert!(!is_regular_via_liftings(&all[2], &all));
        assert!(is_regular_via_liftings(&all[0], &all));
    }

    #[test]
    fn ra_of_three_chain_example() {
        let a = point(E);
        let ra = build_ra(&a, Variance::Contravariant, DEFAULT_CAP).unwrap();
        assert_eq!(ra.len(), 2);
        let (zero, e) = (0, 1);
        assert_eq!(ra.payload(zero).unwrap().values(), &[0]);
        assert_eq!(ra.payload(e).unwrap().values(), &[E]);
        // RA(e, 0) = [e, 0] and RA(0, e) = [0, e].
        assert_eq!(ra.hom(e, zero), 0);
        assert_eq!(ra.hom(zero, e), ONE);
        assert!(ra.is_q_category());
        let via = build_ra_via_rsdist(&a, Variance::Contravariant, DEFAULT_CAP).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(ra.hom(i, j), via.hom(i, j));
            }
        }
    }

    #[test]
    fn j_and_k_on_three_chain() {
        let a = point(E);
        let one = Presheaf::new(a.clone(), 0, Variance::Contravariant, vec![ONE]).unwrap();
        assert_eq!(map_j(&one).unwrap().values(), &[E]);
        let e = Presheaf::new(a.clone(), 0, Variance::Contravariant, vec![E]).unwrap();
        assert_eq!(map_k(&e).unwrap().values(), &[ONE]);
        assert!(matches!(map_k(&one), Err(Error::NotRegular(_))));
        let y = yoneda(&a, 0);
        assert_eq!(map_j(&y).unwrap(), y);
    }

    #[test]
    fn colimit_of_yoneda_weighted_by_e() {
        let a = point(E);
        let theta = Presheaf::new(a.clone(), 0, Variance::Contravariant, vec![E]).unwrap();
        let out = weighted_colimit_ra(&a, &theta.as_semidist(), &[yoneda(&a, 0)]).unwrap();
        assert_eq!(out[0].values(), &[E]);
    }

    #[test]
    fn pa_equals_pa_of_free_category() {
        let a = strict_chain(3);
        let free = Arc::new(a.free_category());
        let pa = build_pa(&a, Variance::Contravariant, DEFAULT_CAP).unwrap();
        let pf = build_pa(&free, Variance::Contravariant, DEFAULT_CAP).unwrap();
        assert_eq!(pa.len(), pf.len());
        for i in 0..pa.len() {
            assert_eq!(pa.objects()[i].tag, pf.objects()[i].tag);
            for j in 0..pa.len() {
                assert_eq!(pa.hom(i, j), pf.hom(i, j));
            }
        }
    }
}

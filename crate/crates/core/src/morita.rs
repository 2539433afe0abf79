//! Isomorphism and equivalence of finite Q-categories, Morita equivalence of
//! regular semicategories, and the passage between regular semidistributors
//! and cocontinuous maps of regular-presheaf categories.
//!
//! Equivalence of finite Q-categories is decided as isomorphism of
//! skeletons. Morita equivalence `A ~ B` is decided on `RA` and `RB`, and
//! cross-checked by a direct search for an isomorphism in the quantaloid of
//! regular semidistributors and by comparing the covariant categories.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::presheaf::{self, Presheaf, QCategoryView, Variance};
use crate::semicat::{all_regular_semidistributors, SemiCategory, SemiDistributor};

/// Isomorphism classes of a category's objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonReport {
    /// Classes in order of their representatives, each sorted.
    pub classes: Vec<Vec<usize>>,
    /// Lowest index of each class.
    pub representatives: Vec<usize>,
}

/// `ta = ta'`, `1 <= C(a', a)` and `1 <= C(a, a')`.
pub fn are_isomorphic_objects(c: &QCategoryView, a: usize, a2: usize) -> bool {
    let t = c.ty(a);
    if t != c.ty(a2) {
        return false;
    }
    let q = c.base();
    let (l, one) = (q.hom(t, t), q.identity(t));
    l.leq(one, c.hom(a2, a)) && l.leq(one, c.hom(a, a2))
}

pub fn skeleton(c: &QCategoryView) -> (SkeletonReport, QCategoryView) {
    let n = c.len();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i].is_some() {
            continue;
        }
        let k = classes.len();
        let mut members = vec![i];
        class_of[i] = Some(k);
        for (j, slot) in class_of.iter_mut().enumerate().skip(i + 1) {
            if slot.is_none() && are_isomorphic_objects(c, i, j) {
                *slot = Some(k);
                members.push(j);
            }
        }
        classes.push(members);
    }
    let representatives: Vec<usize> = classes.iter().map(|m| m[0]).collect();
    let view = c.full_subview(&representatives);
    (
        SkeletonReport {
            classes,
            representatives,
        },
        view,
    )
}

/// A type-preserving bijection `beta` with `C(i, j) = D(beta i, beta j)`,
/// found by backtracking in lexicographic order. The cap bounds the number
/// of partial assignments visited.
pub fn find_isomorphism(c: &QCategoryView, d: &QCategoryView, cap: u128) -> Result<Option<Vec<usize>>> {
    let n = c.len();
    if n != d.len() || !Arc::ptr_eq(c.base(), d.base()) && **c.base() != **d.base() {
        return Ok(None);
    }
    let mut ct: Vec<_> = (0..n).map(|i| (c.ty(i), c.hom(i, i))).collect();
    let mut dt: Vec<_> = (0..n).map(|i| (d.ty(i), d.hom(i, i))).collect();
    ct.sort_unstable();
    dt.sort_unstable();
    if ct != dt {
        return Ok(None);
    }
    let mut beta = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut visited: u128 = 0;
    if extend_iso(c, d, &mut beta, &mut used, &mut visited, cap)? {
        Ok(Some(beta))
    } else {
        Ok(None)
    }
}

fn extend_iso(
    c: &QCategoryView,
    d: &QCategoryView,
    beta: &mut Vec<usize>,
    used: &mut [bool],
    visited: &mut u128,
    cap: u128,
) -> Result<bool> {
    let i = beta.len();
    if i == c.len() {
        return Ok(true);
    }
    for j in 0..d.len() {
        if used[j] || c.ty(i) != d.ty(j) || c.hom(i, i) != d.hom(j, j) {
            continue;
        }
        let consistent = beta
            .iter()
            .enumerate()
            .all(|(k, &bk)| c.hom(i, k) == d.hom(j, bk) && c.hom(k, i) == d.hom(bk, j));
        if !consistent {
            continue;
        }
        *visited += 1;
        if *visited > cap {
            return Err(Error::SearchCapExceeded { cap });
        }
        beta.push(j);
        used[j] = true;
        if extend_iso(c, d, beta, used, visited, cap)? {
            return Ok(true);
        }
        beta.pop();
        used[j] = false;
    }
    Ok(false)
}

pub fn categories_isomorphic(c: &QCategoryView, d: &QCategoryView, cap: u128) -> Result<bool> {
    Ok(find_isomorphism(c, d, cap)?.is_some())
}

/// Equivalence of finite Q-categories: isomorphic skeletons.
pub fn categories_equivalent(c: &QCategoryView, d: &QCategoryView, cap: u128) -> Result<bool> {
    let (_, sc) = skeleton(c);
    let (_, sd) = skeleton(d);
    categories_isomorphic(&sc, &sd, cap)
}

fn require_regular(name: &str, a: &SemiCategory) -> Result<()> {
    if !a.is_regular() {
        return Err(Error::NotRegular(format!("{name} is not a regular semicategory")));
    }
    Ok(())
}

/// First pair `(Phi: A => B, Psi: B => A)` of regular semidistributors with
/// `Psi (x) Phi = A` and `Phi (x) Psi = B`, both enumerated
/// lexicographically, `Phi` outermost.
pub fn rsdist_isomorphism_search(
    a: &Arc<SemiCategory>,
    b: &Arc<SemiCategory>,
    cap: u128,
) -> Result<Option<(SemiDistributor, SemiDistributor)>> {
    require_regular("A", a)?;
    require_regular("B", b)?;
    let over = |e: Error| match e {
        Error::EnumerationCapExceeded { .. } => Error::SearchCapExceeded { cap },
        e => e,
    };
    let fwd = all_regular_semidistributors(a, b, cap).map_err(over)?;
    let bwd = all_regular_semidistributors(b, a, cap).map_err(over)?;
    if (fwd.len() as u128).saturating_mul(bwd.len() as u128) > cap {
        return Err(Error::SearchCapExceeded { cap });
    }
    let (ia, ib) = (a.identity_semidist(), b.identity_semidist());
    for phi in &fwd {
        for psi in &bwd {
            if SemiDistributor::compose(psi, phi)? == ia && SemiDistributor::compose(phi, psi)? == ib {
                return Ok(Some((phi.clone(), psi.clone())));
            }
        }
    }
    Ok(None)
}

/// Outcome of [`morita_equivalent`].
#[derive(Debug, Clone)]
pub struct MoritaVerdict {
    /// `RA` and `RB` are equivalent.
    pub equivalent: bool,
    /// Sizes of the skeletons of `RA` and `RB`.
    pub skeleton_sizes: [usize; 2],
    /// An isomorphism in regular semidistributors, when one was found.
    pub certificate: Option<(SemiDistributor, SemiDistributor)>,
    /// Verdict of the semidistributor search; `None` if it hit the cap.
    pub rsdist_route: Option<bool>,
    /// Verdict on the covariant categories; `None` if it hit the cap.
    pub covariant_route: Option<bool>,
}

impl MoritaVerdict {
    /// Every route that completed agrees with the main verdict.
    pub fn routes_agree(&self) -> bool {
        self.rsdist_route.is_none_or(|r| r == self.equivalent)
            && self.covariant_route.is_none_or(|r| r == self.equivalent)
    }
}

fn secondary<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::EnumerationCapExceeded { .. } | Error::SearchCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn morita_equivalent(a: &Arc<SemiCategory>, b: &Arc<SemiCategory>, cap: u128) -> Result<MoritaVerdict> {
    require_regular("A", a)?;
    require_regular("B", b)?;
    let ra = presheaf::build_ra(a, Variance::Contravariant, cap)?;
    let rb = presheaf::build_ra(b, Variance::Contravariant, cap)?;
    let (_, sa) = skeleton(&ra);
    let (_, sb) = skeleton(&rb);
    let equivalent = categories_isomorphic(&sa, &sb, cap)?;
    let certificate = secondary(rsdist_isomorphism_search(a, b, cap))?;
    let covariant_route = secondary((|| {
        let ca = presheaf::build_ra(a, Variance::Covariant, cap)?;
        let cb = presheaf::build_ra(b, Variance::Covariant, cap)?;
        categories_equivalent(&ca, &cb, cap)
    })())?;
    Ok(MoritaVerdict {
        equivalent,
        skeleton_sizes: [sa.len(), sb.len()],
        rsdist_route: certificate.as_ref().map(Option::is_some),
        certificate: certificate.flatten(),
        covariant_route,
    })
}

fn require_regular_dist(phi: &SemiDistributor) -> Result<()> {
    require_regular("domain", phi.dom())?;
    require_regular("codomain", phi.cod())?;
    if !phi.is_regular() {
        return Err(Error::NotRegular("semidistributor is not regular".into()));
    }
    Ok(())
}

fn check_on(theta: &Presheaf, a: &Arc<SemiCategory>) -> Result<()> {
    if theta.variance() != Variance::Contravariant || !(Arc::ptr_eq(theta.carrier(), a) || **theta.carrier() == **a) {
        return Err(Error::TypeMismatch("expected a contravariant presheaf on the domain".into()));
    }
    Ok(())
}

/// `theta |-> Phi (x) theta`, sending regular presheaves on `A` to regular
/// presheaves on `B`.
pub fn induced_functor(phi: &SemiDistributor, theta: &Presheaf) -> Result<Presheaf> {
    require_regular_dist(phi)?;
    check_on(theta, phi.dom())?;
    let m = Matrix::compose(phi.base(), phi.matrix(), &theta.to_matrix())?;
    Ok(Presheaf::from_matrix_unchecked(phi.cod().clone(), Variance::Contravariant, &m))
}

/// Right adjoint of [`induced_functor`]: `psi |-> A (x) [Phi, psi] (x) *`.
pub fn induced_right_adjoint(phi: &SemiDistributor, psi: &Presheaf) -> Result<Presheaf> {
    require_regular_dist(phi)?;
    check_on(psi, phi.cod())?;
    if !psi.is_regular() {
        return Err(Error::NotRegular("expected a regular presheaf".into()));
    }
    let l = SemiDistributor::lifting_rsdist(phi, &psi.as_semidist())?;
    Ok(Presheaf::from_matrix_unchecked(phi.dom().clone(), Variance::Contravariant, l.matrix()))
}

/// Recovers `Phi(b, a) = F(Y a)(b)` from a map `F: RA -> RB` and checks
/// `F(theta) = Phi (x) theta` on every regular presheaf on `A`, reporting
/// the enumeration index of the first failure.
pub fn distributor_from_cocont(
    a: &Arc<SemiCategory>,
    b: &Arc<SemiCategory>,
    f: impl Fn(&Presheaf) -> Result<Presheaf>,
    cap: u128,
) -> Result<SemiDistributor> {
    require_regular("A", a)?;
    require_regular("B", b)?;
    let q = a.base();
    let mut columns = Vec::with_capacity(a.len());
    for x in 0..a.len() {
        let img = f(&presheaf::yoneda(a, x))?;
        check_on(&img, b)?;
        if img.ty() != a.ty(x) {
            return Err(Error::TypeMismatch(format!("F changes the type of Y({})", a.name(x))));
        }
        columns.push(img.to_matrix());
    }
    let mat = Matrix::from_columns(b.types().to_vec(), &columns);
    let ra = presheaf::enumerate_all(a, Variance::Contravariant, cap)?;
    for (idx, theta) in ra.iter().filter(|t| t.is_regular()).enumerate() {
        let want = Matrix::compose(q, &mat, &theta.to_matrix())?;
        let got = f(theta)?;
        if got.ty() != theta.ty() || got.values() != want.data() {
            return Err(Error::NotCocontinuous { witness: idx });
        }
    }
    SemiDistributor::from_matrix(a.clone(), b.clone(), mat)
}

//! Order-theoretic and locale-theoretic instances.
//!
//! A transitive relation `<` is a semicategory over `2` with `A(a, b) = 1`
//! iff `a < b`; it is regular iff it interpolates. Finite posets have
//! `way-below = <=`, so their Scott opens are the up-sets. Omega-sets are
//! symmetric semicategories over a frame.

use std::sync::Arc;

use crate::enumerate::DEFAULT_CAP;
use crate::error::{Error, Result};
use crate::lattice::Elem;
use crate::presheaf::{enumerate_presheaves, Presheaf, Variance};
use crate::quantaloid::Quantaloid;
use crate::semicat::{SemiCategory, SemiDistributor, TypedSet};

/// Largest poset accepted by [`way_below`].
pub const MAX_WAY_BELOW_POINTS: usize = 12;

/// A binary relation on `0..n`, required to be transitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictRelation {
    n: usize,
    rel: Vec<bool>,
}

impl StrictRelation {
    pub fn new(n: usize, rel: Vec<bool>) -> Result<Self> {
        assert_eq!(rel.len(), n * n, "relation size");
        let r = StrictRelation { n, rel };
        for i in 0..n {
            for j in 0..n {
                if !r.holds(i, j) {
                    continue;
                }
                for k in 0..n {
                    if r.holds(j, k) && !r.holds(i, k) {
                        return Err(Error::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = vec![false; n * n];
        for &(i, j) in pairs {
            rel[i * n + j] = true;
        }
        Self::new(n, rel)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rel[i * self.n + j]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.holds(i, j))
            .collect()
    }

    /// `R o R = R` as a Boolean matrix.
    pub fn is_idempotent(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|k| self.holds(i, k) == (0..n).any(|j| self.holds(i, j) && self.holds(j, k))))
    }
}

/// A finite partial order on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    pub fn new(n: usize, leq: Vec<bool>) -> Result<Self> {
        assert_eq!(leq.len(), n * n, "relation size");
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(Error::NotAPartialOrder {
                    axiom: "reflexivity",
                    witness: vec![i],
                });
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::NotAPartialOrder {
                        axiom: "antisymmetry",
                        witness: vec![i, j],
                    });
                }
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        return Err(Error::NotAPartialOrder {
                            axiom: "transitivity",
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }
        Ok(FinitePoset { n, leq })
    }

    /// The reflexive-transitive closure of the given pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(i, j) in pairs {
            leq[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i * n + k] && leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        Self::new(n, leq)
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs).expect("chain")
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_pairs(n, &[]).expect("antichain")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn as_relation(&self) -> StrictRelation {
        StrictRelation {
            n: self.n,
            rel: self.leq.clone(),
        }
    }

    /// Least upper bound of a subset, if any.
    pub fn join(&self, subset: &[usize]) -> Option<usize> {
        let ub: Vec<usize> = (0..self.n)
            .filter(|&u| subset.iter().all(|&s| self.leq(s, u)))
            .collect();
        ub.iter().copied().find(|&u| ub.iter().all(|&v| self.leq(u, v)))
    }

    pub fn is_up_set(&self, set: &[usize]) -> bool {
        set.iter().all(|&x| (0..self.n).all(|y| !self.leq(x, y) || set.contains(&y)))
    }

    pub fn is_down_set(&self, set: &[usize]) -> bool {
        set.iter().all(|&x| (0..self.n).all(|y| !self.leq(y, x) || set.contains(&y)))
    }
}

/// The semicategory over `2` with `A(a, b) = 1` iff `a < b`.
pub fn strict_order_to_semicat(r: &StrictRelation) -> SemiCategory {
    let q = Arc::new(Quantaloid::two());
    let hom = r.rel.iter().map(|&b| b as Elem).collect();
    SemiCategory::new(q, TypedSet::numbered(r.n, 0), hom).expect("transitive relations compose")
}

/// Every `x < z` has some `y` with `x < y < z`.
pub fn has_interpolation(r: &StrictRelation) -> bool {
    r.pairs()
        .into_iter()
        .all(|(x, z)| (0..r.n).any(|y| r.holds(x, y) && r.holds(y, z)))
}

fn directed_subsets(p: &FinitePoset) -> Vec<Vec<usize>> {
    let n = p.n;
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|d| {
            d.iter()
                .all(|&a| d.iter().all(|&b| d.iter().any(|&u| p.leq(a, u) && p.leq(b, u))))
        })
        .collect()
}

/// `x << y` iff every directed `D` with join above `y` has an element above
/// `x`; computed over all directed subsets.
pub fn way_below(p: &FinitePoset) -> Result<StrictRelation> {
    let n = p.n;
    if n > MAX_WAY_BELOW_POINTS {
        return Err(Error::EnumerationCapExceeded {
            bound: 1u128 << n,
            cap: 1u128 << MAX_WAY_BELOW_POINTS,
        });
    }
    let mut joins = Vec::new();
    for d in directed_subsets(p) {
        let j = p.join(&d).ok_or_else(|| Error::MissingDirectedJoin { subset: d.clone() })?;
        joins.push((d, j));
    }
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            rel[x * n + y] = joins
                .iter()
                .filter(|(_, j)| p.leq(y, *j))
                .all(|(d, _)| d.iter().any(|&e| p.leq(x, e)));
        }
    }
    StrictRelation::new(n, rel)
}

fn support(p: &Presheaf) -> Vec<usize> {
    (0..p.values().len()).filter(|&a| p.value(a) == 1).collect()
}

/// Scott opens: covariant regular presheaves on the way-below semicategory.
pub fn scott_opens(p: &FinitePoset) -> Result<Vec<Vec<usize>>> {
    let a = Arc::new(strict_order_to_semicat(&way_below(p)?));
    Ok(enumerate_presheaves(&a, 0, Variance::Covariant, DEFAULT_CAP)?
        .iter()
        .filter(|p| p.is_regular())
        .map(support)
        .collect())
}

/// Scott closeds: contravariant Yoneda presheaves on the way-below
/// semicategory.
pub fn scott_closeds(p: &FinitePoset) -> Result<Vec<Vec<usize>>> {
    let a = Arc::new(strict_order_to_semicat(&way_below(p)?));
    Ok(enumerate_presheaves(&a, 0, Variance::Contravariant, DEFAULT_CAP)?
        .iter()
        .filter(|p| p.is_yoneda())
        .map(support)
        .collect())
}

/// A set with a frame-valued equality `[a = b]`.
#[derive(Debug, Clone)]
pub struct OmegaSet {
    frame: Arc<Quantaloid>,
    semicat: Arc<SemiCategory>,
}

impl OmegaSet {
    /// Checks symmetry and `[a = b] /\ [b = c] <= [a = c]`; `frame` must be a
    /// one-object quantaloid whose composition is the meet.
    pub fn validate(frame: Arc<Quantaloid>, names: Vec<String>, eq: Vec<Elem>) -> Result<Self> {
        if frame.len() != 1 {
            return Err(Error::TypeMismatch("an Omega-set needs a one-object frame".into()));
        }
        let l = frame.hom(0, 0);
        let meet_is_comp = l.elements().all(|x| l.elements().all(|y| frame.comp(0, 0, 0, x, y) == l.meet(x, y)));
        if !meet_is_comp {
            return Err(Error::TypeMismatch("base is not a frame".into()));
        }
        let n = names.len();
        if eq.len() != n * n || eq.iter().any(|&v| v >= l.size()) {
            return Err(Error::TypeMismatch("equality matrix has the wrong shape".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if eq[i * n + j] != eq[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
                for k in 0..n {
                    if !l.leq(l.meet(eq[i * n + j], eq[j * n + k]), eq[i * n + k]) {
                        return Err(Error::NotTransitiveEq(i, j, k));
                    }
                }
            }
        }
        let objects = TypedSet::new(names.into_iter().map(|s| (s, 0)).collect())?;
        let semicat = Arc::new(SemiCategory::new(frame.clone(), objects, eq)?);
        Ok(OmegaSet { frame, semicat })
    }

    pub fn frame(&self) -> &Arc<Quantaloid> {
        &self.frame
    }

    pub fn as_semicategory(&self) -> &Arc<SemiCategory> {
        &self.semicat
    }

    pub fn eq(&self, a: usize, b: usize) -> Elem {
        self.semicat.hom(a, b)
    }
}

/// The regular contravariant presheaves: the subobjects of the Omega-set.
pub fn omega_subsets(e: &OmegaSet, cap: u128) -> Result<Vec<Presheaf>> {
    Ok(enumerate_presheaves(&e.semicat, 0, Variance::Contravariant, cap)?
        .into_iter()
        .filter(Presheaf::is_regular)
        .collect())
}

/// A regular semidistributor with a right adjoint.
pub fn is_omega_morphism(phi: &SemiDistributor) -> Result<bool> {
    Ok(phi.is_regular() && phi.right_adjoint()?.is_some())
}

/// Result of [`scott_continuity_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScottReport {
    /// `b << fa` iff some `x << a` has `b << fx`.
    pub continuous: bool,
    /// `B(-, f-)` is a regular semidistributor between the way-below
    /// semicategories.
    pub graph_regular: bool,
}

pub fn scott_continuity_check(a: &FinitePoset, b: &FinitePoset, f: &[usize]) -> Result<ScottReport> {
    if f.len() != a.len() || f.iter().any(|&y| y >= b.len()) {
        return Err(Error::TypeMismatch("map does not fit the posets".into()));
    }
    let (wa, wb) = (way_below(a)?, way_below(b)?);
    let continuous = (0..a.len()).all(|x| {
        (0..b.len()).all(|y| wb.holds(y, f[x]) == (0..a.len()).any(|z| wb.holds(y, f[z]) && wa.holds(z, x)))
    });
    let (sa, sb) = (
        Arc::new(strict_order_to_semicat(&wa)),
        Arc::new(strict_order_to_semicat(&wb)),
    );
    let mut data = Vec::with_capacity(a.len() * b.len());
    for y in 0..b.len() {
        for &fx in &f[..a.len()] {
            data.push(sb.hom(y, fx));
        }
    }
    let graph_regular = match SemiDistributor::new(sa, sb, data) {
        Ok(g) => g.is_regular(),
        Err(Error::ActionFailure { .. }) => false,
        Err(e) => return Err(e),
    };
    Ok(ScottReport {
        continuous,
        graph_regular,
    })
}

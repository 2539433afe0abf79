//! Property tests for the algebraic invariants.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use qsemicat::completion::build_idm;
use qsemicat::enumerate::DEFAULT_CAP;
use qsemicat::gen::{all_semicategories, small_semicategories};
use qsemicat::instances::{
    has_interpolation, omega_subsets, scott_opens, strict_order_to_semicat, way_below, FinitePoset, OmegaSet,
    StrictRelation,
};
use qsemicat::lattice::{Elem, SupLattice};
use qsemicat::morita::morita_equivalent;
use qsemicat::presheaf::{enumerate_all, is_regular_via_liftings, map_j, map_k, presheaf_hom, Variance};
use qsemicat::{Matrix, Quantaloid, SemiCategory};

fn lukasiewicz(n: usize) -> Quantaloid {
    let top = n - 1;
    Quantaloid::from_quantale(SupLattice::chain(n), move |g, f| (g + f).saturating_sub(top), top).unwrap()
}

/// Bases: frames, a non-idempotent quantale and a three-object quantaloid.
fn bases() -> &'static [Arc<Quantaloid>] {
    static B: OnceLock<Vec<Arc<Quantaloid>>> = OnceLock::new();
    B.get_or_init(|| {
        let idm = build_idm(Arc::new(Quantaloid::three())).unwrap();
        vec![
            Arc::new(Quantaloid::two()),
            Arc::new(Quantaloid::three()),
            Arc::new(Quantaloid::builtin("frame:bool2").unwrap()),
            Arc::new(lukasiewicz(4)),
            Arc::new(idm.quantaloid().clone()),
        ]
    })
}

/// Semicategories with at most three objects over a one-object base, and
/// with at most two objects of any types over the multi-object base.
fn semicats() -> &'static [Arc<SemiCategory>] {
    static S: OnceLock<Vec<Arc<SemiCategory>>> = OnceLock::new();
    S.get_or_init(|| {
        let b = bases();
        let mut out = small_semicategories(&b[1], 3, DEFAULT_CAP).unwrap();
        out.extend(small_semicategories(&b[3], 2, DEFAULT_CAP).unwrap());
        let multi = &b[4];
        for x in 0..multi.len() {
            for y in x..multi.len() {
                for types in [vec![x], vec![x, y]] {
                    out.extend(all_semicategories(multi, &types, DEFAULT_CAP).unwrap().into_iter().map(Arc::new));
                }
            }
        }
        out
    })
}

fn regular_semicats() -> &'static [Arc<SemiCategory>] {
    static R: OnceLock<Vec<Arc<SemiCategory>>> = OnceLock::new();
    R.get_or_init(|| semicats().iter().filter(|s| s.is_regular()).cloned().collect())
}

/// A base with three of its objects and one arrow in each of the homs
/// `x -> y`, `y -> z`, `x -> z` and `z -> w`.
fn arrows() -> impl Strategy<Value = (usize, [usize; 4], [Elem; 4])> {
    (0..bases().len(), any::<[prop::sample::Index; 4]>(), any::<[prop::sample::Index; 4]>()).prop_map(|(i, o, e)| {
        let q = &bases()[i];
        let [x, y, z, w] = o.map(|k| k.index(q.len()));
        let pick = |k: usize, a, b| e[k].index(q.hom(a, b).size());
        (i, [x, y, z, w], [pick(0, x, y), pick(1, y, z), pick(2, x, z), pick(3, z, w)])
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn composition_is_associative_and_unital((i, [x, y, z, w], [f, g, _, h]) in arrows()) {
        let q = &bases()[i];
        let left = q.comp(x, z, w, h, q.comp(x, y, z, g, f));
        let right = q.comp(x, y, w, q.comp(y, z, w, h, g), f);
        prop_assert_eq!(left, right);
        prop_assert_eq!(q.comp(x, y, y, q.identity(y), f), f);
        prop_assert_eq!(q.comp(x, x, y, f, q.identity(x)), f);
    }

    #[test]
    fn composition_preserves_binary_joins((i, [x, y, z, _], [f, g, _, _]) in arrows(), k in any::<prop::sample::Index>()) {
        let q = &bases()[i];
        let f2 = k.index(q.hom(x, y).size());
        let joined = q.comp(x, y, z, g, q.hom(x, y).join(f, f2));
        prop_assert_eq!(joined, q.hom(x, z).join(q.comp(x, y, z, g, f), q.comp(x, y, z, g, f2)));
        let zero = q.comp(x, y, z, g, q.hom(x, y).bottom());
        prop_assert_eq!(zero, q.hom(x, z).bottom());
    }

    #[test]
    fn liftings_and_extensions_are_residuals((i, [x, y, z, _], [f, g, b, _]) in arrows()) {
        let q = &bases()[i];
        let hxz = q.hom(x, z);
        // g o f <= b  iff  f <= lift(g, b)  iff  g <= extend(f, b).
        let below = hxz.leq(q.comp(x, y, z, g, f), b);
        prop_assert_eq!(below, q.hom(x, y).leq(f, q.lift(x, y, z, g, b)));
        prop_assert_eq!(below, q.hom(y, z).leq(g, q.extend(x, y, z, f, b)));
    }

    #[test]
    fn matrix_lifting_is_a_residual(
        i in 0..bases().len(),
        seed in prop::collection::vec(any::<prop::sample::Index>(), 3 + 3 * 9),
    ) {
        let q = &bases()[i];
        let n = q.len();
        let ty = |k: usize| seed[k].index(n);
        let (a, b, c) = (vec![ty(0)], vec![ty(1), ty(0)], vec![ty(2), ty(1)]);
        let mut next = 3;
        let mut random = |rows: &[usize], cols: &[usize]| {
            let data = rows
                .iter()
                .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
                .map(|(r, c)| {
                    next += 1;
                    seed[next - 1].index(q.hom(c, r).size())
                })
                .collect();
            Matrix::new(rows.to_vec(), cols.to_vec(), data)
        };
        let psi = random(&b, &c);
        let phi = random(&b, &a);
        let x = random(&c, &a);
        let lifted = Matrix::lift(q, &psi, &phi).unwrap();
        let composite = Matrix::compose(q, &psi, &x).unwrap();
        prop_assert_eq!(Matrix::leq(q, &composite, &phi), Matrix::leq(q, &x, &lifted));
    }

    #[test]
    fn j_is_idempotent_onto_regular_presheaves(k in any::<prop::sample::Index>(), contra in any::<bool>()) {
        let regular = regular_semicats();
        let a = &regular[k.index(regular.len())];
        let variance = if contra { Variance::Contravariant } else { Variance::Covariant };
        let all = enumerate_all(a, variance, DEFAULT_CAP).unwrap();
        for p in &all {
            let j = map_j(p).unwrap();
            prop_assert!(j.is_regular());
            prop_assert_eq!(&map_j(&j).unwrap(), &j);
            prop_assert_eq!(p.is_regular(), &j == p);
            prop_assert_eq!(p.is_regular(), is_regular_via_liftings(p, &all));
        }
    }

    #[test]
    fn adjoint_triple_on_regular_semicategories(k in any::<prop::sample::Index>()) {
        let regular = regular_semicats();
        let a = &regular[k.index(regular.len())];
        let all = enumerate_all(a, Variance::Contravariant, DEFAULT_CAP).unwrap();
        let reg: Vec<_> = all.iter().filter(|p| p.is_regular()).collect();
        for psi in &all {
            let j = map_j(psi).unwrap();
            for theta in &reg {
                prop_assert_eq!(presheaf_hom(theta, psi), presheaf_hom(theta, &j));
                let kt = map_k(theta).unwrap();
                prop_assert!(kt.is_yoneda());
                prop_assert_eq!(presheaf_hom(&j, theta), presheaf_hom(psi, &kt));
            }
        }
    }

    #[test]
    fn relabelled_semicategories_are_morita_equivalent(k in any::<prop::sample::Index>(), perm in any::<u64>()) {
        let regular = regular_semicats();
        let a = &regular[k.index(regular.len())];
        let mut order: Vec<usize> = (0..a.len()).collect();
        let mut s = perm;
        for i in (1..order.len()).rev() {
            order.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let b = Arc::new(a.permuted(&order));
        let v = morita_equivalent(a, &b, DEFAULT_CAP).unwrap();
        prop_assert!(v.equivalent);
        prop_assert!(v.routes_agree());
    }

    #[test]
    fn interpolation_matches_idempotence_and_regularity(n in 0usize..=6, bits in any::<u64>()) {
        let pairs: Vec<(usize, usize)> =
            (0..n * n).filter(|k| bits >> k & 1 == 1).map(|k| (k / n, k % n)).collect();
        // Transitive closure of a random relation.
        let mut rel = vec![false; n * n];
        for &(i, j) in &pairs {
            rel[i * n + j] = true;
        }
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if rel[i * n + m] && rel[m * n + j] {
                        rel[i * n + j] = true;
                    }
                }
            }
        }
        let r = StrictRelation::new(n, rel).unwrap();
        let h = has_interpolation(&r);
        prop_assert_eq!(h, r.is_idempotent());
        prop_assert_eq!(h, strict_order_to_semicat(&r).is_regular());
    }

    #[test]
    fn finite_posets_are_continuous(n in 0usize..=6, bits in any::<u64>()) {
        let pairs: Vec<(usize, usize)> =
            (0..n * n).filter(|k| bits >> k & 1 == 1 && k / n < k % n).map(|k| (k / n, k % n)).collect();
        let p = FinitePoset::from_pairs(n, &pairs).unwrap();
        prop_assert_eq!(way_below(&p).unwrap(), p.as_relation());
        let opens = scott_opens(&p).unwrap();
        let ups = (0u32..1 << n)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| p.is_up_set(s))
            .count();
        prop_assert_eq!(opens.len(), ups);
        prop_assert!(opens.iter().all(|s| p.is_up_set(s)));
    }

    #[test]
    fn validated_omega_sets_are_regular(n in 1usize..=3, vals in prop::collection::vec(0usize..4, 9)) {
        let frame = Arc::new(Quantaloid::builtin("frame:bool2").unwrap());
        let mut eq = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                eq[i * n + j] = vals[i * 3 + j];
                eq[j * n + i] = vals[i * 3 + j];
            }
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        if let Ok(e) = OmegaSet::validate(frame.clone(), names, eq) {
            prop_assert!(e.as_semicategory().is_regular());
            let l = frame.hom(0, 0);
            for p in omega_subsets(&e, DEFAULT_CAP).unwrap() {
                // A subobject value at x never exceeds the extent of x.
                for x in 0..n {
                    prop_assert!(l.leq(p.value(x), e.eq(x, x)));
                }
            }
        }
    }
}

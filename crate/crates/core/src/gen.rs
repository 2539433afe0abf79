//! Exhaustive generators of small instances, used by the test suites.

use std::sync::Arc;

use crate::enumerate::{check_cap, for_each_assignment};
use crate::error::Result;
use crate::instances::{FinitePoset, StrictRelation};
use crate::quantaloid::{ObjId, Quantaloid};
use crate::semicat::{SemiCategory, TypedSet};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// All semicategories on objects of the given types, one per isomorphism
/// class (the lexicographically least hom table under type-preserving
/// relabelling), in lexicographic order.
pub fn all_semicategories(q: &Arc<Quantaloid>, types: &[ObjId], cap: u128) -> Result<Vec<SemiCategory>> {
    let n = types.len();
    let sizes: Vec<usize> = (0..n * n).map(|k| q.hom(types[k % n], types[k / n]).size()).collect();
    check_cap(&sizes, cap)?;
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| types[p[i]] == types[i]))
        .collect();
    let mut out = Vec::new();
    for_each_assignment(&sizes, |data| {
        let minimal = perms.iter().all(|p| {
            let permuted = (0..n * n).map(|k| data[p[k / n] * n + p[k % n]]);
            permuted.cmp(data.iter().copied()) != std::cmp::Ordering::Less
        });
        if minimal {
            if let Ok(s) = SemiCategory::new(q.clone(), TypedSet::numbered_typed(types), data.to_vec()) {
                out.push(s);
            }
        }
        true
    });
    Ok(out)
}

/// Semicategories over a one-object base with at most `max_n` objects.
pub fn small_semicategories(q: &Arc<Quantaloid>, max_n: usize, cap: u128) -> Result<Vec<Arc<SemiCategory>>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.extend(all_semicategories(q, &vec![0; n], cap)?.into_iter().map(Arc::new));
    }
    Ok(out)
}

/// The regular ones among [`small_semicategories`].
pub fn small_regular_semicategories(q: &Arc<Quantaloid>, max_n: usize, cap: u128) -> Result<Vec<Arc<SemiCategory>>> {
    Ok(small_semicategories(q, max_n, cap)?
        .into_iter()
        .filter(|s| s.is_regular())
        .collect())
}

/// Every transitive relation on `n <= 6` points, by row bitmasks.
pub fn all_transitive_relations(n: usize) -> Vec<StrictRelation> {
    assert!(n <= 6, "too many relations");
    let mut out = Vec::new();
    let mut rows = vec![0u8; n];
    fn rec(i: usize, n: usize, rows: &mut Vec<u8>, out: &mut Vec<StrictRelation>) {
        if i == n {
            // Transitive iff j in row i implies row j within row i.
            let ok = (0..n).all(|a| (0..n).all(|b| rows[a] >> b & 1 == 0 || rows[b] & !rows[a] == 0));
            if ok {
                let rel = (0..n * n).map(|k| rows[k / n] >> (k % n) & 1 == 1).collect();
                out.push(StrictRelation::new(n, rel).expect("checked transitive"));
            }
            return;
        }
        for m in 0..(1u16 << n) {
            rows[i] = m as u8;
            // Prune with the rows fixed so far.
            let ok = (0..=i).all(|a| (0..=i).all(|b| rows[a] >> b & 1 == 0 || rows[b] & !rows[a] == 0));
            if ok {
                rec(i + 1, n, rows, out);
            }
        }
    }
    rec(0, n, &mut rows, &mut out);
    out
}

/// Every partial order on `n` labelled points.
pub fn all_posets(n: usize) -> Vec<FinitePoset> {
    all_transitive_relations(n)
        .into_iter()
        .filter_map(|r| {
            let leq = (0..n * n).map(|k| r.holds(k / n, k % n)).collect();
            FinitePoset::new(n, leq).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_CAP;

    #[test]
    fn transitive_relation_counts() {
        // Known counts of labelled transitive relations.
        let counts: Vec<usize> = (0..=4).map(|n| all_transitive_relations(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 13, 171, 3994]);
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn semicategories_over_two_are_transitive_relations_up_to_iso() {
        // Orbits of labelled transitive relations under relabelling.
        let q = Arc::new(Quantaloid::two());
        for n in 0..=3 {
            let mut orbits = std::collections::BTreeSet::new();
            for r in all_transitive_relations(n) {
                let canon = permutations(n)
                    .iter()
                    .map(|p| (0..n * n).map(|k| r.holds(p[k / n], p[k % n])).collect::<Vec<_>>())
                    .min()
                    .unwrap();
                orbits.insert(canon);
            }
            let got = all_semicategories(&q, &vec![0; n], DEFAULT_CAP).unwrap();
            assert_eq!(got.len(), orbits.len());
        }
        let counts: Vec<usize> = (0..=3)
            .map(|n| all_semicategories(&q, &vec![0; n], DEFAULT_CAP).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 8, 39]);
    }
}

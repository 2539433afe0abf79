//! Finite complete lattices on dense element indices.
//!
//! Elements are `0..size`. Joins and meets are precomputed at validation
//! time by scanning upper (lower) bounds, so every later query is a table
//! lookup.

use crate::error::{Error, Result};

/// Index of an element in a [`SupLattice`].
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupLattice {
    size: usize,
    leq: Vec<bool>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl SupLattice {
    /// Validates an order given as `(i, j)` pairs meaning `i <= j`.
    ///
    /// Reflexive pairs are implied; transitivity is not closed over and must
    /// already hold.
    pub fn from_pairs(size: usize, pairs: &[(Elem, Elem)]) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(i, j) in pairs {
            if i >= size || j >= size {
                return Err(Error::Parse(format!(
                    "order pair ({i}, {j}) out of range for {size} elements"
                )));
            }
            leq[i * size + j] = true;
        }
        Self::from_relation(size, leq)
    }

    /// Validates a dense `size * size` relation, row-major, `leq[i*size+j]`
    /// meaning `i <= j`.
    pub fn from_relation(size: usize, leq: Vec<bool>) -> Result<Self> {
        assert_eq!(leq.len(), size * size, "relation must be size*size");
        let le = |i: usize, j: usize| leq[i * size + j];
        for i in 0..size {
            if !le(i, i) {
                return Err(Error::NotAPartialOrder {
                    axiom: "reflexivity",
                    witness: vec![i],
                });
            }
        }
        for i in 0..size {
            for j in 0..size {
                if i != j && le(i, j) && le(j, i) {
                    return Err(Error::NotAPartialOrder {
                        axiom: "antisymmetry",
                        witness: vec![i, j],
                    });
                }
                for k in 0..size {
                    if le(i, j) && le(j, k) && !le(i, k) {
                        return Err(Error::NotAPartialOrder {
                            axiom: "transitivity",
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }

        let least_upper = |subset: &[Elem]| -> Option<Elem> {
            let ubs: Vec<Elem> = (0..size)
                .filter(|&u| subset.iter().all(|&s| le(s, u)))
                .collect();
            ubs.iter().copied().find(|&u| ubs.iter().all(|&v| le(u, v)))
        };
        let bottom = least_upper(&[]).ok_or(Error::MissingJoin { subset: vec![] })?;
        let mut join = vec![0; size * size];
        for i in 0..size {
            for j in 0..size {
                join[i * size + j] =
                    least_upper(&[i, j]).ok_or(Error::MissingJoin { subset: vec![i, j] })?;
            }
        }
        // Finite, with bottom and binary joins: complete. Meets are joins of
        // lower bounds.
        let mut meet = vec![0; size * size];
        for i in 0..size {
            for j in 0..size {
                let lower: Vec<Elem> = (0..size).filter(|&l| le(l, i) && le(l, j)).collect();
                meet[i * size + j] = lower
                    .iter()
                    .fold(bottom, |acc, &l| join[acc * size + l]);
            }
        }
        let top = (0..size).fold(bottom, |acc, x| join[acc * size + x]);
        Ok(SupLattice {
            size,
            leq,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .collect();
        Self::from_pairs(n, &pairs).expect("chains are lattices")
    }

    /// The powerset of `k` atoms; element `s` is the bitmask of its atoms.
    pub fn powerset(k: u32) -> Self {
        let n = 1usize << k;
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = i & j == i;
            }
        }
        Self::from_relation(n, leq).expect("powersets are lattices")
    }

    /// `M3`: bottom 0, three incomparable atoms 1..=3, top 4.
    pub fn diamond_m3() -> Self {
        let pairs = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)];
        Self::from_pairs(5, &pairs).expect("M3 is a lattice")
    }

    /// `N5`: 0 < a < b < 1 and 0 < c < 1, with c incomparable to a, b.
    /// Indices: 0, a=1, b=2, c=3, top=4.
    pub fn pentagon_n5() -> Self {
        let pairs = [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 4),
            (2, 4),
            (3, 4),
        ];
        Self::from_pairs(5, &pairs).expect("N5 is a lattice")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size + b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size + b]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Strictly-ordered pairs `(i, j)` with `i <= j`, `i != j`.
    pub fn order_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if i != j && self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

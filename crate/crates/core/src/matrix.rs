//! Typed matrices with entries in a quantaloid.
//!
//! Entry `(r, c)` is an arrow `cols[c] -> rows[r]`. This is the shape of a
//! hom matrix `A(a', a)` (row `a'`, column `a`) and of a semidistributor
//! `Phi(b, a)`. All operations are the matrix quantaloid's: composition is
//! a join of composites, liftings and extensions are meets of residuals.

use crate::error::{Error, Result};
use crate::lattice::Elem;
use crate::quantaloid::{ObjId, QArrow, Quantaloid};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: Vec<ObjId>,
    cols: Vec<ObjId>,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn new(rows: Vec<ObjId>, cols: Vec<ObjId>, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), rows.len() * cols.len(), "matrix data size");
        Matrix { rows, cols, data }
    }

    /// Checked constructor: every entry must lie in its hom lattice.
    pub fn checked(q: &Quantaloid, rows: Vec<ObjId>, cols: Vec<ObjId>, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows.len() * cols.len() {
            return Err(Error::TypeMismatch(format!(
                "matrix of shape {}x{} given {} entries",
                rows.len(),
                cols.len(),
                data.len()
            )));
        }
        let m = Matrix { rows, cols, data };
        for r in 0..m.rows.len() {
            for c in 0..m.cols.len() {
                let size = q.hom(m.cols[c], m.rows[r]).size();
                if m.get(r, c) >= size {
                    return Err(Error::TypeMismatch(format!(
                        "entry ({r}, {c}) = {} outside hom({}, {})",
                        m.get(r, c),
                        q.object_name(m.cols[c]),
                        q.object_name(m.rows[r])
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn bottom(q: &Quantaloid, rows: Vec<ObjId>, cols: Vec<ObjId>) -> Self {
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| q.hom(c, r).bottom()))
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn top(q: &Quantaloid, rows: Vec<ObjId>, cols: Vec<ObjId>) -> Self {
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| q.hom(c, r).top()))
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> &[ObjId] {
        &self.rows
    }

    pub fn cols(&self) -> &[ObjId] {
        &self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: Elem) {
        let n = self.cols.len();
        self.data[r * n + c] = e;
    }

    pub fn arrow(&self, r: usize, c: usize) -> QArrow {
        QArrow::new(self.cols[c], self.rows[r], self.get(r, c))
    }

    pub fn same_shape(&self, other: &Matrix) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    /// `(psi . phi)(c, a) = V_b psi(c, b) o phi(b, a)`.
    pub fn compose(q: &Quantaloid, psi: &Matrix, phi: &Matrix) -> Result<Matrix> {
        if psi.cols != phi.rows {
            return Err(Error::TypeMismatch(
                "composite needs psi's column types to equal phi's row types".into(),
            ));
        }
        let mut data = Vec::with_capacity(psi.rows.len() * phi.cols.len());
        for (ci, &tc) in psi.rows.iter().enumerate() {
            for (ai, &ta) in phi.cols.iter().enumerate() {
                let hom = q.hom(ta, tc);
                let mut acc = hom.bottom();
                for (bi, &tb) in phi.rows.iter().enumerate() {
                    let v = q.comp(ta, tb, tc, psi.get(ci, bi), phi.get(bi, ai));
                    acc = hom.join(acc, v);
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: psi.rows.clone(),
            cols: phi.cols.clone(),
            data,
        })
    }

    /// Lifting `[psi, phi]` for `psi: C => B`, `phi: A => B`:
    /// `[psi, phi](c, a) = /\_b [psi(b, c), phi(b, a)]`.
    pub fn lift(q: &Quantaloid, psi: &Matrix, phi: &Matrix) -> Result<Matrix> {
        if psi.rows != phi.rows {
            return Err(Error::TypeMismatch("lifting needs a common codomain".into()));
        }
        let mut data = Vec::with_capacity(psi.cols.len() * phi.cols.len());
        for (ci, &tc) in psi.cols.iter().enumerate() {
            for (ai, &ta) in phi.cols.iter().enumerate() {
                let hom = q.hom(ta, tc);
                let mut acc = hom.top();
                for (bi, &tb) in phi.rows.iter().enumerate() {
                    let v = q.lift(ta, tc, tb, psi.get(bi, ci), phi.get(bi, ai));
                    acc = hom.meet(acc, v);
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: psi.cols.clone(),
            cols: phi.cols.clone(),
            data,
        })
    }

    /// Extension `{psi, phi}` for `psi: A => C`, `phi: A => B`:
    /// `{psi, phi}(b, c) = /\_a {psi(c, a), phi(b, a)}`.
    pub fn extend(q: &Quantaloid, psi: &Matrix, phi: &Matrix) -> Result<Matrix> {
        if psi.cols != phi.cols {
            return Err(Error::TypeMismatch("extension needs a common domain".into()));
        }
        let mut data = Vec::with_capacity(phi.rows.len() * psi.rows.len());
        for (bi, &tb) in phi.rows.iter().enumerate() {
            for (ci, &tc) in psi.rows.iter().enumerate() {
                let hom = q.hom(tc, tb);
                let mut acc = hom.top();
                for (ai, &ta) in phi.cols.iter().enumerate() {
                    let v = q.extend(ta, tc, tb, psi.get(ci, ai), phi.get(bi, ai));
                    acc = hom.meet(acc, v);
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: phi.rows.clone(),
            cols: psi.rows.clone(),
            data,
        })
    }

    pub fn join(q: &Quantaloid, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        Self::zip(q, a, b, |l, x, y| l.join(x, y))
    }

    pub fn meet(q: &Quantaloid, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        Self::zip(q, a, b, |l, x, y| l.meet(x, y))
    }

    fn zip(
        q: &Quantaloid,
        a: &Matrix,
        b: &Matrix,
        op: impl Fn(&crate::lattice::SupLattice, Elem, Elem) -> Elem,
    ) -> Result<Matrix> {
        if !a.same_shape(b) {
            return Err(Error::TypeMismatch("entrywise operation on different shapes".into()));
        }
        let mut out = a.clone();
        for r in 0..a.nrows() {
            for c in 0..a.ncols() {
                let l = q.hom(a.cols[c], a.rows[r]);
                out.set(r, c, op(l, a.get(r, c), b.get(r, c)));
            }
        }
        Ok(out)
    }

    /// Entrywise order; `false` on shape mismatch.
    pub fn leq(q: &Quantaloid, a: &Matrix, b: &Matrix) -> bool {
        a.same_shape(b)
            && (0..a.nrows()).all(|r| {
                (0..a.ncols()).all(|c| q.hom(a.cols[c], a.rows[r]).leq(a.get(r, c), b.get(r, c)))
            })
    }

    /// Row `r` as a one-row matrix.
    pub fn row(&self, r: usize) -> Matrix {
        let n = self.ncols();
        Matrix {
            rows: vec![self.rows[r]],
            cols: self.cols.clone(),
            data: self.data[r * n..(r + 1) * n].to_vec(),
        }
    }

    /// Column `c` as a one-column matrix.
    pub fn column(&self, c: usize) -> Matrix {
        Matrix {
            rows: self.rows.clone(),
            cols: vec![self.cols[c]],
            data: (0..self.nrows()).map(|r| self.get(r, c)).collect(),
        }
    }

    /// Assembles a matrix from one-column matrices sharing row types.
    pub fn from_columns(rows: Vec<ObjId>, columns: &[Matrix]) -> Matrix {
        let cols: Vec<ObjId> = columns.iter().map(|m| m.cols[0]).collect();
        let mut data = vec![0; rows.len() * cols.len()];
        for (c, m) in columns.iter().enumerate() {
            debug_assert_eq!(m.rows, rows);
            for r in 0..rows.len() {
                data[r * cols.len() + c] = m.get(r, 0);
            }
        }
        Matrix { rows, cols, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantaloid::Quantaloid;

    fn boolean(n: usize, bits: &[u8]) -> Matrix {
        Matrix::new(vec![0; n], vec![0; n], bits.iter().map(|&b| b as usize).collect())
    }

    #[test]
    fn boolean_composite_is_relational_product() {
        let q = Quantaloid::two();
        // Brute force over every pair of 3x3 Boolean matrices would be 2^18;
        // sweep a deterministic slice of it against the plain product.
        for s in (0u32..512).step_by(7) {
            for t in (0u32..512).step_by(11) {
                let bits = |m: u32| (0..9).map(|i| ((m >> i) & 1) as u8).collect::<Vec<_>>();
                let (a, b) = (boolean(3, &bits(s)), boolean(3, &bits(t)));
                let prod = Matrix::compose(&q, &a, &b).unwrap();
                for i in 0..3 {
                    for j in 0..3 {
                        let want = (0..3).any(|k| a.get(i, k) == 1 && b.get(k, j) == 1);
                        assert_eq!(prod.get(i, j) == 1, want);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_middle_gives_bottom_and_empty_lift_gives_top() {
        let q = Quantaloid::three();
        let psi = Matrix::new(vec![0], vec![], vec![]);
        let phi = Matrix::new(vec![], vec![0], vec![]);
        assert_eq!(Matrix::compose(&q, &psi, &phi).unwrap().data(), &[0]);
        let psi = Matrix::new(vec![], vec![0], vec![]);
        assert_eq!(Matrix::lift(&q, &psi, &phi).unwrap().data(), &[2]);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let q = Quantaloid::three();
        let a = Matrix::bottom(&q, vec![0, 0], vec![0]);
        let b = Matrix::bottom(&q, vec![0, 0], vec![0]);
        assert!(matches!(Matrix::compose(&q, &a, &b), Err(Error::TypeMismatch(_))));
        assert!(!Matrix::leq(&q, &a, &Matrix::bottom(&q, vec![0], vec![0])));
    }
}

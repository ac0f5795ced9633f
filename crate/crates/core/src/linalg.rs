//! Exact dense linear algebra over a [`Field`].
//!
//! Matrices act on column vectors: a linear map `V -> W` is stored as a
//! `dim W x dim V` matrix. Echelon forms always pick the leftmost pivot
//! column and the first nonzero row, so every basis computed here is
//! deterministic and re-running a computation is bit-identical.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.field.render(self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            field,
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(field: F, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|n| field.from_i64(*n)).collect())
                .collect(),
        )
    }

    pub fn column(field: F, entries: Vec<F::Elem>) -> Self {
        let rows = entries.len();
        Matrix { field, rows, cols: 1, entries }
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        let f = self.field;
        Self::from_fn(f, self.rows, self.cols, |r, c| f.add(self.get(r, c), other.get(r, c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        let f = self.field;
        Self::from_fn(f, self.rows, self.cols, |r, c| f.sub(self.get(r, c), other.get(r, c)))
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self::from_fn(f, self.rows, self.cols, |r, c| f.neg(self.get(r, c)))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = self.field;
        Self::from_fn(f, self.rows, self.cols, |r, c| f.mul(s, self.get(r, c)))
    }

    /// Composite `self . other` (apply `other` first).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul shape {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let f = self.field;
        let mut out = Self::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = f.mul(a, other.get(k, c));
                    let cur = out.get(r, c).clone();
                    out.set(r, c, f.add(&cur, &prod));
                }
            }
        }
        out
    }

    pub fn hstack(&self, right: &Self) -> Self {
        assert_eq!(self.rows, right.rows, "hstack rows");
        let f = self.field;
        Self::from_fn(f, self.rows, self.cols + right.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                right.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols, "vstack cols");
        let f = self.field;
        Self::from_fn(f, self.rows + below.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                below.get(r - self.rows, c).clone()
            }
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let f = self.field;
        Self::from_fn(f, self.rows + other.rows, self.cols + other.cols, |r, c| {
            if r < self.rows && c < self.cols {
                self.get(r, c).clone()
            } else if r >= self.rows && c >= self.cols {
                other.get(r - self.rows, c - self.cols).clone()
            } else {
                f.zero()
            }
        })
    }

    /// Assemble a block matrix; `blocks[i][j]` must agree on row/column
    /// counts along each block row and column.
    pub fn block(field: F, blocks: &[Vec<Matrix<F>>]) -> Self {
        let row_heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let col_widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let total_rows: usize = row_heights.iter().sum();
        let total_cols: usize = col_widths.iter().sum();
        let mut out = Self::zero(field, total_rows, total_cols);
        let mut r0 = 0;
        for (i, row) in blocks.iter().enumerate() {
            assert_eq!(row.len(), col_widths.len(), "ragged block row");
            let mut c0 = 0;
            for (j, b) in row.iter().enumerate() {
                assert_eq!(b.rows, row_heights[i], "block height at ({i},{j})");
                assert_eq!(b.cols, col_widths[j], "block width at ({i},{j})");
                for r in 0..b.rows {
                    for c in 0..b.cols {
                        out.set(r0 + r, c0 + c, b.get(r, c).clone());
                    }
                }
                c0 += b.cols;
            }
            r0 += row_heights[i];
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let f = self.field;
        Self::from_fn(f, rows.len(), cols.len(), |r, c| {
            self.get(rows.start + r, cols.start + c).clone()
        })
    }

    pub fn col_vec(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, j).clone()).collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // first nonzero entry at or below `row`
            let pivot_row = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col)));
            let pr = match pivot_row {
                Some(pr) => pr,
                None => continue,
            };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(pr, c).clone();
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = f.mul(&inv, m.get(row, c));
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..m.cols {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solve `self * X = b` column by column. Returns `Ok(None)` when the
    /// system is inconsistent. Free variables are set to zero, so the
    /// solution is the canonical one.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {}x{} vs rhs {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let f = self.field;
        let aug = self.hstack(b);
        let (e, pivots) = aug.rref();
        // any pivot in the rhs block means inconsistency
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zero(f, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, e.get(i, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// Basis of the kernel as matrix columns, in ascending free-column order.
    pub fn kernel_basis(&self) -> Self {
        let f = self.field;
        let (e, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zero(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, f.one());
            for (i, &p) in pivots.iter().enumerate() {
                k.set(p, j, f.neg(e.get(i, fc)));
            }
        }
        k
    }

    /// Basis of the column space: the pivot columns of the matrix itself.
    pub fn image_basis(&self) -> Self {
        let f = self.field;
        let (_, pivots) = self.rref();
        let mut im = Self::zero(f, self.rows, pivots.len());
        for (j, &p) in pivots.iter().enumerate() {
            for r in 0..self.rows {
                im.set(r, j, self.get(r, p).clone());
            }
        }
        im
    }

    /// A surjection from the codomain whose kernel is exactly the image:
    /// its rows form the canonical basis of the left null space.
    pub fn cokernel_projection(&self) -> Self {
        self.transpose().kernel_basis().transpose()
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let id = Self::identity(self.field, self.rows);
        match self.solve(&id) {
            Ok(Some(x)) => {
                if self.mul(&x).is_identity() && x.mul(self).is_identity() {
                    Some(x)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.field.render(self.get(r, c))).collect())
            .collect()
    }
}

/// Pushout of `f : D -> A` and `g : D -> B` along their common domain.
///
/// Returns the dimension of the pushout object `P` together with
/// `f' : B -> P` and `g' : A -> P` satisfying `f' . g = g' . f`; `P` is the
/// cokernel of the stacked map `(f, -g) : D -> A (+) B`.
pub fn pushout<F: Field>(f: &Matrix<F>, g: &Matrix<F>) -> Result<(usize, Matrix<F>, Matrix<F>)> {
    if f.cols() != g.cols() {
        return Err(Error::DimensionMismatch(format!(
            "pushout: domains {} vs {}",
            f.cols(),
            g.cols()
        )));
    }
    let stacked = f.vstack(&g.neg());
    let q = stacked.cokernel_projection();
    let a = f.rows();
    let b = g.rows();
    let g_prime = q.submatrix(0..q.rows(), 0..a);
    let f_prime = q.submatrix(0..q.rows(), a..a + b);
    Ok((q.rows(), f_prime, g_prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qm(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_i64_rows(Rationals, rows)
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(Rationals, 2);
        let b = qm(&[&[3], &[4]]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_inconsistent() {
        let a = qm(&[&[1, 1], &[0, 0]]);
        let b = qm(&[&[1], &[1]]);
        assert_eq!(a.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_diagonal_rationals() {
        let a = qm(&[&[2, 0], &[0, 3]]);
        let b = qm(&[&[1], &[1]]);
        let x = a.solve(&b).unwrap().unwrap();
        let q = Rationals;
        assert_eq!(*x.get(0, 0), q.parse("1/2").unwrap());
        assert_eq!(*x.get(1, 0), q.parse("1/3").unwrap());
    }

    #[test]
    fn solve_dim_mismatch_errors() {
        let a = qm(&[&[1, 0]]);
        let b = qm(&[&[1], &[2]]);
        assert!(a.solve(&b).is_err());
    }

    #[test]
    fn kernel_image_cokernel_zero_matrix() {
        let a = Matrix::zero(Rationals, 2, 2);
        assert_eq!(a.kernel_basis().cols(), 2);
        assert_eq!(a.image_basis().cols(), 0);
        assert!(a.cokernel_projection().is_identity());
    }

    #[test]
    fn kernel_image_cokernel_identity() {
        let a = Matrix::identity(Rationals, 3);
        assert_eq!(a.kernel_basis().cols(), 0);
        assert_eq!(a.image_basis().cols(), 3);
        assert_eq!(a.cokernel_projection().rows(), 0);
    }

    #[test]
    fn kernel_over_f2_matches_enumeration() {
        // oracle: enumerate all four vectors of F_2^2 and keep those
        // annihilated by [1 1]; compare with the computed kernel span
        let f2 = PrimeField::new(2).unwrap();
        let a = Matrix::from_rows(f2, vec![vec![1u64, 1u64]]);
        let mut null_vectors = Vec::new();
        for x in 0..2u64 {
            for y in 0..2u64 {
                if (x + y) % 2 == 0 && (x, y) != (0, 0) {
                    null_vectors.push(vec![x, y]);
                }
            }
        }
        assert_eq!(null_vectors, vec![vec![1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!((*k.get(0, 0), *k.get(1, 0)), (1, 1));
        assert_eq!(a.image_basis().cols(), 1);
    }

    #[test]
    fn pushout_identity_pair() {
        let id = Matrix::identity(Rationals, 2);
        let (p, f1, g1) = pushout(&id, &id).unwrap();
        assert_eq!(p, 2);
        assert_eq!(f1.mul(&id), g1.mul(&id));
    }

    #[test]
    fn pushout_zero_domain() {
        let f: Matrix<Rationals> = Matrix::zero(Rationals, 2, 0);
        let g: Matrix<Rationals> = Matrix::zero(Rationals, 3, 0);
        let (p, _, _) = pushout(&f, &g).unwrap();
        assert_eq!(p, 5);
    }

    #[test]
    fn pushout_line_against_zero_map() {
        let f = qm(&[&[1]]);
        let g = qm(&[&[0]]);
        let (p, f1, g1) = pushout(&f, &g).unwrap();
        // oracle: rank of the stacked 2x1 matrix is 1, so dim P = 2 - 1 = 1
        assert_eq!(p, 1);
        assert_eq!(f1.mul(&g), g1.mul(&f));
    }

    #[test]
    fn determinism_bit_identical() {
        let a = qm(&[&[2, 4, 1], &[3, 9, 2], &[5, 13, 3]]);
        let b = qm(&[&[1], &[2], &[3]]);
        let x1 = a.solve(&b).unwrap();
        let x2 = a.solve(&b).unwrap();
        assert_eq!(x1, x2);
        assert_eq!(a.rref(), a.rref());
    }
}

//! Dense exact matrices in row-major order.
//!
//! Vectors are columns; a matrix acts on the left, so `m.mul_vec(&v)` is the
//! image of `v`. Linear maps between tensor-product spaces use one global
//! index convention everywhere in this crate: the basis vector `e_i (x) e_j`
//! of `V (x) W` has index `i * dim(W) + j`. [`Matrix::kron`] realizes exactly
//! that convention, and row-major storage makes `m.data()` the matching
//! vectorization of `m` itself, with entry `(r, c)` at position
//! `r * cols + c`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: alloc::vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Build from a closure over `(row, col)`.
    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                assert_eq!(s.field(), field, "entry field mismatch");
                data.push(s);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Build from explicit rows; all rows must share one length.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<Scalar>], cols: usize) -> Self {
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
        }
        Matrix::from_fn(field, rows.len(), cols, |r, c| rows[r][c].clone())
    }

    /// Reassemble a matrix from its row-major vectorization.
    pub fn from_vec(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "vectorization length mismatch");
        for s in &data {
            assert_eq!(s.field(), field, "entry field mismatch");
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Convenience constructor from integer entries.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows.len(), cols, |r, c| {
            Scalar::from_i64(field, rows[r][c])
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries; this is also the vectorization of the matrix.
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self[(r, c)].add(&other[(r, c)])
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self[(r, c)].sub(&other[(r, c)])
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| self[(r, c)].neg())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| self[(r, c)].mul(s))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(r, c)] = out[(r, c)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() && !self[(r, c)].is_zero() {
                        acc = acc.add(&self[(r, c)].mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = acc.add(&self[(i, i)]);
        }
        acc
    }

    /// Kronecker product under the global convention: the image of
    /// `e_i (x) e_j` is `sum a[r,i] b[s,j] e_{r * b.rows + s}`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        Matrix::from_fn(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (ra, rb) = (r / other.rows, r % other.rows);
                let (ca, cb) = (c / other.cols, c % other.cols);
                self[(ra, ca)].mul(&other[(rb, cb)])
            },
        )
    }

    /// Stack side by side: `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    /// Stack on top of each other: `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        Matrix::from_fn(self.field, self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self[(r, c)].clone()
            } else {
                other[(r - self.rows, c)].clone()
            }
        })
    }

    /// Reduced row echelon form and the list of pivot columns.
    ///
    /// Pivots are normalized to 1 and are the only nonzero entries of their
    /// columns; pivot columns are strictly increasing. The result is the
    /// canonical representative of the row space, so two row spaces are equal
    /// exactly when their reduced forms (with zero rows dropped) coincide.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(src) = found else { continue };
            m.swap_rows(pivot_row, src);
            let inv = m[(pivot_row, col)].inv();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    m.subtract_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One particular solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rhs = Matrix::from_fn(self.field, self.rows, 1, |r, _| b[r].clone());
        let (red, pivots) = self.hstack(&rhs).rref();
        // A pivot in the appended column means the system is inconsistent.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![self.field.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = red[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let (red, pivots) = self.hstack(&Matrix::identity(self.field, n)).rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |r, c| {
            red[(r, n + c)].clone()
        }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            self[(r, c)] = self[(r, c)].mul(s);
        }
    }

    /// row(r) -= factor * row(src)
    fn subtract_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let delta = self[(src, c)].mul(factor);
            self[(r, c)] = self[(r, c)].sub(&delta);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn rref_collapses_dependent_rows() {
        let m = Matrix::from_i64(q(), &[&[2, 4], &[1, 2]]);
        let (red, pivots) = m.rref();
        assert_eq!(red, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, alloc::vec![0]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64(q(), &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let (red, _) = m.rref();
        let (again, _) = red.rref();
        assert_eq!(red, again);
    }

    #[test]
    fn mul_and_identity() {
        let m = Matrix::from_i64(f2(), &[&[1, 1], &[0, 1]]);
        let id = Matrix::identity(f2(), 2);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
        // Over F_2 this matrix is an involution.
        assert_eq!(m.mul(&m), id);
    }

    #[test]
    fn kron_convention() {
        // a maps e_1 to e_0; a (x) id must map e_{2+j} to e_j.
        let a = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]);
        let id = Matrix::identity(q(), 2);
        let t = a.kron(&id);
        for j in 0..2 {
            let mut v = alloc::vec![q().zero(); 4];
            v[2 + j] = q().one();
            let image = t.mul_vec(&v);
            let mut expected = alloc::vec![q().zero(); 4];
            expected[j] = q().one();
            assert_eq!(image, expected);
        }
        // Basis vectors of the left factor map to zero.
        for j in 0..2 {
            let mut v = alloc::vec![q().zero(); 4];
            v[j] = q().one();
            assert!(t.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn kron_is_multiplicative() {
        let a = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(q(), &[&[0, 1], &[1, 1]]);
        let c = Matrix::from_i64(q(), &[&[2, 0], &[1, 1]]);
        let d = Matrix::from_i64(q(), &[&[1, 1], &[0, 1]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn solve_finds_a_solution() {
        let m = Matrix::from_i64(f2(), &[&[1, 1]]);
        let b = alloc::vec![f2().one()];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // Inconsistent system.
        let zero = Matrix::zeros(f2(), 1, 2);
        assert!(zero.solve(&b).is_none());
    }

    #[test]
    fn inverse_round_trips() {
        let m = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        let singular = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn vectorization_matches_row_major() {
        let m = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let flat: Vec<i64> = alloc::vec![1, 2, 3, 4];
        for (k, expected) in flat.iter().enumerate() {
            assert_eq!(m.data()[k], Scalar::from_i64(q(), *expected));
        }
        assert_eq!(
            Matrix::from_vec(q(), 2, 2, m.data().to_vec()),
            m
        );
    }
}

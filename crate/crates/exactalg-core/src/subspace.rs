//! Subspaces of k^n in echelon-canonical form, their lattice operations,
//! invariant-subspace fixpoints, and exhaustive enumeration over prime
//! fields.
//!
//! A subspace is stored as the reduced row echelon basis of its spanning set
//! with zero rows dropped. That representative is unique, so `==` on
//! [`Subspace`] is semantic equality and subspaces can be collected into
//! sets and compared across independently computed routes.

use alloc::vec::Vec;

use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    /// Echelon-canonical basis, one row per basis vector; no zero rows.
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Span of a list of vectors.
    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        let m = Matrix::from_rows(field, vectors, ambient);
        Subspace::from_rows_of(&m)
    }

    /// Span of the rows of a matrix.
    pub fn from_rows_of(m: &Matrix) -> Self {
        let (red, pivots) = m.rref();
        let basis = Matrix::from_fn(m.field(), pivots.len(), m.cols(), |r, c| red[(r, c)].clone());
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// Pivot columns of the canonical basis.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.basis.rref().1
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let stacked = self
            .basis
            .vstack(&Matrix::from_rows(self.field, &[v.to_vec()], self.ambient));
        stacked.rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.check_compatible(other);
        self.sum(other).dim() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        Subspace::from_rows_of(&self.basis.vstack(&other.basis))
    }

    /// Intersection, via the kernel of `[U^T | -V^T]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.check_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        let ut = self.basis.transpose();
        let vt = other.basis.transpose().neg();
        let paired = kernel(&ut.hstack(&vt));
        let vectors: Vec<Vec<Scalar>> = paired
            .basis_vectors()
            .into_iter()
            .map(|ab| ut.mul_vec(&ab[..self.dim()]))
            .collect();
        Subspace::from_spanning(self.field, self.ambient, &vectors)
    }

    /// A matrix `N` with this subspace exactly `{ x : N x = 0 }`.
    pub fn annihilator(&self) -> Matrix {
        kernel(&self.basis).basis().clone()
    }

    /// `{ x : m x in self }`.
    pub fn preimage(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient, "map does not land in the ambient space");
        kernel(&self.annihilator().mul(m))
    }

    /// Image of this subspace under a linear map.
    pub fn map_by(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map does not start from the ambient space");
        let vectors: Vec<Vec<Scalar>> = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect();
        Subspace::from_spanning(self.field, m.rows(), &vectors)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies
    /// outside the subspace.
    ///
    /// Because each basis row is 1 at its own pivot and 0 at all other
    /// pivots, the coordinates are just the pivot entries of `v`; the
    /// reconstruction check then decides membership.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector does not live in the ambient space");
        let coords: Vec<Scalar> = self
            .pivot_columns()
            .iter()
            .map(|&c| v[c].clone())
            .collect();
        let mut rebuilt = alloc::vec![self.field.zero(); self.ambient];
        for (r, coeff) in coords.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                rebuilt[j] = rebuilt[j].add(&self.basis[(r, j)].mul(coeff));
            }
        }
        if rebuilt.as_slice() == v { Some(coords) } else { None }
    }

    fn check_compatible(&self, other: &Subspace) {
        assert_eq!(self.field, other.field, "subspace field mismatch");
        assert_eq!(self.ambient, other.ambient, "subspace ambient mismatch");
    }
}

/// Null space `{ x : m x = 0 }`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (red, pivots) = m.rref();
    let n = m.cols();
    let field = m.field();
    let mut vectors = Vec::new();
    let mut is_pivot = alloc::vec![None; n];
    for (row, &col) in pivots.iter().enumerate() {
        is_pivot[col] = Some(row);
    }
    for free in 0..n {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = alloc::vec![field.zero(); n];
        v[free] = field.one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = red[(row, free)].neg();
        }
        vectors.push(v);
    }
    Subspace::from_spanning(field, n, &vectors)
}

/// Column space of a matrix, as a subspace of k^rows.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_rows_of(&m.transpose())
}

/// The largest subspace of `w` carried into itself by every map in `maps`.
///
/// Iterates `U <- U  ∩  f^{-1}(U)` over all maps until stable; the dimension
/// strictly decreases at every non-final step, so this terminates. The result
/// is the greatest fixpoint: it contains every subspace of `w` invariant
/// under all the maps.
pub fn largest_invariant_subspace(maps: &[Matrix], w: &Subspace) -> Subspace {
    for m in maps {
        assert_eq!(m.rows(), w.ambient(), "invariance maps must be endomorphisms");
        assert_eq!(m.cols(), w.ambient(), "invariance maps must be endomorphisms");
    }
    let mut current = w.clone();
    loop {
        let mut next = current.clone();
        for m in maps {
            next = next.intersect(&current.preimage(m));
            if next.is_zero() {
                break;
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Lazily enumerate every subspace of F_p^n, each exactly once, by running
/// over echelon shapes (pivot-column sets) and all fillings of their free
/// entries.
///
/// Guarded by `p^n <= bound` so a call cannot silently start an infeasible
/// walk; over Q enumeration is refused outright.
pub fn enumerate_subspaces(
    field: FieldSpec,
    n: usize,
    bound: u128,
) -> Result<SubspaceEnumerator> {
    if field.is_rational() {
        return Err(Error::RationalEnumeration);
    }
    let p = field.characteristic() as u128;
    let mut required = 1u128;
    for _ in 0..n {
        required = required
            .checked_mul(p)
            .ok_or(Error::EnumerationBound {
                required: u128::MAX,
                bound,
            })?;
    }
    if required > bound {
        return Err(Error::EnumerationBound { required, bound });
    }
    assert!(n < 64, "ambient dimension out of range for enumeration");
    Ok(SubspaceEnumerator {
        field,
        n,
        p: field.characteristic(),
        mask: 0,
        odometer: Vec::new(),
        free_slots: Vec::new(),
        fresh_mask: true,
        done: false,
    })
}

pub struct SubspaceEnumerator {
    field: FieldSpec,
    n: usize,
    p: u64,
    /// Bit set of pivot columns for the current echelon shape.
    mask: u64,
    /// Mixed-radix counter over the free entries of the current shape.
    odometer: Vec<u64>,
    /// `(row, col)` positions of free entries for the current shape.
    free_slots: Vec<(usize, usize)>,
    fresh_mask: bool,
    done: bool,
}

impl SubspaceEnumerator {
    fn pivots(&self) -> Vec<usize> {
        (0..self.n).filter(|c| self.mask >> c & 1 == 1).collect()
    }

    /// Free entries sit to the right of their row's pivot, in non-pivot
    /// columns; everything else in a reduced echelon basis is forced.
    fn compute_free_slots(&mut self) {
        let pivots = self.pivots();
        self.free_slots.clear();
        for (row, &pc) in pivots.iter().enumerate() {
            for col in pc + 1..self.n {
                if self.mask >> col & 1 == 0 {
                    self.free_slots.push((row, col));
                }
            }
        }
        self.odometer = alloc::vec![0; self.free_slots.len()];
    }

    fn current(&self) -> Subspace {
        let pivots = self.pivots();
        let mut basis = Matrix::zeros(self.field, pivots.len(), self.n);
        for (row, &pc) in pivots.iter().enumerate() {
            basis[(row, pc)] = self.field.one();
        }
        for (slot, &(row, col)) in self.free_slots.iter().enumerate() {
            basis[(row, col)] = Scalar::from_i64(self.field, self.odometer[slot] as i64);
        }
        // The construction produces a reduced echelon basis directly.
        Subspace {
            field: self.field,
            ambient: self.n,
            basis,
        }
    }

    fn advance(&mut self) {
        for slot in (0..self.odometer.len()).rev() {
            self.odometer[slot] += 1;
            if self.odometer[slot] < self.p {
                return;
            }
            self.odometer[slot] = 0;
        }
        // Odometer wrapped: move to the next pivot set.
        if self.mask as u128 + 1 >= 1u128 << self.n {
            self.done = true;
        } else {
            self.mask += 1;
            self.fresh_mask = true;
        }
    }
}

impl Iterator for SubspaceEnumerator {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        if self.fresh_mask {
            self.compute_free_slots();
            self.fresh_mask = false;
        }
        let item = self.current();
        self.advance();
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn e(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    }

    #[test]
    fn kernel_of_sum_map() {
        let m = Matrix::from_i64(f2(), &[&[1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&[f2().one(), f2().one()]));
    }

    #[test]
    fn image_is_column_space() {
        let m = Matrix::from_i64(f2(), &[&[1], &[1]]);
        let im = image(&m);
        assert_eq!(im.dim(), 1);
        assert!(im.contains_vector(&[f2().one(), f2().one()]));
    }

    #[test]
    fn canonical_equality() {
        // Same plane described by two different spanning sets.
        let a = Subspace::from_spanning(
            q(),
            3,
            &[
                vec![q().one(), q().one(), q().zero()],
                vec![q().zero(), q().one(), q().one()],
            ],
        );
        let b = Subspace::from_spanning(
            q(),
            3,
            &[
                vec![q().one(), q().zero(), Scalar::from_i64(q(), -1)],
                vec![q().one(), Scalar::from_i64(q(), 2), q().one()],
            ],
        );
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let u = Subspace::from_spanning(f2(), 3, &[e(f2(), 3, 0), e(f2(), 3, 1)]);
        let v = Subspace::from_spanning(f2(), 3, &[e(f2(), 3, 1), e(f2(), 3, 2)]);
        let w = u.intersect(&v);
        assert_eq!(w, Subspace::from_spanning(f2(), 3, &[e(f2(), 3, 1)]));
    }

    #[test]
    fn annihilator_cuts_out_the_subspace() {
        let v = Subspace::from_spanning(
            q(),
            3,
            &[vec![q().one(), q().one(), q().zero()]],
        );
        let ann = v.annihilator();
        assert_eq!(ann.rows(), 2);
        for b in v.basis_vectors() {
            assert!(ann.mul_vec(&b).iter().all(Scalar::is_zero));
        }
        assert_eq!(kernel(&ann), v);
    }

    #[test]
    fn preimage_under_projection() {
        // Projection of k^3 onto the first two coordinates.
        let m = Matrix::from_i64(q(), &[&[1, 0, 0], &[0, 1, 0]]);
        let line = Subspace::from_spanning(q(), 2, &[vec![q().one(), q().zero()]]);
        let pre = line.preimage(&m);
        assert_eq!(pre.dim(), 2);
        assert!(pre.contains_vector(&e(q(), 3, 0)));
        assert!(pre.contains_vector(&e(q(), 3, 2)));
        assert!(!pre.contains_vector(&e(q(), 3, 1)));
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomials() {
        let count = |field: FieldSpec, n: usize| {
            enumerate_subspaces(field, n, 1 << 16).unwrap().count()
        };
        assert_eq!(count(f2(), 1), 2);
        assert_eq!(count(f2(), 2), 5);
        assert_eq!(count(f3(), 2), 6);
        assert_eq!(count(f2(), 3), 16);
        assert_eq!(count(f2(), 4), 67);
        assert_eq!(count(f3(), 3), 28);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_canonical() {
        let all: Vec<Subspace> = enumerate_subspaces(f2(), 3, 1 << 16).unwrap().collect();
        for (i, a) in all.iter().enumerate() {
            // Canonical: rebuilding from the basis changes nothing.
            assert_eq!(&Subspace::from_rows_of(a.basis()), a);
            for b in all.iter().skip(i + 1) {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn enumeration_guards() {
        assert!(matches!(
            enumerate_subspaces(q(), 2, 1 << 16),
            Err(Error::RationalEnumeration)
        ));
        assert!(matches!(
            enumerate_subspaces(f2(), 20, 1 << 16),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn nilpotent_shift_has_no_invariant_line_through_e0_only() {
        // Shift e1 -> e0 -> 0; the largest invariant subspace of span{e0, e1}
        // is the whole plane, of span{e1} is zero.
        let shift = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]);
        let plane = Subspace::full(q(), 2);
        assert_eq!(largest_invariant_subspace(&[shift.clone()], &plane), plane);
        let line1 = Subspace::from_spanning(q(), 2, &[e(q(), 2, 1)]);
        assert!(largest_invariant_subspace(&[shift.clone()], &line1).is_zero());
        let line0 = Subspace::from_spanning(q(), 2, &[e(q(), 2, 0)]);
        assert_eq!(largest_invariant_subspace(&[shift], &line0), line0);
    }

    #[test]
    fn largest_invariant_subspace_agrees_with_exhaustive_search() {
        // Two maps on F_2^4; compare the fixpoint against a full lattice walk.
        let a = Matrix::from_i64(f2(), &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let b = Matrix::from_i64(f2(), &[&[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0]]);
        let w = Subspace::from_spanning(
            f2(),
            4,
            &[e(f2(), 4, 0), e(f2(), 4, 1), e(f2(), 4, 3)],
        );
        let fix = largest_invariant_subspace(&[a.clone(), b.clone()], &w);
        let mut best = Subspace::zero(f2(), 4);
        for s in enumerate_subspaces(f2(), 4, 1 << 16).unwrap() {
            let invariant = [&a, &b]
                .iter()
                .all(|m| s.map_by(m).dim() == s.map_by(m).intersect(&s).dim());
            if invariant && w.contains(&s) && s.dim() > best.dim() {
                best = s;
            }
        }
        assert_eq!(fix, best);
    }
}

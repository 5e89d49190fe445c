//! Randomized linear-algebra laws that hold for every matrix and subspace,
//! complementing the deterministic in-module tests: rank-nullity, the
//! modular law for the subspace lattice, and canonicity of echelon spans.

use exactalg_core::subspace::{image, kernel, Subspace};
use exactalg_core::{FieldSpec, Matrix, Scalar};
use proptest::prelude::*;

#[derive(Clone, Copy, Debug)]
enum FieldTag {
    F2,
    F3,
    Q,
}

impl FieldTag {
    fn spec(self) -> FieldSpec {
        match self {
            FieldTag::F2 => FieldSpec::prime(2).unwrap(),
            FieldTag::F3 => FieldSpec::prime(3).unwrap(),
            FieldTag::Q => FieldSpec::rationals(),
        }
    }
}

fn field_tag() -> impl Strategy<Value = FieldTag> {
    prop_oneof![Just(FieldTag::F2), Just(FieldTag::F3), Just(FieldTag::Q)]
}

fn scalars(field: FieldSpec, raw: &[i64]) -> Vec<Scalar> {
    raw.iter().map(|&x| Scalar::from_i64(field, x)).collect()
}

fn matrix(tag: FieldTag, rows: usize, cols: usize, raw: &[i64]) -> Matrix {
    let field = tag.spec();
    let entries = scalars(field, raw);
    Matrix::from_fn(field, rows, cols, |r, c| entries[r * cols + c].clone())
}

prop_compose! {
    fn sized_matrix()(
        tag in field_tag(),
        rows in 1usize..=5,
        cols in 1usize..=5,
    )(
        raw in proptest::collection::vec(-4i64..=4, rows * cols),
        tag in Just(tag),
        rows in Just(rows),
        cols in Just(cols),
    ) -> Matrix {
        matrix(tag, rows, cols, &raw)
    }
}

prop_compose! {
    fn spanning_sets()(
        tag in field_tag(),
        ambient in 1usize..=5,
        w_count in 1usize..=4,
        v_count in 0usize..=3,
    )(
        w_raw in proptest::collection::vec(-4i64..=4, w_count * ambient),
        v_raw in proptest::collection::vec(-4i64..=4, v_count * ambient),
        u_take in 0usize..=4,
        tag in Just(tag),
        ambient in Just(ambient),
        w_count in Just(w_count),
        v_count in Just(v_count),
    ) -> (FieldSpec, usize, Vec<Vec<Scalar>>, Vec<Vec<Scalar>>, usize) {
        let field = tag.spec();
        let w: Vec<Vec<Scalar>> = (0..w_count)
            .map(|i| scalars(field, &w_raw[i * ambient..(i + 1) * ambient]))
            .collect();
        let v: Vec<Vec<Scalar>> = (0..v_count)
            .map(|i| scalars(field, &v_raw[i * ambient..(i + 1) * ambient]))
            .collect();
        (field, ambient, w, v, u_take.min(w_count))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_nullity_accounts_for_every_column(m in sized_matrix()) {
        prop_assert_eq!(kernel(&m).dim() + image(&m).dim(), m.cols());
    }

    #[test]
    fn echelon_spans_are_canonical(m in sized_matrix()) {
        let vectors: Vec<Vec<Scalar>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m[(r, c)].clone()).collect())
            .collect();
        let span = Subspace::from_spanning(m.field(), m.cols(), &vectors);
        let again = Subspace::from_spanning(m.field(), m.cols(), &span.basis_vectors());
        prop_assert_eq!(&span, &again);
        for v in &vectors {
            prop_assert!(span.contains_vector(v));
        }
    }

    /// For u ⊆ w the subspace lattice is modular:
    /// u + (v ∩ w) = (u + v) ∩ w.
    #[test]
    fn subspace_lattice_is_modular(
        (field, ambient, w_vectors, v_vectors, u_take) in spanning_sets()
    ) {
        let w = Subspace::from_spanning(field, ambient, &w_vectors);
        let u = Subspace::from_spanning(field, ambient, &w_vectors[..u_take]);
        let v = Subspace::from_spanning(field, ambient, &v_vectors);
        prop_assert!(w.contains(&u));
        let lhs = u.sum(&v.intersect(&w));
        let rhs = u.sum(&v).intersect(&w);
        prop_assert_eq!(lhs, rhs);
    }
}

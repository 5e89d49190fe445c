//! Finite-dimensional associative unital algebras over an exact field,
//! presented by structure constants on a fixed basis.
//!
//! The radical is computed by the trace form in characteristic zero and by
//! the layered trace method in characteristic p (the chain of subspaces cut
//! out by the functionals tr(X^(p^i))/p^i taken mod p). Every radical result
//! is post-verified: it must be a nilpotent two-sided ideal with a
//! semisimple quotient, and a failure surfaces as an error rather than a
//! wrong answer. A brute-force maximal-nilpotent-ideal search over all
//! subspaces is kept alongside as an independent oracle for small fields.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};
use crate::subspace::{enumerate_subspaces, kernel, Subspace};
use crate::{Error, Matrix, Result};

/// One failed identity, with the basis indices that witnessed it.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub law: &'static str,
    pub indices: Vec<usize>,
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} at {:?}", self.law, self.indices)
    }
}

/// Outcome of an axiom check: empty means every identity held.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, law: &'static str, indices: &[usize], holds: bool) {
        if !holds {
            self.violations.push(Violation {
                law,
                indices: indices.to_vec(),
            });
        }
    }
}

/// An associative unital algebra with a fixed basis b_0..b_{n-1}.
///
/// Stores the left- and right-multiplication matrices of the basis; column j
/// of `left[i]` is the coordinate vector of b_i * b_j.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    unit: Vec<Scalar>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Algebra {
    /// Build from a multiplication rule on basis indices; `mul(i, j)` must
    /// return the coordinates of b_i * b_j.
    pub fn from_mul(
        field: FieldSpec,
        dim: usize,
        unit: Vec<Scalar>,
        mut mul: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Algebra {
        assert_eq!(unit.len(), dim, "unit vector length mismatch");
        let mut products = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                let p = mul(i, j);
                assert_eq!(p.len(), dim, "product vector length mismatch");
                row.push(p);
            }
            products.push(row);
        }
        let left = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| products[i][j][k].clone()))
            .collect();
        let right = (0..dim)
            .map(|j| Matrix::from_fn(field, dim, dim, |k, i| products[i][j][k].clone()))
            .collect();
        Algebra {
            field,
            dim,
            unit,
            left,
            right,
        }
    }

    /// Build from sparse structure constants: a triple `(i, j, k, c)` says
    /// that b_i * b_j has coefficient c on b_k. Unlisted coefficients are 0.
    pub fn from_triples(
        field: FieldSpec,
        dim: usize,
        unit: Vec<Scalar>,
        triples: &[(usize, usize, usize, Scalar)],
    ) -> Result<Algebra> {
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                context: "algebra unit vector",
                expected: dim,
                found: unit.len(),
            });
        }
        let mut table = alloc::vec![alloc::vec![field.zero(); dim * dim]; dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch {
                    context: "structure constant index",
                    expected: dim,
                    found: (*i).max(*j).max(*k),
                });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            table[*i][*j * dim + *k] = table[*i][*j * dim + *k].add(c);
        }
        Ok(Algebra::from_mul(field, dim, unit, |i, j| {
            (0..dim).map(|k| table[i][j * dim + k].clone()).collect()
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn left_mult(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right_mult(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.left[i].col(j)
    }

    /// Matrix of y -> x * y.
    pub fn left_mult_of(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim, "element length mismatch");
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.left[i].scale(c));
        }
        m
    }

    /// Matrix of x -> x * y.
    pub fn right_mult_of(&self, y: &[Scalar]) -> Matrix {
        assert_eq!(y.len(), self.dim, "element length mismatch");
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (j, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.right[j].scale(c));
        }
        m
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "element length mismatch");
        let mut out = alloc::vec![self.field.zero(); self.dim];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let part = self.left[i].mul_vec(y);
            for (o, p) in out.iter_mut().zip(part) {
                *o = o.add(&p.mul(c));
            }
        }
        out
    }

    /// x^e by binary powering; x^0 is the unit.
    pub fn power(&self, x: &[Scalar], mut e: u64) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            base = self.multiply(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_idempotent(&self, x: &[Scalar]) -> bool {
        self.multiply(x, x) == x
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Verify associativity and the unit laws on all basis elements.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        for i in 0..self.dim {
            let left_unit = self.multiply(&self.unit, &coordinate_vector(self.field, self.dim, i));
            report.record(
                "unit * b_i = b_i",
                &[i],
                left_unit == coordinate_vector(self.field, self.dim, i),
            );
            let right_unit =
                self.multiply(&coordinate_vector(self.field, self.dim, i), &self.unit);
            report.record(
                "b_i * unit = b_i",
                &[i],
                right_unit == coordinate_vector(self.field, self.dim, i),
            );
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let jk = self.basis_product(j, k);
                    let lhs = self.multiply(&ij, &coordinate_vector(self.field, self.dim, k));
                    let rhs = self.multiply(&coordinate_vector(self.field, self.dim, i), &jk);
                    report.record("(b_i b_j) b_k = b_i (b_j b_k)", &[i, j, k], lhs == rhs);
                }
            }
        }
        report
    }

    /// Elements commuting with the whole algebra.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero(self.field, 0);
        }
        let mut stacked = self.left[0].sub(&self.right[0]);
        for i in 1..self.dim {
            stacked = stacked.vstack(&self.left[i].sub(&self.right[i]));
        }
        kernel(&stacked)
    }

    /// Greedy set of basis indices generating the algebra as a unital
    /// algebra. Used to shrink linearity constraints: a map commuting with
    /// the generators' action commutes with everything.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.subalgebra_closure(&Subspace::from_spanning(
            self.field,
            self.dim,
            &[self.unit.clone()],
        ));
        for i in 0..self.dim {
            let e = coordinate_vector(self.field, self.dim, i);
            if span.contains_vector(&e) {
                continue;
            }
            gens.push(i);
            let widened = span.sum(&Subspace::from_spanning(self.field, self.dim, &[e]));
            span = self.subalgebra_closure(&widened);
            if span.dim() == self.dim {
                break;
            }
        }
        gens
    }

    /// Smallest subspace containing `seed` and closed under multiplication.
    pub fn subalgebra_closure(&self, seed: &Subspace) -> Subspace {
        let mut current = seed.clone();
        loop {
            let basis = current.basis_vectors();
            let mut products = Vec::new();
            for x in &basis {
                for y in &basis {
                    products.push(self.multiply(x, y));
                }
            }
            let next = current.sum(&Subspace::from_spanning(self.field, self.dim, &products));
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// Present a multiplicatively closed subspace as an algebra in its own
    /// right. `unit_vec` (ambient coordinates) must lie in the subspace and
    /// act as its identity. Returns the algebra together with the embedding
    /// matrix taking its coordinates back to ambient ones.
    pub fn subalgebra_with_unit(
        &self,
        space: &Subspace,
        unit_vec: &[Scalar],
    ) -> Result<(Algebra, Matrix)> {
        let k = space.dim();
        let basis = space.basis_vectors();
        let unit_coords = space.coordinates_of(unit_vec).ok_or_else(|| {
            Error::AxiomViolation(String::from("subalgebra unit lies outside the subspace"))
        })?;
        let mut table = Vec::with_capacity(k * k);
        for x in &basis {
            for y in &basis {
                let p = self.multiply(x, y);
                let coords = space.coordinates_of(&p).ok_or_else(|| {
                    Error::AxiomViolation(String::from(
                        "subspace is not closed under multiplication",
                    ))
                })?;
                table.push(coords);
            }
        }
        for (r, x) in basis.iter().enumerate() {
            if self.multiply(unit_vec, x) != *x || self.multiply(x, unit_vec) != *x {
                return Err(Error::AxiomViolation(format!(
                    "supplied unit does not fix subalgebra basis vector {r}"
                )));
            }
        }
        let algebra = Algebra::from_mul(self.field, k, unit_coords, |i, j| {
            table[i * k + j].clone()
        });
        let embedding = space.basis().transpose();
        Ok((algebra, embedding))
    }

    /// Matrix of x -> x^p on a commutative algebra in characteristic p.
    /// Its fixed space has dimension equal to the number of simple factors
    /// of the semisimple quotient when the algebra is semisimple.
    pub fn frobenius_matrix(&self) -> Matrix {
        let p = self.field.characteristic();
        assert!(p > 0, "Frobenius over characteristic zero");
        assert!(self.is_commutative(), "Frobenius on a noncommutative algebra");
        Matrix::from_fn(self.field, self.dim, self.dim, |k, i| {
            self.power(&coordinate_vector(self.field, self.dim, i), p)[k].clone()
        })
    }

    /// Validate a subspace as a two-sided ideal.
    pub fn ideal_from(&self, space: Subspace) -> Result<IdealSubspace> {
        assert_eq!(space.ambient(), self.dim, "ideal ambient mismatch");
        for v in space.basis_vectors() {
            for i in 0..self.dim {
                let e = coordinate_vector(self.field, self.dim, i);
                if !space.contains_vector(&self.multiply(&e, &v)) {
                    return Err(Error::AxiomViolation(format!(
                        "subspace is not a left ideal: b_{i} * v escapes"
                    )));
                }
                if !space.contains_vector(&self.multiply(&v, &e)) {
                    return Err(Error::AxiomViolation(format!(
                        "subspace is not a right ideal: v * b_{i} escapes"
                    )));
                }
            }
        }
        Ok(IdealSubspace { space })
    }

    /// Smallest two-sided ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> IdealSubspace {
        let mut current = seed.clone();
        loop {
            let mut extra = Vec::new();
            for v in current.basis_vectors() {
                for i in 0..self.dim {
                    extra.push(self.left[i].mul_vec(&v));
                    extra.push(self.right[i].mul_vec(&v));
                }
            }
            let next = current.sum(&Subspace::from_spanning(self.field, self.dim, &extra));
            if next.dim() == current.dim() {
                return IdealSubspace { space: current };
            }
            current = next;
        }
    }

    /// Span of all products x * y with x in `a`, y in `b`.
    pub fn ideal_product(&self, a: &IdealSubspace, b: &IdealSubspace) -> IdealSubspace {
        let mut products = Vec::new();
        for x in a.space.basis_vectors() {
            for y in b.space.basis_vectors() {
                products.push(self.multiply(&x, &y));
            }
        }
        let space = Subspace::from_spanning(self.field, self.dim, &products);
        IdealSubspace { space }
    }

    /// Smallest k >= 1 with I^k = 0, or `None` if the powers stabilize at a
    /// nonzero ideal (so no such k exists).
    pub fn nilpotency_index(&self, ideal: &IdealSubspace) -> Option<usize> {
        let mut current = ideal.clone();
        let mut k = 1;
        loop {
            if current.space.is_zero() {
                return Some(k);
            }
            let next = self.ideal_product(&current, ideal);
            if next.space.dim() == current.space.dim() {
                return None;
            }
            current = next;
            k += 1;
        }
    }

    /// The Jacobson radical, with mandatory post-verification.
    pub fn radical(&self) -> Result<IdealSubspace> {
        let space = self.radical_space()?;
        let ideal = self.ideal_from(space).map_err(|_| {
            Error::PostVerification(String::from("radical candidate is not a two-sided ideal"))
        })?;
        if self.nilpotency_index(&ideal).is_none() {
            return Err(Error::PostVerification(String::from(
                "radical candidate is not nilpotent",
            )));
        }
        let quotient = self.quotient(&ideal);
        if !quotient.algebra.radical_space()?.is_zero() {
            return Err(Error::PostVerification(String::from(
                "quotient by the radical candidate is not semisimple",
            )));
        }
        Ok(ideal)
    }

    fn radical_space(&self) -> Result<Subspace> {
        if self.dim == 0 {
            return Ok(Subspace::zero(self.field, 0));
        }
        if self.field.is_rational() {
            Ok(self.radical_trace_form())
        } else {
            self.radical_layered()
        }
    }

    /// Characteristic zero: the radical is the kernel of the trace form
    /// (x, y) -> tr(L_x L_y) on the regular representation.
    fn radical_trace_form(&self) -> Subspace {
        let n = self.dim;
        let gram = Matrix::from_fn(self.field, n, n, |j, i| {
            let mut t = self.field.zero();
            for a in 0..n {
                for b in 0..n {
                    t = t.add(&self.left[i][(a, b)].mul(&self.left[j][(b, a)]));
                }
            }
            t
        });
        kernel(&gram)
    }

    /// Characteristic p: the layered trace method. Starting from the whole
    /// algebra, each stage i cuts the current layer down by the functional
    /// f_i(z) = (tr(Z^(p^i)) mod p^(i+1)) / p^i, where Z is an integral lift
    /// of the regular representation of z; after floor(log_p dim) + 1 stages
    /// the layer is the radical. All heavy arithmetic runs on u64 lifts.
    fn radical_layered(&self) -> Result<Subspace> {
        let p = self.field.characteristic();
        let n = self.dim;
        let lifted: Vec<Vec<u64>> = self.left.iter().map(lift_matrix).collect();
        let mut layer: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut v = alloc::vec![0u64; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut stages = 0u32;
        while (p as u128).pow(stages + 1) <= n as u128 {
            stages += 1;
        }
        for stage in 0..=stages {
            if layer.is_empty() {
                break;
            }
            let modulus = (p as u128).pow(stage + 1) as u64;
            let scale = (p as u128).pow(stage) as u64;
            let reps: Vec<Vec<u64>> = layer
                .iter()
                .map(|x| assemble_rep(x, &lifted, n, modulus))
                .collect();
            let k = layer.len();
            let mut gram = Matrix::zeros(self.field, k, k);
            // tr((xy)^m) = tr((yx)^m), so the pairing is symmetric and only
            // one triangle needs computing; at stage 0 the trace of a product
            // is a plain dot pattern and the product itself is never formed.
            for j in 0..k {
                for r in 0..=j {
                    let t = if stage == 0 {
                        mat_trace_of_product_mod(&reps[r], &reps[j], n, modulus)
                    } else {
                        let z = mat_mul_mod(&reps[r], &reps[j], n, modulus);
                        let w = mat_pow_mod(&z, scale, n, modulus);
                        mat_trace_mod(&w, n, modulus)
                    };
                    if t % scale != 0 {
                        return Err(Error::PostVerification(format!(
                            "layered radical: trace {t} not divisible by p^{stage}"
                        )));
                    }
                    let entry = Scalar::Fp {
                        p,
                        val: (t / scale) % p,
                    };
                    gram[(j, r)] = entry.clone();
                    gram[(r, j)] = entry;
                }
            }
            let null = kernel(&gram);
            layer = null
                .basis_vectors()
                .iter()
                .map(|c| combine_mod_p(c, &layer, n, p))
                .collect();
        }
        let vectors: Vec<Vec<Scalar>> = layer
            .iter()
            .map(|v| v.iter().map(|&x| Scalar::Fp { p, val: x }).collect())
            .collect();
        Ok(Subspace::from_spanning(self.field, n, &vectors))
    }

    /// Independent oracle: the sum of every nilpotent two-sided ideal, found
    /// by enumerating all subspaces. Only feasible over small prime fields.
    pub fn brute_force_max_nilpotent_ideal(&self, bound: u128) -> Result<Subspace> {
        let mut acc = Subspace::zero(self.field, self.dim);
        for space in enumerate_subspaces(self.field, self.dim, bound)? {
            if let Ok(ideal) = self.ideal_from(space) {
                if self.nilpotency_index(&ideal).is_some() {
                    acc = acc.sum(&ideal.space);
                }
            }
        }
        Ok(acc)
    }

    /// Quotient by a two-sided ideal. The quotient basis is indexed by the
    /// non-pivot coordinates of the ideal's echelon basis; `projection`
    /// and `section` translate between parent and quotient coordinates,
    /// with projection * section = id.
    pub fn quotient(&self, ideal: &IdealSubspace) -> QuotientData {
        let n = self.dim;
        let pivots = ideal.space.pivot_columns();
        let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let m = complement.len();
        let basis = ideal.space.basis();
        let mut projection = Matrix::zeros(self.field, m, n);
        for (t, &c) in complement.iter().enumerate() {
            projection[(t, c)] = self.field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                projection[(t, pc)] = basis[(r, c)].neg();
            }
        }
        let mut section = Matrix::zeros(self.field, n, m);
        for (t, &c) in complement.iter().enumerate() {
            section[(c, t)] = self.field.one();
        }
        let unit = projection.mul_vec(&self.unit);
        let algebra = Algebra::from_mul(self.field, m, unit, |i, j| {
            projection.mul_vec(&self.multiply(&section.col(i), &section.col(j)))
        });
        QuotientData {
            algebra,
            projection,
            section,
        }
    }

    /// Pull an ideal of the quotient back to an ideal of this algebra
    /// containing the kernel of the projection.
    pub fn lift_ideal(&self, q: &QuotientData, j: &IdealSubspace) -> Result<IdealSubspace> {
        let lifted = j.space.map_by(&q.section).sum(&kernel(&q.projection));
        self.ideal_from(lifted)
    }
}

/// A subspace certified two-sided-ideal at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealSubspace {
    space: Subspace,
}

impl IdealSubspace {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

/// A quotient algebra together with the maps relating it to its parent.
#[derive(Debug, Clone)]
pub struct QuotientData {
    pub algebra: Algebra,
    pub projection: Matrix,
    pub section: Matrix,
}

/// A finite-dimensional right module, presented by the action matrices of
/// the algebra's basis: `action[j]` sends v to v * b_j.
#[derive(Debug, Clone, PartialEq)]
pub struct RightModule {
    algebra: Algebra,
    dim: usize,
    action: Vec<Matrix>,
}

impl RightModule {
    pub fn new(algebra: Algebra, dim: usize, action: Vec<Matrix>) -> RightModule {
        assert_eq!(action.len(), algebra.dim(), "one action matrix per basis element");
        for m in &action {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "action matrix shape mismatch");
        }
        RightModule {
            algebra,
            dim,
            action,
        }
    }

    /// The algebra acting on itself from the right.
    pub fn regular(algebra: &Algebra) -> RightModule {
        let action = (0..algebra.dim()).map(|j| algebra.right_mult(j).clone()).collect();
        RightModule::new(algebra.clone(), algebra.dim(), action)
    }

    /// Free module A^rank; coordinate (t, s) -> t * dim(A) + s.
    pub fn free(algebra: &Algebra, rank: usize) -> RightModule {
        let id = Matrix::identity(algebra.field(), rank);
        let action = (0..algebra.dim())
            .map(|j| id.kron(algebra.right_mult(j)))
            .collect();
        RightModule::new(algebra.clone(), rank * algebra.dim(), action)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, j: usize) -> &Matrix {
        &self.action[j]
    }

    /// Matrix of v -> v * a.
    pub fn action_of(&self, a: &[Scalar]) -> Matrix {
        assert_eq!(a.len(), self.algebra.dim(), "element length mismatch");
        let mut m = Matrix::zeros(self.algebra.field(), self.dim, self.dim);
        for (j, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.action[j].scale(c));
        }
        m
    }

    pub fn act(&self, v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action_of(a).mul_vec(v)
    }

    /// Verify associativity of the action and that the unit acts as the
    /// identity.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        let field = self.algebra.field();
        let unit_action = self.action_of(self.algebra.unit());
        report.record(
            "v * 1 = v",
            &[],
            unit_action == Matrix::identity(field, self.dim),
        );
        for i in 0..self.algebra.dim() {
            for j in 0..self.algebra.dim() {
                let two_step = self.action[j].mul(&self.action[i]);
                let one_step = self.action_of(&self.algebra.basis_product(i, j));
                report.record("(v b_i) b_j = v (b_i b_j)", &[i, j], two_step == one_step);
            }
        }
        report
    }

    /// Span of all v * x with x in the given subspace of the algebra.
    pub fn times_subspace(&self, v: &Subspace) -> Subspace {
        assert_eq!(v.ambient(), self.algebra.dim(), "subspace of the wrong algebra");
        let mut acc = Subspace::zero(self.algebra.field(), self.dim);
        for x in v.basis_vectors() {
            acc = acc.sum(&crate::subspace::image(&self.action_of(&x)));
        }
        acc
    }

    /// Present an action-stable subspace as a module in its own right,
    /// together with the embedding back into this one.
    pub fn submodule(&self, w: &Subspace) -> Result<(RightModule, Matrix)> {
        assert_eq!(w.ambient(), self.dim, "submodule ambient mismatch");
        let k = w.dim();
        let field = self.algebra.field();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for j in 0..self.algebra.dim() {
            let mut m = Matrix::zeros(field, k, k);
            for (c, v) in w.basis_vectors().iter().enumerate() {
                let moved = self.action[j].mul_vec(v);
                let coords = w.coordinates_of(&moved).ok_or_else(|| {
                    Error::AxiomViolation(format!(
                        "subspace is not action-stable: basis vector {c} escapes under b_{j}"
                    ))
                })?;
                for (r, s) in coords.into_iter().enumerate() {
                    m[(r, c)] = s;
                }
            }
            action.push(m);
        }
        let embedding = w.basis().transpose();
        Ok((RightModule::new(self.algebra.clone(), k, action), embedding))
    }

    /// Quotient by an action-stable subspace; returns the quotient module
    /// with the projection and a linear section.
    pub fn quotient_by(&self, w: &Subspace) -> Result<(RightModule, Matrix, Matrix)> {
        assert_eq!(w.ambient(), self.dim, "quotient ambient mismatch");
        for (c, v) in w.basis_vectors().iter().enumerate() {
            for j in 0..self.algebra.dim() {
                if !w.contains_vector(&self.action[j].mul_vec(v)) {
                    return Err(Error::AxiomViolation(format!(
                        "subspace is not action-stable: basis vector {c} escapes under b_{j}"
                    )));
                }
            }
        }
        let field = self.algebra.field();
        let pivots = w.pivot_columns();
        let complement: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let m = complement.len();
        let basis = w.basis();
        let mut projection = Matrix::zeros(field, m, self.dim);
        for (t, &c) in complement.iter().enumerate() {
            projection[(t, c)] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                projection[(t, pc)] = basis[(r, c)].neg();
            }
        }
        let mut section = Matrix::zeros(field, self.dim, m);
        for (t, &c) in complement.iter().enumerate() {
            section[(c, t)] = field.one();
        }
        let action = (0..self.algebra.dim())
            .map(|j| projection.mul(&self.action[j]).mul(&section))
            .collect();
        Ok((
            RightModule::new(self.algebra.clone(), m, action),
            projection,
            section,
        ))
    }

    /// Exact projectivity test: build the surjection A^g -> M from
    /// representatives of a basis of M / M*Rad(A) and decide whether it
    /// admits a right-A-linear section. The module is projective exactly
    /// when the section exists.
    pub fn is_projective(&self) -> Result<bool> {
        let m = self.dim;
        if m == 0 {
            return Ok(true);
        }
        let field = self.algebra.field();
        let n = self.algebra.dim();
        let rad = self.algebra.radical()?;
        let mrad = self.times_subspace(rad.space());
        let pivots = mrad.pivot_columns();
        let generators: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        let g = generators.len();
        assert!(g > 0, "nonzero module with zero top");
        // phi: A^g -> M, e_(t,s) -> e_(generators[t]) * b_s.
        let phi = Matrix::from_fn(field, m, g * n, |row, col| {
            let (t, s) = (col / n, col % n);
            self.action[s][(row, generators[t])].clone()
        });
        assert_eq!(phi.rank(), m, "top representatives do not generate");
        let free_action: Vec<Matrix> = (0..n)
            .map(|j| Matrix::identity(field, g).kron(self.algebra.right_mult(j)))
            .collect();
        // Unknown section s: M -> A^g as a (g n) x m matrix, vectorized
        // row-major: column k * m + c holds s[k][c].
        let unknowns = g * n * m;
        let gens = self.algebra.generating_set();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let mut row = alloc::vec![field.zero(); unknowns];
                for k in 0..g * n {
                    row[k * m + b] = phi[(a, k)].clone();
                }
                rows.push(row);
                rhs.push(if a == b { field.one() } else { field.zero() });
            }
        }
        for &j in &gens {
            for k in 0..g * n {
                for b in 0..m {
                    let mut row = alloc::vec![field.zero(); unknowns];
                    for c in 0..m {
                        row[k * m + c] = row[k * m + c].add(&self.action[j][(c, b)]);
                    }
                    for l in 0..g * n {
                        row[l * m + b] = row[l * m + b].sub(&free_action[j][(k, l)]);
                    }
                    rows.push(row);
                    rhs.push(field.zero());
                }
            }
        }
        let system = Matrix::from_rows(field, &rows, unknowns);
        match append_solve(&system, &rhs) {
            None => Ok(false),
            Some(solution) => {
                let section = Matrix::from_fn(field, g * n, m, |k, c| {
                    solution[k * m + c].clone()
                });
                assert_eq!(phi.mul(&section), Matrix::identity(field, m));
                for j in 0..n {
                    assert_eq!(
                        section.mul(&self.action[j]),
                        free_action[j].mul(&section),
                        "section is not right-linear"
                    );
                }
                Ok(true)
            }
        }
    }
}

/// View a module over a quotient algebra as a module over the parent, acting
/// through the projection.
pub fn inflate_module(m: &RightModule, parent: &Algebra, q: &QuotientData) -> RightModule {
    assert_eq!(m.algebra(), &q.algebra, "module is not over the quotient");
    let action = (0..parent.dim())
        .map(|j| m.action_of(&q.projection.col(j)))
        .collect();
    RightModule::new(parent.clone(), m.dim(), action)
}

/// Minimal polynomial of a square matrix, via its vectorized powers.
pub(crate) fn matrix_minimal_polynomial(m: &Matrix) -> Poly {
    assert_eq!(m.rows(), m.cols(), "minimal polynomial of a non-square matrix");
    let field = m.field();
    let n = m.rows();
    let mut power = Matrix::identity(field, n);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    loop {
        rows.push(power.data().to_vec());
        let next = power.mul(m);
        let stacked = Matrix::from_rows(field, &rows, n * n);
        if let Some(coeffs) = stacked.transpose().solve(next.data()) {
            let mut poly = alloc::vec![field.zero(); rows.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                poly[i] = c.neg();
            }
            poly[rows.len()] = field.one();
            return Poly::new(field, poly);
        }
        power = next;
    }
}

pub(crate) fn coordinate_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = alloc::vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Solve `system * x = rhs` for one solution.
fn append_solve(system: &Matrix, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    system.solve(rhs)
}

fn lift_matrix(m: &Matrix) -> Vec<u64> {
    m.data()
        .iter()
        .map(|s| match s {
            Scalar::Fp { val, .. } => *val,
            Scalar::Rat(_) => unreachable!("u64 lift of a rational scalar"),
        })
        .collect()
}

/// X = sum_k x_k * lifted[k] mod m.
fn assemble_rep(x: &[u64], lifted: &[Vec<u64>], n: usize, m: u64) -> Vec<u64> {
    let mut out = alloc::vec![0u64; n * n];
    for (k, &c) in x.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (o, &e) in out.iter_mut().zip(&lifted[k]) {
            *o = ((*o as u128 + c as u128 * e as u128) % m as u128) as u64;
        }
    }
    out
}

fn mat_mul_mod(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut out = alloc::vec![0u64; n * n];
    // Entries stay below m; raw u128 accumulation is safe whenever
    // n * (m-1)^2 fits, which covers every modulus p^(i+1) <= p * dim.
    let fits = (m as u128 - 1)
        .checked_pow(2)
        .and_then(|sq| sq.checked_mul(n as u128))
        .is_some();
    for i in 0..n {
        for j in 0..n {
            let mut acc: u128 = 0;
            if fits {
                for k in 0..n {
                    acc += a[i * n + k] as u128 * b[k * n + j] as u128;
                }
            } else {
                for k in 0..n {
                    acc += (a[i * n + k] as u128 * b[k * n + j] as u128) % m as u128;
                }
            }
            out[i * n + j] = (acc % m as u128) as u64;
        }
    }
    out
}

fn mat_trace_of_product_mod(a: &[u64], b: &[u64], n: usize, m: u64) -> u64 {
    let mut acc: u128 = 0;
    for i in 0..n {
        for j in 0..n {
            acc += (a[i * n + j] as u128 * b[j * n + i] as u128) % m as u128;
        }
    }
    (acc % m as u128) as u64
}

fn mat_pow_mod(z: &[u64], mut e: u64, n: usize, m: u64) -> Vec<u64> {
    let mut acc = alloc::vec![0u64; n * n];
    for i in 0..n {
        acc[i * n + i] = 1 % m;
    }
    let mut base = z.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul_mod(&acc, &base, n, m);
        }
        base = mat_mul_mod(&base, &base, n, m);
        e >>= 1;
    }
    acc
}

fn mat_trace_mod(z: &[u64], n: usize, m: u64) -> u64 {
    let mut acc: u128 = 0;
    for i in 0..n {
        acc += z[i * n + i] as u128;
    }
    (acc % m as u128) as u64
}

/// Combination of layer vectors with F_p coefficients.
fn combine_mod_p(coeffs: &[Scalar], layer: &[Vec<u64>], n: usize, p: u64) -> Vec<u64> {
    let mut out = alloc::vec![0u64; n];
    for (r, c) in coeffs.iter().enumerate() {
        let cv = match c {
            Scalar::Fp { val, .. } => *val,
            Scalar::Rat(_) => unreachable!("rational coefficient over a prime field"),
        };
        if cv == 0 {
            continue;
        }
        for (o, &e) in out.iter_mut().zip(&layer[r]) {
            *o = ((*o as u128 + cv as u128 * e as u128) % p as u128) as u64;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn vec_i64(field: FieldSpec, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| Scalar::from_i64(field, c)).collect()
    }

    fn span_i64(field: FieldSpec, n: usize, rows: &[&[i64]]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = rows.iter().map(|r| vec_i64(field, r)).collect();
        Subspace::from_spanning(field, n, &vs)
    }

    /// k[x]/(x^2 - c1 x - c0) on the basis {1, x}.
    fn quadratic_algebra(field: FieldSpec, c0: i64, c1: i64) -> Algebra {
        Algebra::from_mul(field, 2, vec_i64(field, &[1, 0]), |i, j| match (i, j) {
            (0, 0) => vec_i64(field, &[1, 0]),
            (0, 1) | (1, 0) => vec_i64(field, &[0, 1]),
            (1, 1) => vec_i64(field, &[c0, c1]),
            _ => unreachable!(),
        })
    }

    /// Group algebra of Z/2 x Z/2 on the basis {1, u, v, uv}; index bits.
    fn group4(field: FieldSpec) -> Algebra {
        Algebra::from_mul(field, 4, vec_i64(field, &[1, 0, 0, 0]), |i, j| {
            let mut out = vec_i64(field, &[0, 0, 0, 0]);
            out[i ^ j] = field.one();
            out
        })
    }

    /// Upper triangular 2x2 matrices on the basis {e11, e12, e22}.
    fn upper2(field: FieldSpec) -> Algebra {
        let table: [[&[i64; 3]; 3]; 3] = [
            [&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]],
            [&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]],
            [&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]],
        ];
        Algebra::from_mul(field, 3, vec_i64(field, &[1, 0, 1]), |i, j| {
            vec_i64(field, &table[i][j][..])
        })
    }

    /// Full 2x2 matrix algebra on the basis {e11, e12, e21, e22}.
    fn mat2(field: FieldSpec) -> Algebra {
        Algebra::from_mul(field, 4, vec_i64(field, &[1, 0, 0, 1]), |i, j| {
            let (a, b) = (i / 2, i % 2);
            let (c, d) = (j / 2, j % 2);
            let mut out = vec_i64(field, &[0, 0, 0, 0]);
            if b == c {
                out[a * 2 + d] = field.one();
            }
            out
        })
    }

    #[test]
    fn axioms_hold_on_the_test_algebras() {
        for a in [
            quadratic_algebra(q(), 0, 0),
            group4(fp(2)),
            upper2(q()),
            mat2(fp(3)),
        ] {
            assert!(a.check().ok());
        }
    }

    #[test]
    fn check_reports_a_broken_product() {
        // x^2 = 1 but with a deliberately wrong unit.
        let bad = Algebra::from_mul(q(), 2, vec_i64(q(), &[0, 1]), |i, j| match (i, j) {
            (0, 0) => vec_i64(q(), &[1, 0]),
            (0, 1) | (1, 0) => vec_i64(q(), &[0, 1]),
            (1, 1) => vec_i64(q(), &[1, 0]),
            _ => unreachable!(),
        });
        let report = bad.check();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.law.contains("unit")));
    }

    #[test]
    fn radical_of_dual_numbers_every_field() {
        for field in [q(), fp(2), fp(3), fp(5)] {
            let a = quadratic_algebra(field, 0, 0); // k[x]/(x^2)
            let rad = a.radical().unwrap();
            assert_eq!(rad.space(), &span_i64(field, 2, &[&[0, 1]]));
        }
    }

    #[test]
    fn radical_of_mu2_depends_on_characteristic() {
        // k[x]/(x^2 - 1): semisimple unless char 2, where rad = <1 + x>.
        let a2 = quadratic_algebra(fp(2), 1, 0);
        assert_eq!(a2.radical().unwrap().space(), &span_i64(fp(2), 2, &[&[1, 1]]));
        for field in [q(), fp(3), fp(5)] {
            let a = quadratic_algebra(field, 1, 0);
            assert!(a.radical().unwrap().is_zero());
        }
    }

    #[test]
    fn radical_of_the_klein_group_algebra() {
        // char 2: augmentation ideal, dim 3. Otherwise semisimple.
        let a = group4(fp(2));
        let rad = a.radical().unwrap();
        assert_eq!(rad.dim(), 3);
        for v in [&[1i64, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]] {
            assert!(rad.space().contains_vector(&vec_i64(fp(2), v)));
        }
        assert!(group4(fp(3)).radical().unwrap().is_zero());
        assert!(group4(q()).radical().unwrap().is_zero());
    }

    #[test]
    fn radical_matches_brute_force_oracle() {
        let cases = [
            quadratic_algebra(fp(2), 0, 0),
            quadratic_algebra(fp(2), 1, 0),
            group4(fp(2)),
            mat2(fp(2)),
            upper2(fp(3)),
        ];
        for a in cases {
            let fast = a.radical().unwrap();
            let slow = a.brute_force_max_nilpotent_ideal(1 << 16).unwrap();
            assert_eq!(fast.space(), &slow);
        }
    }

    #[test]
    fn radical_of_triangular_matrices() {
        for field in [q(), fp(2), fp(3)] {
            let a = upper2(field);
            let rad = a.radical().unwrap();
            assert_eq!(rad.space(), &span_i64(field, 3, &[&[0, 1, 0]]));
            let quotient = a.quotient(&rad);
            assert_eq!(quotient.algebra.dim(), 2);
            assert!(quotient.algebra.radical().unwrap().is_zero());
        }
    }

    #[test]
    fn matrix_algebra_is_semisimple_with_scalar_center() {
        for field in [q(), fp(2), fp(3)] {
            let a = mat2(field);
            assert!(a.radical().unwrap().is_zero());
            let center = a.center();
            assert_eq!(center, span_i64(field, 4, &[&[1, 0, 0, 1]]));
        }
    }

    #[test]
    fn quotient_multiplication_and_ideal_lift() {
        let a = upper2(q());
        let rad = a.radical().unwrap();
        let quotient = a.quotient(&rad);
        // Quotient is k x k on the classes of e11 and e22.
        let e1 = vec_i64(q(), &[1, 0]);
        assert_eq!(quotient.algebra.multiply(&e1, &e1), e1);
        let j = quotient
            .algebra
            .ideal_from(span_i64(q(), 2, &[&[1, 0]]))
            .unwrap();
        let lifted = a.lift_ideal(&quotient, &j).unwrap();
        assert_eq!(lifted.space(), &span_i64(q(), 3, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn ideal_closure_and_product() {
        let a = upper2(q());
        let closure = a.ideal_closure(&span_i64(q(), 3, &[&[1, 0, 0]]));
        // e11 generates the ideal spanned by e11 and e12.
        assert_eq!(closure.space(), &span_i64(q(), 3, &[&[1, 0, 0], &[0, 1, 0]]));
        let rad = a.radical().unwrap();
        let square = a.ideal_product(&rad, &rad);
        assert!(square.is_zero());
        assert_eq!(a.nilpotency_index(&rad), Some(2));
        let whole = a.ideal_from(Subspace::full(q(), 3)).unwrap();
        assert_eq!(a.nilpotency_index(&whole), None);
    }

    #[test]
    fn regular_module_is_projective() {
        for a in [quadratic_algebra(q(), 0, 0), upper2(fp(2)), group4(fp(2))] {
            let m = RightModule::regular(&a);
            assert!(m.check().ok());
            assert!(m.is_projective().unwrap());
        }
    }

    #[test]
    fn simple_modules_over_triangular_matrices() {
        // S1 (action through the e11 coefficient) has projective cover of
        // dimension 2; S2 (through e22) is itself a summand of the regular
        // module. The test freezes both verdicts.
        for field in [q(), fp(2), fp(3)] {
            let a = upper2(field);
            let s1 = RightModule::new(
                a.clone(),
                1,
                alloc::vec![
                    Matrix::identity(field, 1),
                    Matrix::zeros(field, 1, 1),
                    Matrix::zeros(field, 1, 1),
                ],
            );
            let s2 = RightModule::new(
                a.clone(),
                1,
                alloc::vec![
                    Matrix::zeros(field, 1, 1),
                    Matrix::zeros(field, 1, 1),
                    Matrix::identity(field, 1),
                ],
            );
            assert!(s1.check().ok());
            assert!(s2.check().ok());
            assert!(!s1.is_projective().unwrap());
            assert!(s2.is_projective().unwrap());
        }
    }

    #[test]
    fn projectivity_respects_direct_sums() {
        fn direct_sum(x: &RightModule, y: &RightModule) -> RightModule {
            let field = x.algebra().field();
            let (dx, dy) = (x.dim(), y.dim());
            let action = (0..x.algebra().dim())
                .map(|j| {
                    Matrix::from_fn(field, dx + dy, dx + dy, |r, c| {
                        if r < dx && c < dx {
                            x.action(j)[(r, c)].clone()
                        } else if r >= dx && c >= dx {
                            y.action(j)[(r - dx, c - dx)].clone()
                        } else {
                            field.zero()
                        }
                    })
                })
                .collect();
            RightModule::new(x.algebra().clone(), dx + dy, action)
        }
        let a = upper2(fp(2));
        let s1 = RightModule::new(
            a.clone(),
            1,
            alloc::vec![
                Matrix::identity(fp(2), 1),
                Matrix::zeros(fp(2), 1, 1),
                Matrix::zeros(fp(2), 1, 1),
            ],
        );
        let s2 = RightModule::new(
            a.clone(),
            1,
            alloc::vec![
                Matrix::zeros(fp(2), 1, 1),
                Matrix::zeros(fp(2), 1, 1),
                Matrix::identity(fp(2), 1),
            ],
        );
        let reg = RightModule::regular(&a);
        // A sum is projective exactly when both summands are.
        for (x, y, expect) in [
            (&s2, &s2, true),
            (&reg, &s2, true),
            (&reg, &reg, true),
            (&s1, &s2, false),
            (&s1, &reg, false),
        ] {
            let m = direct_sum(x, y);
            assert!(m.check().ok());
            assert_eq!(m.is_projective().unwrap(), expect);
        }
    }

    #[test]
    fn local_algebra_detects_non_projective_quotient() {
        // k[x]/(x^2) is local: the 1-dimensional quotient is not projective.
        for field in [q(), fp(2)] {
            let a = quadratic_algebra(field, 0, 0);
            let top = RightModule::new(
                a.clone(),
                1,
                alloc::vec![Matrix::identity(field, 1), Matrix::zeros(field, 1, 1)],
            );
            assert!(top.check().ok());
            assert!(!top.is_projective().unwrap());
        }
    }

    #[test]
    fn every_module_over_a_semisimple_algebra_is_projective() {
        let a = mat2(fp(2));
        // The simple 2-dimensional column module: v -> v * E_ij transposed.
        let action: Vec<Matrix> = (0..4)
            .map(|idx| {
                let (i, j) = (idx / 2, idx % 2);
                Matrix::from_fn(fp(2), 2, 2, |r, c| {
                    if r == j && c == i {
                        fp(2).one()
                    } else {
                        fp(2).zero()
                    }
                })
            })
            .collect();
        let m = RightModule::new(a, 2, action);
        assert!(m.check().ok());
        assert!(m.is_projective().unwrap());
        // Trivial module over the semisimple Klein group algebra mod 3.
        let g = group4(fp(3));
        let t = RightModule::new(
            g,
            1,
            (0..4).map(|_| Matrix::identity(fp(3), 1)).collect(),
        );
        assert!(t.is_projective().unwrap());
    }

    #[test]
    fn zero_module_is_projective() {
        let a = quadratic_algebra(q(), 0, 0);
        let z = RightModule::new(a, 0, alloc::vec![Matrix::zeros(q(), 0, 0); 2]);
        assert!(z.is_projective().unwrap());
    }

    #[test]
    fn submodule_and_quotient_of_the_regular_module() {
        let a = upper2(q());
        let m = RightModule::regular(&a);
        let w = span_i64(q(), 3, &[&[1, 0, 0], &[0, 1, 0]]); // e11 A
        let (sub, embed) = m.submodule(&w).unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(sub.check().ok());
        assert!(sub.is_projective().unwrap());
        // Embedding intertwines the actions.
        for j in 0..3 {
            assert_eq!(m.action(j).mul(&embed), embed.mul(sub.action(j)));
        }
        let (quot, proj, sect) = m.quotient_by(&w).unwrap();
        assert_eq!(quot.dim(), 1);
        assert!(quot.check().ok());
        assert_eq!(proj.mul(&sect), Matrix::identity(q(), 1));
    }

    #[test]
    fn inflation_recovers_the_simple_module() {
        let a = upper2(q());
        let rad = a.radical().unwrap();
        let quotient = a.quotient(&rad);
        // Over the quotient k x k, project to the first coordinate.
        let over_q = RightModule::new(
            quotient.algebra.clone(),
            1,
            alloc::vec![Matrix::identity(q(), 1), Matrix::zeros(q(), 1, 1)],
        );
        let inflated = inflate_module(&over_q, &a, &quotient);
        assert!(inflated.check().ok());
        assert_eq!(inflated.action(0), &Matrix::identity(q(), 1));
        assert_eq!(inflated.action(1), &Matrix::zeros(q(), 1, 1));
        assert_eq!(inflated.action(2), &Matrix::zeros(q(), 1, 1));
    }

    #[test]
    fn times_subspace_computes_m_rad() {
        let a = quadratic_algebra(fp(2), 1, 0);
        let m = RightModule::regular(&a);
        let rad = a.radical().unwrap();
        let mrad = m.times_subspace(rad.space());
        assert_eq!(mrad, span_i64(fp(2), 2, &[&[1, 1]]));
    }

    #[test]
    fn minimal_polynomials() {
        // The left-regular representation is faithful and unital, so the
        // minimal polynomial of an element is that of its left-multiplication
        // matrix.
        let a = quadratic_algebra(q(), 1, 0);
        let mp = matrix_minimal_polynomial(&a.left_mult_of(&vec_i64(q(), &[0, 1])));
        assert_eq!(mp.coeffs(), vec_i64(q(), &[-1, 0, 1]).as_slice());
        let t = upper2(q());
        let mp = matrix_minimal_polynomial(&t.left_mult_of(&vec_i64(q(), &[1, 0, 0])));
        assert_eq!(mp.coeffs(), vec_i64(q(), &[0, -1, 1]).as_slice());
        let id = matrix_minimal_polynomial(&Matrix::identity(q(), 3));
        assert_eq!(id.coeffs(), vec_i64(q(), &[-1, 1]).as_slice());
    }

    #[test]
    fn frobenius_fixed_space_counts_simple_factors() {
        // Klein group algebra: local in characteristic 2, split k^4 mod 3.
        let local = group4(fp(2));
        let f = local.frobenius_matrix();
        let fixed = kernel(&f.sub(&Matrix::identity(fp(2), 4)));
        assert_eq!(fixed.dim(), 1);
        let split = group4(fp(3));
        let f = split.frobenius_matrix();
        let fixed = kernel(&f.sub(&Matrix::identity(fp(3), 4)));
        assert_eq!(fixed.dim(), 4);
    }

    #[test]
    fn generating_sets_generate() {
        for a in [mat2(q()), upper2(fp(2)), group4(fp(3))] {
            let gens = a.generating_set();
            let mut vectors = alloc::vec![a.unit().to_vec()];
            for &i in &gens {
                vectors.push(coordinate_vector(a.field(), a.dim(), i));
            }
            let seed = Subspace::from_spanning(a.field(), a.dim(), &vectors);
            assert_eq!(a.subalgebra_closure(&seed).dim(), a.dim());
        }
    }

    #[test]
    fn subalgebra_of_diagonal_matrices() {
        let a = mat2(q());
        let diag = span_i64(q(), 4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
        let (sub, embed) = a
            .subalgebra_with_unit(&diag, &vec_i64(q(), &[1, 0, 0, 1]))
            .unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(sub.check().ok());
        assert!(sub.is_commutative());
        assert_eq!(embed.rows(), 4);
        // Products map back consistently: e11 * e11 = e11.
        let e1 = vec_i64(q(), &[1, 0]);
        assert_eq!(sub.multiply(&e1, &e1), e1);
        // A non-closed subspace is rejected.
        let bad = span_i64(q(), 4, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(a
            .subalgebra_with_unit(&bad, &vec_i64(q(), &[1, 0, 0, 1]))
            .is_err());
    }

    #[test]
    fn from_triples_matches_from_mul() {
        let field = fp(5);
        let triples = [
            (0usize, 0usize, 0usize, field.one()),
            (0, 1, 1, field.one()),
            (1, 0, 1, field.one()),
            (1, 1, 0, field.one()),
        ];
        let a = Algebra::from_triples(field, 2, vec_i64(field, &[1, 0]), &triples).unwrap();
        let b = quadratic_algebra(field, 1, 0);
        assert_eq!(a, b);
        assert!(a.check().ok());
    }

    #[test]
    fn power_and_idempotent() {
        let a = group4(fp(3));
        // 2 * (1 + uv) is idempotent mod 3.
        let e = vec_i64(fp(3), &[2, 0, 0, 2]);
        assert!(a.is_idempotent(&e));
        assert!(!a.is_idempotent(&vec_i64(fp(3), &[0, 1, 0, 0])));
        let x = vec_i64(fp(3), &[0, 1, 0, 0]);
        assert_eq!(a.power(&x, 2), vec_i64(fp(3), &[1, 0, 0, 0]));
        assert_eq!(a.power(&x, 0), a.unit().to_vec());
    }
}

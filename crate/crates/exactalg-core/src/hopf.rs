//! Finite-dimensional Hopf algebras by structure tensors, with axiom
//! checking, the standard builders (group algebras, their duals, the
//! 4-dimensional Sweedler algebra), and the calculus of left H-modules:
//! tensor products via the coproduct, duals via the antipode, Hom spaces,
//! and exact projectivity over H.
//!
//! Tensor legs follow the crate-wide Kronecker convention: the pair (j, k)
//! sits at index j * dim + k, so tensor bracketing never needs associator
//! data and identities are checked as literal matrix equalities.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{coordinate_vector, Algebra, CheckReport, Violation};
use crate::scalar::{FieldSpec, Scalar};
use crate::subspace::kernel;
use crate::{Error, Matrix, Result};

/// A Hopf algebra on a fixed basis. `comult[i]` is the coordinate vector of
/// the coproduct of b_i inside k^(n*n).
#[derive(Debug, Clone, PartialEq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    comult: Vec<Vec<Scalar>>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inv: Matrix,
    rmatrix: Option<Vec<Scalar>>,
}

impl HopfAlgebra {
    /// Assemble from structure data. Shapes are validated and the antipode
    /// must be invertible; the Hopf axioms themselves are the business of
    /// [`HopfAlgebra::check`], so deliberately broken inputs can be built
    /// and then diagnosed.
    pub fn new(
        algebra: Algebra,
        comult: Vec<Vec<Scalar>>,
        counit: Vec<Scalar>,
        antipode: Matrix,
        rmatrix: Option<Vec<Scalar>>,
    ) -> Result<HopfAlgebra> {
        let n = algebra.dim();
        if comult.len() != n {
            return Err(Error::DimensionMismatch {
                context: "comultiplication column count",
                expected: n,
                found: comult.len(),
            });
        }
        for d in &comult {
            if d.len() != n * n {
                return Err(Error::DimensionMismatch {
                    context: "comultiplication tensor length",
                    expected: n * n,
                    found: d.len(),
                });
            }
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch {
                context: "counit length",
                expected: n,
                found: counit.len(),
            });
        }
        if (antipode.rows(), antipode.cols()) != (n, n) {
            return Err(Error::DimensionMismatch {
                context: "antipode shape",
                expected: n,
                found: antipode.rows().max(antipode.cols()),
            });
        }
        if let Some(r) = &rmatrix {
            if r.len() != n * n {
                return Err(Error::DimensionMismatch {
                    context: "r-matrix length",
                    expected: n * n,
                    found: r.len(),
                });
            }
        }
        let antipode_inv = antipode.inverse().ok_or_else(|| {
            Error::AxiomViolation(String::from("antipode is not invertible"))
        })?;
        Ok(HopfAlgebra {
            algebra,
            comult,
            counit,
            antipode,
            antipode_inv,
            rmatrix,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn comult(&self, i: usize) -> &[Scalar] {
        &self.comult[i]
    }

    /// Coproduct as a matrix H -> H tensor H.
    pub fn comult_map(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field(), n * n, n, |r, c| self.comult[c][r].clone())
    }

    pub fn comult_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = alloc::vec![self.field().zero(); n * n];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, d) in out.iter_mut().zip(&self.comult[i]) {
                *o = o.add(&d.mul(c));
            }
        }
        out
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (c, e) in x.iter().zip(&self.counit) {
            acc = acc.add(&c.mul(e));
        }
        acc
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn rmatrix(&self) -> Option<&[Scalar]> {
        self.rmatrix.as_deref()
    }

    /// True iff swap ∘ Δ = Δ on every basis element.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        self.comult.iter().all(|d| {
            (0..n).all(|j| (0..n).all(|k| d[j * n + k] == d[k * n + j]))
        })
    }

    /// Check every Hopf axiom (and the underlying algebra axioms), locating
    /// failures per law and basis index. Quasitriangularity is checked when
    /// an r-matrix is present.
    pub fn check(&self) -> CheckReport {
        let n = self.dim();
        let field = self.field();
        let a = &self.algebra;
        let mut report = a.check();
        let comult_map = self.comult_map();
        let id = Matrix::identity(field, n);

        // Coassociativity and the counit laws.
        let delta_left = comult_map.kron(&id); // Δ ⊗ id on H ⊗ H
        let delta_right = id.kron(&comult_map);
        let counit_row = Matrix::from_fn(field, 1, n, |_, c| self.counit[c].clone());
        let counit_left = counit_row.kron(&id);
        let counit_right = id.kron(&counit_row);
        for i in 0..n {
            let d = &self.comult[i];
            record(
                &mut report,
                "coassociativity",
                &[i],
                delta_left.mul_vec(d) == delta_right.mul_vec(d),
            );
            let e = coordinate_vector(field, n, i);
            record(
                &mut report,
                "left counit law",
                &[i],
                counit_left.mul_vec(d) == e,
            );
            record(
                &mut report,
                "right counit law",
                &[i],
                counit_right.mul_vec(d) == e,
            );
        }

        // Δ and ε are algebra morphisms.
        let unit_tensor = kron_vec(a.unit(), a.unit());
        record(
            &mut report,
            "comultiplication respects the unit",
            &[],
            self.comult_of(a.unit()) == unit_tensor,
        );
        record(
            &mut report,
            "counit respects the unit",
            &[],
            self.counit_of(a.unit()) == field.one(),
        );
        for i in 0..n {
            for j in 0..n {
                let product = a.basis_product(i, j);
                let lhs = self.comult_of(&product);
                let rhs = tensor_square_multiply(a, &self.comult[i], &self.comult[j]);
                record(&mut report, "comultiplication respects products", &[i, j], lhs == rhs);
                record(
                    &mut report,
                    "counit respects products",
                    &[i, j],
                    self.counit_of(&product) == self.counit[i].mul(&self.counit[j]),
                );
            }
        }

        // Antipode axioms and anti-multiplicativity.
        for i in 0..n {
            let d = &self.comult[i];
            let mut left = alloc::vec![field.zero(); n];
            let mut right = alloc::vec![field.zero(); n];
            for j in 0..n {
                for k in 0..n {
                    let c = &d[j * n + k];
                    if c.is_zero() {
                        continue;
                    }
                    let s_then = a.multiply(&self.antipode.col(j), &coordinate_vector(field, n, k));
                    let then_s = a.multiply(&coordinate_vector(field, n, j), &self.antipode.col(k));
                    for t in 0..n {
                        left[t] = left[t].add(&s_then[t].mul(c));
                        right[t] = right[t].add(&then_s[t].mul(c));
                    }
                }
            }
            let target: Vec<Scalar> = a.unit().iter().map(|u| u.mul(&self.counit[i])).collect();
            record(&mut report, "left antipode axiom", &[i], left == target);
            record(&mut report, "right antipode axiom", &[i], right == target);
        }
        record(
            &mut report,
            "antipode fixes the unit",
            &[],
            self.antipode.mul_vec(a.unit()) == a.unit(),
        );
        for i in 0..n {
            let e = coordinate_vector(field, n, i);
            record(
                &mut report,
                "counit is antipode-invariant",
                &[i],
                self.counit_of(&self.antipode.mul_vec(&e)) == self.counit[i],
            );
            for j in 0..n {
                let lhs = self.antipode.mul_vec(&a.basis_product(i, j));
                let rhs = a.multiply(&self.antipode.col(j), &self.antipode.col(i));
                record(&mut report, "antipode is anti-multiplicative", &[i, j], lhs == rhs);
            }
        }

        // Quasitriangularity, when an r-matrix is supplied.
        if let Some(r) = &self.rmatrix {
            let mut left_mult_r = Matrix::zeros(field, n * n, n * n);
            for aidx in 0..n {
                for bidx in 0..n {
                    let c = &r[aidx * n + bidx];
                    if c.is_zero() {
                        continue;
                    }
                    left_mult_r = left_mult_r
                        .add(&a.left_mult(aidx).kron(a.left_mult(bidx)).scale(c));
                }
            }
            record(
                &mut report,
                "r-matrix is invertible",
                &[],
                left_mult_r.solve(&unit_tensor).is_some(),
            );
            for i in 0..n {
                let d = &self.comult[i];
                let op: Vec<Scalar> = {
                    let mut v = alloc::vec![field.zero(); n * n];
                    for j in 0..n {
                        for k in 0..n {
                            v[k * n + j] = d[j * n + k].clone();
                        }
                    }
                    v
                };
                let lhs = tensor_square_multiply(a, r, d);
                let rhs = tensor_square_multiply(a, &op, r);
                record(
                    &mut report,
                    "r-matrix intertwines the coproduct",
                    &[i],
                    lhs == rhs,
                );
            }
            let r13 = embed_three(a, r, 1);
            let r12 = embed_three(a, r, 2);
            let r23 = embed_three(a, r, 0);
            let expanded_left = {
                let mut v = alloc::vec![field.zero(); n * n * n];
                for (idx, c) in r.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (aidx, bidx) = (idx / n, idx % n);
                    let d = &self.comult[aidx];
                    for (jk, dc) in d.iter().enumerate() {
                        if dc.is_zero() {
                            continue;
                        }
                        v[jk * n + bidx] = v[jk * n + bidx].add(&c.mul(dc));
                    }
                }
                v
            };
            record(
                &mut report,
                "r-matrix coproduct expansion (left leg)",
                &[],
                expanded_left == tensor_cube_multiply(a, &r13, &r23),
            );
            let expanded_right = {
                let mut v = alloc::vec![field.zero(); n * n * n];
                for (idx, c) in r.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (aidx, bidx) = (idx / n, idx % n);
                    let d = &self.comult[bidx];
                    for (jk, dc) in d.iter().enumerate() {
                        if dc.is_zero() {
                            continue;
                        }
                        v[aidx * n * n + jk] = v[aidx * n * n + jk].add(&c.mul(dc));
                    }
                }
                v
            };
            record(
                &mut report,
                "r-matrix coproduct expansion (right leg)",
                &[],
                expanded_right == tensor_cube_multiply(a, &r13, &r12),
            );
        }
        report
    }
}

fn record(report: &mut CheckReport, law: &'static str, indices: &[usize], holds: bool) {
    if !holds {
        report.violations.push(Violation {
            law,
            indices: indices.to_vec(),
        });
    }
}

fn kron_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a.mul(b));
        }
    }
    out
}

/// Product of two elements of H ⊗ H, componentwise on the legs.
fn tensor_square_multiply(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = a.dim();
    let field = a.field();
    let mut out = alloc::vec![field.zero(); n * n];
    for (ix, cx) in x.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        let (a1, b1) = (ix / n, ix % n);
        for (iy, cy) in y.iter().enumerate() {
            if cy.is_zero() {
                continue;
            }
            let (a2, b2) = (iy / n, iy % n);
            let c = cx.mul(cy);
            let p = a.basis_product(a1, a2);
            let q = a.basis_product(b1, b2);
            for (e, pe) in p.iter().enumerate() {
                if pe.is_zero() {
                    continue;
                }
                for (f, qf) in q.iter().enumerate() {
                    if qf.is_zero() {
                        continue;
                    }
                    out[e * n + f] = out[e * n + f].add(&c.mul(&pe.mul(qf)));
                }
            }
        }
    }
    out
}

/// Product of two elements of H ⊗ H ⊗ H.
fn tensor_cube_multiply(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = a.dim();
    let field = a.field();
    let mut out = alloc::vec![field.zero(); n * n * n];
    for (ix, cx) in x.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        let (a1, rest) = (ix / (n * n), ix % (n * n));
        let (b1, c1) = (rest / n, rest % n);
        for (iy, cy) in y.iter().enumerate() {
            if cy.is_zero() {
                continue;
            }
            let (a2, rest) = (iy / (n * n), iy % (n * n));
            let (b2, c2) = (rest / n, rest % n);
            let c = cx.mul(cy);
            let p = a.basis_product(a1, a2);
            let q = a.basis_product(b1, b2);
            let s = a.basis_product(c1, c2);
            for (e, pe) in p.iter().enumerate() {
                if pe.is_zero() {
                    continue;
                }
                for (f, qf) in q.iter().enumerate() {
                    if qf.is_zero() {
                        continue;
                    }
                    let cf = c.mul(&pe.mul(qf));
                    for (g, sg) in s.iter().enumerate() {
                        if sg.is_zero() {
                            continue;
                        }
                        out[e * n * n + f * n + g] =
                            out[e * n * n + f * n + g].add(&cf.mul(sg));
                    }
                }
            }
        }
    }
    out
}

/// Place an element of H ⊗ H into H ⊗ H ⊗ H with the unit on the leg
/// numbered `unit_leg` (0, 1 or 2).
fn embed_three(a: &Algebra, r: &[Scalar], unit_leg: usize) -> Vec<Scalar> {
    let n = a.dim();
    let field = a.field();
    let unit = a.unit();
    let mut out = alloc::vec![field.zero(); n * n * n];
    for (idx, c) in r.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (x, y) = (idx / n, idx % n);
        for (k, u) in unit.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            let pos = match unit_leg {
                0 => k * n * n + x * n + y,
                1 => x * n * n + k * n + y,
                2 => x * n * n + y * n + k,
                _ => unreachable!(),
            };
            out[pos] = out[pos].add(&c.mul(u));
        }
    }
    out
}

/// A valid group multiplication table with its identity and inverses.
struct GroupTable {
    identity: usize,
    inverse: Vec<usize>,
}

fn validate_group(table: &[Vec<usize>]) -> Result<GroupTable> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup(String::from("empty multiplication table")));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
        }
        for &e in row {
            if e >= n {
                return Err(Error::NotAGroup(format!("entry {e} out of range in row {i}")));
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| Error::NotAGroup(String::from("no identity element")))?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    let mut inverse = Vec::with_capacity(n);
    for i in 0..n {
        let inv = (0..n)
            .find(|&j| table[i][j] == identity && table[j][i] == identity)
            .ok_or_else(|| Error::NotAGroup(format!("element {i} has no inverse")))?;
        inverse.push(inv);
    }
    Ok(GroupTable { identity, inverse })
}

/// The group algebra kG: basis indexed by group elements, Δg = g ⊗ g,
/// ε(g) = 1, S(g) = g^(-1).
pub fn group_algebra(field: FieldSpec, table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let info = validate_group(table)?;
    let n = table.len();
    let algebra = Algebra::from_mul(
        field,
        n,
        coordinate_vector(field, n, info.identity),
        |i, j| coordinate_vector(field, n, table[i][j]),
    );
    let comult = (0..n)
        .map(|i| {
            let mut d = alloc::vec![field.zero(); n * n];
            d[i * n + i] = field.one();
            d
        })
        .collect();
    let counit = alloc::vec![field.one(); n];
    let antipode = Matrix::from_fn(field, n, n, |r, c| {
        if r == info.inverse[c] {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfAlgebra::new(algebra, comult, counit, antipode, None)
}

/// The dual k^G: idempotent basis e_g with pointwise product,
/// Δ(e_g) = Σ_{ab=g} e_a ⊗ e_b, ε(e_g) = [g = identity], S(e_g) = e_{g^(-1)}.
pub fn dual_group_algebra(field: FieldSpec, table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let info = validate_group(table)?;
    let n = table.len();
    let algebra = Algebra::from_mul(field, n, alloc::vec![field.one(); n], |i, j| {
        if i == j {
            coordinate_vector(field, n, i)
        } else {
            alloc::vec![field.zero(); n]
        }
    });
    let comult = (0..n)
        .map(|g| {
            let mut d = alloc::vec![field.zero(); n * n];
            for a in 0..n {
                for b in 0..n {
                    if table[a][b] == g {
                        d[a * n + b] = field.one();
                    }
                }
            }
            d
        })
        .collect();
    let counit = (0..n)
        .map(|g| {
            if g == info.identity {
                field.one()
            } else {
                field.zero()
            }
        })
        .collect();
    let antipode = Matrix::from_fn(field, n, n, |r, c| {
        if r == info.inverse[c] {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfAlgebra::new(algebra, comult, counit, antipode, None)
}

/// Sweedler's 4-dimensional Hopf algebra on {1, g, x, gx}: g² = 1, x² = 0,
/// xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = -gx. Requires
/// characteristic ≠ 2 (otherwise the relations degenerate).
pub fn sweedler4(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(
            "the Sweedler algebra needs characteristic different from 2",
        ));
    }
    let one = field.one();
    let neg = one.neg();
    let zero = field.zero();
    // Basis order: 1, g, x, gx.
    let mut products = alloc::vec![alloc::vec![zero.clone(); 4]; 16];
    let mut set = |i: usize, j: usize, k: usize, c: &Scalar| {
        products[i * 4 + j][k] = c.clone();
    };
    for j in 0..4 {
        set(0, j, j, &one); // 1 * y = y
        set(j, 0, j, &one); // y * 1 = y
    }
    set(1, 1, 0, &one); // g g = 1
    set(1, 2, 3, &one); // g x = gx
    set(1, 3, 2, &one); // g gx = x
    set(2, 1, 3, &neg); // x g = -gx
    set(3, 1, 2, &neg); // gx g = -x
    // x x = x gx = gx x = gx gx = 0: already zero.
    let algebra = Algebra::from_mul(field, 4, coordinate_vector(field, 4, 0), |i, j| {
        products[i * 4 + j].clone()
    });
    let mut comult = alloc::vec![alloc::vec![zero.clone(); 16]; 4];
    comult[0][0] = one.clone(); // Δ1 = 1 ⊗ 1
    comult[1][1 * 4 + 1] = one.clone(); // Δg = g ⊗ g
    comult[2][2 * 4 + 0] = one.clone(); // Δx = x ⊗ 1 + g ⊗ x
    comult[2][1 * 4 + 2] = one.clone();
    comult[3][3 * 4 + 1] = one.clone(); // Δgx = gx ⊗ g + 1 ⊗ gx
    comult[3][0 * 4 + 3] = one.clone();
    let counit = alloc::vec![one.clone(), one.clone(), zero.clone(), zero.clone()];
    let mut antipode = Matrix::zeros(field, 4, 4);
    antipode[(0, 0)] = one.clone(); // S(1) = 1
    antipode[(1, 1)] = one.clone(); // S(g) = g
    antipode[(3, 2)] = neg; // S(x) = -gx
    antipode[(2, 3)] = one; // S(gx) = x
    HopfAlgebra::new(algebra, comult, counit, antipode, None)
}

/// A left H-module on a fixed basis; `action[i]` is the matrix of
/// v -> b_i · v.
#[derive(Debug, Clone, PartialEq)]
pub struct HModule {
    hopf: HopfAlgebra,
    dim: usize,
    action: Vec<Matrix>,
}

impl HModule {
    pub fn new(hopf: HopfAlgebra, dim: usize, action: Vec<Matrix>) -> HModule {
        assert_eq!(action.len(), hopf.dim(), "one action matrix per basis element");
        for m in &action {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "action matrix shape mismatch");
        }
        HModule { hopf, dim, action }
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Matrix of v -> x · v.
    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.hopf.dim(), "element length mismatch");
        let mut m = Matrix::zeros(self.hopf.field(), self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.action[i].scale(c));
        }
        m
    }

    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.action_of(x).mul_vec(v)
    }

    /// Verify the module axioms for the underlying algebra of H.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        let h = self.hopf.algebra();
        record(
            &mut report,
            "unit acts as the identity",
            &[],
            self.action_of(h.unit()) == Matrix::identity(h.field(), self.dim),
        );
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let composed = self.action[i].mul(&self.action[j]);
                let direct = self.action_of(&h.basis_product(i, j));
                record(&mut report, "(b_i b_j) v = b_i (b_j v)", &[i, j], composed == direct);
            }
        }
        report
    }

    /// Exact projectivity over H: the evaluation H ⊗ M -> M (acting on the
    /// left leg only, so the source is free) splits H-linearly iff M is
    /// projective.
    pub fn is_projective(&self) -> bool {
        let m = self.dim;
        if m == 0 {
            return true;
        }
        let h = &self.hopf;
        let n = h.dim();
        let field = h.field();
        // cover: column (i, j) -> b_i · e_j.
        let cover = Matrix::from_fn(field, m, n * m, |r, col| {
            let (i, j) = (col / m, col % m);
            self.action[i][(r, j)].clone()
        });
        let free_action: Vec<Matrix> = (0..n)
            .map(|i| h.algebra().left_mult(i).kron(&Matrix::identity(field, m)))
            .collect();
        // Unknown section s: M -> H ⊗ M, vectorized row-major.
        let unknowns = n * m * m;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let mut row = alloc::vec![field.zero(); unknowns];
                for k in 0..n * m {
                    row[k * m + b] = cover[(a, k)].clone();
                }
                rows.push(row);
                rhs.push(if a == b { field.one() } else { field.zero() });
            }
        }
        for i in 0..n {
            for k in 0..n * m {
                for b in 0..m {
                    let mut row = alloc::vec![field.zero(); unknowns];
                    for c in 0..m {
                        row[k * m + c] = row[k * m + c].add(&self.action[i][(c, b)]);
                    }
                    for l in 0..n * m {
                        row[l * m + b] = row[l * m + b].sub(&free_action[i][(k, l)]);
                    }
                    rows.push(row);
                    rhs.push(field.zero());
                }
            }
        }
        let system = Matrix::from_rows(field, &rows, unknowns);
        system.solve(&rhs).is_some()
    }
}

/// H acting on itself by left multiplication.
pub fn regular_module(h: &HopfAlgebra) -> HModule {
    let action = (0..h.dim()).map(|i| h.algebra().left_mult(i).clone()).collect();
    HModule::new(h.clone(), h.dim(), action)
}

/// The base field, acted on through the counit.
pub fn trivial_module(h: &HopfAlgebra) -> HModule {
    let field = h.field();
    let action = h
        .counit()
        .iter()
        .map(|e| {
            let mut m = Matrix::zeros(field, 1, 1);
            m[(0, 0)] = e.clone();
            m
        })
        .collect();
    HModule::new(h.clone(), 1, action)
}

/// Diagonal action on the Kronecker product: h · (v ⊗ w) = Σ h₁v ⊗ h₂w.
pub fn tensor_module(m: &HModule, n: &HModule) -> Result<HModule> {
    if m.hopf != n.hopf {
        return Err(Error::FieldMismatch);
    }
    let h = &m.hopf;
    let dim_h = h.dim();
    let field = h.field();
    let action = (0..dim_h)
        .map(|i| {
            let d = h.comult(i);
            let mut acc = Matrix::zeros(field, m.dim * n.dim, m.dim * n.dim);
            for j in 0..dim_h {
                for k in 0..dim_h {
                    let c = &d[j * dim_h + k];
                    if c.is_zero() {
                        continue;
                    }
                    acc = acc.add(&m.action[j].kron(&n.action[k]).scale(c));
                }
            }
            acc
        })
        .collect();
    Ok(HModule::new(h.clone(), m.dim * n.dim, action))
}

/// A module together with a chosen dual, evaluation and coevaluation.
#[derive(Debug, Clone)]
pub struct DualData {
    pub module: HModule,
    pub dual: HModule,
    /// For the left dual: ∨V ⊗ V → 1. For the right dual: V ⊗ V^∨ → 1.
    pub ev: Matrix,
    /// For the left dual: 1 → V ⊗ ∨V. For the right dual: 1 → V^∨ ⊗ V.
    pub coev: Matrix,
}

/// The left dual: action (h · f)(v) = f(S(h) · v); evaluation is the
/// canonical pairing ∨V ⊗ V → 1 and coevaluation inserts Σ v_i ⊗ f_i.
pub fn left_dual(m: &HModule) -> DualData {
    dual_with(m, m.hopf.antipode().clone())
}

/// The right dual, through the inverse antipode: (h · f)(v) = f(S⁻¹(h) · v),
/// with ev: V ⊗ V^∨ → 1 and coev: 1 → V^∨ ⊗ V.
pub fn right_dual(m: &HModule) -> DualData {
    dual_with(m, m.hopf.antipode_inv().clone())
}

fn dual_with(m: &HModule, twist: Matrix) -> DualData {
    let h = &m.hopf;
    let field = h.field();
    let dual_action: Vec<Matrix> = (0..h.dim())
        .map(|i| m.action_of(&twist.col(i)).transpose())
        .collect();
    let dual = HModule::new(h.clone(), m.dim, dual_action);
    let mut ev = Matrix::zeros(field, 1, m.dim * m.dim);
    for i in 0..m.dim {
        ev[(0, i * m.dim + i)] = field.one();
    }
    let mut coev = Matrix::zeros(field, m.dim * m.dim, 1);
    for i in 0..m.dim {
        coev[(i * m.dim + i, 0)] = field.one();
    }
    DualData {
        module: m.clone(),
        dual,
        ev,
        coev,
    }
}

/// Basis of the space of H-linear maps M -> N, by solving the commutation
/// system f ∘ ρ_M(b_i) = ρ_N(b_i) ∘ f.
pub fn hom_module_space(m: &HModule, n: &HModule) -> Result<Vec<Matrix>> {
    if m.hopf != n.hopf {
        return Err(Error::FieldMismatch);
    }
    let field = m.hopf.field();
    let unknowns = n.dim * m.dim; // f as an (n.dim x m.dim) matrix, row-major
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..m.hopf.dim() {
        for r in 0..n.dim {
            for c in 0..m.dim {
                let mut row = alloc::vec![field.zero(); unknowns];
                for l in 0..m.dim {
                    row[r * m.dim + l] = row[r * m.dim + l].add(&m.action[i][(l, c)]);
                }
                for l in 0..n.dim {
                    row[l * m.dim + c] = row[l * m.dim + c].sub(&n.action[i][(r, l)]);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(field, &rows, unknowns);
    let basis = kernel(&system);
    Ok(basis
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_vec(field, n.dim, m.dim, v))
        .collect())
}

//! H-module algebras: algebras carrying a compatible action of a Hopf
//! algebra. The central computation is the largest H-stable ideal inside the
//! Jacobson radical - the equivariant radical - which decides exactness.
//! Exact algebras are then decomposed into simple factors by splitting the
//! invariant centre into primitive idempotents, with a Frobenius fixed-space
//! certificate in positive characteristic.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{
    coordinate_vector, matrix_minimal_polynomial, Algebra, CheckReport, QuotientData,
    RightModule, Violation,
};
use crate::hopf::{tensor_module, HModule, HopfAlgebra};
use crate::poly::factor_squarefree_prime_field;
use crate::subspace::{image, kernel, largest_invariant_subspace, Subspace};
use crate::{Error, Matrix, Result, Scalar};

/// An algebra A together with a Hopf action ρ: H ⊗ A → A making the
/// multiplication and unit equivariant. `action[i]` is the matrix of
/// a ↦ b_i · a for the i-th basis element of H.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleAlgebra {
    hopf: HopfAlgebra,
    algebra: Algebra,
    action: Vec<Matrix>,
}

/// An H-stable two-sided ideal of a module algebra; the equivariant analogue
/// of [`crate::algebra::IdealSubspace`].
#[derive(Debug, Clone, PartialEq)]
pub struct IdealObject {
    space: Subspace,
}

impl IdealObject {
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

/// A subspace of A stable under all composites a·(h·v) and (h·v)·a. These
/// are exactly the ideal objects, and the equivalence is exercised by the
/// test suite; the type records which characterization produced the space.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedSubfunctor {
    space: Subspace,
}

impl MixedSubfunctor {
    pub fn space(&self) -> &Subspace {
        &self.space
    }
}

impl ModuleAlgebra {
    pub fn new(hopf: HopfAlgebra, algebra: Algebra, action: Vec<Matrix>) -> Result<ModuleAlgebra> {
        if hopf.field() != algebra.field() {
            return Err(Error::FieldMismatch);
        }
        if action.len() != hopf.dim() {
            return Err(Error::DimensionMismatch {
                context: "module algebra action count",
                expected: hopf.dim(),
                found: action.len(),
            });
        }
        for m in &action {
            if (m.rows(), m.cols()) != (algebra.dim(), algebra.dim()) {
                return Err(Error::DimensionMismatch {
                    context: "module algebra action shape",
                    expected: algebra.dim(),
                    found: m.rows().max(m.cols()),
                });
            }
        }
        Ok(ModuleAlgebra {
            hopf,
            algebra,
            action,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Matrix of a ↦ x · a for x in H.
    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        self.hmodule().action_of(x)
    }

    /// The underlying H-module of A.
    pub fn hmodule(&self) -> HModule {
        HModule::new(self.hopf.clone(), self.algebra.dim(), self.action.clone())
    }

    /// Verify every module-algebra axiom: A is an H-module, the action
    /// respects products through the coproduct, and fixes the unit through
    /// the counit.
    pub fn check(&self) -> CheckReport {
        let mut report = self.hmodule().check();
        let a = &self.algebra;
        let h = &self.hopf;
        let n = h.dim();
        let counit = h.counit();
        for i in 0..n {
            let acted_unit = self.action[i].mul_vec(a.unit());
            let scaled: Vec<Scalar> = a.unit().iter().map(|u| u.mul(&counit[i])).collect();
            if acted_unit != scaled {
                report.violations.push(Violation {
                    law: "the unit is H-invariant",
                    indices: alloc::vec![i],
                });
            }
        }
        for i in 0..n {
            let d = h.comult(i);
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let lhs = self.action[i].mul_vec(&a.basis_product(j, k));
                    let mut rhs = alloc::vec![a.field().zero(); a.dim()];
                    for s in 0..n {
                        for t in 0..n {
                            let c = &d[s * n + t];
                            if c.is_zero() {
                                continue;
                            }
                            let left = self.action[s].col(j);
                            let right = self.action[t].col(k);
                            let prod = a.multiply(&left, &right);
                            for (o, p) in rhs.iter_mut().zip(&prod) {
                                *o = o.add(&p.mul(c));
                            }
                        }
                    }
                    if lhs != rhs {
                        report.violations.push(Violation {
                            law: "the action respects products",
                            indices: alloc::vec![i, j, k],
                        });
                    }
                }
            }
        }
        report
    }

    /// True iff `v` is a two-sided ideal of A and stable under the H-action.
    pub fn is_ideal_object(&self, v: &Subspace) -> bool {
        assert_eq!(v.ambient(), self.dim(), "subspace ambient mismatch");
        let a = &self.algebra;
        for i in 0..a.dim() {
            if !v.contains(&v.map_by(a.left_mult(i))) || !v.contains(&v.map_by(a.right_mult(i))) {
                return false;
            }
        }
        self.action.iter().all(|m| v.contains(&v.map_by(m)))
    }

    /// The double-module characterization: stability under every composite
    /// v ↦ a·(h·v) and v ↦ (h·v)·a over basis pairs. Equivalent to
    /// [`ModuleAlgebra::is_ideal_object`].
    pub fn double_stability(&self, v: &Subspace) -> bool {
        assert_eq!(v.ambient(), self.dim(), "subspace ambient mismatch");
        let a = &self.algebra;
        for i in 0..a.dim() {
            for j in 0..self.hopf.dim() {
                let left = a.left_mult(i).mul(&self.action[j]);
                let right = a.right_mult(i).mul(&self.action[j]);
                if !v.contains(&v.map_by(&left)) || !v.contains(&v.map_by(&right)) {
                    return false;
                }
            }
        }
        true
    }

    /// Validate a subspace as an ideal object.
    pub fn ideal_object_from(&self, space: Subspace) -> Result<IdealObject> {
        self.algebra.ideal_from(space.clone())?;
        for (j, m) in self.action.iter().enumerate() {
            if !space.contains(&space.map_by(m)) {
                return Err(Error::AxiomViolation(format!(
                    "ideal is not H-stable: basis action {j} escapes"
                )));
            }
        }
        Ok(IdealObject { space })
    }

    /// Wrap a double-stable subspace, validating the stability maps.
    pub fn mixed_subfunctor_from(&self, space: Subspace) -> Result<MixedSubfunctor> {
        if !self.double_stability(&space) {
            return Err(Error::AxiomViolation(String::from(
                "subspace is not stable under the mixed maps a·(h·v), (h·v)·a",
            )));
        }
        Ok(MixedSubfunctor { space })
    }

    fn stability_maps(&self) -> Vec<Matrix> {
        let a = &self.algebra;
        let mut maps = Vec::with_capacity(2 * a.dim() + self.action.len());
        for i in 0..a.dim() {
            maps.push(a.left_mult(i).clone());
            maps.push(a.right_mult(i).clone());
        }
        maps.extend(self.action.iter().cloned());
        maps
    }

    /// The greatest ideal object contained in `w`: the largest subspace of
    /// `w` invariant under all left/right multiplications and the H-action.
    pub fn largest_stable_subideal(&self, w: &Subspace) -> IdealObject {
        let space = largest_invariant_subspace(&self.stability_maps(), w);
        assert!(
            self.is_ideal_object(&space),
            "fixpoint of the stability maps must be an ideal object"
        );
        IdealObject { space }
    }

    /// The equivariant radical: the greatest H-stable ideal inside the
    /// Jacobson radical, which is also the greatest nilpotent ideal object.
    /// Nilpotency and stability are re-verified before returning.
    pub fn c_module_radical(&self) -> Result<IdealObject> {
        let rad = self.algebra.radical()?;
        let core = self.largest_stable_subideal(rad.space());
        if !self.is_ideal_object(core.space()) {
            return Err(Error::PostVerification(String::from(
                "equivariant radical is not an ideal object",
            )));
        }
        let as_ideal = self.algebra.ideal_from(core.space.clone())?;
        if self.algebra.nilpotency_index(&as_ideal).is_none() {
            return Err(Error::PostVerification(String::from(
                "equivariant radical is not nilpotent",
            )));
        }
        Ok(core)
    }

    /// Exactness test: the equivariant radical vanishes.
    pub fn is_exact(&self) -> Result<bool> {
        Ok(self.c_module_radical()?.is_zero())
    }

    /// Product of two ideal objects; H-stability of the result is implied by
    /// the module-algebra axiom and asserted.
    pub fn ideal_object_product(&self, i: &IdealObject, j: &IdealObject) -> IdealObject {
        let a = self
            .algebra
            .ideal_from(i.space.clone())
            .expect("ideal object is a two-sided ideal");
        let b = self
            .algebra
            .ideal_from(j.space.clone())
            .expect("ideal object is a two-sided ideal");
        let product = self.algebra.ideal_product(&a, &b);
        let space = product.space().clone();
        assert!(
            self.is_ideal_object(&space),
            "product of H-stable ideals must be H-stable"
        );
        IdealObject { space }
    }

    /// Quotient by an ideal object, with the induced action (well defined by
    /// H-stability). The module-algebra axioms of the result are re-checked.
    pub fn quotient(&self, ideal: &IdealObject) -> Result<(ModuleAlgebra, QuotientData)> {
        let as_ideal = self.algebra.ideal_from(ideal.space.clone())?;
        let q = self.algebra.quotient(&as_ideal);
        let action = self
            .action
            .iter()
            .map(|m| q.projection.mul(&m.mul(&q.section)))
            .collect();
        let ma = ModuleAlgebra::new(self.hopf.clone(), q.algebra.clone(), action)?;
        if !ma.check().ok() {
            return Err(Error::PostVerification(String::from(
                "quotient violates the module-algebra axioms",
            )));
        }
        Ok((ma, q))
    }

    /// A / Rad^eq(A), re-verified to have vanishing equivariant radical.
    pub fn semisimple_quotient(&self) -> Result<(ModuleAlgebra, QuotientData)> {
        let rad = self.c_module_radical()?;
        let (ma, q) = self.quotient(&rad)?;
        if !ma.c_module_radical()?.is_zero() {
            return Err(Error::PostVerification(String::from(
                "semisimple quotient retains a stable radical",
            )));
        }
        Ok((ma, q))
    }

    /// Enumeration oracle: the sum of all nilpotent ideal objects, found by
    /// scanning every subspace of A. Only available over F_p within the
    /// bound.
    pub fn brute_force_c_radical(&self, bound: u128) -> Result<IdealObject> {
        let field = self.algebra.field();
        let mut acc = Subspace::zero(field, self.dim());
        for v in crate::subspace::enumerate_subspaces(field, self.dim(), bound)? {
            if v.is_zero() || !self.is_ideal_object(&v) {
                continue;
            }
            let as_ideal = self.algebra.ideal_from(v.clone())?;
            if self.algebra.nilpotency_index(&as_ideal).is_some() {
                acc = acc.sum(&v);
            }
        }
        if !self.is_ideal_object(&acc) {
            return Err(Error::PostVerification(String::from(
                "sum of nilpotent ideal objects is not an ideal object",
            )));
        }
        let as_ideal = self.algebra.ideal_from(acc.clone())?;
        if self.algebra.nilpotency_index(&as_ideal).is_none() {
            return Err(Error::PostVerification(String::from(
                "sum of nilpotent ideal objects is not nilpotent",
            )));
        }
        Ok(IdealObject { space: acc })
    }

    /// E = Z(A)^H: central elements fixed by the action through the counit.
    /// For exact algebras this is a product of fields whose primitive
    /// idempotents cut out the simple factors.
    pub fn invariant_center(&self) -> Subspace {
        let field = self.algebra.field();
        let n = self.dim();
        let mut inv = self.algebra.center();
        let counit = self.hopf.counit();
        for (i, m) in self.action.iter().enumerate() {
            let shifted = m.sub(&Matrix::identity(field, n).scale(&counit[i]));
            inv = inv.intersect(&kernel(&shifted));
            if inv.dim() <= 1 {
                break;
            }
        }
        inv
    }

    /// Split an exact module algebra into its simple factors.
    ///
    /// The invariant centre E is decomposed into primitive idempotents. In
    /// characteristic p the Frobenius fixed space of E provides both the
    /// splitters and a certificate: its dimension equals the number of
    /// factors. Over the rationals only rational eigenvalues are used;
    /// blocks of dimension 2 or 3 without rational eigenvalues are certified
    /// as fields by a primitive element, and anything larger is reported as
    /// needing a field extension rather than silently accepted.
    pub fn decompose_simple_factors(&self) -> Result<Vec<SimpleFactor>> {
        if !self.is_exact()? {
            return Err(Error::NotExact);
        }
        let field = self.algebra.field();
        let center_inv = self.invariant_center();
        let (e_alg, _) = self
            .algebra
            .subalgebra_with_unit(&center_inv, self.algebra.unit())?;
        let e_dim = e_alg.dim();
        let e_basis = center_inv.basis_vectors();

        // Splitters: Frobenius-fixed elements in characteristic p (their
        // minimal polynomials split into distinct linear factors), all basis
        // elements and pairwise sums over Q.
        let p = field.characteristic();
        let mut splitters: Vec<Vec<Scalar>> = Vec::new();
        let frobenius_fixed_dim = if p > 0 {
            let frob = e_alg.frobenius_matrix();
            let fixed = kernel(&frob.sub(&Matrix::identity(field, e_dim)));
            splitters.extend(fixed.basis_vectors());
            Some(fixed.dim())
        } else {
            for i in 0..e_dim {
                splitters.push(coordinate_vector(field, e_dim, i));
            }
            for i in 0..e_dim {
                for j in (i + 1)..e_dim {
                    let mut s = coordinate_vector(field, e_dim, i);
                    s[j] = field.one();
                    splitters.push(s);
                }
            }
            None
        };

        let mut blocks = alloc::vec![Subspace::full(field, e_dim)];
        loop {
            let mut next: Vec<Subspace> = Vec::new();
            let mut changed = false;
            for w in &blocks {
                let pieces = split_block(&e_alg, w, &splitters)?;
                if pieces.len() > 1 {
                    changed = true;
                }
                next.extend(pieces);
            }
            blocks = next;
            if !changed {
                break;
            }
        }

        if let Some(expected) = frobenius_fixed_dim {
            if blocks.len() != expected {
                return Err(Error::PostVerification(format!(
                    "Frobenius fixed space has dimension {expected} but splitting \
                     produced {} blocks",
                    blocks.len()
                )));
            }
        } else {
            certify_rational_blocks(&e_alg, &blocks)?;
        }

        // The unit of each block is a primitive idempotent of E. Lift its
        // block coordinates to E coordinates, then to A coordinates.
        let mut idempotents: Vec<Vec<Scalar>> = Vec::new();
        for w in &blocks {
            let unit_in_block = block_unit(&e_alg, w)?;
            let mut in_e = alloc::vec![field.zero(); e_dim];
            for (c, b) in unit_in_block.iter().zip(w.basis_vectors()) {
                if c.is_zero() {
                    continue;
                }
                for (o, x) in in_e.iter_mut().zip(&b) {
                    *o = o.add(&x.mul(c));
                }
            }
            let mut in_a = alloc::vec![field.zero(); self.dim()];
            for (c, b) in in_e.iter().zip(&e_basis) {
                if c.is_zero() {
                    continue;
                }
                for (o, x) in in_a.iter_mut().zip(b) {
                    *o = o.add(&x.mul(c));
                }
            }
            idempotents.push(in_a);
        }

        // Orthogonality, idempotence, completeness.
        let mut total = alloc::vec![field.zero(); self.dim()];
        for e in &idempotents {
            if !self.algebra.is_idempotent(e) {
                return Err(Error::PostVerification(String::from(
                    "block unit is not idempotent",
                )));
            }
            for (o, x) in total.iter_mut().zip(e) {
                *o = o.add(x);
            }
        }
        for (s, e) in idempotents.iter().enumerate() {
            for f in idempotents.iter().skip(s + 1) {
                if self.algebra.multiply(e, f).iter().any(|c| !c.is_zero()) {
                    return Err(Error::PostVerification(String::from(
                        "block units are not orthogonal",
                    )));
                }
            }
        }
        if total != self.algebra.unit() {
            return Err(Error::PostVerification(String::from(
                "block units do not sum to the identity",
            )));
        }

        let mut factors = Vec::with_capacity(idempotents.len());
        for e in &idempotents {
            factors.push(self.cut_factor(e)?);
        }
        Ok(factors)
    }

    /// Build the factor A·e for a central H-invariant idempotent e, with its
    /// complementary kernel ideal, and post-verify simplicity.
    fn cut_factor(&self, e: &[Scalar]) -> Result<SimpleFactor> {
        let field = self.algebra.field();
        let mult_e = self.algebra.left_mult_of(e);
        let space = image(&mult_e);
        let (factor_alg, embedding) = self.algebra.subalgebra_with_unit(&space, e)?;
        let action = (0..self.hopf.dim())
            .map(|i| {
                let moved = self.action[i].mul(&embedding);
                let cols: Vec<Vec<Scalar>> = (0..space.dim())
                    .map(|c| {
                        space
                            .coordinates_of(&moved.col(c))
                            .expect("factor must be H-stable")
                    })
                    .collect();
                Matrix::from_fn(field, space.dim(), space.dim(), |r, c| cols[c][r].clone())
            })
            .collect();
        let factor = ModuleAlgebra::new(self.hopf.clone(), factor_alg, action)?;
        if !factor.check().ok() {
            return Err(Error::PostVerification(String::from(
                "factor violates the module-algebra axioms",
            )));
        }
        // Kernel of the projection onto the factor: A·(1 - e).
        let mut complement = self.algebra.unit().to_vec();
        for (o, x) in complement.iter_mut().zip(e) {
            *o = o.sub(x);
        }
        let kernel_space = image(&self.algebra.left_mult_of(&complement));
        let kernel_ideal = self.ideal_object_from(kernel_space)?;

        // Simplicity: no stable radical, and exhaustively no proper nonzero
        // ideal object whenever enumeration is feasible.
        if !factor.c_module_radical()?.is_zero() {
            return Err(Error::PostVerification(String::from(
                "factor has a nonzero equivariant radical",
            )));
        }
        let fdim = factor.dim();
        if !field.is_rational() {
            let p = field.characteristic() as u128;
            let mut count = 1u128;
            let feasible = (0..fdim).all(|_| {
                count = match count.checked_mul(p) {
                    Some(c) => c,
                    None => return false,
                };
                count <= 4096
            });
            if feasible {
                for v in crate::subspace::enumerate_subspaces(field, fdim, 4096)? {
                    if !v.is_zero() && v.dim() < fdim && factor.is_ideal_object(&v) {
                        return Err(Error::PostVerification(String::from(
                            "factor has a proper nonzero ideal object",
                        )));
                    }
                }
            }
        }
        Ok(SimpleFactor {
            idempotent: e.to_vec(),
            kernel: kernel_ideal,
            factor,
            embedding,
        })
    }
}

/// One simple factor of an exact module algebra: the cutting idempotent, the
/// kernel of the projection, the factor itself, and the matrix embedding the
/// factor's coordinates back into A.
#[derive(Debug, Clone)]
pub struct SimpleFactor {
    pub idempotent: Vec<Scalar>,
    pub kernel: IdealObject,
    pub factor: ModuleAlgebra,
    pub embedding: Matrix,
}

/// Restrict multiplication by z (coordinates of E) to the block `w`, an
/// ideal of E; returns the matrix in the block's basis.
fn restrict_multiplication(e_alg: &Algebra, w: &Subspace, z: &[Scalar]) -> Result<Matrix> {
    let field = e_alg.field();
    let basis = w.basis_vectors();
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(basis.len());
    for b in &basis {
        let product = e_alg.multiply(z, b);
        let coords = w.coordinates_of(&product).ok_or_else(|| {
            Error::PostVerification(String::from(
                "block is not an ideal of the invariant centre",
            ))
        })?;
        cols.push(coords);
    }
    Ok(Matrix::from_fn(field, basis.len(), basis.len(), |r, c| {
        cols[c][r].clone()
    }))
}

/// Split one block by every splitter, taking kernels of the coprime factors
/// of minimal polynomials (linear factors over F_p, rational roots plus the
/// residual factor over Q).
fn split_block(e_alg: &Algebra, w: &Subspace, splitters: &[Vec<Scalar>]) -> Result<Vec<Subspace>> {
    let field = e_alg.field();
    for z in splitters {
        let m = restrict_multiplication(e_alg, w, z)?;
        let min_poly = matrix_minimal_polynomial(&m);
        let factors: Vec<crate::poly::Poly> = if field.is_rational() {
            let roots = crate::poly::rational_roots(&min_poly);
            if roots.is_empty() {
                continue;
            }
            let mut parts = Vec::new();
            let mut residual = min_poly.clone();
            for r in &roots {
                let linear = crate::poly::Poly::new(
                    field,
                    alloc::vec![r.neg(), field.one()],
                );
                residual = residual.divrem(&linear).0;
                parts.push(linear);
            }
            if residual.degree().unwrap_or(0) > 0 {
                parts.push(residual);
            }
            parts
        } else {
            if min_poly.squarefree_part() != min_poly.monic() {
                return Err(Error::PostVerification(String::from(
                    "invariant centre of an exact algebra carries a nilpotent",
                )));
            }
            factor_squarefree_prime_field(&min_poly)
        };
        if factors.len() < 2 {
            continue;
        }
        let basis = w.basis_vectors();
        let mut pieces = Vec::with_capacity(factors.len());
        for g in &factors {
            let evaluated = evaluate_poly_at_matrix(g, &m);
            let null = kernel(&evaluated);
            // Lift from block coordinates to E coordinates.
            let lifted: Vec<Vec<Scalar>> = null
                .basis_vectors()
                .into_iter()
                .map(|v| {
                    let mut out = alloc::vec![field.zero(); e_alg.dim()];
                    for (c, b) in v.iter().zip(&basis) {
                        if c.is_zero() {
                            continue;
                        }
                        for (o, x) in out.iter_mut().zip(b) {
                            *o = o.add(&x.mul(c));
                        }
                    }
                    out
                })
                .collect();
            pieces.push(Subspace::from_spanning(field, e_alg.dim(), &lifted));
        }
        if pieces.iter().map(|s| s.dim()).sum::<usize>() != w.dim() {
            return Err(Error::PostVerification(String::from(
                "block splitting lost dimensions",
            )));
        }
        return Ok(pieces);
    }
    Ok(alloc::vec![w.clone()])
}

fn evaluate_poly_at_matrix(g: &crate::poly::Poly, m: &Matrix) -> Matrix {
    let field = m.field();
    let n = m.rows();
    let mut acc = Matrix::zeros(field, n, n);
    let mut power = Matrix::identity(field, n);
    for (i, c) in g.coeffs().iter().enumerate() {
        if i > 0 {
            power = power.mul(m);
        }
        if !c.is_zero() {
            acc = acc.add(&power.scale(c));
        }
    }
    acc
}

/// Over Q: every block of dimension ≥ 2 must exhibit a primitive element
/// whose minimal polynomial has the block's dimension as degree and is
/// certifiably irreducible (degree ≤ 3 with no rational roots). Otherwise
/// the decomposition honestly reports that a field extension is needed.
fn certify_rational_blocks(e_alg: &Algebra, blocks: &[Subspace]) -> Result<()> {
    for w in blocks {
        let k = w.dim();
        if k == 1 {
            continue;
        }
        let basis = w.basis_vectors();
        let mut candidates: Vec<Vec<Scalar>> = basis.clone();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let sum: Vec<Scalar> = basis[i]
                    .iter()
                    .zip(&basis[j])
                    .map(|(a, b)| a.add(b))
                    .collect();
                candidates.push(sum);
            }
        }
        let mut certified = false;
        for z in &candidates {
            let m = restrict_multiplication(e_alg, w, z)?;
            let min_poly = matrix_minimal_polynomial(&m);
            if min_poly.degree() == Some(k)
                && k <= 3
                && crate::poly::rational_roots(&min_poly).is_empty()
            {
                certified = true;
                break;
            }
        }
        if !certified {
            let dims: Vec<String> = blocks.iter().map(|b| format!("{}", b.dim())).collect();
            return Err(Error::FieldExtensionNeeded(format!(
                "invariant centre splits into blocks of dimensions [{}]; a block of \
                 dimension {k} cannot be certified as a field using rational \
                 eigenvalues alone",
                dims.join(", ")
            )));
        }
    }
    Ok(())
}

/// The unit of a block (an ideal of E with its own identity): solve
/// e·w_t = w_t over the block's coordinates.
fn block_unit(e_alg: &Algebra, w: &Subspace) -> Result<Vec<Scalar>> {
    let field = e_alg.field();
    let basis = w.basis_vectors();
    let k = basis.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for b in &basis {
        for r in 0..e_alg.dim() {
            let mut row = alloc::vec![field.zero(); k];
            for (s, c) in basis.iter().enumerate() {
                row[s] = e_alg.multiply(c, b)[r].clone();
            }
            rows.push(row);
            rhs.push(b[r].clone());
        }
    }
    let system = Matrix::from_rows(field, &rows, k);
    let coeffs = system.solve(&rhs).ok_or_else(|| {
        Error::PostVerification(String::from("block of the invariant centre has no unit"))
    })?;
    Ok(coeffs)
}

/// A right A-module object: an H-module M with a right A-action making the
/// two structures compatible. `nabla[j]` is the matrix of m ↦ m · a_j.
#[derive(Debug, Clone, PartialEq)]
pub struct AModuleObject {
    over: ModuleAlgebra,
    hmodule: HModule,
    nabla: Vec<Matrix>,
}

impl AModuleObject {
    pub fn new(over: ModuleAlgebra, hmodule: HModule, nabla: Vec<Matrix>) -> Result<AModuleObject> {
        if hmodule.hopf() != over.hopf() {
            return Err(Error::FieldMismatch);
        }
        if nabla.len() != over.dim() {
            return Err(Error::DimensionMismatch {
                context: "right action count",
                expected: over.dim(),
                found: nabla.len(),
            });
        }
        for m in &nabla {
            if (m.rows(), m.cols()) != (hmodule.dim(), hmodule.dim()) {
                return Err(Error::DimensionMismatch {
                    context: "right action shape",
                    expected: hmodule.dim(),
                    found: m.rows().max(m.cols()),
                });
            }
        }
        Ok(AModuleObject {
            over,
            hmodule,
            nabla,
        })
    }

    pub fn over(&self) -> &ModuleAlgebra {
        &self.over
    }

    pub fn hmodule(&self) -> &HModule {
        &self.hmodule
    }

    pub fn dim(&self) -> usize {
        self.hmodule.dim()
    }

    pub fn nabla(&self, j: usize) -> &Matrix {
        &self.nabla[j]
    }

    /// Matrix of m ↦ m · x for x in A.
    pub fn nabla_of(&self, x: &[Scalar]) -> Matrix {
        let field = self.over.algebra().field();
        let mut m = Matrix::zeros(field, self.dim(), self.dim());
        for (j, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.nabla[j].scale(c));
        }
        m
    }

    /// The underlying plain right module over the underlying algebra.
    pub fn right_module(&self) -> RightModule {
        RightModule::new(self.over.algebra().clone(), self.dim(), self.nabla.clone())
    }

    /// Verify: H-module axioms, right-module axioms, and the equivariance
    /// h·(m·a) = Σ (h₁·m)·(h₂·a).
    pub fn check(&self) -> CheckReport {
        let mut report = self.hmodule.check();
        report
            .violations
            .extend(self.right_module().check().violations);
        let h = self.over.hopf();
        let n = h.dim();
        for i in 0..n {
            let d = h.comult(i);
            for j in 0..self.over.dim() {
                let lhs = self.hmodule.action(i).mul(&self.nabla[j]);
                let mut rhs = Matrix::zeros(h.field(), self.dim(), self.dim());
                for s in 0..n {
                    for t in 0..n {
                        let c = &d[s * n + t];
                        if c.is_zero() {
                            continue;
                        }
                        let acted = self.over.action(t).col(j);
                        let term = self.nabla_of(&acted).mul(self.hmodule.action(s));
                        rhs = rhs.add(&term.scale(c));
                    }
                }
                if lhs != rhs {
                    report.violations.push(Violation {
                        law: "the right action is H-equivariant",
                        indices: alloc::vec![i, j],
                    });
                }
            }
        }
        report
    }

    /// span{ v·x : v ∈ M, x ∈ ideal }: an H-stable A-submodule.
    pub fn times_ideal_object(&self, ideal: &IdealObject) -> Subspace {
        let field = self.over.algebra().field();
        let mut acc = Subspace::zero(field, self.dim());
        for x in ideal.space.basis_vectors() {
            acc = acc.sum(&image(&self.nabla_of(&x)));
        }
        acc
    }

    /// Restrict to a subspace stable under both actions. Returns the
    /// submodule object and the embedding into this one.
    pub fn submodule(&self, w: &Subspace) -> Result<(AModuleObject, Matrix)> {
        let maps: Vec<&Matrix> = (0..self.over.hopf().dim())
            .map(|i| self.hmodule.action(i))
            .chain(self.nabla.iter())
            .collect();
        for m in &maps {
            if !w.contains(&w.map_by(m)) {
                return Err(Error::AxiomViolation(String::from(
                    "the subspace is not stable under both actions",
                )));
            }
        }
        let embedding = w.basis().transpose();
        let restrict = |m: &Matrix| -> Matrix {
            let cols: Vec<Vec<Scalar>> = (0..w.dim())
                .map(|t| {
                    let img = m.mul_vec(&embedding.col(t));
                    w.coordinates_of(&img)
                        .expect("stability was checked above")
                })
                .collect();
            Matrix::from_fn(m.field(), w.dim(), w.dim(), |r, c| cols[c][r].clone())
        };
        let action = (0..self.over.hopf().dim())
            .map(|i| restrict(self.hmodule.action(i)))
            .collect();
        let sub_h = HModule::new(self.over.hopf().clone(), w.dim(), action);
        let nabla = self.nabla.iter().map(restrict).collect();
        let sub = AModuleObject::new(self.over.clone(), sub_h, nabla)?;
        Ok((sub, embedding))
    }

    /// Quotient by a subspace stable under both actions. Returns the
    /// quotient object with the projection and a linear section of it.
    pub fn quotient_by(&self, w: &Subspace) -> Result<(AModuleObject, Matrix, Matrix)> {
        let field = self.over.algebra().field();
        let maps: Vec<&Matrix> = (0..self.over.hopf().dim())
            .map(|i| self.hmodule.action(i))
            .chain(self.nabla.iter())
            .collect();
        for m in &maps {
            if !w.contains(&w.map_by(m)) {
                return Err(Error::AxiomViolation(String::from(
                    "the subspace is not stable under both actions",
                )));
            }
        }
        let n = self.dim();
        let pivots = w.pivot_columns();
        let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let m = complement.len();
        let basis = w.basis();
        let mut projection = Matrix::zeros(field, m, n);
        for (t, &c) in complement.iter().enumerate() {
            projection[(t, c)] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                projection[(t, pc)] = basis[(r, c)].neg();
            }
        }
        let mut section = Matrix::zeros(field, n, m);
        for (t, &c) in complement.iter().enumerate() {
            section[(c, t)] = field.one();
        }
        let push = |mp: &Matrix| projection.mul(&mp.mul(&section));
        let action = (0..self.over.hopf().dim())
            .map(|i| push(self.hmodule.action(i)))
            .collect();
        let quot_h = HModule::new(self.over.hopf().clone(), m, action);
        let nabla = self.nabla.iter().map(push).collect();
        let quot = AModuleObject::new(self.over.clone(), quot_h, nabla)?;
        Ok((quot, projection, section))
    }
}

/// A as a right module object over itself.
pub fn regular_module_object(ma: &ModuleAlgebra) -> AModuleObject {
    let nabla = (0..ma.dim())
        .map(|j| ma.algebra().right_mult(j).clone())
        .collect();
    AModuleObject::new(ma.clone(), ma.hmodule(), nabla)
        .expect("the regular module object is always well formed")
}

/// Q ⊳ M: tensor an H-module onto a module object, H acting diagonally and
/// A on the right factor. For projective Q these generate the projectives.
pub fn act_module(q: &HModule, m: &AModuleObject) -> Result<AModuleObject> {
    let tensored = tensor_module(q, m.hmodule())?;
    let field = m.over.algebra().field();
    let id_q = Matrix::identity(field, q.dim());
    let nabla = m.nabla.iter().map(|nb| id_q.kron(nb)).collect();
    AModuleObject::new(m.over.clone(), tensored, nabla)
}

/// Pull a module object over a quotient back along the projection.
pub fn inflate_module_object(
    m: &AModuleObject,
    parent: &ModuleAlgebra,
    q: &QuotientData,
) -> AModuleObject {
    let nabla = (0..parent.dim())
        .map(|j| m.nabla_of(&q.projection.col(j)))
        .collect();
    AModuleObject::new(parent.clone(), m.hmodule.clone(), nabla)
        .expect("inflation along a quotient is always well formed")
}

/// Braided (or plain, for trivial braiding) tensor product of two module
/// algebras over the same H: the product is (a⊗b)(a'⊗b') = Σ a(R²·a') ⊗
/// (R¹·b)b', with R = 1⊗1 (the swap) when H is cocommutative and carries no
/// r-matrix.
pub fn tensor_module_algebras(
    a: &ModuleAlgebra,
    b: &ModuleAlgebra,
) -> Result<ModuleAlgebra> {
    if a.hopf() != b.hopf() {
        return Err(Error::FieldMismatch);
    }
    let h = a.hopf();
    let field = h.field();
    let hd = h.dim();
    let braiding: Option<&[Scalar]> = h.rmatrix();
    if braiding.is_none() && !h.is_cocommutative() {
        return Err(Error::AxiomViolation(String::from(
            "tensoring module algebras needs a cocommutative or quasitriangular Hopf algebra",
        )));
    }
    let (na, nb) = (a.dim(), b.dim());
    let dim = na * nb;
    let mut unit = alloc::vec![field.zero(); dim];
    for (i, x) in a.algebra().unit().iter().enumerate() {
        for (j, y) in b.algebra().unit().iter().enumerate() {
            unit[i * nb + j] = x.mul(y);
        }
    }
    let product = |i: usize, j: usize| -> Vec<Scalar> {
        let (i1, i2) = (i / nb, i % nb);
        let (j1, j2) = (j / nb, j % nb);
        let mut out = alloc::vec![field.zero(); dim];
        let mut add_term = |left: &[Scalar], right: &[Scalar], c: &Scalar| {
            for (s, x) in left.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (t, y) in right.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    out[s * nb + t] = out[s * nb + t].add(&c.mul(&x.mul(y)));
                }
            }
        };
        match braiding {
            None => {
                add_term(
                    &a.algebra().basis_product(i1, j1),
                    &b.algebra().basis_product(i2, j2),
                    &field.one(),
                );
            }
            Some(r) => {
                for s in 0..hd {
                    for t in 0..hd {
                        let c = &r[s * hd + t];
                        if c.is_zero() {
                            continue;
                        }
                        let moved_a = a.action(t).col(j1);
                        let moved_b = b.action(s).col(i2);
                        let left = a.algebra().multiply(
                            &coordinate_vector(field, na, i1),
                            &moved_a,
                        );
                        let right = b.algebra().multiply(
                            &moved_b,
                            &coordinate_vector(field, nb, j2),
                        );
                        add_term(&left, &right, c);
                    }
                }
            }
        }
        out
    };
    let algebra = Algebra::from_mul(field, dim, unit, product);
    let action = (0..hd)
        .map(|i| {
            let d = h.comult(i);
            let mut acc = Matrix::zeros(field, dim, dim);
            for s in 0..hd {
                for t in 0..hd {
                    let c = &d[s * hd + t];
                    if c.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.action(s).kron(b.action(t)).scale(c));
                }
            }
            acc
        })
        .collect();
    let ma = ModuleAlgebra::new(h.clone(), algebra, action)?;
    if !ma.check().ok() {
        return Err(Error::PostVerification(String::from(
            "tensor product violates the module-algebra axioms",
        )));
    }
    Ok(ma)
}

/// The base field as a module algebra (the unit object).
pub fn unit_module_algebra(h: &HopfAlgebra) -> ModuleAlgebra {
    let field = h.field();
    let algebra = Algebra::from_mul(field, 1, alloc::vec![field.one()], |_, _| {
        alloc::vec![field.one()]
    });
    let action = h
        .counit()
        .iter()
        .map(|e| {
            let mut m = Matrix::zeros(field, 1, 1);
            m[(0, 0)] = e.clone();
            m
        })
        .collect();
    ModuleAlgebra::new(h.clone(), algebra, action)
        .expect("the unit module algebra is always well formed")
}

/// The coordinate ring of the square roots of unity: A = k[x]/(x² - 1) with
/// x in odd degree, as a module algebra over the dual group algebra of Z/2.
/// Basis of A: {1, x}; basis of H: the idempotents {e_even, e_odd}.
pub fn mu2_module_algebra(field: crate::FieldSpec) -> Result<ModuleAlgebra> {
    let table = alloc::vec![alloc::vec![0usize, 1], alloc::vec![1, 0]];
    let h = crate::hopf::dual_group_algebra(field, &table)?;
    let one = field.one();
    let zero = field.zero();
    let algebra = Algebra::from_mul(field, 2, alloc::vec![one.clone(), zero.clone()], |i, j| {
        if (i + j) % 2 == 0 {
            alloc::vec![one.clone(), zero.clone()]
        } else {
            alloc::vec![zero.clone(), one.clone()]
        }
    });
    let even = Matrix::from_i64(field, &[&[1, 0], &[0, 0]]);
    let odd = Matrix::from_i64(field, &[&[0, 0], &[0, 1]]);
    ModuleAlgebra::new(h, algebra, alloc::vec![even, odd])
}

/// Functions on Z/2 as a module algebra over the group algebra k[Z/2], the
/// group acting by translating the points.
pub fn function_algebra_z2(field: crate::FieldSpec) -> Result<ModuleAlgebra> {
    let table = alloc::vec![alloc::vec![0usize, 1], alloc::vec![1, 0]];
    let h = crate::hopf::group_algebra(field, &table)?;
    let one = field.one();
    let zero = field.zero();
    let algebra = Algebra::from_mul(field, 2, alloc::vec![one.clone(), one.clone()], |i, j| {
        if i == j {
            let mut v = alloc::vec![zero.clone(), zero.clone()];
            v[i] = one.clone();
            v
        } else {
            alloc::vec![zero.clone(), zero.clone()]
        }
    });
    let identity = Matrix::identity(field, 2);
    let swap = Matrix::from_i64(field, &[&[0, 1], &[1, 0]]);
    ModuleAlgebra::new(h, algebra, alloc::vec![identity, swap])
}

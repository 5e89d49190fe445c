//! Smash products A#H and the passage between module objects over a module
//! algebra and ordinary modules over the smash product. Under that passage,
//! projectivity inside the action category reduces to projectivity of the
//! underlying A-module, which is decided exactly; the reduction is witnessed
//! on each module by an explicit isomorphism from the induced smash module
//! of the underlying module onto the free-action module H ⊳ M. For simple
//! module algebras the same circle of ideas forces every module object to
//! be projective (Skryabin's projectivity theorem at finite dimension), and
//! a sweep over a corpus of modules reports any counterexample — which
//! would falsify the implementation, not the theorem.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, RightModule};
use crate::hopf::{regular_module, HModule};
use crate::modalg::{act_module, AModuleObject, ModuleAlgebra};
use crate::subspace::{enumerate_subspaces, kernel, Subspace};
use crate::{Error, Matrix, Result, Scalar};

/// The algebra A#H on the basis a_i ⊗ h_j (laid out as i·dim H + j), with
/// multiplication (a ⊗ h)(a' ⊗ h') = Σ a (h₁ a') ⊗ h₂ h' and unit 1 ⊗ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SmashProduct {
    ma: ModuleAlgebra,
    algebra: Algebra,
}

/// Build the smash product of a module algebra. The Hopf leg of the left
/// factor is dragged across the algebra leg of the right factor through the
/// comultiplication; associativity follows from the module-algebra axioms
/// and is re-verified directly on the structure constants.
pub fn smash(ma: &ModuleAlgebra) -> Result<SmashProduct> {
    let h = ma.hopf();
    let a = ma.algebra();
    let field = a.field();
    let (da, dh) = (a.dim(), h.dim());
    let dim = da * dh;
    let mut unit = alloc::vec![field.zero(); dim];
    for (i, ua) in a.unit().iter().enumerate() {
        for (j, uh) in h.algebra().unit().iter().enumerate() {
            unit[i * dh + j] = ua.mul(uh);
        }
    }
    let algebra = Algebra::from_mul(field, dim, unit, |row, col| {
        let (i, j) = (row / dh, row % dh);
        let (k, l) = (col / dh, col % dh);
        let mut out = alloc::vec![field.zero(); dim];
        let dj = h.comult(j);
        for u in 0..dh {
            let moved = a.left_mult(i).mul_vec(&ma.action(u).col(k));
            for v in 0..dh {
                let c = &dj[u * dh + v];
                if c.is_zero() {
                    continue;
                }
                let tail = h.algebra().basis_product(v, l);
                for (s, ms) in moved.iter().enumerate() {
                    if ms.is_zero() {
                        continue;
                    }
                    let cs = c.mul(ms);
                    for (t, ht) in tail.iter().enumerate() {
                        if ht.is_zero() {
                            continue;
                        }
                        out[s * dh + t] = out[s * dh + t].add(&cs.mul(ht));
                    }
                }
            }
        }
        out
    });
    let report = algebra.check();
    if !report.ok() {
        return Err(Error::PostVerification(format!(
            "smash product fails {} algebra axioms",
            report.violations.len()
        )));
    }
    Ok(SmashProduct {
        ma: ma.clone(),
        algebra,
    })
}

impl SmashProduct {
    pub fn module_algebra(&self) -> &ModuleAlgebra {
        &self.ma
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The algebra embedding a ↦ a ⊗ 1.
    pub fn include_algebra(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.ma.dim(), "element of the wrong algebra");
        let dh = self.ma.hopf().dim();
        let unit_h = self.ma.hopf().algebra().unit();
        let field = self.algebra.field();
        let mut out = alloc::vec![field.zero(); self.algebra.dim()];
        for (i, xi) in x.iter().enumerate() {
            for (j, uj) in unit_h.iter().enumerate() {
                out[i * dh + j] = xi.mul(uj);
            }
        }
        out
    }

    /// The Hopf embedding h ↦ 1 ⊗ h.
    pub fn include_hopf(&self, y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(y.len(), self.ma.hopf().dim(), "element of the wrong Hopf algebra");
        let dh = self.ma.hopf().dim();
        let unit_a = self.ma.algebra().unit();
        let field = self.algebra.field();
        let mut out = alloc::vec![field.zero(); self.algebra.dim()];
        for (i, ui) in unit_a.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                out[i * dh + j] = ui.mul(yj);
            }
        }
        out
    }

    /// Present a module object as a module over the smash product: a ⊗ h
    /// acts by v ↦ S⁻¹(h)·(v·a). Restricting along a ↦ a ⊗ 1 recovers the
    /// A-action on the nose; the Hopf action returns through the antipode,
    /// ρ(h) = action of 1 ⊗ S(h). The module laws over A#H close because
    /// Σ S⁻¹(h₂) h₁ = ε(h) 1; they are re-verified on the output, so an
    /// inconsistent input module is rejected here.
    pub fn translate(&self, m: &AModuleObject) -> Result<TranslatedModule> {
        if m.over() != &self.ma {
            return Err(Error::AxiomViolation(String::from(
                "the module object lives over a different module algebra",
            )));
        }
        let h = self.ma.hopf();
        let (da, dh) = (self.ma.dim(), h.dim());
        let hm = m.hmodule();
        let twists: Vec<Matrix> = (0..dh)
            .map(|j| hm.action_of(&h.antipode_inv().col(j)))
            .collect();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for i in 0..da {
            for twist in &twists {
                action.push(twist.mul(m.nabla(i)));
            }
        }
        let module = RightModule::new(self.algebra.clone(), m.dim(), action);
        let report = module.check();
        if !report.ok() {
            return Err(Error::AxiomViolation(format!(
                "translated action violates {} smash module laws",
                report.violations.len()
            )));
        }
        Ok(TranslatedModule {
            source: m.clone(),
            module,
        })
    }

    /// Verify the structure isomorphism ω(M) ⊗_A (A#H) ≅ H ⊳ M. The balanced
    /// tensor product is the quotient of M ⊗ (A#H) by the relator span of
    /// (v·a) ⊗ x − v ⊗ (a⊗1)x, and v ⊗ x is sent to (1 ⊗ v) ◁ x inside the
    /// translated free-action module. Checked: the map kills every relator,
    /// its kernel is exactly the relator span, it is surjective, and it
    /// intertwines right multiplication with the translated action.
    pub fn induction_isomorphism(&self, m: &AModuleObject) -> Result<bool> {
        if m.over() != &self.ma {
            return Err(Error::AxiomViolation(String::from(
                "the module object lives over a different module algebra",
            )));
        }
        let field = self.algebra.field();
        let (da, dh, dm, ds) = (self.ma.dim(), self.ma.hopf().dim(), m.dim(), self.dim());
        let reg = regular_module(self.ma.hopf());
        let free = act_module(&reg, m)?;
        let t = self.translate(&free)?;
        // v ↦ 1_H ⊗ v into the free-action module.
        let unit_h = self.ma.hopf().algebra().unit();
        let embed = Matrix::from_fn(field, dh * dm, dm, |r, c| {
            if r % dm == c {
                unit_h[r / dm].clone()
            } else {
                field.zero()
            }
        });
        let pushed: Vec<Matrix> = (0..ds)
            .map(|w| t.module().action(w).mul(&embed))
            .collect();
        // Columns indexed by (i, w) ↦ i·ds + w over the raw space M ⊗ (A#H).
        let theta = Matrix::from_fn(field, dh * dm, dm * ds, |r, c| {
            pushed[c % ds][(r, c / ds)].clone()
        });
        let lifts: Vec<Matrix> = (0..da)
            .map(|j| {
                let mut e = alloc::vec![field.zero(); da];
                e[j] = field.one();
                self.algebra.left_mult_of(&self.include_algebra(&e))
            })
            .collect();
        let mut relators: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..dm {
            for j in 0..da {
                for w in 0..ds {
                    let mut rel = alloc::vec![field.zero(); dm * ds];
                    for r in 0..dm {
                        rel[r * ds + w] = m.nabla(j)[(r, i)].clone();
                    }
                    for s in 0..ds {
                        rel[i * ds + s] = rel[i * ds + s].sub(&lifts[j][(s, w)]);
                    }
                    relators.push(rel);
                }
            }
        }
        for rel in &relators {
            if theta.mul_vec(rel).iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
        }
        let span = Subspace::from_spanning(field, dm * ds, &relators);
        if kernel(&theta) != span {
            return Ok(false);
        }
        if theta.rank() != dh * dm {
            return Ok(false);
        }
        let id_m = Matrix::identity(field, dm);
        for y in 0..ds {
            let raw = theta.mul(&id_m.kron(self.algebra.right_mult(y)));
            if raw != t.module().action(y).mul(&theta) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A module object rewritten as a module over the smash product, kept
/// together with its source for the return trip.
#[derive(Debug, Clone)]
pub struct TranslatedModule {
    source: AModuleObject,
    module: RightModule,
}

impl TranslatedModule {
    pub fn source(&self) -> &AModuleObject {
        &self.source
    }

    pub fn module(&self) -> &RightModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// Recover the module object from its smash presentation, reading the
/// A-action off A ⊗ 1 and the Hopf action off 1 ⊗ S(h). Only the translated
/// action matrices are consulted; the module-object constructor re-validates
/// the reconstruction.
pub fn untranslate(t: &TranslatedModule) -> Result<AModuleObject> {
    let ma = t.source().over().clone();
    let h = ma.hopf().clone();
    let field = ma.algebra().field();
    let (da, dh) = (ma.dim(), h.dim());
    let unit_a = ma.algebra().unit().to_vec();
    let unit_h = h.algebra().unit().to_vec();
    let nabla: Vec<Matrix> = (0..da)
        .map(|i| {
            let mut x = alloc::vec![field.zero(); da * dh];
            for (j, uj) in unit_h.iter().enumerate() {
                x[i * dh + j] = uj.clone();
            }
            t.module().action_of(&x)
        })
        .collect();
    let hact: Vec<Matrix> = (0..dh)
        .map(|j| {
            let s = h.antipode().col(j);
            let mut x = alloc::vec![field.zero(); da * dh];
            for (i, ui) in unit_a.iter().enumerate() {
                for (v, sv) in s.iter().enumerate() {
                    x[i * dh + v] = ui.mul(sv);
                }
            }
            t.module().action_of(&x)
        })
        .collect();
    let hmodule = HModule::new(h, t.dim(), hact);
    AModuleObject::new(ma, hmodule, nabla)
}

/// Decide projectivity of a module object inside the action category. The
/// free-action module H ⊳ M is projective there exactly when the underlying
/// A-module of M is projective in the ordinary sense, so the equivariant
/// question reduces to the forgetful one; the test suite plays this shortcut
/// off against the smash route, translating H ⊳ M and testing projectivity
/// over A#H directly.
pub fn is_c_projective(m: &AModuleObject) -> Result<bool> {
    m.right_module().is_projective()
}

/// Outcome of the projectivity sweep over a corpus of module objects.
#[derive(Debug, Clone, PartialEq)]
pub struct SkryabinReport {
    /// Some(true)/Some(false) once simplicity of the module algebra was
    /// decided; None when the deciding enumeration was infeasible.
    pub simple: Option<bool>,
    /// Per-corpus verdicts; empty when the sweep was skipped because the
    /// instance is not (known to be) simple.
    pub projective: Vec<bool>,
}

impl SkryabinReport {
    pub fn skipped(&self) -> bool {
        self.simple != Some(true)
    }

    pub fn counterexamples(&self) -> Vec<usize> {
        self.projective
            .iter()
            .enumerate()
            .filter(|(_, p)| !**p)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn all_projective(&self) -> bool {
        !self.skipped() && self.counterexamples().is_empty()
    }
}

/// Over a simple module algebra every module object is projective. The gate
/// first rules out non-simple instances through the equivariant radical,
/// then decides simplicity outright by enumerating ideal objects; when the
/// enumeration is infeasible (rational field or bound exceeded) the sweep
/// is reported as skipped rather than guessed.
pub fn skryabin_check(
    ma: &ModuleAlgebra,
    corpus: &[AModuleObject],
    bound: u128,
) -> Result<SkryabinReport> {
    for m in corpus {
        if m.over() != ma {
            return Err(Error::AxiomViolation(String::from(
                "corpus module lives over a different module algebra",
            )));
        }
    }
    let rad = ma.c_module_radical()?;
    let simple = if !rad.is_zero() {
        Some(false)
    } else {
        match enumerate_subspaces(ma.algebra().field(), ma.dim(), bound) {
            Ok(spaces) => Some(spaces.filter(|w| ma.is_ideal_object(w)).count() == 2),
            Err(Error::RationalEnumeration) | Err(Error::EnumerationBound { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    if simple != Some(true) {
        return Ok(SkryabinReport {
            simple,
            projective: Vec::new(),
        });
    }
    let mut projective = Vec::with_capacity(corpus.len());
    for m in corpus {
        projective.push(is_c_projective(m)?);
    }
    Ok(SkryabinReport { simple, projective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra, sweedler4, tensor_module};
    use crate::modalg::{
        function_algebra_z2, mu2_module_algebra, regular_module_object, tensor_module_algebras,
        unit_module_algebra,
    };
    use crate::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn mu2(field: FieldSpec) -> ModuleAlgebra {
        mu2_module_algebra(field).unwrap()
    }

    fn tensor_square(field: FieldSpec) -> ModuleAlgebra {
        let a = mu2(field);
        tensor_module_algebras(&a, &a).unwrap()
    }

    /// A = k[t]/(t²) with the trivial Hopf algebra acting.
    fn local_trivial_hopf(field: FieldSpec) -> ModuleAlgebra {
        let h = group_algebra(field, &[alloc::vec![0usize]]).unwrap();
        let one = field.one();
        let zero = field.zero();
        let a = Algebra::from_mul(field, 2, alloc::vec![one, zero], |i, j| {
            let mut v = alloc::vec![field.zero(), field.zero()];
            if i + j < 2 {
                v[i + j] = field.one();
            }
            v
        });
        ModuleAlgebra::new(h, a, alloc::vec![Matrix::identity(field, 2)]).unwrap()
    }

    fn free_on(probe: &HModule, m: &AModuleObject) -> AModuleObject {
        act_module(probe, m).unwrap()
    }

    #[test]
    fn the_smash_with_the_trivial_hopf_algebra_is_the_algebra_itself() {
        let ma = local_trivial_hopf(fp(2));
        let s = smash(&ma).unwrap();
        assert_eq!(s.algebra(), ma.algebra());
    }

    #[test]
    fn the_smash_over_the_unit_algebra_is_the_hopf_algebra_itself() {
        let z2 = [alloc::vec![0usize, 1], alloc::vec![1, 0]];
        for h in [group_algebra(fp(3), &z2).unwrap(), sweedler4(q()).unwrap()] {
            let ma = unit_module_algebra(&h);
            let s = smash(&ma).unwrap();
            assert_eq!(s.algebra(), h.algebra());
        }
    }

    /// Over A = k[x]/(x²−1) graded by the two-point group dual, Δ(e₁) =
    /// e₀⊗e₁ + e₁⊗e₀ and e₁ kills even elements, so (1⊗e₁)(x⊗1) expands as
    /// (e₀·x)⊗(e₁·1) + (e₁·x)⊗(e₀·1) = x⊗e₀: the grading drains out of the
    /// Hopf leg into the algebra leg. Swapping the factors lands on x⊗e₁
    /// instead, so the smash is noncommutative even though both factors
    /// are commutative.
    #[test]
    fn hand_computed_product_in_the_two_point_smash() {
        let ma = mu2(fp(2));
        let s = smash(&ma).unwrap();
        assert_eq!(s.dim(), 4);
        let field = fp(2);
        let (one, zero) = (field.one(), field.zero());
        // Basis order: 1⊗e₀, 1⊗e₁, x⊗e₀, x⊗e₁.
        let left = alloc::vec![zero.clone(), one.clone(), zero.clone(), zero.clone()];
        let right = s.include_algebra(&[zero.clone(), one.clone()]);
        assert_eq!(
            right,
            alloc::vec![zero.clone(), zero.clone(), one.clone(), one.clone()]
        );
        let product = s.algebra().left_mult_of(&left).mul_vec(&right);
        assert_eq!(
            product,
            alloc::vec![zero.clone(), zero.clone(), one, zero]
        );
        assert!(!s.algebra().is_commutative());
    }

    #[test]
    fn smash_products_pass_the_algebra_axioms_on_the_corpus() {
        for ma in [
            mu2(fp(2)),
            mu2(fp(3)),
            mu2(q()),
            tensor_square(fp(2)),
            function_algebra_z2(fp(3)).unwrap(),
            local_trivial_hopf(fp(2)),
            unit_module_algebra(&sweedler4(q()).unwrap()),
        ] {
            let s = smash(&ma).unwrap();
            assert_eq!(s.dim(), ma.dim() * ma.hopf().dim());
            assert!(s.algebra().check().ok());
        }
    }

    #[test]
    fn translation_recovers_the_factor_actions_through_the_antipode() {
        for ma in [
            mu2(fp(2)),
            tensor_square(fp(2)),
            function_algebra_z2(fp(3)).unwrap(),
            unit_module_algebra(&sweedler4(q()).unwrap()),
        ] {
            let s = smash(&ma).unwrap();
            let reg = regular_module(ma.hopf());
            let m = free_on(&reg, &regular_module_object(&ma));
            let t = s.translate(&m).unwrap();
            let field = ma.algebra().field();
            for i in 0..ma.dim() {
                let mut e = alloc::vec![field.zero(); ma.dim()];
                e[i] = field.one();
                assert_eq!(t.module().action_of(&s.include_algebra(&e)), *m.nabla(i));
            }
            for j in 0..ma.hopf().dim() {
                let twisted = s.include_hopf(&ma.hopf().antipode().col(j));
                assert_eq!(t.module().action_of(&twisted), *m.hmodule().action(j));
            }
        }
    }

    #[test]
    fn translation_roundtrips_on_the_corpus() {
        let ts = tensor_square(fp(2));
        let rad = ts.c_module_radical().unwrap();
        let regular = regular_module_object(&ts);
        let (sub, _) = regular.submodule(rad.space()).unwrap();
        let (quot, _, _) = regular.quotient_by(rad.space()).unwrap();
        let mut corpus = alloc::vec![
            (ts.clone(), regular),
            (ts.clone(), sub),
            (ts, quot),
        ];
        for ma in [
            mu2(fp(2)),
            mu2(fp(3)),
            mu2(q()),
            function_algebra_z2(fp(3)).unwrap(),
            unit_module_algebra(&sweedler4(q()).unwrap()),
            local_trivial_hopf(fp(2)),
        ] {
            let reg = regular_module(ma.hopf());
            let free = free_on(&reg, &regular_module_object(&ma));
            corpus.push((ma.clone(), regular_module_object(&ma)));
            corpus.push((ma, free));
        }
        for (ma, m) in corpus {
            let s = smash(&ma).unwrap();
            let t = s.translate(&m).unwrap();
            assert_eq!(t.dim(), m.dim());
            let back = untranslate(&t).unwrap();
            assert_eq!(back.dim(), m.dim());
            for j in 0..ma.dim() {
                assert_eq!(back.nabla(j), m.nabla(j));
            }
            for i in 0..ma.hopf().dim() {
                assert_eq!(back.hmodule().action(i), m.hmodule().action(i));
            }
        }
    }

    #[test]
    fn translation_rejects_modules_over_a_different_module_algebra() {
        let s = smash(&mu2(fp(2))).unwrap();
        let other = regular_module_object(&tensor_square(fp(2)));
        assert!(matches!(
            s.translate(&other),
            Err(Error::AxiomViolation(_))
        ));
        assert!(matches!(
            s.induction_isomorphism(&other),
            Err(Error::AxiomViolation(_))
        ));
    }

    #[test]
    fn free_action_modules_are_c_projective() {
        for ma in [
            mu2(fp(2)),
            tensor_square(fp(2)),
            local_trivial_hopf(fp(2)),
            function_algebra_z2(fp(3)).unwrap(),
        ] {
            let reg = regular_module(ma.hopf());
            let a = regular_module_object(&ma);
            assert!(is_c_projective(&a).unwrap());
            assert!(is_c_projective(&free_on(&reg, &a)).unwrap());
            let two = tensor_module(&reg, &reg).unwrap();
            assert!(is_c_projective(&free_on(&two, &a)).unwrap());
        }
    }

    /// Exactness makes every module object projective. Over the two-point
    /// instance the smash product is the full 2x2 matrix algebra, so the
    /// free module H ⊳ A is a sum of two copies of the unique simple and
    /// its subobject lattice has exactly 0, three middle lines, and the
    /// whole: five stable subspaces, every one of them projective.
    #[test]
    fn every_stable_subspace_of_the_free_module_is_c_projective_when_exact() {
        let ma = mu2(fp(2));
        let reg = regular_module(ma.hopf());
        let free = free_on(&reg, &regular_module_object(&ma));
        let mut seen = 0usize;
        for w in enumerate_subspaces(fp(2), free.dim(), 1 << 16).unwrap() {
            if let Ok((sub, _)) = free.submodule(&w) {
                assert!(is_c_projective(&sub).unwrap());
                seen += 1;
            }
        }
        assert_eq!(seen, 5);
    }

    /// The tensor square in characteristic two is local as a plain algebra
    /// (its radical has codimension one), so projective modules are free
    /// and their dimensions are multiples of four. Both the equivariant
    /// radical and the quotient by it are two-dimensional, hence neither
    /// underlying module is projective.
    #[test]
    fn the_radical_quotient_of_the_tensor_square_is_not_c_projective() {
        let ts = tensor_square(fp(2));
        let rad = ts.c_module_radical().unwrap();
        assert_eq!(rad.dim(), 2);
        let regular = regular_module_object(&ts);
        let (quot, _, _) = regular.quotient_by(rad.space()).unwrap();
        assert!(!is_c_projective(&quot).unwrap());
        let (sub, _) = regular.submodule(rad.space()).unwrap();
        assert!(!is_c_projective(&sub).unwrap());
    }

    /// Projectivity inside the action category means projectivity of the
    /// free-action module H ⊳ M over the category, which the smash
    /// equivalence turns into ordinary projectivity over A#H. The shortcut
    /// implemented by is_c_projective forgets the action instead; the two
    /// routes must agree on every instance, including the non-projective
    /// ones.
    #[test]
    fn c_projectivity_agrees_with_projectivity_over_the_smash_product() {
        let ts = tensor_square(fp(2));
        let rad = ts.c_module_radical().unwrap();
        let regular = regular_module_object(&ts);
        let (sub, _) = regular.submodule(rad.space()).unwrap();
        let (quot, _, _) = regular.quotient_by(rad.space()).unwrap();
        let lt = local_trivial_hopf(fp(2));
        let field = fp(2);
        let line = Subspace::from_spanning(
            field,
            2,
            &[alloc::vec![field.zero(), field.one()]],
        );
        let (lt_top, _, _) = regular_module_object(&lt).quotient_by(&line).unwrap();
        let fz = function_algebra_z2(fp(3)).unwrap();
        let corpus = [
            (mu2(fp(2)), regular_module_object(&mu2(fp(2)))),
            (mu2(q()), regular_module_object(&mu2(q()))),
            (ts.clone(), regular),
            (ts.clone(), sub),
            (ts, quot),
            (lt, lt_top),
            (fz.clone(), regular_module_object(&fz)),
        ];
        for (ma, m) in corpus {
            let s = smash(&ma).unwrap();
            let reg = regular_module(ma.hopf());
            let translated = s.translate(&free_on(&reg, &m)).unwrap();
            assert_eq!(
                is_c_projective(&m).unwrap(),
                translated.module().is_projective().unwrap()
            );
        }
    }

    #[test]
    fn the_induction_map_is_an_isomorphism_on_the_corpus() {
        let ts = tensor_square(fp(2));
        let rad = ts.c_module_radical().unwrap();
        let regular = regular_module_object(&ts);
        let (sub, _) = regular.submodule(rad.space()).unwrap();
        let (quot, _, _) = regular.quotient_by(rad.space()).unwrap();
        let sw = unit_module_algebra(&sweedler4(q()).unwrap());
        let corpus = [
            (mu2(fp(2)), regular_module_object(&mu2(fp(2)))),
            (mu2(q()), regular_module_object(&mu2(q()))),
            (ts.clone(), regular),
            (ts.clone(), sub),
            (ts, quot),
            (sw.clone(), regular_module_object(&sw)),
        ];
        for (ma, m) in corpus {
            let s = smash(&ma).unwrap();
            assert!(s.induction_isomorphism(&m).unwrap());
            let reg = regular_module(ma.hopf());
            assert!(s.induction_isomorphism(&free_on(&reg, &m)).unwrap());
        }
    }

    #[test]
    fn simple_instances_report_every_corpus_module_projective() {
        for ma in [mu2(fp(2)), function_algebra_z2(fp(3)).unwrap()] {
            let reg = regular_module(ma.hopf());
            let a = regular_module_object(&ma);
            let corpus = alloc::vec![
                a.clone(),
                free_on(&reg, &a),
                free_on(&tensor_module(&reg, &reg).unwrap(), &a),
            ];
            let report = skryabin_check(&ma, &corpus, 1 << 16).unwrap();
            assert_eq!(report.simple, Some(true));
            assert!(report.all_projective());
            assert!(report.counterexamples().is_empty());
        }
    }

    #[test]
    fn non_simple_and_undecidable_instances_are_skipped() {
        let ts = tensor_square(fp(2));
        let report = skryabin_check(&ts, &[regular_module_object(&ts)], 1 << 16).unwrap();
        assert_eq!(report.simple, Some(false));
        assert!(report.skipped());
        assert!(report.projective.is_empty());

        let ma = mu2(q());
        let report = skryabin_check(&ma, &[regular_module_object(&ma)], 1 << 16).unwrap();
        assert_eq!(report.simple, None);
        assert!(report.skipped());
        assert!(!report.all_projective());
    }

    #[test]
    fn the_projectivity_sweep_validates_its_corpus() {
        let ts = tensor_square(fp(2));
        let foreign = regular_module_object(&mu2(fp(2)));
        assert!(matches!(
            skryabin_check(&ts, &[foreign], 1 << 16),
            Err(Error::AxiomViolation(_))
        ));
    }
}

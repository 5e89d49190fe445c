//! The law suites behind `verify`: one suite per library module, each
//! checking that module's documented invariants on the shipped corpus.
//! Exhaustive scans run over F_2, where subspace lattices are small
//! enough to enumerate; randomized spot checks over F_3 and Q draw from
//! a ChaCha stream seeded by `--seed`, so runs are reproducible. Suites
//! are independent and run concurrently; verdicts are merged in suite
//! name order.

use std::time::Instant;

use exactalg_core::algebra::{Algebra, RightModule};
use exactalg_core::hopf::{
    hom_module_space, left_dual, regular_module, right_dual, tensor_module, trivial_module,
    DualData,
};
use exactalg_core::kleisli::{KleisliContext, StableIdeal};
use exactalg_core::modalg::{
    act_module, inflate_module_object, mu2_module_algebra, regular_module_object, IdealObject,
    ModuleAlgebra,
};
use exactalg_core::smash::{is_c_projective, skryabin_check, smash};
use exactalg_core::subspace::{
    enumerate_subspaces, image, kernel, largest_invariant_subspace, Subspace,
};
use exactalg_core::{FieldSpec, Matrix, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::doc::{parse_document, Body, Document, ModuleAlgebraData, ReportData, Verdict};
use crate::examples;
use crate::{usage, CliResult};

pub const SUITES: [&str; 7] = [
    "kernel", "assoc", "hopf", "modalg", "kleisli", "smash", "cli",
];

pub fn resolve(name: &str) -> CliResult<Vec<&'static str>> {
    if name == "all" {
        return Ok(SUITES.to_vec());
    }
    SUITES
        .iter()
        .find(|s| **s == name)
        .map(|s| vec![*s])
        .ok_or_else(|| {
            usage(format!(
                "unknown suite \"{name}\"; choose one of all, {}",
                SUITES.join(", ")
            ))
        })
}

pub fn run(names: &[&'static str], seed: u64, bound: u128) -> Vec<(String, Vec<Verdict>)> {
    let mut results: Vec<(String, Vec<Verdict>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|name| scope.spawn(move || (name.to_string(), dispatch(name, seed, bound))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite threads do not panic"))
            .collect()
    });
    results.sort_by(|a, b| a.0.cmp(&b.0));
    results
}

fn dispatch(name: &str, seed: u64, bound: u128) -> Vec<Verdict> {
    let mut suite = Suite::new();
    match name {
        "kernel" => kernel_suite(&mut suite, seed),
        "assoc" => assoc_suite(&mut suite, bound),
        "hopf" => hopf_suite(&mut suite),
        "modalg" => modalg_suite(&mut suite, seed, bound),
        "kleisli" => kleisli_suite(&mut suite, bound),
        "smash" => smash_suite(&mut suite, bound),
        "cli" => cli_suite(&mut suite),
        _ => unreachable!("resolve screens suite names"),
    }
    suite.verdicts
}

/// Collects verdicts, timing each law as the wall time since the
/// previous one.
struct Suite {
    verdicts: Vec<Verdict>,
    clock: Instant,
    mark: u64,
}

impl Suite {
    fn new() -> Suite {
        Suite {
            verdicts: Vec::new(),
            clock: Instant::now(),
            mark: 0,
        }
    }

    /// Record one law on one instance; `witness` is consulted on failure.
    fn law(&mut self, law: &str, instance: &str, pass: bool, witness: impl FnOnce() -> String) {
        let now = self.clock.elapsed().as_millis() as u64;
        let millis = now - self.mark;
        self.mark = now;
        self.verdicts.push(if pass {
            Verdict::pass(law, instance, millis)
        } else {
            Verdict::fail(law, instance, witness(), millis)
        });
    }
}

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("small prime")
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_vector(rng: &mut ChaCha8Rng, field: FieldSpec, n: usize) -> Vec<Scalar> {
    (0..n)
        .map(|_| Scalar::from_i64(field, rng.gen_range(-4..=4)))
        .collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let data = random_vector(rng, field, rows * cols);
    Matrix::from_vec(field, rows, cols, data)
}

fn random_subspace(rng: &mut ChaCha8Rng, field: FieldSpec, ambient: usize, k: usize) -> Subspace {
    let vectors: Vec<Vec<Scalar>> = (0..k).map(|_| random_vector(rng, field, ambient)).collect();
    Subspace::from_spanning(field, ambient, &vectors)
}

/// The image of a subspace under a linear map.
fn map_span(m: &Matrix, s: &Subspace) -> Subspace {
    let vectors: Vec<Vec<Scalar>> = s.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
    Subspace::from_spanning(m.field(), m.rows(), &vectors)
}

/// span{ x·y : x ∈ u, y ∈ v } inside the algebra.
fn product_span(a: &Algebra, u: &Subspace, v: &Subspace) -> Subspace {
    let mut acc = Subspace::zero(a.field(), a.dim());
    for x in u.basis_vectors() {
        for y in v.basis_vectors() {
            acc = acc.sum(&Subspace::from_spanning(
                a.field(),
                a.dim(),
                &[a.multiply(&x, &y)],
            ));
        }
    }
    acc
}

fn block_diag(x: &RightModule, y: &RightModule) -> RightModule {
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

// ---------------------------------------------------------------------
// kernel: exact linear algebra
// ---------------------------------------------------------------------

fn kernel_suite(suite: &mut Suite, seed: u64) {
    let mut rng = rng_for(seed, 1);
    let fields = [fp(2), fp(3), FieldSpec::rationals()];

    // Exhaustive rank–nullity over F_2 on 2×3 shapes, random elsewhere.
    let mut bad = None;
    for code in 0..64u32 {
        let m = Matrix::from_fn(fp(2), 2, 3, |r, c| {
            Scalar::from_i64(fp(2), ((code >> (r * 3 + c)) & 1) as i64)
        });
        if kernel(&m).dim() + image(&m).dim() != m.cols() {
            bad = Some(code);
            break;
        }
    }
    suite.law(
        "rank plus nullity accounts for every column",
        "F_2, all 2×3 matrices",
        bad.is_none(),
        || format!("matrix code {}", bad.unwrap()),
    );
    for field in fields {
        let mut bad = None;
        for _ in 0..24 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = random_matrix(&mut rng, field, rows, cols);
            if kernel(&m).dim() + image(&m).dim() != m.cols() {
                bad = Some(m);
                break;
            }
        }
        suite.law(
            "rank plus nullity accounts for every column",
            &format!("{field}, random shapes"),
            bad.is_none(),
            || format!("{:?}", bad),
        );
    }

    // Modular law on random triples with u ⊆ w.
    for field in fields {
        let mut witness = None;
        for _ in 0..16 {
            let ambient = rng.gen_range(2..=5);
            let w_vectors: Vec<Vec<Scalar>> = (0..rng.gen_range(1..=4))
                .map(|_| random_vector(&mut rng, field, ambient))
                .collect();
            let take = rng.gen_range(0..=w_vectors.len());
            let w = Subspace::from_spanning(field, ambient, &w_vectors);
            let u = Subspace::from_spanning(field, ambient, &w_vectors[..take]);
            let v_count = rng.gen_range(0..=3);
            let v = random_subspace(&mut rng, field, ambient, v_count);
            let lhs = u.sum(&v.intersect(&w));
            let rhs = u.sum(&v).intersect(&w);
            if lhs != rhs {
                witness = Some(format!(
                    "ambient {ambient}: dims u={} v={} w={}",
                    u.dim(),
                    v.dim(),
                    w.dim()
                ));
                break;
            }
        }
        suite.law(
            "the subspace lattice is modular",
            &format!("{field}, random triples"),
            witness.is_none(),
            || witness.unwrap(),
        );
    }

    // Largest invariant subspace: invariance, containment, maximality
    // against the full F_2 lattice.
    let tensor = examples::tensor_square(fp(2)).expect("registry instance");
    let maps: Vec<Matrix> = (0..2).map(|i| tensor.action(i).clone()).collect();
    let rad = tensor.algebra().radical().expect("radical over F_2");
    let mut cases = vec![("tensor square action on its radical", maps, rad.space().clone())];
    let random_maps: Vec<Matrix> = (0..2).map(|_| random_matrix(&mut rng, fp(2), 4, 4)).collect();
    let random_w = random_subspace(&mut rng, fp(2), 4, 3);
    cases.push(("random maps on a random subspace", random_maps, random_w));
    for (name, maps, w) in cases {
        let u = largest_invariant_subspace(&maps, &w);
        let contained = w.contains(&u);
        let invariant = maps.iter().all(|m| u.contains(&map_span(m, &u)));
        let mut maximal = true;
        for candidate in enumerate_subspaces(fp(2), 4, 1 << 12).expect("small lattice") {
            if w.contains(&candidate)
                && maps.iter().all(|m| candidate.contains(&map_span(m, &candidate)))
                && !u.contains(&candidate)
            {
                maximal = false;
                break;
            }
        }
        suite.law(
            "the largest invariant subspace is invariant, contained, and maximal",
            name,
            contained && invariant && maximal,
            || format!("contained={contained} invariant={invariant} maximal={maximal}"),
        );
    }

    // Echelon canonicity: reducing a reduced basis changes nothing.
    for field in fields {
        let mut witness = None;
        for _ in 0..16 {
            let ambient = rng.gen_range(1..=5);
            let count = rng.gen_range(0..=4);
            let s = random_subspace(&mut rng, field, ambient, count);
            let again = Subspace::from_spanning(field, ambient, &s.basis_vectors());
            if s != again {
                witness = Some(format!("ambient {ambient}, dim {}", s.dim()));
                break;
            }
        }
        suite.law(
            "echelon bases are canonical",
            &format!("{field}, random spans"),
            witness.is_none(),
            || witness.unwrap(),
        );
    }
}

// ---------------------------------------------------------------------
// assoc: radicals, ideals, and projectivity of plain algebras
// ---------------------------------------------------------------------

fn algebra_corpus() -> Vec<(String, Algebra)> {
    let mut out: Vec<(String, Algebra)> = examples::module_algebra_corpus()
        .into_iter()
        .map(|(name, ma)| (name, ma.algebra().clone()))
        .collect();
    for (name, h) in examples::hopf_corpus() {
        if out.iter().all(|(n, _)| *n != name) {
            out.push((name, h.algebra().clone()));
        }
    }
    out
}

fn assoc_suite(suite: &mut Suite, bound: u128) {
    let corpus = algebra_corpus();

    for (name, a) in &corpus {
        let rad = match a.radical() {
            Ok(r) => r,
            Err(e) => {
                suite.law("the radical is computable", name, false, || e.to_string());
                continue;
            }
        };
        let ideal = a.ideal_from(rad.space().clone()).is_ok();
        let nilpotent = rad.space().is_zero() || a.nilpotency_index(&rad).is_some();
        let quotient = a.quotient(&rad);
        let semisimple = quotient
            .algebra
            .radical()
            .map(|r| r.space().is_zero())
            .unwrap_or(false);
        suite.law(
            "the radical is a nilpotent ideal with semisimple quotient",
            name,
            ideal && nilpotent && semisimple,
            || format!("ideal={ideal} nilpotent={nilpotent} semisimple quotient={semisimple}"),
        );
        if a.field().characteristic() == 2 && a.dim() <= 4 {
            let slow = a
                .brute_force_max_nilpotent_ideal(bound)
                .expect("enumerable at dimension ≤ 4");
            suite.law(
                "the radical matches the exhaustive maximal nilpotent ideal",
                name,
                rad.space() == &slow,
                || format!("fast dim {}, exhaustive dim {}", rad.space().dim(), slow.dim()),
            );
        }
    }

    // Ideal product laws on a non-semisimple instance.
    let local = examples::tensor_square(fp(2))
        .expect("registry instance")
        .algebra()
        .clone();
    let rad = local.radical().expect("radical over F_2");
    let whole = local
        .ideal_from(Subspace::full(fp(2), local.dim()))
        .expect("the whole algebra is an ideal");
    let closure = local.ideal_closure(&Subspace::from_spanning(
        fp(2),
        local.dim(),
        &[vec![
            Scalar::from_i64(fp(2), 0),
            Scalar::from_i64(fp(2), 1),
            Scalar::from_i64(fp(2), 0),
            Scalar::from_i64(fp(2), 0),
        ]],
    ));
    let ideals = [&rad, &whole, &closure];
    let mut associative = true;
    let mut intersecting = true;
    for i in ideals {
        for j in ideals {
            let ij = local.ideal_product(i, j);
            if !(i.space().contains(ij.space()) && j.space().contains(ij.space())) {
                intersecting = false;
            }
            for k in ideals {
                let left = local.ideal_product(&ij, k);
                let right = local.ideal_product(i, &local.ideal_product(j, k));
                if left.space() != right.space() {
                    associative = false;
                }
            }
        }
    }
    let monotone = {
        let small = local.ideal_product(&rad, &rad);
        let grown = local.ideal_product(&whole, &rad);
        grown.space().contains(local.ideal_product(&rad, &rad).space())
            && local.ideal_product(&whole, &whole).space().contains(small.space())
    };
    suite.law(
        "ideal products are associative, monotone, and inside the intersection",
        "tensor square over F_2",
        associative && monotone && intersecting,
        || format!("associative={associative} monotone={monotone} intersection={intersecting}"),
    );

    // (M·I)·J = M·(I·J) on modules over the same instance.
    let regular = RightModule::regular(&local);
    let (quot, _, _) = regular
        .quotient_by(&local.ideal_product(&rad, &rad).space().clone())
        .expect("ideals are action-stable");
    for (mname, m) in [("regular", &regular), ("regular/rad²", &quot)] {
        let mut ok = true;
        let mut note = String::new();
        for i in ideals {
            for j in ideals {
                let mi = m.times_subspace(i.space());
                let (sub, embed) = m.submodule(&mi).expect("M·I is action-stable");
                let left = map_span(&embed, &sub.times_subspace(j.space()));
                let right = m.times_subspace(local.ideal_product(i, j).space());
                if left != right {
                    ok = false;
                    note = format!("dims {} vs {}", left.dim(), right.dim());
                }
            }
        }
        suite.law(
            "module times ideal is associative",
            &format!("tensor square over F_2, {mname}"),
            ok,
            || note,
        );
    }

    // Lifting ideals along the quotient by rad²: submultiplicative, and
    // nilpotent when kernel and ideal both are.
    let rad2 = local.ideal_product(&rad, &rad);
    let q = local.quotient(&rad2);
    let jq = q.algebra.radical().expect("radical over F_2");
    let lifted = local.lift_ideal(&q, &jq).expect("radical lifts");
    let product_upstairs = local.ideal_product(&lifted, &lifted);
    let jq2 = q.algebra.ideal_product(&jq, &jq);
    let lifted_product = local.lift_ideal(&q, &jq2).expect("products lift");
    suite.law(
        "lifting is submultiplicative",
        "tensor square over F_2 modulo rad²",
        lifted_product.space().contains(product_upstairs.space()),
        || {
            format!(
                "lift(J)² has dim {}, lift(J²) has dim {}",
                product_upstairs.space().dim(),
                lifted_product.space().dim()
            )
        },
    );
    suite.law(
        "lifts of nilpotent ideals along nilpotent kernels are nilpotent",
        "tensor square over F_2 modulo rad²",
        local.nilpotency_index(&lifted).is_some(),
        || String::from("the lifted ideal has no vanishing power"),
    );

    // Projectivity: free modules of small rank, and direct sums.
    for (name, a) in corpus.iter().take(4) {
        let mut ok = true;
        for rank in 1..=3 {
            match RightModule::free(a, rank).is_projective() {
                Ok(true) => {}
                _ => ok = false,
            }
        }
        suite.law(
            "free modules of rank at most three are projective",
            name,
            ok,
            || String::from("a free module reported non-projective"),
        );
    }
    let top = regular
        .quotient_by(rad.space())
        .expect("the radical is action-stable")
        .0;
    let cases = [
        ("free ⊕ free", block_diag(&regular, &regular), true),
        ("free ⊕ top", block_diag(&regular, &top), false),
        ("top ⊕ top", block_diag(&top, &top), false),
    ];
    for (name, m, expected) in cases {
        let got = m.is_projective().expect("solvable at this scale");
        suite.law(
            "projectivity respects direct sums",
            &format!("tensor square over F_2, {name}"),
            got == expected,
            || format!("expected {expected}, got {got}"),
        );
    }
}

// ---------------------------------------------------------------------
// hopf: Hopf axioms, duals, and the module category
// ---------------------------------------------------------------------

fn snakes_hold(data: &DualData) -> bool {
    let field = data.module.hopf().field();
    let id = Matrix::identity(field, data.module.dim());
    id.kron(&data.ev).mul(&data.coev.kron(&id)) == id
        && data.ev.kron(&id).mul(&id.kron(&data.coev)) == id
}

fn hopf_suite(suite: &mut Suite) {
    let corpus = examples::hopf_corpus();

    for (name, h) in &corpus {
        let report = h.check();
        suite.law("every Hopf axiom holds", name, report.ok(), || {
            format!("{} violations, first: {}", report.violations.len(), report.violations[0])
        });

        let reg = regular_module(h);
        let triv = trivial_module(h);

        // Strict associativity of the tensor product.
        let pair = tensor_module(&reg, &triv).expect("same Hopf algebra");
        let left = tensor_module(&pair, &reg).expect("same Hopf algebra");
        let right = tensor_module(&reg, &tensor_module(&triv, &reg).unwrap())
            .expect("same Hopf algebra");
        suite.law(
            "tensoring modules is strictly associative",
            name,
            left == right,
            || String::from("the two bracketings differ"),
        );

        for (dual_name, data) in [("left dual", left_dual(&reg)), ("right dual", right_dual(&reg))]
        {
            suite.law(
                "the snake identities hold exactly",
                &format!("{name}, {dual_name} of the regular module"),
                snakes_hold(&data),
                || String::from("a snake composite is not the identity"),
            );
        }

        for (mname, m) in [("regular", &reg), ("trivial", &triv)] {
            let homs = hom_module_space(&reg, m).expect("same Hopf algebra");
            suite.law(
                "maps out of the regular module are the module itself",
                &format!("{name}, into the {mname} module"),
                homs.len() == m.dim(),
                || format!("dimension {} instead of {}", homs.len(), m.dim()),
            );
        }

        // The counit is a surjective morphism onto the trivial module.
        let field = h.field();
        let counit_row = Matrix::from_fn(field, 1, h.dim(), |_, c| h.counit()[c].clone());
        let linear = (0..h.dim())
            .all(|i| counit_row.mul(reg.action(i)) == triv.action(i).mul(&counit_row));
        suite.law(
            "the counit maps the regular module onto the trivial module",
            name,
            linear && counit_row.rank() == 1,
            || format!("H-linear={linear} rank={}", counit_row.rank()),
        );
    }

    let sweedler = corpus
        .iter()
        .find(|(name, _)| name == "sweedler4_Q")
        .map(|(_, h)| h)
        .expect("registry instance");
    let s2 = sweedler.antipode().mul(sweedler.antipode());
    suite.law(
        "the four-dimensional instance has an antipode of order four",
        "sweedler4_Q",
        s2 != Matrix::identity(sweedler.field(), 4) && !sweedler.is_cocommutative(),
        || String::from("S² = id or the coproduct is symmetric"),
    );
}

// ---------------------------------------------------------------------
// modalg: ideal objects, the equivariant radical, exactness
// ---------------------------------------------------------------------

/// All ideal objects of an instance, when the subspace lattice is
/// enumerable within the bound.
fn all_ideal_objects(ma: &ModuleAlgebra, bound: u128) -> Option<Vec<IdealObject>> {
    let spaces = enumerate_subspaces(ma.algebra().field(), ma.dim(), bound).ok()?;
    let mut out = Vec::new();
    for s in spaces {
        if ma.is_ideal_object(&s) {
            out.push(ma.ideal_object_from(s).expect("just verified"));
        }
    }
    Some(out)
}

fn nilpotent_ideal(ma: &ModuleAlgebra, i: &IdealObject) -> bool {
    let a = ma.algebra();
    let ideal = a
        .ideal_from(i.space().clone())
        .expect("ideal objects are ideals");
    a.nilpotency_index(&ideal).is_some()
}

fn modalg_suite(suite: &mut Suite, seed: u64, bound: u128) {
    let mut rng = rng_for(seed, 4);
    let corpus = examples::module_algebra_corpus();
    let rational = FieldSpec::rationals();
    let extra = [
        (
            String::from("mu2_Q"),
            mu2_module_algebra(rational).expect("builder"),
        ),
        (
            String::from("mu2_tensor_Q"),
            examples::tensor_square(rational).expect("builder"),
        ),
    ];

    // Double stability agrees with the ideal-object predicate:
    // exhaustively over F_2, on random subspaces elsewhere.
    for (name, ma) in corpus.iter().chain(&extra) {
        let field = ma.algebra().field();
        if field.characteristic() == 2 {
            let mut mismatch = None;
            for s in enumerate_subspaces(field, ma.dim(), bound).expect("F_2 at desk scale") {
                if ma.double_stability(&s) != ma.is_ideal_object(&s) {
                    mismatch = Some(format!("subspace of dimension {}", s.dim()));
                    break;
                }
            }
            suite.law(
                "double stability picks out exactly the ideal objects",
                &format!("{name}, exhaustive"),
                mismatch.is_none(),
                || mismatch.unwrap(),
            );
        } else {
            let mut mismatch = None;
            for _ in 0..20 {
                let count = rng.gen_range(0..=ma.dim());
                let s = random_subspace(&mut rng, field, ma.dim(), count);
                if ma.double_stability(&s) != ma.is_ideal_object(&s) {
                    mismatch = Some(format!("subspace of dimension {}", s.dim()));
                    break;
                }
            }
            let rad = ma.c_module_radical().expect("computable");
            if ma.double_stability(rad.space()) != ma.is_ideal_object(rad.space()) {
                mismatch = Some(String::from("the equivariant radical itself"));
            }
            suite.law(
                "double stability picks out exactly the ideal objects",
                &format!("{name}, sampled"),
                mismatch.is_none(),
                || mismatch.unwrap(),
            );
        }
    }

    for (name, ma) in corpus.iter().chain(&extra) {
        let rad = ma.c_module_radical().expect("computable");

        if ma.algebra().field().characteristic() == 2 {
            let slow = ma.brute_force_c_radical(bound).expect("F_2 at desk scale");
            suite.law(
                "the equivariant radical matches its exhaustive oracle",
                name,
                rad.space() == slow.space(),
                || format!("fast dim {}, exhaustive dim {}", rad.dim(), slow.dim()),
            );
        }

        let (quotient, _) = ma.semisimple_quotient().expect("quotient exists");
        let quotient_rad = quotient.c_module_radical().expect("computable");
        suite.law(
            "the semisimple quotient has vanishing equivariant radical",
            name,
            quotient_rad.space().is_zero(),
            || format!("dimension {}", quotient_rad.dim()),
        );

        let nilpotent = rad.space().is_zero() || nilpotent_ideal(ma, &rad);
        suite.law(
            "the equivariant radical is nilpotent",
            name,
            nilpotent,
            || String::from("no power of the radical vanishes"),
        );

        if let Some(ideals) = all_ideal_objects(ma, bound) {
            let contains_all = ideals
                .iter()
                .filter(|i| nilpotent_ideal(ma, i))
                .all(|i| rad.space().contains(i.space()));
            suite.law(
                "the equivariant radical contains every nilpotent ideal object",
                name,
                contains_all,
                || String::from("a nilpotent ideal object escapes the radical"),
            );

            // Exactness has three equivalent faces.
            let by_radical = ma.is_exact().expect("computable");
            let by_scan = !ideals
                .iter()
                .any(|i| !i.space().is_zero() && nilpotent_ideal(ma, i));
            let by_factors = match ma.decompose_simple_factors() {
                Ok(factors) => factors.iter().all(|f| {
                    all_ideal_objects(&f.factor, bound)
                        .map(|list| list.len() == 2)
                        .unwrap_or(false)
                }),
                Err(_) => false,
            };
            suite.law(
                "exactness, the nilpotent-ideal scan, and the factorization agree",
                name,
                by_radical == by_scan && by_scan == by_factors,
                || format!("radical says {by_radical}, scan says {by_scan}, factors say {by_factors}"),
            );

            // (M·I)·J = M·(I·J) for module objects and ideal objects.
            let regular = regular_module_object(ma);
            let mut ok = true;
            for i in &ideals {
                for j in &ideals {
                    let mi = regular.times_ideal_object(i);
                    let (sub, embed) = regular.submodule(&mi).expect("M·I is stable");
                    let left = map_span(&embed, &sub.times_ideal_object(j));
                    let right = regular.times_ideal_object(&ma.ideal_object_product(i, j));
                    if left != right {
                        ok = false;
                    }
                }
            }
            suite.law(
                "module times ideal object is associative",
                name,
                ok,
                || String::from("the two iterated products differ"),
            );
        }

        // Modules restricted along the quotient are killed by the ideal.
        if !rad.space().is_zero() {
            let (quotient, qdata) = ma.quotient(&rad).expect("quotient by the radical");
            let restricted =
                inflate_module_object(&regular_module_object(&quotient), ma, &qdata);
            suite.law(
                "modules pulled back along a quotient are killed by its kernel",
                name,
                restricted.times_ideal_object(&rad).is_zero(),
                || String::from("the pulled-back module sees the ideal"),
            );
        }
    }

    // Ideal objects of a product decompose along the central idempotents,
    // and products act componentwise.
    let product_instance = corpus
        .iter()
        .find(|(name, _)| name == "mu2_tensor_char3")
        .expect("registry instance");
    let ma = &product_instance.1;
    let factors = ma.decompose_simple_factors().expect("exact instance");
    let ideals = all_ideal_objects(ma, bound).expect("F_3 at dimension 4");
    let a = ma.algebra();
    let piece = |i: &IdealObject, k: usize| -> Subspace {
        map_span(&a.right_mult_of(&factors[k].idempotent), i.space())
    };
    let mut decomposes = true;
    let mut componentwise = true;
    for i in &ideals {
        let mut total = Subspace::zero(a.field(), a.dim());
        for k in 0..factors.len() {
            total = total.sum(&piece(i, k));
        }
        if &total != i.space() {
            decomposes = false;
        }
        for j in &ideals {
            let product = ma.ideal_object_product(i, j);
            for k in 0..factors.len() {
                if piece(&product, k) != product_span(a, &piece(i, k), &piece(j, k)) {
                    componentwise = false;
                }
            }
        }
    }
    suite.law(
        "ideal objects of a product split along the central idempotents",
        "mu2_tensor_char3",
        decomposes,
        || String::from("an ideal object is not the sum of its pieces"),
    );
    suite.law(
        "products of ideal objects act componentwise on the factors",
        "mu2_tensor_char3",
        componentwise,
        || String::from("a product piece differs from the piecewise product"),
    );
}

// ---------------------------------------------------------------------
// kleisli: the probe category and the ideal correspondence
// ---------------------------------------------------------------------

/// Smallest m with s^m = 0, matching the algebra-side convention; None
/// when no power up to the cap vanishes.
fn stable_nilpotency_index(ctx: &KleisliContext, s: &StableIdeal, cap: usize) -> Option<usize> {
    let mut power = s.clone();
    for m in 1..=cap {
        if power.is_zero() {
            return Some(m);
        }
        power = ctx.stable_ideal_product(&power, s);
    }
    None
}

fn kleisli_suite(suite: &mut Suite, bound: u128) {
    let mut corpus = examples::f2_corpus();
    corpus.push((
        String::from("mu2_char3"),
        mu2_module_algebra(fp(3)).expect("builder"),
    ));

    for (name, ma) in &corpus {
        let ctx = match KleisliContext::new(ma, 2) {
            Ok(c) => c,
            Err(e) => {
                suite.law("the probe category closes", name, false, || e.to_string());
                continue;
            }
        };

        // Morphism bases satisfy both linearity laws and compose closed.
        let count = ctx.probes().len();
        let mut linear = true;
        let mut closed = true;
        for p in 0..count {
            for q in 0..count {
                let source = tensor_module(&ctx.probes()[p], &ma.hmodule()).expect("same H");
                let target = tensor_module(&ctx.probes()[q], &ma.hmodule()).expect("same H");
                let id_p = Matrix::identity(ma.algebra().field(), ctx.probes()[p].dim());
                let id_q = Matrix::identity(ma.algebra().field(), ctx.probes()[q].dim());
                for f in ctx.hom_space(p, q).expect("hom basis") {
                    for i in 0..ma.hopf().dim() {
                        if f.matrix.mul(source.action(i)) != target.action(i).mul(&f.matrix) {
                            linear = false;
                        }
                    }
                    for a in 0..ma.dim() {
                        let right = ma.algebra().right_mult(a);
                        if f.matrix.mul(&id_p.kron(right)) != id_q.kron(right).mul(&f.matrix) {
                            linear = false;
                        }
                    }
                }
            }
        }
        for r in 0..count {
            let homs_qr: Vec<Vec<Scalar>> = ctx
                .hom_space(0, r)
                .expect("hom basis")
                .iter()
                .map(|h| h.matrix.data().to_vec())
                .collect();
            let ambient = homs_qr[0].len();
            let span =
                Subspace::from_spanning(ma.algebra().field(), ambient, &homs_qr);
            for f in ctx.hom_space(0, 1).expect("hom basis").iter().take(3) {
                for g in ctx.hom_space(1, r).expect("hom basis").iter().take(3) {
                    let composite = g.matrix.mul(&f.matrix);
                    if !span.contains_vector(composite.data()) {
                        closed = false;
                    }
                }
            }
        }
        suite.law(
            "morphisms are bilinear and closed under composition",
            name,
            linear && closed,
            || format!("linear={linear} composition closed={closed}"),
        );

        let Some(ideals) = all_ideal_objects(ma, bound) else {
            continue;
        };
        let stables: Vec<StableIdeal> = ideals
            .iter()
            .map(|i| ctx.ideal_to_stable(i).expect("transportable"))
            .collect();

        let mut roundtrip = true;
        for (i, s) in ideals.iter().zip(&stables) {
            if !ctx.roundtrip_rs(s).expect("computable") {
                roundtrip = false;
            }
            let mixed = ctx.s_map(s).expect("computable");
            if mixed.space() != i.space() || !ctx.roundtrip_sr(&mixed).expect("computable") {
                roundtrip = false;
            }
        }
        suite.law(
            "the two directions of the correspondence invert each other",
            name,
            roundtrip,
            || String::from("a roundtrip moved an ideal"),
        );

        let mut lattice = true;
        for (i, si) in ideals.iter().zip(&stables) {
            for (j, sj) in ideals.iter().zip(&stables) {
                if j.space().contains(i.space()) && !sj.contains(si) {
                    lattice = false;
                }
                let meet = ma
                    .ideal_object_from(i.space().intersect(j.space()))
                    .expect("intersections of ideal objects are ideal objects");
                let join = ma
                    .ideal_object_from(i.space().sum(j.space()))
                    .expect("sums of ideal objects are ideal objects");
                if ctx.ideal_to_stable(&meet).expect("transportable") != si.intersect(sj) {
                    lattice = false;
                }
                if ctx.ideal_to_stable(&join).expect("transportable") != si.sum(sj) {
                    lattice = false;
                }
            }
        }
        suite.law(
            "the correspondence is an isomorphism of ideal lattices",
            name,
            lattice,
            || String::from("order, meet, or join is not preserved"),
        );

        let mut products = true;
        let mut nilpotency = true;
        for (i, si) in ideals.iter().zip(&stables) {
            for (j, sj) in ideals.iter().zip(&stables) {
                let transported = ctx
                    .ideal_to_stable(&ma.ideal_object_product(i, j))
                    .expect("transportable");
                if transported != ctx.stable_ideal_product(si, sj) {
                    products = false;
                }
            }
            let cap = ma.dim() + 1;
            let algebra_index = ma
                .algebra()
                .nilpotency_index(&ma.algebra().ideal_from(i.space().clone()).unwrap());
            if algebra_index != stable_nilpotency_index(&ctx, si, cap) {
                nilpotency = false;
            }
        }
        suite.law(
            "products transport through the correspondence",
            name,
            products,
            || String::from("a transported product differs"),
        );
        suite.law(
            "nilpotency indices agree across the correspondence",
            name,
            nilpotency,
            || String::from("an index differs between the two sides"),
        );

        let rad = ma.c_module_radical().expect("computable");
        let via_kleisli = ctx.c_module_radical_kleisli().expect("computable");
        suite.law(
            "both radical computations return the same subspace",
            name,
            rad.space() == via_kleisli.space(),
            || {
                format!(
                    "stable-core dim {}, probe-category dim {}",
                    rad.dim(),
                    via_kleisli.dim()
                )
            },
        );

        let category_radical = ctx.category_radical().expect("computable");
        let stable_rad = ctx.ideal_to_stable(&rad).expect("transportable");
        suite.law(
            "the categorical radical contains the equivariant radical",
            name,
            category_radical.contains(&stable_rad),
            || String::from("containment fails on a component"),
        );
    }
}

// ---------------------------------------------------------------------
// smash: the smash product and projectivity
// ---------------------------------------------------------------------

fn smash_suite(suite: &mut Suite, bound: u128) {
    let corpus = examples::module_algebra_corpus();

    for (name, ma) in &corpus {
        let s = match smash(ma) {
            Ok(s) => s,
            Err(e) => {
                suite.law("the smash product exists", name, false, || e.to_string());
                continue;
            }
        };
        suite.law(
            "the smash product is an algebra of the product dimension",
            name,
            s.algebra().check().ok() && s.dim() == ma.dim() * ma.hopf().dim(),
            || String::from("axioms fail or the dimension is off"),
        );

        let regular = regular_module_object(ma);
        let free = act_module(&regular_module(ma.hopf()), &regular).expect("same H");
        let mut modules = vec![("regular", regular.clone()), ("H ⊳ regular", free)];
        let rad = ma.c_module_radical().expect("computable");
        if !rad.space().is_zero() {
            // Submodule and quotient along the radical: the standard
            // source of non-projective module objects.
            let (sub, _) = regular.submodule(rad.space()).expect("ideals are stable");
            let (quot, _, _) = regular.quotient_by(rad.space()).expect("ideals are stable");
            modules.push(("the radical", sub));
            modules.push(("regular modulo the radical", quot));
        }

        let mut inverse = true;
        for (_, m) in &modules {
            let back = exactalg_core::smash::untranslate(&s.translate(m).expect("same instance"))
                .expect("translations invert");
            if back.dim() != m.dim()
                || (0..ma.dim()).any(|j| back.nabla(j) != m.nabla(j))
                || (0..ma.hopf().dim())
                    .any(|u| back.hmodule().action(u) != m.hmodule().action(u))
            {
                inverse = false;
            }
        }
        suite.law(
            "translation and untranslation invert each other",
            name,
            inverse,
            || String::from("a module came back changed"),
        );

        let mut agree = true;
        for (_, m) in &modules {
            let direct = is_c_projective(m).expect("solvable at this scale");
            let induced = act_module(&regular_module(ma.hopf()), m).expect("same H");
            let over_smash = s
                .translate(&induced)
                .expect("same instance")
                .module()
                .is_projective()
                .expect("solvable at this scale");
            if direct != over_smash {
                agree = false;
            }
        }
        suite.law(
            "projectivity agrees between the category and the smash product",
            name,
            agree,
            || String::from("the two projectivity tests disagree"),
        );

        let mut iso = true;
        for (_, m) in &modules {
            if !s.induction_isomorphism(m).expect("computable") {
                iso = false;
            }
        }
        suite.law(
            "induction along the smash product is an isomorphism",
            name,
            iso,
            || String::from("the comparison map is not bijective"),
        );

        if ma.is_exact().expect("computable") {
            let mut projective = true;
            for (_, m) in &modules {
                if !is_c_projective(m).expect("solvable at this scale") {
                    projective = false;
                }
            }
            suite.law(
                "over an exact instance every corpus module is projective",
                name,
                projective,
                || String::from("a module over an exact instance is not projective"),
            );
        }

        let objects: Vec<_> = modules.iter().map(|(_, m)| (*m).clone()).collect();
        let report = skryabin_check(ma, &objects, bound).expect("computable");
        suite.law(
            "the simplicity sweep finds no counterexample",
            name,
            report.skipped() || report.all_projective(),
            || format!("counterexamples at indices {:?}", report.counterexamples()),
        );
    }
}

// ---------------------------------------------------------------------
// cli: the document format
// ---------------------------------------------------------------------

fn cli_suite(suite: &mut Suite) {
    for name in examples::REGISTRY {
        let outcome = crate::run::example(name, &crate::run::Options::default())
            .expect("registry instances build");
        let doc = outcome.document;
        let text = doc.to_json();
        let parsed = parse_document(&text).expect("emitted documents parse");
        suite.law(
            "emitted documents re-parse to an equal value",
            name,
            parsed == doc,
            || String::from("the parsed document differs"),
        );

        if let Body::ModuleAlgebra(data) = &doc.body {
            let core = data.to_core().expect("emitted documents validate");
            suite.law(
                "documents reconstruct their instance exactly",
                name,
                ModuleAlgebraData::from_core(&core) == *data && core.check().ok(),
                || String::from("the reconstructed instance differs or fails its axioms"),
            );
        }
    }

    let report = Document::new(Body::Report(ReportData {
        command: String::from("verify"),
        instance: String::from("synthetic"),
        results: {
            let mut m = serde_json::Map::new();
            m.insert("n".into(), 3.into());
            m
        },
        verdicts: vec![
            Verdict::pass("a law", "an instance", 1),
            Verdict::fail("a law", "another instance", "witness", 2),
        ],
    }));
    let parsed = parse_document(&report.to_json()).expect("reports parse");
    suite.law(
        "verdict reports survive the roundtrip",
        "synthetic report",
        parsed == report,
        || String::from("the parsed report differs"),
    );
}

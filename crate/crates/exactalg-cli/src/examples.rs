//! The registry of worked instances every command and suite runs on.
//!
//! Names ending in `_char2`/`_char3`/`_Q`/`_F2` pin their field; the
//! others take `--field`. `group_Z2_modp` is the group algebra of Z/2 as
//! a Hopf algebra over F_p (default p = 3); `fun_Z2` is the algebra of
//! functions on Z/2 with the translation action of that group algebra
//! (default F_2); `trivialH_localF2` is the local algebra k[t]/(t²) under
//! the trivial Hopf algebra, the smallest non-semisimple instance.

use exactalg_core::algebra::Algebra;
use exactalg_core::hopf::{group_algebra, sweedler4, HopfAlgebra};
use exactalg_core::modalg::{
    function_algebra_z2, mu2_module_algebra, tensor_module_algebras, ModuleAlgebra,
};
use exactalg_core::{FieldSpec, Matrix};

use crate::{usage, CliResult};

pub const REGISTRY: [&str; 8] = [
    "mu2_char2",
    "mu2_char3",
    "mu2_tensor_char2",
    "mu2_tensor_char3",
    "fun_Z2",
    "group_Z2_modp",
    "sweedler4_Q",
    "trivialH_localF2",
];

#[derive(Debug, Clone)]
pub enum Instance {
    ModuleAlgebra(ModuleAlgebra),
    Hopf(HopfAlgebra),
}

pub fn is_example(name: &str) -> bool {
    REGISTRY.contains(&name)
}

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("registry characteristic")
}

/// Reconcile a name's pinned field with an explicit `--field`.
fn settle(
    name: &str,
    pinned: Option<FieldSpec>,
    given: Option<FieldSpec>,
    default: FieldSpec,
) -> CliResult<FieldSpec> {
    match (pinned, given) {
        (Some(p), Some(g)) if p != g => Err(usage(format!(
            "{name} is pinned to {p}, but --field asked for {g}"
        ))),
        (Some(p), _) => Ok(p),
        (None, Some(g)) => Ok(g),
        (None, None) => Ok(default),
    }
}

pub fn build(name: &str, field: Option<FieldSpec>) -> CliResult<Instance> {
    let wrap = |r: exactalg_core::Result<ModuleAlgebra>| -> CliResult<Instance> {
        Ok(Instance::ModuleAlgebra(r.map_err(|e| {
            usage(format!("cannot build {name}: {e}"))
        })?))
    };
    match name {
        "mu2_char2" => {
            settle(name, Some(fp(2)), field, fp(2))?;
            wrap(mu2_module_algebra(fp(2)))
        }
        "mu2_char3" => {
            settle(name, Some(fp(3)), field, fp(3))?;
            wrap(mu2_module_algebra(fp(3)))
        }
        "mu2_tensor_char2" => {
            settle(name, Some(fp(2)), field, fp(2))?;
            wrap(tensor_square(fp(2)))
        }
        "mu2_tensor_char3" => {
            settle(name, Some(fp(3)), field, fp(3))?;
            wrap(tensor_square(fp(3)))
        }
        "fun_Z2" => {
            let f = settle(name, None, field, fp(2))?;
            wrap(function_algebra_z2(f))
        }
        "group_Z2_modp" => {
            let f = settle(name, None, field, fp(3))?;
            if f.is_rational() {
                return Err(usage("group_Z2_modp needs a prime field"));
            }
            let h = group_algebra(f, &[vec![0, 1], vec![1, 0]])
                .map_err(|e| usage(format!("cannot build {name}: {e}")))?;
            Ok(Instance::Hopf(h))
        }
        "sweedler4_Q" => {
            settle(name, Some(FieldSpec::rationals()), field, FieldSpec::rationals())?;
            let h = sweedler4(FieldSpec::rationals())
                .map_err(|e| usage(format!("cannot build {name}: {e}")))?;
            Ok(Instance::Hopf(h))
        }
        "trivialH_localF2" => {
            settle(name, Some(fp(2)), field, fp(2))?;
            wrap(local_trivial(fp(2)))
        }
        _ => Err(usage(format!(
            "unknown example \"{name}\"; the registry is {}",
            REGISTRY.join(", ")
        ))),
    }
}

pub fn tensor_square(field: FieldSpec) -> exactalg_core::Result<ModuleAlgebra> {
    let a = mu2_module_algebra(field)?;
    tensor_module_algebras(&a, &a)
}

/// k[t]/(t²) as a module algebra over the one-dimensional Hopf algebra.
pub fn local_trivial(field: FieldSpec) -> exactalg_core::Result<ModuleAlgebra> {
    let h = group_algebra(field, &[vec![0]])?;
    let one = field.one();
    let zero = field.zero();
    let a = Algebra::from_mul(field, 2, vec![one, zero], |i, j| {
        let mut v = vec![field.zero(), field.zero()];
        if i + j < 2 {
            v[i + j] = field.one();
        }
        v
    });
    ModuleAlgebra::new(h, a, vec![Matrix::identity(field, 2)])
}

/// Every module algebra in the registry at its default field, paired
/// with its name: the corpus the law suites quantify over.
pub fn module_algebra_corpus() -> Vec<(String, ModuleAlgebra)> {
    REGISTRY
        .iter()
        .filter_map(|name| match build(name, None) {
            Ok(Instance::ModuleAlgebra(ma)) => Some(((*name).to_string(), ma)),
            _ => None,
        })
        .collect()
}

/// The module algebras over F_2, where subspace enumeration is exhaustive.
pub fn f2_corpus() -> Vec<(String, ModuleAlgebra)> {
    module_algebra_corpus()
        .into_iter()
        .filter(|(_, ma)| ma.algebra().field().characteristic() == 2)
        .collect()
}

/// Every Hopf algebra the registry can produce, including the ones
/// underlying module algebras.
pub fn hopf_corpus() -> Vec<(String, HopfAlgebra)> {
    let mut out: Vec<(String, HopfAlgebra)> = Vec::new();
    for name in REGISTRY {
        match build(name, None) {
            Ok(Instance::Hopf(h)) => out.push((name.to_string(), h)),
            Ok(Instance::ModuleAlgebra(ma)) => {
                out.push((format!("{name}/H"), ma.hopf().clone()))
            }
            Err(_) => {}
        }
    }
    out
}

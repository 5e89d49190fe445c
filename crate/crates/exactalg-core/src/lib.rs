//! Exact computational algebra for finite-dimensional Hopf algebras and their
//! module algebras.
//!
//! Everything here is exact: scalars are either residues in a prime field F_p
//! or arbitrary-precision rationals. There are no floats and no tolerances;
//! two objects are equal when their canonical forms are identical.
//!
//! The layers build on each other:
//!
//! * [`scalar`], [`matrix`], [`subspace`] - exact linear algebra with
//!   echelon-canonical subspaces, Kronecker products, invariant-subspace
//!   fixpoints, and full subspace enumeration over small prime fields.
//! * [`algebra`] - finite-dimensional associative algebras given by structure
//!   constants: ideals, quotients, Jacobson radicals (trace form in
//!   characteristic zero, a layered lifted-trace method in characteristic p),
//!   and projectivity of finite modules.
//! * [`hopf`] - Hopf algebras given by structure tensors, with axiom checkers,
//!   standard constructions (group algebras, their duals, the 4-dimensional
//!   Taft example), tensor products, duals with evaluation/coevaluation, and
//!   Hom spaces of modules.
//! * [`modalg`] - H-module algebras: equivariant ideals, the largest stable
//!   subideal, the equivariant radical, exactness, and decomposition into
//!   simple factors.
//! * [`kleisli`] - the ideal correspondence between equivariant ideals of A
//!   and stable ideals of the Kleisli category of free A-modules, including
//!   an independent route to the equivariant radical.
//! * [`smash`] - smash products A#H and the translation of equivariant
//!   modules into smash-product modules, used for projectivity tests.
//!
//! The crate is `no_std` (with `alloc`) so the algorithms stay free of
//! incidental I/O; serialization and the command-line driver live in a
//! companion crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

use alloc::string::String;
use core::fmt;

pub mod algebra;
pub mod hopf;
pub mod kleisli;
pub mod matrix;
pub mod modalg;
pub(crate) mod poly;
pub mod scalar;
pub mod smash;
pub mod subspace;

pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::Subspace;

/// Errors surfaced by fallible operations.
///
/// Pure mathematical functions whose preconditions are enforced by the type
/// system panic on internal inconsistencies instead; every panic is a bug in
/// the caller or in this crate, never a property of the input data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must live over the same field do not.
    FieldMismatch,
    /// A dimension or ambient-space mismatch between arguments.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// The requested characteristic is not prime.
    NotPrime(u64),
    /// A construction is unavailable in the given characteristic.
    BadCharacteristic(&'static str),
    /// Exhaustive enumeration would exceed the configured bound.
    EnumerationBound { required: u128, bound: u128 },
    /// Subspace enumeration was requested over the rationals.
    RationalEnumeration,
    /// A multiplication table fails to describe a group.
    NotAGroup(String),
    /// Input data violates a structural axiom (with a human-readable witness).
    AxiomViolation(String),
    /// A linear system that must be solvable is not; indicates inconsistent
    /// input data rather than a numerical problem.
    Unsolvable(&'static str),
    /// The module algebra is not exact, so the requested decomposition is
    /// undefined.
    NotExact,
    /// Idempotent splitting over Q stalled on an irreducible factor of degree
    /// larger than one; the decomposition needs a field extension.
    FieldExtensionNeeded(String),
    /// The Kleisli probe list cannot express a required object.
    ProbeClosure(String),
    /// A mandatory internal re-verification failed. This is never silent: it
    /// signals a bug in the algorithm, not in the input.
    PostVerification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "arguments live over different fields"),
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(
                f,
                "dimension mismatch in {context}: expected {expected}, found {found}"
            ),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::BadCharacteristic(what) => write!(f, "unavailable in this characteristic: {what}"),
            Error::EnumerationBound { required, bound } => write!(
                f,
                "enumeration needs {required} candidates, above the bound {bound}"
            ),
            Error::RationalEnumeration => {
                write!(f, "cannot enumerate subspaces over an infinite field")
            }
            Error::NotAGroup(why) => write!(f, "multiplication table is not a group: {why}"),
            Error::AxiomViolation(why) => write!(f, "axiom violation: {why}"),
            Error::Unsolvable(context) => write!(f, "inconsistent linear system in {context}"),
            Error::NotExact => write!(f, "module algebra is not exact"),
            Error::FieldExtensionNeeded(detail) => {
                write!(f, "idempotent splitting needs a field extension: {detail}")
            }
            Error::ProbeClosure(what) => write!(f, "probe list too small: {what}"),
            Error::PostVerification(what) => {
                write!(f, "internal re-verification failed: {what}")
            }
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

//! Modules over group rings of finite abelian groups: idempotent and cycle
//! decompositions, and relative data `(A_K, A_L, lift, norm, sigma)` with
//! their growth classification.

mod algebra;
mod datum;
mod module;

use thiserror::Error;

use crate::abgroup::AbGroupError;
use crate::pcgroup::PcGroupError;

pub use algebra::{character_idempotents, hensel_lift, primitive_idempotents, teichmuller_root, GroupAlgebraElement};
pub use datum::{
    check_growth_order_law, classify_growth, f_property, make_relative_datum, norm_kernel_cycles,
    norm_kernel_exponent, synthetic_wild_datum, DatumOrigin, DatumViolation, GrowthClass, GrowthLaw,
    RelativeExtensionDatum,
};
pub use module::{
    cycle_decomposition, decompose_module, is_exact_cycle, s_operator, transitivity_counterexample, Component,
    GModule,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GModuleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {p} divides the group order {order}")]
    NotCoprime { order: u64, p: u64 },
    #[error("characters of a group of exponent {exponent} are not defined over Z_{p}")]
    CharactersNotRational { exponent: u64, p: u64 },
    #[error("module is not a {0}-group")]
    NotAPGroup(u64),
    #[error("invalid action: {0}")]
    BadAction(String),
    #[error("precision {modulus} does not annihilate a module of exponent {exponent}")]
    PrecisionTooLow { modulus: u64, exponent: u64 },
    #[error("idempotent images do not form a direct product")]
    NotADecomposition,
    #[error("no decomposition into cyclic submodules exists")]
    NoCycleDecomposition,
    #[error("datum invariant violated: {0}")]
    DatumInvariant(String),
    #[error(transparent)]
    Linear(#[from] AbGroupError),
    #[error(transparent)]
    Group(#[from] PcGroupError),
}

//! Hochschild cochains, braces, the dot product, the Lie bracket and the
//! Hochschild differential.

mod brace;
mod cochain;
mod morphism;
mod relation;
mod space;

pub use brace::{
    brace, brace_plain, compose, dot, eval_multilinear, faulty_swap, gerstenhaber_bracket, hochschild_differential,
    lie_bracket, SwapRule,
};
pub(crate) use brace::hochschild_differential_with;
pub use cochain::{project_zero, suspend, unsuspend, Cochain, Key, SuspendedCochain, ZeroPart};
pub use morphism::{
    is_brace_morphism, restrict_cochain, CochainMap, IdentityMap, MorphismReport, Restriction, SampleConfig, ScaleArity,
};
pub(crate) use morphism::sample_nonzero;
pub use relation::{relation_lhs, relation_rhs};
pub use space::{
    cochain_basis, coordinates, from_coordinates, random_cochain, random_scalar, total_basis, BasisElement,
};

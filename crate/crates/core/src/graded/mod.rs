//! Graded quivers, homogeneous maps and the sign engine.

mod morphism;
mod quiver;
mod sign;

pub use morphism::{tensor_apply, tensor_apply_linear, GradedMorphism, Tensor};
pub use quiver::{Arrow, ArrowId, GradedQuiver, LinComb, ObjId, QuiverBuilder, SubquiverMap};
pub use sign::{canonical_iso_sign, koszul_swap_sign, CanonicalIso, Sign};

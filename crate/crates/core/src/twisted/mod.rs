//! Free and twisted objects over a quiver, the section `embr_δ` and the
//! categories of (pre)complexes it produces.

mod free;
mod pcom;
mod tw;

pub use free::{is_iln, phi_reach, FreeObject, MorphismMatrix, Nilpotence, ReachabilitySet, Summand, TwistedObject};
pub use pcom::{build_com, build_pcom, matrix_pcom, ComplexWindow, Precomplexes};
pub use tw::{lembr_sign, EmbedMap, EmbrMap, Entry, TwQuiver};

#[cfg(test)]
mod tests;

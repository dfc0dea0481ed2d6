//! Exact scalar arithmetic and sparse linear algebra over `Q` and `GF(p)`.

mod matrix;
mod scalar;

pub use matrix::{homology, in_span, quotient_dim, span_rank, Echelon, Homology, SparseMatrix, Vector};
pub use scalar::{FieldSpec, Scalar};

pub mod corpus;
pub mod error;
pub mod exact;
pub mod graded;
pub mod ainf;
pub mod hochschild;
pub mod twisted;
pub mod deformation;

pub use error::{Error, Result};
pub mod workbench;

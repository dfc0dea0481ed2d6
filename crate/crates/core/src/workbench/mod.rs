//! Problem documents, reports, verification suites and the command line.

pub mod cli;
pub mod document;
pub mod report;
pub mod suites;
pub mod tasks;

pub use cli::{run, Outcome};
pub use document::{Problem, ProblemDocument};
pub use report::{Format, Record, Report, Status};
pub use suites::{Suite, SuiteConfig};

use crate::error::Result;

/// The documents shipped with the crate, by file name.
pub const CORPUS: [(&str, &str); 3] = [
    ("e1.json", include_str!("../../data/e1.json")),
    ("e2.json", include_str!("../../data/e2.json")),
    ("field.json", include_str!("../../data/field.json")),
];

pub fn shipped_corpus() -> Result<Vec<Problem>> {
    CORPUS.iter().map(|(_, text)| Problem::parse(text)).collect()
}

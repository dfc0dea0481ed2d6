use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scalars from different fields: {0} and {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown arrow {name:?} in hom({source_obj}, {target_obj})")]
    UnknownArrow {
        name: String,
        source_obj: String,
        target_obj: String,
    },
    #[error("duplicate arrow {0:?}")]
    DuplicateArrow(String),
    #[error("degree {degree} outside the declared window [{min}, {max}]")]
    DegreeWindow { degree: i64, min: i64, max: i64 },
    #[error("degree violation: {0}")]
    Degree(String),
    #[error("arrows are not composable: {0}")]
    NotComposable(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("structure of kind {kind} violates its kind constraint: {detail}")]
    KindViolation { kind: String, detail: String },
    #[error("invalid A-infinity structure: {0}")]
    InvalidStructure(String),
    #[error("embr sum does not terminate at object {0:?}: the twist is not locally nilpotent over a graded base")]
    Divergent(String),
    #[error("twisted object {0:?} violates the window shape: {1}")]
    Window(String, String),
    #[error("{object:?} is not a complex: {witness}")]
    NotComplex { object: String, witness: String },
    #[error("cochain is not a cocycle: {0}")]
    NotCocycle(String),
    #[error("gauge does not match: d(h) - (φ' - φ) = {0}")]
    GaugeMismatch(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },
}

impl Error {
    pub fn schema(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

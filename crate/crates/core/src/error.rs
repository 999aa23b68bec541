use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("scalar field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("field error: {0}")]
    Field(String),
    #[error("index out of bounds: {0}")]
    OutOfBounds(String),
    #[error("distributive law kind unsupported: {0}")]
    KindUnsupported(String),
    #[error("missing convolution inverse: {0}")]
    MissingInverse(String),
    #[error("missing family entry: {0}")]
    MissingEntry(String),
    #[error("convolution context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

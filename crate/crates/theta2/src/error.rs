use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("cannot compose {outer} after {inner}: endpoints differ")]
    NotComposable { outer: String, inner: String },
    #[error("{0} is not a face operator")]
    NotAFace(String),
    #[error("no hyperface {label} on {shape}")]
    NoSuchHyperface { label: String, shape: String },
    #[error("shuffles of different grids: {0} and {1}")]
    ShuffleMismatch(String, String),
    #[error("index {index} out of range {lo}..={hi}")]
    OutOfRange { index: usize, lo: usize, hi: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cell of shape {shape} lies above the truncation bound {bound}")]
    AboveBound { shape: String, bound: usize },
    #[error("cell does not belong to the ambient set: {0}")]
    NotInAmbient(String),
    #[error("invalid 2-category: {0}")]
    TwoCategory(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("image {image} at position {position} is outside the target ordinal of {dots} dots")]
    ImageOutOfRange { position: usize, image: usize, dots: usize },
    #[error("expected {expected} images, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("map is not monotone at position {0}")]
    NotMonotone(usize),
    #[error("map is not injective on dots at position {0}")]
    NotInjective(usize),
    #[error("linked source edge {edge} is sent across unlinked target edge {target_edge}")]
    LinkBroken { edge: usize, target_edge: usize },
    #[error("cannot compose: target {left} does not match source {right}")]
    Mismatch { left: String, right: String },
    #[error("dot-sum gluing condition violated: {0}")]
    Gluing(String),
    #[error("map is not vertical")]
    NotVertical,
    #[error("not a well-formed epi square: {0}")]
    BadSquare(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("invalid input: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

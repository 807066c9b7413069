use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input (bad type string, rank bound, parse).
    #[error("invalid input: {0}")]
    Input(String),
    /// Well-formed input outside the operation's domain (non-dominant,
    /// non-minuscule, non-minimal coset representative).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured budget (group order, window size) would be exceeded.
    #[error("resource budget exceeded: {0}")]
    Resource(String),
}

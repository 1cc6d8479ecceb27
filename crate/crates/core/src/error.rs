use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element is not supported in the Young subgroup {0}")]
    SupportViolation(String),
    #[error("element is not central")]
    NotCentral,
    #[error("repeated spectral value in Yang-Baxter recursion")]
    RepeatedSpectralValue,
    #[error("matrix is singular")]
    Singular,
    #[error("n = {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

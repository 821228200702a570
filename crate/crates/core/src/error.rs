use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pole at s = {0}")]
    Pole(Complex64),

    #[error(
        "series did not reach error target {target:e} at s = {s} \
         (best estimate {achieved:e} with {terms} terms)"
    )]
    NonConvergence {
        s: Complex64,
        target: f64,
        achieved: f64,
        terms: usize,
    },

    #[error("character ({modulus}, {index}) is principal; no completed xi is defined for it")]
    PrincipalCharacter { modulus: u64, index: usize },

    #[error("character ({modulus}, {index}) is imprimitive (conductor {conductor})")]
    ImprimitiveCharacter {
        modulus: u64,
        index: usize,
        conductor: u64,
    },

    #[error("no character with index {index} modulo {modulus} (there are {count})")]
    NoSuchCharacter {
        modulus: u64,
        index: usize,
        count: usize,
    },

    #[error("|xi| is numerically zero at t = {t}, eps = {eps}; phase is undefined there")]
    AtZero { t: f64, eps: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("zero-sum configuration contains no zeros")]
    EmptyZeroList,

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

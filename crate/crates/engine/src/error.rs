use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("mode {m}: found {found} roots below {r_max}, counting formula allows {low}..={high}")]
    Incomplete {
        m: u32,
        found: usize,
        low: usize,
        high: usize,
        r_max: f64,
    },

    #[error("mode {m}: characteristic function touches zero without crossing near k = {k}")]
    Tangency { m: u32, k: f64 },

    #[error("misaligned inputs: {0}")]
    Misaligned(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

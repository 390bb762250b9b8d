use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("vertex index {0} out of range")]
    InvalidVertex(usize),
    #[error("gap index {gap} out of range for vertex of degree {degree}")]
    InvalidGap { gap: usize, degree: usize },
    #[error("enumeration guard exceeded: {what} would need {count} states (limit {limit})")]
    GuardExceeded { what: &'static str, count: u128, limit: u128 },
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph is not a bouquet (it has {0} vertices)")]
    NotBouquet(usize),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("twisted assignment does not cover edge `{0}`")]
    PartialAssignment(String),
    #[error("invalid set system: {0}")]
    InvalidSetSystem(String),
    #[error("invalid operator `{0}`")]
    InvalidOperator(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

/// Upper bound on the number of states any brute-force enumeration may visit.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// Fails when `base^exp` exceeds [`ENUMERATION_LIMIT`].
pub(crate) fn guard(what: &'static str, base: u128, exp: usize) -> Result<()> {
    let count = u32::try_from(exp).ok().and_then(|e| base.checked_pow(e)).unwrap_or(u128::MAX);
    if count > ENUMERATION_LIMIT {
        return Err(Error::GuardExceeded { what, count, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

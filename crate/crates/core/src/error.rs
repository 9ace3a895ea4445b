use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: bad input (a malformed group, a map that
/// is not an injective homomorphism, an unparseable label) and internal
/// verification failures (a construction whose checks did not hold). The CLI
/// maps the first family to exit code 2 and the second to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("parameter {param} out of range for group family `{family}`")]
    BadParameter { family: String, param: i64 },

    #[error("permutation closure exceeds the order cap of {0}")]
    OrderCap(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("invalid element `{0}`")]
    InvalidElement(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid specification: {0}")]
    Spec(String),

    #[error("no prime p = 1 mod {modulus} with {lower} < p <= {bound}")]
    NoAdmissiblePrime { modulus: u64, lower: u64, bound: u64 },

    #[error("not a genuine character: {0}")]
    NotGenuine(String),

    #[error("character table construction failed: {0}")]
    CharacterTable(String),

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("Hopf algebra check failed: {0}")]
    Hopf(String),

    #[error("irreducible catalog is incomplete: sum of squared degrees {got}, expected {expected}")]
    IncompleteCatalog { got: u64, expected: u64 },

    #[error("fusion failure: {0}")]
    Fusion(String),

    #[error("linear algebra failure: {0}")]
    Linear(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True when the error is caused by the caller's input rather than a
    /// failed internal verification.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::InvalidGroup(_)
                | Error::UnknownFamily(_)
                | Error::BadParameter { .. }
                | Error::OrderCap(_)
                | Error::InvalidPermutation(_)
                | Error::InvalidHom(_)
                | Error::InvalidElement(_)
                | Error::InvalidLabel(_)
                | Error::Spec(_)
                | Error::DimensionCap { .. }
                | Error::Json(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

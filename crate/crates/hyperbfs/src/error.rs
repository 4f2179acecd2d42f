use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An exhaustive check was requested on a value set whose carrier cannot
    /// be enumerated.
    #[error("value set `{0}` has no finite enumerable carrier; not exhaustively checkable")]
    NonFiniteCarrier(String),

    /// A key was used outside the key space it was resolved against.
    #[error("unknown key `{key}` in {context}")]
    KeyDomain { key: String, context: String },

    /// Array product attempted with incompatible contracted key spaces.
    #[error("contraction key spaces differ ({reason})")]
    Contraction { reason: String },

    /// Key spaces given to `reorder` are not permutations of the originals.
    #[error("reorder key spaces are not a permutation of the original ({0})")]
    NotAPermutation(String),

    #[error("carrier size {0} out of range (expected {1}..={2})")]
    CarrierSizeOutOfRange(usize, usize, usize),

    #[error("enumeration bounds exceeded: {0}")]
    BoundsExceeded(String),

    /// The sparse product was requested without an annihilator certificate.
    #[error("value set `{0}` is not certified zero-annihilating; sparse product refused")]
    NotCertified(String),

    /// Incidence weight of zero, or a weight placed off an incidence.
    #[error("invalid incidence weight at edge `{edge}`, vertex `{vertex}`: {reason}")]
    InvalidWeight {
        edge: String,
        vertex: String,
        reason: String,
    },

    /// The two identity laws failed during value-set validation.
    #[error("identity law violated: {0}")]
    IdentityViolation(String),

    #[error("parse error ({location}): {message}")]
    Parse { location: String, message: String },

    #[error("hypergraph is malformed: {0}")]
    MalformedHypergraph(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

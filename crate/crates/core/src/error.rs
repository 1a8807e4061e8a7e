use thiserror::Error;

use crate::complex::Simplex;
use crate::cover::PieceName;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown piece `{0}`")]
    UnknownPiece(String),

    #[error("unknown instance `{0}`")]
    UnknownInstance(String),

    #[error("search limit exceeded: {what} has size {size}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("incompatible complexes: {0}")]
    Incompatible(String),

    #[error("not a simplicial map: image of {face} is not a face of the target")]
    NotSimplicial { face: Simplex },

    #[error("carrier is invalid: collection {collection:?} has nonempty intersection but its image does not")]
    InvalidCarrier { collection: Vec<PieceName> },

    #[error("covers do not compose: codomain of the first carrier differs from the domain of the second")]
    CoverMismatch,

    #[error("operation requires a closed cover")]
    RequiresClosedCover,

    #[error("piece `{0}` is empty and has no vertex in the nerve")]
    EmptyPiece(PieceName),

    #[error("no cone certificate for codomain collection {0:?}")]
    MissingConeCertificate(Vec<PieceName>),

    #[error("cone certificate for {collection:?} names `{apex}`, which is not an apex of the intersection")]
    BadConeCertificate {
        collection: Vec<PieceName>,
        apex: String,
    },

    #[error("extension failed on flag {flag}: apex values do not span a face of the target")]
    UnknownExtension { flag: Simplex },

    #[error("chain map does not commute with boundaries in degree {degree}")]
    NonCommuting { degree: usize },

    #[error("constructed map violates the carrier at piece `{piece}` on face {face}")]
    CarrierViolation { piece: PieceName, face: Simplex },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "malformed-input",
            Error::UnknownVertex(_) => "unknown-vertex",
            Error::UnknownPiece(_) => "unknown-piece",
            Error::UnknownInstance(_) => "unknown-instance",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::Incompatible(_) => "incompatible-complexes",
            Error::NotSimplicial { .. } => "not-simplicial",
            Error::InvalidCarrier { .. } => "invalid-carrier",
            Error::CoverMismatch => "cover-mismatch",
            Error::RequiresClosedCover => "requires-closed-cover",
            Error::EmptyPiece(_) => "empty-piece",
            Error::MissingConeCertificate(_) => "unknown-certificate",
            Error::BadConeCertificate { .. } => "bad-certificate",
            Error::UnknownExtension { .. } => "unknown-extension",
            Error::NonCommuting { .. } => "non-commuting",
            Error::CarrierViolation { .. } => "carrier-violation",
            Error::Json(_) => "malformed-json",
            Error::Io(_) => "io",
        }
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid variable table: {0}")]
    InvalidTable(String),

    #[error("incompatible rings: {0}")]
    IncompatibleRings(String),

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("degree too large for oracle: degree {degree} has {monomials} monomials (cap {cap})")]
    DegreeTooLarge { degree: u32, monomials: usize, cap: usize },

    #[error("conclusion at degree {degree} is outside the validity bound {bound}")]
    OutsideValidityBound { degree: u32, bound: u32 },

    #[error("missing image for variable {0}")]
    MissingImage(String),

    #[error("image of {var} is not homogeneous of degree {expected}")]
    InhomogeneousImage { var: String, expected: u32 },

    #[error("relation does not map into the target ideal: {0}")]
    RelationNotPreserved(String),

    #[error("engine inconsistency: {0}")]
    EngineInconsistency(String),

    #[error("catalog inconsistency: {0}")]
    CatalogInconsistency(String),

    #[error("unknown id: {0}")]
    UnknownId(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("rational route not justified: {0}")]
    RationalRouteNotJustified(String),

    #[error("non-integral result: {0}")]
    NonIntegral(String),

    #[error("rank out of scope: {0}")]
    RankOutOfScope(usize),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system: type {ty} rank {rank}")]
    UnsupportedRootSystem { ty: String, rank: usize },

    #[error("weight {weight} has {got} coordinates, root system has rank {rank}")]
    RankMismatch {
        weight: String,
        got: usize,
        rank: usize,
    },

    #[error("cannot parse weight {0:?}")]
    ParseWeight(String),

    #[error("weight is not integral: {0}")]
    NotIntegral(String),

    #[error("alcove is empty for {ty} at ell = {ell}")]
    AlcoveEmpty { ty: String, ell: u64 },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not in the fundamental alcove")]
    NotInAlcove(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("iteration bound {bound} exceeded while {what}")]
    IterationBound { bound: u64, what: String },

    #[error("size cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: String, needed: u128, cap: u128 },

    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("preset {label} does not apply: {reason}")]
    PresetMismatch { label: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

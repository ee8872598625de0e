use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidMatrix(String),
    #[error("infinite root system")]
    InfiniteRootSystem,
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("chain index {0} is out of range")]
    IndexOutOfRange(i64),
    #[error("no chain entry with root {root} and level {level}")]
    NoSuchPosition { root: String, level: i64 },
    #[error("positions are not admissible")]
    NotAdmissible,
    #[error("chains live over different root systems")]
    RootSystemMismatch,
    #[error("window must contain at least one copy")]
    EmptyWindow,
    #[error("cannot enumerate an infinite crystal without a depth bound")]
    Unbounded,
    #[error("graph has {0} highest-weight nodes, expected exactly one")]
    HighestNodes(usize),
    #[error("incompatible path kinds")]
    PathKind,
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vectors {} and {} (in input order) pair to 1 under the symplectic form", .0 + 1, .1 + 1)]
    NotIsotropic(usize, usize),
    #[error("span has dimension {found}, expected {expected}")]
    WrongDimension { expected: usize, found: usize },
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("subset is not contained in the ground set")]
    NotSubset,
    #[error("Lagrangian subspace is not graphic")]
    NotGraphic,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("ground set of size {size} exceeds the limit {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("set system has no feasible sets")]
    ImproperSystem,
    #[error("set system violates the symmetric exchange axiom")]
    NotDeltaMatroid,
    #[error("set system is not a binary delta-matroid")]
    NotBinary,
    #[error("ground sets share the label `{0}`")]
    OverlappingLabels(String),
    #[error("ribbon graph is not connected")]
    DisconnectedGraph,
    #[error("ribbon graph has {0} vertices, expected one")]
    MultipleVertices(usize),
    #[error("no partial dual with a single vertex was found")]
    NoSingleVertexDual,
    #[error("invalid ribbon graph: {0}")]
    InvalidRibbonGraph(String),
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("invalid Vassiliev move pair ({0}, {1})")]
    InvalidMove(usize, usize),
    #[error("elements live on different sides of the isomorphism")]
    MixedSides,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

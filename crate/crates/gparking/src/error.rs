use thiserror::Error;

/// Errors raised by graph, ideal and bijection operations.
///
/// Each variant carries a stable machine-readable code (see [`Error::code`])
/// that the CLI reports alongside the message.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("cannot delete the root vertex {0}")]
    RootDeletion(usize),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("adjacency matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("nonzero diagonal entry at vertex {0}")]
    NonzeroDiagonal(usize),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("ideal is not Artinian: no pure power in coordinate {0}")]
    NotArtinian(usize),
    #[error("generator exceeds the Alexander duality bound in coordinate {0}")]
    DualBoundExceeded(usize),
    #[error("{0:?} is not a parking function")]
    NotParkingFunction(Vec<u64>),
    #[error("{0:?} is not a spherical parking function")]
    NotSpherical(Vec<u64>),
    #[error("phi_G is undefined on this input: {0}")]
    PhiUndefined(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("tree is outside the domain of this map: {0}")]
    BadTree(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("malformed graph file: {0}")]
    BadGraphFile(String),
}

impl Error {
    /// Stable error code for machine-readable CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::BadParameter(_) => "bad-parameter",
            Error::NoSuchEdge(..) => "no-such-edge",
            Error::RootDeletion(_) => "root-deletion",
            Error::BadVertex(_) => "bad-vertex",
            Error::NotSymmetric(..) => "not-symmetric",
            Error::NonzeroDiagonal(_) => "nonzero-diagonal",
            Error::DimensionMismatch(..) => "dimension-mismatch",
            Error::NotArtinian(_) => "not-artinian",
            Error::DualBoundExceeded(_) => "dual-bound-exceeded",
            Error::NotParkingFunction(_) => "not-a-parking-function",
            Error::NotSpherical(_) => "not-spherical",
            Error::PhiUndefined(_) => "phi-undefined",
            Error::Disconnected => "disconnected",
            Error::BadTree(_) => "bad-tree",
            Error::Inconsistent(_) => "inconsistent",
            Error::BadGraphFile(_) => "bad-graph-file",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

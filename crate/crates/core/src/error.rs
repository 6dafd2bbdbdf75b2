use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index is out of range for the graph at hand.
    InvalidVertex { vertex: usize, num_vertices: usize },
    /// An edge index is out of range for the graph at hand.
    InvalidEdge { edge: usize, num_edges: usize },
    /// Two containers that must describe the same graph disagree in size.
    SizeMismatch { expected: usize, actual: usize, what: &'static str },
    /// The operation needs a connected graph.
    Disconnected,
    /// The operation needs a leafless graph (no vertex of degree 1).
    NotLeafless,
    /// The operation needs first Betti number (genus) at least `needed`.
    GenusTooSmall { genus: usize, needed: usize },
    /// A subdivision count must be positive.
    ZeroSubdivision { edge: usize },
    /// An exhaustive routine was asked to exceed its documented size guard.
    GuardExceeded { what: &'static str, limit: usize, actual: usize },
    /// The residue outside a deleted vertex has an empty leafless core.
    EmptyCore,
    /// The given edge set is not preserved by the given map.
    EdgeSetNotInvariant,
    /// A metric graph length must be strictly positive.
    NonpositiveLength { index: usize },
    /// A parameter is outside the documented domain of the operation.
    BadParameter { what: &'static str },
    /// An exact integer computation (group order, factorial) left u64 range.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidVertex { vertex, num_vertices } => {
                write!(f, "vertex index {vertex} out of range (graph has {num_vertices} vertices)")
            }
            Error::InvalidEdge { edge, num_edges } => {
                write!(f, "edge index {edge} out of range (graph has {num_edges} edges)")
            }
            Error::SizeMismatch { expected, actual, what } => {
                write!(f, "{what}: expected length {expected}, got {actual}")
            }
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotLeafless => write!(f, "graph has a leaf (vertex of degree 1)"),
            Error::GenusTooSmall { genus, needed } => {
                write!(f, "first Betti number is {genus}, but the operation needs ≥ {needed}")
            }
            Error::ZeroSubdivision { edge } => {
                write!(f, "subdivision count for edge {edge} must be positive")
            }
            Error::GuardExceeded { what, limit, actual } => {
                write!(f, "{what} is limited to size {limit}, got {actual}")
            }
            Error::EmptyCore => write!(f, "leafless core of the residue is empty"),
            Error::EdgeSetNotInvariant => {
                write!(f, "edge set is not mapped onto itself by the given automorphism")
            }
            Error::NonpositiveLength { index } => {
                write!(f, "length {index}: must be strictly positive")
            }
            Error::BadParameter { what } => write!(f, "{what}"),
            Error::Overflow => write!(f, "exact integer computation exceeds u64 range"),
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

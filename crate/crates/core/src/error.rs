use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge `(v, v)` was supplied.
    Loop { vertex: usize },
    /// The same unordered pair was supplied twice.
    DuplicateEdge { u: usize, v: usize },
    /// A vertex index is not below the vertex count.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    NotAnEdge { u: usize, v: usize },
    /// `contract_set` was called with an empty set.
    EmptyContraction,
    /// The input is larger than the configured cap for an exhaustive routine.
    SizeCapExceeded { vertex_count: usize, cap: usize },
    /// A vertex sequence is not a cycle of the graph.
    NotACycle,
    /// The two vertices of an admissible contraction are the same vertex.
    SameVertex { vertex: usize },
    /// `u` and `v` share no neighbour, so no contraction of them is admissible.
    NoCommonNeighbor { u: usize, v: usize },
    /// `u` and `v` share neighbours but no path `u, w, v` lies on an induced non-separating cycle.
    NoPeripheralCycle { u: usize, v: usize },
    /// `w` is not a common neighbour of `u` and `v`, or `u, w, v` is not on a peripheral cycle.
    InvalidWitness { u: usize, v: usize, w: usize },
    /// Family parameters violate the family's constraints.
    InvalidFamily(String),
    /// Connectivity order must be at least one.
    InvalidConnectivity,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for a graph on {vertex_count} vertices")
            }
            Error::NotAnEdge { u, v } => write!(f, "{u}-{v} is not an edge"),
            Error::EmptyContraction => f.write_str("cannot contract an empty vertex set"),
            Error::SizeCapExceeded { vertex_count, cap } => {
                write!(f, "graph has {vertex_count} vertices, above the size cap of {cap}")
            }
            Error::NotACycle => f.write_str("vertex sequence is not a cycle of the graph"),
            Error::SameVertex { vertex } => write!(f, "cannot contract vertex {vertex} with itself"),
            Error::NoCommonNeighbor { u, v } => write!(f, "vertices {u} and {v} have no common neighbour"),
            Error::NoPeripheralCycle { u, v } => write!(
                f,
                "no path {u}, w, {v} lies on an induced non-separating cycle"
            ),
            Error::InvalidWitness { u, v, w } => {
                write!(f, "{u}, {w}, {v} does not witness an admissible contraction")
            }
            Error::InvalidFamily(msg) => write!(f, "invalid family parameters: {msg}"),
            Error::InvalidConnectivity => f.write_str("connectivity order must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}

use alloc::string::String;
use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input exceeds the hard size cap of an exact enumeration routine.
    SizeLimitExceeded { what: &'static str, limit: usize, got: usize },
    /// Two graphs expected on the same vertex set differ.
    VertexSetMismatch,
    /// An operation needed at least one edge.
    EmptyEdgeSet,
    /// A vertex label outside `0..n`.
    UnknownVertex(usize),
    /// Operation requires a bipartite graph.
    NotBipartite,
    /// Operation requires a complete multipartite graph.
    NotCompleteMultipartite,
    /// The bipartite entropy theorem excludes isolated vertices.
    IsolatedVertex(usize),
    /// Distribution weights do not sum to one.
    SumNotOne,
    /// Negative weight in a distribution.
    NegativeEntry(usize),
    /// Argument outside the function's domain.
    DomainError(String),
    /// Vector lengths inconsistent with the host graph.
    DimensionMismatch { expected: usize, got: usize },
    /// A claimed polytope point fails its membership check.
    InfeasiblePoint(String),
    /// Empty input list where at least one element is required.
    EmptyInput,
    /// Solver hit the iteration cap before reaching the requested gap.
    NonconvergenceAfterMaxIters { iterations: u64, gap_bits: f64 },
    /// No block partition matching the solver value was found.
    PartitionNotFound,
    /// Perfect-graph route invoked on an imperfect graph.
    NotPerfect,
    /// k-graph route invoked on a graph that is not a k-graph.
    NotKGraph { witness: Option<crate::VertexSet> },
    /// Line-graph symmetry theorem needs k >= 3.
    KBelowThree(usize),
    /// Cubic-graph route invoked on a non-cubic graph.
    NotCubic,
    /// Cubic-graph route found a bridge.
    HasBridge(usize, usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeLimitExceeded { what, limit, got } => {
                write!(f, "{what}: size cap {limit} exceeded (got {got})")
            }
            Error::VertexSetMismatch => write!(f, "graphs are not on the same vertex set"),
            Error::EmptyEdgeSet => write!(f, "graph has no edges"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::NotBipartite => write!(f, "graph is not bipartite"),
            Error::NotCompleteMultipartite => write!(f, "graph is not complete multipartite"),
            Error::IsolatedVertex(v) => write!(f, "isolated vertex {v}"),
            Error::SumNotOne => write!(f, "distribution does not sum to 1"),
            Error::NegativeEntry(i) => write!(f, "negative weight at index {i}"),
            Error::DomainError(msg) => write!(f, "domain error: {msg}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::InfeasiblePoint(msg) => write!(f, "infeasible point: {msg}"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::NonconvergenceAfterMaxIters { iterations, gap_bits } => write!(
                f,
                "no convergence after {iterations} iterations (gap {gap_bits} bits)"
            ),
            Error::PartitionNotFound => write!(f, "no block partition matches the solver value"),
            Error::NotPerfect => write!(f, "graph is not perfect"),
            Error::NotKGraph { .. } => write!(f, "graph is not a k-graph"),
            Error::KBelowThree(k) => write!(f, "k-graph certificate needs k >= 3, got {k}"),
            Error::NotCubic => write!(f, "graph is not cubic"),
            Error::HasBridge(u, v) => write!(f, "graph has a bridge {{{u},{v}}}"),
        }
    }
}

impl core::error::Error for Error {}

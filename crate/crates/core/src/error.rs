use crate::rational::Rational;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex {0} is isolated; a neighborhood measure with idleness < 1 needs neighbors")]
    IsolatedVertex(usize),

    #[error("vertices {u} and {v} lie in different components")]
    Disconnected { u: usize, v: usize },

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("curvature of a pair requires two distinct vertices, got {0} twice")]
    EqualPair(usize),

    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },

    #[error("idleness {0} is outside [0, 1]")]
    IdlenessOutOfRange(Rational),

    #[error("measure is not a probability measure: total mass {0}")]
    BadTotalMass(Rational),

    #[error("negative mass {mass} at vertex {vertex}")]
    NegativeMass { vertex: usize, mass: Rational },

    #[error("transport plan marginals do not match the given measures")]
    MarginalMismatch,

    #[error("edge ({u}, {v}) has endpoint degrees {d_u} and {d_v}; equal degrees required")]
    UnequalDegrees {
        u: usize,
        v: usize,
        d_u: usize,
        d_v: usize,
    },

    #[error(
        "curvature ratio of edge ({u}, {v}) is not linear near idleness 1: \
         {ratio_a} at idleness {rho_a} vs {ratio_b} at idleness {rho_b}"
    )]
    LinearityViolation {
        u: usize,
        v: usize,
        rho_a: Rational,
        ratio_a: Rational,
        rho_b: Rational,
        ratio_b: Rational,
    },

    #[error("cut certificate is not a valid edge cut: {0}")]
    InvalidCertificate(String),

    #[error("graph is not bipartite with the given parts")]
    NotBipartite,

    #[error("graph is a star; the edge-star bound does not apply")]
    StarGraph,

    #[error("graph has an isolated vertex")]
    HasIsolated,

    #[error("graph has no edges")]
    NoEdges,

    #[error("the cut graph is not a star")]
    NotAStarCut,

    #[error("{what} exceeds the budget ({limit})")]
    BudgetExceeded { what: String, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

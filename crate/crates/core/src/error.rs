use thiserror::Error;

use crate::structure::ConfigKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: malformed token `{token}`")]
    MalformedToken { line: usize, token: String },

    #[error("line {line}: vertex {vertex} is outside the declared vertex count {n}")]
    UndeclaredVertex { line: usize, vertex: usize, n: usize },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    #[error("graph has {n} vertices, above the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("vertex {vertex} has degree {degree}; signatures need degree at least 3")]
    DegreeTooSmall { vertex: usize, degree: usize },

    #[error("sponsorship unavailable: graph contains a {0} configuration")]
    SponsorshipBlocked(ConfigKind),

    #[error("declared maximum degree {declared} is below the graph's maximum degree {actual}")]
    DeclaredDegreeTooSmall { declared: usize, actual: usize },

    #[error("vertex {vertex} has color {color} outside the palette 0..{k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },

    #[error("coloring covers {got} vertices, graph has {n}")]
    ColoringSizeMismatch { got: usize, n: usize },

    #[error("vertex {0} is uncolored")]
    Uncolored(usize),

    #[error("order is not a permutation of the vertex set")]
    InvalidOrder,

    #[error("exact search exceeded its budget of {budget} nodes (bounds {lower}..={upper})")]
    BudgetExceeded { budget: u64, lower: usize, upper: usize },

    #[error("invalid list instance: {0}")]
    InvalidListInstance(String),

    #[error("irreducible graph: {0}")]
    Irreducible(String),

    #[error(
        "extension of {kind} failed at step {step} (vertex {vertex}): {observed} colors available, \
         bound is {bound}"
    )]
    ExtensionFailed {
        kind: ConfigKind,
        step: usize,
        vertex: usize,
        observed: usize,
        bound: usize,
    },

    #[error("extension produced an invalid coloring: {0}")]
    InvalidExtension(String),

    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),

    #[error("random_sparse rejected {attempts} candidates; try a looser mad cap, smaller delta or larger n")]
    RejectionLimit { attempts: usize },

    #[error("construction check failed: {0}")]
    UnconfirmedConstruction(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("edge `{0}` has weight {1}, weights must be >= 1")]
    InvalidWeight(String, u32),

    #[error("a weighted graph must have at least one vertex")]
    EmptyGraph,

    #[error("special edge `{edge}` at `{vertex}` does not have maximal weight at its source")]
    SpecialNotMaximal { vertex: String, edge: String },

    #[error("special edge `{edge}` is not emitted by vertex `{vertex}`")]
    SpecialWrongSource { vertex: String, edge: String },

    #[error("vertex set {{{0}}} is not hereditary")]
    NotHereditary(String),

    #[error("path is not a cycle: {0}")]
    NotACycle(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("operation requires a nontrivial word")]
    TrivialWord,

    #[error("word contains a ghost letter where a real path is required")]
    GhostLetter,

    #[error("word is not a nod-path: {0}")]
    NotNod(String),

    #[error("graph is not locally finite; the rewriting pipeline only applies to locally finite inputs")]
    NotLocallyFinite,

    #[error("graph has no weighted vertex")]
    NoWeightedVertex,

    #[error("structural precondition violated: {0}")]
    StructuralPrecondition(String),

    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    #[error("P' enumeration diverges: the quasicycle-free letter digraph contains a cycle (GK dimension >= 2)")]
    PrimedSetDiverges,

    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

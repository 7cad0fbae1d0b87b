use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("empty input: no vertices and no edges")]
    EmptyInput,

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("vertex set belongs to a different graph")]
    ForeignSet,

    #[error("the two sides of the bipartition overlap")]
    OverlappingSides,

    /// The set is not a member of Ψ(G). `local_alpha` is α(G[N[S]]) when the
    /// set is independent and `None` when it is not.
    #[error("{set} is not a local maximum independent set ({})", describe_local(*size, *local_alpha))]
    NotLocalMax {
        set: String,
        size: usize,
        local_alpha: Option<usize>,
    },

    /// A post-condition that holds for every graph failed. Always a bug.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("set family is empty")]
    FamilyEmpty,

    #[error("graph has {n} vertices, above the enumeration guardrail of {limit} (use --force)")]
    GuardrailExceeded { n: usize, limit: usize },
}

fn describe_local(size: usize, local_alpha: Option<usize>) -> String {
    match local_alpha {
        Some(a) => format!("|S| = {size} but alpha(G[N[S]]) = {a}"),
        None => "the set is not independent".to_string(),
    }
}

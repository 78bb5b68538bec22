use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} is already present")]
    EdgeExists(usize, usize),

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("graph has no vertices")]
    Empty,

    #[error("graph is disconnected; eccentricity is undefined")]
    Disconnected,

    #[error("not a tree: order {n} with {m} edges")]
    NotATree { n: usize, m: usize },

    #[error("order {n} out of range: {constraint}")]
    OrderOutOfRange { n: usize, constraint: String },

    #[error("invalid parameters for family `{family}`: {constraint}")]
    InvalidFamily {
        family: &'static str,
        constraint: String,
    },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("tree has no perfect matching")]
    NoPerfectMatching,

    #[error("matching is not perfect on the given graph")]
    MatchingNotPerfect,

    #[error("vertices {u} and {v} are not a diametrical pair")]
    NotDiametrical { u: usize, v: usize },

    #[error("vertex {vertex} is not central (eccentricity {ecc}, radius {rad})")]
    NotCentral { vertex: usize, ecc: u32, rad: u32 },

    #[error("rewrite invariant violated: {0}")]
    RewriteInvariant(String),
}
